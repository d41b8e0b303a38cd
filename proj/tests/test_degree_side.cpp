#include <doctest.h>

#include <cmath>

#include "cmv/degree_side.hpp"
#include "cmv/eisenstein_side.hpp"

using namespace cmv;

namespace {

FieldTower imquad(long long delta)
{
    TowerConfig cfg;
    cfg.delta_a = delta;
    return build_tower(cfg);
}

FieldTower quartic57()
{
    TowerConfig cfg;
    cfg.base_disc = 5;
    cfg.delta_a = -7;
    cfg.h = 1;
    cfg.ck = 1;
    return build_tower(cfg);
}

const std::vector<double> kY1{1.0};

} // namespace

TEST_CASE("point_count")
{
    FieldTower t = imquad(-7);
    auto P3 = factor_rational_prime(t, 3)[0];
    auto P7 = factor_rational_prime(t, 7)[0];
    CHECK(point_count(t, make_element(t.F, 3), P3) == Rational(1, 2));
    CHECK(point_count(t, make_element(t.F, 1), P3) == Rational(0));
    CHECK(point_count(t, make_element(t.F, 7), P7) == Rational(1, 2));
    CHECK_THROWS_AS(point_count(t, make_element(t.F, 3), factor_rational_prime(t, 2)[0]),
                    std::domain_error);
    CHECK_THROWS_AS(point_count(t, make_element(t.F, -3), P3), std::domain_error);
}

TEST_CASE("finite_degree worked values on Q(sqrt(-7))")
{
    FieldTower t = imquad(-7);
    CHECK(finite_degree(t, make_element(t.F, 3)).total ==
          doctest::Approx(std::log(3.0) / 2).epsilon(1e-14));
    // ramified primes with ord 0 contribute through the epsilon shift
    CHECK(finite_degree(t, make_element(t.F, 1)).total ==
          doctest::Approx(std::log(7.0) / 4).epsilon(1e-14));
    CHECK(finite_degree(t, make_element(t.F, 2)).total ==
          doctest::Approx(std::log(7.0) / 2).epsilon(1e-14));
    CHECK(finite_degree(t, make_element(t.F, 21)).total ==
          doctest::Approx(std::log(3.0) / 2).epsilon(1e-14));

    DegreeBreakdown b = finite_degree(t, make_element(t.F, 3));
    CHECK(b.tag == CaseTag::TotallyPositive);
    CHECK(b.green_term == 0.0);
    REQUIRE(b.per_prime.size() == 2);  // the inert 3 and the ramified 7
    CHECK(b.per_prime[0].P.p == 3);
    CHECK(b.per_prime[0].rho_shifted == 1);
    CHECK(b.per_prime[0].length == Rational(1));
    CHECK(b.per_prime[1].P.p == 7);
    CHECK(b.per_prime[1].rho_shifted == 0);
    CHECK(b.per_prime[1].term == 0.0);

    CHECK_THROWS_AS(finite_degree(t, make_element(t.F, -2)), std::domain_error);
}

TEST_CASE("green_contribution")
{
    FieldTower t = imquad(-7);
    CHECK(green_contribution(t, make_element(t.F, -3), kY1) == 0.0);  // rho((3)) = 0
    CHECK(green_contribution(t, make_element(t.F, -2), kY1) ==
          doctest::Approx(0.5 * 2.0 / 2.0 * beta1(8 * M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(green_contribution(t, make_element(t.F, 3), kY1), std::domain_error);

    FieldTower q = quartic57();
    // -1 is totally negative over a real quadratic field: two negative places
    CHECK_THROWS_AS(green_contribution(q, make_element(q.F, -1), kY1), std::domain_error);
    // omega is negative at exactly the second place
    double g = green_contribution(q, make_element(q.F, 0, 1), kY1);
    double expected = 0.5 * 1.0 / 4.0 * beta1(4 * M_PI * 0.6180339887498949);
    CHECK(g == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("arithmetic_degree dispatch")
{
    FieldTower t = imquad(-7);
    CHECK(arithmetic_degree(t, make_element(t.F, 3), kY1).tag == CaseTag::TotallyPositive);
    DegreeBreakdown neg = arithmetic_degree(t, make_element(t.F, -2), kY1);
    CHECK(neg.tag == CaseTag::OneNegativePlace);
    CHECK(neg.total == neg.green_term);
    CHECK_THROWS_AS(arithmetic_degree(t, ElementF{}, kY1), std::domain_error);

    FieldTower q = quartic57();
    DegreeBreakdown zero = arithmetic_degree(q, make_element(q.F, -1), kY1);
    CHECK(zero.tag == CaseTag::Zero);
    CHECK(zero.total == 0.0);
}

TEST_CASE("degree is invariant under unit-square scaling")
{
    FieldTower q = quartic57();
    ElementF u2 = make_element(q.F, 1, 1);  // omega^2, the fundamental unit squared
    for (long long a = 1; a <= 12; ++a) {
        ElementF alpha = make_element(q.F, a);
        ElementF scaled = elem_mul(q.F, alpha, u2);
        CAPTURE(a);
        CHECK(finite_degree(q, alpha).total ==
              doctest::Approx(finite_degree(q, scaled).total).epsilon(1e-12));
    }
}

TEST_CASE("per-prime terms are nonnegative")
{
    for (FieldTower t : {imquad(-7), imquad(-23)})
        for (long long a = 1; a <= 40; ++a) {
            DegreeBreakdown b = finite_degree(t, make_element(t.F, a));
            double sum = 0;
            for (const auto& row : b.per_prime) {
                CHECK(row.term >= 0.0);
                sum += row.term;
            }
            CHECK(b.total == doctest::Approx(sum).epsilon(1e-14));
            CHECK(b.total >= 0.0);
        }
}

TEST_CASE("terms recompute through point_count and deformation_length")
{
    for (FieldTower t : {imquad(-7), imquad(-23), quartic57()})
        for (long long a = 1; a <= 25; ++a) {
            ElementF alpha = make_element(t.F, a);
            DegreeBreakdown b = finite_degree(t, alpha);
            for (const auto& row : b.per_prime) {
                LocalContext ctx = make_local_context(t, row.P);
                double via_points = to_double(point_count(t, alpha, row.P)) *
                                    to_double(deformation_length(ctx, row.ord_a)) *
                                    (2.0 / ctx.e_tilde) *
                                    std::log(static_cast<double>(row.P.norm())) /
                                    (2.0 * t.F.n);
                CAPTURE(a);
                CAPTURE(row.P.p);
                CHECK(row.term == doctest::Approx(via_points).epsilon(1e-12));
            }
        }
}
