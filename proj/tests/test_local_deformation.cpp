#include <doctest.h>

#include "cmv/local_deformation.hpp"

using namespace cmv;

namespace {

FieldTower imquad(long long delta)
{
    TowerConfig cfg;
    cfg.delta_a = delta;
    return build_tower(cfg);
}

LocalContext ctx(SplittingType st, int e_tilde)
{
    return LocalContext{PrimeOfF{3, 1, 1, -1}, st, e_tilde};
}

// The valuation recurrence ord[r+1] = ord[r] + [r == i] - [r == j], iterated
// around the cycle and shifted so a generator has minimum 0.
std::vector<int> profile_by_recurrence(int d, int i)
{
    int j = (i + d / 2) % d;
    std::vector<int> v(d, 0);
    for (int r = 0; r + 1 < d; ++r) v[r + 1] = v[r] + (r == i ? 1 : 0) - (r == j ? 1 : 0);
    int mn = v[0];
    for (int x : v) mn = std::min(mn, x);
    for (int& x : v) x -= mn;
    return v;
}

} // namespace

TEST_CASE("epsilon_P")
{
    CHECK(epsilon_P(SplittingType::Inert) == 1);
    CHECK(epsilon_P(SplittingType::RamifiedInK) == 0);
    CHECK_THROWS_AS(epsilon_P(SplittingType::Split), std::domain_error);
}

TEST_CASE("deformation_length")
{
    CHECK(deformation_length(ctx(SplittingType::Inert, 1), 1) == Rational(1));
    CHECK(deformation_length(ctx(SplittingType::RamifiedInK, 2), 0) == Rational(1));
    CHECK(deformation_length(ctx(SplittingType::Inert, 1), 4) == Rational(5, 2));
}

TEST_CASE("lift_bound_k")
{
    CHECK(lift_bound_k(ctx(SplittingType::Inert, 1), 1) == Rational(1));
    CHECK(lift_bound_k(ctx(SplittingType::RamifiedInK, 1), 0) == Rational(1, 2));
    CHECK(lift_bound_k(ctx(SplittingType::Inert, 2), 3) == Rational(4));
    // no homomorphism of even inert norm exists
    CHECK_THROWS_AS(lift_bound_k(ctx(SplittingType::Inert, 1), 2), std::domain_error);
    CHECK_THROWS_AS(lift_bound_k(ctx(SplittingType::Inert, 1), -1), std::domain_error);
}

TEST_CASE("lift bound equals deformation length where both are defined")
{
    for (SplittingType st : {SplittingType::Inert, SplittingType::RamifiedInK})
        for (int e : {1, 2})
            for (long long a = 0; a <= 50; ++a) {
                if (rho_local(st, a - epsilon_P(st)) == 0) continue;
                CHECK(lift_bound_k(ctx(st, e), a) == deformation_length(ctx(st, e), a));
            }
}

TEST_CASE("contributing lengths are positive integers")
{
    // geometric pairs: inert primes have e_tilde 1 or 2, ramified always 2
    for (auto [st, e] : {std::pair{SplittingType::Inert, 1}, {SplittingType::Inert, 2},
                         {SplittingType::RamifiedInK, 2}})
        for (long long a = 0; a <= 50; ++a) {
            if (rho_local(st, a - epsilon_P(st)) == 0) continue;
            Rational len = deformation_length(ctx(st, e), a);
            CAPTURE(static_cast<int>(st));
            CAPTURE(e);
            CAPTURE(a);
            CHECK(len.denominator() == 1);
            CHECK(len.numerator() >= 1);
        }
}

TEST_CASE("order_profile")
{
    CHECK(order_profile(4, 0) == std::vector<int>{0, 1, 1, 0});
    CHECK(order_profile(2, 0) == std::vector<int>{0, 1});
    CHECK(order_profile(6, 4) == std::vector<int>{1, 1, 0, 0, 0, 1});
    CHECK_THROWS_AS(order_profile(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(order_profile(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(order_profile(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(order_profile(4, -1), std::invalid_argument);
}

TEST_CASE("order_profile matches the recurrence and the antipodal identity")
{
    for (int d = 2; d <= 20; d += 2)
        for (int i = 0; i < d; ++i) {
            std::vector<int> prof = order_profile(d, i);
            CHECK(prof == profile_by_recurrence(d, i));
            for (int r = 0; r < d; ++r) CHECK(prof[r] + prof[(r + d / 2) % d] == 1);
        }
}

TEST_CASE("make_local_context")
{
    FieldTower t7 = imquad(-7);
    LocalContext inert = make_local_context(t7, factor_rational_prime(t7, 3)[0]);
    CHECK(inert.st == SplittingType::Inert);
    CHECK(inert.e_tilde == 1);
    LocalContext ram = make_local_context(t7, factor_rational_prime(t7, 7)[0]);
    CHECK(ram.st == SplittingType::RamifiedInK);
    CHECK(ram.e_tilde == 2);
    CHECK_THROWS_AS(make_local_context(t7, factor_rational_prime(t7, 2)[0]), std::domain_error);

    // quartic: delta = -7-4w generates the root-44 prime above 61; the
    // root-18 partner is inert, and the closure ramifies over it
    TowerConfig cfg;
    cfg.base_disc = 5;
    cfg.delta_a = -7;
    cfg.delta_b = -4;
    cfg.h = 1;
    cfg.ck = 1;
    FieldTower q = build_tower(cfg);
    auto over61 = factor_rational_prime(q, 61);
    REQUIRE(over61.size() == 2);
    for (const PrimeOfF& P : over61) {
        if (splitting_in_K(q, P) == SplittingType::RamifiedInK) {
            CHECK(P.root == 44);
            CHECK(make_local_context(q, P).e_tilde == 2);
        } else {
            CHECK(P.root == 18);
            CHECK(splitting_in_K(q, P) == SplittingType::Inert);
            CHECK(make_local_context(q, P).e_tilde == 2);  // ramified partner
        }
    }
    // an inert prime with no ramified conjugate keeps e_tilde = 1
    LocalContext q7 = make_local_context(q, factor_rational_prime(q, 7)[0]);
    CHECK(q7.st == SplittingType::Inert);
    CHECK(q7.e_tilde == 1);
}
