#include "cmv/degree_side.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "cmv/eisenstein_side.hpp"

namespace cmv {

const char* to_string(CaseTag tag)
{
    switch (tag) {
        case CaseTag::TotallyPositive: return "totally_positive";
        case CaseTag::OneNegativePlace: return "one_negative_place";
        case CaseTag::Zero: return "zero";
    }
    return "?";
}

std::vector<double> normalize_y(const FieldTower& tower, const std::vector<double>& y)
{
    size_t n = static_cast<size_t>(tower.F.n);
    std::vector<double> out;
    if (y.size() == 1)
        out.assign(n, y[0]);
    else if (y.size() == n)
        out = y;
    else
        throw std::invalid_argument("y must be a scalar or one value per archimedean place");
    for (double v : out)
        if (!(v > 0)) throw std::invalid_argument("y must be positive");
    return out;
}

namespace {

// Nonsplit primes dividing (alpha) together with every finite ramified
// prime; the epsilon shift makes ramified primes with ord 0 contribute.
std::vector<PrimeOfF> contributing_primes(const FieldTower& tower, const IdealF& alpha_ideal)
{
    std::set<PrimeOfF> s;
    for (const auto& [P, e] : alpha_ideal.exponents)
        if (splitting_in_K(tower, P) != SplittingType::Split) s.insert(P);
    for (const PrimeOfF& P : tower.finite_ramified) s.insert(P);
    return {s.begin(), s.end()};
}

long long rho_shifted_at(const FieldTower& tower, const IdealF& alpha_ideal, const PrimeOfF& P,
                         int eps)
{
    IdealF shifted = alpha_ideal;
    shifted.set_exponent(P, shifted.exponent_of(P) - eps);
    return rho(tower, shifted);
}

} // namespace

Rational point_count(const FieldTower& tower, const ElementF& alpha, const PrimeOfF& P)
{
    if (alpha.is_zero() || negative_place_count(tower.F, alpha) != 0)
        throw std::domain_error("point_count: alpha must be totally positive");
    SplittingType st = splitting_in_K(tower, P);
    if (st == SplittingType::Split)
        throw std::domain_error("point_count: split prime carries no divisor points");
    IdealF I = principal_ideal(tower.F, alpha);
    long long rs = rho_shifted_at(tower, I, P, epsilon_P(st));
    return Rational(tower.cls.ck * rs, tower.w);
}

DegreeBreakdown finite_degree(const FieldTower& tower, const ElementF& alpha)
{
    if (alpha.is_zero() || negative_place_count(tower.F, alpha) != 0)
        throw std::domain_error("finite_degree: alpha must be totally positive");

    DegreeBreakdown out;
    out.tag = CaseTag::TotallyPositive;
    IdealF I = principal_ideal(tower.F, alpha);
    double ckw = static_cast<double>(tower.cls.ck) / tower.w;
    double deg_K = 2.0 * tower.F.n;

    for (const PrimeOfF& P : contributing_primes(tower, I)) {
        SplittingType st = splitting_in_K(tower, P);
        long long a = I.exponent_of(P);
        long long rs = rho_shifted_at(tower, I, P, epsilon_P(st));
        DegreePerPrime row;
        row.P = P;
        row.ord_a = a;
        row.rho_shifted = rs;
        row.length = a >= 0 ? deformation_length(make_local_context(tower, P), a) : Rational(0);
        row.term = rs == 0 ? 0.0
                           : ckw * (std::log(static_cast<double>(P.norm())) / deg_K) *
                                 static_cast<double>(a + 1) * static_cast<double>(rs);
        out.total += row.term;
        out.per_prime.push_back(row);
    }
    return out;
}

double green_contribution(const FieldTower& tower, const ElementF& alpha,
                          const std::vector<double>& y)
{
    std::vector<double> yy = normalize_y(tower, y);
    int neg = negative_place_count(tower.F, alpha);
    if (alpha.is_zero() || neg != 1)
        throw std::domain_error("green_contribution: alpha must be negative at exactly one place");
    int v = 0;
    while (sign_at_place(tower.F, alpha, v) > 0) ++v;

    long long rho_a = rho(tower, principal_ideal(tower.F, alpha));
    if (rho_a == 0) return 0.0;
    double t = 4.0 * M_PI * yy[v] * std::fabs(embed(tower.F, alpha, v));
    double ckw = static_cast<double>(tower.cls.ck) / tower.w;
    return ckw * static_cast<double>(rho_a) / (2.0 * tower.F.n) * beta1(t);
}

DegreeBreakdown arithmetic_degree(const FieldTower& tower, const ElementF& alpha,
                                  const std::vector<double>& y)
{
    if (alpha.is_zero())
        throw std::domain_error("arithmetic_degree: alpha must be nonzero");
    int neg = negative_place_count(tower.F, alpha);
    if (neg == 0) return finite_degree(tower, alpha);

    DegreeBreakdown out;
    if (neg == 1) {
        out.tag = CaseTag::OneNegativePlace;
        out.green_term = green_contribution(tower, alpha, y);
        out.total = out.green_term;
    } else {
        out.tag = CaseTag::Zero;
    }
    return out;
}

} // namespace cmv
