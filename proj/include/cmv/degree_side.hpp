#pragma once

#include <vector>

#include "cmv/cm_fields.hpp"
#include "cmv/local_deformation.hpp"

namespace cmv {

enum class CaseTag { TotallyPositive, OneNegativePlace, Zero };

const char* to_string(CaseTag tag);

struct DegreePerPrime {
    PrimeOfF P;
    long long ord_a = 0;
    long long rho_shifted = 0;
    Rational length;     // meaningful when ord_a >= 0
    double term = 0.0;
};

struct DegreeBreakdown {
    double total = 0.0;
    double green_term = 0.0;
    CaseTag tag = CaseTag::Zero;
    std::vector<DegreePerPrime> per_prime;
};

/// Stacky point count over the residue field at a nonsplit P:
/// (ck/w) * rho(alpha * P^{-eps_P}), exact. alpha must be totally positive.
Rational point_count(const FieldTower& tower, const ElementF& alpha, const PrimeOfF& P);

/// Finite part of the degree: sum over nonsplit primes dividing (alpha)
/// together with all finite ramified primes of
/// (ck/w) * (log N(P) / [K:Q]) * (ord_P(alpha)+1) * rho(alpha * P^{-eps_P}).
/// alpha must be totally positive.
DegreeBreakdown finite_degree(const FieldTower& tower, const ElementF& alpha);

/// Archimedean contribution (ck/w) * rho((alpha))/[K:Q] * beta1(4pi|y alpha|_v)
/// at the unique negative place v. y has one entry per archimedean place.
double green_contribution(const FieldTower& tower, const ElementF& alpha,
                          const std::vector<double>& y);

/// Full arithmetic degree: finite part for totally positive alpha, Green
/// term when alpha is negative at exactly one place, 0 otherwise.
DegreeBreakdown arithmetic_degree(const FieldTower& tower, const ElementF& alpha,
                                  const std::vector<double>& y);

/// Broadcasts a scalar y to one value per archimedean place; validates size.
std::vector<double> normalize_y(const FieldTower& tower, const std::vector<double>& y);

} // namespace cmv
