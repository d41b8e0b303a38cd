#pragma once

#include <vector>

#include "cmv/cm_fields.hpp"
#include "cmv/rational.hpp"

namespace cmv {

/// Local data at a nonsplit prime of F: its splitting type in K and the
/// ramification index e_tilde of the corresponding prime of the normal
/// closure over F.
struct LocalContext {
    PrimeOfF P;
    SplittingType st = SplittingType::Inert;
    int e_tilde = 1;
};

/// e_tilde is 2 exactly when P or its F-conjugate is ramified in K.
/// Throws std::domain_error on split P.
LocalContext make_local_context(const FieldTower& tower, const PrimeOfF& P);

/// Exponent shifting the ideal inside rho: 1 at inert P, 0 at ramified P.
/// Throws std::domain_error on Split (no divisor points over split primes).
int epsilon_P(SplittingType st);

/// (1/2) * e_tilde * (a + 1), the length of the etale local ring at a
/// divisor point with ord_P(alpha) = a.
Rational deformation_length(const LocalContext& ctx, long long a);

/// The largest k such that a homomorphism of norm alpha lifts modulo the
/// k-th power of the maximal ideal: (1/2) ord_{Ktilde}(alpha * P). Requires
/// a homomorphism of that norm to exist, i.e. rho_local(st, a - eps) != 0;
/// throws std::domain_error otherwise.
Rational lift_bound_k(const LocalContext& ctx, long long a);

/// Valuation profile of a generating homomorphism across the d unramified
/// embeddings: 1 exactly on the cyclic half-window (i, i + d/2]. d must be
/// even and positive, i in [0, d).
std::vector<int> order_profile(int d, int i);

} // namespace cmv
