#pragma once

namespace cmv::oracles {

// Independent cross-checks used by the test suites and the selftest command.
// Deliberately self-contained: nothing here goes through the local product
// formula, the splitting machinery, or the beta1 evaluator it checks.

/// Number of integral O_K-ideals of norm m, K = Q(sqrt(delta)) imaginary
/// quadratic with delta = 1 mod 4, by direct enumeration of the (a, b)
/// parametrization of primitive ideals.
long long count_ideals_of_norm(long long delta, long long m);

/// Class number of Q(sqrt(delta)) by listing all integral ideals of norm up
/// to the Minkowski bound and partitioning them with an explicit ideal
/// equivalence test (principality of I * conj(J) via norm-form point search).
long long class_number_by_ideals(long long delta);

/// Adaptive-quadrature evaluation of integral_1^infty e^{-tu} du/u.
double beta1_quadrature(double t);

} // namespace cmv::oracles
