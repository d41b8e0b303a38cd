#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmv/cm_fields.hpp"

namespace cmv {

/// beta1(t) = integral_1^infty e^{-tu} du/u, the exponential integral E1.
/// Series for t <= 1, continued fraction for t > 1; t <= 0 is rejected.
double beta1(double t);

/// e^t * beta1(t), safe from underflow in product assembly.
double beta1_scaled(double t);

/// An incoherent class: a sign at every finite ramified prime, with product
/// -1 (archimedean components 1, unramified finite components +1).
struct IncoherentClass {
    std::map<PrimeOfF, int> signs;

    int sign_at(const PrimeOfF& P) const;
    std::string label() const;  // "-,+" in finite_ramified order

    friend bool operator==(const IncoherentClass&, const IncoherentClass&) = default;
};

/// All 2^{(r - n) - 1} incoherent classes, in a fixed deterministic order.
std::vector<IncoherentClass> enumerate_Xi(const FieldTower& tower);

struct DiffSet {
    std::vector<PrimeOfF> finite;
    std::vector<int> arch;  // archimedean place indices

    int size() const { return static_cast<int>(finite.size() + arch.size()); }
};

/// The local character chi_P(x) in {+1,-1} for x != 0: trivial at split P,
/// (-1)^{ord_P(x)} at inert P, and the residue symbol of the unit part
/// (with delta as uniformizer) at ramified P.
int chi_local(const FieldTower& tower, const PrimeOfF& P, const ElementF& x);

/// Diff(alpha, c) = places v with chi_v(alpha c) = -1; always of odd size.
DiffSet diff_set(const FieldTower& tower, const ElementF& alpha, const IncoherentClass& c);

/// Normalized local Whittaker data at s = 0, stripped of the local prefactor
/// chi_v(-1) eps(1/2, chi_v, c_v psi_v) and, at archimedean places, of
/// y^{1/2} e^{2 pi i alpha tau} (q-normalization).
struct WhittakerEval {
    double value0 = 0.0;
    double deriv0 = 0.0;
};

WhittakerEval whittaker_finite(const FieldTower& tower, const PrimeOfF& P,
                               const ElementF& alpha, const IncoherentClass& c);
WhittakerEval whittaker_arch(double alpha_v, double y_v);

/// q-normalized coefficient derivative at s = 0 for one class: 0 unless
/// |Diff| = 1, else (-1) * deriv0 at the Diff place * prod of value0 elsewhere.
double coeff_derivative_for_class(const FieldTower& tower, const ElementF& alpha,
                                  const std::vector<double>& y, const IncoherentClass& c);

/// Sum of coeff_derivative_for_class over the incoherent classes.
double b_phi(const FieldTower& tower, const ElementF& alpha, const std::vector<double>& y);

/// Same quantity by the closed formula:
///   -(2^{r-1}/sqrt(N d)) * sum (ord+1) rho(alpha P^{-eps}) log N(P)   (alpha >> 0)
///   -(2^{r-1}/sqrt(N d)) * rho((alpha)) * beta1(4pi|y alpha|_v)      (one neg place)
///   0 otherwise.
double b_phi_closed(const FieldTower& tower, const ElementF& alpha, const std::vector<double>& y);

/// q-normalized coefficient value at s = 0; always exactly 0 (the product
/// carries an exact zero factor at every Diff place).
double value_at_zero(const FieldTower& tower, const ElementF& alpha,
                     const std::vector<double>& y, const IncoherentClass& c);

} // namespace cmv
