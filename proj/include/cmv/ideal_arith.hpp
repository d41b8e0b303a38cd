#pragma once

#include <map>

#include "cmv/base_field.hpp"
#include "cmv/rational.hpp"

namespace cmv {

struct FieldTower; // cm_fields.hpp

/// Element (a + b*omega)/den of F. den > 0, gcd(a, b, den) = 1, and b = 0
/// when F = Q. Valuations and signs are exact; only the archimedean
/// absolute values go through floating point.
struct ElementF {
    long long a = 0;
    long long b = 0;
    long long den = 1;

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const ElementF&, const ElementF&) = default;
};

ElementF make_element(const BaseField& F, long long a, long long b = 0, long long den = 1);
ElementF elem_mul(const BaseField& F, const ElementF& x, const ElementF& y);
ElementF elem_conj(const BaseField& F, const ElementF& x);
Rational elem_norm(const BaseField& F, const ElementF& x);

/// Norm of the integral element a + b*omega, as a checked long long.
long long integral_norm(const BaseField& F, long long a, long long b);

/// Exact sign (+1/-1) of x under the real embedding `place` (0-based;
/// place 0 sends omega to (wt + sqrt(disc))/2). x must be nonzero.
int sign_at_place(const BaseField& F, const ElementF& x, int place);
int negative_place_count(const BaseField& F, const ElementF& x);
double embed(const BaseField& F, const ElementF& x, int place);

std::string to_string(const ElementF& x);

/// Fractional ideal of O_F as a finite prime -> exponent map.
/// No zero exponents are stored; the unit ideal is the empty map.
struct IdealF {
    std::map<PrimeOfF, long long> exponents;

    bool is_unit() const { return exponents.empty(); }
    long long exponent_of(const PrimeOfF& P) const;
    void set_exponent(const PrimeOfF& P, long long e);

    friend bool operator==(const IdealF&, const IdealF&) = default;
};

IdealF ideal_mul(const IdealF& I, const IdealF& J);
inline IdealF operator*(const IdealF& I, const IdealF& J) { return ideal_mul(I, J); }

/// P-adic valuation of the principal fractional ideal (x). x != 0.
long long ord_P(const BaseField& F, const ElementF& x, const PrimeOfF& P);

/// The exponent map {P : ord_P(x)} of the principal ideal (x). x != 0.
IdealF principal_ideal(const BaseField& F, const ElementF& x);

/// Local factor of the ideal counting function at a prime with the given
/// splitting behavior, evaluated at exponent a. Negative a gives 0.
long long rho_local(SplittingType st, long long a);

/// Number of fractional O_K-ideals with relative norm I; the product of
/// the local factors over the support of I.
long long rho(const FieldTower& tower, const IdealF& I);

/// prod N(P)^{e_P}, rational when exponents are negative.
Rational ideal_norm(const IdealF& I);

} // namespace cmv
