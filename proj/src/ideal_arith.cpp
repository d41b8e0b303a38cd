#include "cmv/ideal_arith.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cmv/cm_fields.hpp"

namespace cmv {

using namespace detail;

ElementF make_element(const BaseField& F, long long a, long long b, long long den)
{
    if (den == 0) throw std::invalid_argument("element denominator must be nonzero");
    if (F.n == 1 && b != 0) throw std::invalid_argument("omega coordinate must vanish over Q");
    if (den < 0) {
        a = -a;
        b = -b;
        den = -den;
    }
    long long g = std::gcd(std::gcd(std::llabs(a), std::llabs(b)), den);
    if (g > 1) {
        a /= g;
        b /= g;
        den /= g;
    }
    return ElementF{a, b, den};
}

ElementF elem_mul(const BaseField& F, const ElementF& x, const ElementF& y)
{
    // (a1 + b1 w)(a2 + b2 w) with w^2 = wt*w - wn
    __int128 a = static_cast<__int128>(x.a) * y.a - static_cast<__int128>(F.wn) * x.b * y.b;
    __int128 b = static_cast<__int128>(x.a) * y.b + static_cast<__int128>(x.b) * y.a +
                 static_cast<__int128>(F.wt) * x.b * y.b;
    __int128 d = static_cast<__int128>(x.den) * y.den;
    constexpr __int128 lim = std::numeric_limits<long long>::max();
    if (a > lim || a < -lim || b > lim || b < -lim || d > lim)
        throw std::overflow_error("elem_mul: coordinate overflow");
    return make_element(F, static_cast<long long>(a), static_cast<long long>(b),
                        static_cast<long long>(d));
}

ElementF elem_conj(const BaseField& F, const ElementF& x)
{
    return make_element(F, x.a + F.wt * x.b, -x.b, x.den);
}

long long integral_norm(const BaseField& F, long long a, long long b)
{
    __int128 n = static_cast<__int128>(a) * a + static_cast<__int128>(a) * b * F.wt +
                 static_cast<__int128>(b) * b * F.wn;
    constexpr __int128 lim = std::numeric_limits<long long>::max();
    if (n > lim || n < -lim) throw std::overflow_error("integral_norm: overflow");
    return static_cast<long long>(n);
}

Rational elem_norm(const BaseField& F, const ElementF& x)
{
    return Rational(integral_norm(F, x.a, x.b), x.den * x.den);
}

int sign_at_place(const BaseField& F, const ElementF& x, int place)
{
    if (x.is_zero()) throw std::domain_error("sign_at_place: zero element");
    if (place < 0 || place >= F.n) throw std::invalid_argument("sign_at_place: bad place");
    if (F.n == 1) return x.a > 0 ? 1 : -1;

    // 2*den*x = s + u sqrt(disc) with s = 2a + b*wt, u = +-b
    long long s = 2 * x.a + x.b * F.wt;
    long long u = place == 0 ? x.b : -x.b;
    if (u == 0) return s > 0 ? 1 : -1;
    if (s == 0) return u > 0 ? 1 : -1;
    if (s > 0 && u > 0) return 1;
    if (s < 0 && u < 0) return -1;
    __int128 s2 = static_cast<__int128>(s) * s;
    __int128 u2D = static_cast<__int128>(u) * u * F.disc;
    if (s > 0) return s2 > u2D ? 1 : -1;   // u < 0
    return u2D > s2 ? 1 : -1;              // s < 0, u > 0
}

int negative_place_count(const BaseField& F, const ElementF& x)
{
    int c = 0;
    for (int v = 0; v < F.n; ++v)
        if (sign_at_place(F, x, v) < 0) ++c;
    return c;
}

double embed(const BaseField& F, const ElementF& x, int place)
{
    if (F.n == 1) return static_cast<double>(x.a) / static_cast<double>(x.den);
    double sq = std::sqrt(static_cast<double>(F.disc));
    double w = (static_cast<double>(F.wt) + (place == 0 ? sq : -sq)) / 2.0;
    return (static_cast<double>(x.a) + static_cast<double>(x.b) * w) / static_cast<double>(x.den);
}

std::string to_string(const ElementF& x)
{
    std::string s = std::to_string(x.a);
    if (x.b != 0) s += (x.b > 0 ? "+" : "") + std::to_string(x.b) + "w";
    if (x.den != 1) s = "(" + s + ")/" + std::to_string(x.den);
    return s;
}

long long IdealF::exponent_of(const PrimeOfF& P) const
{
    auto it = exponents.find(P);
    return it == exponents.end() ? 0 : it->second;
}

void IdealF::set_exponent(const PrimeOfF& P, long long e)
{
    if (e == 0)
        exponents.erase(P);
    else
        exponents[P] = e;
}

IdealF ideal_mul(const IdealF& I, const IdealF& J)
{
    IdealF R = I;
    for (const auto& [P, e] : J.exponents) R.set_exponent(P, R.exponent_of(P) + e);
    return R;
}

namespace {

constexpr int kInfiniteVal = 1 << 20;

int valp_or_inf(long long x, long long p)
{
    return x == 0 ? kInfiniteVal : valp(x, p);
}

// Valuation of the integral element (A, B) != 0 at P.
long long ord_integral(const BaseField& F, long long A, long long B, const PrimeOfF& P)
{
    long long p = P.p;
    if (F.n == 1) return valp(A, p);
    if (P.f == 2) return std::min(valp_or_inf(A, p), valp_or_inf(B, p));

    long long N = std::llabs(integral_norm(F, A, B));
    int V = valp(N, p);
    if (P.e == 2) return V;  // single prime above p, f = 1

    // split: embed through the lifted root and read off the p-adic valuation
    if (V == 0) return 0;
    int M = V + 1;
    long long c = lift_root(F, p, P.root, M);
    long long pM = pow_checked(p, M);
    long long e = mod_ll(static_cast<long long>(
                             ((static_cast<__int128>(A) + static_cast<__int128>(B) * c) % pM + pM) % pM),
                         pM);
    if (e == 0) throw std::logic_error("ord_integral: embedding vanished beyond norm bound");
    return valp(e, p);
}

} // namespace

long long ord_P(const BaseField& F, const ElementF& x, const PrimeOfF& P)
{
    if (x.is_zero()) throw std::domain_error("ord_P: zero element");
    long long num = ord_integral(F, x.a, x.b, P);
    long long den = x.den == 1 ? 0 : static_cast<long long>(P.e) * valp(x.den, P.p);
    return num - den;
}

IdealF principal_ideal(const BaseField& F, const ElementF& x)
{
    if (x.is_zero()) throw std::domain_error("principal_ideal: zero element");
    std::set<long long> ps;
    long long N = std::llabs(integral_norm(F, x.a, x.b));
    for (auto [p, e] : factorize(N)) ps.insert(p);
    if (x.den > 1)
        for (auto [p, e] : factorize(x.den)) ps.insert(p);

    IdealF I;
    for (long long p : ps)
        for (const PrimeOfF& P : factor_rational_prime(F, p))
            I.set_exponent(P, ord_P(F, x, P));
    return I;
}

long long rho_local(SplittingType st, long long a)
{
    if (a < 0) return 0;
    switch (st) {
        case SplittingType::Split: return a + 1;
        case SplittingType::Inert: return a % 2 == 0 ? 1 : 0;
        case SplittingType::RamifiedInK: return 1;
    }
    return 0;
}

long long rho(const FieldTower& tower, const IdealF& I)
{
    long long r = 1;
    for (const auto& [P, e] : I.exponents) {
        r *= rho_local(splitting_in_K(tower, P), e);
        if (r == 0) return 0;
    }
    return r;
}

Rational ideal_norm(const IdealF& I)
{
    Rational r(1);
    for (const auto& [P, e] : I.exponents) {
        long long np = P.norm();
        if (e > 0)
            r *= Rational(pow_checked(np, static_cast<int>(e)), 1);
        else
            r *= Rational(1, pow_checked(np, static_cast<int>(-e)));
    }
    return r;
}

} // namespace cmv
