#include "cmv/eisenstein_side.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "cmv/degree_side.hpp"
#include "cmv/local_deformation.hpp"

namespace cmv {

using namespace detail;

namespace {

// E1 by power series, valid for small t.
double e1_series(double t)
{
    constexpr double euler_gamma = 0.57721566490153286060651209;
    double sum = 0.0, term = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -t / k;
        double add = -term / k;
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return -euler_gamma - std::log(t) + sum;
}

// e^t * E1(t) by the Legendre continued fraction (modified Lentz), t >= 1.
double e1_cf_scaled(double t)
{
    constexpr double tiny = 1e-300;
    double b = t + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double f = d;
    for (int k = 1; k < 300; ++k) {
        double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = b + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return f;
}

} // namespace

double beta1(double t)
{
    if (!(t > 0)) throw std::domain_error("beta1: t must be positive");
    if (t <= 1.0) return e1_series(t);
    return std::exp(-t) * e1_cf_scaled(t);
}

double beta1_scaled(double t)
{
    if (!(t > 0)) throw std::domain_error("beta1_scaled: t must be positive");
    if (t <= 1.0) return std::exp(t) * e1_series(t);
    return e1_cf_scaled(t);
}

int IncoherentClass::sign_at(const PrimeOfF& P) const
{
    auto it = signs.find(P);
    if (it == signs.end()) throw std::invalid_argument("IncoherentClass: prime not ramified");
    return it->second;
}

std::string IncoherentClass::label() const
{
    std::string s;
    for (const auto& [P, sg] : signs) {
        if (!s.empty()) s += ",";
        s += sg > 0 ? "+" : "-";
    }
    return s;
}

std::vector<IncoherentClass> enumerate_Xi(const FieldTower& tower)
{
    const auto& ram = tower.finite_ramified;
    if (ram.empty()) throw std::domain_error("enumerate_Xi: no finite ramified primes");
    size_t k = ram.size();
    std::vector<IncoherentClass> out;
    for (unsigned long mask = 0; mask < (1UL << (k - 1)); ++mask) {
        IncoherentClass c;
        int prod = 1;
        for (size_t i = 0; i + 1 < k; ++i) {
            int sg = (mask >> i) & 1 ? -1 : 1;
            c.signs[ram[i]] = sg;
            prod *= sg;
        }
        c.signs[ram[k - 1]] = -prod;  // force chi(c) = -1
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// --- the ramified local character -----------------------------------------
//
// At a prime P ramified in K (odd residue characteristic, ord_P(delta) = 1),
// chi_P(x) = Leg(residue of x * delta^{-ord_P(x)}) * Leg(-1)^{ord_P(x)},
// with Leg the quadratic residue symbol of kappa(P). delta serves as the
// uniformizer; chi_P(delta) = chi_P(-1) since -delta is the norm of sqrt(delta).

// Legendre symbol of the unit part of the integral y = (A, B) wrt delta.
int unit_symbol_integral(const BaseField& F, const ElementF& d, const PrimeOfF& P, long long A,
                         long long B, long long a)
{
    long long p = P.p;

    if (F.n == 1) {
        long long uy = (A / pow_checked(p, static_cast<int>(a))) % p;
        long long ud = d.a / p;  // ord_p(delta) = 1
        long long u = mulmod(mod_ll(uy, p), powmod(invmod(mod_ll(ud, p), p), a, p), p);
        return legendre(u, p);
    }

    if (P.f == 2) {
        // Leg_{F_{p^2}}(z) = Leg_p(Norm(z)); the norm is multiplicative, so
        // no residue-field inversion is needed.
        long long pa = pow_checked(p, static_cast<int>(a));
        long long nya = mod_ll(A / pa, p), nyb = mod_ll(B / pa, p);
        long long Ny = mod_ll(nya * nya + nya * nyb % p * F.wt + nyb * nyb % p * F.wn, p);
        long long nda = mod_ll(d.a / p, p), ndb = mod_ll(d.b / p, p);
        long long Nd = mod_ll(nda * nda + nda * ndb % p * F.wt + ndb * ndb % p * F.wn, p);
        int sy = legendre(Ny, p);
        int sd = legendre(Nd, p);
        return a % 2 == 0 ? sy : sy * sd;
    }

    if (P.e == 2) {
        // res(y * delta^{-a}) = res(y * conj(delta)^a / p^a) * (N(delta)/p)^{-a}
        int M = static_cast<int>(a) + 2;
        long long pM = pow_checked(p, M);
        long long Ya = mod_ll(A, pM), Yb = mod_ll(B, pM);
        ElementF cd = elem_conj(F, d);
        long long ca = mod_ll(cd.a, pM), cb = mod_ll(cd.b, pM);
        for (long long i = 0; i < a; ++i) {
            long long na = mod_ll(mulmod(Ya, ca, pM) - mulmod(mulmod(F.wn, Yb, pM), cb, pM), pM);
            long long nb = mod_ll(mulmod(Ya, cb, pM) + mulmod(Yb, ca, pM) +
                                      mulmod(mulmod(F.wt, Yb, pM), cb, pM),
                                  pM);
            Ya = na;
            Yb = nb;
        }
        long long pa = pow_checked(p, static_cast<int>(a));
        if (Ya % pa != 0 || Yb % pa != 0)
            throw std::logic_error("unit_symbol_integral: expected divisibility failed");
        long long res = mod_ll((Ya / pa) % p + ((Yb / pa) % p) * P.root, p);
        long long Nd = integral_norm(F, d.a, d.b);
        long long nu0 = mod_ll(Nd / p, p);
        long long u = mulmod(res, powmod(invmod(nu0, p), a, p), p);
        return legendre(u, p);
    }

    // split in F, f = 1: embed through the lifted root
    int M = static_cast<int>(a) + 2;
    long long c = lift_root(F, p, P.root, M);
    long long pM = pow_checked(p, M);
    auto embed_mod = [&](long long xa, long long xb) {
        return static_cast<long long>(
            ((static_cast<__int128>(xa) + static_cast<__int128>(xb) * c) % pM + pM) % pM);
    };
    long long Ey = embed_mod(A, B);
    long long uy = (Ey / pow_checked(p, static_cast<int>(a))) % p;
    long long Ed = embed_mod(d.a, d.b);
    long long ud = (Ed / p) % p;
    long long u = mulmod(mod_ll(uy, p), powmod(invmod(mod_ll(ud, p), p), a, p), p);
    return legendre(u, p);
}

int chi_ramified(const FieldTower& tower, const PrimeOfF& P, const ElementF& x)
{
    const BaseField& F = tower.F;
    long long p = P.p;
    int leg_minus1 = P.f == 2 ? 1 : legendre(p - 1, p);

    int result = 1;
    // chi(x) = chi(numerator) * chi(denominator); both integral
    long long a_num = ord_P(F, ElementF{x.a, x.b, 1}, P);
    result *= unit_symbol_integral(F, tower.delta, P, x.a, x.b, a_num);
    if (a_num % 2 != 0) result *= leg_minus1;
    if (x.den != 1) {
        long long a_den = ord_P(F, ElementF{x.den, 0, 1}, P);
        result *= unit_symbol_integral(F, tower.delta, P, x.den, 0, a_den);
        if (a_den % 2 != 0) result *= leg_minus1;
    }
    return result;
}

// Finite places where a local value can differ from 1: support of (alpha)
// together with the ramified primes.
std::vector<PrimeOfF> effective_primes(const FieldTower& tower, const IdealF& alpha_ideal)
{
    std::set<PrimeOfF> s;
    for (const auto& [P, e] : alpha_ideal.exponents) s.insert(P);
    for (const PrimeOfF& P : tower.finite_ramified) s.insert(P);
    return {s.begin(), s.end()};
}

} // namespace

int chi_local(const FieldTower& tower, const PrimeOfF& P, const ElementF& x)
{
    if (x.is_zero()) throw std::domain_error("chi_local: zero element");
    switch (splitting_in_K(tower, P)) {
        case SplittingType::Split: return 1;
        case SplittingType::Inert: return ord_P(tower.F, x, P) % 2 == 0 ? 1 : -1;
        case SplittingType::RamifiedInK: return chi_ramified(tower, P, x);
    }
    return 1;
}

DiffSet diff_set(const FieldTower& tower, const ElementF& alpha, const IncoherentClass& c)
{
    if (alpha.is_zero()) throw std::domain_error("diff_set: zero alpha");
    DiffSet out;
    IdealF I = principal_ideal(tower.F, alpha);
    for (const PrimeOfF& P : effective_primes(tower, I)) {
        int chi = chi_local(tower, P, alpha);
        if (splitting_in_K(tower, P) == SplittingType::RamifiedInK) chi *= c.sign_at(P);
        if (chi == -1) out.finite.push_back(P);
    }
    for (int v = 0; v < tower.F.n; ++v)
        if (sign_at_place(tower.F, alpha, v) < 0) out.arch.push_back(v);
    return out;
}

WhittakerEval whittaker_finite(const FieldTower& tower, const PrimeOfF& P, const ElementF& alpha,
                               const IncoherentClass& c)
{
    if (alpha.is_zero()) throw std::domain_error("whittaker_finite: zero alpha");
    long long a = ord_P(tower.F, alpha, P);
    double logN = std::log(static_cast<double>(P.norm()));
    WhittakerEval W;

    switch (splitting_in_K(tower, P)) {
        case SplittingType::Split:
            W.value0 = static_cast<double>(rho_local(SplittingType::Split, a));
            break;
        case SplittingType::Inert:
            if (a % 2 == 0) {
                W.value0 = static_cast<double>(rho_local(SplittingType::Inert, a));
            } else {
                W.deriv0 = 0.5 * static_cast<double>(a + 1) * logN *
                           static_cast<double>(rho_local(SplittingType::Inert, a - 1));
            }
            break;
        case SplittingType::RamifiedInK: {
            double base = 2.0 / std::sqrt(static_cast<double>(P.norm())) *
                          static_cast<double>(rho_local(SplittingType::RamifiedInK, a));
            if (chi_ramified(tower, P, alpha) * c.sign_at(P) == 1)
                W.value0 = base;
            else
                W.deriv0 = 0.5 * static_cast<double>(a + 1) * logN * base;
            break;
        }
    }
    return W;
}

WhittakerEval whittaker_arch(double alpha_v, double y_v)
{
    if (alpha_v == 0.0) throw std::domain_error("whittaker_arch: zero alpha");
    if (!(y_v > 0)) throw std::domain_error("whittaker_arch: y must be positive");
    WhittakerEval W;
    if (alpha_v > 0)
        W.value0 = 2.0;
    else
        W.deriv0 = beta1(4.0 * M_PI * std::fabs(y_v * alpha_v));
    return W;
}

double coeff_derivative_for_class(const FieldTower& tower, const ElementF& alpha,
                                  const std::vector<double>& y, const IncoherentClass& c)
{
    std::vector<double> yy = normalize_y(tower, y);
    DiffSet ds = diff_set(tower, alpha, c);
    if (ds.size() != 1) return 0.0;

    // global prefactor: the product of the stripped epsilon-factors is -1
    double prod = -1.0;
    for (int v = 0; v < tower.F.n; ++v) {
        WhittakerEval W = whittaker_arch(embed(tower.F, alpha, v), yy[v]);
        bool is_diff = !ds.arch.empty() && ds.arch[0] == v;
        prod *= is_diff ? W.deriv0 : W.value0;
    }
    IdealF I = principal_ideal(tower.F, alpha);
    for (const PrimeOfF& P : effective_primes(tower, I)) {
        WhittakerEval W = whittaker_finite(tower, P, alpha, c);
        bool is_diff = !ds.finite.empty() && ds.finite[0] == P;
        prod *= is_diff ? W.deriv0 : W.value0;
    }
    return prod;
}

double b_phi(const FieldTower& tower, const ElementF& alpha, const std::vector<double>& y)
{
    double sum = 0.0;
    for (const IncoherentClass& c : enumerate_Xi(tower))
        sum += coeff_derivative_for_class(tower, alpha, y, c);
    return sum;
}

double b_phi_closed(const FieldTower& tower, const ElementF& alpha, const std::vector<double>& y)
{
    std::vector<double> yy = normalize_y(tower, y);
    if (alpha.is_zero()) throw std::domain_error("b_phi_closed: zero alpha");
    double front = -std::pow(2.0, tower.r - 1) / std::sqrt(static_cast<double>(tower.rel_disc_norm()));
    int neg = negative_place_count(tower.F, alpha);

    if (neg == 0) {
        IdealF I = principal_ideal(tower.F, alpha);
        double sum = 0.0;
        for (const PrimeOfF& P : effective_primes(tower, I)) {
            SplittingType st = splitting_in_K(tower, P);
            if (st == SplittingType::Split) continue;
            IdealF shifted = I;
            shifted.set_exponent(P, shifted.exponent_of(P) - epsilon_P(st));
            long long rs = rho(tower, shifted);
            if (rs == 0) continue;
            long long a = I.exponent_of(P);
            sum += static_cast<double>(a + 1) * static_cast<double>(rs) *
                   std::log(static_cast<double>(P.norm()));
        }
        return front * sum;
    }
    if (neg == 1) {
        int v = 0;
        while (sign_at_place(tower.F, alpha, v) > 0) ++v;
        long long rho_a = rho(tower, principal_ideal(tower.F, alpha));
        if (rho_a == 0) return 0.0;
        double t = 4.0 * M_PI * yy[v] * std::fabs(embed(tower.F, alpha, v));
        return front * static_cast<double>(rho_a) * beta1(t);
    }
    return 0.0;
}

double value_at_zero(const FieldTower& tower, const ElementF& alpha, const std::vector<double>& y,
                     const IncoherentClass& c)
{
    std::vector<double> yy = normalize_y(tower, y);
    double prod = -1.0;
    for (int v = 0; v < tower.F.n; ++v)
        prod *= whittaker_arch(embed(tower.F, alpha, v), yy[v]).value0;
    IdealF I = principal_ideal(tower.F, alpha);
    for (const PrimeOfF& P : effective_primes(tower, I))
        prod *= whittaker_finite(tower, P, alpha, c).value0;
    return prod;
}

} // namespace cmv
