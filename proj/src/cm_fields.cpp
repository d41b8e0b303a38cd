#include "cmv/cm_fields.hpp"

#include <numeric>
#include <stdexcept>

namespace cmv {

using namespace detail;

long long FieldTower::rel_disc_norm() const
{
    Rational n = cmv::ideal_norm(rel_disc);
    return n.numerator();  // exponents are all +1
}

bool is_square_in_F(const BaseField& F, const ElementF& x)
{
    if (x.is_zero()) return true;

    // x * den^2 is integral with the same square class
    __int128 Ai = static_cast<__int128>(x.a) * x.den;
    __int128 Bi = static_cast<__int128>(x.b) * x.den;
    if (Ai > 2000000000LL || Ai < -2000000000LL || Bi > 2000000000LL || Bi < -2000000000LL)
        throw std::overflow_error("is_square_in_F: coordinates too large");
    long long A = static_cast<long long>(Ai), B = static_cast<long long>(Bi);

    if (F.n == 1) return B == 0 && A > 0 && is_perfect_square(A);

    if (B == 0 && A > 0 && is_perfect_square(A)) return true;

    // x = (u + v omega)^2 with v != 0 forces w = v^2 to be a root of
    // disc*w^2 - (2*wt*B + 4*A)*w + B^2.
    long long a2 = F.disc;
    long long a1 = -(2 * F.wt * B + 4 * A);
    long long a0 = B * B;
    __int128 discQ = static_cast<__int128>(a1) * a1 - static_cast<__int128>(4) * a2 * a0;
    if (discQ < 0 || discQ > static_cast<__int128>(4000000000000000000LL))
        return discQ < 0 ? false : throw std::overflow_error("is_square_in_F: overflow");
    long long dq = static_cast<long long>(discQ);
    if (!is_perfect_square(dq)) return false;
    long long s = isqrt_ll(dq);

    for (long long sgn : {1LL, -1LL}) {
        long long num = -a1 + sgn * s;
        Rational w(num, 2 * a2);
        if (w <= Rational(0)) continue;
        if (!is_perfect_square(w.numerator()) || !is_perfect_square(w.denominator())) continue;
        Rational v(isqrt_ll(w.numerator()), isqrt_ll(w.denominator()));
        Rational u = (Rational(B) / v - v * Rational(F.wt)) / 2;
        if (u * u - Rational(F.wn) * w == Rational(A) &&
            v * (u * 2 + v * Rational(F.wt)) == Rational(B))
            return true;
    }
    return false;
}

namespace {

// Legendre symbol of delta * p^{-a} at P, for even a = ord_P(delta), odd p.
int stripped_residue_symbol(const BaseField& F, const ElementF& d, const PrimeOfF& P, long long a)
{
    long long p = P.p;
    long long A = d.a, B = d.b;

    if (F.n == 1) {
        long long u = A / pow_checked(p, static_cast<int>(a));
        return legendre(u, p);
    }
    if (P.f == 2) {
        long long pa = pow_checked(p, static_cast<int>(a));
        long long ra = mod_ll(A / pa, p), rb = mod_ll(B / pa, p);
        // square in F_{p^2} iff the norm down to F_p is a square
        long long N = mod_ll(ra * ra + ra * rb % p * F.wt + rb * rb % p * F.wn, p);
        return legendre(N, p);
    }
    if (P.e == 2) {
        long long ph = pow_checked(p, static_cast<int>(a / 2));
        long long res = mod_ll((A / ph) % p + ((B / ph) % p) * P.root, p);
        return legendre(res, p);
    }
    // split, f = 1: embed through the lifted root
    int M = static_cast<int>(a) + 2;
    long long c = lift_root(F, p, P.root, M);
    long long pM = pow_checked(p, M);
    long long E = static_cast<long long>(
        ((static_cast<__int128>(A) + static_cast<__int128>(B) * c) % pM + pM) % pM);
    long long u = (E / pow_checked(p, static_cast<int>(a))) % p;
    return legendre(u, p);
}

// Solvability of x^2 = delta in the completion at P | 2, tested modulo
// 2^6 (documented precision; Hensel stabilizes well below it for unit delta).
bool two_adic_square(const BaseField& F, const ElementF& d, const PrimeOfF& P)
{
    constexpr long long Mod = 64;
    if (F.n == 2 && P.e == 1 && P.f == 1) {
        long long c = lift_root(F, 2, P.root, 6);
        long long E = mod_ll(d.a + d.b * c, Mod);
        for (long long x = 0; x < Mod; ++x)
            if (x * x % Mod == E) return true;
        return false;
    }
    long long la = mod_ll(d.a, Mod), lb = mod_ll(d.b, Mod);
    long long bmax = F.n == 1 ? 1 : Mod;
    for (long long xa = 0; xa < Mod; ++xa)
        for (long long xb = 0; xb < bmax; ++xb) {
            long long sa = mod_ll(xa * xa - F.wn * xb % Mod * xb, Mod);
            long long sb = mod_ll(2 * xa * xb + F.wt * xb % Mod * xb, Mod);
            if (sa == la && sb == lb) return true;
        }
    return false;
}

int roots_of_unity_impl(const BaseField& F, const ElementF& delta)
{
    auto scaled = [&](long long k, long long b) {
        return elem_mul(F, delta, make_element(F, k, F.n == 2 ? b : 0));
    };
    long long w = 2;
    if (is_square_in_F(F, scaled(-3, 0))) w = std::lcm(w, 3LL);
    if (is_square_in_F(F, scaled(-1, 0))) w = std::lcm(w, 4LL);
    if (F.n == 2) {
        // quartic cyclotomic fields, keyed by their real subfield
        if (F.disc == 5 && is_square_in_F(F, scaled(-2, -1))) w = std::lcm(w, 5LL);
        if (F.disc == 8 && is_square_in_F(F, scaled(-2, 0))) w = std::lcm(w, 8LL);
        if (F.disc == 12 && is_square_in_F(F, scaled(-1, 0))) w = std::lcm(w, 12LL);
    }
    return static_cast<int>(w);
}

long long class_number_forms(long long D)
{
    // reduced primitive forms (a, b, c) of discriminant D < 0
    long long h = 0;
    for (long long a = 1; 3 * a * a <= -D; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            if ((b * b - D) % (4 * a)) continue;
            long long c = (b * b - D) / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

bool square_mod_4(const BaseField& F, const ElementF& d)
{
    long long la = mod_ll(d.a, 4), lb = mod_ll(d.b, 4);
    long long bmax = F.n == 1 ? 1 : 4;
    for (long long xa = 0; xa < 4; ++xa)
        for (long long xb = 0; xb < bmax; ++xb) {
            long long sa = mod_ll(xa * xa - F.wn * xb * xb, 4);
            long long sb = mod_ll(2 * xa * xb + F.wt * xb * xb, 4);
            if (sa == la && sb == lb) return true;
        }
    return false;
}

} // namespace

SplittingType splitting_in_K(const FieldTower& tower, const PrimeOfF& P)
{
    const BaseField& F = tower.F;
    const ElementF& d = tower.delta;
    long long a = ord_P(F, d, P);
    if (P.p == 2) {
        if (a != 0) throw std::domain_error("splitting above 2 requires delta to be a unit there");
        return two_adic_square(F, d, P) ? SplittingType::Split : SplittingType::Inert;
    }
    if (a % 2 != 0) return SplittingType::RamifiedInK;
    return stripped_residue_symbol(F, d, P, a) == 1 ? SplittingType::Split : SplittingType::Inert;
}

int chi_at_prime(const FieldTower& tower, const PrimeOfF& P)
{
    switch (splitting_in_K(tower, P)) {
        case SplittingType::Split: return 1;
        case SplittingType::Inert: return -1;
        case SplittingType::RamifiedInK: return 0;
    }
    return 0;
}

std::vector<PrimeOfF> factor_rational_prime(const FieldTower& tower, long long p)
{
    return factor_rational_prime(tower.F, p);
}

int roots_of_unity(const FieldTower& tower)
{
    return roots_of_unity_impl(tower.F, tower.delta);
}

long long class_number_bruteforce(const FieldTower& tower)
{
    if (tower.F.n != 1)
        throw std::domain_error(
            "class_number_bruteforce: unsupported degree, class data must be supplied");
    return class_number_forms(tower.delta.a);
}

FieldTower build_tower(const TowerConfig& cfg)
{
    FieldTower t;
    t.F = make_base_field(cfg.base_disc);
    if (t.F.n == 1 && cfg.delta_b != 0)
        throw std::invalid_argument("delta omega-coordinate must vanish over Q");
    t.delta = make_element(t.F, cfg.delta_a, t.F.n == 2 ? cfg.delta_b : 0, 1);
    if (t.delta.is_zero()) throw std::invalid_argument("delta must be nonzero");

    for (int v = 0; v < t.F.n; ++v)
        if (sign_at_place(t.F, t.delta, v) > 0)
            throw std::invalid_argument("delta is not totally negative");

    IdealF d_ideal = principal_ideal(t.F, t.delta);
    for (const auto& [P, e] : d_ideal.exponents) {
        if (P.p == 2 && e != 0)
            throw std::invalid_argument("delta must be a unit at primes above 2");
        if (P.p != 2 && e > 1)
            throw std::invalid_argument("delta is not squarefree as an ideal at odd primes");
    }
    if (!square_mod_4(t.F, t.delta))
        throw std::invalid_argument("tower is ramified above 2 (delta is not a square mod 4)");

    for (const auto& [P, e] : d_ideal.exponents)
        if (P.p != 2 && e == 1) t.rel_disc.set_exponent(P, 1);
    for (const auto& [P, e] : t.rel_disc.exponents) t.finite_ramified.push_back(P);
    if (t.finite_ramified.empty())
        throw std::invalid_argument("condition 1: K/F is unramified at all finite primes");

    t.r = t.F.n + static_cast<int>(t.finite_ramified.size());
    t.w = roots_of_unity_impl(t.F, t.delta);

    if (t.F.n == 1) {
        t.normal_closure_degree = 2;
        long long h = class_number_forms(t.delta.a);
        if (cfg.h && *cfg.h != h)
            throw std::invalid_argument("supplied h does not match the computed class number");
        if (cfg.ck && *cfg.ck != h)
            throw std::invalid_argument("ck equals the class number for an imaginary quadratic tower");
        t.cls = ClassData{h, h, ClassData::Source::Computed};
    } else {
        ElementF nd = elem_mul(t.F, t.delta, elem_conj(t.F, t.delta));
        t.normal_closure_degree = is_square_in_F(t.F, nd) ? 4 : 8;
        if (!cfg.h || !cfg.ck)
            throw std::invalid_argument("class data (h, ck) must be supplied for a quartic tower");
        if (*cfg.h <= 0 || *cfg.ck <= 0 || *cfg.ck % *cfg.h != 0)
            throw std::invalid_argument("supplied ck must be a positive multiple of h");
        t.cls = ClassData{*cfg.h, *cfg.ck, ClassData::Source::Supplied};
    }
    return t;
}

ConditionReport validate_conditions(const FieldTower& tower)
{
    ConditionReport rep;
    if (tower.finite_ramified.empty()) {
        rep.pass = false;
        rep.failed = "condition 1";
        rep.detail = "K/F is unramified at all finite primes";
        return rep;
    }
    long long bound = tower.normal_closure_degree / (2 * tower.F.n) + 1;
    for (long long l : {2LL, 3LL, 5LL, 7LL}) {
        if (l > bound) break;
        for (const PrimeOfF& P : factor_rational_prime(tower.F, l)) {
            long long e = P.e * (splitting_in_K(tower, P) == SplittingType::RamifiedInK ? 2 : 1);
            if (e >= l) {
                rep.pass = false;
                rep.failed = "condition 2";
                rep.detail = "ramification index " + std::to_string(e) + " at " +
                             std::to_string(l) + " is not less than " + std::to_string(l);
                return rep;
            }
        }
    }
    return rep;
}

} // namespace cmv
