#include "cmv/base_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cmv {

const char* to_string(SplittingType st)
{
    switch (st) {
        case SplittingType::Split: return "split";
        case SplittingType::Inert: return "inert";
        case SplittingType::RamifiedInK: return "ramified";
    }
    return "?";
}

namespace detail {

long long mod_ll(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long mulmod(long long a, long long b, long long m)
{
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long powmod(long long a, long long e, long long m)
{
    long long r = 1 % m;
    a = mod_ll(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

long long invmod(long long a, long long m)
{
    long long t = 0, newt = 1, r = m, newr = mod_ll(a, m);
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    return mod_ll(t, m);
}

int legendre(long long a, long long p)
{
    a = mod_ll(a, p);
    if (a == 0) return 0;
    long long s = powmod(a, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

int valp(long long x, long long p)
{
    if (x == 0) throw std::domain_error("valp: zero argument");
    if (x < 0) x = -x;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long isqrt_ll(long long v)
{
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool is_perfect_square(long long v)
{
    if (v < 0) return false;
    long long r = isqrt_ll(v);
    return r * r == v;
}

std::vector<std::pair<long long, int>> factorize(long long v)
{
    if (v <= 0) throw std::domain_error("factorize: positive argument required");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

long long sqrt_mod(long long a, long long p)
{
    a = mod_ll(a, p);
    if (p == 2) return a;
    // p stays small here (it divides a norm in play), plain search is fine
    for (long long r = 0; r <= p / 2; ++r)
        if (mulmod(r, r, p) == a) return r;
    return -1;
}

long long pow_checked(long long b, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > 9000000000000000000LL / std::llabs(b))
            throw std::overflow_error("pow_checked: overflow");
        r *= b;
    }
    return r;
}

long long lift_root(const BaseField& F, long long p, long long c0, int M)
{
    // g(x) = x^2 - wt x + wn, g'(c0) a unit mod p
    long long pk = p;
    long long c = mod_ll(c0, p);
    for (int k = 2; k <= M; ++k) {
        if (pk > 9000000000000000000LL / p)
            throw std::overflow_error("lift_root: modulus overflow");
        pk *= p;
        __int128 g = static_cast<__int128>(c) * c - static_cast<__int128>(F.wt) * c + F.wn;
        long long gm = static_cast<long long>(((g % pk) + pk) % pk);
        long long gp = mod_ll(2 * c - F.wt, pk);
        c = mod_ll(c - mulmod(gm, invmod(gp, pk), pk), pk);
    }
    return c;
}

} // namespace detail

BaseField make_base_field(long long base_disc)
{
    if (base_disc == 1) return BaseField{1, 1, 0, 0};
    if (base_disc <= 1) throw std::invalid_argument("base_disc must be 1 or a fundamental discriminant > 0");

    auto squarefree = [](long long v) {
        for (auto [p, e] : detail::factorize(v))
            if (e > 1) return false;
        return true;
    };

    BaseField F;
    F.n = 2;
    F.disc = base_disc;
    if (detail::mod_ll(base_disc, 4) == 1) {
        if (!squarefree(base_disc))
            throw std::invalid_argument("base_disc must be a fundamental discriminant");
        F.wt = 1;
        F.wn = (1 - base_disc) / 4;  // omega = (1 + sqrt(disc))/2
    } else if (base_disc % 4 == 0) {
        long long m = base_disc / 4;
        if (!squarefree(m) || detail::mod_ll(m, 4) == 1)
            throw std::invalid_argument("base_disc must be a fundamental discriminant");
        F.wt = 0;
        F.wn = -m;  // omega = sqrt(m)
    } else {
        throw std::invalid_argument("base_disc must be a fundamental discriminant");
    }
    return F;
}

std::vector<PrimeOfF> factor_rational_prime(const BaseField& F, long long p)
{
    if (p < 2) throw std::invalid_argument("factor_rational_prime: p must be prime");
    if (F.n == 1) return {PrimeOfF{p, 1, 1, -1}};

    long long D = F.disc;
    if (D % p == 0) {
        long long root;
        if (p == 2)
            root = detail::mod_ll(-F.wn, 2);  // double root of x^2 - m in char 2
        else if (F.wt == 0)
            root = 0;
        else
            root = detail::mod_ll(detail::mulmod(F.wt, detail::invmod(2, p), p), p);
        return {PrimeOfF{p, 1, 2, root}};
    }

    bool split;
    if (p == 2)
        split = detail::mod_ll(D, 8) == 1;
    else
        split = detail::legendre(D, p) == 1;

    if (!split) return {PrimeOfF{p, 2, 1, -1}};

    long long r1, r2;
    if (p == 2) {
        r1 = 0;
        r2 = 1;
    } else {
        long long s = detail::sqrt_mod(detail::mod_ll(D, p), p);
        long long inv2 = detail::invmod(2, p);
        r1 = detail::mulmod(detail::mod_ll(F.wt + s, p), inv2, p);
        r2 = detail::mulmod(detail::mod_ll(F.wt - s, p), inv2, p);
        if (r1 > r2) std::swap(r1, r2);
    }
    return {PrimeOfF{p, 1, 1, r1}, PrimeOfF{p, 1, 1, r2}};
}

} // namespace cmv
