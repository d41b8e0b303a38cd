#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace cmv {

/// Behavior of a prime of F in the quadratic extension K/F.
enum class SplittingType { Split, Inert, RamifiedInK };

const char* to_string(SplittingType st);

/// The totally real base field F of degree <= 2, with ring of integers
/// Z[omega]. disc == 1 encodes F = Q (omega = 0). Otherwise disc is a
/// fundamental discriminant > 0 and omega = (disc + sqrt(disc))/2 resp.
/// sqrt(disc/4), recorded through its trace wt and norm wn over Q.
/// wt^2 - 4*wn == disc always.
struct BaseField {
    long long disc = 1;
    int n = 1;
    long long wt = 0;
    long long wn = 0;

    friend bool operator==(const BaseField&, const BaseField&) = default;
};

/// Validates base_disc (1 or a fundamental discriminant > 0) and fills in
/// the integral-basis data.
BaseField make_base_field(long long base_disc);

/// A prime ideal of O_F. Primes of residue degree 1 over Q are pinned down
/// by the root of x^2 - wt*x + wn mod p they select (the residue of omega);
/// root == -1 marks an inert prime (f = 2) and the F = Q case.
struct PrimeOfF {
    long long p = 0;
    int f = 1;
    int e = 1;
    long long root = -1;

    long long norm() const { return f == 2 ? p * p : p; }

    friend bool operator==(const PrimeOfF&, const PrimeOfF&) = default;
    friend auto operator<=>(const PrimeOfF&, const PrimeOfF&) = default;
};

/// The primes of O_F above the rational prime p, sorted.
std::vector<PrimeOfF> factor_rational_prime(const BaseField& F, long long p);

namespace detail {

long long mod_ll(long long a, long long m);
long long mulmod(long long a, long long b, long long m);
long long powmod(long long a, long long e, long long m);
long long invmod(long long a, long long m);
int legendre(long long a, long long p);
int valp(long long x, long long p);
long long isqrt_ll(long long v);
bool is_perfect_square(long long v);
std::vector<std::pair<long long, int>> factorize(long long v);
long long sqrt_mod(long long a, long long p);
long long pow_checked(long long b, int e);

// Lifts a simple root c0 of x^2 - wt*x + wn mod p to a root mod p^M.
long long lift_root(const BaseField& F, long long p, long long c0, int M);

} // namespace detail

} // namespace cmv
