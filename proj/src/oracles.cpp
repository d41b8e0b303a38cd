#include "cmv/oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cmv::oracles {

namespace {

// Integral ideals of O_K, K = Q(sqrt(delta)) with delta = 1 mod 4, as
// lattices Z*A + Z*(B + C*theta) over theta = (1 + sqrt(delta))/2,
// theta^2 = theta - n0 with n0 = (1 - delta)/4. Norm = A*C.
struct Lat {
    long long A = 1, B = 0, C = 1;
    friend bool operator==(const Lat&, const Lat&) = default;
};

long long ext_gcd(long long a, long long b, long long& s, long long& t)
{
    if (b == 0) {
        s = a >= 0 ? 1 : -1;
        t = 0;
        return std::llabs(a);
    }
    long long s1, t1;
    long long g = ext_gcd(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

Lat hnf_from_gens(std::vector<std::pair<long long, long long>> gens)
{
    // reduce to [A, B + C theta]: C = gcd of theta-components
    std::pair<long long, long long> w{0, 0};
    for (const auto& g : gens) {
        if (g.second == 0) continue;
        if (w.second == 0) {
            w = g;
            continue;
        }
        long long s, t;
        long long d = ext_gcd(w.second, g.second, s, t);
        w = {s * w.first + t * g.first, d};
    }
    if (w.second < 0) w = {-w.first, -w.second};
    long long A = 0;
    for (const auto& g : gens) {
        long long x = g.first;
        if (w.second != 0) x -= (g.second / w.second) * w.first;
        A = std::gcd(A, std::llabs(x));
    }
    if (A == 0 || w.second == 0) throw std::logic_error("hnf_from_gens: degenerate lattice");
    long long B = ((w.first % A) + A) % A;
    return Lat{A, B, w.second};
}

Lat mul(const Lat& I, const Lat& J, long long n0)
{
    std::vector<std::pair<long long, long long>> gens;
    gens.emplace_back(I.A * J.A, 0);
    gens.emplace_back(I.A * J.B, I.A * J.C);
    gens.emplace_back(J.A * I.B, J.A * I.C);
    // (B1 + C1 th)(B2 + C2 th), th^2 = th - n0
    gens.emplace_back(I.B * J.B - n0 * I.C * J.C, I.B * J.C + I.C * J.B + I.C * J.C);
    return hnf_from_gens(std::move(gens));
}

Lat conj(const Lat& I)
{
    // conj(theta) = 1 - theta
    std::vector<std::pair<long long, long long>> gens;
    gens.emplace_back(I.A, 0);
    gens.emplace_back(I.B + I.C, -I.C);
    return hnf_from_gens(std::move(gens));
}

bool is_principal(const Lat& I, long long delta)
{
    // look for u + v theta in I with norm u^2 + uv + v^2 (1-delta)/4 = A*C
    long long n0 = (1 - delta) / 4;
    long long N = I.A * I.C;
    long long vmax = static_cast<long long>(std::sqrt(4.0 * N / static_cast<double>(-delta))) + 1;
    for (long long v = -vmax; v <= vmax; ++v) {
        if (v % I.C != 0) continue;
        long long S = 4 * N + delta * v * v;  // (2u + v)^2
        if (S < 0) continue;
        long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(S))));
        while (s > 0 && s * s > S) --s;
        while ((s + 1) * (s + 1) <= S) ++s;
        if (s * s != S) continue;
        for (long long sg : {s, -s}) {
            if ((sg - v) % 2 != 0) continue;
            long long u = (sg - v) / 2;
            long long x = u - (v / I.C) * I.B;
            if (x % I.A == 0) {
                // |N(u + v theta)| == N by construction
                (void)n0;
                return true;
            }
            if (s == 0) break;
        }
    }
    return false;
}

long long count_primitive(long long delta, long long a)
{
    long long c = 0;
    for (long long b = 0; b < 2 * a; ++b) {
        if ((b - delta) % 2 != 0) continue;
        if ((b * b - delta) % (4 * a) == 0) ++c;
    }
    return c;
}

} // namespace

long long count_ideals_of_norm(long long delta, long long m)
{
    if (delta >= 0 || ((delta % 4) + 4) % 4 != 1)
        throw std::invalid_argument("count_ideals_of_norm: delta must be negative, 1 mod 4");
    if (m <= 0) throw std::invalid_argument("count_ideals_of_norm: m must be positive");
    long long total = 0;
    for (long long q = 1; q * q <= m; ++q) {
        if (m % (q * q)) continue;
        total += count_primitive(delta, m / (q * q));
    }
    return total;
}

long long class_number_by_ideals(long long delta)
{
    if (delta >= 0 || ((delta % 4) + 4) % 4 != 1)
        throw std::invalid_argument("class_number_by_ideals: delta must be negative, 1 mod 4");
    long long n0 = (1 - delta) / 4;
    long long mink = static_cast<long long>(2.0 * std::sqrt(static_cast<double>(-delta)) / M_PI);

    std::vector<Lat> ideals;
    for (long long n = 1; n <= mink; ++n)
        for (long long q = 1; q * q <= n; ++q) {
            if (n % (q * q)) continue;
            long long a = n / (q * q);
            for (long long b = 0; b < 2 * a; ++b) {
                if ((b - delta) % 2 != 0) continue;
                if ((b * b - delta) % (4 * a)) continue;
                ideals.push_back(Lat{q * a, q * (b - 1) / 2, q});
            }
        }

    std::vector<Lat> reps;
    for (const Lat& I : ideals) {
        bool found = false;
        for (const Lat& R : reps)
            if (is_principal(mul(I, conj(R), n0), delta)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(I);
    }
    return static_cast<long long>(reps.size());
}

namespace {

double simpson(double fa, double fm, double fb, double h)
{
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adapt(const F& f, double a, double b, double fa, double fm, double fb, double whole,
             double eps, int depth)
{
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

} // namespace

double beta1_quadrature(double t)
{
    if (!(t > 0)) throw std::invalid_argument("beta1_quadrature: t must be positive");
    auto f = [t](double u) { return std::exp(-t * u) / u; };
    double U = 1.0 + 60.0 / t;  // truncation tail below e^{-60} relative
    double total = 0.0;
    for (double lo = 1.0; lo < U; lo *= 2.0) {
        double hi = std::min(2.0 * lo, U);
        double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        double whole = simpson(fa, fm, fb, hi - lo);
        double eps = std::fabs(whole) * 1e-14 + 1e-320;
        total += adapt(f, lo, hi, fa, fm, fb, whole, eps, 55);
    }
    return total;
}

} // namespace cmv::oracles
