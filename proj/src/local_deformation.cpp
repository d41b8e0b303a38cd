#include "cmv/local_deformation.hpp"

#include <stdexcept>

namespace cmv {

int epsilon_P(SplittingType st)
{
    switch (st) {
        case SplittingType::Inert: return 1;
        case SplittingType::RamifiedInK: return 0;
        case SplittingType::Split: break;
    }
    throw std::domain_error("epsilon_P: undefined at split primes (no divisor points)");
}

LocalContext make_local_context(const FieldTower& tower, const PrimeOfF& P)
{
    SplittingType st = splitting_in_K(tower, P);
    if (st == SplittingType::Split)
        throw std::domain_error("make_local_context: split prime");

    int e_tilde = 1;
    if (st == SplittingType::RamifiedInK) {
        e_tilde = 2;
    } else if (tower.F.n == 2 && P.e == 1 && P.f == 1) {
        // the F-conjugate of a split-in-F prime is the partner root; its
        // ramification in K ramifies the closure over P as well
        for (const PrimeOfF& Q : factor_rational_prime(tower.F, P.p))
            if (!(Q == P) && splitting_in_K(tower, Q) == SplittingType::RamifiedInK)
                e_tilde = 2;
    }
    return LocalContext{P, st, e_tilde};
}

Rational deformation_length(const LocalContext& ctx, long long a)
{
    return Rational(ctx.e_tilde * (a + 1), 2);
}

Rational lift_bound_k(const LocalContext& ctx, long long a)
{
    if (rho_local(ctx.st, a - epsilon_P(ctx.st)) == 0)
        throw std::domain_error("lift_bound_k: no homomorphism of that norm exists");
    // (1/2) ord_{Ktilde}(alpha * P) = (1/2) e_tilde (a + 1)
    return Rational(ctx.e_tilde * (a + 1), 2);
}

std::vector<int> order_profile(int d, int i)
{
    if (d <= 0 || d % 2 != 0)
        throw std::invalid_argument("order_profile: d must be even and positive");
    if (i < 0 || i >= d)
        throw std::invalid_argument("order_profile: i out of range");
    std::vector<int> prof(d, 0);
    for (int s = 1; s <= d / 2; ++s) prof[(i + s) % d] = 1;
    return prof;
}

} // namespace cmv
