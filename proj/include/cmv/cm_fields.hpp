#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmv/base_field.hpp"
#include "cmv/ideal_arith.hpp"

namespace cmv {

struct ClassData {
    enum class Source { Computed, Supplied };
    long long h = 1;
    long long ck = 1;
    Source source = Source::Computed;
};

struct TowerConfig {
    long long base_disc = 1;
    long long delta_a = 0;
    long long delta_b = 0;
    std::optional<long long> h;
    std::optional<long long> ck;
};

/// The validated tower F subset K = F(sqrt(delta)) together with its global
/// invariants. Immutable after construction; all operations on it are pure.
struct FieldTower {
    BaseField F;
    ElementF delta;
    IdealF rel_disc;                        // odd P with ord_P(delta) = 1
    std::vector<PrimeOfF> finite_ramified;  // support of rel_disc, sorted
    int r = 0;                              // ramified places, archimedean included
    int w = 2;                              // roots of unity in K
    ClassData cls;
    long long normal_closure_degree = 2;    // [Ktilde : Q]

    long long degree_n() const { return F.n; }
    long long rel_disc_norm() const;
};

/// Construct and validate a tower. Throws std::invalid_argument naming the
/// violated condition: delta not totally negative, ramification above 2,
/// delta not ideal-squarefree at odd primes, no finite ramified prime
/// ("condition 1"), or missing/inconsistent class data.
FieldTower build_tower(const TowerConfig& cfg);

std::vector<PrimeOfF> factor_rational_prime(const FieldTower& tower, long long p);

SplittingType splitting_in_K(const FieldTower& tower, const PrimeOfF& P);

/// chi evaluated on a uniformizer at P: +1 split, -1 inert, 0 ramified.
int chi_at_prime(const FieldTower& tower, const PrimeOfF& P);

/// Order of the torsion unit group of O_K, by exact cyclotomic containment
/// tests in the presented model.
int roots_of_unity(const FieldTower& tower);

/// Class number by enumeration of reduced binary quadratic forms of
/// discriminant disc(K). Only for imaginary quadratic K (degree_n = 1);
/// throws std::domain_error otherwise.
long long class_number_bruteforce(const FieldTower& tower);

/// Exact test: is x a square in F?
bool is_square_in_F(const BaseField& F, const ElementF& x);

struct ConditionReport {
    bool pass = true;
    std::string failed;  // "condition 1" / "condition 2" when !pass
    std::string detail;
};

/// Checks the two ramification conditions of the main identity:
/// (1) some finite prime of F ramifies in K; (2) every rational prime
/// l <= [Ktilde:Q]/[K:Q] + 1 has ramification index < l in K/Q.
ConditionReport validate_conditions(const FieldTower& tower);

} // namespace cmv
