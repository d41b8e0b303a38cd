// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cmv/commands.hpp"
#include "cmv/config.hpp"
#include "cmv/eisenstein_side.hpp"
#include "cmv/local_deformation.hpp"
#include "cmv/oracles.hpp"

using namespace cmv;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const char* what, bool pass)
{
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number, what);
    if (!pass) ++g_failures;
}

FieldTower imquad(long long delta)
{
    TowerConfig cfg;
    cfg.delta_a = delta;
    return build_tower(cfg);
}

FieldTower quartic57()
{
    TowerConfig cfg;
    cfg.base_disc = 5;
    cfg.delta_a = -7;
    cfg.h = 1;  // supplied class data; both sides of the identity scale by ck/w
    cfg.ck = 1;
    return build_tower(cfg);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool close_rel(double a, double b, double rel, double abs_floor = 1e-12)
{
    double err = std::fabs(a - b);
    return err <= abs_floor || err <= rel * std::max(std::fabs(a), std::fabs(b));
}

} // namespace

int main()
{
    // 1. rho against brute-force ideal enumeration, m <= 500, under 5 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long long d : {-7LL, -23LL}) {
            FieldTower t = imquad(d);
            for (long long m = 1; m <= 500; ++m)
                if (rho(t, principal_ideal(t.F, make_element(t.F, m))) !=
                    oracles::count_ideals_of_norm(d, m))
                    ok = false;
        }
        double dt = seconds_since(t0);
        report(1, "rho equals direct ideal enumeration (m <= 500, < 5 s)", ok && dt < 5.0);
    }

    // 2. main identity on Q(sqrt(-7)), Q(sqrt(-11)), Q(sqrt(-23)),
    //    alpha in +-1..+-50, y in {0.5, 1, 5}, rel 1e-9, under 10 s
    bool identity_grids_ok = true;
    std::vector<std::pair<FieldTower, ElementF>> grid_cases;  // reused by criterion 4
    {
        auto t0 = std::chrono::steady_clock::now();
        for (long long d : {-7LL, -11LL, -23LL}) {
            FieldTower t = imquad(d);
            for (long long a = -50; a <= 50; ++a) {
                if (a == 0) continue;
                ElementF alpha = make_element(t.F, a);
                grid_cases.emplace_back(t, alpha);
                for (double y : {0.5, 1.0, 5.0}) {
                    double deg = arithmetic_degree(t, alpha, {y}).total;
                    double rhs = identity_rhs(t, b_phi(t, alpha, {y}));
                    if (!close_rel(deg, rhs, 1e-9)) identity_grids_ok = false;
                }
            }
        }
        double dt = seconds_since(t0);
        report(2, "main identity: degree side equals the Eisenstein side (rel 1e-9, < 10 s)",
               identity_grids_ok && dt < 10.0);
    }

    // 3. two-route Eisenstein equality on the same grids plus a quartic tower
    {
        bool ok = true;
        for (const auto& [t, alpha] : grid_cases)
            for (double y : {0.5, 1.0, 5.0})
                if (!close_rel(b_phi(t, alpha, {y}), b_phi_closed(t, alpha, {y}), 1e-9))
                    ok = false;
        FieldTower q = quartic57();
        for (long long a = -10; a <= 10; ++a)
            for (long long b = -10; b <= 10; ++b) {
                if (a == 0 && b == 0) continue;
                ElementF alpha = make_element(q.F, a, b);
                for (double y : {0.5, 1.0, 5.0})
                    if (!close_rel(b_phi(q, alpha, {y}), b_phi_closed(q, alpha, {y}), 1e-9))
                        ok = false;
            }
        report(3, "b_phi sum-over-classes route equals the closed form (rel 1e-9)", ok);
    }

    // 4. incoherence vanishing: the central value is exactly 0
    {
        bool ok = true;
        for (const auto& [t, alpha] : grid_cases)
            for (const IncoherentClass& c : enumerate_Xi(t))
                for (double y : {0.5, 1.0, 5.0})
                    if (value_at_zero(t, alpha, {y}, c) != 0.0) ok = false;
        report(4, "central value vanishes exactly for every (alpha, class)", ok);
    }

    // 5. beta1 accuracy against the quadrature oracle
    {
        bool ok = std::fabs(beta1(1.0) - 0.219383934395520) <= 1e-12;
        for (int i = 0; i < 50; ++i) {
            double t = 0.1 * std::pow(500.0, i / 49.0);
            double q = oracles::beta1_quadrature(t);
            if (std::fabs(beta1(t) - q) > 1e-10 * q) ok = false;
        }
        report(5, "beta1 within 1e-10 of quadrature on [0.1, 50]; spot value to 1e-12", ok);
    }

    // 6. order-profile identity, contributing-length integrality, lift bound
    {
        bool ok = true;
        for (int d = 2; d <= 20; d += 2)
            for (int i = 0; i < d; ++i) {
                std::vector<int> prof = order_profile(d, i);
                for (int r = 0; r < d; ++r)
                    if (prof[r] + prof[(r + d / 2) % d] != 1) ok = false;
            }
        for (auto [st, e] : {std::pair{SplittingType::Inert, 1}, {SplittingType::Inert, 2},
                             {SplittingType::RamifiedInK, 2}}) {
            LocalContext ctx{PrimeOfF{3, 1, 1, -1}, st, e};
            for (long long a = 0; a <= 50; ++a) {
                if (rho_local(st, a - epsilon_P(st)) == 0) continue;
                Rational len = deformation_length(ctx, a);
                if (len.denominator() != 1 || len.numerator() < 1) ok = false;
                if (lift_bound_k(ctx, a) != len) ok = false;
            }
        }
        report(6, "order-profile antipodal identity; integral contributing lengths", ok);
    }

    // 7. worked instance: Q(sqrt(-7)), alpha = 3
    {
        FieldTower t = imquad(-7);
        ElementF three = make_element(t.F, 3);
        bool ok = std::fabs(finite_degree(t, three).total - std::log(3.0) / 2) <= 1e-12 &&
                  std::fabs(b_phi(t, three, {1.0}) - (-(4.0 / std::sqrt(7.0)) * std::log(3.0))) <=
                      1e-12;
        report(7, "worked instance alpha = 3 on Q(sqrt(-7)) to 1e-12", ok);
    }

    // 8. determinism: two check-identity runs are byte-identical
    {
        RunConfig cfg = parse_config_text("delta = -7\nalpha_bound = 25\ny = 1\n");
        fs::path base = fs::temp_directory_path() / "cmv_acceptance";
        fs::remove_all(base);
        std::ostringstream log;
        int e1 = run_check_identity(cfg, (base / "a").string(), log);
        int e2 = run_check_identity(cfg, (base / "b").string(), log);
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        bool ok = e1 == 0 && e2 == 0;
        for (const char* name : {"identity_report.json", "identity_report.csv"})
            ok = ok && !slurp(base / "a" / name).empty() &&
                 slurp(base / "a" / name) == slurp(base / "b" / name);
        report(8, "check-identity reports are byte-identical across runs", ok);
    }

    if (g_failures == 0)
        std::printf("acceptance: all criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
