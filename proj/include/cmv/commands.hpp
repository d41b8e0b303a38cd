#pragma once

#include <iosfwd>
#include <string>

#include "cmv/config.hpp"
#include "cmv/degree_side.hpp"

namespace cmv {

// Exit codes shared by the CLI and the library-level command runners:
// 0 success / all identities pass, 1 identity failure, 2 config or
// validation failure (no report files are written in that case).

struct IdentityRecord {
    ElementF alpha;
    CaseTag tag = CaseTag::Zero;
    double degree_total = 0.0;
    double b_phi_sum_route = 0.0;
    double b_phi_closed_route = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = true;
};

struct IdentityReport {
    int n_checked = 0;
    int n_pass = 0;
    double max_rel_err = 0.0;
    std::vector<IdentityRecord> records;
};

/// Right-hand side of the main identity:
/// -(ck/w) * sqrt(N(d_{K/F})) / (2^{r-1} [K:Q]) * b_phi.
double identity_rhs(const FieldTower& tower, double b_phi_value);

/// Runs the per-alpha identity check; on success writes
/// identity_report.json and identity_report.csv under out_dir.
int run_check_identity(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Writes degree.csv (per-prime breakdown rows plus a total row per alpha).
int run_degree(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Writes eisenstein.csv (one row per (alpha, class) plus a summary row).
int run_eisenstein(const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Built-in invariant suites on the bundled towers. mutate is "", "epsilon"
/// or "global-sign"; with a mutation the run passes exactly when the
/// corrupted convention is detected.
int run_selftest(const std::string& mutate, std::ostream& log);

/// In-memory identity evaluation (used by run_check_identity and tests).
IdentityReport check_identity(const FieldTower& tower, const std::vector<ElementF>& alphas,
                              const std::vector<double>& y, double tolerance);

} // namespace cmv
