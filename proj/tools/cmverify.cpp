#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cmv/commands.hpp"

namespace {

std::string resolve_out_dir(const std::string& flag)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CMVERIFY_REPORT_DIR"); env && *env) return env;
    return ".";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"verifies Arakelov degrees of CM special divisors against the derivative "
                 "Fourier coefficients of the matching incoherent Hilbert Eisenstein series"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mutate;
    double tolerance = -1.0;

    CLI::App* check = app.add_subcommand("check-identity", "run the two-sided identity check");
    check->add_option("--config", config_path, "run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--tolerance", tolerance, "relative tolerance override");
    check->add_option("--out", out_dir, "report directory");

    CLI::App* degree = app.add_subcommand("degree", "tabulate per-prime degree breakdowns");
    degree->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    degree->add_option("--out", out_dir, "report directory");

    CLI::App* eis = app.add_subcommand("eisenstein", "tabulate per-class coefficient data");
    eis->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    eis->add_option("--out", out_dir, "report directory");

    CLI::App* self = app.add_subcommand("selftest", "run the built-in invariant suites");
    self->add_option("--mutate", mutate, "corrupt a convention and verify detection")
        ->check(CLI::IsMember({"epsilon", "global-sign"}));

    CLI11_PARSE(app, argc, argv);

    if (self->parsed()) return cmv::run_selftest(mutate, std::cout);

    cmv::RunConfig cfg;
    try {
        cfg = cmv::parse_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (tolerance > 0) cfg.tolerance = tolerance;

    std::string out = resolve_out_dir(out_dir);
    if (check->parsed()) return cmv::run_check_identity(cfg, out, std::cout);
    if (degree->parsed()) return cmv::run_degree(cfg, out, std::cout);
    if (eis->parsed()) return cmv::run_eisenstein(cfg, out, std::cout);
    return 2;
}
