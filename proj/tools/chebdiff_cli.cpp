#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "chebdiff/expcli.hpp"
#include "chebdiff/kte_map.hpp"

using namespace chebdiff;

namespace {

void add_sweep_flags(CLI::App* cmd, ExperimentConfig& cfg) {
    cmd->add_option("--function", cfg.function, "sin2pi | sinscaled | linear");
    cmd->add_option("--eta", cfg.eta, "points per wavelength for sinscaled");
    cmd->add_option("--m", cfg.m, "derivative order 1..4");
    cmd->add_option("--nmin", cfg.nmin, "smallest n");
    cmd->add_option("--nmax", cfg.nmax, "largest n");
    cmd->add_option("--nstride", cfg.nstride, "n increment");
    cmd->add_option("--method", cfg.method, "weights | dct");
    cmd->add_option("--u", cfg.u, "unit roundoff used by the models");
    cmd->add_option("--out", cfg.out, "output CSV path (default stdout)");
    cmd->add_option("--seed", cfg.seed, "seed echoed into the CSV");
    cmd->add_option("--edge-only", cfg.edge_only, "measure at the right edge only");
}

int write_report(const ErrorReport& report) {
    if (report.config.out.empty())
        emit_csv(report, std::cout);
    else
        emit_csv(report, report.config.out);
    return numeric_status(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev differentiation experiments"};
    app.require_subcommand(1);

    ExperimentConfig tcfg;
    CLI::App* tcmd = app.add_subcommand("transition", "error-vs-n sweep with the error models");
    add_sweep_flags(tcmd, tcfg);

    ExperimentConfig mcfg;
    mcfg.mapped = true;
    mcfg.edge_only = false;
    CLI::App* mcmd =
        app.add_subcommand("mapped", "mapped differentiation sweep, one curve per beta");
    add_sweep_flags(mcmd, mcfg);
    mcmd->add_option("--beta", mcfg.beta, "comma-separated beta list")->delimiter(',');

    int an = 16;
    double abeta = 0.0;
    double au = kUnitRoundoff;
    CLI::App* acmd = app.add_subcommand("alpha", "print the mapping parameter for n, beta");
    acmd->add_option("--n", an, "grid parameter");
    acmd->add_option("--beta", abeta, "balance exponent");
    acmd->add_option("--u", au, "unit roundoff");

    ExperimentConfig bcfg;
    int bn = 16;
    CLI::App* bcmd = app.add_subcommand("bounds", "print the error model for one configuration");
    bcmd->add_option("--n", bn, "grid parameter");
    bcmd->add_option("--function", bcfg.function, "sin2pi | sinscaled | linear");
    bcmd->add_option("--eta", bcfg.eta, "points per wavelength for sinscaled");
    bcmd->add_option("--m", bcfg.m, "derivative order 1..4");
    bcmd->add_option("--u", bcfg.u, "unit roundoff used by the models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (tcmd->parsed()) return write_report(run_transition(tcfg));
        if (mcmd->parsed()) return write_report(run_mapped(mcfg));
        if (acmd->parsed()) {
            std::printf("%.16e\n", solve_alpha(an, abeta, au));
            return 0;
        }
        bcfg.nmin = bcfg.nmax = bn;
        bcfg.nstride = 1;
        ErrorReport r = run_transition(bcfg);
        const ErrorRow& row = r.rows.at(0);
        std::printf("UR %.16e\nURprime %.16e\nUR_asym %.16e\nUD %.16e\nUD_asym %.16e\n", row.UR,
                    row.URprime, row.UR_asym, row.UD, row.UD_asym);
        return numeric_status(r);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
