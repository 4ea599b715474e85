// Command-line front end: formal-power grid jobs, the verification suite and
// spinor assembly, all driven by a single JSON config per run.

#include <string>

#include <CLI11.hpp>

#include "vekua/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact-solution engine for the 2-D Dirac equation via bicomplex Vekua equations"};
    app.require_subcommand(1);

    std::string config;
    vekua::CliOverrides ov;
    std::string out_dir, dump_gammas;
    double tol = 0.0;
    int threads = 0;

    auto add_common = [&](CLI::App* sub, bool with_tol) {
        sub->add_option("config", config, "JSON run configuration")->required();
        sub->add_option("--out", out_dir, "directory for the declared output files");
        sub->add_option("--threads", threads, "worker pool size for grid rows");
        if (with_tol) sub->add_option("--tol", tol, "quadrature rel_tol override");
    };

    CLI::App* powers =
        app.add_subcommand("powers", "evaluate formal powers on a grid (CSV + metadata)");
    add_common(powers, true);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant verification suite");
    add_common(verify, false);
    verify->add_flag("--gamma-flip", ov.gamma_flip,
                     "negative control: flip the spatial gamma signs");
    verify->add_option("--dump-gammas", dump_gammas, "write the gamma set as JSON for audit");

    CLI::App* spinor =
        app.add_subcommand("spinor", "assemble spinor solutions (CSV + residual report)");
    add_common(spinor, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!out_dir.empty()) ov.out_dir = out_dir;
    if (tol > 0.0) ov.tol = tol;
    if (threads > 0) ov.threads = threads;
    if (!dump_gammas.empty()) ov.dump_gammas = dump_gammas;

    if (powers->parsed()) return vekua::cmd_powers(config, ov);
    if (verify->parsed()) return vekua::cmd_verify(config, ov);
    return vekua::cmd_spinor(config, ov);
}
