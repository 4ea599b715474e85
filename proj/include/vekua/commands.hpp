#pragma once

#include <optional>
#include <string>

namespace vekua {

/// Flag overrides on top of the run configuration file.
struct CliOverrides {
    std::optional<std::string> out_dir; // redirect declared output files here
    std::optional<double> tol;          // quadrature rel_tol override
    std::optional<int> threads;
    bool gamma_flip = false;
    std::optional<std::string> dump_gammas; // write the gamma set as JSON
};

/// Exit codes: 0 ok, 1 verification failure, 2 config error,
/// 3 numerical non-convergence.
int cmd_powers(const std::string& config_path, const CliOverrides& ov);
int cmd_verify(const std::string& config_path, const CliOverrides& ov);
int cmd_spinor(const std::string& config_path, const CliOverrides& ov);

} // namespace vekua
