#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vekua/formal_powers.hpp"
#include "vekua/potential.hpp"

namespace vekua {

/// Parsed model spec together with the JSON text it came from (echoed into
/// metadata sidecars).
struct ModelSpec {
    PotentialModel model = PotentialModel::zero(0.0, Complex{});
    std::string echo; // compact JSON of the "model" object
};

struct OutputGrid {
    Rect rect{-1.0, 1.0, -1.0, 1.0};
    int nx = 21, ny = 21;
};

struct PowersConfig {
    ModelSpec model;
    std::string equation = "W"; // "W" (outer) or "w" (plain)
    Point z0{0.0, 0.0};
    int N = 4;
    Bicomplex coefficient{1.0};
    OutputGrid grid;
    PowerQuadratureConfig quadrature;
    std::string csv_path = "powers.csv";
    std::string meta_path = "powers_meta.json";
    int threads = 1;
};

struct VerifyConfig {
    std::vector<std::string> checks; // empty list means: run none (explicit)
    bool checks_given = false;       // when absent in config, run all
    uint64_t seed = 20240917ull;
    std::string report_path = "verify_report.json";
};

struct SpinorPowerSpec {
    int n = 0;
    Bicomplex coefficient{1.0};
};

struct SpinorConfig {
    ModelSpec model;
    Point z0{0.0, 0.0};
    SpinorPowerSpec W_power;
    SpinorPowerSpec w_power;
    OutputGrid grid; // over (x1, x2)
    PowerQuadratureConfig quadrature;
    int residual_points = 20;
    std::string csv_path = "spinor.csv";
    std::string residuals_path = "spinor_residuals.json";
    int threads = 1;
};

/// Loaders throw ConfigError with the offending key named.
PowersConfig load_powers_config(const std::string& path);
VerifyConfig load_verify_config(const std::string& path);
SpinorConfig load_spinor_config(const std::string& path);

/// Polyline wire format: {"vertices": [[x, y], ...]}.
std::string polyline_to_json(const Polyline& path);
Polyline polyline_from_json(const std::string& text);

/// Residual record for z-plane checks: one JSON object per sample,
/// {"z": [x, y], "residual_norm": r, "mode": "plain"|"outer"}.
struct ResidualRecord {
    Point z;
    double residual_norm = 0.0;
    ConjugationMode mode = ConjugationMode::plain;
};

std::string residual_records_to_json(const std::vector<ResidualRecord>& records);

/// One CSV cell with 17 significant digits (round-trips doubles exactly).
std::string format_g17(double v);

/// Writes rows as comma-separated lines with a header row and LF endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace vekua
