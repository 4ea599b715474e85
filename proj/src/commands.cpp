#include "vekua/commands.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vekua/dirac_bridge.hpp"
#include "vekua/errors.hpp"
#include "vekua/gamma.hpp"
#include "vekua/io.hpp"
#include "vekua/verification.hpp"

namespace vekua {

namespace {

using nlohmann::json;

std::string redirect(const std::string& declared, const std::optional<std::string>& out_dir) {
    if (!out_dir) return declared;
    namespace fs = std::filesystem;
    fs::create_directories(*out_dir);
    return (fs::path(*out_dir) / fs::path(declared).filename()).string();
}

void parallel_rows(int n_rows, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int r = 0; r < n_rows; ++r) fn(r);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mtx;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                int r;
                while ((r = next.fetch_add(1)) < n_rows) fn(r);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(err_mtx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// removes files already written when a later stage fails
struct OutputCleaner {
    std::vector<std::string> written;
    bool commit = false;
    ~OutputCleaner() {
        if (commit) return;
        for (const auto& p : written) std::remove(p.c_str());
    }
};

json quadrature_meta(const PowerQuadratureConfig& qc, int max_nodes_used) {
    return json{{"nodes", qc.nodes},
                {"rel_tol", qc.rel_tol},
                {"max_nodes", qc.max_nodes},
                {"adaptive", qc.adaptive},
                {"max_nodes_used", max_nodes_used}};
}

json grid_meta(const OutputGrid& g) {
    return json{{"x_min", g.rect.x_min}, {"x_max", g.rect.x_max}, {"nx", g.nx},
                {"y_min", g.rect.y_min}, {"y_max", g.rect.y_max}, {"ny", g.ny}};
}

int numerical_exit(const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
}

int config_exit(const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
}

} // namespace

int cmd_powers(const std::string& config_path, const CliOverrides& ov) {
    PowersConfig cfg;
    try {
        cfg = load_powers_config(config_path);
    } catch (const ConfigError& e) {
        return config_exit(e);
    }
    if (ov.tol) cfg.quadrature.rel_tol = *ov.tol;
    if (ov.threads) cfg.threads = *ov.threads;
    cfg.csv_path = redirect(cfg.csv_path, ov.out_dir);
    cfg.meta_path = redirect(cfg.meta_path, ov.out_dir);

    const GeneratingSequence seq =
        cfg.equation == "W" ? cfg.model.model.sequence_W() : cfg.model.model.sequence_w();

    std::vector<std::string> header = {"x", "y"};
    for (int n = 0; n <= cfg.N; ++n) {
        const std::string base = "Z" + std::to_string(n) + "_";
        header.push_back(base + "re_sc");
        header.push_back(base + "im_sc");
        header.push_back(base + "re_vec");
        header.push_back(base + "im_vec");
    }

    const int nx = cfg.grid.nx, ny = cfg.grid.ny;
    std::vector<std::vector<double>> rows(static_cast<size_t>(nx) * ny);
    std::atomic<int> max_nodes_used{0};

    auto compute_row = [&](int iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double fx = nx > 1 ? static_cast<double>(ix) / (nx - 1) : 0.5;
            const double fy = ny > 1 ? static_cast<double>(iy) / (ny - 1) : 0.5;
            const Point z{cfg.grid.rect.x_min + fx * (cfg.grid.rect.x_max - cfg.grid.rect.x_min),
                          cfg.grid.rect.y_min + fy * (cfg.grid.rect.y_max - cfg.grid.rect.y_min)};
            std::vector<double>& row = rows[static_cast<size_t>(iy) * nx + ix];
            row.reserve(2 + 4 * (static_cast<size_t>(cfg.N) + 1));
            row.push_back(z.x);
            row.push_back(z.y);
            for (int n = 0; n <= cfg.N; ++n) {
                int used = 0;
                const Bicomplex v =
                    build_power(seq, n, cfg.coefficient, cfg.z0, z, cfg.quadrature, 0, &used);
                int cur = max_nodes_used.load();
                while (used > cur && !max_nodes_used.compare_exchange_weak(cur, used)) {
                }
                row.push_back(v.sc.real());
                row.push_back(v.sc.imag());
                row.push_back(v.vec.real());
                row.push_back(v.vec.imag());
            }
        }
    };

    OutputCleaner cleaner;
    try {
        parallel_rows(ny, cfg.threads, compute_row);

        write_csv(cfg.csv_path, header, rows);
        cleaner.written.push_back(cfg.csv_path);

        json meta;
        meta["model"] = json::parse(cfg.model.echo);
        meta["equation"] = cfg.equation;
        meta["z0"] = {cfg.z0.x, cfg.z0.y};
        meta["N"] = cfg.N;
        meta["coefficient"] = {cfg.coefficient.sc.real(), cfg.coefficient.sc.imag(),
                               cfg.coefficient.vec.real(), cfg.coefficient.vec.imag()};
        meta["grid"] = grid_meta(cfg.grid);
        meta["quadrature"] = quadrature_meta(cfg.quadrature, max_nodes_used.load());
        meta["columns"] = header;
        write_text_file(cfg.meta_path, meta.dump(2) + "\n");
        cleaner.written.push_back(cfg.meta_path);
        cleaner.commit = true;
    } catch (const QuadratureNotConverged& e) {
        return numerical_exit(e);
    } catch (const ConfigError& e) {
        return config_exit(e);
    } catch (const Error& e) {
        return numerical_exit(e);
    }
    return 0;
}

int cmd_verify(const std::string& config_path, const CliOverrides& ov) {
    VerifyConfig cfg;
    try {
        cfg = load_verify_config(config_path);
    } catch (const ConfigError& e) {
        return config_exit(e);
    }
    cfg.report_path = redirect(cfg.report_path, ov.out_dir);

    if (ov.dump_gammas) {
        try {
            write_text_file(redirect(*ov.dump_gammas, ov.out_dir),
                            gamma_set_to_json(standard_gammas(ov.gamma_flip)) + "\n");
        } catch (const Error& e) {
            return numerical_exit(e);
        }
    }

    const std::vector<std::string> names = cfg.checks_given ? cfg.checks : all_check_names();
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.gamma_flip = ov.gamma_flip;

    std::vector<CheckResult> results;
    try {
        results = run_checks(names, opt);
    } catch (const ConfigError& e) {
        return config_exit(e);
    } catch (const Error& e) {
        return numerical_exit(e);
    }

    json report = json::array();
    bool all_pass = true;
    for (const CheckResult& r : results) {
        std::printf("[%s] %-26s max_residual=%.6e tolerance=%.3e%s%s\n",
                    r.pass ? "pass" : "FAIL", r.name.c_str(), r.max_residual, r.tolerance,
                    r.details.empty() ? "" : " -- ", r.details.c_str());
        report.push_back(json{{"check", r.name},
                              {"max_residual", r.max_residual},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass},
                              {"details", r.details}});
        all_pass = all_pass && r.pass;
    }
    try {
        write_text_file(cfg.report_path, report.dump(2) + "\n");
    } catch (const Error& e) {
        return numerical_exit(e);
    }
    return all_pass ? 0 : 1;
}

int cmd_spinor(const std::string& config_path, const CliOverrides& ov) {
    SpinorConfig cfg;
    try {
        cfg = load_spinor_config(config_path);
    } catch (const ConfigError& e) {
        return config_exit(e);
    }
    if (ov.tol) cfg.quadrature.rel_tol = *ov.tol;
    if (ov.threads) cfg.threads = *ov.threads;
    cfg.csv_path = redirect(cfg.csv_path, ov.out_dir);
    cfg.residuals_path = redirect(cfg.residuals_path, ov.out_dir);

    const PotentialModel& model = cfg.model.model;
    const GeneratingSequence seq_W = model.sequence_W();
    const GeneratingSequence seq_w = model.sequence_w();

    // frozen node schedule keeps the quadrature error a smooth function of
    // the evaluation point, which the residual differencing relies on
    PowerQuadratureConfig frozen = cfg.quadrature;
    frozen.adaptive = false;

    BicomplexField W, w;
    W.h = w.h = 1e-4;
    const Point z0 = cfg.z0;
    const SpinorPowerSpec Wp = cfg.W_power, wp = cfg.w_power;
    W.value = [seq_W, Wp, z0, frozen](Point z) {
        return build_power(seq_W, Wp.n, Wp.coefficient, z0, z, frozen);
    };
    w.value = [seq_w, wp, z0, frozen](Point z) {
        return build_power(seq_w, wp.n, wp.coefficient, z0, z, frozen);
    };
    const SpinorField phi = spinor_field(assemble_quaternion(W, w));

    const std::vector<std::string> header = {"x1",      "x2",      "re_phi0", "im_phi0",
                                             "re_phi1", "im_phi1", "re_phi2", "im_phi2",
                                             "re_phi3", "im_phi3"};
    const int nx = cfg.grid.nx, ny = cfg.grid.ny; // x1 columns, x2 rows
    std::vector<std::vector<double>> rows(static_cast<size_t>(nx) * ny);

    auto compute_row = [&](int iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double f1 = nx > 1 ? static_cast<double>(ix) / (nx - 1) : 0.5;
            const double f2 = ny > 1 ? static_cast<double>(iy) / (ny - 1) : 0.5;
            const Vec3 x{cfg.grid.rect.x_min + f1 * (cfg.grid.rect.x_max - cfg.grid.rect.x_min),
                         cfg.grid.rect.y_min + f2 * (cfg.grid.rect.y_max - cfg.grid.rect.y_min),
                         0.0};
            const SpinorValue v = phi.value(x);
            std::vector<double>& row = rows[static_cast<size_t>(iy) * nx + ix];
            row = {x.x1,        x.x2,        v[0].real(), v[0].imag(), v[1].real(),
                   v[1].imag(), v[2].real(), v[2].imag(), v[3].real(), v[3].imag()};
        }
    };

    OutputCleaner cleaner;
    try {
        parallel_rows(ny, cfg.threads, compute_row);
        write_csv(cfg.csv_path, header, rows);
        cleaner.written.push_back(cfg.csv_path);

        // residual report on a deterministic interior lattice
        PotentialData pot;
        pot.m = model.mass();
        pot.omega = model.omega();
        pot.p_sc = [model](const Vec3& x) { return model.p(x.x2); };
        const GammaSet gammas = standard_gammas(ov.gamma_flip);

        json points = json::array();
        double max_res = 0.0;
        const double golden = 0.6180339887498949;
        for (int k = 0; k < cfg.residual_points; ++k) {
            const double u = std::fmod(0.21 + golden * k, 1.0);
            const double v = std::fmod(0.37 + golden * golden * k, 1.0);
            const Vec3 x{
                cfg.grid.rect.x_min + (0.15 + 0.7 * u) * (cfg.grid.rect.x_max - cfg.grid.rect.x_min),
                cfg.grid.rect.y_min + (0.15 + 0.7 * v) * (cfg.grid.rect.y_max - cfg.grid.rect.y_min),
                0.0};
            const double res = norm(apply_Dirac_omega(phi, x, pot, gammas, 1e-2));
            max_res = std::max(max_res, res);
            points.push_back(json{{"x1", x.x1}, {"x2", x.x2}, {"residual_norm", res}});
        }
        json report;
        report["points"] = points;
        report["max_residual"] = max_res;
        write_text_file(cfg.residuals_path, report.dump(2) + "\n");
        cleaner.written.push_back(cfg.residuals_path);
        cleaner.commit = true;
    } catch (const QuadratureNotConverged& e) {
        return numerical_exit(e);
    } catch (const ConfigError& e) {
        return config_exit(e);
    } catch (const Error& e) {
        return numerical_exit(e);
    }
    return 0;
}

} // namespace vekua
