#include "vekua/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vekua/errors.hpp"

namespace vekua {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return j;
}

const json& require_key(const json& j, const std::string& key, const std::string& ctx) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError("missing key '" + ctx + key + "'");
    return *it;
}

double number_at(const json& j, const std::string& key, const std::string& ctx) {
    const json& v = require_key(j, key, ctx);
    if (!v.is_number()) throw ConfigError("key '" + ctx + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw ConfigError("key '" + key + "' must be a number");
    return it->get<double>();
}

Complex complex_at(const json& j, const std::string& key, const std::string& ctx,
                   Complex fallback = {0.0, 0.0}) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (it->is_number()) return {it->get<double>(), 0.0};
    if (it->is_array() && it->size() == 2 && (*it)[0].is_number() && (*it)[1].is_number())
        return {(*it)[0].get<double>(), (*it)[1].get<double>()};
    throw ConfigError("key '" + ctx + key + "' must be a number or [re, im]");
}

Point point_at(const json& j, const std::string& key, const std::string& ctx,
               Point fallback = {0.0, 0.0}) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_array() || it->size() != 2)
        throw ConfigError("key '" + ctx + key + "' must be [x, y]");
    return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

Bicomplex bicomplex_at(const json& j, const std::string& key, const std::string& ctx,
                       Bicomplex fallback = Bicomplex{1.0}) {
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_array() || it->size() != 4)
        throw ConfigError("key '" + ctx + key +
                          "' must be [re_sc, im_sc, re_vec, im_vec]");
    return {Complex((*it)[0].get<double>(), (*it)[1].get<double>()),
            Complex((*it)[2].get<double>(), (*it)[3].get<double>())};
}

Rect rect_from(const json& j, const std::string& ctx) {
    Rect r;
    r.x_min = number_at(j, "x_min", ctx);
    r.x_max = number_at(j, "x_max", ctx);
    r.y_min = number_at(j, "y_min", ctx);
    r.y_max = number_at(j, "y_max", ctx);
    if (!(r.x_min < r.x_max) || !(r.y_min < r.y_max))
        throw ConfigError("degenerate rectangle under '" + ctx + "'");
    return r;
}

std::function<double(double)> nu_from_json(const json& j, const std::string& ctx) {
    const std::string type = require_key(j, "type", ctx).get<std::string>();
    if (type == "constant") {
        const double v = number_at(j, "value", ctx);
        return [v](double) { return v; };
    }
    if (type == "linear") {
        const double a = number_or(j, "a", 0.0);
        const double b = number_at(j, "b", ctx);
        return [a, b](double x) { return a + b * x; };
    }
    if (type == "poly") {
        const json& cj = require_key(j, "coeffs", ctx);
        if (!cj.is_array() || cj.empty())
            throw ConfigError("key '" + ctx + "coeffs' must be a nonempty array");
        std::vector<double> coeffs = cj.get<std::vector<double>>();
        return [coeffs](double x) {
            double acc = 0.0;
            for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
            return acc;
        };
    }
    throw ConfigError("unknown nu type '" + type + "' under '" + ctx + "'");
}

ModelSpec model_from_json(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError("'" + ctx + "' must be an object");
    const std::string type = require_key(j, "type", ctx).get<std::string>();
    const double m = number_or(j, "m", 0.0);
    const Complex omega = complex_at(j, "omega", ctx);
    Rect domain{-2.0, 2.0, -2.0, 2.0};
    if (j.contains("domain")) domain = rect_from(j["domain"], ctx + "domain.");

    ModelSpec spec;
    if (type == "zero") {
        spec.model = PotentialModel::zero(m, omega, domain);
    } else if (type == "constant") {
        spec.model = PotentialModel::constant(number_at(j, "c", ctx), m, omega, domain);
    } else if (type == "linear") {
        spec.model = PotentialModel::linear(number_at(j, "slope", ctx), m, omega, domain);
    } else if (type == "table") {
        const json& xj = require_key(j, "x", ctx);
        const json& pj = require_key(j, "p", ctx);
        if (!xj.is_array() || !pj.is_array() || xj.size() != pj.size() || xj.size() < 2)
            throw ConfigError("keys '" + ctx + "x'/'" + ctx +
                              "p' must be equal-length arrays (>= 2 samples)");
        spec.model = PotentialModel::tabulated(xj.get<std::vector<double>>(),
                                               pj.get<std::vector<double>>(), m, omega, domain);
    } else if (type == "from_nu") {
        const auto nu = nu_from_json(require_key(j, "nu", ctx), ctx + "nu.");
        spec.model = PotentialModel::from_nu(nu, number_at(j, "x0", ctx),
                                             number_at(j, "f0", ctx), number_at(j, "df0", ctx),
                                             omega, domain);
    } else {
        throw ConfigError("unknown model type '" + type + "' under '" + ctx + "'");
    }
    spec.echo = j.dump();
    return spec;
}

OutputGrid grid_from_json(const json& j, const std::string& ctx) {
    OutputGrid g;
    g.rect = rect_from(j, ctx);
    g.nx = static_cast<int>(number_at(j, "nx", ctx));
    g.ny = static_cast<int>(number_at(j, "ny", ctx));
    if (g.nx < 1 || g.ny < 1) throw ConfigError("grid counts under '" + ctx + "' must be >= 1");
    return g;
}

PowerQuadratureConfig quadrature_from_json(const json& j) {
    PowerQuadratureConfig qc;
    if (!j.is_object()) return qc;
    qc.nodes = static_cast<int>(number_or(j, "nodes", qc.nodes));
    qc.rel_tol = number_or(j, "rel_tol", qc.rel_tol);
    qc.max_nodes = static_cast<int>(number_or(j, "max_nodes", qc.max_nodes));
    if (j.contains("adaptive")) qc.adaptive = j["adaptive"].get<bool>();
    if (qc.nodes < 3 || qc.max_nodes < qc.nodes)
        throw ConfigError("invalid 'quadrature' node counts");
    return qc;
}

} // namespace

PowersConfig load_powers_config(const std::string& path) {
    const json j = load_json_file(path);
    PowersConfig cfg;
    cfg.model = model_from_json(require_key(j, "model", ""), "model.");
    if (j.contains("equation")) {
        cfg.equation = j["equation"].get<std::string>();
        if (cfg.equation != "W" && cfg.equation != "w")
            throw ConfigError("key 'equation' must be \"W\" or \"w\"");
    }
    cfg.z0 = point_at(j, "z0", "");
    cfg.N = static_cast<int>(number_or(j, "N", 4));
    if (cfg.N < 0) throw ConfigError("key 'N' must be >= 0");
    cfg.coefficient = bicomplex_at(j, "coefficient", "");
    cfg.grid = grid_from_json(require_key(j, "grid", ""), "grid.");
    if (j.contains("quadrature")) cfg.quadrature = quadrature_from_json(j["quadrature"]);
    cfg.threads = static_cast<int>(number_or(j, "threads", 1));
    if (j.contains("output")) {
        const json& o = j["output"];
        if (o.contains("csv")) cfg.csv_path = o["csv"].get<std::string>();
        if (o.contains("meta")) cfg.meta_path = o["meta"].get<std::string>();
    }
    return cfg;
}

VerifyConfig load_verify_config(const std::string& path) {
    const json j = load_json_file(path);
    VerifyConfig cfg;
    if (j.contains("checks")) {
        const json& c = j["checks"];
        if (!c.is_array()) throw ConfigError("key 'checks' must be an array of names");
        cfg.checks = c.get<std::vector<std::string>>();
        cfg.checks_given = true;
    }
    cfg.seed = static_cast<uint64_t>(number_or(j, "seed", 20240917.0));
    if (j.contains("report")) cfg.report_path = j["report"].get<std::string>();
    return cfg;
}

SpinorConfig load_spinor_config(const std::string& path) {
    const json j = load_json_file(path);
    SpinorConfig cfg;
    cfg.model = model_from_json(require_key(j, "model", ""), "model.");
    cfg.z0 = point_at(j, "z0", "");
    const json& Wj = require_key(j, "W_power", "");
    cfg.W_power.n = static_cast<int>(number_at(Wj, "n", "W_power."));
    cfg.W_power.coefficient = bicomplex_at(Wj, "coefficient", "W_power.");
    const json& wj = require_key(j, "w_power", "");
    cfg.w_power.n = static_cast<int>(number_at(wj, "n", "w_power."));
    cfg.w_power.coefficient = bicomplex_at(wj, "coefficient", "w_power.");
    cfg.grid = grid_from_json(require_key(j, "grid", ""), "grid.");
    if (j.contains("quadrature")) cfg.quadrature = quadrature_from_json(j["quadrature"]);
    cfg.residual_points = static_cast<int>(number_or(j, "residual_points", 20));
    cfg.threads = static_cast<int>(number_or(j, "threads", 1));
    if (j.contains("output")) {
        const json& o = j["output"];
        if (o.contains("csv")) cfg.csv_path = o["csv"].get<std::string>();
        if (o.contains("residuals")) cfg.residuals_path = o["residuals"].get<std::string>();
    }
    return cfg;
}

std::string polyline_to_json(const Polyline& path) {
    json verts = json::array();
    for (const Point& p : path.vertices) verts.push_back({p.x, p.y});
    return json{{"vertices", verts}}.dump();
}

Polyline polyline_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("polyline parse error: ") + e.what());
    }
    const json& verts = require_key(j, "vertices", "polyline.");
    if (!verts.is_array() || verts.size() < 2)
        throw ConfigError("key 'polyline.vertices' must list >= 2 points");
    Polyline path;
    for (const auto& v : verts) {
        if (!v.is_array() || v.size() != 2)
            throw ConfigError("polyline vertices must be [x, y] pairs");
        path.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    for (size_t i = 1; i < path.vertices.size(); ++i)
        if (dist(path.vertices[i], path.vertices[i - 1]) == 0.0)
            throw ConfigError("polyline has coincident consecutive vertices");
    return path;
}

std::string residual_records_to_json(const std::vector<ResidualRecord>& records) {
    json arr = json::array();
    for (const ResidualRecord& r : records) {
        arr.push_back(json{{"z", {r.z.x, r.z.y}},
                           {"residual_norm", r.residual_norm},
                           {"mode", r.mode == ConjugationMode::plain ? "plain" : "outer"}});
    }
    return arr.dump(2);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << format_g17(row[i]);
        }
        out << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

} // namespace vekua
