#include "vekua/gamma.hpp"

#include <json.hpp>

namespace vekua {

namespace {

Mat4 make_gamma0() {
    Mat4 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 2) = -1.0;
    m(3, 3) = -1.0;
    return m;
}

// gamma_k = [[0, sigma_k], [-sigma_k, 0]]
Mat4 make_gamma(int k) {
    const Complex i(0.0, 1.0);
    std::array<std::array<Complex, 2>, 2> sigma{};
    switch (k) {
        case 1: sigma = {{{0.0, 1.0}, {1.0, 0.0}}}; break;
        case 2: sigma = {{{0.0, -i}, {i, 0.0}}}; break;
        default: sigma = {{{1.0, 0.0}, {0.0, -1.0}}}; break;
    }
    Mat4 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            m(r, c + 2) = sigma[static_cast<size_t>(r)][static_cast<size_t>(c)];
            m(r + 2, c) = -sigma[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
    return m;
}

} // namespace

GammaSet standard_gammas(bool flip_spatial) {
    GammaSet gs;
    gs.g[0] = make_gamma0();
    for (int k = 1; k <= 3; ++k) {
        gs.g[static_cast<size_t>(k)] = flip_spatial ? -make_gamma(k) : make_gamma(k);
    }
    gs.spatial_flipped = flip_spatial;
    return gs;
}

std::string gamma_set_to_json(const GammaSet& gs) {
    nlohmann::json root;
    root["convention"] = gs.spatial_flipped ? "dirac-standard-spatial-flipped" : "dirac-standard";
    nlohmann::json mats = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < 4; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < 4; ++c) {
                const Complex v = gs.gamma(k)(r, c);
                row.push_back({v.real(), v.imag()});
            }
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    root["gamma"] = mats;
    return root.dump(2);
}

} // namespace vekua
