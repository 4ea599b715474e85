#include "vekua/formal_powers.hpp"

#include <cmath>

#include "vekua/errors.hpp"
#include "vekua/quadrature.hpp"

namespace vekua {

GeneratingSequence::GeneratingSequence(std::vector<GeneratingPair> pairs)
    : pairs_(std::make_shared<const std::vector<GeneratingPair>>(std::move(pairs))) {
    if (pairs_->empty()) throw Error("GeneratingSequence: no pairs");
}

const GeneratingPair& GeneratingSequence::pair_at(int m) const {
    const int p = period();
    int idx = m % p;
    if (idx < 0) idx += p;
    return (*pairs_)[static_cast<size_t>(idx)];
}

Bicomplex power0(const GeneratingSequence& seq, int m, const Bicomplex& a, Point z0, Point z) {
    const GeneratingPair& pair = seq.pair_at(m);
    const auto [lambda, mu] = decompose(pair, a, z0);
    return lambda * pair.F.value(z) + mu * pair.G.value(z);
}

namespace {

struct PathSegment {
    std::vector<Point> nodes; // uniform in t, including both endpoints
    Bicomplex dz;             // segment vector b - a as bicomplex
    double dt;                // parameter step
};

std::vector<PathSegment> sample_path(const std::vector<Point>& vertices, int nodes_per_segment) {
    std::vector<PathSegment> segs;
    for (size_t s = 0; s + 1 < vertices.size(); ++s) {
        const Point a = vertices[s];
        const Point b = vertices[s + 1];
        PathSegment seg;
        seg.dz = Bicomplex{Complex(b.x - a.x), Complex(b.y - a.y)};
        seg.dt = 1.0 / (nodes_per_segment - 1);
        seg.nodes.reserve(static_cast<size_t>(nodes_per_segment));
        for (int j = 0; j < nodes_per_segment; ++j) {
            const double t = static_cast<double>(j) / (nodes_per_segment - 1);
            seg.nodes.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
        segs.push_back(std::move(seg));
    }
    return segs;
}

struct PairValues {
    Bicomplex F, G;       // generators at the node
    Bicomplex Fstar, Gstar; // adjoint generators at the node
};

PairValues pair_values(const GeneratingPair& pair, Point z) {
    PairValues pv;
    pv.F = pair.F.value(z);
    pv.G = pair.G.value(z);
    const Complex den = pv.F.sc * pv.G.vec - pv.F.vec * pv.G.sc;
    if (std::abs(den) <= 1e-10 * norm(pv.F) * norm(pv.G))
        throw DegeneratePair("formal power recursion: pair degenerate on path");
    // (F conj(G) - conj(F) G)^-1 = k / (2 Vec(conj(F)G))
    const Bicomplex dinv{Complex(0.0), 0.5 / den};
    pv.Fstar = -2.0 * conj(pv.F) * dinv;
    pv.Gstar = 2.0 * conj(pv.G) * dinv;
    return pv;
}

// One full recursion pass at a fixed node schedule; returns the value at the
// final node of the final segment.
Bicomplex recursion_pass(const GeneratingSequence& seq, int n, const Bicomplex& a,
                         const std::vector<Point>& vertices, int nodes_per_segment, int base) {
    const std::vector<PathSegment> segs = sample_path(vertices, nodes_per_segment);
    const Point z0 = vertices.front();

    // level 0: linear combination of the deepest pair, coefficients fixed at z0
    const GeneratingPair& deepest = seq.pair_at(base + n);
    const auto [lambda, mu] = decompose(deepest, a, z0);
    std::vector<std::vector<Bicomplex>> values;
    values.reserve(segs.size());
    for (const PathSegment& seg : segs) {
        std::vector<Bicomplex> v;
        v.reserve(seg.nodes.size());
        for (const Point& zn : seg.nodes)
            v.push_back(lambda * deepest.F.value(zn) + mu * deepest.G.value(zn));
        values.push_back(std::move(v));
    }

    for (int level = 1; level <= n; ++level) {
        const GeneratingPair& pair = seq.pair_at(base + n - level);
        Bicomplex off_g, off_f; // integrals accumulated over previous segments
        std::vector<std::vector<Bicomplex>> next(values.size());
        for (size_t s = 0; s < segs.size(); ++s) {
            const PathSegment& seg = segs[s];
            const size_t q = seg.nodes.size();
            std::vector<Bicomplex> integrand_g(q), integrand_f(q);
            std::vector<PairValues> pv(q);
            for (size_t j = 0; j < q; ++j) {
                pv[j] = pair_values(pair, seg.nodes[j]);
                integrand_g[j] = pv[j].Gstar * values[s][j] * seg.dz;
                integrand_f[j] = pv[j].Fstar * values[s][j] * seg.dz;
            }
            const std::vector<Bicomplex> pre_g = cumulative_simpson(integrand_g, seg.dt);
            const std::vector<Bicomplex> pre_f = cumulative_simpson(integrand_f, seg.dt);
            std::vector<Bicomplex>& out = next[s];
            out.resize(q);
            for (size_t j = 0; j < q; ++j) {
                const Complex sc_g = (off_g + pre_g[j]).sc;
                const Complex sc_f = (off_f + pre_f[j]).sc;
                out[j] = static_cast<double>(level) * (pv[j].F * sc_g + pv[j].G * sc_f);
            }
            off_g += pre_g.back();
            off_f += pre_f.back();
        }
        values = std::move(next);
    }
    return values.back().back();
}

bool path_is_point(const std::vector<Point>& vertices) {
    for (size_t i = 1; i < vertices.size(); ++i)
        if (dist(vertices[i], vertices[0]) > 0.0) return false;
    return true;
}

Bicomplex build_along(const GeneratingSequence& seq, int n, const Bicomplex& a,
                      const std::vector<Point>& vertices, const PowerQuadratureConfig& qc,
                      int base, int* nodes_used) {
    if (n < 0) throw Error("build_power: negative exponent");
    if (vertices.size() < 2 || path_is_point(vertices)) {
        if (nodes_used) *nodes_used = 0;
        return n == 0 ? power0(seq, base + 0, a, vertices.front(), vertices.front())
                      : Bicomplex{};
    }
    if (n == 0) {
        if (nodes_used) *nodes_used = 0;
        return power0(seq, base, a, vertices.front(), vertices.back());
    }

    int nodes = qc.nodes | 1; // keep odd
    if (nodes < 3) nodes = 3;
    Bicomplex value = recursion_pass(seq, n, a, vertices, nodes, base);
    if (!qc.adaptive) {
        if (nodes_used) *nodes_used = nodes;
        return value;
    }
    while (true) {
        const int finer = 2 * (nodes - 1) + 1;
        if (finer > qc.max_nodes)
            throw QuadratureNotConverged("build_power: node cap reached before convergence");
        const Bicomplex refined = recursion_pass(seq, n, a, vertices, finer, base);
        const double scale = std::max(norm(refined), 1e-30);
        const bool done = norm(refined - value) <= qc.rel_tol * scale;
        nodes = finer;
        value = refined;
        if (done) break;
    }
    if (nodes_used) *nodes_used = nodes;
    return value;
}

} // namespace

Bicomplex build_power(const GeneratingSequence& seq, int n, const Bicomplex& a, Point z0,
                      Point z, const PowerQuadratureConfig& qc, int base, int* nodes_used) {
    return build_along(seq, n, a, {z0, z}, qc, base, nodes_used);
}

Bicomplex build_power_path(const GeneratingSequence& seq, int n, const Bicomplex& a,
                           const std::vector<Point>& vertices, const PowerQuadratureConfig& qc,
                           int base) {
    return build_along(seq, n, a, vertices, qc, base, nullptr);
}

double differential_relation_residual(const GeneratingSequence& seq, int n, const Bicomplex& a,
                                      Point z0, Point z, const PowerQuadratureConfig& qc,
                                      double fd_step) {
    if (n < 1) throw Error("differential_relation_residual: need n >= 1");
    // settle the node count once, then difference at a frozen schedule so the
    // quadrature error stays a smooth function of the evaluation point
    int nodes = 0;
    build_power(seq, n, a, z0, z, qc, 0, &nodes);
    PowerQuadratureConfig frozen = qc;
    frozen.adaptive = false;
    if (nodes > 0) frozen.nodes = nodes;

    BicomplexField zn;
    zn.h = fd_step;
    zn.value = [seq, n, a, z0, frozen](Point p) {
        return build_power(seq, n, a, z0, p, frozen);
    };
    const Bicomplex lhs = fg_derivative(seq.pair_at(0), zn, z);
    const Bicomplex rhs =
        static_cast<double>(n) * build_power(seq, n - 1, a, z0, z, frozen, 1);
    return norm(lhs - rhs);
}

TaylorExpansion taylor_coefficients(const BicomplexField& W, const GeneratingSequence& seq,
                                    Point z0, int N, double fd_step) {
    TaylorExpansion exp;
    exp.z0 = z0;
    exp.coefficients.resize(static_cast<size_t>(N) + 1);
    BicomplexField cur = W;
    exp.coefficients[0] = cur.value(z0);
    double factorial = 1.0;
    for (int m = 1; m <= N; ++m) {
        const GeneratingPair pair = seq.pair_at(m - 1);
        BicomplexField next;
        next.h = fd_step;
        next.value = [pair, cur](Point z) { return fg_derivative(pair, cur, z); };
        cur = next;
        factorial *= m;
        exp.coefficients[static_cast<size_t>(m)] = cur.value(z0) / factorial;
    }
    return exp;
}

Bicomplex evaluate_series(const TaylorExpansion& expansion, const GeneratingSequence& seq,
                          Point z, const PowerQuadratureConfig& qc) {
    Bicomplex acc;
    for (size_t n = 0; n < expansion.coefficients.size(); ++n)
        acc += build_power(seq, static_cast<int>(n), expansion.coefficients[n], expansion.z0, z,
                           qc);
    return acc;
}

} // namespace vekua
