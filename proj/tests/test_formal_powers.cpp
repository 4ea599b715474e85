#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/potential.hpp"

using namespace vekua;
using vekua::testing::make_rng;

namespace {

const Complex I(0.0, 1.0);
const Bicomplex K = Bicomplex::unit_k();

Bicomplex bipow(const Bicomplex& z, int n) {
    Bicomplex acc{1.0};
    for (int i = 0; i < n; ++i) acc = acc * z;
    return acc;
}

PowerQuadratureConfig frozen(int nodes = 1025) {
    PowerQuadratureConfig qc;
    qc.nodes = nodes;
    qc.adaptive = false;
    return qc;
}

} // namespace

TEST_CASE("generating sequence indexing") {
    const PotentialModel model = PotentialModel::constant(0.4, 0.8, Complex(0.5, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    CHECK(seq.period() == 2);
    const Point z{0.3, 0.3};
    CHECK(approx_equal(seq.pair_at(0).F.value(z), seq.pair_at(2).F.value(z), 1e-14));
    CHECK(approx_equal(seq.pair_at(1).F.value(z), seq.pair_at(-1).F.value(z), 1e-14));
    CHECK(approx_equal(seq.pair_at(5).G.value(z), seq.pair_at(1).G.value(z), 1e-14));
}

TEST_CASE("power0") {
    SUBCASE("trivial model is identically the coefficient") {
        const PotentialModel model = PotentialModel::zero(0.0, Complex(0.0, 0.0));
        const GeneratingSequence seq = model.sequence_W();
        const Bicomplex val = power0(seq, 0, Bicomplex{1.0}, {0.0, 0.0}, {0.8, -0.6});
        CHECK(approx_equal(val, Bicomplex{1.0}, 1e-14));
    }
    SUBCASE("a = F(z0) reproduces F") {
        const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
        const GeneratingSequence seq = model.sequence_W();
        const Point z0{0.2, -0.1};
        const Point z{-0.4, 0.6};
        const GeneratingPair& pair = seq.pair_at(0);
        const Bicomplex val = power0(seq, 0, pair.F.value(z0), z0, z);
        CHECK(approx_equal(val, pair.F.value(z), 1e-12));
    }
    SUBCASE("diagonal solve for the scalar-potential pair") {
        const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
        const GeneratingSequence seq = model.sequence_W();
        const Point z{0.4, 0.3};
        // z0 = 0, a = 1 + k: lambda = mu = 1, value = e^sigma + e^-sigma k
        const Bicomplex val = power0(seq, 0, Bicomplex{1.0, 1.0}, {0.0, 0.0}, z);
        const Complex es = std::exp(model.sigma(z));
        CHECK(approx_equal(val, Bicomplex{es, 1.0 / es}, 1e-12));
    }
}

TEST_CASE("classical powers of the trivial model") {
    const PotentialModel model = PotentialModel::zero(0.0, Complex(0.0, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    PowerQuadratureConfig qc;
    for (const Point z : {Point{0.8, 0.5}, Point{-0.6, 0.9}, Point{0.3, -0.3}}) {
        for (int n = 0; n <= 6; ++n) {
            const Bicomplex got = build_power(seq, n, Bicomplex{1.0}, z0, z, qc);
            const Bicomplex expect = bipow(to_bicomplex(z), n);
            CHECK(norm(got - expect) <= 1e-9 * std::max(norm(expect), 1e-3));
        }
    }
}

TEST_CASE("power at the center") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.3, -0.7};
    const Bicomplex a{Complex(0.9, 0.1), Complex(-0.3, 0.2)};
    CHECK(approx_equal(build_power(seq, 0, a, z0, z0), a, 1e-13));
    for (int n = 1; n <= 3; ++n) CHECK(norm(build_power(seq, n, a, z0, z0)) <= 1e-14);
}

TEST_CASE("recursion agrees with the Gauss-Legendre FG-integral route") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const Point z{0.7, -0.5};
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.4, -0.2)};

    SUBCASE("level 1") {
        // Z^(1) = int Z_1^(0) d_(F0,G0): independent quadrature of the same integral
        auto integrand = [&](Point p) { return power0(seq, 1, a, z0, p); };
        const Bicomplex via_gauss = fg_integral(seq.pair_at(0), integrand, segment(z0, z));
        const Bicomplex via_simpson = build_power(seq, 1, a, z0, z);
        CHECK(norm(via_gauss - via_simpson) <= 1e-9 * std::max(1.0, norm(via_gauss)));
    }
    SUBCASE("level 2") {
        // Z^(2) = 2 int Z_1^(1) d_(F0,G0), with Z_1^(1) built at base 1
        const PowerQuadratureConfig inner = frozen(2049);
        auto integrand = [&](Point p) { return build_power(seq, 1, a, z0, p, inner, 1); };
        const Bicomplex via_gauss =
            2.0 * fg_integral(seq.pair_at(0), integrand, segment(z0, z));
        const Bicomplex via_simpson = build_power(seq, 2, a, z0, z);
        CHECK(norm(via_gauss - via_simpson) <= 1e-8 * std::max(1.0, norm(via_gauss)));
    }
}

TEST_CASE("coefficient linearity") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen();
    const Complex ap(0.7, -0.2), app(-0.4, 0.9);
    for (const Point z : {Point{0.5, 0.2}, Point{-0.3, -0.6}}) {
        for (int n = 1; n <= 3; ++n) {
            const Bicomplex lhs = build_power(seq, n, Bicomplex{ap, app}, z0, z, qc);
            const Bicomplex rhs = ap * build_power(seq, n, Bicomplex{1.0}, z0, z, qc) +
                                  app * build_power(seq, n, K, z0, z, qc);
            CHECK(norm(lhs - rhs) <= 1e-10 * std::max(1.0, norm(lhs)));
        }
    }
}

TEST_CASE("differential relations") {
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.3, 0.0)};
    SUBCASE("trivial model, n = 2") {
        const PotentialModel model = PotentialModel::zero(0.0, Complex(0.0, 0.0));
        CHECK(differential_relation_residual(model.sequence_W(), 2, Bicomplex{1.0}, {0.0, 0.0},
                                             {0.4, 0.3}) <= 1e-6);
    }
    SUBCASE("constant potential, n = 1") {
        const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
        CHECK(differential_relation_residual(model.sequence_W(), 1, a, {0.0, 0.0},
                                             {0.3, -0.4}) <= 1e-5);
    }
    SUBCASE("derivative of Z^(0) vanishes") {
        const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
        const GeneratingSequence seq = model.sequence_W();
        BicomplexField z0field;
        z0field.h = 1e-4;
        const Point z0{0.0, 0.0};
        z0field.value = [seq, a, z0](Point p) { return power0(seq, 0, a, z0, p); };
        CHECK(norm(fg_derivative(seq.pair_at(0), z0field, {0.5, 0.1})) <= 1e-8);
    }
}

TEST_CASE("successor derivative theorem") {
    // the FG-derivative of a solution solves the successor equation
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.2, 0.1)};
    const PowerQuadratureConfig qc = frozen();

    BicomplexField Z2;
    Z2.h = 1e-3;
    Z2.value = [seq, a, z0, qc](Point p) { return build_power(seq, 2, a, z0, p, qc); };

    const GeneratingPair pair0 = seq.pair_at(0);
    BicomplexField dZ2;
    dZ2.h = 1e-3;
    dZ2.value = [pair0, Z2](Point p) { return fg_derivative(pair0, Z2, p); };

    const GeneratingPair pair1 = seq.pair_at(1);
    VekuaCoefficients succ;
    succ.mode = ConjugationMode::plain;
    succ.a = [pair1](Point p) { return char_coeffs(pair1, p).a; };
    succ.b = [pair1](Point p) { return char_coeffs(pair1, p).b; };

    for (const Point z : {Point{0.4, 0.2}, Point{-0.3, 0.5}}) {
        CHECK(norm(vekua_residual(succ, dZ2, z)) <= 1e-5);
    }
}

TEST_CASE("antiderivative identity") {
    // int_{z0}^{z} Wdot = W(z) - phi(z0) F(z) - psi(z0) G(z), exercised with
    // W = Z^(1) centered away from z0, whose derivative is Z_1^(0) exactly
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const GeneratingPair pair0 = seq.pair_at(0);
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.3, -0.2)};
    const Point zc{0.15, 0.1};
    const Point z0{-0.4, 0.35};
    const Point z{0.55, -0.3};

    PowerQuadratureConfig qc;
    qc.rel_tol = 1e-11;
    auto wdot = [&](Point p) { return power0(seq, 1, a, zc, p); };
    const Bicomplex integral = fg_integral(pair0, wdot, segment(z0, z));

    const Bicomplex W_z = build_power(seq, 1, a, zc, z, qc);
    const Bicomplex W_z0 = build_power(seq, 1, a, zc, z0, qc);
    const auto [phi0, psi0] = decompose(pair0, W_z0, z0);
    const Bicomplex expect = W_z - phi0 * pair0.F.value(z) - psi0 * pair0.G.value(z);
    CHECK(norm(integral - expect) <= 1e-8 * std::max(1.0, norm(expect)));
}

TEST_CASE("pair validation over the domain grid") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    CHECK_NOTHROW(validate_pair(model.pair_sigma()));
    CHECK_NOTHROW(validate_pair(model.pair_tau_k()));
    GeneratingPair bad;
    bad.F = constant_field(Bicomplex{1.0});
    bad.G = constant_field(Bicomplex{Complex(0.0, 1.0)}); // Vec(conj(F)G) = 0
    CHECK_THROWS_AS(validate_pair(bad), DegeneratePair);
}

TEST_CASE("path independence across polylines") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Bicomplex a{Complex(1.0, 0.0), Complex(0.2, 0.1)};
    const Point z0{-0.2, 0.1};
    const Point z{0.6, -0.5};
    PowerQuadratureConfig qc;
    qc.rel_tol = 1e-10;
    for (int n = 1; n <= 3; ++n) {
        const Bicomplex direct = build_power(seq, n, a, z0, z, qc);
        const Bicomplex dogleg = build_power_path(seq, n, a, {z0, Point{z.x, z0.y}, z}, qc);
        CHECK(norm(direct - dogleg) <= 1e-6 * std::max(1.0, norm(direct)));
    }
}

TEST_CASE("Taylor coefficients") {
    const PotentialModel model = PotentialModel::constant(0.3, 0.5, Complex(0.4, 0.0));
    const GeneratingSequence seq = model.sequence_W();
    const Point z0{0.0, 0.0};
    const PowerQuadratureConfig qc = frozen();

    SUBCASE("Z^(0) has a single nonzero coefficient") {
        const Bicomplex a{Complex(1.0, 0.0), Complex(0.0, 0.0)};
        BicomplexField W;
        W.h = 2e-2;
        W.value = [seq, a, z0](Point p) { return power0(seq, 0, a, z0, p); };
        const TaylorExpansion exp = taylor_coefficients(W, seq, z0, 2);
        CHECK(norm(exp.coefficients[0] - a) <= 1e-10);
        CHECK(norm(exp.coefficients[1]) <= 1e-6);
        CHECK(norm(exp.coefficients[2]) <= 1e-4);
    }
    SUBCASE("generator F has coefficient F(z0) and no higher terms") {
        const GeneratingPair pair = seq.pair_at(0);
        BicomplexField W = pair.F;
        W.h = 2e-2;
        const TaylorExpansion exp = taylor_coefficients(W, seq, z0, 2);
        CHECK(norm(exp.coefficients[0] - pair.F.value(z0)) <= 1e-12);
        CHECK(norm(exp.coefficients[1]) <= 1e-6);
        CHECK(norm(exp.coefficients[2]) <= 1e-4);
    }
    SUBCASE("round trip through two powers") {
        const Bicomplex a0{Complex(1.0, 0.0), Complex(0.0, 0.0)};
        const Bicomplex a1{Complex(2.0, 0.0), Complex(0.0, 0.0)};
        BicomplexField W;
        W.h = 2e-2;
        W.value = [seq, a0, a1, z0, qc](Point p) {
            return build_power(seq, 0, a0, z0, p, qc) + build_power(seq, 1, a1, z0, p, qc);
        };
        const TaylorExpansion exp = taylor_coefficients(W, seq, z0, 2);
        CHECK(norm(exp.coefficients[0] - a0) <= 1e-3);
        CHECK(norm(exp.coefficients[1] - a1) <= 1e-3);
        CHECK(norm(exp.coefficients[2]) <= 1e-3);
    }
}

TEST_CASE("series evaluation") {
    const PotentialModel trivial = PotentialModel::zero(0.0, Complex(0.0, 0.0));
    const GeneratingSequence seq = trivial.sequence_W();

    SUBCASE("empty coefficients sum to zero") {
        TaylorExpansion exp;
        exp.z0 = {0.0, 0.0};
        exp.coefficients.assign(4, Bicomplex{});
        CHECK(norm(evaluate_series(exp, seq, {0.5, 0.5})) <= 1e-12);
    }
    SUBCASE("exponential series on the trivial model") {
        TaylorExpansion exp;
        exp.z0 = {0.0, 0.0};
        double fact = 1.0;
        for (int n = 0; n <= 8; ++n) {
            if (n > 0) fact *= n;
            exp.coefficients.push_back(Bicomplex{Complex(1.0 / fact)});
        }
        const Point z{0.5, 0.5};
        const Bicomplex got = evaluate_series(exp, seq, z);
        const Bicomplex expect = vekua::exp(to_bicomplex(z));
        CHECK(norm(got - expect) <= 1e-6);
    }
}
