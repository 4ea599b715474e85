#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vekua/potential.hpp"
#include "vekua/pseudoanalytic.hpp"

using namespace vekua;
using vekua::testing::make_rng;

namespace {
const Complex I(0.0, 1.0);
}

TEST_CASE("generating pairs of preset models") {
    SUBCASE("trivial model gives the classical pair") {
        const PotentialModel model = PotentialModel::zero(0.0, Complex(0.0, 0.0));
        const GeneratingPair pair = model.pair_sigma();
        for (const Point z : {Point{0.0, 0.0}, Point{0.7, -0.3}}) {
            CHECK(approx_equal(pair.F.value(z), Bicomplex{1.0}, 1e-14));
            CHECK(approx_equal(pair.G.value(z), Bicomplex::unit_k(), 1e-14));
        }
        const GeneratingPair pair1 = model.pair_tau();
        CHECK(approx_equal(pair1.F.value({0.4, 0.4}), Bicomplex{1.0}, 1e-14));
    }
    SUBCASE("mass-only model gives e^x, e^-x k") {
        const PotentialModel model = PotentialModel::zero(1.0, Complex(0.0, 0.0));
        const Point z{0.6, 0.2};
        CHECK(approx_equal(model.pair_sigma().F.value(z), Bicomplex{std::exp(0.6)}, 1e-13));
        CHECK(approx_equal(model.pair_sigma().G.value(z),
                           Bicomplex{Complex(0.0), std::exp(-0.6)}, 1e-13));
    }
    SUBCASE("exact partials agree with differencing") {
        const PotentialModel model = PotentialModel::linear(0.7, 0.4, Complex(0.3, 0.2));
        const GeneratingPair pair = model.pair_sigma();
        BicomplexField numeric = pair.F;
        numeric.ddx = nullptr;
        numeric.ddy = nullptr;
        const Point z{0.3, -0.5};
        CHECK(approx_equal(partial_x(pair.F, z), partial_x(numeric, z), 1e-8));
        CHECK(approx_equal(partial_y(pair.F, z), partial_y(numeric, z), 1e-8));
    }
    SUBCASE("successor property for random constant models") {
        auto rng = make_rng(51);
        const GridSpec grid{Rect{-1.0, 1.0, -1.0, 1.0}, 4, 4};
        for (int t = 0; t < 5; ++t) {
            const PotentialModel model = PotentialModel::constant(
                testing::uniform(rng, -0.5, 0.8), testing::uniform(rng, 0.0, 1.2),
                testing::random_complex(rng, 0.6));
            CHECK(is_successor(model.pair_sigma(), model.pair_tau(), grid));
            CHECK(is_successor(model.pair_tau(), model.pair_sigma(), grid));
        }
    }
    SUBCASE("antiderivative consistency P' = p") {
        const PotentialModel model = PotentialModel::linear(0.9, 0.0, Complex(0.0, 0.0));
        for (double x = -1.5; x <= 1.5; x += 0.25) {
            const double h = 1e-5;
            const double dP = (model.P(x + h) - model.P(x - h)) / (2.0 * h);
            CHECK(dP == doctest::Approx(model.p(x)).epsilon(1e-8));
        }
    }
}

TEST_CASE("tabulated potential interpolation") {
    std::vector<double> xs, ps;
    for (int i = 0; i <= 40; ++i) {
        const double x = -2.0 + 0.1 * i;
        xs.push_back(x);
        ps.push_back(std::sin(x));
    }
    const PotentialModel model = PotentialModel::tabulated(xs, ps, 0.0, Complex(0.0, 0.0));
    CHECK(model.p(0.33) == doctest::Approx(std::sin(0.33)).epsilon(1e-4));
    CHECK(model.p(-1.71) == doctest::Approx(std::sin(-1.71)).epsilon(1e-4));
    // P(x) = cos(-2) - cos(x) from the table start
    CHECK(model.P(1.2) == doctest::Approx(std::cos(-2.0) - std::cos(1.2)).epsilon(1e-4));
    // P' = p through the stored fine grid
    const double h = 1e-5;
    const double dP = (model.P(0.5 + h) - model.P(0.5 - h)) / (2.0 * h);
    CHECK(dP == doctest::Approx(model.p(0.5)).epsilon(1e-6));
}

TEST_CASE("Schroedinger potentials") {
    SUBCASE("constant case") {
        const PotentialModel model = PotentialModel::zero(0.8, Complex(0.5, 0.0));
        const SchrodingerPotentials sp = nu_potentials(model);
        const Complex expect = Complex(0.64 - 0.25, 0.0);
        CHECK(std::abs(sp.nu1(0.3) - expect) <= 1e-14);
        CHECK(std::abs(sp.nu2(-0.7) - expect) <= 1e-14);
    }
    SUBCASE("linear case") {
        const PotentialModel model = PotentialModel::linear(1.0, 0.0, Complex(0.0, 0.0));
        const SchrodingerPotentials sp = nu_potentials(model);
        for (double x = -1.0; x <= 1.0; x += 0.5) {
            CHECK(std::abs(sp.nu1(x) - Complex(1.0 + x * x)) <= 1e-12);
            CHECK(std::abs(sp.nu2(x) - Complex(-1.0 + x * x)) <= 1e-12);
        }
    }
    SUBCASE("sum and difference identities") {
        auto rng = make_rng(61);
        for (int t = 0; t < 5; ++t) {
            const PotentialModel model = PotentialModel::linear(
                testing::uniform(rng, -1.0, 1.0), testing::uniform(rng, 0.0, 1.0),
                testing::random_complex(rng, 0.8));
            const SchrodingerPotentials sp = nu_potentials(model);
            for (double x = -1.0; x <= 1.0; x += 0.4) {
                const Complex pm(model.p(x) + model.mass(), 0.0);
                const Complex w2 = model.omega() * model.omega();
                CHECK(std::abs(sp.nu1(x) - sp.nu2(x) - 2.0 * model.dp(x)) <= 1e-12);
                CHECK(std::abs(sp.nu1(x) + sp.nu2(x) - (2.0 * pm * pm - 2.0 * w2)) <= 1e-12);
            }
        }
    }
    SUBCASE("nu2 from the first-derivative quotient identity") {
        auto rng = make_rng(63);
        for (int t = 0; t < 5; ++t) {
            const PotentialModel model = PotentialModel::linear(
                testing::uniform(rng, -0.8, 0.8), testing::uniform(rng, 0.0, 1.0),
                testing::random_complex(rng, 0.6));
            const SchrodingerPotentials sp = nu_potentials(model);
            const BicomplexField f0 = model.pair_sigma().F;
            const Point z{0.4, -0.3};
            const Bicomplex quot =
                2.0 * dbar(f0, z) * dz(f0, z) * inverse(f0.value(z) * f0.value(z));
            // the quotient is a pure scalar here; nu2 = quot - nu1
            CHECK(std::abs(quot.sc - sp.nu1(z.x) - sp.nu2(z.x)) <= 1e-6);
            CHECK(norm(Bicomplex{quot.sc - sp.nu1(z.x), quot.vec} -
                       Bicomplex{sp.nu2(z.x), Complex(0.0)}) <= 1e-6);
        }
    }
}

TEST_CASE("model from nu") {
    const Rect domain{-1.0, 1.5, -1.0, 1.0};
    SUBCASE("nu = 0 gives p = 0") {
        const PotentialModel model =
            PotentialModel::from_nu([](double) { return 0.0; }, 0.0, 1.0, 0.0,
                                    Complex(0.0, 0.0), domain);
        for (double x = -0.9; x <= 1.4; x += 0.3) CHECK(std::abs(model.p(x)) <= 1e-10);
    }
    SUBCASE("nu = 1 with exponential start gives p = 1") {
        const PotentialModel model =
            PotentialModel::from_nu([](double) { return 1.0; }, 0.0, 1.0, 1.0,
                                    Complex(0.0, 0.0), domain);
        for (double x = -0.9; x <= 1.4; x += 0.3) {
            CHECK(model.p(x) == doctest::Approx(1.0).epsilon(1e-8));
            CHECK(model.P(x) == doctest::Approx(x).epsilon(1e-7));
        }
    }
    SUBCASE("Airy-type nu = x: nu = p' + p^2 by differencing") {
        const PotentialModel model =
            PotentialModel::from_nu([](double x) { return x; }, 0.0, 1.0, 0.0,
                                    Complex(0.0, 0.0), domain);
        for (double x = -0.8; x <= 1.3; x += 0.3) {
            const double h = 1e-4;
            const double dp_fd = (model.p(x + h) - model.p(x - h)) / (2.0 * h);
            CHECK(std::abs(dp_fd + model.p(x) * model.p(x) - x) <= 1e-6);
        }
    }
    SUBCASE("vanishing solutions are rejected") {
        // f'' = -f from cosine initial data crosses zero inside [-3, 3]
        CHECK_THROWS_AS(PotentialModel::from_nu([](double) { return -1.0; }, 0.0, 1.0, 0.0,
                                                Complex(0.0, 0.0), Rect{-3.0, 3.0, -1.0, 1.0}),
                        SolutionVanishes);
    }
}

TEST_CASE("Schroedinger residual stencil") {
    SUBCASE("harmonic function with zero potential") {
        auto u = [](Point z) { return Complex(z.x * z.x - z.y * z.y, 0.0); };
        auto nu = [](double) { return Complex(0.0, 0.0); };
        CHECK(std::abs(schrodinger_residual(u, nu, {0.3, 0.4}, 1e-3)) <= 1e-9);
    }
    SUBCASE("exponential with nu = 1") {
        auto u = [](Point z) { return Complex(std::exp(z.x), 0.0); };
        auto nu = [](double) { return Complex(1.0, 0.0); };
        CHECK(std::abs(schrodinger_residual(u, nu, {0.2, -0.1}, 1e-3)) <= 1e-9);
    }
    SUBCASE("non-solution shows a visible residual") {
        auto u = [](Point z) { return Complex(z.x * z.x, 0.0); };
        auto nu = [](double) { return Complex(0.0, 0.0); };
        CHECK(std::abs(schrodinger_residual(u, nu, {0.0, 0.0}, 1e-3)) > 1.0);
    }
    SUBCASE("unresolved stencils are rejected when guarded") {
        auto u = [](Point z) { return Complex(std::sin(300.0 * z.x), 0.0); };
        auto nu = [](double) { return Complex(0.0, 0.0); };
        CHECK_THROWS_AS(schrodinger_residual(u, nu, {0.31, 0.0}, 5e-2, 1e-6), StepTooLarge);
        CHECK_NOTHROW(schrodinger_residual(u, nu, {0.31, 0.0}, 5e-2));
    }
}

TEST_CASE("conjugate parts of solutions") {
    const PotentialModel model = PotentialModel::constant(0.5, 1.0, Complex(0.7, 0.0));
    const GridSpec grid{Rect{-0.5, 0.5, -0.5, 0.5}, 3, 3};

    SUBCASE("f0 solves both Schroedinger equations") {
        auto W = [model](Point z) { return model.f0(z); };
        const ConjugateReport rep = conjugate_parts_check(W, model, grid, 1e-3);
        CHECK(rep.max_residual_sc <= 1e-6);
        CHECK(rep.max_residual_vec <= 1e-6);
    }
    SUBCASE("a non-solution is flagged") {
        auto W = [](Point z) { return conj(to_bicomplex(z)); };
        const ConjugateReport rep = conjugate_parts_check(W, model, grid, 1e-3);
        CHECK(rep.max_residual_sc > 1e-2);
    }
}
