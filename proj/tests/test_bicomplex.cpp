#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vekua/bicomplex.hpp"

using namespace vekua;
using vekua::testing::make_rng;
using vekua::testing::random_bicomplex;

namespace {

// Independent oracle: exp by direct power-series summation.
Bicomplex exp_series(const Bicomplex& q, int terms = 40) {
    Bicomplex sum{1.0};
    Bicomplex term{1.0};
    for (int n = 1; n < terms; ++n) {
        term = term * q / static_cast<double>(n);
        sum += term;
    }
    return sum;
}

const Bicomplex k = Bicomplex::unit_k();
const Complex I(0.0, 1.0);

} // namespace

TEST_CASE("multiplication basics") {
    const Bicomplex a{3.0, 1.0};
    const Bicomplex b{1.0, 2.0};
    CHECK(approx_equal(a * b, Bicomplex{1.0, 7.0}, 1e-15));

    // (1 + i k)(1 - i k) = 0: the canonical zero-divisor product
    const Bicomplex zp{1.0, I};
    const Bicomplex zm{1.0, -I};
    CHECK(norm(zp * zm) == doctest::Approx(0.0));

    auto rng = make_rng();
    for (int t = 0; t < 20; ++t) {
        const Bicomplex q = random_bicomplex(rng);
        CHECK(approx_equal(q * Bicomplex{1.0}, q, 1e-15));
    }
}

TEST_CASE("ring properties on random samples") {
    auto rng = make_rng(7);
    for (int t = 0; t < 200; ++t) {
        const Bicomplex a = random_bicomplex(rng);
        const Bicomplex b = random_bicomplex(rng);
        const Bicomplex c = random_bicomplex(rng);
        const double scale = norm(a) * norm(b) * (1.0 + norm(c));
        CHECK(norm(a * b - b * a) <= 1e-12 * scale);
        CHECK(norm((a * b) * c - a * (b * c)) <= 1e-12 * scale);
        CHECK(norm(a * (b + c) - (a * b + a * c)) <= 1e-12 * scale);
        CHECK(norm(conj(a * b) - conj(a) * conj(b)) <= 1e-12 * scale);
    }
}

TEST_CASE("inverse") {
    CHECK(approx_equal(inverse(Bicomplex{2.0}), Bicomplex{0.5}, 1e-15));
    CHECK_THROWS_AS(inverse(Bicomplex{1.0, I}), ZeroDivisorOrZero);
    CHECK_THROWS_AS(inverse(Bicomplex{}), ZeroDivisorOrZero);
    CHECK(approx_equal(inverse(Bicomplex{1.0, 1.0}), Bicomplex{0.5, -0.5}, 1e-15));

    auto rng = make_rng(11);
    int checked = 0;
    while (checked < 100) {
        const Bicomplex q = random_bicomplex(rng);
        if (is_zero_divisor(q, 1e-6) || norm(q) < 1e-3) continue;
        ++checked;
        CHECK(approx_equal(inverse(q) * q, Bicomplex{1.0}, 1e-12));
        CHECK(approx_equal(inverse(inverse(q)), q, 1e-10 * (1.0 + norm(q))));
    }
}

TEST_CASE("exp") {
    CHECK(approx_equal(exp(Bicomplex{}), Bicomplex{1.0}, 1e-15));
    CHECK(approx_equal(exp(Bicomplex{I * M_PI}), Bicomplex{-1.0}, 1e-14));

    // frozen via the series oracle: exp((pi/2) k) = k
    const Bicomplex q{Complex(0.0), Complex(M_PI / 2.0)};
    const Bicomplex oracle = exp_series(q);
    CHECK(approx_equal(exp(q), oracle, 1e-13));
    CHECK(approx_equal(exp(q), k, 1e-13));

    auto rng = make_rng(13);
    for (int t = 0; t < 50; ++t) {
        const Bicomplex a = random_bicomplex(rng);
        const Bicomplex b = random_bicomplex(rng);
        CHECK(approx_equal(exp(a + b), exp(a) * exp(b), 1e-11 * norm(exp(a)) * norm(exp(b))));
        CHECK(approx_equal(exp(a) * exp(-a), Bicomplex{1.0}, 1e-12));
        CHECK(approx_equal(exp(a), exp_series(a), 1e-12));
    }
}

TEST_CASE("zero divisor detection") {
    CHECK(is_zero_divisor(Bicomplex{1.0, I}));
    CHECK(is_zero_divisor(Bicomplex{Complex(2.0, -1.0), -I * Complex(2.0, -1.0)}));
    CHECK_FALSE(is_zero_divisor(Bicomplex{1.0, 1.0}));
    CHECK_FALSE(is_zero_divisor(Bicomplex{}));
}

TEST_CASE("projectors") {
    CHECK(approx_equal(project(Bicomplex{1.0}, ProjSign::plus), Bicomplex{0.5, 0.5 * I}, 1e-15));
    CHECK(norm(project(Bicomplex{1.0, I}, ProjSign::minus)) == doctest::Approx(0.0));

    auto rng = make_rng(17);
    for (int t = 0; t < 50; ++t) {
        const Bicomplex q = random_bicomplex(rng);
        const Bicomplex qp = project(q, ProjSign::plus);
        const Bicomplex qm = project(q, ProjSign::minus);
        CHECK(approx_equal(qp + qm, q, 1e-13));
        CHECK(norm(qp * qm) <= 1e-13 * (1.0 + norm(q) * norm(q)));
        // idempotence
        CHECK(approx_equal(project(qp, ProjSign::plus), qp, 1e-13));
    }
}

TEST_CASE("zero divisors kill one projection") {
    auto rng = make_rng(19);
    for (int t = 0; t < 50; ++t) {
        const Complex c = testing::random_complex(rng);
        if (std::abs(c) < 1e-6) continue;
        const Bicomplex zd_plus{c, I * c};   // = 2 P+ c
        const Bicomplex zd_minus{c, -I * c}; // = 2 P- c
        REQUIRE(is_zero_divisor(zd_plus));
        REQUIRE(is_zero_divisor(zd_minus));
        CHECK(norm(project(zd_plus, ProjSign::minus)) <= 1e-13 * norm(zd_plus));
        CHECK(norm(project(zd_minus, ProjSign::plus)) <= 1e-13 * norm(zd_minus));
    }
}
