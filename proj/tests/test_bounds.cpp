#include <doctest.h>

#include <cmath>
#include <complex>

#include "heightbound/bounds.hpp"
#include "oracles.hpp"

using namespace heightbound;
using cplx = std::complex<double>;

// reference decimals below come from a 60-digit evaluation of the closed
// forms, rounded to double

TEST_CASE("f_value") {
    CHECK(f_value(cplx(0, 1), 0.25) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(f_value(cplx(1, 0), 0.31) == 0.0);
    CHECK(f_value(cplx(0, 0), 0.2) == 0.0);
    const double x1 = std::sqrt(1.0 / 3.0);
    CHECK(f_value(cplx(x1, 0), 0.25) == doctest::Approx(0.78765680305663566).epsilon(1e-12));
}

TEST_CASE("g_value and its reciprocal symmetry") {
    CHECK(g_value(cplx(0, 1), 0.25) == doctest::Approx(1.1892071150027211).epsilon(1e-14));
    CHECK(g_value(cplx(2, 0), 0.25) == doctest::Approx(std::pow(6.0, 0.25) / 2.0).epsilon(1e-14));
    CHECK(g_value(cplx(0.5, 0), 0.25) == doctest::Approx(g_value(cplx(2, 0), 0.25)).epsilon(1e-12));
    CHECK_THROWS_AS(g_value(cplx(0, 0), 0.25), std::domain_error);

    oracles::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const double a = 0.01 + 0.47 * rng.real01();
        const double radius = std::exp(std::log(1e-2) + rng.real01() * std::log(1e4));
        const double theta = 2 * 3.14159265358979323846 * rng.real01();
        const cplx x = std::polar(radius, theta);
        const double lhs = g_value(x, a);
        const double rhs = g_value(1.0 / x, a);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * (1.0 + lhs));
    }
}

TEST_CASE("lemma_params closed forms") {
    const LemmaParams lp = lemma_params(0.25);
    CHECK(lp.m_real == doctest::Approx(0.78765680305663566).epsilon(1e-14));
    CHECK(lp.m_complex == doctest::Approx(1.1892071150027211).epsilon(1e-14));
    CHECK(lp.x1 == doctest::Approx(0.57735026918962576).epsilon(1e-14));
    CHECK(lp.x2 == doctest::Approx(1.7320508075688773).epsilon(1e-14));

    CHECK(lemma_params(1e-6).m_complex == doctest::Approx(1.0).epsilon(1e-5));

    CHECK_THROWS_AS(lemma_params(0.0), std::domain_error);
    CHECK_THROWS_AS(lemma_params(0.5), std::domain_error);
    CHECK_THROWS_AS(lemma_params(-0.1), std::domain_error);
}

TEST_CASE("lemma invariants on a parameter grid") {
    for (int k = 0; k < 50; ++k) {
        const double a = 0.01 + (k + 0.5) * 0.48 / 50.0;
        const LemmaParams lp = lemma_params(a);
        CHECK(lp.m_real > 0.0);
        CHECK(lp.m_real < 1.0);
        CHECK(lp.m_complex > 1.0);
        CHECK(lp.m_complex < std::sqrt(2.0));
        CHECK(std::fabs(lp.x1 * lp.x2 - 1.0) <= 1e-12);
        CHECK(std::fabs(g_value(cplx(lp.x1, 0), a) - lp.m_real) <= 1e-10);
        CHECK(std::fabs(g_value(cplx(lp.x2, 0), a) - lp.m_real) <= 1e-10);
    }
}

TEST_CASE("numeric_maxima matches the closed forms") {
    for (double a : {0.1, 0.25, 0.45}) {
        const LemmaParams lp = lemma_params(a);
        const MaximaEstimate est = numeric_maxima(a);
        CHECK(std::fabs(est.m_real - lp.m_real) <= 1e-9);
        CHECK(std::fabs(est.m_complex - lp.m_complex) <= 1e-9);
        CHECK(std::fabs(est.x_real - lp.x1) <= 1e-6);
        CHECK(std::fabs(est.rho_complex - 1.0) <= 1e-6);
    }
}

TEST_CASE("g stays below the maxima on quasi-random samples") {
    oracles::Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        const double a = 0.01 + (k + 0.5) * 0.48 / 50.0;
        const LemmaParams lp = lemma_params(a);
        double worst_complex = 0, worst_real = 0;
        for (int i = 0; i < 100000; ++i) {
            const double r = 1e3 * std::sqrt(rng.real01() + 1e-12);
            const cplx x = std::polar(r, 2 * 3.14159265358979323846 * rng.real01());
            worst_complex = std::max(worst_complex, g_value(x, a));
            double xr = (rng.real01() - 0.5) * 2e3;
            if (xr == 0.0)
                xr = 0.5;
            worst_real = std::max(worst_real, g_value(cplx(xr, 0), a));
        }
        CHECK(worst_complex <= lp.m_complex + 1e-12);
        CHECK(worst_real <= lp.m_real + 1e-12);
    }
}

TEST_CASE("optimal_a") {
    CHECK(optimal_a(1.0) == doctest::Approx(0.22360679774997897).epsilon(1e-15));
    CHECK(optimal_a(0.5) == doctest::Approx(0.12126781251816649).epsilon(1e-15));
    CHECK(optimal_a(0.25) == doctest::Approx(0.031189143077590267).epsilon(1e-14));
    // monotone decreasing in 1/R, tends to 0 from above
    double prev = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double a = optimal_a(k / 100.0);
        CHECK(a > prev);
        CHECK(a < 0.5);
        prev = a;
    }
    CHECK(optimal_a(0.01) > 0.0);
    CHECK(optimal_a(0.01) < 1e-25);
    CHECK_THROWS_AS(optimal_a(0.0), std::domain_error);
    CHECK_THROWS_AS(optimal_a(1.5), std::domain_error);
    CHECK_THROWS_AS(optimal_a(-1.0), std::domain_error);
}

TEST_CASE("garza_bound reference values") {
    CHECK(garza_bound(1.0) == doctest::Approx(1.2720196495140690).epsilon(1e-15));
    CHECK(garza_bound(0.5) == doctest::Approx(1.0638204379865379).epsilon(1e-15));
    CHECK(garza_bound(1.0 / 3.0) == doctest::Approx(1.0209968539339510).epsilon(1e-15));
    CHECK_THROWS_AS(garza_bound(0.0), std::domain_error);
    CHECK_THROWS_AS(garza_bound(2.0), std::domain_error);
}

TEST_CASE("garza_bound is increasing and tends to 1") {
    double prev = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double b = garza_bound(k / 100.0);
        CHECK(b > prev - 1e-15);
        prev = b;
    }
    CHECK(garza_bound(0.01) < 1.001);
    CHECK(garza_bound(0.01) >= 1.0);
}

TEST_CASE("schinzel_bound") {
    CHECK(std::fabs(schinzel_bound() - garza_bound(1.0)) <= 1e-15);
    CHECK(std::fabs(schinzel_bound() * schinzel_bound() - (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-15);
    CHECK(schinzel_bound() == doctest::Approx(1.2720196495140690).epsilon(1e-15));
}

TEST_CASE("identity chain: closed-form maxima reproduce B(R)") {
    CHECK(bound_identity_chain(1.0) <= 1e-12);
    CHECK(bound_identity_chain(0.5) <= 1e-12);
    CHECK(bound_identity_chain(0.77) <= 1e-12);
    // the R = 1 chain equals M_R^{-1}
    const LemmaParams lp = lemma_params(optimal_a(1.0));
    CHECK(1.0 / lp.m_real == doctest::Approx(1.2720196495140690).epsilon(1e-14));
}

TEST_CASE("generalized_bound") {
    const double a1 = optimal_a(1.0);
    CHECK(generalized_bound({0.5 - a1, a1}, 1.0) ==
          doctest::Approx(garza_bound(1.0)).epsilon(1e-9));
    CHECK(generalized_bound({0.5, 0.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(generalized_bound({0.5, 0.0}, 0.3) == doctest::Approx(1.0).epsilon(1e-9));
    const double sub = generalized_bound({0.3, 0.2}, 1.0);
    CHECK(sub < garza_bound(1.0) - 1e-4);
    CHECK(sub == doctest::Approx(1.2700011889843901).epsilon(1e-6));
    CHECK_THROWS_AS(generalized_bound({0.6, 0.3}, 1.0), std::domain_error);
    CHECK_THROWS_AS(generalized_bound({-0.1, 0.2}, 1.0), std::domain_error);
    CHECK_THROWS_AS(generalized_bound({0.2, 0.2}, 0.0), std::domain_error);
}

TEST_CASE("optimize_exponents recovers the closed-form exponents at R=1") {
    const ExponentSearch search = optimize_exponents(1.0);
    const double a = optimal_a(1.0);
    CHECK(std::fabs(search.best.u - (0.5 - a)) <= 1e-3);
    CHECK(std::fabs(search.best.v - a) <= 1e-3);
    CHECK(search.value <= garza_bound(1.0) + 1e-6);
    CHECK(search.value > garza_bound(1.0) - 1e-4);
    CHECK(search.boundary_value <= garza_bound(1.0) + 1e-6);
    CHECK_THROWS_AS(optimize_exponents(0.0), std::domain_error);
}
