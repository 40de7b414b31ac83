#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "isoperim/errors.hpp"
#include "isoperim/quad.hpp"
#include "oracles.hpp"

using namespace isoperim;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gamma function hits the classical values")
{
    CHECK(quad::gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(quad::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
}

TEST_CASE("gamma function keeps 1e-12 relative accuracy across [0.1, 50]")
{
    // Reference by recursion from a high-precision anchor: Gamma(x+1) = x Gamma(x)
    // starting at integers, plus the functional-equation consistency check.
    for (double x = 0.1; x <= 50.0; x += 0.37) {
        const double lhs = quad::gamma_fn(x + 1.0);
        const double rhs = x * quad::gamma_fn(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    // A few externally known anchors.
    CHECK(quad::gamma_fn(1.5) == doctest::Approx(0.5 * 1.7724538509055160).epsilon(1e-13));
    CHECK(quad::gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
    CHECK(quad::gamma_fn(25.0) == doctest::Approx(6.204484017332394e23).epsilon(1e-12));
}

TEST_CASE("gamma function rejects the poles")
{
    CHECK_THROWS_AS(quad::gamma_fn(0.0), domain_error);
    CHECK_THROWS_AS(quad::gamma_fn(-3.0), domain_error);
}

TEST_CASE("beta function values and symmetry")
{
    CHECK(quad::beta_fn(0.5, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(quad::beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad::beta_fn(0.5, 1.0) == doctest::Approx(2.0).epsilon(1e-13));

    for (double a = 0.25; a < 4.0; a += 0.5) {
        for (double b = 0.3; b < 5.0; b += 0.7) {
            CHECK(quad::beta_fn(a, b) == doctest::Approx(quad::beta_fn(b, a)).epsilon(1e-15));
        }
    }

    CHECK_THROWS_AS(quad::beta_fn(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(quad::beta_fn(1.0, -0.5), domain_error);
}

TEST_CASE("kappa closed form matches the textbook hemisphere values")
{
    CHECK(quad::kappa(2, 0.0) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(quad::kappa(2, 1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(quad::kappa(3, 0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    // In three dimensions the weighted hemisphere area collapses to 2 pi/(1+alpha).
    CHECK(quad::kappa(3, 2.5) == doctest::Approx(2.0 * kPi / 3.5).epsilon(1e-13));
}

TEST_CASE("kappa agrees with brute-force hemisphere quadrature to 1e-8")
{
    const double alphas[] = {0.0, 0.5, 1.0, 2.0};
    for (int dim = 2; dim <= 4; ++dim) {
        for (double alpha : alphas) {
            const double brute = oracle::hemisphere_weight_integral(dim, alpha);
            CHECK(quad::kappa(dim, alpha) == doctest::Approx(brute).epsilon(1e-8));
        }
    }
}

TEST_CASE("kappa rejects bad arguments")
{
    CHECK_THROWS_AS(quad::kappa(1, 0.0), domain_error);
    CHECK_THROWS_AS(quad::kappa(3, -1.0), domain_error);
}

TEST_CASE("gauss_jacobi integrates its own weight exactly")
{
    // n-point rule integrates polynomials up to degree 2n-1 against
    // (1-t)^a (1+t)^b; moment 0 equals 2^{a+b+1} B(a+1, b+1).
    const double pairs[][2] = {{0.0, 0.0}, {-0.5, 0.0}, {1.5, -0.25}, {2.0, 3.0}};
    for (auto& ab : pairs) {
        const double a = ab[0];
        const double b = ab[1];
        const auto rule = quad::gauss_jacobi(12, a, b);
        REQUIRE(rule.nodes.size() == 12);
        double m0 = 0.0;
        double m1 = 0.0;
        double m7 = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = rule.nodes[i];
            const double w = rule.weights[i];
            m0 += w;
            m1 += w * t;
            m7 += w * std::pow(t, 7);
        }
        const double exact0 = std::pow(2.0, a + b + 1.0) * quad::beta_fn(a + 1.0, b + 1.0);
        CHECK(m0 == doctest::Approx(exact0).epsilon(1e-13));

        // Oracle for the higher moments: tanh-sinh with the weight written out.
        const double exact1 = oracle::tanh_sinh_endpoints(
            [&](double t, double da, double db) {
                return std::pow(db, a) * std::pow(da, b) * t;
            },
            -1.0, 1.0);
        const double exact7 = oracle::tanh_sinh_endpoints(
            [&](double t, double da, double db) {
                return std::pow(db, a) * std::pow(da, b) * std::pow(t, 7);
            },
            -1.0, 1.0);
        CHECK(m1 == doctest::Approx(exact1).epsilon(5e-13));
        CHECK(m7 == doctest::Approx(exact7).epsilon(5e-13));
    }
}

TEST_CASE("gauss_jacobi nodes stay inside the open interval and ordered")
{
    const auto rule = quad::gauss_jacobi(32, -0.9, 2.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        CHECK(rule.nodes[i] > -1.0);
        CHECK(rule.nodes[i] < 1.0);
        CHECK(rule.weights[i] > 0.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
}

TEST_CASE("integrate reproduces the elementary examples")
{
    const auto one = [](double) { return 1.0; };

    CHECK(quad::integrate(one, -1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Weight cos(theta) on (-pi/2, pi/2) folded into the endpoint exponents:
    // cos(theta) = sin(pi/2 - |theta|), and with exponent 1 on both ends the
    // residual factor cos(theta)/((theta+pi/2)(pi/2-theta)) stays smooth.
    const double half_pi = 0.5 * kPi;
    const double cos_weighted = quad::integrate(
        [half_pi](double th) {
            const double da = th + half_pi;
            const double db = half_pi - th;
            return std::cos(th) / (da * db);
        },
        -half_pi, half_pi, {1.0, 1.0});
    CHECK(cos_weighted == doctest::Approx(2.0).epsilon(1e-11));

    // Left-endpoint singularity x^{-1/2} on (0, 1].
    CHECK(quad::integrate(one, 0.0, 1.0, {-0.5, 0.0}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("integrate matches tanh-sinh on a singular-smooth product")
{
    const double ref = oracle::tanh_sinh_endpoints(
        [](double x, double da, double) {
            return std::pow(da, -0.3) * std::exp(-x) * std::cos(3.0 * x);
        },
        0.0, 2.0);
    const double got = quad::integrate(
        [](double x) { return std::exp(-x) * std::cos(3.0 * x); }, 0.0, 2.0,
        {-0.3, 0.0});
    CHECK(got == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("integrate is linear")
{
    const auto f = [](double x) { return std::sin(x) + 0.25 * x * x; };
    const auto g = [](double x) { return std::exp(0.3 * x); };
    const double c = 2.75;
    const double lhs = quad::integrate(
        [&](double x) { return c * f(x) + g(x); }, -1.0, 2.0, {0.25, 0.75});
    const double rhs = c * quad::integrate(f, -1.0, 2.0, {0.25, 0.75}) +
                       quad::integrate(g, -1.0, 2.0, {0.25, 0.75});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("integrate rejects non-integrable weights and bad specs")
{
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, {-1.0, 0.0}), domain_error);
    CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, {0.0, -1.5}), domain_error);
    quad::QuadSpec bad;
    bad.node_count = 2;
    CHECK_THROWS_AS(quad::integrate(one, 0.0, 1.0, {}, bad), domain_error);
}

TEST_CASE("integrate flags integrands outside the supported class")
{
    // A non-integrable interior pole cannot settle under refinement.
    quad::QuadSpec spec;
    spec.node_count = 8;
    spec.max_refinements = 3;
    spec.target_abs_tol = 1e-12;
    CHECK_THROWS_AS(quad::integrate(
                        [](double x) {
                            const double d = x - 0.4;
                            return 1.0 / (d * d);
                        },
                        0.0, 1.0, {}, spec),
                    convergence_error);
}
