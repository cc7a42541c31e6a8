#include "adm/builtin_problems.hpp"
#include "adm/error.hpp"
#include "adm/verification.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace adm;

TEST_CASE("uniform grid") {
    const auto g = uniform_grid(4);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == 0.25);
    CHECK(g[3] == 1.0);
    CHECK(uniform_grid(1000).front() == 0.001);
}

TEST_CASE("max_error") {
    const Problem p = builtin_problem(1, 0.5, 1.0);
    SUBCASE("exact solution against itself") {
        // ln(1/(4+x)) is not a finite series, but a truncated psi is close.
        const GPSeries psi = solve(p, 10).psi;
        const ErrorReport rep = max_error(psi, *p.exact, 1000, true);
        CHECK(rep.grid_size == 1000);
        CHECK(rep.pointwise.size() == 1000);
        CHECK(rep.max_error < 1e-8);
        double worst = 0.0;
        for (const auto& [x, e] : rep.pointwise) worst = std::max(worst, e);
        CHECK(worst == rep.max_error);
    }
    SUBCASE("series exact solutions compare to zero") {
        const GPSeries s = GPSeries::normalize({{1.0, 0.0}, {2.0, 0.5}, {-0.5, 3.0}});
        const ErrorReport rep = max_error(s, parse("1 + 2*x^0.5 - 0.5*x^3"), 500);
        CHECK(rep.max_error <= 1e-12);
    }
    SUBCASE("two-point grid") {
        const ErrorReport rep = max_error(GPSeries{}, parse("x"), 2, true);
        REQUIRE(rep.pointwise.size() == 2);
        CHECK(rep.pointwise[0].first == 0.5);
        CHECK(rep.max_error == 1.0);
        CHECK(rep.max_point == 1.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS((void)max_error(GPSeries{}, parse("x"), 1), Error);
        try {
            (void)max_error(GPSeries{}, parse("x*y"), 10);
            FAIL("expected InvalidExactSolution");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidExactSolution);
        }
    }
}

TEST_CASE("reference error scale") {
    // Example 1, alpha = 0.5, beta = 1: the reference E^10 is 6.11240e-10.
    const Problem p = builtin_problem(1, 0.5, 1.0);
    const double e10 = max_error(solve(p, 10).psi, *p.exact, 1000).max_error;
    CHECK(e10 > 6.11240e-10 / 2.0);
    CHECK(e10 < 6.11240e-10 * 2.0);
}

TEST_CASE("residual") {
    SUBCASE("constant psi for the linear benchmark") {
        const double alpha = 0.5;
        const double beta = 1.0;
        const Problem p = builtin_problem(3, alpha, beta);
        const auto listing = residual(GPSeries::constant(p.eta1), p, 10);
        REQUIRE(listing.size() == 10);
        for (const auto& [x, r] : listing) {
            const double expected = -std::pow(x, p.sigma) * beta * (alpha + beta - 1.0) * p.eta1;
            CHECK(r == doctest::Approx(expected).epsilon(1e-14));
        }
    }
    SUBCASE("f = 0") {
        Problem p = builtin_problem(1, 0.5, 1.0);
        p.f = Expr::constant(0.0);
        const SolveReport r = solve(p, 3);
        for (const auto& [x, v] : residual(r.psi, p, 50)) CHECK(std::abs(v) <= 1e-14);
    }
    SUBCASE("single point") {
        const Problem p = builtin_problem(2, 0.5, 1.0);
        const auto listing = residual(solve(p, 3).psi, p, 1);
        REQUIRE(listing.size() == 1);
        CHECK(listing[0].first == 1.0);
        CHECK_THROWS_AS((void)residual(GPSeries{}, p, 0), Error);
    }
    SUBCASE("decreases with more components") {
        const Problem p = builtin_problem(2, 0.5, 1.0);
        const double r5 = max_abs_residual(residual(solve(p, 5).psi, p, 200), 0.1).first;
        const double r10 = max_abs_residual(residual(solve(p, 10).psi, p, 200), 0.1).first;
        CHECK(r10 < r5);
        const Problem p1 = builtin_problem(1, 0.5, 1.0);
        CHECK(max_abs_residual(residual(solve(p1, 10).psi, p1, 1000), 0.1).first < 1e-6);
    }
    SUBCASE("max_abs_residual") {
        const std::vector<std::pair<double, double>> listing{{0.05, 9.0}, {0.5, -2.0}, {1.0, 1.0}};
        CHECK(max_abs_residual(listing) == std::pair{9.0, 0.05});
        CHECK(max_abs_residual(listing, 0.1) == std::pair{2.0, 0.5});
    }
}

TEST_CASE("quadrature oracle agrees with the closed form") {
    auto gen = test::rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const double alpha = test::uniform(gen, 0.0, 0.9);
        const double sigma = test::uniform(gen, -0.9, 1.0);
        const OperatorContext ctx = OperatorContext::make(alpha, sigma);
        const GPSeries g = test::random_series(gen, 20, 0.0, 6.0);
        const GPSeries closed = apply_Linv(ctx, g);
        for (double x : {0.1, 0.5, 1.0}) {
            CHECK(std::abs(quadrature_oracle(ctx, g, x) - closed.evaluate(x)) <= 1e-8);
        }
    }
    const OperatorContext ctx = OperatorContext::make(0.5, -0.5);
    CHECK(quadrature_oracle(ctx, GPSeries{}, 0.5) == 0.0);
    const GPSeries a = GPSeries::normalize({{1.0, 0.0}, {0.5, 1.5}});
    const GPSeries b = GPSeries::monomial(-2.0, 0.25);
    for (double x : {0.3, 1.0}) {
        const double lhs = quadrature_oracle(ctx, add(scale(a, 3.0), b), x);
        const double rhs = 3.0 * quadrature_oracle(ctx, a, x) + quadrature_oracle(ctx, b, x);
        CHECK(std::abs(lhs - rhs) <= 2e-8);
    }
    CHECK_THROWS_AS((void)quadrature_oracle(ctx, a, 0.0), Error);
}
