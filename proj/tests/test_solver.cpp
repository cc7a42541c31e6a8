#include "adm/builtin_problems.hpp"
#include "adm/error.hpp"
#include "adm/expr.hpp"
#include "adm/solver.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace adm;

namespace {

double coeff_at(const GPSeries& s, double exponent) {
    for (const Term& t : s.terms()) {
        if (std::abs(t.exponent - exponent) < 1e-9) return t.coeff;
    }
    return 0.0;
}

// Shared by the y_1 checks: the first component is c_h x^(1-alpha) + c_2 x^(sigma+2-alpha),
// up to merging when the two exponents coincide.
void check_first_component(const Problem& p, const GPSeries& y1) {
    const OperatorContext ctx = p.context();
    const double a0 = eval_real(p.f, 1.0, p.eta1, 0.0); // f(x, eta1, 0) is constant in these cases
    const double r = p.sigma;
    const double inner = a0 / (r + 1.0);
    const double at_one = inner * (ctx.h1 - 1.0 / (r + 2.0 - p.alpha));
    const double denom = p.robin_denominator();
    const double ch = ((p.gamma1 - p.alpha1 * p.eta1) / denom + p.alpha1 / denom * at_one - inner) * ctx.h1;
    const double c2 = inner / (r + 2.0 - p.alpha);
    for (double x : {0.1, 0.5, 1.0}) {
        const double expected = ch * std::pow(x, 1.0 - p.alpha) + c2 * std::pow(x, r + 2.0 - p.alpha);
        CHECK(y1.evaluate(x) == doctest::Approx(expected).epsilon(1e-13));
    }
}

} // namespace

TEST_CASE("first component of the benchmarks") {
    SUBCASE("example 1") {
        const Problem p = builtin_problem(1, 0.5, 1.0);
        const SolveReport r = solve(p, 2);
        REQUIRE(r.components.size() == 2);
        CHECK(r.components[0] == GPSeries::constant(-std::log(4.0)));
        const GPSeries& y1 = r.components[1];
        CHECK(coeff_at(y1, 0.5) == doctest::Approx(std::log(0.8) + 0.25).epsilon(1e-14));
        CHECK(coeff_at(y1, 0.5) == doctest::Approx(0.0268564).epsilon(1e-5));
        CHECK(coeff_at(y1, 1.0) == doctest::Approx(-0.25).epsilon(1e-14));
        check_first_component(p, y1);
    }
    SUBCASE("example 2") {
        const Problem p = builtin_problem(2, 0.5, 1.0);
        check_first_component(p, solve(p, 2).components[1]);
    }
    SUBCASE("example 3, y1 has a y-dependent source") {
        const Problem p = builtin_problem(3, 0.5, 1.0);
        const GPSeries y1 = solve(p, 2).components[1];
        // A_0 = beta (alpha + beta - 1) eta1 = 0.5, sigma = 0.5.
        CHECK(y1.evaluate(1.0) == doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
        check_first_component(p, y1);
    }
}

TEST_CASE("partial sums") {
    const Problem p = builtin_problem(1, 0.5, 1.0);
    const SolveReport r = solve(p, 4);
    CHECK(partial_sum(r, 1) == r.components[0]);
    CHECK(partial_sum(r, 4) == r.psi);
    for (double x : {0.3, 1.0}) {
        double direct = 0.0;
        for (int k = 0; k < 3; ++k) direct += r.components[k].evaluate(x);
        CHECK(partial_sum(r, 3).evaluate(x) == doctest::Approx(direct).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)partial_sum(r, 0), Error);
    CHECK_THROWS_AS((void)partial_sum(r, 5), Error);

    const SolveReport one = solve(p, 1);
    CHECK(one.psi == GPSeries::constant(p.eta1));
    CHECK(one.diagnostics.empty());
}

TEST_CASE("partial sums satisfy both boundary conditions") {
    auto gen = test::rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Problem p = builtin_problem(1 + static_cast<int>(gen() % 3), test::uniform(gen, 0.05, 0.9),
                                    test::uniform(gen, 1.0, 3.0));
        p.eta1 = test::uniform(gen, -1.0, 0.0);
        p.alpha1 = test::uniform(gen, 0.5, 2.0);
        p.beta1 = test::uniform(gen, 0.0, 1.0);
        p.gamma1 = test::uniform(gen, -1.0, 1.0);
        const SolveReport r = solve(p, 5);
        CHECK(r.psi.evaluate(0.0) == doctest::Approx(p.eta1).epsilon(1e-12));
        // psi_1 = eta1 only carries the left condition.
        for (std::size_t m = 2; m <= 5; ++m) {
            const GPSeries psi = partial_sum(r, m);
            CHECK(psi.evaluate(0.0) == doctest::Approx(p.eta1).epsilon(1e-12));
            const double robin = p.alpha1 * psi.evaluate(1.0) + p.beta1 * differentiate(psi).evaluate(1.0);
            CHECK(std::abs(robin - p.gamma1) <= 1e-12 * std::max(1.0, std::abs(p.gamma1)));
        }
    }
}

TEST_CASE("linear problems scale with the data") {
    Problem p = builtin_problem(3, 0.5, 1.0);
    p.eta1 = 0.0;
    const SolveReport base = solve(p, 6);
    Problem doubled = p;
    doubled.gamma1 *= 2.0;
    const SolveReport twice = solve(doubled, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(test::same_terms(scale(base.components[k], 2.0), twice.components[k], 1e-13, 1e-300));
    }
}

TEST_CASE("regression of y2 and y3 for the first benchmark") {
    const SolveReport r = solve(builtin_problem(1, 0.5, 1.0), 4);
    // psi(1) hits gamma1 exactly, so y_k(1) = 0 for k >= 2.
    CHECK(std::abs(r.components[2].evaluate(1.0)) < 1e-15);
    CHECK(std::abs(r.components[3].evaluate(1.0)) < 1e-15);
    const GPSeries& y2 = r.components[2];
    REQUIRE(y2.size() == 3);
    CHECK(coeff_at(y2, 0.5) == doctest::Approx(-0.0267739).epsilon(1e-5));
    CHECK(coeff_at(y2, 1.5) == doctest::Approx(-0.00447607).epsilon(1e-5));
    CHECK(coeff_at(y2, 2.0) == doctest::Approx(0.03125).epsilon(1e-12));
    const GPSeries& y3 = r.components[3];
    REQUIRE(y3.size() == 5);
    CHECK(coeff_at(y3, 1.5) == doctest::Approx(0.0044623).epsilon(1e-4));
    CHECK(coeff_at(y3, 2.0) == doctest::Approx(-0.000045079).epsilon(1e-4));
    CHECK(coeff_at(y3, 2.5) == doctest::Approx(0.00111902).epsilon(1e-5));
    CHECK(coeff_at(y3, 3.0) == doctest::Approx(-0.0052083).epsilon(1e-4));
    CHECK(r.diagnostics.size() == 3);
    CHECK(r.diagnostics[2].step == 3);
    CHECK(r.diagnostics[2].component_terms == 5);
}

TEST_CASE("invalid problems are rejected") {
    Problem p = builtin_problem(1, 0.5, 1.0);
    SUBCASE("alpha out of range") {
        p.alpha = 1.0;
        CHECK_THROWS_AS((void)solve(p, 3), Error);
    }
    SUBCASE("alpha1 must be positive") {
        p.alpha1 = 0.0;
        try {
            (void)solve(p, 3);
            FAIL("expected InvalidProblem");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidProblem);
        }
    }
    SUBCASE("exact depends on y") {
        p.exact = parse("y + x");
        try {
            p.validate();
            FAIL("expected InvalidExactSolution");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidExactSolution);
        }
    }
    SUBCASE("n = 0") { CHECK_THROWS_AS((void)solve(p, 0), Error); }
    SUBCASE("failure names the step") {
        p.f = parse("exp(x*y)"); // base point x eta1 is not a constant
        try {
            (void)solve(p, 4);
            FAIL("expected NonConstantBasePoint");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonConstantBasePoint);
            CHECK(std::string(e.what()).find("step 1") != std::string::npos);
        }
    }
    SUBCASE("resonance surfaces from the operator") {
        p.sigma = -1.0;
        p.f = Expr::constant(1.0);
        try {
            (void)solve(p, 2);
            FAIL("expected LogResonance");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::LogResonance);
        }
    }
}
