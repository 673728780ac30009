#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fburgers/diagnostics.hpp"
#include "fburgers/error.hpp"
#include "fburgers/oracles.hpp"

using namespace fburgers;
using std::numbers::pi;

namespace {

std::vector<InitialCondition> sample_conditions() {
    return {InitialCondition::neg_sine(), InitialCondition::scaled_neg_sine(-1.7),
            InitialCondition::gaussian_bump(0.6), InitialCondition::random_band(5, 123)};
}

}  // namespace

TEST_CASE("initial conditions are periodic and differentiable") {
    for (const auto& f : sample_conditions()) {
        for (double x : {-3.0, -0.4, 0.0, 1.1, 2.9}) {
            CHECK(f(x + 2 * pi) == doctest::Approx(f(x)).epsilon(1e-12));
            const double h = 1e-6;
            CHECK(f.derivative(x) == doctest::Approx((f(x + h) - f(x - h)) / (2 * h)).epsilon(1e-6).scale(1.0));
        }
        CHECK(f.min_value() <= f.max_value());
    }
}

TEST_CASE("initial condition spellings round-trip") {
    for (const std::string spec : {"neg-sine", "scaled-neg-sine:2.5", "gaussian:0.3", "random:8:42"})
        CHECK(InitialCondition::parse(spec).describe() == spec);

    const auto a = InitialCondition::parse("random:8:42");
    const auto b = InitialCondition::random_band(8, 42);
    for (double x : {-1.0, 0.5, 2.0}) CHECK(a(x) == b(x));
    CHECK(InitialCondition::random_band(8, 43)(0.5) != a(0.5));

    const auto zero = InitialCondition::parse("random:0:7");
    CHECK(zero(1.234) == 0.0);
    CHECK(zero.shock_time() == std::numeric_limits<double>::infinity());

    for (const std::string bad : {"", "sine", "gaussian", "gaussian:-1", "gaussian:x", "random:3", "random:-1:2",
                                  "scaled-neg-sine:", "neg-sine:1"}) {
        try {
            InitialCondition::parse(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Usage);
            CHECK(e.key() == "ic");
        }
    }
}

TEST_CASE("random band stream is pinned to mt19937_64") {
    // First draw of mt19937_64 with seed 5489 is 14514284786278117030.
    std::mt19937_64 rng(5489);
    const std::uint64_t first = rng();
    REQUIRE(first == 14514284786278117030ULL);
    const double a1 = 2.0 * static_cast<double>(first >> 11) * 0x1.0p-53 - 1.0;
    const double b1 = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
    const auto f = InitialCondition::random_band(1, 5489);
    CHECK(f(0.0) == doctest::Approx(a1).epsilon(1e-15));
    CHECK(f(pi / 2) == doctest::Approx(b1).epsilon(1e-12));
}

TEST_CASE("characteristics_solution at t = 0 is the datum") {
    for (const auto& f : sample_conditions())
        for (double x : {-2.0, 0.0, 0.7}) CHECK(characteristics_solution(f, x, 0.0) == f(x));
}

TEST_CASE("characteristics_solution keeps the origin fixed for -sin") {
    const auto f = InitialCondition::neg_sine();
    for (double t : {0.1, 0.5, 0.9, 0.999}) CHECK(std::abs(characteristics_solution(f, 0.0, t)) <= 1e-12);
}

TEST_CASE("characteristics_solution at x = 1, t = 0.5 solves u = -sin(1 - u/2)") {
    const auto f = InitialCondition::neg_sine();
    const double u = characteristics_solution(f, 1.0, 0.5);
    CHECK(std::abs(u + std::sin(1.0 - 0.5 * u)) <= 1e-12);
    CHECK(u < 0.0);
}

TEST_CASE("characteristics residual holds everywhere before the shock") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> xs(-pi, pi), frac(0.0, 0.995);
    for (const auto& f : sample_conditions()) {
        const double t_star = f.shock_time();
        for (int i = 0; i < 300; ++i) {
            const double x = xs(rng);
            const double t = frac(rng) * t_star;
            const double u = characteristics_solution(f, x, t);
            REQUIRE(std::abs(u - f(x - u * t)) <= 1e-12);
        }
    }
}

TEST_CASE("characteristics_solution refuses times at or past the shock") {
    const auto f = InitialCondition::scaled_neg_sine(2.0);
    for (double t : {0.5, 0.7}) {
        try {
            characteristics_solution(f, 0.3, t);
            FAIL("expected a domain error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Domain);
        }
    }
    CHECK_THROWS_AS(characteristics_solution(f, 0.3, -0.1), Error);
}

TEST_CASE("steepest slope of the characteristics solution follows the closed form") {
    const auto f = InitialCondition::neg_sine();
    const double h = 1e-6;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.8}) {
        // scan for the steepest point, then difference there
        double best_x = 0.0, best = 0.0;
        for (int i = -200; i <= 200; ++i) {
            const double x = 0.005 * i;
            const double s =
                (characteristics_solution(f, x + h, t) - characteristics_solution(f, x - h, t)) / (2 * h);
            if (s < best) {
                best = s;
                best_x = x;
            }
        }
        CHECK(std::abs(best_x) < 1e-12);
        CHECK(std::abs(best - slope_closed_form(-1.0, t)) <= 1e-3);
    }
}

TEST_CASE("linear_decay_solution") {
    SpectralField s(16);
    s[2] = 0.5;
    s[-2] = 0.5;
    s[5] = {0.1, -0.2};
    s[-5] = {0.1, 0.2};
    s[0] = 3.0;

    const auto same = linear_decay_solution(s, 0.0, 1.0, 1.0);
    const auto undamped = linear_decay_solution(s, 4.0, 0.0, 1.5);
    for (int k = -8; k < 8; ++k) {
        CHECK(same[k] == s[k]);
        CHECK(undamped[k] == s[k]);
    }

    const auto decayed = linear_decay_solution(s, 1.0, 1.0, 1.0);
    CHECK(decayed[2].real() == doctest::Approx(0.5 * std::exp(-2.0)).epsilon(1e-15));
    CHECK(decayed[0] == s[0]);

    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto two_steps = linear_decay_solution(linear_decay_solution(s, 0.3, 0.7, alpha), 0.45, 0.7, alpha);
        const auto one_step = linear_decay_solution(s, 0.75, 0.7, alpha);
        for (int k = -8; k < 8; ++k) CHECK(std::abs(two_steps[k] - one_step[k]) <= 1e-15);
    }
}
