#include <doctest.h>

#include "test_helpers.hpp"

#include <cmath>
#include <vector>

#include "sssim/errors.hpp"
#include "sssim/numerics.hpp"

using namespace sssim;

namespace {

// Independent test-only integrator: composite midpoint with one Richardson
// extrapolation step. Deliberately different machinery from the library's
// Gauss-Kronrod scheme.
double midpoint_richardson(const std::function<double(double)>& f, double lo, double hi,
                           int n_coarse) {
    auto midpoint = [&](int n) {
        const double h = (hi - lo) / n;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += f(lo + (i + 0.5) * h);
        return sum * h;
    };
    const double coarse = midpoint(n_coarse);
    const double fine = midpoint(2 * n_coarse);
    // midpoint rule error ~ h^2: Richardson weights (4*fine - coarse)/3
    return (4.0 * fine - coarse) / 3.0;
}

} // namespace

TEST_CASE("integrate: polynomial exactness") {
    Tolerance tol{1e-14, 1e-12, 40};

    auto quadratic = integrate([](double x) { return x * x; }, 0.0, 1.0, tol);
    CHECK(quadratic.converged);
    CHECK(quadratic.value == approx_rel(1.0 / 3.0, 1e-12));

    // degree-13 polynomial, still inside the embedded rule's exactness
    auto high = integrate([](double x) { return 3.0 * std::pow(x, 13) - x; }, -1.0, 2.0, tol);
    const double expected = 3.0 / 14.0 * (std::pow(2.0, 14) - 1.0) - 0.5 * (4.0 - 1.0);
    CHECK(high.value == approx_rel(expected, 1e-12));
}

TEST_CASE("integrate: standard checks") {
    Tolerance tol{1e-12, 1e-10, 50};
    auto sine = integrate([](double x) { return std::sin(x); }, 0.0, std::acos(-1.0), tol);
    CHECK(sine.converged);
    CHECK(sine.value == approx_rel(2.0, 1e-10));
    CHECK(sine.error_estimate >= 0.0);
    CHECK(sine.evaluations >= 15);
}

TEST_CASE("integrate: noise-style integrand against midpoint-Richardson oracle") {
    // ε(ε-V0)/sqrt(ε²-Δ²) on a documented dimensionless interval:
    // Δ = 1, V0 = 40, ε ∈ [10, 12].
    auto f = [](double eps) { return eps * (eps - 40.0) / std::sqrt(eps * eps - 1.0); };
    auto gk = integrate(f, 10.0, 12.0, Tolerance{1e-12, 1e-11, 50});
    const double oracle = midpoint_richardson(f, 10.0, 12.0, 4096);
    CHECK(gk.converged);
    CHECK(gk.value == approx_rel(oracle, 1e-8));
}

TEST_CASE("integrate: interval additivity") {
    Tolerance tol{1e-13, 1e-11, 50};
    auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
    auto whole = integrate(f, 0.0, 2.0, tol);
    auto left = integrate(f, 0.0, 0.7, tol);
    auto right = integrate(f, 0.7, 2.0, tol);
    const double budget =
        whole.error_estimate + left.error_estimate + right.error_estimate + 1e-13;
    CHECK(std::abs(left.value + right.value - whole.value) <= budget);
}

TEST_CASE("integrate: determinism") {
    auto f = [](double x) { return std::sin(17.0 * x) / (1.0 + x * x); };
    auto a = integrate(f, 0.0, 3.0, Tolerance{1e-13, 1e-12, 60});
    auto b = integrate(f, 0.0, 3.0, Tolerance{1e-13, 1e-12, 60});
    CHECK(a.value == b.value); // bit-identical
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("integrate: error paths") {
    Tolerance tol;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0, tol), NumericsError);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2.0, 1.0, tol), NumericsError);
    CHECK_THROWS_WITH_AS(
        integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, tol),
        doctest::Contains("non-finite"), NumericsError);

    // a nasty integrand with an unreachable tolerance reports converged=false
    auto hard = integrate([](double x) { return std::sqrt(std::abs(x)); }, -1.0, 1.0,
                          Tolerance{1e-30, 1e-16, 3});
    CHECK_FALSE(hard.converged);
    CHECK(hard.value == approx_rel(4.0 / 3.0, 1e-3));
}

TEST_CASE("tolerance validation") {
    CHECK_THROWS_AS(validate(Tolerance{-1.0, 1e-9, 10}), NumericsError);
    CHECK_THROWS_AS(validate(Tolerance{0.0, 0.0, 10}), NumericsError);
    CHECK_THROWS_AS(validate(Tolerance{1e-9, 1e-9, 0}), NumericsError);
    CHECK_THROWS_AS(validate(Tolerance{1e-9, 1e-9, 81}), NumericsError);
    CHECK_NOTHROW(validate(Tolerance{}));
}

TEST_CASE("log_sinh: values and asymptote") {
    CHECK(log_sinh(1.0) == approx_rel(0.16143936157119563, 1e-14));
    CHECK(log_sinh(800.0) ==
          approx_rel(800.0 - std::log(2.0), 1e-12));
    CHECK_THROWS_AS(log_sinh(0.0), NumericsError);
    CHECK_THROWS_AS(log_sinh(-3.0), NumericsError);
}

TEST_CASE("log_sinh: branch continuity and monotonicity") {
    // both formulas agree in the overlap around the switch point
    for (double x : {19.5, 19.9, 20.0, 20.1, 20.5}) {
        const double direct = std::log(std::sinh(x));
        const double asymptotic = x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
        CHECK(std::abs(direct - asymptotic) < 1e-13);
        CHECK(log_sinh(x) == approx_rel(direct, 1e-13));
    }
    double prev = log_sinh(0.01);
    for (double x = 0.1; x < 50.0; x += 0.37) {
        const double cur = log_sinh(x);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("find_root: basics") {
    Tolerance tol{1e-12, 0.0, 60};
    const double linear = find_root([](double x) { return x - 2.0; }, 0.0, 5.0, tol);
    CHECK(linear == approx_rel(2.0, 1e-10));

    const double transcendental =
        find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, tol);
    CHECK(transcendental == approx_rel(0.7390851332151607, 1e-10));
    CHECK(transcendental >= 0.0);
    CHECK(transcendental <= 1.0);

    CHECK_THROWS_WITH_AS(find_root([](double x) { return x + 10.0; }, 0.0, 1.0, tol),
                         doctest::Contains("no sign change"), NumericsError);
}
