#include "sssim/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "sssim/errors.hpp"

namespace sssim {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Gauss weights for the odd-indexed Kronrod nodes.
constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double value = 0.0;
    double error = 0.0;
};

} // namespace

void validate(const Tolerance& tol) {
    if (tol.abs_tol < 0.0 || tol.rel_tol < 0.0) {
        throw NumericsError("tolerance: abs_tol and rel_tol must be nonnegative");
    }
    if (tol.abs_tol == 0.0 && tol.rel_tol == 0.0) {
        throw NumericsError("tolerance: abs_tol and rel_tol cannot both be zero");
    }
    if (tol.max_depth < 1 || tol.max_depth > 80) {
        throw NumericsError("tolerance: max_depth must lie in [1, 80]");
    }
}

namespace {

double eval_checked(const std::function<double(double)>& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "integrate: non-finite integrand at x = %.17g", x);
        throw NumericsError(buf);
    }
    return y;
}

Panel gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = eval_checked(f, mid);
            evals += 1;
        } else {
            const double dx = half * kGK15Nodes[i];
            fsum = eval_checked(f, mid - dx) + eval_checked(f, mid + dx);
            evals += 2;
        }
        kronrod += kK15Weights[i] * fsum;
        // Gauss nodes are the odd-indexed Kronrod nodes plus the centre.
        if (i % 2 == 1) {
            gauss += kG7Weights[i / 2] * fsum;
        }
    }

    Panel p;
    p.value = kronrod * half;
    p.error = std::abs((kronrod - gauss) * half);
    return p;
}

struct Accumulator {
    double value = 0.0;
    double error = 0.0;
    bool budget_met = true;
};

// Depth-first refinement; the local error budget halves per split so the
// traversal (and hence the floating-point result) is deterministic.
void refine(const std::function<double(double)>& f, double a, double b, const Panel& panel,
            double budget, int depth, int max_depth, long& evals, Accumulator& acc) {
    if (panel.error <= budget || depth >= max_depth) {
        acc.value += panel.value;
        acc.error += panel.error;
        if (panel.error > budget) acc.budget_met = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    const Panel left = gk15(f, a, mid, evals);
    const Panel right = gk15(f, mid, b, evals);
    refine(f, a, mid, left, 0.5 * budget, depth + 1, max_depth, evals, acc);
    refine(f, mid, b, right, 0.5 * budget, depth + 1, max_depth, evals, acc);
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const Tolerance& tol) {
    validate(tol);
    if (!(lo < hi)) {
        throw NumericsError("integrate: requires lo < hi");
    }

    long evals = 0;
    const Panel whole = gk15(f, lo, hi, evals);
    const double budget = std::max(tol.abs_tol, tol.rel_tol * std::abs(whole.value));

    Accumulator acc;
    refine(f, lo, hi, whole, budget, 0, tol.max_depth, evals, acc);

    QuadratureResult result;
    result.value = acc.value;
    result.error_estimate = acc.error;
    result.evaluations = evals;
    const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(acc.value));
    result.converged = acc.budget_met && acc.error <= target;
    return result;
}

double log_sinh(double x) {
    if (!(x > 0.0)) {
        throw NumericsError("log_sinh: requires x > 0");
    }
    if (x < 20.0) {
        return std::log(std::sinh(x));
    }
    // sinh(x) = e^x (1 - e^{-2x}) / 2
    return x - std::numbers::ln2_v<double> + std::log1p(-std::exp(-2.0 * x));
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol) {
    validate(tol);
    if (!(lo < hi)) {
        throw NumericsError("find_root: requires lo < hi");
    }

    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) {
        throw NumericsError("find_root: no sign change over [lo, hi]");
    }

    // Secant steps alternate with bisection, so the bracket halves at least
    // once every two iterations and the cap mirrors max_depth halvings.
    const int max_iter = 2 * tol.max_depth + 10;
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (a + b);
        if (b - a <= std::max(tol.abs_tol, tol.rel_tol * std::abs(mid))) {
            return mid;
        }

        double x = mid;
        if (it % 2 == 0 && fb != fa) {
            const double secant = b - fb * (b - a) / (fb - fa);
            if (secant > a && secant < b) x = secant;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }
    throw NumericsError("find_root: did not converge within max_depth iterations");
}

} // namespace sssim
