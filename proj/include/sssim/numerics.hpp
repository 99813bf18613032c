#ifndef SSSIM_NUMERICS_HPP
#define SSSIM_NUMERICS_HPP

#include <functional>

namespace sssim {

/// Convergence targets shared by the quadrature and root-finding kernels.
/// At least one of abs_tol / rel_tol must be nonzero; max_depth caps the
/// bisection recursion (interval halvings).
struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    int max_depth = 60;
};

void validate(const Tolerance& tol);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // sum of per-panel |K15 - G7| estimates, conservative
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7,K15) quadrature over [lo, hi].
///
/// Panels are bisected depth-first with the local error budget halved per
/// split, so the evaluation order is deterministic and results are
/// bit-reproducible across runs. Non-finite integrand values raise a
/// NumericsError naming the offending abscissa. Failure to meet the
/// tolerance by max_depth is reported through converged = false with the
/// best value, not an exception.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           const Tolerance& tol);

/// ln(sinh(x)) for x > 0 without overflow: evaluated directly below x = 20
/// and as x - ln 2 + ln(1 - e^{-2x}) above.
double log_sinh(double x);

/// Bracketed root of f on [lo, hi] (requires f(lo)·f(hi) <= 0) using a
/// secant step clipped to the bracket with bisection fallback. Converges
/// when the bracket width drops below max(abs_tol, rel_tol·|mid|);
/// exceeding max_depth iterations raises a NumericsError.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const Tolerance& tol);

} // namespace sssim

#endif
