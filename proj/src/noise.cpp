#include "sssim/noise.hpp"

#include <cmath>
#include <cstdio>

#include "sssim/constants.hpp"
#include "sssim/errors.hpp"

namespace sssim {

namespace {

double lower_edge(const NoiseParams& p) { return p.sc.eps_F + p.sc.Delta_SC; }

double overestimate_exponent(const NoiseParams& p) {
    if (p.paper_literal_exponent) return 200.0;
    return critical_frequency(p.sc) / p.f_min;
}

double sinh_beta(double eps, const NoiseParams& p) {
    const double L = p.barrier.d;
    return (L / constants::hbar) *
           std::sqrt(2.0 * p.barrier.m_star * (p.barrier.V0_base - eps));
}

} // namespace

std::vector<std::string> validate(const NoiseParams& p) {
    std::vector<std::string> warnings = validate(p.sc);
    auto more = validate(p.barrier);
    warnings.insert(warnings.end(), more.begin(), more.end());

    if (!(p.g_degeneracy > 0.0)) throw PhysicsError("noise: g_degeneracy must be positive");
    if (!(p.energy_window > 0.0)) throw PhysicsError("noise: energy_window must be positive");
    if (!(p.f_min > 0.0)) throw PhysicsError("noise: f_min must be positive");
    if (!(p.T > 0.0)) throw PhysicsError("noise: T must be positive");
    if (!(p.T < p.sc.T_C)) {
        throw PhysicsError("noise: operating temperature must be below T_C");
    }
    if (!(lower_edge(p) + p.energy_window < p.barrier.V0_base)) {
        throw PhysicsError(
            "noise: eps_F + Delta_SC + window must stay below V0 for the sub-barrier "
            "transmission model");
    }
    validate(p.tol);
    return warnings;
}

double dos_sc(double eps, const NoiseParams& p) {
    if (!(eps > p.sc.Delta_SC)) {
        throw NumericsError("dos_sc: requires eps > Delta_SC");
    }
    return 2.0 * p.sc.rho_F * eps /
           std::sqrt(eps * eps - p.sc.Delta_SC * p.sc.Delta_SC);
}

double be_occupancy(double eps, const NoiseParams& p, OccupancyMode mode) {
    if (mode == OccupancyMode::exact) {
        if (!(eps > p.sc.eps_F)) {
            throw NumericsError("be_occupancy: exact mode requires eps > eps_F");
        }
        const double x = (eps - p.sc.eps_F) / (constants::k_B * p.T);
        return p.g_degeneracy / std::expm1(x);
    }
    // Constant overestimate; 1/expm1 degrades gracefully to 0 when the
    // exponent overflows.
    return 1.0 / std::expm1(overestimate_exponent(p));
}

double transmission_exact(double eps, const NoiseParams& p) {
    const double v0 = p.barrier.V0_base;
    if (!(eps > 0.0 && eps < v0)) {
        throw NumericsError("transmission_exact: requires 0 < eps < V0");
    }
    const double beta = sinh_beta(eps, p);
    const double c = v0 * v0 / (4.0 * eps * (v0 - eps));
    const double log_term = std::log(c) + 2.0 * log_sinh(beta);
    if (log_term > 700.0) {
        // 1/(1 + X) -> e^{-log X}; underflows to zero for extreme barriers
        return std::exp(-log_term);
    }
    const double sh = std::sinh(beta);
    return 1.0 / (1.0 + c * sh * sh);
}

TransmissionApprox transmission_approx(double eps, const NoiseParams& p) {
    const double v0 = p.barrier.V0_base;
    if (!(eps > 0.0 && eps < v0)) {
        throw NumericsError("transmission_approx: requires 0 < eps < V0");
    }
    TransmissionApprox out;
    out.beta = sinh_beta(eps, p);
    out.beta_warning = out.beta < 5.0;
    out.paper_literal = 16.0 * (eps - v0) / v0;
    out.reference = 16.0 * (eps / v0) * (1.0 - eps / v0) * std::exp(-2.0 * out.beta);
    return out;
}

CapacityResult n1_star_capacity(const NoiseParams& p) {
    const double edge = lower_edge(p);
    const double delta = p.sc.Delta_SC;
    const double two_rho_g = 2.0 * p.sc.rho_F * p.g_degeneracy;

    CapacityResult out;
    const double ratio = delta / edge;
    out.closed_form =
        two_rho_g * (p.energy_window / delta) * (1.0 - 0.5 * ratio * ratio);

    const auto quad = integrate(
        [&](double eps) { return two_rho_g * eps / std::sqrt(eps * eps - delta * delta); },
        edge, edge + p.energy_window, p.tol);
    out.quadrature = quad.value;
    out.quadrature_error = quad.error_estimate;
    const double floor = std::abs(out.quadrature) > 0.0 ? std::abs(out.quadrature) : 1e-300;
    out.relative_error = std::abs(out.quadrature - out.closed_form) / floor;
    return out;
}

NoiseIntegral noise_carriers_quadrature(const NoiseParams& p, TransmissionModel model) {
    validate(p);
    const double edge = lower_edge(p);
    const double delta = p.sc.Delta_SC;
    const double v0 = p.barrier.V0_base;

    auto transmission = [&](double eps) {
        switch (model) {
        case TransmissionModel::exact:
            return transmission_exact(eps, p);
        case TransmissionModel::paper_eq38:
            return 16.0 * (eps - v0) / v0;
        case TransmissionModel::reference_asymptote:
        default:
            return transmission_approx(eps, p).reference;
        }
    };
    auto integrand = [&](double eps) {
        return eps / std::sqrt(eps * eps - delta * delta) * transmission(eps);
    };

    NoiseIntegral out;
    out.quadrature = integrate(integrand, edge, edge + p.energy_window, p.tol);
    if (!out.quadrature.converged) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "noise quadrature did not converge: achieved error estimate %.6g "
                      "after %ld evaluations",
                      out.quadrature.error_estimate, out.quadrature.evaluations);
        throw NumericsError(buf);
    }
    out.integral_factor = out.quadrature.value;
    out.prefactor = 2.0 * p.sc.rho_F * p.g_degeneracy *
                    be_occupancy(edge, p, OccupancyMode::paper_overestimate);
    if (p.directional_third) out.prefactor /= 3.0;
    out.value = out.prefactor * out.integral_factor;
    return out;
}

ClosedFormNoise noise_carriers_closed_form(const NoiseParams& p) {
    validate(p);
    const double edge = lower_edge(p);
    const double delta = p.sc.Delta_SC;
    const double v0 = p.barrier.V0_base;

    ClosedFormNoise out;
    out.bracket = 0.5 * p.energy_window * std::sqrt(edge * edge - delta * delta) -
                  delta * delta / 3.0;
    if (out.bracket < 0.0) {
        throw PhysicsError(
            "noise closed form: negative integral bracket; the parameter regime is "
            "outside the stated assumptions");
    }
    out.prefactor = 32.0 * p.sc.rho_F * p.g_degeneracy /
                    (v0 * std::expm1(overestimate_exponent(p)));
    if (p.directional_third) out.prefactor /= 3.0;
    out.value = out.prefactor * out.bracket;
    return out;
}

namespace {

// The quoted antiderivative of ε(ε-V0)/√(ε²-Δ²), evaluated literally.
double antiderivative_f40(double eps, double v0, double delta) {
    const double root = std::sqrt(eps * eps - delta * delta);
    return 0.5 * (eps - v0) * root - delta * delta / 3.0 * std::log(eps + root);
}

} // namespace

NoiseReport noise_report(const NoiseParams& p) {
    std::vector<std::string> warnings = validate(p);
    const double edge = lower_edge(p);
    const double delta = p.sc.Delta_SC;
    const double v0 = p.barrier.V0_base;

    NoiseReport report;
    report.notes = std::move(warnings);
    report.directional_fraction_applied = p.directional_third;
    report.quadrature_abs_tol = p.tol.abs_tol;
    report.quadrature_rel_tol = p.tol.rel_tol;

    if (v0 < 10.0 * p.energy_window) {
        report.notes.emplace_back("closed form assumption V0 >> window is weak here");
    }
    if (!(edge > p.energy_window)) {
        report.notes.emplace_back("closed form assumption eps_F + Delta_SC > window is weak here");
    }

    const auto quad_exact = noise_carriers_quadrature(p, TransmissionModel::exact);
    const auto quad_paper = noise_carriers_quadrature(p, TransmissionModel::paper_eq38);
    const auto closed = noise_carriers_closed_form(p);
    const auto capacity = n1_star_capacity(p);

    report.n_star_quadrature = quad_exact.value;
    report.n_star_closed_form = closed.value;
    report.n_star_paper_integrand = quad_paper.value;
    report.n1_star_capacity = capacity.closed_form;
    report.n1_star_quadrature = capacity.quadrature;

    const double floor =
        std::abs(report.n_star_quadrature) > 0.0 ? std::abs(report.n_star_quadrature) : 1e-300;
    report.relative_error =
        std::abs(report.n_star_quadrature - report.n_star_closed_form) / floor;

    // Prefactor identity: closed/paper-quadrature must equal
    // bracket/∫ε(ε-V0)/√(ε²-Δ²), since both routes share the same prefactor.
    const double integral39 = quad_paper.integral_factor * v0 / 16.0;
    const double lhs = closed.value / quad_paper.value;
    const double rhs = closed.bracket / integral39;
    report.prefactor_identity_rel_dev = std::abs(lhs - rhs) / std::abs(rhs);

    // Differentiate the quoted antiderivative numerically at 20 interior
    // points (4th-order central differences) against the integrand.
    double max_dev = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double eps = edge + p.energy_window * k / 21.0;
        const double h = eps * 3e-6;
        const double deriv = (antiderivative_f40(eps - 2.0 * h, v0, delta) -
                              8.0 * antiderivative_f40(eps - h, v0, delta) +
                              8.0 * antiderivative_f40(eps + h, v0, delta) -
                              antiderivative_f40(eps + 2.0 * h, v0, delta)) /
                             (12.0 * h);
        const double integrand =
            eps * (eps - v0) / std::sqrt(eps * eps - delta * delta);
        max_dev = std::max(max_dev, std::abs(deriv - integrand) / std::abs(integrand));
    }
    report.antiderivative_max_rel_dev = max_dev;
    report.antiderivative_ok = max_dev <= 1e-6;
    if (!report.antiderivative_ok) {
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "quoted antiderivative does not reproduce the integrand: max relative "
                      "deviation %.6g over 20 sample points (coefficient discrepancy)",
                      max_dev);
        report.notes.emplace_back(buf);
    }
    return report;
}

} // namespace sssim
