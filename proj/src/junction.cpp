#include "sssim/junction.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "sssim/constants.hpp"
#include "sssim/errors.hpp"
#include "sssim/numerics.hpp"

namespace sssim {

namespace {

// (charge, mass) pair selected by the carrier convention.
std::pair<double, double> carrier_charge_mass(double m_star, CarrierConvention conv) {
    if (conv == CarrierConvention::pair) {
        return {constants::e_star, m_star};
    }
    return {constants::e, 0.5 * m_star};
}

constexpr double kLogDblMin = -708.0; // just inside log(DBL_MIN)

} // namespace

std::vector<std::string> validate(const JunctionDevice& device) {
    std::vector<std::string> warnings = validate(device.sc);
    auto more = validate(device.barrier);
    warnings.insert(warnings.end(), more.begin(), more.end());
    if (!(device.area > 0.0)) throw PhysicsError("device: area must be strictly positive");
    if (!(device.state.n1 > 0.0 && device.state.n2 > 0.0)) {
        throw PhysicsError("device: pair densities n1, n2 must be strictly positive");
    }
    return warnings;
}

double effective_barrier(const BarrierParams& barrier, double v_gs) {
    const double v0_eff = barrier.V0_base - barrier.gate_lever * constants::e * v_gs;
    if (!(v0_eff > 0.0)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "barrier collapse: V_GS = %.6g V drives V0_eff = %.6g J nonpositive "
                      "(model valid only for a standing barrier)",
                      v_gs, v0_eff);
        throw PhysicsError(buf);
    }
    return v0_eff;
}

double decay_length(double v0_eff, double e0, double m_star) {
    if (!(m_star > 0.0)) throw PhysicsError("decay_length: m_star must be positive");
    if (!(v0_eff > e0)) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "above-barrier carrier: E0 = %.6g J >= V0_eff = %.6g J "
                      "(tunnelling model invalid)",
                      e0, v0_eff);
        throw PhysicsError(buf);
    }
    return std::sqrt(constants::hbar * constants::hbar / (2.0 * m_star * (v0_eff - e0)));
}

std::pair<std::complex<double>, std::complex<double>>
wavefunction_coeffs(const WavefunctionState& state, double half_width, double zeta) {
    if (!(half_width > 0.0 && zeta > 0.0)) {
        throw PhysicsError("wavefunction_coeffs: requires a > 0 and zeta > 0");
    }
    using namespace std::complex_literals;
    const double alpha = half_width / zeta;
    const std::complex<double> s1 =
        std::sqrt(state.n1) * std::exp(1i * state.theta1);
    const std::complex<double> s2 =
        std::sqrt(state.n2) * std::exp(1i * state.theta2);
    const std::complex<double> c1 = (s1 + s2) / (2.0 * std::cosh(alpha));
    const std::complex<double> c2 = -(s1 - s2) / (2.0 * std::sinh(alpha));
    return {c1, c2};
}

SupercurrentDensity supercurrent_density(const WavefunctionState& state, double half_width,
                                         double zeta, double m_star, CarrierConvention conv) {
    if (!(half_width > 0.0 && zeta > 0.0)) {
        throw PhysicsError("supercurrent_density: requires a > 0 and zeta > 0");
    }
    const auto [q, mass] = carrier_charge_mass(m_star, conv);

    SupercurrentDensity out;
    out.log_critical = std::log(q * constants::hbar / (2.0 * mass)) +
                       0.5 * (std::log(state.n1) + std::log(state.n2)) - std::log(zeta) -
                       log_sinh(2.0 * half_width / zeta);
    if (out.log_critical < kLogDblMin) {
        out.critical = 0.0;
        out.underflow = true;
    } else {
        out.critical = std::exp(out.log_critical);
    }
    out.value = out.critical * std::sin(state.theta1 - state.theta2);
    return out;
}

double supercurrent_density_from_coeffs(const WavefunctionState& state, double half_width,
                                        double zeta, double m_star, CarrierConvention conv) {
    const auto [c1, c2] = wavefunction_coeffs(state, half_width, zeta);
    const auto [q, mass] = carrier_charge_mass(m_star, conv);
    return -0.5 * (q * constants::hbar / (mass * zeta)) * std::imag(std::conj(c1) * c2);
}

CriticalCurrent critical_current(const JunctionDevice& device, double v_gs, double e0,
                                 CarrierConvention conv) {
    const double v0_eff = effective_barrier(device.barrier, v_gs);
    const double zeta = decay_length(v0_eff, e0, device.barrier.m_star);
    const auto density =
        supercurrent_density(device.state, 0.5 * device.barrier.d, zeta,
                             device.barrier.m_star, conv);

    CriticalCurrent out;
    out.unclamped = density.critical * device.area;
    out.clamped = density.critical > device.sc.J_C_max;
    out.value = (out.clamped ? device.sc.J_C_max : density.critical) * device.area;
    return out;
}

double normal_resistance(double i_c, double tau_n) {
    if (!(i_c > 0.0)) throw PhysicsError("normal_resistance: requires I_C > 0");
    if (!(tau_n > 0.0)) throw PhysicsError("normal_resistance: requires tau_n > 0");
    return constants::Phi0 / (2.0 * constants::pi * tau_n * i_c);
}

std::complex<double> normal_conductance(double omega, double i_c, double tau_n) {
    if (!(omega >= 0.0)) throw PhysicsError("normal_conductance: requires omega >= 0");
    if (!(i_c > 0.0 && tau_n > 0.0)) {
        throw PhysicsError("normal_conductance: requires I_C > 0 and tau_n > 0");
    }
    const std::complex<double> pole(1.0 / tau_n, omega);
    return (2.0 * constants::pi * i_c / constants::Phi0) / pole;
}

double gap_voltage(double delta_sc, GapCharge gap) {
    const double q = gap == GapCharge::electron ? constants::e : constants::e_star;
    return 2.0 * delta_sc / q;
}

QPoint iv_voltage(double current, double i_c, double r_n, double delta_sc, GapCharge gap) {
    if (!(current >= 0.0)) throw PhysicsError("iv_voltage: requires I >= 0");
    QPoint qp;
    qp.current = current;
    if (current <= i_c) { // tie at I = I_C stays on the supercurrent branch
        qp.voltage = 0.0;
        qp.branch = Branch::supercurrent;
    } else {
        qp.voltage = gap_voltage(delta_sc, gap) + (current - i_c) * r_n;
        qp.branch = Branch::normal;
    }
    return qp;
}

IVCurve iv_sweep(const JunctionDevice& device, double v_gs, double e0, double i_max,
                 int n_points, GapCharge gap, CarrierConvention conv) {
    if (n_points < 2) throw PhysicsError("iv_sweep: requires n_points >= 2");
    if (!(i_max > 0.0)) throw PhysicsError("iv_sweep: requires I_max > 0");

    const auto i_c = critical_current(device, v_gs, e0, conv);
    const double r_n = normal_resistance(i_c.value, device.sc.tau_n);

    IVCurve curve;
    curve.params = {i_c.value, r_n, gap_voltage(device.sc.Delta_SC, gap)};
    curve.samples.reserve(static_cast<std::size_t>(n_points));
    for (int k = 0; k < n_points; ++k) {
        const double current = i_max * static_cast<double>(k) / (n_points - 1);
        curve.samples.push_back(iv_voltage(current, i_c.value, r_n, device.sc.Delta_SC, gap));
    }
    return curve;
}

double junction_capacitance(double eps_r, double area, double d) {
    if (!(eps_r > 0.0 && d > 0.0 && area >= 0.0)) {
        throw PhysicsError("junction_capacitance: requires eps_r > 0, d > 0, area >= 0");
    }
    return eps_r * constants::eps0 * area / d;
}

} // namespace sssim
