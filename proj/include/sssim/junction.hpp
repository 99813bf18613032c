#ifndef SSSIM_JUNCTION_HPP
#define SSSIM_JUNCTION_HPP

#include <complex>
#include <utility>
#include <vector>

#include "sssim/materials.hpp"

namespace sssim {

/// Macroscopic wavefunction amplitudes/phases on the two electrodes.
struct WavefunctionState {
    double n1 = 0.0;     ///< pair density, electrode 1 [m⁻³]
    double theta1 = 0.0; ///< phase, electrode 1 [rad]
    double n2 = 0.0;     ///< pair density, electrode 2 [m⁻³]
    double theta2 = 0.0; ///< phase, electrode 2 [rad]
};

/// One gated SC-Sm-SC junction: electrodes, barrier, geometry, state.
struct JunctionDevice {
    SuperconductorParams sc;
    BarrierParams barrier;
    double area = 0.0; ///< junction area A_jn [m²]
    WavefunctionState state;
};

std::vector<std::string> validate(const JunctionDevice& device);

enum class Branch { supercurrent, normal };

/// A solved bias point on the piecewise I-V characteristic.
struct QPoint {
    double current = 0.0; ///< [A]
    double voltage = 0.0; ///< [V]
    Branch branch = Branch::supercurrent;
};

struct IVParams {
    double I_C = 0.0;   ///< critical current [A]
    double R_n = 0.0;   ///< normal-branch resistance [Ω]
    double V_gap = 0.0; ///< gap voltage 2Δ/e [V]
};

struct IVCurve {
    std::vector<QPoint> samples; // nondecreasing in current
    IVParams params;
};

/// Charge/mass convention for the supercurrent prefactor: `pair` uses the
/// Cooper-pair values (e* = 2e with the device m*), `bare` the
/// single-electron ones (e with m*/2).
enum class CarrierConvention { pair, bare };

/// Charge used to convert the gap energy 2Δ into the gap voltage. The
/// quasiparticle convention (single electron, V_gap = 2Δ/e) is the default;
/// `pair` divides by 2e instead for sensitivity studies.
enum class GapCharge { electron, pair };

/// Gate-controlled effective barrier height V0_eff = V0_base - η·e·V_GS [J].
/// Throws PhysicsError (barrier collapse) when the result is nonpositive.
double effective_barrier(const BarrierParams& barrier, double v_gs);

/// ζ = sqrt(ħ² / (2 m* (V0_eff - E0))) [m]. Throws PhysicsError when the
/// carrier energy reaches the barrier top.
double decay_length(double v0_eff, double e0, double m_star);

/// Boundary-matched coefficients of Ψ(x) = C1 cosh(x/ζ) + C2 sinh(x/ζ):
///   C1 = (√n1 e^{iθ1} + √n2 e^{iθ2}) / (2 cosh(a/ζ))
///   C2 = -(√n1 e^{iθ1} - √n2 e^{iθ2}) / (2 sinh(a/ζ))
/// where a is the barrier half-width.
std::pair<std::complex<double>, std::complex<double>>
wavefunction_coeffs(const WavefunctionState& state, double half_width, double zeta);

struct SupercurrentDensity {
    double value = 0.0;    ///< J_S = J_C·sin(θ1-θ2) [A/m²]
    double critical = 0.0; ///< J_C, the prefactor [A/m²]
    double log_critical = 0.0; ///< ln(J_C); meaningful even when `critical` underflowed
    bool underflow = false;    ///< set when J_C underflowed to 0 in double range
};

/// Supercurrent density through the barrier,
///   J_S = q·ħ·√(n1·n2) / (2·M·ζ·sinh(2a/ζ)) · sin(θ1-θ2),
/// with (q, M) fixed by the carrier convention. Evaluated in log space so
/// thick barriers (2a/ζ beyond ~700) degrade to a flagged underflow instead
/// of overflowing the sinh.
SupercurrentDensity supercurrent_density(const WavefunctionState& state, double half_width,
                                         double zeta, double m_star,
                                         CarrierConvention conv = CarrierConvention::pair);

/// The same density evaluated through the boundary-matched coefficients,
/// J = -(1/2)·(q·ħ/(M·ζ))·Im(C1*·C2). The -1/2 is the orientation and
/// normalisation factor that reduces the coefficient form to the closed
/// form above (current positive for 0 < θ1-θ2 < π); the two routes must
/// agree to near machine precision and are cross-checked in the tests.
double supercurrent_density_from_coeffs(const WavefunctionState& state, double half_width,
                                        double zeta, double m_star,
                                        CarrierConvention conv = CarrierConvention::pair);

struct CriticalCurrent {
    double value = 0.0;     ///< effective I_C = min(J_C, J_C_max)·area [A]
    double unclamped = 0.0; ///< J_C·area before the material ceiling [A]
    bool clamped = false;   ///< true when the J_C_max ceiling engaged
};

/// Gate-dependent critical current of the device at incident energy E0.
CriticalCurrent critical_current(const JunctionDevice& device, double v_gs, double e0 = 0.0,
                                 CarrierConvention conv = CarrierConvention::pair);

/// R_n = Φ₀ / (2π·τ_n·I_C); the product I_C·R_n is gate-invariant.
double normal_resistance(double i_c, double tau_n);

/// Single-pole normal-electron conductance
/// G_n(ω) = (2π·I_C/Φ₀) / (jω + 1/τ_n); G_n(0) = 1/R_n.
std::complex<double> normal_conductance(double omega, double i_c, double tau_n);

/// Gap voltage 2Δ/e (or 2Δ/e* under the pair convention) [V].
double gap_voltage(double delta_sc, GapCharge gap = GapCharge::electron);

/// Piecewise I-V law: V = 0 up to and including I_C (tie on the
/// supercurrent branch), V = V_gap + (I - I_C)·R_n above.
QPoint iv_voltage(double current, double i_c, double r_n, double delta_sc,
                  GapCharge gap = GapCharge::electron);

/// Uniform current sweep [0, I_max] through iv_voltage with the curve
/// parameters recorded.
IVCurve iv_sweep(const JunctionDevice& device, double v_gs, double e0, double i_max,
                 int n_points, GapCharge gap = GapCharge::electron,
                 CarrierConvention conv = CarrierConvention::pair);

/// Parallel-plate junction capacitance C_jn = ε_r·ε₀·A/d [F].
double junction_capacitance(double eps_r, double area, double d);

} // namespace sssim

#endif
