#ifndef SSSIM_CIRCUITS_HPP
#define SSSIM_CIRCUITS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sssim/junction.hpp"

namespace sssim {

/// Current-biased LNA stage: one device, two input gate levels.
struct LNAConfig {
    JunctionDevice device;
    double I_B = 0.0;  ///< bias current [A]
    double V_Ai = 0.0; ///< input gate level A [V]
    double V_Bi = 0.0; ///< input gate level B [V]
    double E0 = 0.0;   ///< incident carrier energy [J]
    GapCharge gap = GapCharge::electron;
    CarrierConvention conv = CarrierConvention::pair;
};

/// One named approximation step with its numerically measured error
/// against the exact chain.
struct ApproximationDiagnostic {
    std::string name;
    std::string note;
    double relative_error = 0.0;
};

/// Gain/bandwidth/power summary shared by the LNA and PA analyses.
struct AmplifierResult {
    std::optional<double> gain_exact;
    std::optional<double> gain_closed_form;
    std::optional<double> f_3db; ///< [Hz]
    std::optional<double> p_out; ///< [W]
    struct BiasDetail {
        double v_a = 0.0, v_b = 0.0;
        double i_c1 = 0.0, i_c2 = 0.0;
        double r_n1 = 0.0, r_n2 = 0.0;
        double zeta1 = 0.0, zeta2 = 0.0;
    } bias;
    std::vector<ApproximationDiagnostic> diagnostics;
    std::vector<std::string> warnings;
};

/// The Eq-28-style resistance-difference scale factor with its inputs.
struct GammaRn {
    double value = 0.0;     ///< [SI scalar]
    double log_value = 0.0; ///< ln(value); finite even when value overflows
    double zeta_avg = 0.0;  ///< rms of ζ1, ζ2 [m]
    struct Components {
        double Phi0 = 0.0;
        double m_star = 0.0;
        double tau_n = 0.0;
        double sqrt_n1n2 = 0.0;
        double area = 0.0;
        double half_width = 0.0;
    } components;
};

/// H-bridge PA: four devices steering I_bias through Z_load.
/// Device order: top-left, top-right, bottom-left, bottom-right.
struct PAConfig {
    std::array<JunctionDevice, 4> devices;
    double Z_load = 0.0;    ///< [Ω]
    double I_bias = 0.0;    ///< [A]
    double gate_high = 0.0; ///< ON gate level [V]
    double gate_low = 0.0;  ///< OFF gate level [V]
    double E0 = 0.0;
    CarrierConvention conv = CarrierConvention::pair;
};

enum class Polarity { plus, zero, minus };

struct PAOutput {
    Polarity polarity = Polarity::zero;
    double v_load = 0.0; ///< [V]
    double i_load = 0.0; ///< [A]
    double p_load = 0.0; ///< [W]
};

struct EfficiencyComparison {
    double p_load = 0.0;            ///< delivered power [W]
    double p_loss_mosfet = 0.0;     ///< 2·R_on·I² conduction loss [W]
    double efficiency_mosfet = 0.0; ///< P_load / (P_load + P_loss)
    double efficiency_proposed = 1.0; ///< zero conduction drop on the ON pair
};

enum class PowerConvention { square_wave, sine_rms };

struct TradeoffPoint {
    double p_dbm = 0.0;
    double p_watts = 0.0;
    double current = 0.0; ///< required switched current [A]
    double area = 0.0;    ///< junction area supporting it at J_C_max [m²]
    double c_jn = 0.0;    ///< [F]
    double f_3db = 0.0;   ///< [Hz]
};

/// Intersection of the horizontal load line I = I_bias with the gated
/// device curve.
QPoint loadline_qpoint(const JunctionDevice& device, double v_gs, double e0, double i_bias,
                       GapCharge gap = GapCharge::electron,
                       CarrierConvention conv = CarrierConvention::pair);

/// Two-point gain (V_A - V_B)/(V_Ai - V_Bi) with both Q-points resolved on
/// the normal branch. The resistance-product identity
/// V_A - V_B = I_B·(R_n1 - R_n2) is asserted internally on every call
/// (residual measured relative to the Q-point voltage scale, limit 1e-10).
AmplifierResult lna_gain_exact(const LNAConfig& cfg);

/// Γ_Rn = Φ₀·m*·sinh(2a/ζ_avg) / (π·e*·τ_n·ħ·√(n1·n2)·A_jn) · sqrt(ħ²/2m*)
/// with ζ_avg the rms of the two decay lengths.
GammaRn gamma_rn(const JunctionDevice& device, double zeta1, double zeta2);

/// Closed-form small-signal gain A_V = I_B·Γ_Rn / (2·V0^{3/2}) with V0 in
/// volt units. Diagnostics carry the numerically measured error of each
/// stacked approximation (sinh factoring, square-root substitution,
/// binomial expansion) and of the total against the exact chain.
AmplifierResult lna_gain_closed_form(const LNAConfig& cfg);

/// Steered bridge output; ON devices carry I <= I_C so they drop no
/// voltage. Raises a steering-failure PhysicsError when the ON pair cannot
/// carry I_bias.
PAOutput pa_output(const PAConfig& cfg, Polarity polarity);

/// f_3dB = 1/(2π·Z_load·C_jn/2); the half comes from two devices in series
/// with the load. Mismatched devices produce a warning and the worst-case
/// (largest) capacitance is used.
double pa_bandwidth(const PAConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// DC-drop comparison against a MOSFET bridge with ON resistance R_on.
EfficiencyComparison pa_efficiency_advantage(const PAConfig& cfg, double r_on_mosfet);

/// Required current, area, capacitance and bandwidth for each target output
/// power, at the material's J_C_max. square_wave: I = sqrt(P/Z);
/// sine_rms: I = sqrt(2P/Z).
std::vector<TradeoffPoint> pa_power_frequency_tradeoff(const std::vector<double>& targets_dbm,
                                                       double z_load,
                                                       const SuperconductorParams& sc,
                                                       const BarrierParams& barrier,
                                                       PowerConvention convention =
                                                           PowerConvention::square_wave);

} // namespace sssim

#endif
