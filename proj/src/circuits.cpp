#include "sssim/circuits.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "sssim/constants.hpp"
#include "sssim/errors.hpp"
#include "sssim/numerics.hpp"

namespace sssim {

namespace {

struct LevelPoint {
    double zeta = 0.0;
    double i_c = 0.0;
    double r_n = 0.0;
    double v_out = 0.0;
};

LevelPoint solve_level(const LNAConfig& cfg, double v_in) {
    const double v0_eff = effective_barrier(cfg.device.barrier, v_in);
    LevelPoint pt;
    pt.zeta = decay_length(v0_eff, cfg.E0, cfg.device.barrier.m_star);
    const auto ic = critical_current(cfg.device, v_in, cfg.E0, cfg.conv);
    pt.i_c = ic.value;
    if (cfg.I_B <= pt.i_c) {
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "branch violation: I_C = %.9g A at input %.9g V is not below "
                      "I_B = %.9g A; the Q-point must sit on the normal branch",
                      pt.i_c, v_in, cfg.I_B);
        throw PhysicsError(buf);
    }
    pt.r_n = normal_resistance(pt.i_c, cfg.device.sc.tau_n);
    pt.v_out = gap_voltage(cfg.device.sc.Delta_SC, cfg.gap) + (cfg.I_B - pt.i_c) * pt.r_n;
    return pt;
}

double rel_err(double approx, double exact) {
    const double denom = std::abs(exact);
    if (denom == 0.0) return std::abs(approx - exact) > 0.0
                                 ? std::numeric_limits<double>::infinity()
                                 : 0.0;
    return std::abs(approx - exact) / denom;
}

} // namespace

QPoint loadline_qpoint(const JunctionDevice& device, double v_gs, double e0, double i_bias,
                       GapCharge gap, CarrierConvention conv) {
    if (!(i_bias >= 0.0)) throw PhysicsError("loadline_qpoint: requires I_bias >= 0");
    const auto i_c = critical_current(device, v_gs, e0, conv);
    const double r_n = normal_resistance(i_c.value, device.sc.tau_n);
    return iv_voltage(i_bias, i_c.value, r_n, device.sc.Delta_SC, gap);
}

AmplifierResult lna_gain_exact(const LNAConfig& cfg) {
    if (!(cfg.I_B > 0.0)) throw PhysicsError("lna_gain_exact: requires I_B > 0");

    const LevelPoint a = solve_level(cfg, cfg.V_Ai);
    const LevelPoint b = solve_level(cfg, cfg.V_Bi);

    const double numerator = a.v_out - b.v_out;
    const double identity = cfg.I_B * (a.r_n - b.r_n);
    // With I_C·R_n constant the gap terms cancel exactly; the residual is
    // floating-point noise measured against the Q-point voltage scale.
    const double scale = std::max(std::abs(a.v_out), std::abs(b.v_out));
    if (scale > 0.0 && std::abs(numerator - identity) / scale > 1e-10) {
        throw NumericsError("lna_gain_exact: resistance-product identity violated beyond "
                            "1e-10 of the Q-point voltage scale");
    }

    AmplifierResult result;
    result.bias = {a.v_out, b.v_out, a.i_c, b.i_c, a.r_n, b.r_n, a.zeta, b.zeta};
    result.gain_exact =
        cfg.V_Ai == cfg.V_Bi ? 0.0 : numerator / (cfg.V_Ai - cfg.V_Bi);
    return result;
}

GammaRn gamma_rn(const JunctionDevice& device, double zeta1, double zeta2) {
    if (!(zeta1 > 0.0 && zeta2 > 0.0)) {
        throw PhysicsError("gamma_rn: requires zeta1, zeta2 > 0");
    }
    using namespace constants;

    GammaRn g;
    g.zeta_avg = std::sqrt(0.5 * (zeta1 * zeta1 + zeta2 * zeta2));
    const double half_width = 0.5 * device.barrier.d;
    const double m_star = device.barrier.m_star;
    const double sqrt_n1n2 = std::sqrt(device.state.n1 * device.state.n2);

    // value = Phi0·m*·sinh(2a/ζavg) / (π·e*·τ_n·ħ·√(n1n2)·A) · ħ/sqrt(2m*),
    // assembled in log space so a huge sinh argument cannot overflow.
    g.log_value = std::log(Phi0) + 0.5 * std::log(m_star) - 0.5 * std::log(2.0) -
                  std::log(pi) - std::log(e_star) - std::log(device.sc.tau_n) -
                  std::log(sqrt_n1n2) - std::log(device.area) +
                  log_sinh(2.0 * half_width / g.zeta_avg);
    g.value = std::exp(g.log_value); // +inf for extreme barriers; log_value stays usable
    g.components = {Phi0, m_star, device.sc.tau_n, sqrt_n1n2, device.area, half_width};
    return g;
}

AmplifierResult lna_gain_closed_form(const LNAConfig& cfg) {
    AmplifierResult result = lna_gain_exact(cfg); // shares preconditions and bias detail
    const double zeta1 = result.bias.zeta1;
    const double zeta2 = result.bias.zeta2;

    const GammaRn gamma = gamma_rn(cfg.device, zeta1, zeta2);
    const double d = cfg.device.barrier.d;
    if (d / gamma.zeta_avg < 5.0) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "2a/zeta_avg = %.4g is below 5; the sinh factoring premise is weak",
                      d / gamma.zeta_avg);
        result.warnings.emplace_back(buf);
    }

    // V0 enters the closed form in volt units.
    const double v0_volts = cfg.device.barrier.V0_base / constants::e;
    const double gain_cf =
        cfg.I_B * gamma.value / (2.0 * std::pow(v0_volts, 1.5));
    result.gain_closed_form = gain_cf;

    // Numerically measured error of each stacked approximation.
    const double exact_diff =
        zeta1 * std::sinh(d / zeta1) - zeta2 * std::sinh(d / zeta2);
    const double factored_diff = std::sinh(d / gamma.zeta_avg) * (zeta1 - zeta2);
    result.diagnostics.push_back(
        {"sinh_factoring",
         "zeta1·sinh(2a/zeta1) - zeta2·sinh(2a/zeta2) replaced by "
         "sinh(2a/zeta_avg)·(zeta1 - zeta2)",
         rel_err(factored_diff, exact_diff)});

    const double sqrt_scale =
        std::sqrt(constants::hbar * constants::hbar /
                  (2.0 * cfg.device.barrier.m_star * constants::e));
    const double lever = cfg.device.barrier.gate_lever;
    const double inv_sqrt_a = 1.0 / std::sqrt(v0_volts - lever * cfg.V_Ai);
    const double inv_sqrt_b = 1.0 / std::sqrt(v0_volts - lever * cfg.V_Bi);
    result.diagnostics.push_back(
        {"sqrt_substitution",
         "zeta difference rewritten through the gate voltages",
         rel_err(sqrt_scale * (inv_sqrt_a - inv_sqrt_b), zeta1 - zeta2)});

    const double binom = (cfg.V_Ai - cfg.V_Bi) / (2.0 * std::pow(v0_volts, 1.5));
    result.diagnostics.push_back(
        {"binomial_expansion",
         "1/sqrt(V0-V_Ai) - 1/sqrt(V0-V_Bi) expanded to first order",
         rel_err(binom, inv_sqrt_a - inv_sqrt_b)});

    result.diagnostics.push_back(
        {"closed_form_total",
         "closed-form gain against the exact two-point chain",
         rel_err(gain_cf, *result.gain_exact)});
    return result;
}

namespace {

// ON pair for each steered polarity (indices into PAConfig::devices).
// plus: current flows top-right -> load -> bottom-left.
constexpr int kOnPairPlus[2] = {1, 2};
constexpr int kOnPairMinus[2] = {0, 3};

void check_steering(const PAConfig& cfg, const int (&pair)[2]) {
    for (int idx : pair) {
        const auto i_c = critical_current(cfg.devices[idx], cfg.gate_high, cfg.E0, cfg.conv);
        // the sizing invariant wants headroom in the intrinsic current; the
        // material ceiling is the hard carry limit
        if (!(i_c.unclamped > cfg.I_bias) || i_c.value < cfg.I_bias) {
            char buf[232];
            std::snprintf(buf, sizeof(buf),
                          "steering failure: ON device %d has I_C(gate_high) = %.9g A "
                          "(unclamped %.9g A) against I_bias = %.9g A",
                          idx, i_c.value, i_c.unclamped, cfg.I_bias);
            throw PhysicsError(buf);
        }
    }
}

} // namespace

PAOutput pa_output(const PAConfig& cfg, Polarity polarity) {
    if (!(cfg.Z_load > 0.0)) throw PhysicsError("pa_output: requires Z_load > 0");
    if (!(cfg.I_bias > 0.0)) throw PhysicsError("pa_output: requires I_bias > 0");

    PAOutput out;
    out.polarity = polarity;
    if (polarity == Polarity::zero) {
        return out; // balanced bridge, both arms split the bias, no load current
    }

    check_steering(cfg, polarity == Polarity::plus ? kOnPairPlus : kOnPairMinus);
    const double sign = polarity == Polarity::plus ? 1.0 : -1.0;
    out.i_load = sign * cfg.I_bias;
    out.v_load = sign * (cfg.I_bias * cfg.Z_load);
    out.p_load = out.v_load * out.i_load;
    return out;
}

double pa_bandwidth(const PAConfig& cfg, std::vector<std::string>* warnings) {
    if (!(cfg.Z_load > 0.0)) throw PhysicsError("pa_bandwidth: requires Z_load > 0");

    const auto& ref = cfg.devices[0];
    double c_jn = junction_capacitance(ref.barrier.eps_r, ref.area, ref.barrier.d);
    bool mismatch = false;
    for (int i = 1; i < 4; ++i) {
        const auto& dev = cfg.devices[i];
        if (dev.barrier.eps_r != ref.barrier.eps_r || dev.area != ref.area ||
            dev.barrier.d != ref.barrier.d) {
            mismatch = true;
        }
        c_jn = std::max(c_jn,
                        junction_capacitance(dev.barrier.eps_r, dev.area, dev.barrier.d));
    }
    if (mismatch && warnings) {
        warnings->emplace_back(
            "pa_bandwidth: bridge devices differ in area/barrier; using the worst-case "
            "(largest) junction capacitance");
    }

    const double tau_rc = cfg.Z_load * c_jn / 2.0; // two devices in series with the load
    return 1.0 / (2.0 * constants::pi * tau_rc);
}

EfficiencyComparison pa_efficiency_advantage(const PAConfig& cfg, double r_on_mosfet) {
    if (!(r_on_mosfet >= 0.0)) {
        throw PhysicsError("pa_efficiency_advantage: requires R_on >= 0");
    }
    EfficiencyComparison cmp;
    cmp.p_load = cfg.I_bias * cfg.I_bias * cfg.Z_load;
    cmp.p_loss_mosfet = 2.0 * r_on_mosfet * cfg.I_bias * cfg.I_bias;
    cmp.efficiency_mosfet = cmp.p_load / (cmp.p_load + cmp.p_loss_mosfet);
    cmp.efficiency_proposed = 1.0;
    return cmp;
}

std::vector<TradeoffPoint> pa_power_frequency_tradeoff(const std::vector<double>& targets_dbm,
                                                       double z_load,
                                                       const SuperconductorParams& sc,
                                                       const BarrierParams& barrier,
                                                       PowerConvention convention) {
    if (!(z_load > 0.0)) throw PhysicsError("tradeoff: requires Z_load > 0");
    if (!(sc.J_C_max > 0.0)) throw PhysicsError("tradeoff: requires J_C_max > 0");

    std::vector<TradeoffPoint> curve;
    curve.reserve(targets_dbm.size());
    for (double dbm : targets_dbm) {
        TradeoffPoint pt;
        pt.p_dbm = dbm;
        pt.p_watts = 1e-3 * std::pow(10.0, dbm / 10.0);
        pt.current = convention == PowerConvention::square_wave
                         ? std::sqrt(pt.p_watts / z_load)
                         : std::sqrt(2.0 * pt.p_watts / z_load);
        pt.area = pt.current / sc.J_C_max;
        pt.c_jn = junction_capacitance(barrier.eps_r, pt.area, barrier.d);
        pt.f_3db = 1.0 / (2.0 * constants::pi * z_load * pt.c_jn / 2.0);
        curve.push_back(pt);
    }
    return curve;
}

} // namespace sssim
