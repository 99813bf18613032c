// Acceptance suite: one test case per criterion, one printed pass/fail
// line each. Tolerances are pinned in code; nothing is deferred to later
// calibration. Criteria that fail do so honestly, with the measured
// numbers printed (see the summary notes in the repository README).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "sssim/circuits.hpp"
#include "sssim/config.hpp"
#include "sssim/constants.hpp"
#include "sssim/errors.hpp"
#include "sssim/noise.hpp"
#include "sssim/run.hpp"

using namespace sssim;
namespace k = sssim::constants;
namespace fs = std::filesystem;

namespace {

void report(const char* id, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %s: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    const std::string message = "criterion " + std::string(id) + ": " + detail;
    CHECK_MESSAGE(pass, message);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

JunctionDevice device_1um2_1nm() {
    JunctionDevice dev;
    dev.sc = builtin_material("niobium");
    dev.barrier = {11.68, k::m_star_default, 1e-9, 0.3 * k::e, 1.0};
    dev.area = 1e-12;
    dev.state = {1e26, 0.0, 1e26, 1.5707963267948966};
    return dev;
}

JunctionDevice device_thick() {
    JunctionDevice dev = device_1um2_1nm();
    dev.barrier.d = 1.5e-9; // keeps the intrinsic J_C below the material ceiling
    return dev;
}

PAConfig steered_bridge(double area) {
    PAConfig cfg;
    JunctionDevice dev = device_1um2_1nm();
    dev.area = area;
    cfg.devices = {dev, dev, dev, dev};
    cfg.Z_load = 50.0;
    cfg.I_bias = 0.02;
    cfg.gate_high = 0.05;
    cfg.gate_low = -0.05;
    return cfg;
}

} // namespace

TEST_CASE("criterion 01: junction capacitance") {
    const double c_jn = junction_capacitance(11.68, 1e-12, 1e-9);
    const double rel = std::abs(c_jn - 103.4e-15) / 103.4e-15;
    report("01", rel < 5e-3,
           fmt("junction capacitance C_jn = %.6g fF, %.4g%% from 103.4 fF (tol 0.5%%)",
               c_jn * 1e15, rel * 100.0));
}

TEST_CASE("criterion 02: pa bandwidth") {
    const double f = pa_bandwidth(steered_bridge(1e-12));
    const double rel = std::abs(f - 61.56e9) / 61.56e9;
    report("02", rel < 5e-3,
           fmt("f_3dB = %.6g GHz, %.4g%% from 61.56 GHz (tol 0.5%%)", f * 1e-9, rel * 100.0));
}

TEST_CASE("criterion 03: critical current sizing") {
    const auto dev = device_1um2_1nm(); // intrinsic J_C above the 2e10 A/m^2 ceiling
    const auto i_c = critical_current(dev, 0.0);
    const bool exact = i_c.clamped && i_c.value == dev.sc.J_C_max * dev.area &&
                       std::abs(i_c.value - 0.02) <= 1e-14 * 0.02;
    report("03", exact,
           fmt("I_C = %.17g A at J_C_max = 2e6 A/cm^2 over 1 um^2 (expected 0.02 A exactly, "
               "ceiling engaged = %g)",
               i_c.value, i_c.clamped ? 1.0 : 0.0));
}

TEST_CASE("criterion 04: critical frequency") {
    const double f_c = critical_frequency(builtin_material("niobium"));
    const double rel = std::abs(f_c - 208.27e9) / 208.27e9;
    report("04", rel < 1e-3,
           fmt("f_c(10 K) = %.6f GHz, %.4g%% from the quoted 208.27 GHz (tol 0.1%%; residual "
               "from the T_C rounding, documented)",
               f_c * 1e-9, rel * 100.0));
}

TEST_CASE("criterion 05: pa steering") {
    const auto cfg = steered_bridge(1.2e-12); // ON-pair I_C = 24 mA > 20 mA bias
    const auto plus = pa_output(cfg, Polarity::plus);
    const auto zero = pa_output(cfg, Polarity::zero);
    const auto minus = pa_output(cfg, Polarity::minus);
    const bool ok = plus.v_load == 1.0 && zero.v_load == 0.0 && minus.v_load == -1.0 &&
                    zero.p_load == 0.0 && minus.v_load == -plus.v_load;
    report("05", ok,
           fmt("V_load = %+.17g / %.17g / %+.17g V for plus/zero/minus (expected +1/0/-1 "
               "exactly)",
               plus.v_load, zero.v_load, minus.v_load));
}

TEST_CASE("criterion 06: gate-invariant I_C*R_n product") {
    const auto dev = device_thick();
    const double reference = k::Phi0 / (2.0 * k::pi * dev.sc.tau_n);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double v_gs = -0.05 + 0.05 * i / 49.0; // unclamped gate range
        const auto i_c = critical_current(dev, v_gs);
        const double product = i_c.value * normal_resistance(i_c.value, dev.sc.tau_n);
        worst = std::max(worst, std::abs(product - reference) / reference);
    }
    report("06", worst < 1e-10,
           fmt("max |I_C*R_n - Phi0/(2 pi tau_n)| / ref = %.3g over a 50-point V_GS sweep "
               "(tol 1e-10)",
               worst));
}

TEST_CASE("criterion 07: lna gain oracle") {
    // Closed-form Eq-30-style gain against the exact two-point chain at
    // small swing, over a 4-step halving sequence. Implemented exactly as
    // stated; the measured errors are printed either way.
    LNAConfig cfg;
    cfg.device = device_thick();
    cfg.I_B = 0.025;

    const double v0_volts = cfg.device.barrier.V0_base / k::e;
    double swing = v0_volts / 50.0;
    std::vector<double> errors;
    for (int step = 0; step < 5; ++step) {
        cfg.V_Ai = swing / 2.0;
        cfg.V_Bi = -swing / 2.0;
        const auto res = lna_gain_closed_form(cfg);
        errors.push_back(std::abs(*res.gain_closed_form - *res.gain_exact) /
                         std::abs(*res.gain_exact));
        swing /= 2.0;
    }
    bool monotone = true;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i] > errors[i - 1]) monotone = false;
    }
    const bool within = errors.front() <= 0.02;

    std::ostringstream detail;
    detail << "closed form vs exact chain, errors over the halving sequence =";
    for (double err : errors) detail << fmt(" %.12g", err);
    detail << "; requires <= 0.02 at swing V0/50 and a monotone shrink (measured: "
           << (monotone ? "monotone" : "non-monotone") << ")";
    report("07", within && monotone, detail.str());
}

TEST_CASE("criterion 08: transmission asymptote") {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> v0_dist(1.0, 10.0);
    std::uniform_real_distribution<double> frac(0.1, 0.9);
    std::uniform_real_distribution<double> beta_dist(6.0, 20.0);

    double worst = 0.0;
    int sign_flags = 0;
    const int draws = 100;
    for (int i = 0; i < draws; ++i) {
        NoiseParams p;
        p.sc = builtin_material("niobium");
        const double v0 = v0_dist(rng) * k::e;
        const double eps = frac(rng) * v0;
        const double beta = beta_dist(rng);
        p.barrier = {11.68, k::m_star_default,
                     beta * k::hbar / std::sqrt(2.0 * k::m_star_default * (v0 - eps)), v0, 1.0};

        const double exact = transmission_exact(eps, p);
        const auto approx = transmission_approx(eps, p);
        worst = std::max(worst, std::abs(approx.reference - exact) / exact);
        // the literal form's sign discrepancy must be detected on every draw
        if (approx.paper_literal < 0.0 && exact > 0.0) ++sign_flags;
    }
    report("08", worst < 1e-2 && sign_flags == draws,
           fmt("reference asymptote vs exact: worst relative error %.3g over 100 draws at "
               "beta >= 6 (tol 1e-2); literal-form sign discrepancy flagged on %g/100 draws",
               worst, static_cast<double>(sign_flags)));
}

TEST_CASE("criterion 09: noise integral oracle") {
    NoiseParams p;
    p.sc = builtin_material("niobium");
    p.barrier = {11.68, k::m_star_default, 1e-9, 6.0 * k::e, 1.0};
    p.g_degeneracy = 1.0;
    p.energy_window = 3.313e-23;
    p.f_min = 1e9;
    p.T = 4.0;

    const NoiseReport rep = noise_report(p);

    // The quadrature of the paper's own integrand and the closed form must
    // agree modulo the antiderivative step: both apply the same prefactor.
    const bool prefactor_ok = rep.prefactor_identity_rel_dev < 1e-9;
    // Either the antiderivative check passes at 1e-6 or the report
    // quantifies the coefficient discrepancy; silence is not acceptance.
    bool quantified = rep.antiderivative_ok;
    if (!quantified) {
        for (const auto& note : rep.notes) {
            if (note.find("antiderivative") != std::string::npos) quantified = true;
        }
        quantified = quantified && rep.antiderivative_max_rel_dev > 0.0 &&
                     std::isfinite(rep.antiderivative_max_rel_dev);
    }
    const bool populated = rep.n_star_quadrature > 0.0 && rep.n_star_closed_form > 0.0 &&
                           std::isfinite(rep.relative_error);

    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "prefactor identity dev %.3g (tol 1e-9); antiderivative max dev %.4g (%s); "
                  "quadrature-vs-closed rel error %.4g reported",
                  rep.prefactor_identity_rel_dev, rep.antiderivative_max_rel_dev,
                  rep.antiderivative_ok ? "passes 1e-6" : "discrepancy quantified",
                  rep.relative_error);
    report("09", prefactor_ok && quantified && populated, buf);
}

TEST_CASE("criterion 10: power-frequency trade-off curve") {
    const auto nb = builtin_material("niobium");
    const BarrierParams barrier{11.68, k::m_star_default, 1e-9, 0.3 * k::e, 1.0};

    const double anchor_dbm = 10.0 * std::log10(20.0); // 20 mW
    const auto curve =
        pa_power_frequency_tradeoff({-10.0, 0.0, anchor_dbm}, 50.0, nb, barrier);

    const auto& low = curve[0];
    const auto& anchor = curve[2];
    const double anchor_rel = std::abs(anchor.f_3db - 61.56e9) / 61.56e9;
    const double ratio = low.f_3db / 350e9;
    const bool ok = std::abs(anchor.current - 0.02) < 1e-12 && anchor_rel < 5e-3 &&
                    low.f_3db > 0.0 && std::isfinite(ratio);
    report("10", ok,
           fmt("anchor (20 mA, 50 ohm) -> f_3dB = %.5g GHz (%.4g%% from 61.56 GHz); -10 dBm "
               "point f_3dB",
               anchor.f_3db * 1e-9, anchor_rel * 100.0) +
               fmt(" = %.5g GHz, ratio to the 350 GHz headline = %.4f (reported, not "
                   "asserted)",
                   low.f_3db * 1e-9, ratio));
}

TEST_CASE("criterion 11: determinism") {
    const char* source = R"(
[material]
name = niobium

[barrier]
eps_r = 11.68
d = 1.5 nm
V0 = 0.3 eV

[device]
area = 1 um^2
n1 = 1e26 m^-3
n2 = 1e26 m^-3

[iv]
I_max = 40 mA
n_points = 301
gate_levels = 0 V, 25 mV

[output]
prefix = det
)";
    const RunConfig cfg = parse_config(source);

    auto body = [](const fs::path& file) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("# generated:", 0) == 0) continue;
            out << line << "\n";
        }
        return out.str();
    };

    const fs::path base = fs::temp_directory_path() / "sssim_acceptance";
    fs::remove_all(base);
    RunOptions a, b;
    a.out_dir_override = (base / "a").string();
    b.out_dir_override = (base / "b").string();
    b.jobs = 4;
    run(cfg, a);
    run(cfg, b);

    const bool identical =
        body(base / "a" / "det_iv_g0.csv") == body(base / "b" / "det_iv_g0.csv") &&
        body(base / "a" / "det_iv_g1.csv") == body(base / "b" / "det_iv_g1.csv") &&
        body(base / "a" / "det_summary.txt") == body(base / "b" / "det_summary.txt");
    report("11", identical,
           "identical config -> byte-identical CSV bodies across two runs (jobs 1 vs 4, "
           "timestamp line excluded)");
}

// ---------------------------------------------------------------------------
// criterion 12: every module invariant as a property test on random draws
// ---------------------------------------------------------------------------

namespace {

struct PropertySuite {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    void check(const char* name, bool ok, const std::string& detail = "") {
        std::printf("    [%s] %s%s%s\n", ok ? "ok" : "FAIL", name, detail.empty() ? "" : " — ",
                    detail.c_str());
        if (ok) {
            ++passed;
        } else {
            ++failed;
            failures.push_back(name);
        }
    }
};

} // namespace

TEST_CASE("criterion 12: invariant property suite") {
    std::mt19937_64 rng(1212);
    PropertySuite suite;

    // --- constants & materials -------------------------------------------
    {
        std::uniform_real_distribution<double> alpha(0.01, 10.0);
        auto nb = builtin_material("niobium");
        const double base = critical_frequency(nb);
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const double a = alpha(rng);
            auto scaled = nb;
            scaled.T_C = nb.T_C * a;
            if (std::abs(critical_frequency(scaled) - a * base) > 1e-12 * a * base) ok = false;
        }
        suite.check("materials: f_c linear in T_C (1000 draws)", ok);

        bool builtins_ok = true;
        for (const auto& name : MaterialRegistry::with_builtins().names()) {
            try {
                validate(MaterialRegistry::with_builtins().get(name));
            } catch (const Error&) {
                builtins_ok = false;
            }
        }
        suite.check("materials: builtins pass their own invariants", builtins_ok);
    }

    // --- junction ---------------------------------------------------------
    {
        std::uniform_real_distribution<double> n_dist(1e18, 1e27);
        std::uniform_real_distribution<double> theta(-6.3, 6.3);
        std::uniform_real_distribution<double> ratio(0.5, 99.0);
        const double zeta = 2.5e-10;

        bool bound_ok = true, strict_ok = true, odd_ok = true, route_ok = true;
        for (int i = 0; i < 1000; ++i) {
            WavefunctionState st{n_dist(rng), theta(rng), n_dist(rng), theta(rng)};
            const double a = 0.5 * ratio(rng) * zeta;
            const auto js = supercurrent_density(st, a, zeta, k::m_star_default);
            if (std::abs(js.value) > js.critical * (1.0 + 1e-14)) bound_ok = false;
            const double s = std::sin(st.theta1 - st.theta2);
            if (std::abs(s) < 1.0 - 1e-9 && std::abs(js.value) >= js.critical) {
                strict_ok = false;
            }

            WavefunctionState swapped{st.n1, st.theta2, st.n2, st.theta1};
            const auto neg = supercurrent_density(swapped, a, zeta, k::m_star_default);
            if (std::abs(neg.value + js.value) > 1e-14 * js.critical) odd_ok = false;

            if (a / zeta < 50.0) { // 2a/zeta < 100
                const double coeff =
                    supercurrent_density_from_coeffs(st, a, zeta, k::m_star_default);
                const double scale = std::max(std::abs(js.value), js.critical * 1e-12);
                if (std::abs(coeff - js.value) > 1e-10 * scale) route_ok = false;
            }
        }
        // peak value at exactly pi/2
        WavefunctionState peak{1e26, 1.5707963267948966, 1e26, 0.0};
        const auto at_peak = supercurrent_density(peak, 5e-10, zeta, k::m_star_default);
        suite.check("junction: |J_S| <= J_C over 1000 draws", bound_ok);
        suite.check("junction: equality only at |sin| = 1",
                    strict_ok && at_peak.value == at_peak.critical);
        suite.check("junction: J_S odd in the phase difference", odd_ok);
        suite.check("junction: coefficient route equals closed form (1e-10)", route_ok);

        // monotonicity: higher barrier -> smaller zeta -> smaller J_C
        bool zeta_antitone = true, jc_antitone = true;
        double prev_zeta = 1e9, prev_jc = 1e300;
        WavefunctionState st{1e26, 0.0, 1e26, 1.5707963267948966};
        for (int i = 0; i < 200; ++i) {
            const double v0 = (0.05 + 0.6 * i / 199.0) * k::e;
            const double z = decay_length(v0, 0.0, k::m_star_default);
            const double jc = supercurrent_density(st, 7.5e-10, z, k::m_star_default).critical;
            if (z >= prev_zeta) zeta_antitone = false;
            if (jc >= prev_jc) jc_antitone = false;
            prev_zeta = z;
            prev_jc = jc;
        }
        suite.check("junction: zeta antitone and J_C antitone in barrier height",
                    zeta_antitone && jc_antitone);

        // gate-invariant product
        const auto dev = device_thick();
        const double ref = k::Phi0 / (2.0 * k::pi * dev.sc.tau_n);
        bool product_ok = true;
        std::uniform_real_distribution<double> gate(-0.06, 0.0);
        for (int i = 0; i < 1000; ++i) {
            const auto i_c = critical_current(dev, gate(rng));
            const double product = i_c.value * normal_resistance(i_c.value, dev.sc.tau_n);
            if (std::abs(product - ref) > 1e-12 * ref) product_ok = false;
        }
        suite.check("junction: I_C*R_n gate-invariant to 1e-12 (1000 draws)", product_ok);

        // piecewise law: V(I_C) = 0 and the gap jump is exact by the model law
        std::uniform_real_distribution<double> above(1.0000001, 3.0);
        bool law_ok = true;
        for (int i = 0; i < 1000; ++i) {
            const double i_c = 1e-3 + 0.05 * (i % 97) / 96.0;
            const double r_n = 0.1 + 2.0 * (i % 31) / 30.0;
            const double delta = (0.5 + 2.0 * (i % 13) / 12.0) * 1e-22;
            if (iv_voltage(i_c, i_c, r_n, delta).voltage != 0.0) law_ok = false;
            const double current = i_c * above(rng);
            const auto qp = iv_voltage(current, i_c, r_n, delta);
            if (qp.voltage != gap_voltage(delta) + (current - i_c) * r_n) law_ok = false;
        }
        suite.check("junction: piecewise I-V law exact, gap jump at the knee", law_ok);
    }

    // --- circuits -----------------------------------------------------------
    {
        // gain sign is constant (negative for a positive lever) over the
        // valid domain
        std::uniform_real_distribution<double> mid(-0.02, -0.001);
        std::uniform_real_distribution<double> swings(1e-4, 6e-3);
        std::uniform_real_distribution<double> widths(1.5e-9, 1.8e-9);
        bool sign_ok = true, identity_ok = true;
        for (int i = 0; i < 1000; ++i) {
            LNAConfig cfg;
            cfg.device = device_thick();
            cfg.device.barrier.d = widths(rng);
            cfg.I_B = 0.025;
            const double centre = mid(rng);
            const double swing = swings(rng);
            cfg.V_Ai = centre + swing / 2.0;
            cfg.V_Bi = centre - swing / 2.0;
            const auto res = lna_gain_exact(cfg);
            if (!(*res.gain_exact < 0.0)) sign_ok = false;
            const double lhs = res.bias.v_a - res.bias.v_b;
            const double rhs = cfg.I_B * (res.bias.r_n1 - res.bias.r_n2);
            const double scale = std::max(std::abs(res.bias.v_a), std::abs(res.bias.v_b));
            if (std::abs(lhs - rhs) > 1e-10 * scale) identity_ok = false;
        }
        suite.check("circuits: gain sign = -sign(lever) over 1000 draws", sign_ok);
        suite.check("circuits: V_A - V_B = I_B (R_n1 - R_n2) to 1e-10 (1000 draws)",
                    identity_ok);

        // energy bookkeeping and bandwidth identity
        std::uniform_real_distribution<double> bias(5e-3, 0.02);
        std::uniform_real_distribution<double> loads(10.0, 200.0);
        bool energy_ok = true, bandwidth_ok = true;
        for (int i = 0; i < 1000; ++i) {
            auto cfg = steered_bridge(1.2e-12);
            cfg.I_bias = bias(rng);
            cfg.Z_load = loads(rng);
            const auto plus = pa_output(cfg, Polarity::plus);
            const auto zero = pa_output(cfg, Polarity::zero);
            if (plus.p_load != plus.v_load * plus.i_load) energy_ok = false;
            if (std::abs(plus.p_load - cfg.I_bias * cfg.I_bias * cfg.Z_load) >
                1e-12 * plus.p_load) {
                energy_ok = false;
            }
            if (zero.p_load != 0.0) energy_ok = false;

            const double f = pa_bandwidth(cfg);
            const double c_jn = junction_capacitance(11.68, 1.2e-12, 1e-9);
            if (std::abs(f * (cfg.Z_load * c_jn / 2.0) * 2.0 * k::pi - 1.0) > 1e-12) {
                bandwidth_ok = false;
            }
        }
        suite.check("circuits: PA energy bookkeeping exact (1000 draws)", energy_ok);
        suite.check("circuits: f_3dB*(Z C/2)*2pi = 1 to 1e-12 (1000 draws)", bandwidth_ok);

        // closed form converges to the exact chain as the swing shrinks:
        // err(s/2) <= err(s) over a decreasing sequence
        LNAConfig cfg;
        cfg.device = device_thick();
        cfg.I_B = 0.025;
        double swing = (cfg.device.barrier.V0_base / k::e) / 50.0;
        std::vector<double> errs;
        for (int step = 0; step < 4; ++step) {
            cfg.V_Ai = swing / 2.0;
            cfg.V_Bi = -swing / 2.0;
            const auto res = lna_gain_closed_form(cfg);
            errs.push_back(std::abs(*res.gain_closed_form - *res.gain_exact) /
                           std::abs(*res.gain_exact));
            swing /= 2.0;
        }
        bool converges = true;
        for (std::size_t i = 1; i < errs.size(); ++i) {
            if (errs[i] > errs[i - 1]) converges = false;
        }
        suite.check("circuits: closed form converges to exact chain as swing -> 0", converges,
                    fmt("errors %.12g -> %.12g -> ", errs[0], errs[1]) +
                        fmt("%.12g -> %.12g", errs[2], errs[3]));
    }

    // --- noise ---------------------------------------------------------------
    {
        NoiseParams base;
        base.sc = builtin_material("niobium");
        base.barrier = {11.68, k::m_star_default, 1e-9, 6.0 * k::e, 1.0};
        base.g_degeneracy = 1.0;
        base.energy_window = 3.313e-23;
        base.f_min = 1e9;
        base.T = 4.0;

        std::uniform_real_distribution<double> v0_dist(1.0, 10.0);
        std::uniform_real_distribution<double> frac(0.05, 0.95);
        std::uniform_real_distribution<double> width(5e-11, 3e-9);
        bool trans_ok = true;
        for (int i = 0; i < 1000; ++i) {
            auto p = base;
            p.barrier.V0_base = v0_dist(rng) * k::e;
            p.barrier.d = width(rng);
            const double eps = frac(rng) * p.barrier.V0_base;
            const double t = transmission_exact(eps, p);
            if (!(t > 0.0 && t <= 1.0)) trans_ok = false;
            auto wide = p;
            wide.barrier.d *= 1.7;
            if (!(transmission_exact(eps, wide) < t)) trans_ok = false;
        }
        suite.check("noise: transmission in (0,1], monotone in width (1000 draws)", trans_ok);

        bool dos_ok = true;
        std::uniform_real_distribution<double> above(1.0001, 1e4);
        for (int i = 0; i < 1000; ++i) {
            const double eps = base.sc.Delta_SC * above(rng);
            if (!(dos_sc(eps, base) > 2.0 * base.sc.rho_F)) dos_ok = false;
        }
        suite.check("noise: dos > 2 rho_F on its domain (1000 draws)", dos_ok);

        bool mono_ok = true, est_ok = true;
        std::uniform_real_distribution<double> wfrac(0.2, 1.0);
        for (int i = 0; i < 100; ++i) {
            auto p = base;
            const double w = wfrac(rng) * base.energy_window;
            p.energy_window = w;
            const auto small = noise_carriers_quadrature(p);
            p.energy_window = 2.0 * w;
            const auto large = noise_carriers_quadrature(p);
            if (!(large.value >= small.value)) mono_ok = false;
            if (!(small.quadrature.error_estimate >= 0.0 &&
                  std::isfinite(small.quadrature.error_estimate))) {
                est_ok = false;
            }
        }
        suite.check("noise: n* monotone nondecreasing in the window (100 draws)", mono_ok);
        suite.check("noise: error estimates nonnegative and finite", est_ok);

        const auto rep = noise_report(base);
        suite.check("noise: prefactor identity within quadrature tolerance",
                    rep.prefactor_identity_rel_dev < 1e-9,
                    fmt("deviation %.3g", rep.prefactor_identity_rel_dev));
    }

    // --- numerics -------------------------------------------------------------
    {
        std::uniform_real_distribution<double> coeff(-3.0, 3.0);
        bool poly_ok = true, additive_ok = true;
        for (int i = 0; i < 200; ++i) {
            const double c3 = coeff(rng), c2 = coeff(rng), c1 = coeff(rng), c0 = coeff(rng);
            auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
            const auto got = integrate(f, -1.0, 2.0, Tolerance{1e-14, 1e-13, 40});
            const double want = c3 * (16.0 - 1.0) / 4.0 + c2 * (8.0 + 1.0) / 3.0 +
                                c1 * (4.0 - 1.0) / 2.0 + c0 * 3.0;
            const double scale = std::max(std::abs(want), 1.0);
            if (std::abs(got.value - want) > 1e-12 * scale) poly_ok = false;

            auto g = [&](double x) { return std::exp(c1 * x / 3.0) + c2 * std::sin(x); };
            const auto whole = integrate(g, 0.0, 2.0, Tolerance{1e-13, 1e-11, 50});
            const auto left = integrate(g, 0.0, 0.8, Tolerance{1e-13, 1e-11, 50});
            const auto right = integrate(g, 0.8, 2.0, Tolerance{1e-13, 1e-11, 50});
            const double budget = whole.error_estimate + left.error_estimate +
                                  right.error_estimate + 1e-12 * std::abs(whole.value);
            if (std::abs(left.value + right.value - whole.value) > budget) additive_ok = false;
        }
        suite.check("numerics: polynomial exactness to 1e-12 (200 draws)", poly_ok);
        suite.check("numerics: interval additivity within summed estimates", additive_ok);

        bool logsinh_ok = true;
        double prev = log_sinh(1e-3);
        for (double x = 0.01; x < 60.0; x += 0.01) {
            const double cur = log_sinh(x);
            if (!(cur > prev)) logsinh_ok = false;
            prev = cur;
        }
        suite.check("numerics: log_sinh strictly increasing across the branch point",
                    logsinh_ok);

        // root-finding round trip: back-solve V_GS for a target I_C
        const auto dev = device_thick();
        std::uniform_real_distribution<double> targets(0.0135, 0.018);
        bool root_ok = true;
        for (int i = 0; i < 200; ++i) {
            const double target = targets(rng);
            const double v = find_root(
                [&](double v_gs) { return critical_current(dev, v_gs).unclamped - target; },
                -0.05, 0.0, Tolerance{1e-13, 0.0, 70});
            if (!(v >= -0.05 && v <= 0.0)) root_ok = false;
            const double recovered = critical_current(dev, v).unclamped;
            if (std::abs(recovered - target) > 1e-6 * target) root_ok = false;
        }
        suite.check("numerics: gate back-solve round trip to 1e-6 (200 draws)", root_ok);
    }

    // --- cli ----------------------------------------------------------------
    {
        bool roundtrip_ok = true;
        std::uniform_real_distribution<double> areas(0.5, 4.0);
        std::uniform_real_distribution<double> dws(1.0, 2.0);
        for (int i = 0; i < 1000; ++i) {
            char text[512];
            std::snprintf(text, sizeof(text),
                          "[material]\nname = niobium\n\n[barrier]\neps_r = 11.68\n"
                          "d = %.6f nm\nV0 = 0.3 eV\n\n[device]\narea = %.6f um^2\n\n"
                          "[iv]\nI_max = 40 mA\nn_points = %d\n",
                          dws(rng), areas(rng), 2 + static_cast<int>(areas(rng) * 50));
            const RunConfig first = parse_config(text);
            const RunConfig second = parse_config(serialize(first));
            if (!config_equal(first, second)) roundtrip_ok = false;
        }
        suite.check("cli: parse -> serialize -> parse round-trip (1000 draws)", roundtrip_ok);

        const bool codes_ok = static_cast<int>(ErrorClass::config) == 2 &&
                              static_cast<int>(ErrorClass::physics) == 3 &&
                              static_cast<int>(ErrorClass::numerics) == 4 &&
                              static_cast<int>(ErrorClass::io) == 5;
        suite.check("cli: exit codes partition error classes disjointly", codes_ok);

        // summaries are self-describing: the resolved config is echoed
        const char* text =
            "[material]\nname = niobium\n\n[barrier]\neps_r = 11.68\nd = 1 nm\n"
            "V0 = 0.3 eV\n\n[device]\narea = 1 um^2\nn1 = 1e26 m^-3\nn2 = 1e26 m^-3\n\n"
            "[pa]\nZ_load = 50 ohm\nI_bias = 20 mA\ngate_high = 50 mV\ngate_low = -50 mV\n";
        RunOptions opts;
        opts.out_dir_override =
            (fs::temp_directory_path() / "sssim_acceptance" / "echo").string();
        const auto res = run(parse_config(text), opts);
        suite.check("cli: summary echoes the resolved config",
                    res.summary.find("resolved config:") != std::string::npos &&
                        res.summary.find("name = niobium") != std::string::npos &&
                        res.summary.find("Z_load = 50 ohm") != std::string::npos);
    }

    std::ostringstream detail;
    detail << suite.passed << "/" << (suite.passed + suite.failed)
           << " properties passed on their stated draw counts";
    if (!suite.failures.empty()) {
        detail << "; failing:";
        for (const auto& f : suite.failures) detail << " [" << f << "]";
    }
    report("12", suite.failed == 0, detail.str());
}
