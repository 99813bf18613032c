#ifndef SSSIM_CONFIG_HPP
#define SSSIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sssim/circuits.hpp"
#include "sssim/junction.hpp"
#include "sssim/noise.hpp"

namespace sssim {

enum class AnalysisKind { iv, lna, pa, noise, tradeoff };

const char* analysis_name(AnalysisKind kind);

struct IvSpec {
    double i_max = 0.0;
    int n_points = 201;
    std::vector<double> gate_levels{0.0}; ///< one curve per level [V]
    double e0 = 0.0;
};

struct LnaSpec {
    double i_bias = 0.0;
    double v_a = 0.0;
    double v_b = 0.0;
    double e0 = 0.0;
    int n_points = 101; ///< input-sweep samples for the CSV
};

struct PaSpec {
    double z_load = 0.0;
    double i_bias = 0.0;
    double gate_high = 0.0;
    double gate_low = 0.0;
    double r_on_mosfet = 5.0; ///< MOSFET comparison point [Ω]
    double e0 = 0.0;
};

struct NoiseSpec {
    double g = 1.0;
    double energy_window = 0.0;
    double f_min = 0.0;
    double temperature = 0.0;
    bool directional_third = false;
    bool paper_literal_exponent = false;
    double abs_tol = 1e-30;
    double rel_tol = 1e-9;
    int n_samples = 200; ///< integrand samples for the CSV
};

struct TradeoffSpec {
    double z_load = 0.0;
    double p_min_dbm = 0.0;
    double p_max_dbm = 0.0;
    int n_points = 25;
    PowerConvention convention = PowerConvention::square_wave;
};

struct OutputSpec {
    std::string dir = ".";
    std::string prefix = "sssim";
};

struct SwitchSpec {
    GapCharge gap_charge = GapCharge::electron;
    CarrierConvention carrier_convention = CarrierConvention::pair;
};

/// A fully resolved, validated run description. All quantities are SI.
struct RunConfig {
    SuperconductorParams material;
    bool material_is_builtin = true;
    BarrierParams barrier;
    double area = 0.0;
    WavefunctionState state;
    SwitchSpec switches;
    AnalysisKind analysis = AnalysisKind::iv;
    IvSpec iv;
    LnaSpec lna;
    PaSpec pa;
    NoiseSpec noise;
    TradeoffSpec tradeoff;
    OutputSpec output;
    std::vector<std::string> warnings; ///< regime warnings collected at parse time
    std::uint64_t hash = 0;            ///< FNV-1a of the source text

    JunctionDevice device() const;
    LNAConfig lna_config() const;
    PAConfig pa_config() const;
    NoiseParams noise_params() const;
};

/// Strict parse of the line-oriented `[section]` / `key = value unit`
/// format. Unknown sections, keys, or units are errors naming the offender
/// and its line; exactly one analysis section must be present. All
/// defaults are resolved into the returned config.
RunConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(serialize(c)) reproduces c exactly.
std::string serialize(const RunConfig& cfg);

/// Value equality over everything serialize() writes.
bool config_equal(const RunConfig& a, const RunConfig& b);

std::uint64_t fnv1a(std::string_view text);

} // namespace sssim

#endif
