#include "sssim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "sssim/constants.hpp"
#include "sssim/errors.hpp"

namespace sssim {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail_at(int line, int column, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + msg);
}

enum class Dim {
    length,
    area,
    energy,
    voltage,
    current,
    temperature,
    frequency,
    resistance,
    time,
    density,
    current_density,
    dos,
    mass,
    angle,
    power_dbm,
    scalar, // dimensionless, no unit suffix allowed
};

const std::map<std::string, double>& unit_table(Dim dim) {
    using namespace constants;
    static const std::map<Dim, std::map<std::string, double>> tables = {
        {Dim::length,
         {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}}},
        {Dim::area,
         {{"m^2", 1.0}, {"cm^2", 1e-4}, {"mm^2", 1e-6}, {"um^2", 1e-12}, {"nm^2", 1e-18}}},
        {Dim::energy,
         {{"J", 1.0}, {"eV", e}, {"meV", 1e-3 * e}, {"ueV", 1e-6 * e}, {"keV", 1e3 * e}}},
        {Dim::voltage, {{"V", 1.0}, {"mV", 1e-3}, {"uV", 1e-6}, {"kV", 1e3}}},
        {Dim::current, {{"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}, {"nA", 1e-9}}},
        {Dim::temperature, {{"K", 1.0}, {"mK", 1e-3}}},
        {Dim::frequency,
         {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}, {"THz", 1e12}}},
        {Dim::resistance, {{"ohm", 1.0}, {"Ohm", 1.0}, {"mohm", 1e-3}, {"kohm", 1e3}}},
        {Dim::time,
         {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}, {"fs", 1e-15}}},
        {Dim::density, {{"m^-3", 1.0}, {"cm^-3", 1e6}}},
        {Dim::current_density, {{"A/m^2", 1.0}, {"A/cm^2", 1e4}, {"MA/cm^2", 1e10}}},
        {Dim::dos, {{"/J/m^3", 1.0}, {"/eV/m^3", 1.0 / e}}},
        {Dim::mass, {{"kg", 1.0}, {"m_e", m_e}}},
        {Dim::angle, {{"rad", 1.0}, {"mrad", 1e-3}, {"deg", pi / 180.0}}},
        {Dim::power_dbm, {{"dBm", 1.0}}},
        {Dim::scalar, {}},
    };
    return tables.at(dim);
}

struct RawEntry {
    std::string value;
    int line = 0;
    int column = 1; // 1-based position of the value in the original line
    bool used = false;
};

using Section = std::map<std::string, RawEntry>;

double parse_number(const std::string& token, int line, int column) {
    double out = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        fail_at(line, column, "'" + token + "' is not a valid number");
    }
    return out;
}

double parse_quantity(const std::string& raw, Dim dim, const std::string& key, int line,
                      int column) {
    const std::string text = trim(raw);
    const std::size_t split = text.find_first_of(" \t");
    const std::string number = split == std::string::npos ? text : trim(text.substr(0, split));
    const std::string unit = split == std::string::npos ? "" : trim(text.substr(split));

    const double value = parse_number(number, line, column);
    const auto& table = unit_table(dim);

    if (dim == Dim::scalar) {
        if (!unit.empty()) {
            fail_at(line, column,
                    "key '" + key + "' is dimensionless; drop the unit '" + unit + "'");
        }
        return value;
    }
    if (unit.empty()) {
        fail_at(line, column, "key '" + key + "' requires a unit suffix");
    }
    const auto it = table.find(unit);
    if (it == table.end()) {
        std::ostringstream oss;
        oss << "unknown unit '" << unit << "' for key '" << key << "'; accepted:";
        for (const auto& [name, _] : table) oss << " " << name;
        fail_at(line, column + static_cast<int>(split == std::string::npos ? 0 : split + 1),
                oss.str());
    }
    return value * it->second;
}

/// Typed view over one parsed section; tracks key consumption so leftovers
/// can be rejected.
class SectionReader {
public:
    SectionReader(const std::string& name, Section* section)
        : name_(name), section_(section) {}

    bool has(const std::string& key) const {
        return section_ != nullptr && section_->count(key) != 0;
    }

    double quantity(const std::string& key, Dim dim) {
        const RawEntry& entry = require(key);
        return parse_quantity(entry.value, dim, key, entry.line, entry.column);
    }

    double quantity_or(const std::string& key, Dim dim, double fallback) {
        if (!has(key)) return fallback;
        return quantity(key, dim);
    }

    std::vector<double> quantity_list(const std::string& key, Dim dim) {
        const RawEntry& entry = require(key);
        std::vector<double> out;
        std::stringstream ss(entry.value);
        std::string item;
        int column = entry.column;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_quantity(item, dim, key, entry.line, column));
            column += static_cast<int>(item.size()) + 1;
        }
        if (out.empty()) fail(entry.line, "key '" + key + "' has an empty list");
        return out;
    }

    int count(const std::string& key, int fallback) {
        if (!has(key)) return fallback;
        const RawEntry& entry = require(key);
        const double v = parse_quantity(entry.value, Dim::scalar, key, entry.line, entry.column);
        if (v < 1.0 || v != std::floor(v)) {
            fail_at(entry.line, entry.column, "key '" + key + "' must be a positive integer");
        }
        return static_cast<int>(v);
    }

    bool flag(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const RawEntry& entry = require(key);
        const std::string v = trim(entry.value);
        if (v == "true" || v == "on" || v == "yes") return true;
        if (v == "false" || v == "off" || v == "no") return false;
        fail_at(entry.line, entry.column, "key '" + key + "' expects true/false");
    }

    std::string word(const std::string& key, const std::vector<std::string>& allowed,
                     const std::string& fallback) {
        if (!has(key)) return fallback;
        const RawEntry& entry = require(key);
        const std::string v = trim(entry.value);
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
            std::ostringstream oss;
            oss << "key '" << key << "' value '" << v << "' not recognised; accepted:";
            for (const auto& a : allowed) oss << " " << a;
            fail(entry.line, oss.str());
        }
        return v;
    }

    std::string text(const std::string& key, const std::string& fallback) {
        if (!has(key)) return fallback;
        return trim(require(key).value);
    }

    void finish() const {
        if (section_ == nullptr) return;
        for (const auto& [key, entry] : *section_) {
            if (!entry.used) {
                fail(entry.line, "unknown key '" + key + "' in section [" + name_ + "]");
            }
        }
    }

private:
    const RawEntry& require(const std::string& key) {
        if (section_ == nullptr || section_->count(key) == 0) {
            throw ConfigError("config: missing required key '" + key + "' in section [" +
                              name_ + "]");
        }
        RawEntry& entry = (*section_)[key];
        entry.used = true;
        return entry;
    }

    std::string name_;
    Section* section_;
};

constexpr double kDefaultTheta2 = 1.5707963267948966; // π/2, peak supercurrent phase

} // namespace

const char* analysis_name(AnalysisKind kind) {
    switch (kind) {
    case AnalysisKind::iv: return "iv";
    case AnalysisKind::lna: return "lna";
    case AnalysisKind::pa: return "pa";
    case AnalysisKind::noise: return "noise";
    case AnalysisKind::tradeoff: return "tradeoff";
    }
    return "?";
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

JunctionDevice RunConfig::device() const {
    JunctionDevice dev;
    dev.sc = material;
    dev.barrier = barrier;
    dev.area = area;
    dev.state = state;
    return dev;
}

LNAConfig RunConfig::lna_config() const {
    LNAConfig cfg;
    cfg.device = device();
    cfg.I_B = lna.i_bias;
    cfg.V_Ai = lna.v_a;
    cfg.V_Bi = lna.v_b;
    cfg.E0 = lna.e0;
    cfg.gap = switches.gap_charge;
    cfg.conv = switches.carrier_convention;
    return cfg;
}

PAConfig RunConfig::pa_config() const {
    PAConfig cfg;
    cfg.devices = {device(), device(), device(), device()};
    cfg.Z_load = pa.z_load;
    cfg.I_bias = pa.i_bias;
    cfg.gate_high = pa.gate_high;
    cfg.gate_low = pa.gate_low;
    cfg.E0 = pa.e0;
    cfg.conv = switches.carrier_convention;
    return cfg;
}

NoiseParams RunConfig::noise_params() const {
    NoiseParams p;
    p.sc = material;
    p.barrier = barrier;
    p.g_degeneracy = noise.g;
    p.energy_window = noise.energy_window;
    p.f_min = noise.f_min;
    p.T = noise.temperature;
    p.directional_third = noise.directional_third;
    p.paper_literal_exponent = noise.paper_literal_exponent;
    p.tol.abs_tol = noise.abs_tol;
    p.tol.rel_tol = noise.rel_tol;
    return p;
}

RunConfig parse_config(std::string_view text) {
    static const std::set<std::string> kKnownSections = {
        "material", "barrier", "device", "switches", "output",
        "iv",       "lna",     "pa",     "noise",    "tradeoff"};
    static const std::set<std::string> kAnalysisSections = {"iv", "lna", "pa", "noise",
                                                            "tradeoff"};

    std::map<std::string, Section> sections;
    std::map<std::string, int> section_lines;

    // Pass 1: raw line structure.
    std::string current;
    int line_no = 0;
    std::stringstream stream{std::string(text)};
    std::string raw_line;
    while (std::getline(stream, raw_line)) {
        ++line_no;
        const std::size_t hash_pos = raw_line.find('#');
        if (hash_pos != std::string::npos) raw_line.erase(hash_pos);
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (!kKnownSections.count(name)) fail(line_no, "unknown section [" + name + "]");
            if (sections.count(name)) fail(line_no, "duplicate section [" + name + "]");
            sections[name] = {};
            section_lines[name] = line_no;
            current = name;
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        if (current.empty()) fail(line_no, "key outside of any [section]");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (value.empty()) fail(line_no, "empty value for key '" + key + "'");
        if (sections[current].count(key)) {
            fail(line_no, "duplicate key '" + key + "' in section [" + current + "]");
        }
        // 1-based column of the value in the original line, for error reports
        const std::size_t raw_eq = raw_line.find('=');
        std::size_t value_pos = raw_eq + 1;
        while (value_pos < raw_line.size() &&
               std::isspace(static_cast<unsigned char>(raw_line[value_pos]))) {
            ++value_pos;
        }
        sections[current][key] = {value, line_no, static_cast<int>(value_pos) + 1, false};
    }

    // Exactly one analysis section.
    std::vector<std::string> analyses;
    for (const auto& name : kAnalysisSections) {
        if (sections.count(name)) analyses.push_back(name);
    }
    if (analyses.empty()) {
        throw ConfigError("config: expected exactly one analysis section of "
                          "[iv] [lna] [pa] [noise] [tradeoff]; found none");
    }
    if (analyses.size() > 1) {
        std::ostringstream oss;
        oss << "config: exactly one analysis section allowed; found";
        for (const auto& name : analyses) oss << " [" << name << "]";
        throw ConfigError(oss.str());
    }

    auto section = [&](const std::string& name) -> SectionReader {
        auto it = sections.find(name);
        return SectionReader(name, it == sections.end() ? nullptr : &it->second);
    };

    RunConfig cfg;
    cfg.hash = fnv1a(text);

    // [material]
    {
        if (!sections.count("material")) {
            throw ConfigError("config: missing required section [material]");
        }
        SectionReader material = section("material");
        const std::string name = material.text("name", "");
        if (name.empty()) {
            throw ConfigError("config: missing required key 'name' in section [material]");
        }
        const auto registry = MaterialRegistry::with_builtins();
        if (registry.contains(name)) {
            cfg.material = registry.get(name);
            cfg.material_is_builtin = true;
        } else {
            // A custom material must be fully specified inline.
            const bool complete = material.has("T_C") && material.has("Delta_SC") &&
                                  material.has("rho_F") && material.has("n_star") &&
                                  material.has("J_C_max") && material.has("tau_n") &&
                                  material.has("eps_F");
            if (!complete) {
                registry.get(name); // throws the unknown-material error
            }
            cfg.material.name = name;
            cfg.material_is_builtin = false;
        }
        cfg.material.T_C = material.quantity_or("T_C", Dim::temperature, cfg.material.T_C);
        cfg.material.Delta_SC =
            material.quantity_or("Delta_SC", Dim::energy, cfg.material.Delta_SC);
        cfg.material.rho_F = material.quantity_or("rho_F", Dim::dos, cfg.material.rho_F);
        cfg.material.n_star = material.quantity_or("n_star", Dim::density, cfg.material.n_star);
        cfg.material.J_C_max =
            material.quantity_or("J_C_max", Dim::current_density, cfg.material.J_C_max);
        cfg.material.tau_n = material.quantity_or("tau_n", Dim::time, cfg.material.tau_n);
        cfg.material.eps_F = material.quantity_or("eps_F", Dim::energy, cfg.material.eps_F);
        material.finish();
    }

    // [barrier]
    {
        SectionReader barrier = section("barrier");
        if (!sections.count("barrier")) {
            throw ConfigError("config: missing required section [barrier]");
        }
        cfg.barrier.eps_r = barrier.quantity("eps_r", Dim::scalar);
        cfg.barrier.m_star =
            barrier.quantity_or("m_star", Dim::mass, constants::m_star_default);
        cfg.barrier.d = barrier.quantity("d", Dim::length);
        cfg.barrier.V0_base = barrier.quantity("V0", Dim::energy);
        cfg.barrier.gate_lever = barrier.quantity_or("gate_lever", Dim::scalar, 1.0);
        barrier.finish();
    }

    // [device]
    {
        SectionReader device = section("device");
        if (!sections.count("device")) {
            throw ConfigError("config: missing required section [device]");
        }
        cfg.area = device.quantity("area", Dim::area);
        cfg.state.n1 = device.quantity_or("n1", Dim::density, cfg.material.n_star);
        cfg.state.n2 = device.quantity_or("n2", Dim::density, cfg.material.n_star);
        cfg.state.theta1 = device.quantity_or("theta1", Dim::angle, 0.0);
        cfg.state.theta2 = device.quantity_or("theta2", Dim::angle, kDefaultTheta2);
        device.finish();
    }

    // [switches]
    {
        SectionReader sw = section("switches");
        cfg.switches.gap_charge =
            sw.word("gap_charge", {"electron", "pair"}, "electron") == "electron"
                ? GapCharge::electron
                : GapCharge::pair;
        cfg.switches.carrier_convention =
            sw.word("carrier_convention", {"pair", "bare"}, "pair") == "pair"
                ? CarrierConvention::pair
                : CarrierConvention::bare;
        sw.finish();
    }

    // analysis block
    const std::string& analysis = analyses.front();
    if (analysis == "iv") {
        cfg.analysis = AnalysisKind::iv;
        SectionReader iv = section("iv");
        cfg.iv.i_max = iv.quantity("I_max", Dim::current);
        cfg.iv.n_points = iv.count("n_points", cfg.iv.n_points);
        if (iv.has("gate_levels")) {
            cfg.iv.gate_levels = iv.quantity_list("gate_levels", Dim::voltage);
        }
        cfg.iv.e0 = iv.quantity_or("E0", Dim::energy, 0.0);
        iv.finish();
    } else if (analysis == "lna") {
        cfg.analysis = AnalysisKind::lna;
        SectionReader lna = section("lna");
        cfg.lna.i_bias = lna.quantity("I_bias", Dim::current);
        cfg.lna.v_a = lna.quantity("V_A", Dim::voltage);
        cfg.lna.v_b = lna.quantity("V_B", Dim::voltage);
        cfg.lna.e0 = lna.quantity_or("E0", Dim::energy, 0.0);
        cfg.lna.n_points = lna.count("n_points", cfg.lna.n_points);
        lna.finish();
    } else if (analysis == "pa") {
        cfg.analysis = AnalysisKind::pa;
        SectionReader pa = section("pa");
        cfg.pa.z_load = pa.quantity("Z_load", Dim::resistance);
        cfg.pa.i_bias = pa.quantity("I_bias", Dim::current);
        cfg.pa.gate_high = pa.quantity("gate_high", Dim::voltage);
        cfg.pa.gate_low = pa.quantity("gate_low", Dim::voltage);
        cfg.pa.r_on_mosfet = pa.quantity_or("R_on_mosfet", Dim::resistance, cfg.pa.r_on_mosfet);
        cfg.pa.e0 = pa.quantity_or("E0", Dim::energy, 0.0);
        pa.finish();
    } else if (analysis == "noise") {
        cfg.analysis = AnalysisKind::noise;
        SectionReader noise = section("noise");
        cfg.noise.g = noise.quantity_or("g", Dim::scalar, cfg.noise.g);
        cfg.noise.energy_window = noise.quantity("energy_window", Dim::energy);
        cfg.noise.f_min = noise.quantity("f_min", Dim::frequency);
        cfg.noise.temperature = noise.quantity("T", Dim::temperature);
        cfg.noise.directional_third = noise.flag("directional_third", false);
        cfg.noise.paper_literal_exponent = noise.flag("paper_literal_exponent", false);
        cfg.noise.abs_tol = noise.quantity_or("abs_tol", Dim::scalar, cfg.noise.abs_tol);
        cfg.noise.rel_tol = noise.quantity_or("rel_tol", Dim::scalar, cfg.noise.rel_tol);
        cfg.noise.n_samples = noise.count("n_samples", cfg.noise.n_samples);
        noise.finish();
    } else {
        cfg.analysis = AnalysisKind::tradeoff;
        SectionReader tr = section("tradeoff");
        cfg.tradeoff.z_load = tr.quantity("Z_load", Dim::resistance);
        cfg.tradeoff.p_min_dbm = tr.quantity("P_min", Dim::power_dbm);
        cfg.tradeoff.p_max_dbm = tr.quantity("P_max", Dim::power_dbm);
        cfg.tradeoff.n_points = tr.count("n_points", cfg.tradeoff.n_points);
        cfg.tradeoff.convention =
            tr.word("convention", {"square_wave", "sine_rms"}, "square_wave") == "square_wave"
                ? PowerConvention::square_wave
                : PowerConvention::sine_rms;
        if (cfg.tradeoff.p_min_dbm > cfg.tradeoff.p_max_dbm) {
            fail(section_lines.at("tradeoff"), "P_min must not exceed P_max");
        }
        tr.finish();
    }

    // [output]
    {
        SectionReader output = section("output");
        cfg.output.dir = output.text("dir", cfg.output.dir);
        cfg.output.prefix = output.text("prefix", cfg.output.prefix);
        output.finish();
    }

    // Full physical validation; regime warnings are recorded on the config.
    cfg.warnings = validate(cfg.device());
    if (cfg.analysis == AnalysisKind::noise) {
        auto noise_warnings = validate(cfg.noise_params());
        cfg.warnings.insert(cfg.warnings.end(), noise_warnings.begin(), noise_warnings.end());
    }
    return cfg;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string serialize(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[material]\n";
    out << "name = " << cfg.material.name << "\n";
    out << "T_C = " << num(cfg.material.T_C) << " K\n";
    out << "Delta_SC = " << num(cfg.material.Delta_SC) << " J\n";
    out << "rho_F = " << num(cfg.material.rho_F) << " /J/m^3\n";
    out << "n_star = " << num(cfg.material.n_star) << " m^-3\n";
    out << "J_C_max = " << num(cfg.material.J_C_max) << " A/m^2\n";
    out << "tau_n = " << num(cfg.material.tau_n) << " s\n";
    out << "eps_F = " << num(cfg.material.eps_F) << " J\n";

    out << "\n[barrier]\n";
    out << "eps_r = " << num(cfg.barrier.eps_r) << "\n";
    out << "m_star = " << num(cfg.barrier.m_star) << " kg\n";
    out << "d = " << num(cfg.barrier.d) << " m\n";
    out << "V0 = " << num(cfg.barrier.V0_base) << " J\n";
    out << "gate_lever = " << num(cfg.barrier.gate_lever) << "\n";

    out << "\n[device]\n";
    out << "area = " << num(cfg.area) << " m^2\n";
    out << "n1 = " << num(cfg.state.n1) << " m^-3\n";
    out << "n2 = " << num(cfg.state.n2) << " m^-3\n";
    out << "theta1 = " << num(cfg.state.theta1) << " rad\n";
    out << "theta2 = " << num(cfg.state.theta2) << " rad\n";

    out << "\n[switches]\n";
    out << "gap_charge = "
        << (cfg.switches.gap_charge == GapCharge::electron ? "electron" : "pair") << "\n";
    out << "carrier_convention = "
        << (cfg.switches.carrier_convention == CarrierConvention::pair ? "pair" : "bare")
        << "\n";

    out << "\n[" << analysis_name(cfg.analysis) << "]\n";
    switch (cfg.analysis) {
    case AnalysisKind::iv: {
        out << "I_max = " << num(cfg.iv.i_max) << " A\n";
        out << "n_points = " << cfg.iv.n_points << "\n";
        out << "gate_levels = ";
        for (std::size_t i = 0; i < cfg.iv.gate_levels.size(); ++i) {
            if (i) out << ", ";
            out << num(cfg.iv.gate_levels[i]) << " V";
        }
        out << "\n";
        out << "E0 = " << num(cfg.iv.e0) << " J\n";
        break;
    }
    case AnalysisKind::lna:
        out << "I_bias = " << num(cfg.lna.i_bias) << " A\n";
        out << "V_A = " << num(cfg.lna.v_a) << " V\n";
        out << "V_B = " << num(cfg.lna.v_b) << " V\n";
        out << "E0 = " << num(cfg.lna.e0) << " J\n";
        out << "n_points = " << cfg.lna.n_points << "\n";
        break;
    case AnalysisKind::pa:
        out << "Z_load = " << num(cfg.pa.z_load) << " ohm\n";
        out << "I_bias = " << num(cfg.pa.i_bias) << " A\n";
        out << "gate_high = " << num(cfg.pa.gate_high) << " V\n";
        out << "gate_low = " << num(cfg.pa.gate_low) << " V\n";
        out << "R_on_mosfet = " << num(cfg.pa.r_on_mosfet) << " ohm\n";
        out << "E0 = " << num(cfg.pa.e0) << " J\n";
        break;
    case AnalysisKind::noise:
        out << "g = " << num(cfg.noise.g) << "\n";
        out << "energy_window = " << num(cfg.noise.energy_window) << " J\n";
        out << "f_min = " << num(cfg.noise.f_min) << " Hz\n";
        out << "T = " << num(cfg.noise.temperature) << " K\n";
        out << "directional_third = " << (cfg.noise.directional_third ? "true" : "false")
            << "\n";
        out << "paper_literal_exponent = "
            << (cfg.noise.paper_literal_exponent ? "true" : "false") << "\n";
        out << "abs_tol = " << num(cfg.noise.abs_tol) << "\n";
        out << "rel_tol = " << num(cfg.noise.rel_tol) << "\n";
        out << "n_samples = " << cfg.noise.n_samples << "\n";
        break;
    case AnalysisKind::tradeoff:
        out << "Z_load = " << num(cfg.tradeoff.z_load) << " ohm\n";
        out << "P_min = " << num(cfg.tradeoff.p_min_dbm) << " dBm\n";
        out << "P_max = " << num(cfg.tradeoff.p_max_dbm) << " dBm\n";
        out << "n_points = " << cfg.tradeoff.n_points << "\n";
        out << "convention = "
            << (cfg.tradeoff.convention == PowerConvention::square_wave ? "square_wave"
                                                                        : "sine_rms")
            << "\n";
        break;
    }

    out << "\n[output]\n";
    out << "dir = " << cfg.output.dir << "\n";
    out << "prefix = " << cfg.output.prefix << "\n";
    return out.str();
}

bool config_equal(const RunConfig& a, const RunConfig& b) {
    // serialize() covers every value field, so textual equality is value
    // equality; custom materials re-resolve from their inline fields.
    return serialize(a) == serialize(b);
}

} // namespace sssim
