#include "sssim/materials.hpp"

#include <cstdio>
#include <sstream>

#include "sssim/constants.hpp"
#include "sssim/errors.hpp"

namespace sssim {

namespace {

std::string positive_msg(const char* field) {
    return std::string("material: ") + field + " must be strictly positive";
}

} // namespace

std::vector<std::string> validate(const SuperconductorParams& sc) {
    if (!(sc.T_C > 0.0)) throw PhysicsError(positive_msg("T_C"));
    if (!(sc.Delta_SC > 0.0)) throw PhysicsError(positive_msg("Delta_SC"));
    if (!(sc.rho_F > 0.0)) throw PhysicsError(positive_msg("rho_F"));
    if (!(sc.n_star > 0.0)) throw PhysicsError(positive_msg("n_star"));
    if (!(sc.J_C_max > 0.0)) throw PhysicsError(positive_msg("J_C_max"));
    if (!(sc.tau_n > 0.0)) throw PhysicsError(positive_msg("tau_n"));
    if (!(sc.eps_F > 0.0)) throw PhysicsError(positive_msg("eps_F"));
    if (!(sc.Delta_SC < sc.eps_F)) {
        throw PhysicsError("material: Delta_SC must be below eps_F");
    }

    std::vector<std::string> warnings;
    if (sc.Delta_SC > sc.eps_F / 10.0) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "material '%s': Delta_SC = %.6g J is not deep below eps_F = %.6g J "
                      "(eps_F >> Delta_SC regime assumption weakened)",
                      sc.name.c_str(), sc.Delta_SC, sc.eps_F);
        warnings.emplace_back(buf);
    }
    return warnings;
}

std::vector<std::string> validate(const BarrierParams& barrier) {
    if (!(barrier.d > 0.0)) throw PhysicsError("barrier: thickness d must be strictly positive");
    if (!(barrier.eps_r >= 1.0)) throw PhysicsError("barrier: eps_r must be >= 1");
    if (!(barrier.m_star > 0.0)) throw PhysicsError("barrier: m_star must be strictly positive");
    if (!(barrier.V0_base > 0.0)) throw PhysicsError("barrier: V0 must be strictly positive");
    if (!(barrier.gate_lever > 0.0 && barrier.gate_lever <= 1.0)) {
        throw PhysicsError("barrier: gate_lever must lie in (0, 1]");
    }

    std::vector<std::string> warnings;
    if (barrier.d > 1e-9) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "barrier: d = %.6g m exceeds the ~1 nm tunnelling regime", barrier.d);
        warnings.emplace_back(buf);
    }
    return warnings;
}

double critical_frequency(const SuperconductorParams& sc) {
    if (!(sc.T_C > 0.0)) throw PhysicsError("critical_frequency: requires T_C > 0");
    return constants::k_B * sc.T_C / constants::h;
}

MaterialRegistry MaterialRegistry::with_builtins() {
    using namespace constants;

    MaterialRegistry reg;

    SuperconductorParams nb;
    nb.name = "niobium";
    // T_C = 10.0 K back-solves the quoted 208.27 GHz soft frequency limit
    // (literature value is 9.25 K); overridable from config.
    nb.T_C = 10.0;
    nb.Delta_SC = 1.764 * k_B * nb.T_C; // BCS weak-coupling gap
    // Free-electron estimate 3n/(2·eps_F) for Nb; a documented default, not
    // a measured value. It enters only as a linear prefactor.
    nb.rho_F = 1e47;
    nb.n_star = 1e20;
    nb.J_C_max = 2e10; // 2e6 A/cm^2
    // Back-solved so that I_C·R_n = Phi0/(2π·tau_n) = 20 mV, i.e. R_n = 1 Ω
    // at I_C = 20 mA.
    nb.tau_n = 1.6455298923772664e-14;
    nb.eps_F = 5.32 * e; // Nb literature Fermi energy

    reg.add(nb,
            "builtin: T_C back-solved from f_c = 208.27 GHz (literature 9.25 K); "
            "Delta_SC = 1.764 k_B T_C (BCS); J_C_max = 2e6 A/cm^2; n* = 1e20 m^-3; "
            "tau_n back-solved for R_n = 1 ohm at I_C = 20 mA; eps_F = 5.32 eV; "
            "rho_F free-electron estimate");
    return reg;
}

const SuperconductorParams& MaterialRegistry::get(const std::string& name) const {
    auto it = materials_.find(name);
    if (it == materials_.end()) {
        std::ostringstream oss;
        oss << "unknown material '" << name << "'; registry contains:";
        for (const auto& [known, _] : materials_) oss << " " << known;
        throw ConfigError(oss.str());
    }
    return it->second;
}

bool MaterialRegistry::contains(const std::string& name) const {
    return materials_.count(name) != 0;
}

void MaterialRegistry::add(const SuperconductorParams& sc, const std::string& provenance) {
    validate(sc); // builtins and registered customs must pass their own invariants
    materials_[sc.name] = sc;
    provenance_[sc.name] = provenance;
}

std::vector<std::string> MaterialRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(materials_.size());
    for (const auto& [name, _] : materials_) out.push_back(name);
    return out;
}

const std::string& MaterialRegistry::provenance(const std::string& name) const {
    static const std::string empty;
    auto it = provenance_.find(name);
    return it == provenance_.end() ? empty : it->second;
}

SuperconductorParams builtin_material(const std::string& name) {
    return MaterialRegistry::with_builtins().get(name);
}

} // namespace sssim
