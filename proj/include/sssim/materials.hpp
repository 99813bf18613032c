#ifndef SSSIM_MATERIALS_HPP
#define SSSIM_MATERIALS_HPP

#include <map>
#include <string>
#include <vector>

namespace sssim {

/// Superconductor electrode parameters, strict SI.
struct SuperconductorParams {
    std::string name;
    double T_C = 0.0;     ///< critical temperature [K]
    double Delta_SC = 0.0;///< superconducting gap [J]
    double rho_F = 0.0;   ///< density of states at the Fermi level [states/(J·m³)]
    double n_star = 0.0;  ///< boson (Cooper-pair) density [m⁻³]
    double J_C_max = 0.0; ///< material critical current density ceiling [A/m²]
    double tau_n = 0.0;   ///< ensemble relaxation time for normal scattering [s]
    double eps_F = 0.0;   ///< Fermi energy [J]
};

/// Tunnelling-barrier (semiconductor) parameters, strict SI.
struct BarrierParams {
    double eps_r = 1.0;      ///< relative permittivity
    double m_star = 0.0;     ///< carrier effective mass in the barrier [kg]
    double d = 0.0;          ///< full barrier thickness (= 2a) [m]
    double V0_base = 0.0;    ///< barrier height at V_GS = 0 [J]
    double gate_lever = 1.0; ///< gate lever arm η ∈ (0, 1]
};

/// Checks hard invariants (throws PhysicsError) and returns soft regime
/// warnings (gap not deep below Fermi level, thick barrier, ...).
std::vector<std::string> validate(const SuperconductorParams& sc);
std::vector<std::string> validate(const BarrierParams& barrier);

/// f_c = k_B·T_C / h, the soft maximum operating frequency.
double critical_frequency(const SuperconductorParams& sc);

/// Named material database. Ships with niobium; configs may register more.
class MaterialRegistry {
public:
    static MaterialRegistry with_builtins();

    const SuperconductorParams& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    void add(const SuperconductorParams& sc, const std::string& provenance);
    std::vector<std::string> names() const;
    const std::string& provenance(const std::string& name) const;

private:
    std::map<std::string, SuperconductorParams> materials_;
    std::map<std::string, std::string> provenance_;
};

/// Convenience accessor over a fresh builtin registry.
SuperconductorParams builtin_material(const std::string& name);

} // namespace sssim

#endif
