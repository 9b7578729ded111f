// System parameters: the full dimensionless model constant set (in units of
// the mechanical frequency) plus the SI anchors used for unit recovery.
//
// All internal math is dimensionless; SI enters only through force_si_factor()
// and the thermal occupation argument hbar*omega_m/(2 kB T).
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "crowsense/constants.hpp"
#include "crowsense/errors.hpp"

namespace crowsense {

/// All model constants. Frequencies/rates are in units of the mechanical
/// frequency; omega_m_si, mass_si, temperature_si anchor the SI conversion.
/// Immutable by convention after construction; safe to share across workers.
struct SystemParams {
    double delta_w = 0.0;  ///< waveguide center detuning
    double xi_w = 0.0;     ///< nearest-neighbor hopping (> 0)
    double delta_s = 0.0;  ///< sensing-cavity detuning
    double delta_o = 0.0;  ///< observing-cavity detuning
    double xi_s = 0.0;     ///< sensing-cavity boundary coupling (> 0)
    double xi_o = 0.0;     ///< observing-cavity boundary coupling (> 0)
    double kappa_s = 0.0;  ///< sensing-cavity damping (>= 0)
    double kappa_o = 0.0;  ///< observing-cavity damping (>= 0)
    double gamma_m = 0.0;  ///< mechanical damping (>= 0)
    double g = 0.0;        ///< single-photon optomechanical coupling
    double e_o = 0.0;      ///< drive amplitude on the observing cavity
    int n_sites = 0;       ///< chain length N (sensing couples to site 1, observing to site N)
    double theta = 0.0;    ///< homodyne angle [rad]
    double mean_q = 0.0;   ///< mean mechanical displacement <Q>

    double omega_m_si = 0.0;      ///< mechanical frequency [rad/s]
    double mass_si = 0.0;         ///< oscillator mass [kg]
    double temperature_si = 0.0;  ///< bath temperature [K]; 0 switches thermal noise off

    /// Lower band edge of the reservoir spectrum.
    double band_lo() const { return delta_w - 2.0 * xi_w; }
    /// Upper band edge of the reservoir spectrum.
    double band_hi() const { return delta_w + 2.0 * xi_w; }
};

/// Parameter set used throughout: chain of 30 cavities, band [2, 14],
/// detunings chosen so both cavities sit below the band.
inline SystemParams default_params() {
    SystemParams p;
    p.delta_w = 8.0;
    p.xi_w = 3.0;
    p.delta_s = 4.0;
    p.delta_o = 2.0;
    p.xi_s = 4.0;
    p.xi_o = 2.0;
    p.kappa_s = 0.01;
    p.kappa_o = 0.05;
    p.gamma_m = 1e-5;
    p.g = 0.002;
    p.e_o = 2e5;
    p.n_sites = 30;
    p.theta = constants::pi / 2.0;
    p.mean_q = 0.0;
    p.omega_m_si = 2.0 * constants::pi * 0.5e9;
    p.mass_si = 1.4e-18;
    p.temperature_si = 300.0;
    return p;
}

/// Report-style validation result: empty <=> all invariants hold.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant; never throws.
inline ValidationReport validate(const SystemParams& p) {
    ValidationReport r;
    auto require = [&r](bool cond, const char* text) {
        if (!cond) r.violations.emplace_back(text);
    };
    require(p.xi_w > 0.0, "xi_w > 0");
    require(p.xi_s > 0.0, "xi_s > 0");
    require(p.xi_o > 0.0, "xi_o > 0");
    require(p.n_sites >= 2, "n_sites >= 2");
    require(p.kappa_s >= 0.0, "kappa_s >= 0");
    require(p.kappa_o >= 0.0, "kappa_o >= 0");
    require(p.gamma_m >= 0.0, "gamma_m >= 0");
    require(p.band_lo() < p.band_hi(), "band_lo < band_hi");
    return r;
}

/// SI prefactor that turns sqrt(S_add) into a force spectral density:
/// F_s(omega) = force_si_factor(p) * sqrt(S_add(omega))  [N/sqrt(Hz)].
inline double force_si_factor(const SystemParams& p) {
    if (!(p.mass_si > 0.0) || !(p.omega_m_si > 0.0)) {
        throw domain_error(error_code::invalid_config,
                           "force_si_factor: SI anchors mass_si and omega_m_si must be positive");
    }
    return std::sqrt(constants::hbar * p.mass_si * p.omega_m_si);
}

/// coth(hbar*omega_m / (2 kB T)) for T > 0; the T = 0 convention (thermal
/// channel off entirely) is handled by the callers in the noise layer.
inline double thermal_coth(const SystemParams& p) {
    if (!(p.temperature_si > 0.0)) {
        throw domain_error(error_code::invalid_config,
                           "thermal_coth: temperature must be positive (T = 0 disables the channel)");
    }
    const double x = constants::hbar * p.omega_m_si /
                     (2.0 * constants::k_boltzmann * p.temperature_si);
    return 1.0 / std::tanh(x);
}

}  // namespace crowsense
