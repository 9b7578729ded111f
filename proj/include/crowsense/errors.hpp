// Typed error hierarchy shared by the whole library.
//
// Every failure mode that callers are expected to handle programmatically
// carries an error_code; the CLI maps domain_error -> exit 1 and leaves
// usage problems (bad flags, bad config keys) to exit 2.
#pragma once

#include <stdexcept>
#include <string>

namespace crowsense {

enum class error_code {
    outside_band,        ///< real frequency outside the reservoir band
    band_edge_singular,  ///< evaluation exactly at a branch point (s = 0)
    pole_hit,            ///< Green function requested at a zero of D
    degenerate_pole,     ///< |D'| below the simple-pole threshold
    near_resonant_drive, ///< a 1/omega_r term with |omega_r| <= 1e-6
    no_response,         ///< transfer denominator below threshold
    resonance,           ///< real-axis evaluation within 1e-9 of a real pole
    quadrature_failure,  ///< branch-cut integral failed to converge
    stiffness,           ///< ODE step size underflow
    root_unresolved,     ///< pole polishing exceeded its iteration budget
    invalid_config,      ///< bad parameter values (non-positive SI anchors, ...)
};

/// Library-level domain error. Anything that escapes to the CLI as one of
/// these is an exit-code-1 condition, not a crash.
class domain_error : public std::runtime_error {
  public:
    domain_error(error_code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    error_code code() const noexcept { return code_; }

  private:
    error_code code_;
};

}  // namespace crowsense
