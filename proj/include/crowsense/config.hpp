// Structured-text configuration: one `key = value` per line, `#` comments.
// Unknown keys are hard errors so typos cannot silently fall back to defaults.
#pragma once

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "crowsense/params.hpp"

namespace crowsense {

/// Usage-level configuration problem (bad key, bad value, unreadable file).
/// Distinct from domain_error so the CLI can map it to exit code 2.
class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Everything a run needs: the physical parameter set plus numerical knobs
/// that the spec-level operations take as explicit arguments.
struct RunConfig {
    SystemParams params = default_params();

    /// Extra chain sites appended beyond the observing cavity's site in the
    /// time-domain simulator (0 = the plain open chain of n_sites cavities).
    int sim_extra_sites = 0;

    /// Pole-search box shape: real-axis margin beyond the band edges,
    /// half-height of the near-real search strip, and depth of the in-band
    /// lower-half-plane search rectangle.
    double search_re_margin = 20.0;
    double search_im_band = 1e-6;
    double search_im_depth = 10.0;
};

namespace detail {

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_real(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid numeric value for key '" + key + "': '" + value + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("invalid integer value for key '" + key + "': '" + value + "'");
    }
}

}  // namespace detail

/// Applies one `key = value` assignment. Throws config_error on unknown keys
/// or malformed values. Used by both config files and `--set` overrides.
inline void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    using detail::parse_int;
    using detail::parse_real;
    SystemParams& p = cfg.params;

    static const std::map<std::string, std::function<void(RunConfig&, const std::string&, const std::string&)>>
        setters = {
            {"delta_w", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.delta_w = parse_real(k, v); }},
            {"xi_w", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.xi_w = parse_real(k, v); }},
            {"delta_s", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.delta_s = parse_real(k, v); }},
            {"delta_o", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.delta_o = parse_real(k, v); }},
            {"xi_s", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.xi_s = parse_real(k, v); }},
            {"xi_o", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.xi_o = parse_real(k, v); }},
            {"kappa_s", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.kappa_s = parse_real(k, v); }},
            {"kappa_o", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.kappa_o = parse_real(k, v); }},
            {"gamma_m", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.gamma_m = parse_real(k, v); }},
            {"g", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.g = parse_real(k, v); }},
            {"e_o", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.e_o = parse_real(k, v); }},
            {"n_sites", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.n_sites = parse_int(k, v); }},
            {"theta", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.theta = parse_real(k, v); }},
            {"mean_q", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.mean_q = parse_real(k, v); }},
            {"omega_m_si", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.omega_m_si = parse_real(k, v); }},
            {"mass_si", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.mass_si = parse_real(k, v); }},
            {"temperature_si", [](RunConfig& c, const std::string& k, const std::string& v) { c.params.temperature_si = parse_real(k, v); }},
            {"sim_extra_sites", [](RunConfig& c, const std::string& k, const std::string& v) { c.sim_extra_sites = parse_int(k, v); }},
            {"search_re_margin", [](RunConfig& c, const std::string& k, const std::string& v) { c.search_re_margin = parse_real(k, v); }},
            {"search_im_band", [](RunConfig& c, const std::string& k, const std::string& v) { c.search_im_band = parse_real(k, v); }},
            {"search_im_depth", [](RunConfig& c, const std::string& k, const std::string& v) { c.search_im_depth = parse_real(k, v); }},
        };

    auto it = setters.find(key);
    if (it == setters.end()) {
        throw config_error("unknown configuration key '" + key + "'");
    }
    it->second(cfg, key, value);
    (void)p;
}

/// Parses config text (already loaded). Lines: blank, `# comment`, `key = value`.
inline void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got '" + stripped + "'");
        }
        std::string key = detail::trim(stripped.substr(0, eq));
        std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": empty key or value in '" + stripped + "'");
        }
        try {
            apply_key_value(cfg, key, value);
        } catch (const config_error& e) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

/// Loads and applies a config file on top of the current values.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str(), path);
}

/// Applies a `key=value` override string (the CLI's repeatable --set flag).
inline void apply_set_override(RunConfig& cfg, const std::string& assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw config_error("--set expects key=value, got '" + assignment + "'");
    }
    std::string key = detail::trim(assignment.substr(0, eq));
    std::string value = detail::trim(assignment.substr(eq + 1));
    if (key.empty() || value.empty()) {
        throw config_error("--set expects key=value, got '" + assignment + "'");
    }
    apply_key_value(cfg, key, value);
}

}  // namespace crowsense
