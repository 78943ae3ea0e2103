#ifndef LHM_CONFIG_HPP
#define LHM_CONFIG_HPP

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "lhm/sweep.hpp"

namespace lhm {

/// The reference parameter set: gamma = 1e6 s^-1, Gamma31 = Gamma41 =
/// Gamma42 = Gamma43 = 0.01, Gamma21 = 0.5, Gamma32 = 1, pump 1, Omega_p =
/// 0.5, delta = -20, Delta_c = 20, d21 = 2.5e-29 C m, mu43 = 7.0e-23 C m^2/s,
/// N = 6.5e25 m^-3. Omega_B follows the plane-wave closure.
inline SystemParams canonical_params()
{
    SystemParams p;
    p.gamma_unit = 1.0e6;
    p.Gamma21 = 0.5;
    p.Gamma31 = 0.01;
    p.Gamma32 = 1.0;
    p.Gamma41 = 0.01;
    p.Gamma42 = 0.01;
    p.Gamma43 = 0.01;
    p.Gamma_pump = 1.0;
    p.Omega_p = 0.5;
    p.Omega_c = 15.0;
    p.Delta_p = 0.0;
    p.Delta_c = 20.0;
    p.delta_small = -20.0;
    p.d21 = 2.5e-29;
    p.mu43 = 7.0e-23;
    p.N_density = 6.5e25;
    p.Omega_B = omega_B_closure(p);
    return p;
}

/// Canonical sweep: Delta_p over [-26, 26] at 0.05 gamma spacing, Omega_c in
/// {15, 18, 21, 24} gamma.
inline SweepSpec canonical_sweep()
{
    SweepSpec s;
    s.base = canonical_params();
    s.delta_p_min = -26.0;
    s.delta_p_max = 26.0;
    s.delta_p_steps = 1041;
    s.omega_c_list = {15.0, 18.0, 21.0, 24.0};
    s.branch = IndexBranch::Paper;
    s.cross_check = false;
    s.eq4 = Eq4Variant::Corrected;
    return s;
}

namespace detail_config {

inline std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

inline double parse_number(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const double x = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse number from '" + value + "'");
    }
}

inline bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

inline std::vector<double> parse_list(const std::string& key, const std::string& value)
{
    std::vector<double> out;
    std::string item;
    std::stringstream ss(value);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("key '" + key + "': empty list entry");
        out.push_back(parse_number(key, item));
    }
    if (out.empty())
        throw ConfigError("key '" + key + "': empty list");
    return out;
}

}  // namespace detail_config

/// Flat `key = value` configuration, `#` starts a comment. Keys mirror the
/// parameter and sweep field names; all rates are in units of gamma.
/// `defaults = true` loads the canonical set first, then the remaining keys
/// override it. Omega_B falls back to the plane-wave closure unless set
/// explicitly.
inline SweepSpec parse_config(std::istream& in)
{
    using namespace detail_config;

    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) +
                              ": empty key or value");
        pairs.emplace_back(std::move(key), std::move(value));
    }

    SweepSpec spec;
    spec.omega_c_list.clear();
    bool use_defaults = false;
    for (const auto& [key, value] : pairs)
        if (key == "defaults")
            use_defaults = parse_bool(key, value);
    if (use_defaults)
        spec = canonical_sweep();

    bool omega_B_explicit = false;
    bool omega_c_list_explicit = use_defaults;
    for (const auto& [key, value] : pairs) {
        SystemParams& p = spec.base;
        if (key == "defaults") {
            continue;
        } else if (key == "gamma_unit") {
            p.gamma_unit = parse_number(key, value);
        } else if (key == "Gamma21") {
            p.Gamma21 = parse_number(key, value);
        } else if (key == "Gamma31") {
            p.Gamma31 = parse_number(key, value);
        } else if (key == "Gamma32") {
            p.Gamma32 = parse_number(key, value);
        } else if (key == "Gamma41") {
            p.Gamma41 = parse_number(key, value);
        } else if (key == "Gamma42") {
            p.Gamma42 = parse_number(key, value);
        } else if (key == "Gamma43") {
            p.Gamma43 = parse_number(key, value);
        } else if (key == "Gamma_pump") {
            p.Gamma_pump = parse_number(key, value);
        } else if (key == "Omega_p") {
            p.Omega_p = parse_number(key, value);
        } else if (key == "Omega_c") {
            p.Omega_c = parse_number(key, value);
        } else if (key == "Omega_B") {
            p.Omega_B = parse_number(key, value);
            omega_B_explicit = true;
        } else if (key == "Delta_p") {
            p.Delta_p = parse_number(key, value);
        } else if (key == "Delta_c") {
            p.Delta_c = parse_number(key, value);
        } else if (key == "delta_small") {
            p.delta_small = parse_number(key, value);
        } else if (key == "d21") {
            p.d21 = parse_number(key, value);
        } else if (key == "mu43") {
            p.mu43 = parse_number(key, value);
        } else if (key == "N_density") {
            p.N_density = parse_number(key, value);
        } else if (key == "delta_p_min") {
            spec.delta_p_min = parse_number(key, value);
        } else if (key == "delta_p_max") {
            spec.delta_p_max = parse_number(key, value);
        } else if (key == "delta_p_steps") {
            spec.delta_p_steps = static_cast<int>(parse_number(key, value));
        } else if (key == "omega_c_list") {
            spec.omega_c_list = parse_list(key, value);
            omega_c_list_explicit = true;
        } else if (key == "branch") {
            if (value == "paper")
                spec.branch = IndexBranch::Paper;
            else if (value == "physical")
                spec.branch = IndexBranch::Physical;
            else
                throw ConfigError("key 'branch': expected paper|physical, got '" +
                                  value + "'");
        } else if (key == "cross_check") {
            spec.cross_check = parse_bool(key, value);
        } else if (key == "eq4_variant") {
            if (value == "corrected")
                spec.eq4 = Eq4Variant::Corrected;
            else if (value == "literal")
                spec.eq4 = Eq4Variant::Literal;
            else
                throw ConfigError("key 'eq4_variant': expected corrected|literal, "
                                  "got '" + value + "'");
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }

    if (!omega_B_explicit)  // after overrides, so closure sees the final Omega_p
        spec.base.Omega_B = omega_B_closure(spec.base);
    if (!omega_c_list_explicit)
        spec.omega_c_list = {spec.base.Omega_c};

    return spec;
}

inline SweepSpec parse_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw IoFailure("cannot open config file " + path);
    return parse_config(f);
}

}  // namespace lhm

#endif
