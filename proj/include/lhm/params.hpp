#ifndef LHM_PARAMS_HPP
#define LHM_PARAMS_HPP

#include <string>
#include <vector>

#include "lhm/constants.hpp"
#include "lhm/errors.hpp"

namespace lhm {

/// All physical inputs of the four-level model. Rates, Rabi frequencies and
/// detunings are dimensionless multiples of gamma_unit; dipole moments and
/// density are SI. Immutable by convention once validated.
struct SystemParams {
    double gamma_unit = 1.0e6;  // s^-1, the rate scale

    // spontaneous decay rates Gamma_ij (|i> -> |j>)
    double Gamma21 = 0.0;
    double Gamma31 = 0.0;
    double Gamma32 = 0.0;
    double Gamma41 = 0.0;
    double Gamma42 = 0.0;
    double Gamma43 = 0.0;

    double Gamma_pump = 0.0;  // incoherent pump |1> -> |3>

    // Rabi frequencies, real non-negative
    double Omega_p = 0.0;
    double Omega_c = 0.0;
    double Omega_B = 0.0;

    // detunings
    double Delta_p = 0.0;
    double Delta_c = 0.0;
    double delta_small = 0.0;  // delta = Delta_p - Delta_B

    double d21 = 0.0;        // electric dipole moment, C*m
    double mu43 = 0.0;       // magnetic dipole moment, C*m^2/s
    double N_density = 0.0;  // atoms per m^3

    std::vector<std::string> violations() const
    {
        std::vector<std::string> v;
        auto nonneg = [&v](double x, const char* name) {
            if (!(x >= 0.0))
                v.push_back(std::string(name) + " must be non-negative");
        };
        if (!(gamma_unit > 0.0))
            v.push_back("gamma_unit must be positive");
        nonneg(Gamma21, "Gamma21");
        nonneg(Gamma31, "Gamma31");
        nonneg(Gamma32, "Gamma32");
        nonneg(Gamma41, "Gamma41");
        nonneg(Gamma42, "Gamma42");
        nonneg(Gamma43, "Gamma43");
        nonneg(Gamma_pump, "Gamma_pump");
        nonneg(Omega_p, "Omega_p");
        nonneg(Omega_c, "Omega_c");
        nonneg(Omega_B, "Omega_B");
        nonneg(d21, "d21");
        nonneg(mu43, "mu43");
        nonneg(N_density, "N_density");
        return v;
    }

    void validate() const
    {
        auto v = violations();
        if (v.empty())
            return;
        std::string msg = "invalid parameters:";
        for (const auto& s : v)
            msg += " " + s + ";";
        throw ConfigError(msg);
    }
};

/// Coherence decay rates gamma_ij implied by the spontaneous rates.
struct DerivedRates {
    double gamma21 = 0.0;
    double gamma31 = 0.0;
    double gamma32 = 0.0;
    double gamma41 = 0.0;
    double gamma42 = 0.0;
    double gamma43 = 0.0;
};

inline DerivedRates derived_rates(const SystemParams& p)
{
    DerivedRates r;
    r.gamma21 = p.Gamma21 / 2.0;
    r.gamma31 = (p.Gamma31 + p.Gamma32) / 2.0;
    r.gamma41 = (p.Gamma43 + p.Gamma42) / 2.0;  // Gamma41 does not enter
    r.gamma42 = (p.Gamma43 + p.Gamma31 + p.Gamma21) / 2.0;
    r.gamma43 = (p.Gamma43 + p.Gamma42 + p.Gamma31 + p.Gamma32) / 2.0;
    r.gamma32 = (p.Gamma32 + p.Gamma31 + p.Gamma21) / 2.0;
    return r;
}

/// Magnetic Rabi frequency of the probe implied by the plane-wave relation
/// B = E/c: Omega_B = Omega_p * mu43 / (c * d21). Used when no explicit
/// Omega_B override is configured.
inline double omega_B_closure(const SystemParams& p, const PhysicalConstants& k = {})
{
    if (p.d21 <= 0.0)
        return 0.0;
    return p.Omega_p * p.mu43 / (k.c * p.d21);
}

}  // namespace lhm

#endif
