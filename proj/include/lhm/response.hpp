#ifndef LHM_RESPONSE_HPP
#define LHM_RESPONSE_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "lhm/constants.hpp"
#include "lhm/density_matrix.hpp"
#include "lhm/errors.hpp"
#include "lhm/steady_state.hpp"

namespace lhm {

/// Sign convention for the complex refractive index. The `Paper` branch is
/// the left-handed-material definition n = -sqrt(eps_r * mu_r), the negative
/// principal root everywhere. The `Physical` branch n = sqrt(eps_r) *
/// sqrt(mu_r) lands in Re n < 0 on its own in the double-negative regime and
/// in Re n > 0 outside it.
enum class IndexBranch { Paper, Physical };

/// Macroscopic response at one (Delta_p, Omega_c) grid point.
struct ResponsePoint {
    double delta_p = 0.0;   // units of gamma_unit
    double omega_c = 0.0;   // units of gamma_unit
    Complex alpha_e;        // m^3
    Complex alpha_m;        // m^3
    Complex eps_r;
    Complex mu_r;
    Complex n;
    double fom = 0.0;       // |Re n|/|Im n|, +inf when Im n == 0
};

/// Electric polarizability per atom: |d21|^2 rho12 / (eps0 hbar Omega_p),
/// with Omega_p converted to absolute s^-1.
inline Complex alpha_e(const Matrix4c& rho, const SystemParams& p,
                       const PhysicalConstants& k = {})
{
    if (!(p.Omega_p > 0.0))
        throw ZeroProbe("alpha_e undefined for Omega_p = 0");
    const Complex rho12 = rho(0, 1);
    return p.d21 * p.d21 * rho12 / (k.eps0 * k.hbar * p.Omega_p * p.gamma_unit);
}

/// Magnetizability per atom: mu0 |mu43|^2 rho34 / (hbar Omega_B), Omega_B in
/// absolute s^-1.
inline Complex alpha_m(const Matrix4c& rho, const SystemParams& p,
                       const PhysicalConstants& k = {})
{
    if (!(p.Omega_B > 0.0))
        throw ZeroProbeB("alpha_m undefined for Omega_B = 0");
    const Complex rho34 = rho(2, 3);
    return k.mu0 * p.mu43 * p.mu43 * rho34 / (k.hbar * p.Omega_B * p.gamma_unit);
}

/// Local-field-corrected relative permittivity/permeability:
/// (1 + (2/3) N alpha) / (1 - (1/3) N alpha).
inline Complex clausius_mossotti(Complex alpha, double N_density)
{
    const Complex x = N_density * alpha;
    const Complex denom = 1.0 - x / 3.0;
    if (std::abs(denom) < 1e-12)
        throw LocalFieldPole("Clausius-Mossotti denominator vanishes (N*alpha near 3)");
    return (1.0 + 2.0 * x / 3.0) / denom;
}

inline Complex refractive_index(Complex eps_r, Complex mu_r,
                                IndexBranch branch = IndexBranch::Paper)
{
    if (branch == IndexBranch::Paper)
        return -std::sqrt(eps_r * mu_r);
    return std::sqrt(eps_r) * std::sqrt(mu_r);
}

inline double figure_of_merit(Complex n)
{
    if (n == Complex(0.0, 0.0))
        throw UndefinedFom("figure of merit undefined for n = 0");
    if (n.imag() == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::abs(n.real()) / std::abs(n.imag());
}

/// Full pipeline at a single grid point: assemble the generator, solve the
/// steady state directly (optionally cross-checked against time evolution),
/// then map the coherences to alpha_e/alpha_m, eps_r/mu_r, n and FOM. Errors
/// are rethrown with the grid point attached.
inline ResponsePoint evaluate_point(const SystemParams& p,
                                    const PhysicalConstants& k = {},
                                    IndexBranch branch = IndexBranch::Paper,
                                    Eq4Variant eq4 = Eq4Variant::Corrected,
                                    bool cross_check = false)
{
    try {
        const Liouvillian L = build_liouvillian(p, eq4);
        const SolveReport sol = steady_state_direct(L);
        if (cross_check) {
            const SolveReport evo = steady_state_evolve(L, ground_state());
            const double diff = (sol.rho_ss - evo.rho_ss).cwiseAbs().maxCoeff();
            if (!(diff <= 1e-6))
                throw OracleMismatch("direct and evolved steady states differ by " +
                                     std::to_string(diff));
        }

        ResponsePoint r;
        r.delta_p = p.Delta_p;
        r.omega_c = p.Omega_c;
        r.alpha_e = alpha_e(sol.rho_ss, p, k);
        r.alpha_m = alpha_m(sol.rho_ss, p, k);
        r.eps_r = clausius_mossotti(r.alpha_e, p.N_density);
        r.mu_r = clausius_mossotti(r.alpha_m, p.N_density);
        r.n = refractive_index(r.eps_r, r.mu_r, branch);
        r.fom = figure_of_merit(r.n);
        return r;
    } catch (const PointError&) {
        throw;
    } catch (const Error& e) {
        throw PointError(e, p.Delta_p, p.Omega_c);
    }
}

}  // namespace lhm

#endif
