#ifndef LHM_CONSTANTS_HPP
#define LHM_CONSTANTS_HPP

#include <cmath>

namespace lhm {

/// SI constants used by the response formulas. c and mu0 are taken exact and
/// eps0 is derived from them, so c^2*eps0*mu0 == 1 holds to machine precision.
struct PhysicalConstants {
    double hbar = 6.62607015e-34 / (2.0 * M_PI);  // J*s
    double c = 299792458.0;                       // m/s
    double mu0 = 4.0e-7 * M_PI;                   // T*m/A
    double eps0 = 1.0 / (mu0 * c * c);            // C^2/(N*m^2)

    bool valid() const
    {
        if (!(hbar > 0.0 && c > 0.0 && mu0 > 0.0 && eps0 > 0.0))
            return false;
        return std::abs(c * c * eps0 * mu0 - 1.0) < 1e-12;
    }
};

}  // namespace lhm

#endif
