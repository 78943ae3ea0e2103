#ifndef LHM_LIOUVILLIAN_HPP
#define LHM_LIOUVILLIAN_HPP

#include "lhm/density_matrix.hpp"
#include "lhm/params.hpp"

namespace lhm {

/// The rho22 population equation exists in two forms. Literal feeds it with
/// the coherence Gamma32*rho32, which is dimensionally inconsistent with
/// every other population equation and breaks Hermiticity of the generated
/// dynamics; it is kept for auditing. Corrected uses Gamma32*rho33 (level
/// |3> decaying into |2>) and is the default.
enum class Eq4Variant { Corrected, Literal };

/// 16x16 generator of d(vec rho)/dt = L * vec rho, in units of gamma_unit
/// (time in 1/gamma_unit). Vectorization per vec_index().
struct Liouvillian {
    Matrix16c matrix = Matrix16c::Zero();
    Eq4Variant eq4 = Eq4Variant::Corrected;
};

inline double inf_norm(const Matrix16c& m)
{
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Assemble the equations of motion of the four-level system:
///   |1>--Omega_p--|2>--Omega_c--|4>--Omega_B--|3>,  pump |1>->|3>,
/// written in the frame where each coherence rho_ij rotates at its own
/// detuning combination. Rows for rho11, rho21, rho22, rho31, rho32, rho33,
/// rho41, rho42, rho43 are explicit; rows for the transposed coherences are
/// their elementwise conjugates; the rho44 row closes the trace,
/// d(rho44)/dt = -(d rho11 + d rho22 + d rho33)/dt.
inline Liouvillian build_liouvillian(const SystemParams& p, const DerivedRates& g,
                                     Eq4Variant eq4 = Eq4Variant::Corrected)
{
    const Complex I(0.0, 1.0);
    const double Op = p.Omega_p, Oc = p.Omega_c, OB = p.Omega_B;
    const double Dp = p.Delta_p, Dc = p.Delta_c, ds = p.delta_small;

    Liouvillian L;
    L.eq4 = eq4;
    Matrix16c& M = L.matrix;

    auto add = [&M](int row, int col, Complex v) { M(row, col) += v; };

    // d rho11 = Gamma_pump (rho33 - rho11) + Gamma21 rho22 + Gamma31 rho33
    //           + Gamma41 rho44 + i Omega_p (rho21 - rho12)
    {
        const int r = vec_index(1, 1);
        add(r, vec_index(3, 3), p.Gamma_pump + p.Gamma31);
        add(r, vec_index(1, 1), -p.Gamma_pump);
        add(r, vec_index(2, 2), p.Gamma21);
        add(r, vec_index(4, 4), p.Gamma41);
        add(r, vec_index(2, 1), I * Op);
        add(r, vec_index(1, 2), -I * Op);
    }
    // d rho21 = -(gamma21 + i Delta_p) rho21 - i Omega_p (rho22 - rho11)
    //           + i Omega_c rho41
    {
        const int r = vec_index(2, 1);
        add(r, vec_index(2, 1), -(g.gamma21 + I * Dp));
        add(r, vec_index(2, 2), -I * Op);
        add(r, vec_index(1, 1), I * Op);
        add(r, vec_index(4, 1), I * Oc);
    }
    // d rho22 = -Gamma21 rho22 + Gamma32 rho33|rho32 + Gamma42 rho44
    //           + i Omega_p (rho12 - rho21) + i Omega_c (rho42 - rho24)
    {
        const int r = vec_index(2, 2);
        add(r, vec_index(2, 2), -p.Gamma21);
        add(r, eq4 == Eq4Variant::Corrected ? vec_index(3, 3) : vec_index(3, 2),
            p.Gamma32);
        add(r, vec_index(4, 4), p.Gamma42);
        add(r, vec_index(1, 2), I * Op);
        add(r, vec_index(2, 1), -I * Op);
        add(r, vec_index(4, 2), I * Oc);
        add(r, vec_index(2, 4), -I * Oc);
    }
    // d rho31 = -[gamma31 + i (Delta_c + delta)] rho31 + i Omega_p rho23
    //           + i Omega_B rho41
    {
        const int r = vec_index(3, 1);
        add(r, vec_index(3, 1), -(g.gamma31 + I * (Dc + ds)));
        add(r, vec_index(2, 3), I * Op);
        add(r, vec_index(4, 1), I * OB);
    }
    // d rho32 = -[gamma32 + i (Delta_c - Delta_p + delta)] rho32
    //           - i Omega_c rho34 - i Omega_p rho31 + i Omega_B rho42
    {
        const int r = vec_index(3, 2);
        add(r, vec_index(3, 2), -(g.gamma32 + I * (Dc - Dp + ds)));
        add(r, vec_index(3, 4), -I * Oc);
        add(r, vec_index(3, 1), -I * Op);
        add(r, vec_index(4, 2), I * OB);
    }
    // d rho33 = -Gamma_pump (rho33 - rho11) - Gamma31 rho33 - Gamma32 rho33
    //           + Gamma43 rho44 + i Omega_B (rho43 - rho34)
    {
        const int r = vec_index(3, 3);
        add(r, vec_index(3, 3), -p.Gamma_pump - p.Gamma31 - p.Gamma32);
        add(r, vec_index(1, 1), p.Gamma_pump);
        add(r, vec_index(4, 4), p.Gamma43);
        add(r, vec_index(4, 3), I * OB);
        add(r, vec_index(3, 4), -I * OB);
    }
    // d rho41 = -[gamma41 + i (Delta_p + Delta_c)] rho41 + i Omega_c rho21
    //           - i Omega_p rho42 + i Omega_B rho31
    {
        const int r = vec_index(4, 1);
        add(r, vec_index(4, 1), -(g.gamma41 + I * (Dp + Dc)));
        add(r, vec_index(2, 1), I * Oc);
        add(r, vec_index(4, 2), -I * Op);
        add(r, vec_index(3, 1), I * OB);
    }
    // d rho42 = -(gamma42 + i Delta_c) rho42 + i Omega_c (rho22 - rho44)
    //           - i Omega_p rho41 + i Omega_B rho32
    {
        const int r = vec_index(4, 2);
        add(r, vec_index(4, 2), -(g.gamma42 + I * Dc));
        add(r, vec_index(2, 2), I * Oc);
        add(r, vec_index(4, 4), -I * Oc);
        add(r, vec_index(4, 1), -I * Op);
        add(r, vec_index(3, 2), I * OB);
    }
    // d rho43 = -[gamma43 + i (Delta_p - delta)] rho43 + i Omega_c rho23
    //           + i Omega_B (rho33 - rho44)
    {
        const int r = vec_index(4, 3);
        add(r, vec_index(4, 3), -(g.gamma43 + I * (Dp - ds)));
        add(r, vec_index(2, 3), I * Oc);
        add(r, vec_index(3, 3), I * OB);
        add(r, vec_index(4, 4), -I * OB);
    }

    // d rho_ji = conj(d rho_ij): L[ji, lk] = conj(L[ij, kl])
    constexpr int lower[6][2] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    for (const auto& ij : lower) {
        const int i = ij[0], j = ij[1];
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l)
                M(vec_index(j, i), vec_index(l, k)) =
                    std::conj(M(vec_index(i, j), vec_index(k, l)));
    }

    // trace closure
    M.row(vec_index(4, 4)) =
        -(M.row(vec_index(1, 1)) + M.row(vec_index(2, 2)) + M.row(vec_index(3, 3)));

    return L;
}

inline Liouvillian build_liouvillian(const SystemParams& p,
                                     Eq4Variant eq4 = Eq4Variant::Corrected)
{
    return build_liouvillian(p, derived_rates(p), eq4);
}

}  // namespace lhm

#endif
