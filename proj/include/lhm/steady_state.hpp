#ifndef LHM_STEADY_STATE_HPP
#define LHM_STEADY_STATE_HPP

#include <Eigen/LU>
#include <cmath>
#include <string>

#include "lhm/density_matrix.hpp"
#include "lhm/errors.hpp"
#include "lhm/liouvillian.hpp"

namespace lhm {

enum class SolveMethod { Direct, Evolved };

struct SolveReport {
    Matrix4c rho_ss;
    double residual_inf = 0.0;  // ||L vec(rho_ss)||_inf, units of gamma_unit
    SolveMethod method = SolveMethod::Direct;
    long iterations_or_steps = 0;
};

inline double residual_inf_norm(const Liouvillian& L, const Matrix4c& rho)
{
    return (L.matrix * vectorize(rho)).cwiseAbs().maxCoeff();
}

/// Solve L vec(rho) = 0 under Tr rho = 1 by replacing the rho44 row (the
/// derived one; all retained rows are literal equations of motion) with the
/// trace constraint. The returned state is re-hermitized and trace-normalized;
/// the residual is evaluated against the unmodified L.
inline SolveReport steady_state_direct(const Liouvillian& L)
{
    Matrix16c A = L.matrix;
    const int tr_row = vec_index(4, 4);
    A.row(tr_row).setZero();
    for (int i = 1; i <= 4; ++i)
        A(tr_row, vec_index(i, i)) = 1.0;
    Vector16c b = Vector16c::Zero();
    b(tr_row) = 1.0;

    Eigen::PartialPivLU<Matrix16c> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14))
        throw SingularSystem("constrained steady-state system is singular "
                             "(rcond = " + std::to_string(rcond) + ")");

    Matrix4c rho = hermitized(unvectorize(lu.solve(b)));
    rho /= rho.trace().real();

    SolveReport rep;
    rep.rho_ss = rho;
    rep.residual_inf = residual_inf_norm(L, rho);
    rep.method = SolveMethod::Direct;
    rep.iterations_or_steps = 1;
    return rep;
}

struct EvolveOptions {
    double dt = 0.01;         // upper bound on the step, units of 1/gamma_unit
    double tol = 1e-10;       // residual target, units of gamma_unit
    long max_steps = 10'000'000;
    long renorm_every = 1000; // re-hermitize + retrace cadence
};

/// Classical RK4 integration of d(vec rho)/dt = L vec(rho) until
/// ||L vec(rho)||_inf < tol. The actual step is clamped to 2/||L||_inf: the
/// spectral radius is bounded by the row-sum norm and RK4 is stable on the
/// imaginary axis up to 2*sqrt(2), so the clamp guarantees a stable iteration
/// whose fixed points are exactly the nullspace of L.
inline SolveReport steady_state_evolve(const Liouvillian& L, const Matrix4c& rho0,
                                       const EvolveOptions& opt = {})
{
    if (!(opt.tol > 0.0))
        throw NoConvergence("tolerance must be positive");

    const Matrix16c& M = L.matrix;
    const double norm = inf_norm(M);
    const double dt = (norm > 0.0) ? std::min(opt.dt, 2.0 / norm) : opt.dt;

    Vector16c v = vectorize(rho0);
    Vector16c k1, k2, k3, k4;
    long step = 0;
    for (; step < opt.max_steps; ++step) {
        k1.noalias() = M * v;
        const double res = k1.cwiseAbs().maxCoeff();
        if (res < opt.tol) {
            Matrix4c rho = hermitized(unvectorize(v));
            rho /= rho.trace().real();
            SolveReport rep;
            rep.rho_ss = rho;
            rep.residual_inf = residual_inf_norm(L, rho);
            rep.method = SolveMethod::Evolved;
            rep.iterations_or_steps = step;
            return rep;
        }
        if (!std::isfinite(res))
            throw NoConvergence("time evolution diverged after " +
                                std::to_string(step) + " steps");
        k2.noalias() = M * (v + (0.5 * dt) * k1);
        k3.noalias() = M * (v + (0.5 * dt) * k2);
        k4.noalias() = M * (v + dt * k3);
        v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((step + 1) % opt.renorm_every == 0) {
            Matrix4c rho = hermitized(unvectorize(v));
            const double tr = rho.trace().real();
            if (tr != 0.0)
                rho /= tr;
            v = vectorize(rho);
        }
    }
    throw NoConvergence("residual still above tolerance after " +
                        std::to_string(opt.max_steps) + " steps");
}

}  // namespace lhm

#endif
