#ifndef LHM_DENSITY_MATRIX_HPP
#define LHM_DENSITY_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace lhm {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Matrix16c = Eigen::Matrix<Complex, 16, 16>;
using Vector16c = Eigen::Matrix<Complex, 16, 1>;

/// Vectorization convention, fixed project-wide: vec(rho) is row-major over
/// 1-based level indices, i.e. (rho11, rho12, rho13, rho14, rho21, ...,
/// rho44). Every matrix builder and solver uses this single constant.
constexpr int vec_index(int i, int j)
{
    return 4 * (i - 1) + (j - 1);
}

inline Vector16c vectorize(const Matrix4c& rho)
{
    Vector16c v;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            v(vec_index(i, j)) = rho(i - 1, j - 1);
    return v;
}

inline Matrix4c unvectorize(const Vector16c& v)
{
    Matrix4c rho;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            rho(i - 1, j - 1) = v(vec_index(i, j));
    return rho;
}

inline Matrix4c hermitized(const Matrix4c& rho)
{
    return 0.5 * (rho + rho.adjoint());
}

/// max_ij |rho_ij - conj(rho_ji)|
inline double hermiticity_error(const Matrix4c& rho)
{
    return (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
}

inline double trace_error(const Matrix4c& rho)
{
    return std::abs(rho.trace() - Complex(1.0, 0.0));
}

inline double min_population(const Matrix4c& rho)
{
    double m = rho(0, 0).real();
    for (int i = 1; i < 4; ++i)
        m = std::min(m, rho(i, i).real());
    return m;
}

inline double max_population(const Matrix4c& rho)
{
    double m = rho(0, 0).real();
    for (int i = 1; i < 4; ++i)
        m = std::max(m, rho(i, i).real());
    return m;
}

/// rho11 = 1, everything else 0.
inline Matrix4c ground_state()
{
    Matrix4c rho = Matrix4c::Zero();
    rho(0, 0) = 1.0;
    return rho;
}

}  // namespace lhm

#endif
