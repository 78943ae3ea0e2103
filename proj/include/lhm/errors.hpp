#ifndef LHM_ERRORS_HPP
#define LHM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lhm {

/// Base of all library errors. `kind()` is a stable machine-readable tag;
/// sweep failure records and CSV error fields carry it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind))
    {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Constrained steady-state matrix is numerically singular.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error("singular_system", msg) {}
};

/// Time propagation hit max_steps (or diverged) before reaching tolerance.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error("no_convergence", msg) {}
};

/// Omega_p = 0: electric polarizability is response per unit probe.
struct ZeroProbe : Error {
    explicit ZeroProbe(const std::string& msg) : Error("zero_probe", msg) {}
};

/// Omega_B = 0: magnetizability undefined without a magnetic probe component.
struct ZeroProbeB : Error {
    explicit ZeroProbeB(const std::string& msg) : Error("zero_probe_b", msg) {}
};

/// Clausius-Mossotti denominator within 1e-12 of zero (local-field resonance).
struct LocalFieldPole : Error {
    explicit LocalFieldPole(const std::string& msg) : Error("local_field_pole", msg) {}
};

/// Figure of merit of n = 0 exactly.
struct UndefinedFom : Error {
    explicit UndefinedFom(const std::string& msg) : Error("undefined_fom", msg) {}
};

/// Direct and time-evolved steady states disagree beyond tolerance.
struct OracleMismatch : Error {
    explicit OracleMismatch(const std::string& msg) : Error("oracle_mismatch", msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error("config_error", msg) {}
};

struct IoFailure : Error {
    explicit IoFailure(const std::string& msg) : Error("io_failure", msg) {}
};

/// Requested chart quantity has no finite value at any sweep point.
struct EmptySelection : Error {
    explicit EmptySelection(const std::string& msg) : Error("empty_selection", msg) {}
};

/// Wraps another Error with the (delta_p, omega_c) grid point it occurred at,
/// preserving the inner kind.
class PointError : public Error {
public:
    PointError(const Error& inner, double delta_p, double omega_c)
        : Error(inner.kind(),
                std::string(inner.what()) + " [at delta_p=" + std::to_string(delta_p) +
                    ", omega_c=" + std::to_string(omega_c) + " (units of gamma)]"),
          delta_p_(delta_p), omega_c_(omega_c)
    {}
    double delta_p() const { return delta_p_; }
    double omega_c() const { return omega_c_; }

private:
    double delta_p_;
    double omega_c_;
};

}  // namespace lhm

#endif
