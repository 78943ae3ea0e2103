#ifndef LHM_SWEEP_HPP
#define LHM_SWEEP_HPP

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lhm/response.hpp"

namespace lhm {

/// A probe-detuning sweep repeated for each coupling strength in
/// omega_c_list. Non-swept parameters come from `base`.
struct SweepSpec {
    SystemParams base;
    double delta_p_min = -26.0;
    double delta_p_max = 26.0;
    int delta_p_steps = 1041;  // 0.05 gamma spacing over [-26, 26]
    std::vector<double> omega_c_list;
    IndexBranch branch = IndexBranch::Paper;
    bool cross_check = false;
    Eq4Variant eq4 = Eq4Variant::Corrected;
    PhysicalConstants constants{};

    std::vector<std::string> violations() const
    {
        std::vector<std::string> v = base.violations();
        if (!(delta_p_min < delta_p_max))
            v.push_back("delta_p_min must be below delta_p_max");
        if (delta_p_steps < 2)
            v.push_back("delta_p_steps must be at least 2");
        if (omega_c_list.empty())
            v.push_back("omega_c_list must not be empty");
        for (double w : omega_c_list)
            if (!(w >= 0.0))
                v.push_back("omega_c_list entries must be non-negative");
        return v;
    }

    void validate() const
    {
        auto v = violations();
        if (v.empty())
            return;
        std::string msg = "invalid sweep:";
        for (const auto& s : v)
            msg += " " + s + ";";
        throw ConfigError(msg);
    }

    double delta_p_at(int i) const
    {
        return delta_p_min +
               (delta_p_max - delta_p_min) * double(i) / double(delta_p_steps - 1);
    }
};

struct SweepFailure {
    double delta_p = 0.0;
    double omega_c = 0.0;
    std::string error_kind;
};

/// points and failures partition the grid: |points| + |failures| equals
/// delta_p_steps * |omega_c_list|. Both are ordered by (omega_c, delta_p).
struct SweepResult {
    std::vector<ResponsePoint> points;
    std::vector<SweepFailure> failures;
};

/// Evaluate the full grid. Point-level errors become failure records and
/// never abort the sweep. Results are assembled in grid order, so the output
/// is identical for any thread count.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned n_threads = 1)
{
    spec.validate();

    std::vector<double> omegas = spec.omega_c_list;
    std::sort(omegas.begin(), omegas.end());

    const std::size_t n_dp = static_cast<std::size_t>(spec.delta_p_steps);
    const std::size_t total = omegas.size() * n_dp;

    struct Slot {
        std::optional<ResponsePoint> point;
        std::optional<SweepFailure> failure;
    };
    std::vector<Slot> slots(total);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t g = begin; g < total; g += stride) {
            SystemParams p = spec.base;
            p.Omega_c = omegas[g / n_dp];
            p.Delta_p = spec.delta_p_at(static_cast<int>(g % n_dp));
            try {
                slots[g].point = evaluate_point(p, spec.constants, spec.branch,
                                                spec.eq4, spec.cross_check);
            } catch (const Error& e) {
                slots[g].failure = SweepFailure{p.Delta_p, p.Omega_c, e.kind()};
            }
        }
    };

    if (n_threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> panics(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t, n_threads);
                } catch (...) {
                    panics[t] = std::current_exception();
                }
            });
        for (auto& th : pool)
            th.join();
        for (auto& e : panics)
            if (e)
                std::rethrow_exception(e);
    }

    SweepResult result;
    result.points.reserve(total);
    for (auto& s : slots) {
        if (s.point)
            result.points.push_back(*s.point);
        else
            result.failures.push_back(*s.failure);
    }
    return result;
}

}  // namespace lhm

#endif
