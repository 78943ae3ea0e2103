#ifndef LHM_CSV_HPP
#define LHM_CSV_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "lhm/errors.hpp"
#include "lhm/sweep.hpp"

namespace lhm {

/// Shortest-exact decimal for a double (%.17g round-trips bit-identically;
/// infinity prints as "inf").
inline std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline const char* csv_header()
{
    return "omega_c,delta_p,re_alpha_e,im_alpha_e,re_alpha_m,im_alpha_m,"
           "re_eps,im_eps,re_mu,im_mu,re_n,im_n,fom";
}

/// One CSV text for a sweep: header, then one row per grid point sorted by
/// (omega_c, delta_p). Failure rows leave the eleven response fields empty
/// and append the error kind as a trailing extra field.
inline std::string to_csv(const SweepResult& result)
{
    struct Row {
        double omega_c;
        double delta_p;
        const ResponsePoint* point;   // nullptr for failures
        const SweepFailure* failure;
    };
    std::vector<Row> rows;
    rows.reserve(result.points.size() + result.failures.size());
    for (const auto& p : result.points)
        rows.push_back({p.omega_c, p.delta_p, &p, nullptr});
    for (const auto& f : result.failures)
        rows.push_back({f.omega_c, f.delta_p, nullptr, &f});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.omega_c != b.omega_c)
            return a.omega_c < b.omega_c;
        return a.delta_p < b.delta_p;
    });

    std::string out = csv_header();
    out += '\n';
    for (const auto& r : rows) {
        out += format_double(r.omega_c);
        out += ',';
        out += format_double(r.delta_p);
        if (r.point) {
            const ResponsePoint& p = *r.point;
            for (double v : {p.alpha_e.real(), p.alpha_e.imag(), p.alpha_m.real(),
                             p.alpha_m.imag(), p.eps_r.real(), p.eps_r.imag(),
                             p.mu_r.real(), p.mu_r.imag(), p.n.real(), p.n.imag(),
                             p.fom}) {
                out += ',';
                out += format_double(v);
            }
        } else {
            out.append(11, ',');
            out += ',';
            out += r.failure->error_kind;
        }
        out += '\n';
    }
    return out;
}

inline void write_csv(const SweepResult& result, const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoFailure("cannot open " + path + " for writing");
    f << to_csv(result);
    f.flush();
    if (!f)
        throw IoFailure("write failed for " + path);
}

}  // namespace lhm

#endif
