#ifndef LHM_SVG_HPP
#define LHM_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "lhm/errors.hpp"
#include "lhm/sweep.hpp"

namespace lhm {

enum class Quantity { ReEps, ImEps, ReMu, ImMu, ReN, ImN, Fom };

inline const char* quantity_key(Quantity q)
{
    switch (q) {
        case Quantity::ReEps: return "re_eps";
        case Quantity::ImEps: return "im_eps";
        case Quantity::ReMu: return "re_mu";
        case Quantity::ImMu: return "im_mu";
        case Quantity::ReN: return "re_n";
        case Quantity::ImN: return "im_n";
        case Quantity::Fom: return "fom";
    }
    return "";
}

inline const char* quantity_label(Quantity q)
{
    switch (q) {
        case Quantity::ReEps: return "Re(eps_r)  (dimensionless)";
        case Quantity::ImEps: return "Im(eps_r)  (dimensionless)";
        case Quantity::ReMu: return "Re(mu_r)  (dimensionless)";
        case Quantity::ImMu: return "Im(mu_r)  (dimensionless)";
        case Quantity::ReN: return "Re(n)  (dimensionless)";
        case Quantity::ImN: return "Im(n)  (dimensionless)";
        case Quantity::Fom: return "FOM = |Re n / Im n|";
    }
    return "";
}

inline double quantity_value(const ResponsePoint& p, Quantity q)
{
    switch (q) {
        case Quantity::ReEps: return p.eps_r.real();
        case Quantity::ImEps: return p.eps_r.imag();
        case Quantity::ReMu: return p.mu_r.real();
        case Quantity::ImMu: return p.mu_r.imag();
        case Quantity::ReN: return p.n.real();
        case Quantity::ImN: return p.n.imag();
        case Quantity::Fom: return p.fom;
    }
    return 0.0;
}

/// FOM values (including the +inf sentinel) are drawn clipped at this cap;
/// charts that clip carry a text annotation.
inline constexpr double kFomChartCap = 1e3;

namespace detail_svg {

inline std::string xml_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string fmt2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string fmt_tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace detail_svg

/// Render one quantity of a sweep as a static SVG line chart: x axis is
/// Delta_p/gamma, one polyline per Omega_c with a legend. Failure points
/// break the polyline into segments; an isolated point becomes a circle
/// marker.
inline std::string to_svg(const SweepResult& result, Quantity q)
{
    using detail_svg::fmt2;
    using detail_svg::fmt_tick;
    using detail_svg::xml_escape;

    if (result.points.empty())
        throw EmptySelection("sweep produced no points to chart");

    // series keyed by omega_c; each entry is a (delta_p, value-or-gap) walk
    struct Sample {
        double delta_p;
        double value;  // NaN marks a gap
    };
    std::map<double, std::vector<Sample>> series;
    const double nan = std::nan("");
    for (const auto& p : result.points)
        series[p.omega_c].push_back({p.delta_p, quantity_value(p, q)});
    for (const auto& f : result.failures) {
        auto it = series.find(f.omega_c);
        if (it != series.end())
            it->second.push_back({f.delta_p, nan});
    }
    for (auto& [w, samples] : series)
        std::sort(samples.begin(), samples.end(),
                  [](const Sample& a, const Sample& b) { return a.delta_p < b.delta_p; });

    bool clipped = false;
    bool any_finite = false;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (auto& [w, samples] : series) {
        for (auto& s : samples) {
            if (std::isnan(s.value))
                continue;
            if (q == Quantity::Fom && s.value > kFomChartCap) {
                s.value = kFomChartCap;
                clipped = true;
            }
            any_finite = true;
            if (first) {
                xmin = xmax = s.delta_p;
                ymin = ymax = s.value;
                first = false;
            } else {
                xmin = std::min(xmin, s.delta_p);
                xmax = std::max(xmax, s.delta_p);
                ymin = std::min(ymin, s.value);
                ymax = std::max(ymax, s.value);
            }
        }
    }
    if (!any_finite)
        throw EmptySelection(std::string("quantity ") + quantity_key(q) +
                             " is absent at every point");

    if (xmax <= xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax <= ymin) {
        const double pad = std::max(0.5, std::abs(ymax) * 0.1);
        ymin -= pad;
        ymax += pad;
    } else {
        const double pad = 0.05 * (ymax - ymin);
        ymin -= pad;
        ymax += pad;
    }

    const double W = 880, H = 560;
    const double left = 80, right = W - 190, top = 50, bottom = H - 60;
    const double plotW = right - left, plotH = bottom - top;
    auto X = [&](double dp) { return left + (dp - xmin) / (xmax - xmin) * plotW; };
    auto Y = [&](double v) { return top + (ymax - v) / (ymax - ymin) * plotH; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    const int n_colors = 8;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt2(W) + "\" height=\"" + fmt2(H) + "\" viewBox=\"0 0 " + fmt2(W) + " " +
           fmt2(H) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt2(W) + "\" height=\"" + fmt2(H) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt2((left + right) / 2) +
           "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           xml_escape(quantity_label(q)) + "</text>\n";

    // gridlines and ticks
    const int n_ticks = 6;
    svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (int t = 0; t <= n_ticks; ++t) {
        const double xv = xmin + (xmax - xmin) * t / n_ticks;
        const double xp = X(xv);
        svg += "<line x1=\"" + fmt2(xp) + "\" y1=\"" + fmt2(top) + "\" x2=\"" +
               fmt2(xp) + "\" y2=\"" + fmt2(bottom) +
               "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt2(xp) + "\" y=\"" + fmt2(bottom + 16) +
               "\" text-anchor=\"middle\">" + fmt_tick(xv) + "</text>\n";
    }
    for (int t = 0; t <= n_ticks; ++t) {
        const double yv = ymin + (ymax - ymin) * t / n_ticks;
        const double yp = Y(yv);
        svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(yp) + "\" x2=\"" +
               fmt2(right) + "\" y2=\"" + fmt2(yp) +
               "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt2(left - 6) + "\" y=\"" + fmt2(yp + 4) +
               "\" text-anchor=\"end\">" + fmt_tick(yv) + "</text>\n";
    }
    svg += "</g>\n";

    // zero line when in range
    if (ymin < 0.0 && ymax > 0.0)
        svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(Y(0.0)) + "\" x2=\"" +
               fmt2(right) + "\" y2=\"" + fmt2(Y(0.0)) +
               "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";

    // axes
    svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(top) + "\" x2=\"" +
           fmt2(left) + "\" y2=\"" + fmt2(bottom) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + fmt2(left) + "\" y1=\"" + fmt2(bottom) + "\" x2=\"" +
           fmt2(right) + "\" y2=\"" + fmt2(bottom) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + fmt2((left + right) / 2) + "\" y=\"" + fmt2(H - 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
           "Delta_p / gamma</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt2((top + bottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 " +
           fmt2((top + bottom) / 2) + ")\">" + xml_escape(quantity_label(q)) +
           "</text>\n";

    // series
    int color_idx = 0;
    double legend_y = top + 10;
    for (const auto& [w, samples] : series) {
        const char* color = palette[color_idx % n_colors];
        ++color_idx;

        std::vector<std::vector<const Sample*>> segments(1);
        for (const auto& s : samples) {
            if (std::isnan(s.value)) {
                if (!segments.back().empty())
                    segments.emplace_back();
            } else {
                segments.back().push_back(&s);
            }
        }
        bool drew = false;
        for (const auto& seg : segments) {
            if (seg.empty())
                continue;
            drew = true;
            if (seg.size() == 1) {
                svg += "<circle cx=\"" + fmt2(X(seg[0]->delta_p)) + "\" cy=\"" +
                       fmt2(Y(seg[0]->value)) + "\" r=\"2.5\" fill=\"" + color +
                       "\"/>\n";
                continue;
            }
            svg += "<polyline fill=\"none\" stroke=\"";
            svg += color;
            svg += "\" stroke-width=\"1.6\" points=\"";
            for (const Sample* s : seg) {
                svg += fmt2(X(s->delta_p));
                svg += ',';
                svg += fmt2(Y(s->value));
                svg += ' ';
            }
            svg += "\"/>\n";
        }
        if (!drew)
            continue;
        svg += "<line x1=\"" + fmt2(right + 14) + "\" y1=\"" + fmt2(legend_y) +
               "\" x2=\"" + fmt2(right + 40) + "\" y2=\"" + fmt2(legend_y) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt2(right + 46) + "\" y=\"" + fmt2(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">Omega_c = " +
               fmt_tick(w) + " gamma</text>\n";
        legend_y += 20;
    }

    if (clipped)
        svg += "<text x=\"" + fmt2(right - 8) + "\" y=\"" + fmt2(top + 14) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"#b00020\">values clipped at " +
               fmt_tick(kFomChartCap) + "</text>\n";

    svg += "</svg>\n";
    return svg;
}

inline void write_svg(const SweepResult& result, Quantity q, const std::string& path)
{
    const std::string svg = to_svg(result, q);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoFailure("cannot open " + path + " for writing");
    f << svg;
    f.flush();
    if (!f)
        throw IoFailure("write failed for " + path);
}

}  // namespace lhm

#endif
