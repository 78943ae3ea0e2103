#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lhm/config.hpp"
#include "lhm/csv.hpp"
#include "lhm/svg.hpp"
#include "lhm/sweep.hpp"
#include "support/xml_lint.hpp"

using namespace lhm;

namespace {

SweepSpec coarse_canonical(int steps = 27)
{
    SweepSpec spec = canonical_sweep();
    spec.delta_p_steps = steps;
    return spec;
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> lines;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::string f;
    std::stringstream ss(line);
    while (std::getline(ss, f, ','))
        fields.push_back(f);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

ResponsePoint make_point(double omega_c, double delta_p, double value)
{
    ResponsePoint p;
    p.omega_c = omega_c;
    p.delta_p = delta_p;
    p.alpha_e = Complex(value, -value);
    p.alpha_m = Complex(value / 2, value / 3);
    p.eps_r = Complex(value, 0.01);
    p.mu_r = Complex(-value, 0.02);
    p.n = Complex(-1.0, 0.5);
    p.fom = 2.0;
    return p;
}

/// All occurrences of a tag as raw element text.
std::vector<std::string> find_elements(const std::string& svg, const std::string& tag)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    const std::string open = "<" + tag;
    while ((pos = svg.find(open, pos)) != std::string::npos) {
        const auto end = svg.find('>', pos);
        REQUIRE(end != std::string::npos);
        out.push_back(svg.substr(pos, end - pos + 1));
        pos = end + 1;
    }
    return out;
}

std::string attr_value(const std::string& element, const std::string& name)
{
    const auto key = name + "=\"";
    const auto pos = element.find(key);
    REQUIRE(pos != std::string::npos);
    const auto end = element.find('"', pos + key.size());
    REQUIRE(end != std::string::npos);
    return element.substr(pos + key.size(), end - pos - key.size());
}

}  // namespace

TEST_CASE("minimal grid hits exactly the endpoints")
{
    SweepSpec spec = coarse_canonical(2);
    spec.omega_c_list = {15.0};
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.points.size() == 2);
    CHECK(r.failures.empty());
    CHECK(r.points[0].delta_p == -26.0);
    CHECK(r.points[1].delta_p == 26.0);
}

TEST_CASE("points plus failures account for the whole grid")
{
    SweepSpec spec = coarse_canonical(11);
    const SweepResult r = run_sweep(spec);
    CHECK(r.points.size() + r.failures.size() == 44);
    CHECK(r.failures.empty());
}

TEST_CASE("point errors become failure records, never aborts")
{
    SweepSpec spec = coarse_canonical(5);
    spec.omega_c_list = {15.0};
    spec.base.Omega_p = 0.0;  // alpha_e undefined at every point
    const SweepResult r = run_sweep(spec);
    CHECK(r.points.empty());
    REQUIRE(r.failures.size() == 5);
    for (const auto& f : r.failures)
        CHECK(f.error_kind == "zero_probe");
}

TEST_CASE("output is ordered by (omega_c, delta_p) regardless of list order")
{
    SweepSpec spec = coarse_canonical(3);
    spec.omega_c_list = {24.0, 15.0};
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.points.size() == 6);
    for (int i = 0; i < 3; ++i) {
        CHECK(r.points[i].omega_c == 15.0);
        CHECK(r.points[3 + i].omega_c == 24.0);
    }
    CHECK(r.points[0].delta_p < r.points[1].delta_p);
    CHECK(r.points[1].delta_p < r.points[2].delta_p);
}

TEST_CASE("parallel and serial execution produce identical output")
{
    SweepSpec spec = coarse_canonical(101);
    const SweepResult serial = run_sweep(spec, 1);
    const SweepResult parallel = run_sweep(spec, 4);
    CHECK(to_csv(serial) == to_csv(parallel));
}

TEST_CASE("invalid sweeps are rejected")
{
    SweepSpec spec = coarse_canonical();
    spec.delta_p_steps = 1;
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);
    spec = coarse_canonical();
    spec.omega_c_list.clear();
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);
    spec = coarse_canonical();
    spec.delta_p_min = 5.0;
    spec.delta_p_max = -5.0;
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}

TEST_CASE("CSV layout")
{
    SECTION("empty result is a lone header")
    {
        const std::string csv = to_csv(SweepResult{});
        CHECK(csv == std::string(csv_header()) + "\n");
    }
    SECTION("two points make three lines")
    {
        SweepSpec spec = coarse_canonical(2);
        spec.omega_c_list = {15.0};
        const std::string csv = to_csv(run_sweep(spec));
        CHECK(split_lines(csv).size() == 3);
    }
    SECTION("failure rows keep the response fields empty and append the kind")
    {
        SweepResult r;
        r.points.push_back(make_point(15.0, -1.0, 2.0));
        r.failures.push_back({0.0, 15.0, "local_field_pole"});
        r.points.push_back(make_point(15.0, 1.0, 3.0));
        const auto lines = split_lines(to_csv(r));
        REQUIRE(lines.size() == 4);
        CHECK(split_fields(lines[0]).size() == 13);

        // merged and sorted by (omega_c, delta_p): -1, 0 (failure), 1
        const auto failure = split_fields(lines[2]);
        REQUIRE(failure.size() == 14);
        CHECK(failure[1] == "0");
        for (int i = 2; i < 13; ++i)
            CHECK(failure[i].empty());
        CHECK(failure[13] == "local_field_pole");

        CHECK(split_fields(lines[1])[1] == "-1");
        CHECK(split_fields(lines[3])[1] == "1");
    }
    SECTION("numeric fields survive a parse round trip bit-identically")
    {
        SweepSpec spec = coarse_canonical(9);
        const std::string csv = to_csv(run_sweep(spec));
        const auto lines = split_lines(csv);
        REQUIRE(lines.size() == 9 * 4 + 1);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            for (const auto& field : split_fields(lines[i])) {
                REQUIRE(!field.empty());
                const double parsed = std::strtod(field.c_str(), nullptr);
                CHECK(format_double(parsed) == field);
            }
        }
    }
    SECTION("infinite FOM serializes as the literal inf")
    {
        SweepResult r;
        ResponsePoint p = make_point(15.0, 0.0, 1.0);
        p.fom = std::numeric_limits<double>::infinity();
        r.points.push_back(p);
        const auto lines = split_lines(to_csv(r));
        const auto fields = split_fields(lines[1]);
        CHECK(fields[12] == "inf");
        CHECK(std::isinf(std::strtod("inf", nullptr)));
    }
    SECTION("write is deterministic and faithful to the in-memory text")
    {
        SweepSpec spec = coarse_canonical(5);
        const SweepResult r = run_sweep(spec);
        const auto path = std::filesystem::temp_directory_path() / "lhm_csv_test.csv";
        write_csv(r, path.string());
        std::ifstream f(path, std::ios::binary);
        std::stringstream buf;
        buf << f.rdbuf();
        CHECK(buf.str() == to_csv(r));
        CHECK(to_csv(r) == to_csv(r));
        std::filesystem::remove(path);
    }
    SECTION("unwritable path raises IoFailure")
    {
        CHECK_THROWS_AS(write_csv(SweepResult{}, "/nonexistent-dir/out.csv"),
                        IoFailure);
    }
}

TEST_CASE("SVG charts")
{
    SECTION("every quantity of a real sweep is well-formed XML")
    {
        const SweepResult r = run_sweep(coarse_canonical(27));
        for (Quantity q : {Quantity::ReEps, Quantity::ImEps, Quantity::ReMu,
                           Quantity::ImMu, Quantity::ReN, Quantity::ImN,
                           Quantity::Fom}) {
            const std::string svg = to_svg(r, q);
            std::string why;
            INFO(quantity_key(q) << ": " << why);
            CHECK(lhm_test::xml_well_formed(svg, &why));
            CHECK(find_elements(svg, "polyline").size() == 4);
        }
    }
    SECTION("a series with negative values stays below the zero line")
    {
        SweepResult r;
        for (int i = 0; i < 8; ++i) {
            r.points.push_back(make_point(15.0, i, -3.0 + 0.2 * i));  // negative
            r.points.push_back(make_point(18.0, i, 1.0 + 0.3 * i));   // positive
        }
        const std::string svg = to_svg(r, Quantity::ReEps);

        // the dashed zero line exists because the range straddles zero
        std::string zero_line;
        for (const auto& el : find_elements(svg, "line"))
            if (el.find("stroke-dasharray") != std::string::npos)
                zero_line = el;
        REQUIRE(!zero_line.empty());
        const double y0 = std::stod(attr_value(zero_line, "y1"));

        const auto polylines = find_elements(svg, "polyline");
        REQUIRE(polylines.size() == 2);
        // series are drawn in ascending omega_c order; the first is negative
        std::stringstream pts(attr_value(polylines[0], "points"));
        std::string pair;
        int checked = 0;
        while (pts >> pair) {
            const auto comma = pair.find(',');
            REQUIRE(comma != std::string::npos);
            const double y = std::stod(pair.substr(comma + 1));
            CHECK(y > y0);  // SVG y grows downward
            ++checked;
        }
        CHECK(checked == 8);
    }
    SECTION("failures break a series into segments")
    {
        SweepResult r;
        for (double dp : {0.0, 1.0, 3.0, 4.0})
            r.points.push_back(make_point(15.0, dp, dp + 1.0));
        r.failures.push_back({2.0, 15.0, "local_field_pole"});
        const std::string svg = to_svg(r, Quantity::ReEps);
        CHECK(find_elements(svg, "polyline").size() == 2);
    }
    SECTION("a single point renders as a marker")
    {
        SweepResult r;
        r.points.push_back(make_point(15.0, 0.5, 2.0));
        const std::string svg = to_svg(r, Quantity::ReMu);
        CHECK(find_elements(svg, "polyline").empty());
        CHECK(find_elements(svg, "circle").size() == 1);
        std::string why;
        CHECK(lhm_test::xml_well_formed(svg, &why));
    }
    SECTION("infinite FOM clips at the documented cap with an annotation")
    {
        SweepResult r;
        for (double dp : {0.0, 1.0, 2.0}) {
            ResponsePoint p = make_point(15.0, dp, 1.0);
            p.n = Complex(-1.0, 0.0);
            p.fom = std::numeric_limits<double>::infinity();
            r.points.push_back(p);
        }
        const std::string svg = to_svg(r, Quantity::Fom);
        CHECK(svg.find("values clipped at 1000") != std::string::npos);
        CHECK(svg.find("inf") == std::string::npos);
        std::string why;
        CHECK(lhm_test::xml_well_formed(svg, &why));
    }
    SECTION("no points means nothing to chart")
    {
        CHECK_THROWS_AS(to_svg(SweepResult{}, Quantity::ReEps), EmptySelection);
        SweepResult r;
        ResponsePoint p = make_point(15.0, 0.0, 1.0);
        p.fom = std::nan("");
        r.points.push_back(p);
        CHECK_THROWS_AS(to_svg(r, Quantity::Fom), EmptySelection);
    }
    SECTION("unwritable path raises IoFailure")
    {
        SweepResult r;
        r.points.push_back(make_point(15.0, 0.0, 1.0));
        CHECK_THROWS_AS(write_svg(r, Quantity::ReEps, "/nonexistent-dir/x.svg"),
                        IoFailure);
    }
}

TEST_CASE("config parsing")
{
    SECTION("shipped canonical file equals the built-in canonical spec")
    {
        const SweepSpec fromFile =
            parse_config_file(std::string(LHM_SOURCE_DIR) + "/configs/canonical.cfg");
        const SweepSpec builtin = canonical_sweep();
        CHECK(fromFile.base.gamma_unit == builtin.base.gamma_unit);
        CHECK(fromFile.base.Gamma21 == builtin.base.Gamma21);
        CHECK(fromFile.base.Gamma31 == builtin.base.Gamma31);
        CHECK(fromFile.base.Gamma32 == builtin.base.Gamma32);
        CHECK(fromFile.base.Gamma41 == builtin.base.Gamma41);
        CHECK(fromFile.base.Gamma42 == builtin.base.Gamma42);
        CHECK(fromFile.base.Gamma43 == builtin.base.Gamma43);
        CHECK(fromFile.base.Gamma_pump == builtin.base.Gamma_pump);
        CHECK(fromFile.base.Omega_p == builtin.base.Omega_p);
        CHECK(fromFile.base.Omega_c == builtin.base.Omega_c);
        CHECK(fromFile.base.Omega_B == builtin.base.Omega_B);  // closure rule
        CHECK(fromFile.base.Delta_p == builtin.base.Delta_p);
        CHECK(fromFile.base.Delta_c == builtin.base.Delta_c);
        CHECK(fromFile.base.delta_small == builtin.base.delta_small);
        CHECK(fromFile.base.d21 == builtin.base.d21);
        CHECK(fromFile.base.mu43 == builtin.base.mu43);
        CHECK(fromFile.base.N_density == builtin.base.N_density);
        CHECK(fromFile.delta_p_min == builtin.delta_p_min);
        CHECK(fromFile.delta_p_max == builtin.delta_p_max);
        CHECK(fromFile.delta_p_steps == builtin.delta_p_steps);
        CHECK(fromFile.omega_c_list == builtin.omega_c_list);
        CHECK(fromFile.branch == builtin.branch);
        CHECK(fromFile.eq4 == builtin.eq4);
        CHECK(fromFile.cross_check == builtin.cross_check);
    }
    SECTION("defaults flag loads the canonical set, later keys override")
    {
        std::stringstream in("defaults = true\nOmega_p = 0.25\n");
        const SweepSpec spec = parse_config(in);
        CHECK(spec.base.Omega_p == 0.25);
        CHECK(spec.base.Gamma32 == 1.0);
        // closure re-derives Omega_B from the overridden probe
        CHECK(spec.base.Omega_B == omega_B_closure(spec.base));
    }
    SECTION("explicit Omega_B wins over the closure rule")
    {
        std::stringstream in("defaults = true\nOmega_B = 0.125\n");
        CHECK(parse_config(in).base.Omega_B == 0.125);
    }
    SECTION("minimal config defaults the omega_c list to the base coupling")
    {
        std::stringstream in("Omega_c = 7.5\n");
        const SweepSpec spec = parse_config(in);
        REQUIRE(spec.omega_c_list.size() == 1);
        CHECK(spec.omega_c_list[0] == 7.5);
    }
    SECTION("rejections")
    {
        std::stringstream bad1("no_such_key = 1\n");
        CHECK_THROWS_AS(parse_config(bad1), ConfigError);
        std::stringstream bad2("Omega_p 0.5\n");
        CHECK_THROWS_AS(parse_config(bad2), ConfigError);
        std::stringstream bad3("Omega_p = abc\n");
        CHECK_THROWS_AS(parse_config(bad3), ConfigError);
        std::stringstream bad4("branch = sideways\n");
        CHECK_THROWS_AS(parse_config(bad4), ConfigError);
        std::stringstream bad5("omega_c_list = 15,,18\n");
        CHECK_THROWS_AS(parse_config(bad5), ConfigError);
        CHECK_THROWS_AS(parse_config_file("/no/such/file.cfg"), IoFailure);
    }
    SECTION("comments and blank lines are ignored")
    {
        std::stringstream in("# leading comment\n\nOmega_p = 0.5  # trailing\n");
        CHECK(parse_config(in).base.Omega_p == 0.5);
    }
}
