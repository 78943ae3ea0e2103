// Command-line front end: parameter sweeps to CSV/SVG, single-point
// evaluation, and config validation.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "lhm/lhm.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitSolver = 3;

void apply_overrides(lhm::SweepSpec& spec, const std::string& branch,
                     const std::string& eq4)
{
    if (branch == "paper")
        spec.branch = lhm::IndexBranch::Paper;
    else if (branch == "physical")
        spec.branch = lhm::IndexBranch::Physical;
    else if (!branch.empty())
        throw lhm::ConfigError("--branch expects paper|physical");

    if (eq4 == "corrected")
        spec.eq4 = lhm::Eq4Variant::Corrected;
    else if (eq4 == "literal")
        spec.eq4 = lhm::Eq4Variant::Literal;
    else if (!eq4.empty())
        throw lhm::ConfigError("--eq4 expects corrected|literal");
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_csv,
                  const std::string& out_svg_dir, const std::string& branch,
                  const std::string& eq4, bool cross_check, unsigned threads)
{
    lhm::SweepSpec spec = lhm::parse_config_file(config_path);
    apply_overrides(spec, branch, eq4);
    if (cross_check)
        spec.cross_check = true;
    spec.validate();

    const lhm::SweepResult result = lhm::run_sweep(spec, threads);
    lhm::write_csv(result, out_csv);
    std::cerr << "wrote " << result.points.size() << " points ("
              << result.failures.size() << " failures) to " << out_csv << "\n";

    if (!out_svg_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_svg_dir, ec);
        if (ec)
            throw lhm::IoFailure("cannot create directory " + out_svg_dir);
        for (lhm::Quantity q :
             {lhm::Quantity::ReEps, lhm::Quantity::ImEps, lhm::Quantity::ReMu,
              lhm::Quantity::ImMu, lhm::Quantity::ReN, lhm::Quantity::ImN,
              lhm::Quantity::Fom}) {
            const std::string path =
                (std::filesystem::path(out_svg_dir) /
                 (std::string(lhm::quantity_key(q)) + ".svg")).string();
            lhm::write_svg(result, q, path);
        }
        std::cerr << "wrote 7 charts to " << out_svg_dir << "\n";
    }
    return kExitOk;
}

void print_kv(const char* key, double v)
{
    std::printf("%s = %s\n", key, lhm::format_double(v).c_str());
}

int run_point_cmd(const std::string& config_path, double delta_p, double omega_c,
                  const std::string& branch, const std::string& eq4)
{
    lhm::SweepSpec spec = lhm::parse_config_file(config_path);
    apply_overrides(spec, branch, eq4);
    lhm::SystemParams p = spec.base;
    p.Delta_p = delta_p;
    p.Omega_c = omega_c;
    p.validate();

    const lhm::ResponsePoint r =
        lhm::evaluate_point(p, spec.constants, spec.branch, spec.eq4);
    print_kv("delta_p", r.delta_p);
    print_kv("omega_c", r.omega_c);
    print_kv("re_alpha_e", r.alpha_e.real());
    print_kv("im_alpha_e", r.alpha_e.imag());
    print_kv("re_alpha_m", r.alpha_m.real());
    print_kv("im_alpha_m", r.alpha_m.imag());
    print_kv("re_eps", r.eps_r.real());
    print_kv("im_eps", r.eps_r.imag());
    print_kv("re_mu", r.mu_r.real());
    print_kv("im_mu", r.mu_r.imag());
    print_kv("re_n", r.n.real());
    print_kv("im_n", r.n.imag());
    print_kv("fom", r.fom);
    return kExitOk;
}

int run_validate_cmd(const std::string& config_path)
{
    lhm::SweepSpec spec = lhm::parse_config_file(config_path);
    const auto issues = spec.violations();
    if (issues.empty()) {
        std::cerr << config_path << ": ok\n";
        return kExitOk;
    }
    for (const auto& s : issues)
        std::cerr << config_path << ": " << s << "\n";
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"steady-state electromagnetic response of a driven four-level "
                 "atomic medium"};
    app.require_subcommand(1);

    std::string config_path, out_csv, out_svg_dir;
    std::string branch, eq4;
    bool cross_check = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    double delta_p = 0.0, omega_c = 0.0;

    CLI::App* sweep = app.add_subcommand(
        "sweep", "evaluate the detuning grid and write CSV (and optional SVG charts)");
    sweep->add_option("--config", config_path, "config file")->required();
    sweep->add_option("--out-csv", out_csv, "output CSV path")->required();
    sweep->add_option("--out-svg-dir", out_svg_dir, "directory for SVG charts");
    sweep->add_option("--branch", branch, "refractive-index branch: paper|physical");
    sweep->add_option("--eq4", eq4, "population-equation variant: corrected|literal");
    sweep->add_flag("--cross-check", cross_check,
                    "verify each point against the time-evolution solver");
    sweep->add_option("--threads", threads, "worker threads");

    CLI::App* point = app.add_subcommand(
        "point", "evaluate one (delta_p, omega_c) point and print key-value text");
    point->add_option("--config", config_path, "config file")->required();
    point->add_option("--delta-p", delta_p, "probe detuning, units of gamma")->required();
    point->add_option("--omega-c", omega_c, "coupling Rabi frequency, units of gamma")
        ->required();
    point->add_option("--branch", branch, "refractive-index branch: paper|physical");
    point->add_option("--eq4", eq4, "population-equation variant: corrected|literal");

    CLI::App* validate =
        app.add_subcommand("validate", "check config invariants and exit");
    validate->add_option("--config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitConfig;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(config_path, out_csv, out_svg_dir, branch, eq4,
                                 cross_check, threads);
        if (point->parsed())
            return run_point_cmd(config_path, delta_p, omega_c, branch, eq4);
        if (validate->parsed())
            return run_validate_cmd(config_path);
    } catch (const lhm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lhm::IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const lhm::Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return point->parsed() ? kExitSolver : kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitOk;
}
