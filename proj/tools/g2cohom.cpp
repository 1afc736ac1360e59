// Command-line driver: verification suites, the curvature-feasibility
// pipeline, and window scans, with machine-readable JSON/CSV reports.

#include "g2cohom/report.hpp"
#include "g2cohom/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <exception>
#include <string>

namespace {

using g2cohom::RunConfig;

int cmd_verify(const std::string& suite, const RunConfig& cfg,
               const std::string& json_path) {
    const g2cohom::SuiteReport rep = g2cohom::run_suite(suite, cfg);
    for (const auto& c : rep.checks) {
        if (c.detail.empty())
            std::printf("%s  %s  residual=%.3e\n", c.pass ? "pass" : "FAIL",
                        c.name.c_str(), c.residual);
        else
            std::printf("%s  %s  residual=%.3e  (%s)\n", c.pass ? "pass" : "FAIL",
                        c.name.c_str(), c.residual, c.detail.c_str());
    }
    std::printf("%s: %zu checks, %d failing\n", rep.suite.c_str(), rep.checks.size(),
                rep.failures());
    if (!json_path.empty())
        g2cohom::write_text(json_path, g2cohom::to_json(rep).dump(2) + "\n");
    return rep.all_pass() ? 0 : 1;
}

int cmd_obstruction(long k, double step, const std::string& json_path) {
    const g2cohom::ObstructionReport rep = g2cohom::obstruction_verdict(k, step);
    std::printf("k = %ld\n", rep.k);
    std::printf("alpha grid: [%g, %g] step %g, %ld points\n", rep.grid.lo, rep.grid.hi,
                rep.grid.step, rep.grid.points);
    std::printf("min psi2 at the critical point: %.12g (alpha = %.12g, x = %.12g)\n",
                rep.psi2_at_q_alpha, rep.grid.alpha_at_min, rep.q_alpha);
    std::printf("derivative bound: %.12g\n", rep.lmax);
    std::printf("chained bound: k <= %ld\n", rep.chained_bound);
    std::printf("short bound max: %.12g\n", rep.short_bound_max);
    std::printf("verdict: %s\n", rep.verdict.c_str());
    if (!json_path.empty())
        g2cohom::write_text(json_path, g2cohom::to_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_scan(const std::string& target, double step, const std::string& csv_path) {
    const auto rows =
        target == "beta" ? g2cohom::scan_beta(step) : g2cohom::scan_alpha(step);
    const std::string csv = g2cohom::scan_csv(rows);
    if (csv_path.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        g2cohom::write_text(csv_path, csv);
        std::printf("wrote %zu rows to %s\n", rows.size(), csv_path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature toolkit for the circle-times-exceptional-group family"};
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(g2cohom::mul_table_hash()));
    app.set_version_flag("--version", std::string(g2cohom::kVersion) +
                                          " (multiplication table " + hash + ")");
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string json_path, csv_path, suite, target;

    app.add_option("--k", cfg.k, "bundle parameter (positive odd integer)")
        ->capture_default_str();
    app.add_option("--samples", cfg.samples, "random draws per sampled check")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "base seed of the per-index rng streams")
        ->capture_default_str();
    app.add_option("--mode", cfg.mode, "scalar mode for sampled comparisons")
        ->check(CLI::IsMember({"float", "exact"}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "residual tolerance for float-mode checks")
        ->capture_default_str();
    app.add_option("--step", cfg.step, "grid step for window sweeps")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for sample loops")
        ->capture_default_str();
    app.add_option("--tables", cfg.tables_path,
                   "monomial table file (default: certified builtin data)");

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember(g2cohom::suite_names()));
    verify->add_option("--json", json_path, "write the JSON report here");

    auto* obstruction =
        app.add_subcommand("obstruction", "run the non-negativity feasibility pipeline");
    obstruction->fallthrough();
    obstruction->add_option("--json", json_path, "write the JSON report here");

    auto* scan = app.add_subcommand("scan", "sweep the admissible window to CSV");
    scan->fallthrough();
    scan->add_option("target", target, "sweep parameter")
        ->required()
        ->check(CLI::IsMember({"beta", "alpha"}));
    scan->add_option("--csv", csv_path, "write the CSV table here (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g2cohom::validate_config(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(suite, cfg, json_path);
        if (app.got_subcommand(obstruction))
            return cmd_obstruction(cfg.k, cfg.step, json_path);
        if (app.got_subcommand(scan)) return cmd_scan(target, cfg.step, csv_path);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
