#pragma once

// Suite reports: a flat list of named pass/fail checks with residuals, the
// configuration that produced them, and the audit stamps (artifact version
// and multiplication-table hash). JSON rendering goes through a single
// serializer so equal inputs give byte-identical output.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2cohom/obstruction.hpp"
#include "g2cohom/octonion.hpp"
#include "g2cohom/version.hpp"

namespace g2cohom {

struct CheckResult {
    std::string name;
    bool pass{false};
    double residual{0.0};
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::map<std::string, std::string> config;
    std::vector<CheckResult> checks;

    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
    bool all_pass() const { return failures() == 0; }

    void add(std::string name, bool pass, double residual = 0.0,
             std::string detail = {}) {
        checks.push_back({std::move(name), pass, residual, std::move(detail)});
    }
};

namespace detail {

inline std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace detail

inline nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    nlohmann::json cfg(nlohmann::json::value_t::object);
    for (const auto& [k, v] : r.config) cfg[k] = v;
    cfg["version"] = kVersion;
    cfg["mul_table_hash"] = detail::hash_hex(mul_table_hash());
    j["config"] = cfg;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = c.residual;
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    const int fail = r.failures();
    j["summary"] = {{"total", r.checks.size()},
                    {"passed", r.checks.size() - std::size_t(fail)},
                    {"failed", fail},
                    {"pass", fail == 0}};
    return j;
}

inline nlohmann::json to_json(const ObstructionReport& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["alpha_grid"] = {{"lo", r.grid.lo},
                       {"hi", r.grid.hi},
                       {"step", r.grid.step},
                       {"points", r.grid.points}};
    j["q_alpha"] = r.q_alpha;
    j["psi2_at_q_alpha"] = r.psi2_at_q_alpha;
    j["psi2_positive"] = r.psi2_positive;
    j["max_ratio_residual"] = r.grid.max_ratio_residual;
    j["lmax"] = r.lmax;
    j["chained_bound"] = r.chained_bound;
    j["short_bound_max"] = r.short_bound_max;
    j["verdict"] = r.verdict;
    j["version"] = kVersion;
    j["mul_table_hash"] = detail::hash_hex(mul_table_hash());
    return j;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// Scan over the admissible window. Each row carries both natural parameters
// (the boundary slope and the induced metric value), the positivity
// certificate at the critical point, the window polynomial, and the chained
// bound, so sign changes and the verdict inputs can be audited offline.
struct ScanRow {
    double parameter{0};
    double alpha{0};
    double psi2_at_xalpha{0};
    double p_beta{0};
    double bound{0};
};

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "parameter,alpha,psi2_at_xalpha,p_beta,bound\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.parameter,
                      r.alpha, r.psi2_at_xalpha, r.p_beta, r.bound);
        out << buf;
    }
    return out.str();
}

// Rows of `scan beta`: walk the boundary-slope window [beta1, beta2].
inline std::vector<ScanRow> scan_beta(double step) {
    if (!(step > 0)) throw std::domain_error("bad grid");
    const BetaWindow w = beta_window();
    const long chained = obstruction_verdict(3).chained_bound;
    std::vector<ScanRow> rows;
    const long n = std::lround((w.beta2 - w.beta1) / step);
    for (long i = 0; i <= n; ++i) {
        const double b = (i == n) ? w.beta2 : w.beta1 + double(i) * step;
        ScanRow r;
        r.parameter = b;
        r.alpha = alpha_of_beta(b);
        r.psi2_at_xalpha = psi2_at_xalpha_closed(r.alpha, gamma_of_alpha(r.alpha));
        r.p_beta = p_of_beta(b);
        r.bound = double(chained);
        rows.push_back(r);
    }
    return rows;
}

// Rows of `scan alpha`: walk the induced window [3/4, alpha(beta1)].
inline std::vector<ScanRow> scan_alpha(double step) {
    if (!(step > 0)) throw std::domain_error("bad grid");
    const BetaWindow w = beta_window();
    const double lo = 0.75, hi = alpha_of_beta(w.beta1);
    const long chained = obstruction_verdict(3).chained_bound;
    std::vector<ScanRow> rows;
    const long n = std::lround((hi - lo) / step);
    for (long i = 0; i <= n; ++i) {
        const double a = (i == n) ? hi : lo + double(i) * step;
        ScanRow r;
        r.parameter = a;
        r.alpha = a;
        r.psi2_at_xalpha = psi2_at_xalpha_closed(a, gamma_of_alpha(a));
        r.p_beta = p_of_beta(beta_of_alpha(a, gamma_of_alpha(a)));
        r.bound = double(chained);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace g2cohom
