// Acceptance gate: fifteen criteria covering the whole toolkit, one line per
// criterion with its tolerances pinned in the text. Each criterion runs inside
// a catch block so a thrown exception becomes a FAIL line rather than an
// abort. The process exits 0 only if every criterion passes.

#include "g2cohom/report.hpp"
#include "g2cohom/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace g2cohom;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_s(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2f", v);
    return b;
}

std::string fmt_e(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.1e", v);
    return b;
}

// Default run: k = 3, 20 samples, seed 42, float mode, tol 1e-9, one thread.
RunConfig base_config() { return RunConfig{}; }

bool suite_green(const SuiteReport& r) { return !r.checks.empty() && r.all_pass(); }

struct Gate {
    int next = 1;
    int failed = 0;

    void line(bool pass, const std::string& text) {
        std::printf("%s  [%2d/15] %s\n", pass ? "PASS" : "FAIL", next, text.c_str());
        std::fflush(stdout);
        ++next;
        if (!pass) ++failed;
    }

    template <class Body>
    void criterion(const char* label, Body&& body) {
        try {
            auto [pass, text] = body();
            line(pass, text);
        } catch (const std::exception& e) {
            line(false, std::string(label) + " threw: " + e.what());
        }
    }
};

}  // namespace

int main() {
    std::printf("acceptance gate, toolkit %s, table %016llx\n", kVersion,
                static_cast<unsigned long long>(mul_table_hash()));
    Gate g;
    const auto gate_start = Clock::now();
    const CurvatureTableSet tables = CurvatureTableSet::builtin();

    // 1. Octonion axioms at scale, both arithmetic modes, under a second.
    g.criterion("octonion axioms", [&] {
        RunConfig cfg = base_config();
        cfg.samples = 10000;
        const auto t0 = Clock::now();
        cfg.mode = "exact";
        const SuiteReport exact = run_suite("octonion", cfg);
        cfg.mode = "float";
        cfg.tol = 1e-12;
        const SuiteReport fl = run_suite("octonion", cfg);
        const double dt = seconds_since(t0);
        const bool pass = suite_green(exact) && suite_green(fl) && dt < 1.0;
        return std::pair{pass, "octonion norm and alternative laws: 10000 exact pairs "
                               "and 10000 float pairs (rel tol 1e-12) in " +
                                   fmt_s(dt) + "s (budget 1s)"};
    });

    // 2. Every basis matrix is a derivation, checked on 100 exact pairs each.
    g.criterion("derivation identity", [&] {
        RunConfig cfg = base_config();
        cfg.mode = "exact";
        cfg.samples = 100;
        const SuiteReport r = run_suite("g2", cfg);
        return std::pair{suite_green(r),
                         std::string("derivation identity for all 14 basis matrices, "
                                     "100 exact pairs each")};
    });

    // 3. Orthonormal frame at four parameters plus the printed brackets.
    g.criterion("frame and brackets", [&] {
        const SuiteReport r = run_suite("brackets", base_config());
        auto named = [&](const char* n) {
            for (const auto& c : r.checks)
                if (c.name == n) return c.pass;
            return false;
        };
        const bool pass = suite_green(r) &&
                          named("[E1, F4] = -(1/sqrt2)(X1 - X2)") &&
                          named("[F1, F4] projects to (sqrt6/3)(X1 - X2)");
        return std::pair{pass,
                         std::string("frame Q-orthonormal at k=1,3,5,7 and the printed "
                                     "bracket identities, all exact")};
    });

    // 4. Vertical-plane closed forms, random and at the exact anchor slopes.
    g.criterion("vertical-plane closed forms", [&] {
        bool pass = true;
        double worst = 0;
        for (const ClosedFormId id :
             {ClosedFormId::A1_YE, ClosedFormId::A1_YF, ClosedFormId::A1_YEF}) {
            const auto fr = compare_closed_form(tables, id, 20, "float", 42, 1e-9);
            pass = pass && fr.pass();
            worst = std::max(worst, fr.max_rel_err);
            const auto er = compare_closed_form(tables, id, 0, "exact", 42);
            pass = pass && er.pass() && er.samples == 4;
        }
        return std::pair{pass, "vertical-plane closed forms: 20 random slopes rel tol "
                               "1e-9 (worst " +
                                   fmt_e(worst) + "); exact at slopes 0 and 2/sqrt3"};
    });

    // 5. Mixed-plane closed form, random profiles and the exact flat limit.
    g.criterion("mixed-plane closed form", [&] {
        const auto fr =
            compare_closed_form(tables, ClosedFormId::A2_XY, 20, "float", 42, 1e-9);
        bool zero_ok = true;
        using SX = R23;
        const SX zero = scalar_traits<SX>::zero();
        for (const auto& [alpha, gb] : exact_anchor_points<SX>())
            for (int variant = 0; variant < 2; ++variant) {
                auto p = exact_probe_profile<SX>(alpha, gb.first, gb.second, variant);
                p.xi = {zero, zero};
                zero_ok = zero_ok && is_zero(engine_value(ClosedFormId::A2_XY, p));
            }
        return std::pair{fr.pass() && zero_ok,
                         "mixed-plane closed form: 20 random profiles rel tol 1e-9 "
                         "(worst " +
                             fmt_e(fr.max_rel_err) +
                             "); exactly zero at xi = xi' = 0"};
    });

    // 6. The ten stored tables against the engine via polarization.
    g.criterion("stored-table closed forms", [&] {
        bool pass = true;
        double worst = 0;
        for (int t = 0; t < 10; ++t) {
            const auto id = ClosedFormId(int(ClosedFormId::R1) + t);
            const auto fr = compare_closed_form(tables, id, 20, "float", 42, 1e-9);
            pass = pass && fr.pass();
            worst = std::max(worst, fr.max_rel_err);
            const auto er = compare_closed_form(tables, id, 0, "exact", 42);
            pass = pass && er.pass() && er.samples == 4;
        }
        return std::pair{pass, "ten stored tables match polarized engine values: 20 "
                               "random profiles rel tol 1e-9 (worst " +
                                   fmt_e(worst) +
                                   "); exact at the anchor profiles incl. alpha=1"};
    });

    // 7. Critical-point identities of the quartic pair, exact in Q(gamma),
    //    plus strict positivity across the admissible grid.
    g.criterion("quartic critical-point identities", [&] {
        bool pass = true;
        for (const Rat& a : {rat(1), rat(4, 5), rat(9, 8), rat(3, 4), rat(15, 13)})
            for (const auto& c : lemma_quartic_checks(a)) pass = pass && c.pass;
        const GridScan gs = psi2_grid_scan(0.75, 1.1847, 1e-3);
        pass = pass && gs.points == 436 && gs.min_psi2 > 0.0 &&
               gs.max_ratio_residual <= 1e-9;
        return std::pair{pass, "quartic identities exact in Q(gamma) at five alphas; "
                               "psi2(x_alpha) > 0 on [0.75, 1.1847] step 1e-3 (" +
                                   std::to_string(gs.points) + " points, min " +
                                   fmt_e(gs.min_psi2) + ")"};
    });

    // 8. Coefficient extraction from the tables: the flat-locus and rate
    //    identities for every q-power, exact at rational alphas.
    g.criterion("coefficient extraction", [&] {
        bool pass = true;
        int count = 0;
        for (const Rat& a : {rat(1), rat(4, 5), rat(9, 8)})
            for (const auto& c : lemma_extraction_checks(a, tables)) {
                pass = pass && c.pass;
                ++count;
            }
        return std::pair{pass && count == 45,
                         std::string("coefficient extraction: 5 flat-locus and 10 rate "
                                     "identities per alpha, exact at alpha = 1, 4/5, 9/8")};
    });

    // 9. The admissible window endpoints and their closed forms.
    g.criterion("window endpoints", [&] {
        const double s3 = std::sqrt(3.0);
        const double b1 = 7.0 * s3 / 3.0 - 2.0 * std::sqrt(39.0) / 3.0;
        const double pv = std::fabs(p_of_beta(b1));
        const double a1 = alpha_of_beta(b1);
        const double a1_closed = 7.0 / 12.0 + std::sqrt(13.0) / 6.0;
        const R3 third = inverse(scalar_traits<R3>::sqrt3());
        const bool exact34 =
            is_zero(R3(alpha_of_beta(third) - scalar_traits<R3>::from_ratio(3, 4)));
        const bool pass =
            pv <= 1e-10 && std::fabs(a1 - a1_closed) <= 1e-10 && exact34;
        return std::pair{pass, "window endpoints: |p(7sqrt3/3 - 2sqrt39/3)| = " +
                                   fmt_e(pv) +
                                   " <= 1e-10; alpha there = 7/12 + sqrt13/6 within "
                                   "1e-10; alpha(1/sqrt3) = 3/4 exact"};
    });

    // 10. Verdicts across the parameter range, with the two bounds pinned.
    g.criterion("obstruction verdicts", [&] {
        bool pass = true;
        double sbm = 0;
        for (const long k : {3L, 5L, 7L, 9L}) {
            const ObstructionReport r = obstruction_verdict(k);
            pass = pass && r.verdict == "infeasible" && r.chained_bound == 2;
            sbm = r.short_bound_max;
        }
        const ObstructionReport r1 = obstruction_verdict(1);
        pass = pass && r1.verdict == "no contradiction";
        const double pin = (8.0 / 3.0) * (7.0 / 12.0 + std::sqrt(13.0) / 6.0);
        pass = pass && std::fabs(sbm - pin) <= 1e-4;
        char sb[32];
        std::snprintf(sb, sizeof sb, "%.6f", sbm);
        return std::pair{pass, "verdicts: k=3,5,7,9 infeasible with chained bound 2; "
                               "short bound max " +
                                   std::string(sb) +
                                   " within 1e-4 of (8/3)(7/12 + sqrt13/6); k=1 no "
                                   "contradiction"};
    });

    // 11. Reflection elements and isotropy patterns at three parameters.
    g.criterion("reflection relations", [&] {
        bool pass = true;
        for (const long k : {3L, 5L, 7L}) {
            RunConfig cfg = base_config();
            cfg.k = k;
            pass = pass && suite_green(run_suite("weyl", cfg));
        }
        return std::pair{pass,
                         std::string("reflection squares, products, and isotropy "
                                     "membership exact at k = 3, 5, 7")};
    });

    // 12. Chart actions on a thousand points per chart.
    g.criterion("chart actions", [&] {
        RunConfig cfg = base_config();
        cfg.samples = 1000;
        cfg.tol = 1e-10;
        const SuiteReport r = run_suite("davis", cfg);
        double sphere = 0;
        for (const auto& c : r.checks)
            if (c.name == "circle action preserves the embedded spheres")
                sphere = c.residual;
        return std::pair{suite_green(r),
                         "chart actions: 1000 points per chart, residuals <= 1e-10 "
                         "(sphere worst " +
                             fmt_e(sphere) +
                             "); corner point and gluing <= 1e-10; hyperbolic "
                             "invariance <= 1e-6"};
    });

    // 13. Variety suite at a thousand samples.
    g.criterion("variety suite", [&] {
        RunConfig cfg = base_config();
        cfg.samples = 1000;
        const SuiteReport r = run_suite("brieskorn", cfg);
        return std::pair{suite_green(r),
                         std::string("variety: root residuals <= 1e-14 for degrees "
                                     "1..9; 1000 action samples within 1e-9; pattern "
                                     "families accepted, 1000 random elements rejected")};
    });

    // 14. The boundary-closing validator, condition by condition.
    g.criterion("boundary closing conditions", [&] {
        const SuiteReport r = run_suite("smoothness", base_config());
        return std::pair{suite_green(r),
                         std::string("boundary closing conditions enforced one by one, "
                                     "including f1'(0) = 4/(k sqrt6); clean reduced "
                                     "profiles report zero violations")};
    });

    // 15. Whole default-config pass under a minute, byte-identical on rerun.
    g.criterion("runtime and determinism", [&] {
        bool pass = true;
        double pass_time = 0;
        std::string out[2];
        for (int round = 0; round < 2; ++round) {
            const auto t0 = Clock::now();
            std::string acc;
            for (const auto& name : suite_names()) {
                const SuiteReport r = run_suite(name, base_config());
                pass = pass && suite_green(r);
                acc += to_json(r).dump(2);
                acc += '\n';
            }
            acc += to_json(obstruction_verdict(3)).dump(2);
            if (round == 0) pass_time = seconds_since(t0);
            out[round] = std::move(acc);
        }
        pass = pass && out[0] == out[1] && pass_time < 60.0;
        return std::pair{pass, "default-config pass of all eight suites in " +
                                   fmt_s(pass_time) +
                                   "s (budget 60s, single-threaded); reports "
                                   "byte-identical across reruns at seed 42"};
    });

    const double total = seconds_since(gate_start);
    std::printf("acceptance: %d/15 criteria passed in %.2fs\n", 15 - g.failed, total);
    return g.failed == 0 ? 0 : 1;
}
