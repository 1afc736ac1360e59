#pragma once

// The eight verification suites behind the command-line tool: each one turns a
// RunConfig into a SuiteReport whose checks either certify an exact identity
// or record the worst residual seen over a deterministic sample stream.

#include "g2cohom/appendix.hpp"
#include "g2cohom/brieskorn.hpp"
#include "g2cohom/obstruction.hpp"
#include "g2cohom/report.hpp"
#include "g2cohom/sampling.hpp"
#include "g2cohom/shimada.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace g2cohom {

struct RunConfig {
    long k = 3;
    int samples = 20;
    std::uint64_t seed = 42;
    std::string mode = "float";  // "float" or "exact"
    double tol = 1e-9;
    double step = 1e-3;
    int jobs = 1;
    std::string tables_path;  // empty = certified builtin tables
};

// Rejects configurations the suites cannot interpret; the caller maps the
// throw to a usage error.
inline void validate_config(const RunConfig& cfg) {
    if (cfg.k < 1 || cfg.k % 2 == 0)
        throw std::invalid_argument("k must be a positive odd integer");
    if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (!(cfg.step > 0.0)) throw std::invalid_argument("step must be positive");
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (cfg.mode != "float" && cfg.mode != "exact")
        throw std::invalid_argument("mode must be float or exact");
}

namespace detail {

inline std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::map<std::string, std::string> config_entries(const RunConfig& cfg) {
    std::map<std::string, std::string> m;
    m["k"] = std::to_string(cfg.k);
    m["samples"] = std::to_string(cfg.samples);
    m["seed"] = std::to_string(cfg.seed);
    m["mode"] = cfg.mode;
    m["tol"] = fmt_g(cfg.tol);
    m["jobs"] = std::to_string(cfg.jobs);
    return m;
}

// Run f(0), ..., f(n-1) across a small pool.  Each result lands in its own
// slot, so the merged output does not depend on thread interleaving; the
// per-index rng streams make the draws order-independent too.
template <class R, class F>
std::vector<R> map_indexed(int n, int jobs, F&& f) {
    std::vector<R> out(std::size_t(std::max(n, 0)));
    const int workers = std::max(1, std::min(jobs, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[std::size_t(i)] = f(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                out[std::size_t(i)] = f(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

template <class S>
Octonion<S> apply_linear(const Mat<S, 7, 7>& d, const Octonion<S>& x) {
    Octonion<S> out;  // kills the real part: linear maps of Im O with D(1) = 0
    for (int i = 0; i < 7; ++i) {
        S t = scalar_traits<S>::zero();
        for (int j = 0; j < 7; ++j) t = S(t + d(i, j) * x.c[std::size_t(j + 1)]);
        out.c[std::size_t(i + 1)] = t;
    }
    return out;
}

inline double oct_max_abs(const Octonion<double>& x) {
    double m = 0;
    for (const double c : x.c) m = std::max(m, std::abs(c));
    return m;
}

inline double automorphism_residual(const Mat<double, 7, 7>& g) {
    double worst = 0;
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            const Octonion<double> gi = apply_linear(g, Octonion<double>::unit(i));
            const Octonion<double> gj = apply_linear(g, Octonion<double>::unit(j));
            Octonion<double> lhs =
                apply_linear(g, im(Octonion<double>::unit(i) * Octonion<double>::unit(j)));
            lhs.c[0] = re(Octonion<double>::unit(i) * Octonion<double>::unit(j));
            worst = std::max(worst, oct_max_abs(lhs - gi * gj));
        }
    }
    return worst;
}

inline GroupElement<double> group_to_double(const GroupElement<Rat>& w) {
    GroupElement<double> o;
    o.c_re = to_double(w.c_re);
    o.c_im = to_double(w.c_im);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) o.g(i, j) = to_double(w.g(i, j));
    return o;
}

inline double chart_point_distance(const ChartPoint& a, const ChartPoint& b) {
    if (a.chart != b.chart) return 1.0;  // charts must agree for the callers
    return std::max(oct_max_abs(a.u - b.u), oct_max_abs(a.v - b.v));
}

}  // namespace detail

// --- octonion suite ----------------------------------------------------------

inline SuiteReport verify_octonion(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "octonion";
    rep.config = detail::config_entries(cfg);
    const bool exact = cfg.mode == "exact";
    const std::string pairs = std::to_string(cfg.samples) + " pairs";

    {
        using O = Octonion<Rat>;
        bool ok = true;
        for (int i = 1; i < 8 && ok; ++i)
            ok = (O::unit(i) * O::unit(i)) == O::real(rat(-1));
        for (int i = 1; i < 8 && ok; ++i)
            for (int j = 1; j < 8 && ok; ++j) {
                if (i == j) continue;
                ok = (O::unit(i) * O::unit(j)) == (-(O::unit(j) * O::unit(i)));
            }
        for (int i = 0; i < 8 && ok; ++i)
            ok = (O::unit(0) * O::unit(i)) == O::unit(i) &&
                 (O::unit(i) * O::unit(0)) == O::unit(i);
        rep.add("imaginary units square to -1 and anticommute", ok);
    }
    {
        using O = Octonion<Rat>;
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i)
            for (int j = 0; j < 8 && ok; ++j)
                ok = conj(O::unit(i) * O::unit(j)) == (conj(O::unit(j)) * conj(O::unit(i)));
        rep.add("conjugation reverses products", ok);
    }

    struct Out {
        double norm_rel = 0;
        double alt_rel = 0;
        bool ok = true;
    };
    auto outs = detail::map_indexed<Out>(cfg.samples, cfg.jobs, [&](int i) {
        Out o;
        SampleRng rng(cfg.seed, std::uint64_t(i));
        if (exact) {
            // Both identities are homogeneous in each argument, so scaling x
            // and y by the lcm of their coordinate denominators (<= lcm(1..6)
            // = 60) gives an equivalent test over the integers. Coordinates
            // are then bounded by 8*60, the largest intermediate by
            // 8^2 * 480^3 < 2^33 per coefficient and 8^3 * 480^4 < 2^46 for
            // the norms, so 64-bit arithmetic is exact.
            std::array<long long, 8> xn, xd, yn, yd;
            for (int c = 0; c < 8; ++c) {
                xn[std::size_t(c)] = rng.uniform_int(-8, 8);
                xd[std::size_t(c)] = rng.uniform_int(1, 6);
                yn[std::size_t(c)] = rng.uniform_int(-8, 8);
                yd[std::size_t(c)] = rng.uniform_int(1, 6);
            }
            long long lx = 1, ly = 1;
            for (int c = 0; c < 8; ++c) {
                lx = std::lcm(lx, xd[std::size_t(c)]);
                ly = std::lcm(ly, yd[std::size_t(c)]);
            }
            Octonion<long long> x, y;
            for (int c = 0; c < 8; ++c) {
                x.c[std::size_t(c)] = xn[std::size_t(c)] * (lx / xd[std::size_t(c)]);
                y.c[std::size_t(c)] = yn[std::size_t(c)] * (ly / yd[std::size_t(c)]);
            }
            const auto xy = x * y, xx = x * x, yx = y * x;
            o.ok = norm_sq(xy) == norm_sq(x) * norm_sq(y) &&
                   (xx * y) == (x * xy) && (yx * x) == (y * xx);
        } else {
            Octonion<double> x, y;
            for (int c = 0; c < 8; ++c) {
                x.c[std::size_t(c)] = rng.uniform(-2.0, 2.0);
                y.c[std::size_t(c)] = rng.uniform(-2.0, 2.0);
            }
            const double nx = norm_sq(x), ny = norm_sq(y);
            o.norm_rel = std::abs(norm_sq(x * y) - nx * ny) / std::max(1.0, nx * ny);
            const double scale = std::max(1.0, nx * std::sqrt(ny));
            o.alt_rel = std::max(detail::oct_max_abs((x * x) * y - x * (x * y)),
                                 detail::oct_max_abs((y * x) * x - y * (x * x))) /
                        scale;
        }
        return o;
    });
    if (exact) {
        bool all = true;
        for (const auto& o : outs) all = all && o.ok;
        rep.add("norm multiplicativity and alternative laws, exact (" + pairs + ")", all);
    } else {
        double wn = 0, wa = 0;
        for (const auto& o : outs) {
            wn = std::max(wn, o.norm_rel);
            wa = std::max(wa, o.alt_rel);
        }
        rep.add("norm multiplicativity (" + pairs + ")", wn <= cfg.tol, wn);
        rep.add("alternative laws (" + pairs + ")", wa <= cfg.tol, wa);
    }

    {
        using O = Octonion<Rat>;
        O x;
        x.c = {rat(1), rat(-2), rat(3, 2), rat(0), rat(1, 3), rat(-1), rat(2), rat(5, 4)};
        const bool inv_ok = (x * inverse(x)) == O::real(rat(1));
        bool threw = false;
        try {
            (void)inverse(O());
        } catch (const std::domain_error&) {
            threw = true;
        }
        rep.add("inverse recovers the identity; zero is rejected", inv_ok && threw);
    }
    return rep;
}

// --- derivation-algebra suite ------------------------------------------------

inline SuiteReport verify_g2(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "g2";
    rep.config = detail::config_entries(cfg);
    const bool exact = cfg.mode == "exact";
    const auto basis = g2_param_basis<Rat>();

    {
        bool ok = true;
        for (const auto& m : basis) ok = ok && is_derivation(m);
        rep.add("14 parameter-basis matrices satisfy the Leibniz rule", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 14 && ok; ++i)
            for (int j = i + 1; j < 14 && ok; ++j)
                ok = is_derivation(commutator(basis[std::size_t(i)], basis[std::size_t(j)]));
        rep.add("derivations close under the commutator", ok);
    }
    {
        const Rat q = q0_form(u0_matrix<Rat>(), u0_matrix<Rat>());
        rep.add("pairing gives the rotation direction norm 3", is_zero(Rat(q - 3)));
    }

    // Leibniz on random octonion pairs, one stream per (matrix, sample).
    const int total = 14 * cfg.samples;
    const auto basis_d = g2_param_basis<double>();
    struct Out {
        double rel = 0;
        bool ok = true;
    };
    auto outs = detail::map_indexed<Out>(total, cfg.jobs, [&](int idx) {
        Out o;
        const int mi = idx / cfg.samples;
        SampleRng rng(cfg.seed, std::uint64_t(idx));
        if (exact) {
            using O = Octonion<Rat>;
            O u, v;
            for (int c = 0; c < 8; ++c) {
                u.c[std::size_t(c)] = rat(rng.uniform_int(-6, 6), rng.uniform_int(1, 5));
                v.c[std::size_t(c)] = rat(rng.uniform_int(-6, 6), rng.uniform_int(1, 5));
            }
            const auto& d = basis[std::size_t(mi)];
            const O lhs = detail::apply_linear(d, u * v);
            const O rhs = detail::apply_linear(d, u) * v + u * detail::apply_linear(d, v);
            o.ok = is_zero(lhs - rhs);
        } else {
            Octonion<double> u, v;
            for (int c = 0; c < 8; ++c) {
                u.c[std::size_t(c)] = rng.uniform(-2.0, 2.0);
                v.c[std::size_t(c)] = rng.uniform(-2.0, 2.0);
            }
            const auto& d = basis_d[std::size_t(mi)];
            const Octonion<double> lhs = detail::apply_linear(d, u * v);
            const Octonion<double> rhs =
                detail::apply_linear(d, u) * v + u * detail::apply_linear(d, v);
            o.rel = detail::oct_max_abs(lhs - rhs) /
                    std::max(1.0, std::sqrt(norm_sq(u) * norm_sq(v)));
        }
        return o;
    });
    const std::string tag =
        "Leibniz rule on random pairs (14 x " + std::to_string(cfg.samples) + ")";
    if (exact) {
        bool all = true;
        for (const auto& o : outs) all = all && o.ok;
        rep.add(tag + ", exact", all);
    } else {
        double w = 0;
        for (const auto& o : outs) w = std::max(w, o.rel);
        rep.add(tag, w <= cfg.tol, w);
    }

    if (!exact) {
        auto res = detail::map_indexed<double>(cfg.samples, cfg.jobs, [&](int i) {
            SampleRng rng(cfg.seed, std::uint64_t(i) + 1000003);
            return detail::automorphism_residual(random_g2_element(rng));
        });
        double w = 0;
        for (const double r : res) w = std::max(w, r);
        const double tol = std::max(cfg.tol, 1e-12);
        rep.add("exponentials of derivations are automorphisms", w <= tol, w);
    }
    return rep;
}

// --- frame and bracket suite -------------------------------------------------

inline SuiteReport verify_brackets(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "brackets";
    rep.config = detail::config_entries(cfg);
    using S = R23;
    const auto& ctx = BasisContext<S>::instance();
    const S one = scalar_traits<S>::one();
    const S zero = scalar_traits<S>::zero();

    auto same = [](const Coeffs<S>& a, const Coeffs<S>& b) {
        for (int i = 0; i < 15; ++i)
            if (!is_zero(S(a(i, 0) - b(i, 0)))) return false;
        return true;
    };

    for (long k : {1L, 3L, 5L, 7L}) {
        const S sk = scalar_traits<S>::from_long(k);
        bool ok = true;
        for (int i = 0; i < 12 && ok; ++i)
            for (int j = i; j < 12 && ok; ++j) {
                const S got = q_pair(sk, ctx.element(basis_vector<S>(i), sk),
                                     ctx.element(basis_vector<S>(j), sk));
                ok = is_zero(S(got - (i == j ? one : zero)));
            }
        rep.add("frame is Q-orthonormal at k=" + std::to_string(k), ok);
    }

    const S s2 = scalar_traits<S>::sqrt2();
    const S s3 = scalar_traits<S>::sqrt3();
    const S s6 = scalar_traits<S>::sqrt6();
    const Coeffs<S> mixed = Coeffs<S>(basis_vector<S>(0) - basis_vector<S>(1));

    rep.add("[Y1, E1] = sqrt3 E2",
            same(ctx.bracket(basis_vector<S>(2), basis_vector<S>(4)),
                 s3 * basis_vector<S>(5)));
    rep.add("[Y1, F1] = -(1/sqrt3) F2",
            same(ctx.bracket(basis_vector<S>(2), basis_vector<S>(8)),
                 S(-inverse(s3)) * basis_vector<S>(9)));
    rep.add("[E1, F4] = -(1/sqrt2)(X1 - X2)",
            same(ctx.bracket(basis_vector<S>(4), basis_vector<S>(11)),
                 S(-inverse(s2)) * mixed));
    rep.add("[F1, F4] projects to (sqrt6/3)(X1 - X2)",
            same(project_geometric(ctx.bracket(basis_vector<S>(8), basis_vector<S>(11))),
                 S(s6 * inverse(scalar_traits<S>::from_long(3))) * mixed));

    {
        bool anti = true, nocircle = true;
        const S minus_one = scalar_traits<S>::from_long(-1);
        for (int i = 0; i < 15; ++i)
            for (int j = i; j < 15; ++j) {
                const auto bij = ctx.bracket(basis_vector<S>(i), basis_vector<S>(j));
                const auto bji = ctx.bracket(basis_vector<S>(j), basis_vector<S>(i));
                anti = anti && same(bij, minus_one * bji);
                nocircle = nocircle && is_zero(S(bij(0, 0) + bij(1, 0)));
            }
        rep.add("structure table is antisymmetric", anti);
        rep.add("brackets carry no circle component", nocircle);
    }
    {
        bool ok = true;
        for (int a = 0; a < 15 && ok; ++a)
            for (int b = a + 1; b < 15 && ok; ++b)
                for (int c = b + 1; c < 15 && ok; ++c) {
                    const auto ea = basis_vector<S>(a);
                    const auto eb = basis_vector<S>(b);
                    const auto ec = basis_vector<S>(c);
                    Coeffs<S> sum = ctx.bracket(ea, ctx.bracket(eb, ec));
                    sum += ctx.bracket(eb, ctx.bracket(ec, ea));
                    sum += ctx.bracket(ec, ctx.bracket(ea, eb));
                    for (int t = 0; t < 15 && ok; ++t) ok = is_zero(sum(t, 0));
                }
        rep.add("Jacobi identity on basis triples", ok);
    }
    return rep;
}

// --- reflection (Weyl) suite -------------------------------------------------

inline SuiteReport verify_weyl(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "weyl";
    rep.config = detail::config_entries(cfg);

    for (const auto& c : reflection_element_checks(cfg.k)) rep.add(c.name, c.pass);
    for (const auto& c : frame_action_checks(cfg.k)) rep.add(c.name, c.pass);

    const std::array<std::array<Rat, 4>, 2> quads{{
        {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)},
        {rat(3, 5), rat(0), rat(4, 5), rat(0)},
    }};
    for (std::size_t qi = 0; qi < quads.size(); ++qi) {
        const auto& q = quads[qi];
        for (const auto& c : paired_module_checks(q[0], q[1], q[2], q[3]))
            rep.add("isotropy block " + std::to_string(qi + 1) + ": " + c.name, c.pass);
    }

    // Endpoint geometry: each reflection fixes its own singular point and
    // moves the opposite one; the marked element fixes the whole geodesic.
    const long d = cfg.k;
    const auto wm = detail::group_to_double(weyl_minus<Rat>(cfg.k));
    const auto wp = detail::group_to_double(weyl_plus<Rat>());
    const auto tau = tau_element<double>();
    const VarietyPoint pm = p_minus(d), pp = p_plus(d);
    const VarietyPoint pr = p_regular(d, 0.5 * t0_solve(d));
    const double fix_tol = 1e-10;

    const double d_near = variety_distance(act(wm, pm), pm);
    const double d_far = variety_distance(act(wp, pp), pp);
    rep.add("odd reflection fixes the near singular point", d_near <= fix_tol, d_near);
    rep.add("even reflection fixes the far singular point", d_far <= fix_tol, d_far);
    const double m_far = variety_distance(act(wm, pp), pp);
    const double m_near = variety_distance(act(wp, pm), pm);
    rep.add("odd reflection moves the far singular point", m_far > 1e-3, m_far);
    rep.add("even reflection moves the near singular point", m_near > 1e-3, m_near);
    const double d_tau = std::max({variety_distance(act(tau, pm), pm),
                                   variety_distance(act(tau, pp), pp),
                                   variety_distance(act(tau, pr), pr)});
    rep.add("marked element fixes the whole geodesic", d_tau <= fix_tol, d_tau);
    return rep;
}

// --- appendix (closed-form) suite --------------------------------------------

inline CurvatureTableSet load_tables(const std::string& path) {
    if (path.empty()) return CurvatureTableSet::builtin();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return CurvatureTableSet::parse(ss.str());
}

inline SuiteReport verify_appendix(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "appendix";
    rep.config = detail::config_entries(cfg);
    rep.config["step"] = detail::fmt_g(cfg.step);
    rep.config["tables"] = cfg.tables_path.empty() ? "builtin" : cfg.tables_path;
    const CurvatureTableSet ts = load_tables(cfg.tables_path);

    const int nids = int(kAllClosedForms.size());
    auto reps = detail::map_indexed<ComparisonReport>(nids, cfg.jobs, [&](int i) {
        return compare_closed_form(ts, kAllClosedForms[std::size_t(i)], cfg.samples,
                                   cfg.mode, cfg.seed, cfg.tol);
    });
    for (const auto& r : reps) {
        std::string detail;
        if (!r.failures.empty()) detail = r.failures.front().detail;
        rep.add(std::string(closed_form_name(r.id)) + ": engine matches the closed form",
                r.pass(), r.max_rel_err, detail);
    }

    for (const Rat& alpha : {rat(1), rat(4, 5)})
        for (const auto& c : lemma_quartic_checks(alpha))
            rep.add("alpha=" + alpha.get_str() + ": " + c.name, c.pass);
    for (const auto& c : beta2_multiplicity_checks()) rep.add(c.name, c.pass);
    for (const Rat& alpha : {rat(1), rat(9, 8)})
        for (const auto& c : lemma_extraction_checks(alpha, ts))
            rep.add("alpha=" + alpha.get_str() + ": " + c.name, c.pass);

    const GridScan g = psi2_grid_scan(0.75, 1.1847, cfg.step);
    rep.add("critical value stays positive across the window", g.min_psi2 > 0.0,
            g.min_psi2, "minimum at alpha=" + detail::fmt_g(g.alpha_at_min));
    rep.add("quartic pair locks in ratio -4/3 at the critical point",
            g.max_ratio_residual <= cfg.tol, g.max_ratio_residual);
    return rep;
}

// --- chart-action (Davis) suite ----------------------------------------------

inline SuiteReport verify_davis(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "davis";
    rep.config = detail::config_entries(cfg);
    constexpr double kTwoPi = 6.283185307179586;

    struct Out {
        double sphere = 0, comm_t = 0, comm_g2 = 0, chart = 0;
        double mobius_fix = 0, glue = 0, canon = 0, hyper = 0;
    };
    auto outs = detail::map_indexed<Out>(cfg.samples, cfg.jobs, [&](int i) {
        Out o;
        SampleRng rng(cfg.seed, std::uint64_t(i));
        const long k = 2 * (i % 4) + 1;

        for (const Chart ch : {Chart::UV, Chart::UpVp}) {
            const ChartPoint p = random_s13_point(rng, ch, k);
            const So2Element g = so2_of_angle(rng.uniform(0.0, kTwoPi));

            const ChartPoint q = davis_so2(g, p);
            const auto r1 = membership_residuals(q);
            o.sphere = std::max({o.sphere, std::abs(r1.f1), std::abs(r1.f2)});

            o.comm_t = std::max(o.comm_t,
                                detail::chart_point_distance(
                                    davis_so2(g, involution_T(p)), involution_T(q)));

            const Mat<double, 7, 7> A = random_g2_element(rng);
            o.comm_g2 = std::max(o.comm_g2, detail::chart_point_distance(
                                                davis_g2(A, q), davis_so2(g, davis_g2(A, p))));

            if (norm_sq(p.u) > 1e-2 && q.chart == p.chart && norm_sq(q.u) > 1e-4) {
                const ChartPoint lhs = davis_so2(g, transition(p));
                if (lhs.chart != p.chart)
                    o.chart = std::max(
                        o.chart, detail::chart_point_distance(lhs, transition(q)));
            }
        }

        const So2Element g = so2_of_angle(rng.uniform(0.0, kTwoPi));
        for (const Chart ch : {Chart::UV, Chart::UpVp}) {
            const OrbitPoint fp = mobius_orbit(g, {ch, {0.0, 1.0}});
            o.mobius_fix = std::max({o.mobius_fix, std::abs(fp.x[0]),
                                     std::abs(fp.x[1] - 1.0)});

            const std::array<double, 2> x{rng.uniform(-1.5, 1.5), rng.uniform(0.1, 2.0)};
            const Chart other = (ch == Chart::UV) ? Chart::UpVp : Chart::UV;
            const auto lhs = mobius_orbit_chart(g, x, ch);
            const auto rhs = mobius_orbit_chart(g, orbit_gluing(x), other);
            if (lhs && rhs) {
                const double n = (*lhs)[0] * (*lhs)[0] + (*lhs)[1] * (*lhs)[1];
                if (n > 1e-6) {
                    const auto glued = orbit_gluing(*lhs);
                    o.glue = std::max({o.glue, std::abs(glued[0] - (*rhs)[0]),
                                       std::abs(glued[1] - (*rhs)[1])});
                }
            }
        }

        {
            const Chart ch = (i % 2) ? Chart::UpVp : Chart::UV;
            ChartPoint p;
            p.chart = ch;
            p.k = k;
            p.u = Octonion<double>::real(rng.uniform(-1.2, 1.2)) +
                  rng.uniform(0.05, 1.5) * Octonion<double>::unit(3);
            p.v = Octonion<double>::unit(1);
            const So2Element gg = so2_of_angle(rng.uniform(0.0, kTwoPi));
            const ChartPoint q = davis_so2(gg, p);
            const CanonicalRep cq = canonical_rep(q);
            const OrbitPoint ox = mobius_orbit(gg, {ch, {re(p.u), std::abs(p.u.c[3])}});
            if (ox.chart == q.chart)
                o.canon = std::max(std::abs(ox.x[0] - cq.x1), std::abs(ox.x[1] - cq.x2));
        }
        {
            const So2Element gg = so2_of_angle(rng.uniform(0.2, 2.8));
            const std::array<double, 2> x{rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0)};
            const Chart ch = (i % 2) ? Chart::UpVp : Chart::UV;
            const auto img = mobius_orbit_chart(gg, x, ch);
            if (img && (*img)[1] > 0.05)
                o.hyper = hyperbolic_pullback_deviation(gg, x, ch);
        }
        return o;
    });

    Out w;
    for (const auto& o : outs) {
        w.sphere = std::max(w.sphere, o.sphere);
        w.comm_t = std::max(w.comm_t, o.comm_t);
        w.comm_g2 = std::max(w.comm_g2, o.comm_g2);
        w.chart = std::max(w.chart, o.chart);
        w.mobius_fix = std::max(w.mobius_fix, o.mobius_fix);
        w.glue = std::max(w.glue, o.glue);
        w.canon = std::max(w.canon, o.canon);
        w.hyper = std::max(w.hyper, o.hyper);
    }
    rep.add("circle action preserves the embedded spheres", w.sphere <= cfg.tol, w.sphere);
    rep.add("circle action commutes with the fiber involution", w.comm_t <= cfg.tol,
            w.comm_t);
    rep.add("circle action commutes with the automorphism group", w.comm_g2 <= cfg.tol,
            w.comm_g2);
    rep.add("action agrees across the chart transition", w.chart <= cfg.tol, w.chart);
    rep.add("orbit map fixes the corner point (0, 1)", w.mobius_fix <= cfg.tol,
            w.mobius_fix);
    rep.add("orbit map intertwines with the chart gluing", w.glue <= cfg.tol, w.glue);
    const double canon_tol = std::max(cfg.tol, 1e-7);
    rep.add("orbit map matches the canonical coordinates of the action",
            w.canon <= canon_tol, w.canon);
    rep.add("orbit map is a hyperbolic isometry (finite differences)", w.hyper <= 1e-6,
            w.hyper);
    return rep;
}

// --- variety suite -----------------------------------------------------------

inline SuiteReport verify_brieskorn(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "brieskorn";
    rep.config = detail::config_entries(cfg);

    {
        double worst = 0;
        for (long d = 1; d <= 9; ++d) {
            const double t0 = t0_solve(d);
            double td = 1;
            for (long i = 0; i < d; ++i) td *= t0;
            worst = std::max(worst, std::abs(td + t0 * t0 - 1.0));
        }
        rep.add("profile equation roots for degrees 1..9", worst <= 1e-14, worst);
    }
    {
        const double e1 = std::abs(t0_solve(1) - 0.5 * (std::sqrt(5.0) - 1.0));
        const double e2 = std::abs(t0_solve(2) - 1.0 / std::sqrt(2.0));
        const double worst = std::max(e1, e2);
        rep.add("profile roots match the closed forms at degrees 1 and 2",
                worst <= 1e-15, worst);
    }
    {
        double worst = 0, limit = 0;
        for (long d = 1; d <= 9; ++d) {
            const double t0 = t0_solve(d);
            for (const VarietyPoint& p :
                 {p_minus(d), p_plus(d), p_regular(d, 0.5 * t0)}) {
                const auto er = equation_residuals(p);
                worst = std::max({worst, er.defining, er.sphere});
            }
            limit = std::max(limit, variety_distance(p_regular(d, t0), p_plus(d)));
        }
        rep.add("marked points satisfy both defining equations", worst <= 1e-13, worst);
        // The collapsing coordinate is a square root of the root residual, so
        // the distance at the endpoint carries half the working precision.
        rep.add("regular family limits to the far singular point", limit <= 1e-7, limit);
    }

    struct Out {
        double eq = 0, mod = 0, fix = 0, deck = 0, move = 1e9;
        bool families = true, rejected = true;
    };
    auto outs = detail::map_indexed<Out>(cfg.samples, cfg.jobs, [&](int i) {
        Out o;
        SampleRng rng(cfg.seed, std::uint64_t(i));
        const long d = 1 + (i % 9);
        const double t0 = t0_solve(d);
        const VarietyPoint p = p_regular(d, rng.uniform(0.02, 0.98) * t0);

        GroupElement<double> g;
        const double th = rng.uniform(0.0, 6.283185307179586);
        g.c_re = std::cos(th);
        g.c_im = std::sin(th);
        g.g = random_g2_element(rng);

        const VarietyPoint q = act(g, p);
        const auto er = equation_residuals(q);
        o.eq = std::max(er.defining, er.sphere);
        o.mod = std::abs(std::abs(q.z[0]) - std::abs(p.z[0]));

        o.deck = variety_distance(act(g, deck_involution(p)), deck_involution(q));
        o.deck = std::max(o.deck,
                          variety_distance(deck_involution(deck_involution(p)), p));
        o.move = variety_distance(deck_involution(p), p);

        // Pattern families at the configured parameter.
        const long dk = cfg.k;
        const double mtol = 1e-9;
        const auto hp = sample_principal_stabilizer(rng);
        const auto km = sample_codim2_stabilizer(rng, dk);
        const auto kp = sample_codim6_stabilizer(rng);
        o.families = principal_stabilizer_member(hp, mtol) &&
                     codim2_stabilizer_member(hp, dk, mtol) &&
                     codim6_stabilizer_member(hp, mtol) &&
                     codim2_stabilizer_member(km, dk, mtol) &&
                     !principal_stabilizer_member(km, mtol) &&
                     codim6_stabilizer_member(kp, mtol) &&
                     !principal_stabilizer_member(kp, mtol);

        const double tk = t0_solve(dk);
        const VarietyPoint pmk = p_minus(dk), ppk = p_plus(dk);
        const VarietyPoint prk = p_regular(dk, 0.5 * tk);
        o.fix = std::max({variety_distance(act(hp, prk), prk),
                          variety_distance(act(hp, pmk), pmk),
                          variety_distance(act(hp, ppk), ppk),
                          variety_distance(act(km, pmk), pmk),
                          variety_distance(act(kp, ppk), ppk)});

        GroupElement<double> r;
        const double rth = rng.uniform(0.1, 6.1);
        r.c_re = std::cos(rth);
        r.c_im = std::sin(rth);
        r.g = random_g2_element(rng);
        o.rejected = !principal_stabilizer_member(r, mtol) &&
                     !codim2_stabilizer_member(r, dk, mtol) &&
                     !codim6_stabilizer_member(r, mtol);
        return o;
    });

    Out w;
    w.move = 1e9;
    bool families = true, rejected = true;
    for (const auto& o : outs) {
        w.eq = std::max(w.eq, o.eq);
        w.mod = std::max(w.mod, o.mod);
        w.fix = std::max(w.fix, o.fix);
        w.deck = std::max(w.deck, o.deck);
        w.move = std::min(w.move, o.move);
        families = families && o.families;
        rejected = rejected && o.rejected;
    }
    rep.add("group action preserves the defining equations", w.eq <= cfg.tol, w.eq);
    rep.add("group action preserves the base modulus", w.mod <= cfg.tol, w.mod);
    rep.add("pattern families satisfy their membership predicates", families);
    rep.add("stabilizer samples fix their marked points", w.fix <= 1e-8, w.fix);
    rep.add("random group elements are rejected by every pattern", rejected);
    rep.add("deck involution squares to one and commutes with the action",
            w.deck <= cfg.tol, w.deck);
    rep.add("deck involution acts freely on sampled points", w.move > 1e-3, w.move);
    return rep;
}

// --- boundary smoothness suite -----------------------------------------------

inline SuiteReport verify_smoothness(const RunConfig& cfg) {
    SuiteReport rep;
    rep.suite = "smoothness";
    rep.config = detail::config_entries(cfg);

    {
        bool clean = true;
        std::string first;
        for (int i = 0; i < cfg.samples; ++i) {
            SampleRng rng(cfg.seed, std::uint64_t(i));
            const double beta = random_beta(rng);
            const auto b = reduced_boundary_data(beta, cfg.k, rng.uniform(0.5, 1.5),
                                                 rng.uniform(0.5, 1.5),
                                                 rng.uniform(0.5, 2.0));
            const auto v = smoothness_check(b);
            if (!v.empty()) {
                clean = false;
                if (first.empty()) first = v.front();
            }
        }
        rep.add("reduced family closes smoothly at both ends", clean, 0.0, first);
    }

    auto flags = [](const BoundaryData& b, const char* frag) {
        for (const auto& msg : smoothness_check(b))
            if (msg.find(frag) != std::string::npos) return true;
        return false;
    };
    const BoundaryData base = reduced_boundary_data(0.2, cfg.k);
    rep.add("clean profile reports zero violations", smoothness_check(base).empty());
    {
        auto b = base;
        b.f1.d0 *= 1.5;
        rep.add("closing rate of the circle direction is enforced",
                flags(b, "f1'(0) = 4/(k sqrt6)"));
    }
    {
        auto b = base;
        b.f2.d0 = 0.3;
        rep.add("even parity at the near end is enforced", flags(b, "f2'(0)"));
    }
    {
        auto b = base;
        b.f12.v0 = 0.1;
        rep.add("vanishing of the mixed coupling at the near end is enforced",
                flags(b, "f12(0)"));
    }
    {
        auto b = base;
        b.a12.v0 += 0.1;
        rep.add("near-end coupling identity is enforced",
                flags(b, "a12(0) = (sqrt3/2)(a1(0)^2 - a2(0)^2)"));
    }
    {
        auto b = base;
        b.h2.vL += 0.2;
        rep.add("far-end identification is enforced", flags(b, "h2(L) = a2(L)"));
    }
    {
        auto b = base;
        b.a1.vL = 0.1;
        rep.add("far-end collapse is enforced", flags(b, "a1(L)"));
    }
    {
        auto b = base;
        b.k = 2;
        rep.add("even parameters are rejected",
                flags(b, "k must be a positive odd integer"));
    }
    return rep;
}

// --- dispatch ----------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "octonion", "g2",    "brackets",  "weyl",
        "appendix", "davis", "brieskorn", "smoothness"};
    return names;
}

inline SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
    validate_config(cfg);
    if (suite == "octonion") return verify_octonion(cfg);
    if (suite == "g2") return verify_g2(cfg);
    if (suite == "brackets") return verify_brackets(cfg);
    if (suite == "weyl") return verify_weyl(cfg);
    if (suite == "appendix") return verify_appendix(cfg);
    if (suite == "davis") return verify_davis(cfg);
    if (suite == "brieskorn") return verify_brieskorn(cfg);
    if (suite == "smoothness") return verify_smoothness(cfg);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace g2cohom
