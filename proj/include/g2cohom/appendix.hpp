#pragma once

// Closed forms for the curvature components that have printed expressions:
// the three t=0 vertical-plane values as functions of beta, the mixed-plane
// combination in (xi, xi'), and the ten monomial tables R1..R10. The engine
// of metric.hpp is compared against these; the tables double as the input to
// the coefficient-extraction identities in obstruction.hpp.

#include "g2cohom/detail/curvature_tables.hpp"
#include "g2cohom/metric.hpp"
#include "g2cohom/sampling.hpp"
#include "g2cohom/scalar.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace g2cohom {

enum class ClosedFormId {
    A1_YE,
    A1_YF,
    A1_YEF,
    A2_XY,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
};

inline constexpr std::array<ClosedFormId, 14> kAllClosedForms{
    ClosedFormId::A1_YE, ClosedFormId::A1_YF, ClosedFormId::A1_YEF,
    ClosedFormId::A2_XY, ClosedFormId::R1,    ClosedFormId::R2,
    ClosedFormId::R3,    ClosedFormId::R4,    ClosedFormId::R5,
    ClosedFormId::R6,    ClosedFormId::R7,    ClosedFormId::R8,
    ClosedFormId::R9,    ClosedFormId::R10,
};

inline const char* closed_form_name(ClosedFormId id) {
    switch (id) {
        case ClosedFormId::A1_YE: return "A1_YE";
        case ClosedFormId::A1_YF: return "A1_YF";
        case ClosedFormId::A1_YEF: return "A1_YEF";
        case ClosedFormId::A2_XY: return "A2_XY";
        case ClosedFormId::R1: return "R1";
        case ClosedFormId::R2: return "R2";
        case ClosedFormId::R3: return "R3";
        case ClosedFormId::R4: return "R4";
        case ClosedFormId::R5: return "R5";
        case ClosedFormId::R6: return "R6";
        case ClosedFormId::R7: return "R7";
        case ClosedFormId::R8: return "R8";
        case ClosedFormId::R9: return "R9";
        case ClosedFormId::R10: return "R10";
    }
    return "?";
}

// --- runtime monomial tables ------------------------------------------------

struct TableRow {
    std::array<int, detail::kNumTableVars> e{};
    Rat q{0};
    int apow = 0;
    int gpow = 0;
};

struct CurvatureTable {
    std::vector<TableRow> rows;
    detail::RowScale scale = detail::RowScale::kPlain;
};

struct CurvatureTableSet {
    std::array<CurvatureTable, 10> tables;

    static CurvatureTableSet builtin() {
        CurvatureTableSet ts;
        for (int t = 0; t < 10; ++t) {
            const auto& src = detail::kCurvatureTables[t];
            CurvatureTable ct;
            ct.scale = src.scale;
            ct.rows.reserve(src.size);
            for (std::size_t r = 0; r < src.size; ++r) {
                const auto& row = src.rows[r];
                TableRow out;
                for (int i = 0; i < detail::kNumTableVars; ++i) out.e[std::size_t(i)] = row.e[i];
                out.q = rat(row.num, row.den);
                out.apow = row.apow;
                out.gpow = row.gpow;
                ct.rows.push_back(std::move(out));
            }
            ts.tables[std::size_t(t)] = std::move(ct);
        }
        return ts;
    }

    std::string serialize() const;
    static CurvatureTableSet parse(const std::string& text);
};

inline const char* scale_name(detail::RowScale s) {
    switch (s) {
        case detail::RowScale::kPlain: return "plain";
        case detail::RowScale::kSqrt3: return "sqrt3";
        case detail::RowScale::kAlphaMinusXi: return "alpha_minus_xi";
    }
    return "?";
}

inline std::string CurvatureTableSet::serialize() const {
    std::ostringstream os;
    os << "# Monomial tables for the ten mixed-plane curvature components.\n";
    os << "# Row format: 7 exponents (xi f1_sq f2_sq f12 D1 D2 D3), coefficient,\n";
    os << "# alpha power, gam power. The scale tag says what the polynomial equals:\n";
    os << "# plain = R, sqrt3 = sqrt(3)*R, alpha_minus_xi = (alpha-xi)*R.\n";
    for (int t = 0; t < 10; ++t) {
        const auto& ct = tables[std::size_t(t)];
        os << "table R" << (t + 1) << " " << scale_name(ct.scale) << "\n";
        for (const auto& row : ct.rows) {
            for (int i = 0; i < detail::kNumTableVars; ++i) os << row.e[std::size_t(i)] << " ";
            os << row.q.get_str() << " " << row.apow << " " << row.gpow << "\n";
        }
    }
    return os.str();
}

inline CurvatureTableSet CurvatureTableSet::parse(const std::string& text) {
    CurvatureTableSet ts;
    std::istringstream is(text);
    std::string line;
    int current = -1;
    std::array<bool, 10> seen{};
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "table") {
            std::string name, scale;
            if (!(ls >> name >> scale) || name.size() < 2 || name[0] != 'R')
                throw std::runtime_error("table header malformed at line " +
                                         std::to_string(lineno));
            const int idx = std::stoi(name.substr(1)) - 1;
            if (idx < 0 || idx >= 10)
                throw std::runtime_error("table name out of range at line " +
                                         std::to_string(lineno));
            current = idx;
            seen[std::size_t(idx)] = true;
            auto& ct = ts.tables[std::size_t(idx)];
            ct.rows.clear();
            if (scale == "plain") ct.scale = detail::RowScale::kPlain;
            else if (scale == "sqrt3") ct.scale = detail::RowScale::kSqrt3;
            else if (scale == "alpha_minus_xi") ct.scale = detail::RowScale::kAlphaMinusXi;
            else
                throw std::runtime_error("unknown scale at line " + std::to_string(lineno));
            continue;
        }
        if (current < 0)
            throw std::runtime_error("row before table header at line " +
                                     std::to_string(lineno));
        TableRow row;
        std::istringstream rs(line);
        for (int i = 0; i < detail::kNumTableVars; ++i) {
            if (!(rs >> row.e[std::size_t(i)]))
                throw std::runtime_error("bad exponent at line " + std::to_string(lineno));
        }
        std::string coeff;
        if (!(rs >> coeff >> row.apow >> row.gpow))
            throw std::runtime_error("bad row tail at line " + std::to_string(lineno));
        row.q = Rat(coeff);
        row.q.canonicalize();
        ts.tables[std::size_t(current)].rows.push_back(std::move(row));
    }
    for (int t = 0; t < 10; ++t)
        if (!seen[std::size_t(t)])
            throw std::runtime_error(std::string("missing table R") + std::to_string(t + 1));
    return ts;
}

// Human-readable rendering of one monomial, used by failure reports.
inline std::string describe_row(const TableRow& row) {
    static const char* const var_names[detail::kNumTableVars] = {
        "xi", "f1_sq", "f2_sq", "f12", "D1", "D2", "D3"};
    std::string s = row.q.get_str();
    if (row.apow != 0) s += " alpha^" + std::to_string(row.apow);
    if (row.gpow != 0) s += " gam^" + std::to_string(row.gpow);
    for (int i = 0; i < detail::kNumTableVars; ++i) {
        if (row.e[std::size_t(i)] == 0) continue;
        s += std::string(" ") + var_names[i];
        if (row.e[std::size_t(i)] != 1) s += "^" + std::to_string(row.e[std::size_t(i)]);
    }
    return s;
}

// --- evaluation -------------------------------------------------------------

template <class S>
S rat_to_scalar(const Rat& q) {
    return scalar_traits<S>::from_ratio(q.get_num().get_si(), q.get_den().get_si());
}

template <class S>
S eval_table(const CurvatureTable& ct, const S& alpha, const S& gam,
             const std::array<S, detail::kNumTableVars>& vars) {
    S acc = scalar_traits<S>::zero();
    for (const auto& row : ct.rows) {
        S term = rat_to_scalar<S>(row.q);
        if (row.apow != 0) term = S(term * scalar_pow(alpha, row.apow));
        for (int g = 0; g < row.gpow; ++g) term = S(term * gam);
        for (int i = 0; i < detail::kNumTableVars; ++i) {
            const int e = row.e[std::size_t(i)];
            if (e != 0) term = S(term * scalar_pow(vars[std::size_t(i)], e));
        }
        acc = S(acc + term);
    }
    switch (ct.scale) {
        case detail::RowScale::kPlain:
            return acc;
        case detail::RowScale::kSqrt3:
            return S(acc * inverse(scalar_traits<S>::sqrt3()));
        case detail::RowScale::kAlphaMinusXi:
            return S(acc * inverse(S(alpha - vars[0])));
    }
    return acc;
}

template <class S>
std::array<S, detail::kNumTableVars> table_vars(const ReducedProfile<S>& p) {
    const S half = scalar_traits<S>::from_ratio(1, 2);
    return {p.xi.v,
            p.f1sq.v,
            p.f2sq.v,
            p.f12.v,
            S(half * p.f1sq.d * p.xi.d),
            S(half * p.f2sq.d * p.xi.d),
            S(p.f12.d * p.xi.d)};
}

// The three t=0 closed forms as functions of beta alone.
template <class S>
std::array<S, 3> vertical_plane_closed(const S& beta) {
    const S s3 = scalar_traits<S>::sqrt3();
    const S b = beta;
    const S b2 = S(b * b), b3 = S(b2 * b), b4 = S(b2 * b2), b5 = S(b4 * b);
    const S root = S(s3 * b2 - scalar_traits<S>::from_long(2) * b - s3);
    const S d = S(root * root);
    if (is_zero(d)) throw std::domain_error("denominator nonpositive");
    auto lin = [](long c) { return scalar_traits<S>::from_long(c); };
    const S ye_num = S(lin(6) * s3 * b5 + lin(9) * b4 - lin(32) * s3 * b3 +
                       lin(10) * b2 + lin(18) * s3 * b + lin(9));
    const S yf_num = S(lin(27) * b4 + lin(12) * s3 * b3 + lin(22) * b2 +
                       lin(4) * s3 * b + lin(3));
    const S yef_num = S(-b * S(lin(9) * b4 + lin(12) * s3 * b3 - lin(54) * b2 +
                               lin(20) * s3 * b + lin(57)));
    const S inv4d = inverse(S(lin(4) * d));
    const S inv12d = inverse(S(lin(12) * d));
    return {S(ye_num * inv4d), S(yf_num * inv12d), S(yef_num * inv12d)};
}

// The mixed-plane value in terms of xi, xi' and the f-sector:
// (2/alpha^2) F xi^2 - (3/(4 alpha^2)) xi'^2 with F the f-ratio.
template <class S>
S mixed_plane_closed(const S& alpha, const Jet<S>& xi, const S& f1sq, const S& f2sq,
                     const S& f12) {
    const S det = S(f1sq * f2sq - f12 * f12);
    if (sign_of(det) <= 0) throw std::domain_error("inadmissible metric");
    const S ratio = S(S(f1sq + f2sq + scalar_traits<S>::from_long(2) * f12) * inverse(det));
    const S inv_a2 = inverse(S(alpha * alpha));
    return S(scalar_traits<S>::from_long(2) * inv_a2 * ratio * xi.v * xi.v -
             scalar_traits<S>::from_ratio(3, 4) * inv_a2 * xi.d * xi.d);
}

template <class S>
S closed_form(const CurvatureTableSet& ts, ClosedFormId id, const ReducedProfile<S>& p) {
    switch (id) {
        case ClosedFormId::A1_YE: return vertical_plane_closed(p.beta)[0];
        case ClosedFormId::A1_YF: return vertical_plane_closed(p.beta)[1];
        case ClosedFormId::A1_YEF: return vertical_plane_closed(p.beta)[2];
        case ClosedFormId::A2_XY:
            return mixed_plane_closed(p.alpha, p.xi, p.f1sq.v, p.f2sq.v, p.f12.v);
        default: {
            const int idx = int(id) - int(ClosedFormId::R1);
            return eval_table(ts.tables[std::size_t(idx)], p.alpha, p.gam, table_vars(p));
        }
    }
}

// Engine-side evaluation of the same quantity, from the eight-term formula
// (and polarization for the four-argument components).
template <class S>
S engine_value(ClosedFormId id, const ReducedProfile<S>& p) {
    const auto ops = metric_operators(p.lift());
    const auto x1 = basis_vector<S>(0), x2 = basis_vector<S>(1);
    const auto y1 = basis_vector<S>(2);
    const auto e1 = basis_vector<S>(4), e4 = basis_vector<S>(7);
    const auto f1 = basis_vector<S>(8), f4 = basis_vector<S>(11);
    const S s3 = scalar_traits<S>::sqrt3();
    switch (id) {
        case ClosedFormId::A1_YE: return curvature_special(ops, y1, e1, e1);
        case ClosedFormId::A1_YF: return curvature_special(ops, y1, f1, f1);
        case ClosedFormId::A1_YEF: return curvature_special(ops, y1, e1, f1);
        case ClosedFormId::A2_XY: {
            const Coeffs<S> x = Coeffs<S>(e1 - s3 * f1);
            const Coeffs<S> y = Coeffs<S>(s3 * e4 + f4);
            return curvature_special(ops, x, y, y);
        }
        case ClosedFormId::R1: return curvature_special(ops, x1, e1, e1);
        case ClosedFormId::R2: return curvature_special(ops, x1, e1, f1);
        case ClosedFormId::R3: return curvature_special(ops, x1, f1, f1);
        case ClosedFormId::R4: return curvature_special(ops, x2, e1, e1);
        case ClosedFormId::R5: return curvature_special(ops, x2, e1, f1);
        case ClosedFormId::R6: return curvature_special(ops, x2, f1, f1);
        case ClosedFormId::R7: return curvature_full(ops, x1, e1, e1, x2);
        case ClosedFormId::R8: return curvature_full(ops, x1, f1, e1, x2);
        case ClosedFormId::R9: return curvature_full(ops, x1, e1, f1, x2);
        case ClosedFormId::R10: return curvature_full(ops, x1, f1, f1, x2);
    }
    throw std::logic_error("unknown closed form id");
}

// --- comparison harness -----------------------------------------------------

struct FailureRecord {
    int sample = 0;
    double relative_error = 0.0;
    std::string detail;
};

struct ComparisonReport {
    ClosedFormId id{};
    int samples = 0;
    std::string mode;
    double max_rel_err = 0.0;
    std::vector<FailureRecord> failures;

    bool pass() const { return failures.empty(); }
};

namespace detail {

// When a loaded table disagrees with the engine, diff it against the
// certified builtin rows so the report can name the offending monomial.
inline std::string diff_against_builtin(const CurvatureTableSet& ts, int table_idx) {
    const auto ref = CurvatureTableSet::builtin();
    const auto& got = ts.tables[std::size_t(table_idx)].rows;
    const auto& want = ref.tables[std::size_t(table_idx)].rows;
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : got) {
            if (g.e == w.e && g.apow == w.apow && g.gpow == w.gpow && g.q == w.q) {
                found = true;
                break;
            }
        }
        if (!found) return "monomial " + describe_row(w) + " missing or altered";
    }
    for (const auto& g : got) {
        bool found = false;
        for (const auto& w : want) {
            if (g.e == w.e && g.apow == w.apow && g.gpow == w.gpow && g.q == w.q) {
                found = true;
                break;
            }
        }
        if (!found) return "unexpected monomial " + describe_row(g);
    }
    return "rows match certified data; engine disagreement is elsewhere";
}

}  // namespace detail

// Exact-mode anchors: (alpha, gam, beta) triples with every quantity in
// Q(sqrt3). The table branch has beta = (alpha-gam)/(sqrt3 alpha).
template <class S>
std::array<std::pair<S, std::pair<S, S>>, 2> exact_anchor_points() {
    const S one = scalar_traits<S>::one();
    const S zero = scalar_traits<S>::zero();
    const S s3 = scalar_traits<S>::sqrt3();
    // alpha = 1: gam = 1, beta = 0; alpha = 3/4: gam = 0, beta = 1/sqrt3.
    return {{{one, {one, zero}},
             {scalar_traits<S>::from_ratio(3, 4), {zero, inverse(s3)}}}};
}

template <class S>
ReducedProfile<S> exact_probe_profile(const S& alpha, const S& gam, const S& beta,
                                      int variant) {
    ReducedProfile<S> p;
    p.alpha = alpha;
    p.gam = gam;
    p.beta = beta;
    auto q = [](long n, long d) { return scalar_traits<S>::from_ratio(n, d); };
    if (variant == 0) {
        p.xi = {q(1, 4), q(1, 3)};
        p.f1sq = {q(1, 1), q(1, 5)};
        p.f2sq = {q(3, 2), q(-1, 4)};
        p.f12 = {q(1, 8), q(1, 7)};
    } else {
        p.xi = {q(1, 8), q(-2, 5)};
        p.f1sq = {q(4, 5), q(-1, 3)};
        p.f2sq = {q(2, 3), q(1, 2)};
        p.f12 = {q(-1, 6), q(2, 9)};
    }
    p.h1sq = {q(1, 2), scalar_traits<S>::zero()};
    return p;
}

inline ComparisonReport compare_closed_form(const CurvatureTableSet& ts, ClosedFormId id,
                                            int samples, const std::string& mode,
                                            std::uint64_t seed, double tol = 1e-9) {
    ComparisonReport rep;
    rep.id = id;
    rep.mode = mode;
    const bool is_a1 = id == ClosedFormId::A1_YE || id == ClosedFormId::A1_YF ||
                       id == ClosedFormId::A1_YEF;

    if (mode == "exact") {
        using SX = R23;
        const auto anchors = exact_anchor_points<SX>();
        int sample = 0;
        if (is_a1) {
            // Closed forms in beta alone; probe the two exactly representable
            // betas 0 and 2/sqrt3 (both give alpha = 1, gam = 1).
            const SX one = scalar_traits<SX>::one();
            const SX zero = scalar_traits<SX>::zero();
            const std::array<SX, 2> betas{
                zero, SX(scalar_traits<SX>::from_long(2) * inverse(scalar_traits<SX>::sqrt3()))};
            for (const auto& b : betas) {
                for (int variant = 0; variant < 2; ++variant) {
                    auto p = exact_probe_profile<SX>(one, one, b, variant);
                    p.xi = {zero, zero};  // t = 0 plane
                    p.h1sq = {one, zero};  // h-sector normalization at t = 0
                    const SX eng = engine_value(id, p);
                    const SX cls = closed_form(ts, id, p);
                    ++sample;
                    if (!is_zero(SX(eng - cls))) {
                        rep.failures.push_back(
                            {sample, to_double(SX(eng - cls)), "exact mismatch"});
                    }
                }
            }
        } else {
            for (const auto& [alpha, gb] : anchors) {
                for (int variant = 0; variant < 2; ++variant) {
                    auto p = exact_probe_profile<SX>(alpha, gb.first, gb.second, variant);
                    const SX eng = engine_value(id, p);
                    const SX cls = closed_form(ts, id, p);
                    ++sample;
                    if (!is_zero(SX(eng - cls))) {
                        std::string detail = "exact mismatch at alpha=" +
                                             std::to_string(to_double(alpha));
                        if (int(id) >= int(ClosedFormId::R1)) {
                            detail += "; " + detail::diff_against_builtin(
                                                 ts, int(id) - int(ClosedFormId::R1));
                        }
                        rep.failures.push_back({sample, to_double(SX(eng - cls)), detail});
                    }
                }
            }
        }
        rep.samples = sample;
        return rep;
    }

    rep.samples = samples;
    const bool is_table = int(id) >= int(ClosedFormId::R1);
    for (int i = 0; i < samples; ++i) {
        SampleRng rng(seed, std::uint64_t(i));
        double beta;
        if (is_table) {
            // Table branch: draw alpha in the window where gam is real and
            // use the matching beta = (alpha - gam)/(sqrt3 alpha).
            const double alpha = rng.uniform(0.76, 1.18);
            const double gam = std::sqrt(alpha * (4.0 * alpha - 3.0));
            beta = (alpha - gam) / (std::sqrt(3.0) * alpha);
        } else {
            beta = random_beta(rng);
        }
        ReducedProfile<double> p = random_reduced_profile(rng, beta);
        if (is_a1) {
            p.xi = {0.0, 0.0};     // t = 0 plane
            p.h1sq = {1.0, 0.0};   // h-sector normalization at t = 0
        }
        const double eng = engine_value(id, p);
        const double cls = closed_form(ts, id, p);
        const double rel = std::fabs(eng - cls) / std::max(1.0, std::fabs(cls));
        rep.max_rel_err = std::max(rep.max_rel_err, rel);
        if (rel > tol) {
            std::string detail = "engine " + std::to_string(eng) + " vs closed " +
                                 std::to_string(cls);
            if (is_table) {
                detail += "; " +
                          detail::diff_against_builtin(ts, int(id) - int(ClosedFormId::R1));
            }
            rep.failures.push_back({i, rel, detail});
        }
    }
    return rep;
}

}  // namespace g2cohom
