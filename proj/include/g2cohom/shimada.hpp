#pragma once

// Two-chart model of the sphere bundles Sigma^15_k: chart points (u, v) with
// u in O and v a unit octonion, the gluing map between the charts, the
// SO(2) x G2 action (Mobius transformations on the base, automorphisms
// diagonally), the embedded 14- and 13-spheres cut out by real-part
// conditions, the fiberwise antipodal involution, and the reduction of the
// G2-orbit space to a half-plane with its induced SO(2) action.

#include "g2cohom/g2.hpp"
#include "g2cohom/octonion.hpp"
#include "g2cohom/sampling.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace g2cohom {

enum class Chart { UV, UpVp };

struct ChartPoint {
    Chart chart = Chart::UV;
    Octonion<double> u;
    Octonion<double> v;
    long k = 1;
};

// The two gluing exponents: m + n = 1, m - n = k.
inline long chart_m(long k) {
    if (k % 2 == 0) throw std::domain_error("k must be odd");
    return (k + 1) / 2;
}
inline long chart_n(long k) { return (1 - k) / 2; }

inline Octonion<double> apply_automorphism(const Mat<double, 7, 7>& g,
                                           const Octonion<double>& x) {
    Octonion<double> out;
    out.c[0] = x.c[0];
    for (int r = 0; r < 7; ++r) {
        double s = 0;
        for (int c = 0; c < 7; ++c) s += g(r, c) * x.c[std::size_t(c) + 1];
        out.c[std::size_t(r) + 1] = s;
    }
    return out;
}

// --- chart transition --------------------------------------------------------

// (u, v) -> (u/|u|^2, (u/|u|)^m v (u/|u|)^n); from the primed chart the same
// map with exponents negated brings the point back.  Powers of u and v live in
// the subalgebra generated by two octonions, so the grouping is immaterial.
inline ChartPoint transition(const ChartPoint& p) {
    const double nsq = norm_sq(p.u);
    if (nsq <= 0.0) throw std::domain_error("not in overlap");
    const long m = chart_m(p.k), n = chart_n(p.k);
    const double sm = (p.chart == Chart::UV) ? 1.0 : -1.0;
    const Octonion<double> s = (1.0 / std::sqrt(nsq)) * p.u;
    ChartPoint q;
    q.chart = (p.chart == Chart::UV) ? Chart::UpVp : Chart::UV;
    q.k = p.k;
    q.u = (1.0 / nsq) * p.u;
    q.v = (unit_power(s, sm * double(m)) * p.v) * unit_power(s, sm * double(n));
    return q;
}

// --- the SO(2) x G2 action ---------------------------------------------------

struct So2Element {
    double a = 1.0;
    double b = 0.0;
};

inline So2Element so2_of_angle(double theta) {
    return {std::cos(theta), std::sin(theta)};
}

// One chart of the Mobius action; empty when the denominator degenerates and
// the caller has to pass through the gluing first.
inline std::optional<ChartPoint> davis_so2_chart(const So2Element& g,
                                                 const ChartPoint& p,
                                                 double eps = 1e-12) {
    const long m = chart_m(p.k), n = chart_n(p.k);
    ChartPoint q = p;
    if (p.chart == Chart::UV) {
        // u -> (au + b)(a - bu)^{-1},  v -> w^m v w^n / |w|,  w = a - bu
        Octonion<double> w = (-g.b) * p.u;
        w.c[0] += g.a;
        const double wn = norm_sq(w);
        if (wn < eps * eps) return std::nullopt;
        Octonion<double> num = g.a * p.u;
        num.c[0] += g.b;
        q.u = num * inverse(w);
        const Octonion<double> s = (1.0 / std::sqrt(wn)) * w;
        q.v = (unit_power(s, double(m)) * p.v) * unit_power(s, double(n));
    } else {
        // u' -> (-b + au')(a + bu')^{-1},  v' -> c^m v' c^n / |c|,  c = a + b conj(u')
        Octonion<double> den = g.b * p.u;
        den.c[0] += g.a;
        const double dn = norm_sq(den);
        if (dn < eps * eps) return std::nullopt;
        Octonion<double> num = g.a * p.u;
        num.c[0] += -g.b;
        q.u = num * inverse(den);
        const Octonion<double> c = conj(den);  // a + b conj(u'), same norm
        const Octonion<double> s = (1.0 / std::sqrt(dn)) * c;
        q.v = (unit_power(s, double(m)) * p.v) * unit_power(s, double(n));
    }
    return q;
}

// Full action: act in the point's chart, falling through the gluing when the
// Mobius denominator vanishes there.  (At a chart pole with a = 0 the image
// is the opposite pole, which no single chart formula reaches.)
inline ChartPoint davis_so2(const So2Element& g, const ChartPoint& p) {
    if (auto q = davis_so2_chart(g, p)) return *q;
    const ChartPoint flipped = transition(p);  // throws "not in overlap" at a pole
    if (auto q = davis_so2_chart(g, flipped)) return *q;
    throw std::logic_error("Mobius denominator vanished in both charts");
}

inline ChartPoint davis_g2(const Mat<double, 7, 7>& g, const ChartPoint& p,
                           double tol = 1e-10) {
    if (!is_automorphism(g, tol)) throw std::domain_error("not an automorphism");
    ChartPoint q = p;
    q.u = apply_automorphism(g, p.u);
    q.v = apply_automorphism(g, p.v);
    return q;
}

inline ChartPoint involution_T(const ChartPoint& p) {
    ChartPoint q = p;
    q.v = -1.0 * p.v;
    return q;
}

// --- embedded spheres --------------------------------------------------------

enum class Stratum { Sigma15, S14, S13 };

struct MembershipResiduals {
    double f1 = 0;  // height function, vanishes on the 14-sphere
    double f2 = 0;  // second height, vanishes additionally on the 13-sphere
    double re_v = 0;
    double re_uv = 0;
    double re_vp = 0;
    double re_up_vp_inv = 0;
    bool overlap = false;  // other-chart residuals available
};

inline MembershipResiduals membership_residuals(const ChartPoint& p) {
    MembershipResiduals r;
    auto local = [](const ChartPoint& q, MembershipResiduals& out) {
        if (q.chart == Chart::UV) {
            out.re_v = re(q.v);
            out.re_uv = re(q.u * q.v);
            const double s = std::sqrt(1.0 + norm_sq(q.u));
            out.f1 = out.re_v / s;
            out.f2 = out.re_uv / s;
        } else {
            const Octonion<double> uvinv = q.u * inverse(q.v);
            out.re_vp = re(q.v);
            out.re_up_vp_inv = re(uvinv);
            out.f1 = out.re_up_vp_inv / std::sqrt(1.0 + norm_sq(uvinv));
            out.f2 = out.re_vp / std::sqrt(1.0 + norm_sq(q.u));
        }
    };
    local(p, r);
    if (norm_sq(p.u) > 0.0) {
        r.overlap = true;
        MembershipResiduals other;
        local(transition(p), other);
        if (p.chart == Chart::UV) {
            r.re_vp = other.re_vp;
            r.re_up_vp_inv = other.re_up_vp_inv;
        } else {
            r.re_v = other.re_v;
            r.re_uv = other.re_uv;
        }
    }
    return r;
}

inline Stratum membership(const ChartPoint& p, double tol = 1e-10) {
    const MembershipResiduals r = membership_residuals(p);
    const bool s14 = std::abs(r.re_v) <= tol &&
                     (!r.overlap || std::abs(r.re_up_vp_inv) <= tol);
    const bool s13 = s14 && std::abs(r.re_uv) <= tol &&
                     (!r.overlap || std::abs(r.re_vp) <= tol);
    if (s13) return Stratum::S13;
    if (s14) return Stratum::S14;
    return Stratum::Sigma15;
}

// --- canonical orbit representatives -----------------------------------------

// Deterministic unit imaginary octonion orthogonal to the imaginary parts of
// the given octonions: Gram-Schmidt over the candidate basis directions.
inline Octonion<double> orthogonal_unit_imaginary(
    const std::vector<Octonion<double>>& span) {
    Octonion<double> best;
    double best_norm = -1.0;
    for (int i = 1; i <= 7; ++i) {
        Octonion<double> cand = Octonion<double>::unit(i);
        for (const auto& s : span) {
            const double ss = norm_sq(s) - re(s) * re(s);
            if (ss <= 0.0) continue;
            double dot = 0;
            for (int j = 1; j < 8; ++j)
                dot += cand.c[std::size_t(j)] * s.c[std::size_t(j)];
            cand = cand - (dot / ss) * (s - Octonion<double>::real(re(s)));
        }
        cand.c[0] = 0.0;
        const double n = norm_sq(cand);
        if (n > best_norm) {
            best_norm = n;
            best = cand;
        }
    }
    if (best_norm <= 1e-20) throw std::domain_error("no orthogonal direction");
    return (1.0 / std::sqrt(best_norm)) * best;
}

// The automorphism sending the standard basic triple (e1, e2, e4) to
// (v, w, z): columns are the images of e1..e7 read off the multiplication
// table, e3 -> vw, e5 -> vz, e6 -> wz, e7 -> (vw)z.
inline Mat<double, 7, 7> basic_triple_automorphism(const Octonion<double>& v,
                                                   const Octonion<double>& w,
                                                   const Octonion<double>& z) {
    const Octonion<double> vw = v * w;
    const std::array<Octonion<double>, 7> cols = {v,     w,      vw, z,
                                                  v * z, w * z,  vw * z};
    Mat<double, 7, 7> g;
    for (int c = 0; c < 7; ++c)
        for (int r = 0; r < 7; ++r)
            g(r, c) = cols[std::size_t(c)].c[std::size_t(r) + 1];
    return g;
}

struct CanonicalRep {
    double x1 = 0;
    double x2 = 0;  // >= 0
    ChartPoint rep;
    Mat<double, 7, 7> g;  // davis_g2(g, p) lands on rep
    double residual = 0;  // largest deviation of g.p from rep
};

// Orbit-space coordinates of a 13-sphere point: move v to e1 with the inverse
// of a basic-triple automorphism, then rotate the imaginary part of u onto e3
// inside the stabilizer of e1.
inline CanonicalRep canonical_rep(const ChartPoint& p) {
    const Octonion<double> vim = p.v - Octonion<double>::real(re(p.v));
    const double vn = std::sqrt(norm_sq(vim));
    if (vn <= 1e-14) throw std::domain_error("fiber point has no direction");
    const Octonion<double> vhat = (1.0 / vn) * vim;

    const Octonion<double> w = orthogonal_unit_imaginary({vhat});
    const Octonion<double> z = orthogonal_unit_imaginary({vhat, w, vhat * w});
    const Mat<double, 7, 7> sigma1 = transpose(basic_triple_automorphism(vhat, w, z));

    CanonicalRep out;
    out.x1 = re(p.u);
    Octonion<double> n = apply_automorphism(sigma1, p.u);
    n.c[0] = 0.0;
    out.x2 = std::sqrt(norm_sq(n));

    if (out.x2 > 1e-14) {
        const Octonion<double> e1 = Octonion<double>::unit(1);
        const Octonion<double> nhat = (1.0 / out.x2) * n;
        const Octonion<double> w2 = -1.0 * (e1 * nhat);
        const Octonion<double> z2 = orthogonal_unit_imaginary({e1, w2, e1 * w2});
        const Mat<double, 7, 7> sigma2 =
            transpose(basic_triple_automorphism(e1, w2, z2));
        out.g = sigma2 * sigma1;
    } else {
        out.x2 = 0.0;
        out.g = sigma1;
    }

    out.rep.chart = p.chart;
    out.rep.k = p.k;
    out.rep.u = Octonion<double>::real(out.x1) + out.x2 * Octonion<double>::unit(3);
    out.rep.v = Octonion<double>::unit(1);

    const Octonion<double> gu = apply_automorphism(out.g, p.u);
    const Octonion<double> gv = apply_automorphism(out.g, p.v);
    out.residual = std::sqrt(std::max(norm_sq(gu - out.rep.u), norm_sq(gv - out.rep.v)));
    return out;
}

// --- the SO(2) action on the orbit half-plane --------------------------------

struct OrbitPoint {
    Chart chart = Chart::UV;
    std::array<double, 2> x{};  // (x1, x2), x2 >= 0
};

// Gluing between the two half-plane charts: x -> x / |x|^2.
inline std::array<double, 2> orbit_gluing(const std::array<double, 2>& x) {
    const double n = x[0] * x[0] + x[1] * x[1];
    if (n <= 0.0) throw std::domain_error("not in overlap");
    return {x[0] / n, x[1] / n};
}

// The induced Mobius action on one half-plane chart; empty when the image
// leaves the chart through infinity.
inline std::optional<std::array<double, 2>> mobius_orbit_chart(
    const So2Element& g, const std::array<double, 2>& x, Chart chart,
    double eps = 1e-12) {
    if (g.b == 0.0) return x;  // sgn(a) only flips the fiber, not the base
    const double sgn = (chart == Chart::UV) ? -1.0 : 1.0;
    // chart UV:  w = a - b x1;  chart UpVp:  w = a + b x1
    const double w = g.a + sgn * g.b * x[0];
    const double D = w * w + g.b * g.b * x[1] * x[1];
    if (D < eps) return std::nullopt;
    const double y1 = sgn * g.a / g.b - sgn * w / (g.b * D);
    return std::array<double, 2>{y1, x[1] / D};
}

// Full orbit-space action with automatic passage through the gluing; the
// origin with a = 0 maps to the opposite chart's origin.
inline OrbitPoint mobius_orbit(const So2Element& g, const OrbitPoint& p) {
    if (auto y = mobius_orbit_chart(g, p.x, p.chart)) return {p.chart, *y};
    OrbitPoint q;
    q.chart = (p.chart == Chart::UV) ? Chart::UpVp : Chart::UV;
    if (p.x[0] == 0.0 && p.x[1] == 0.0) {
        q.x = {0.0, 0.0};
        return q;
    }
    if (auto y = mobius_orbit_chart(g, orbit_gluing(p.x), q.chart)) {
        q.x = *y;
        return q;
    }
    throw std::logic_error("orbit Mobius denominator vanished in both charts");
}

// Deviation of the pullback of ds^2 = (dx1^2 + dx2^2)/x2^2 under the chart
// action from ds^2 itself, by central finite differences.  Returns the largest
// componentwise error; the caller keeps x away from the chart boundary.
inline double hyperbolic_pullback_deviation(const So2Element& g,
                                            const std::array<double, 2>& x,
                                            Chart chart, double h = 1e-6) {
    auto f = [&](const std::array<double, 2>& y) {
        auto img = mobius_orbit_chart(g, y, chart);
        if (!img) throw std::domain_error("image leaves the chart");
        return *img;
    };
    std::array<std::array<double, 2>, 2> J{};
    for (int j = 0; j < 2; ++j) {
        auto xp = x, xm = x;
        xp[std::size_t(j)] += h;
        xm[std::size_t(j)] -= h;
        const auto fp = f(xp), fm = f(xm);
        for (int i = 0; i < 2; ++i)
            J[std::size_t(i)][std::size_t(j)] =
                (fp[std::size_t(i)] - fm[std::size_t(i)]) / (2.0 * h);
    }
    const auto y = f(x);
    const double wy = 1.0 / (y[1] * y[1]);
    const double wx = 1.0 / (x[1] * x[1]);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double gij = 0.0;
            for (int l = 0; l < 2; ++l)
                gij += J[std::size_t(l)][std::size_t(i)] * J[std::size_t(l)][std::size_t(j)];
            gij *= wy;
            const double target = (i == j) ? wx : 0.0;
            worst = std::max(worst, std::abs(gij - target));
        }
    return worst;
}

// --- sampling ----------------------------------------------------------------

inline Octonion<double> random_unit_imaginary(SampleRng& rng) {
    Octonion<double> v;
    double n = 0;
    do {
        for (int i = 1; i < 8; ++i) v.c[std::size_t(i)] = rng.uniform(-1.0, 1.0);
        v.c[0] = 0.0;
        n = norm_sq(v);
    } while (n < 1e-4);
    return (1.0 / std::sqrt(n)) * v;
}

// Random point of the embedded 13-sphere in the given chart: unit imaginary
// fiber direction and a base octonion whose imaginary part is orthogonal to it.
inline ChartPoint random_s13_point(SampleRng& rng, Chart chart, long k,
                                   double min_base_norm = 0.0) {
    ChartPoint p;
    p.chart = chart;
    p.k = k;
    p.v = random_unit_imaginary(rng);
    do {
        Octonion<double> u1;
        for (int i = 1; i < 8; ++i) u1.c[std::size_t(i)] = rng.uniform(-1.0, 1.0);
        u1.c[0] = 0.0;
        double dot = 0;
        for (int i = 1; i < 8; ++i)
            dot += u1.c[std::size_t(i)] * p.v.c[std::size_t(i)];
        u1 = u1 - dot * p.v;
        p.u = Octonion<double>::real(rng.uniform(-1.5, 1.5)) + u1;
    } while (norm_sq(p.u) < min_base_norm * min_base_norm);
    return p;
}

}  // namespace g2cohom
