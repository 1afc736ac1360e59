#pragma once

// Invariant metrics as symmetric endomorphism families P(t) on the twelve
// geometric directions, and the eight-term sectional-curvature formula the
// closed-form tables instantiate. Basis order everywhere:
// (X1, X2, Y1, Y2, E1..E4, F1..F4).

#include "g2cohom/g2.hpp"
#include "g2cohom/linalg.hpp"
#include "g2cohom/scalar.hpp"

#include <array>
#include <utility>

namespace g2cohom {

template <class S>
using Mat12 = Mat<S, 12, 12>;

template <class S>
struct Jet {
    S v{};
    S d{};
};

// Values and first derivatives of the ten metric functions at one parameter
// value, plus the bundle parameter k. Couplings outside the listed blocks
// vanish identically.
template <class S>
struct MetricProfile {
    S t{};
    long k = 1;
    Jet<S> f1sq, f2sq, f12;
    Jet<S> h1sq, h2sq, h12;
    Jet<S> a1sq, a2sq, a12, b12;
};

// One-parameter reduced family: the h-sector is frozen (h2 = 1, h12 = 0,
// b12 = 0) and the (E|F) sector is governed by beta and xi = alpha - a1^2.
template <class S>
struct ReducedProfile {
    S beta{};
    S alpha{};
    S gam{};  // gam^2 = alpha (4 alpha - 3)
    Jet<S> xi;
    Jet<S> f1sq, f2sq, f12;
    Jet<S> h1sq;
    long k = 1;

    MetricProfile<S> lift() const {
        MetricProfile<S> m;
        m.k = k;
        const S a1sq = S(alpha - xi.v);
        m.f1sq = f1sq;
        m.f2sq = f2sq;
        m.f12 = f12;
        m.h1sq = h1sq;
        m.h2sq = {scalar_traits<S>::one(), scalar_traits<S>::zero()};
        m.a1sq = {a1sq, S(-xi.d)};
        m.a2sq = {S(beta * beta * a1sq + scalar_traits<S>::one()),
                  S(-(beta * beta) * xi.d)};
        m.a12 = {S(-beta * a1sq), S(beta * xi.d)};
        return m;
    }
};

template <class S>
ReducedProfile<S> make_reduced_profile(const S& beta, const S& alpha, const S& gam,
                                       Jet<S> xi, Jet<S> f1sq, Jet<S> f2sq,
                                       Jet<S> f12, Jet<S> h1sq, long k = 1) {
    ReducedProfile<S> p;
    p.beta = beta;
    p.alpha = alpha;
    p.gam = gam;
    p.xi = std::move(xi);
    p.f1sq = std::move(f1sq);
    p.f2sq = std::move(f2sq);
    p.f12 = std::move(f12);
    p.h1sq = std::move(h1sq);
    p.k = k;
    return p;
}

namespace detail {

// Signed pattern of the antisymmetric part of the E-F coupling:
// the b12 entries sit at (E1,F4)=+, (E2,F3)=-, (E3,F2)=+, (E4,F1)=-.
inline constexpr int kB12Pattern[4][4] = {
    {0, 0, 0, 1},
    {0, 0, -1, 0},
    {0, 1, 0, 0},
    {-1, 0, 0, 0},
};

}  // namespace detail

template <class S>
std::pair<Mat12<S>, Mat12<S>> build_P(const MetricProfile<S>& m) {
    Mat12<S> p, pp;
    p(0, 0) = m.f1sq.v;
    p(1, 1) = m.f2sq.v;
    p(0, 1) = p(1, 0) = m.f12.v;
    p(2, 2) = m.h1sq.v;
    p(3, 3) = m.h2sq.v;
    p(2, 3) = p(3, 2) = m.h12.v;
    pp(0, 0) = m.f1sq.d;
    pp(1, 1) = m.f2sq.d;
    pp(0, 1) = pp(1, 0) = m.f12.d;
    pp(2, 2) = m.h1sq.d;
    pp(3, 3) = m.h2sq.d;
    pp(2, 3) = pp(3, 2) = m.h12.d;
    for (int i = 0; i < 4; ++i) {
        p(4 + i, 4 + i) = m.a1sq.v;
        p(8 + i, 8 + i) = m.a2sq.v;
        pp(4 + i, 4 + i) = m.a1sq.d;
        pp(8 + i, 8 + i) = m.a2sq.d;
        for (int j = 0; j < 4; ++j) {
            S v = (i == j) ? m.a12.v : scalar_traits<S>::zero();
            S d = (i == j) ? m.a12.d : scalar_traits<S>::zero();
            const int sgnb = detail::kB12Pattern[i][j];
            if (sgnb != 0) {
                const S w = sgnb > 0 ? m.b12.v : S(-m.b12.v);
                const S wd = sgnb > 0 ? m.b12.d : S(-m.b12.d);
                v = S(v + w);
                d = S(d + wd);
            }
            p(4 + i, 8 + j) = v;
            p(8 + j, 4 + i) = v;
            pp(4 + i, 8 + j) = d;
            pp(8 + j, 4 + i) = d;
        }
    }
    // Symmetric elimination: a matrix is positive definite iff every pivot
    // stays positive. Exact scalars decide this without tolerance.
    Mat12<S> chk = p;
    for (int c = 0; c < 12; ++c) {
        if (sign_of(chk(c, c)) <= 0) throw std::domain_error("inadmissible metric");
        const S inv_piv = inverse(chk(c, c));
        for (int r = c + 1; r < 12; ++r) {
            if (is_zero(chk(r, c))) continue;
            const S f = S(chk(r, c) * inv_piv);
            for (int j = c; j < 12; ++j) chk(r, j) = S(chk(r, j) - f * chk(c, j));
        }
    }
    return {p, pp};
}

template <class S>
struct MetricOperators {
    Mat12<S> P, Pp, Pinv;
};

template <class S>
MetricOperators<S> metric_operators(const MetricProfile<S>& m) {
    auto [p, pp] = build_P(m);
    MetricOperators<S> ops;
    ops.P = p;
    ops.Pp = pp;
    ops.Pinv = inverse(p);
    return ops;
}

// Apply a 12x12 operator to the geometric part of a coefficient vector;
// the H-block of the output is zero by convention.
template <class S>
Coeffs<S> apply_block(const Mat12<S>& m, const Coeffs<S>& u) {
    Coeffs<S> out;
    for (int i = 0; i < 12; ++i) {
        S t = scalar_traits<S>::zero();
        for (int j = 0; j < 12; ++j) {
            if (is_zero(u(j, 0))) continue;
            t = S(t + m(i, j) * u(j, 0));
        }
        out(i, 0) = t;
    }
    return out;
}

enum class BSign { plus, minus };

// B_pm(X, Y) = ([X, PY] -+ [PX, Y]) / 2, evaluated in the full algebra.
template <class S>
Coeffs<S> b_bilinear(const Mat12<S>& p, const Coeffs<S>& x, const Coeffs<S>& y,
                     BSign sign) {
    const auto& ctx = BasisContext<S>::instance();
    const Coeffs<S> lhs = ctx.bracket(x, apply_block(p, y));
    const Coeffs<S> rhs = ctx.bracket(apply_block(p, x), y);
    const S half = scalar_traits<S>::from_ratio(1, 2);
    return half * (sign == BSign::plus ? Coeffs<S>(lhs - rhs) : Coeffs<S>(lhs + rhs));
}

// The eight summands of R(X,Y,Z,X), in display order.
template <class S>
std::array<S, 8> curvature_terms(const MetricOperators<S>& ops, const Coeffs<S>& x,
                                 const Coeffs<S>& y, const Coeffs<S>& z) {
    const auto& ctx = BasisContext<S>::instance();
    const S half = scalar_traits<S>::from_ratio(1, 2);
    const S quarter = scalar_traits<S>::from_ratio(1, 4);

    const Coeffs<S> xy = ctx.bracket(x, y);
    const Coeffs<S> xz = ctx.bracket(x, z);
    const Coeffs<S> bm_xy = b_bilinear(ops.P, x, y, BSign::minus);
    const Coeffs<S> bm_xz = b_bilinear(ops.P, x, z, BSign::minus);
    const Coeffs<S> bp_xy = project_geometric(b_bilinear(ops.P, x, y, BSign::plus));
    const Coeffs<S> bp_xz = project_geometric(b_bilinear(ops.P, x, z, BSign::plus));
    const Coeffs<S> bp_xx = project_geometric(b_bilinear(ops.P, x, x, BSign::plus));
    const Coeffs<S> bp_yz = project_geometric(b_bilinear(ops.P, y, z, BSign::plus));
    const Coeffs<S> ppx = apply_block(ops.Pp, x);

    std::array<S, 8> t;
    t[0] = S(half * frame_dot(bm_xy, xz));
    t[1] = S(half * frame_dot(xy, bm_xz));
    t[2] = S(-half *
             frame_dot(apply_block(ops.P, project_geometric(xy)), project_geometric(xz)));
    t[3] = S(-quarter *
             frame_dot(apply_block(ops.P, project_geometric(xz)), project_geometric(xy)));
    t[4] = frame_dot(bp_xz, apply_block(ops.Pinv, bp_xy));
    t[5] = S(-frame_dot(bp_xx, apply_block(ops.Pinv, bp_yz)));
    t[6] = S(quarter * frame_dot(ppx, z) * frame_dot(ppx, y));
    t[7] = S(-quarter * frame_dot(ppx, x) * frame_dot(apply_block(ops.Pp, y), z));
    return t;
}

template <class S>
S curvature_special(const MetricOperators<S>& ops, const Coeffs<S>& x,
                    const Coeffs<S>& y, const Coeffs<S>& z) {
    const auto t = curvature_terms(ops, x, y, z);
    S out = scalar_traits<S>::zero();
    for (const auto& term : t) out = S(out + term);
    return out;
}

// Full tensor by polarization of the special case; uses only bilinearity
// and the algebraic curvature symmetries of the target.
template <class S>
S curvature_full(const MetricOperators<S>& ops, const Coeffs<S>& x,
                 const Coeffs<S>& y, const Coeffs<S>& z, const Coeffs<S>& w) {
    const S half = scalar_traits<S>::from_ratio(1, 2);
    const S third = scalar_traits<S>::from_ratio(1, 3);
    const S d1 = S(half * S(curvature_special(ops, Coeffs<S>(x + w), y, z) -
                            curvature_special(ops, Coeffs<S>(x - w), y, z)));
    const S d2 = S(half * S(curvature_special(ops, Coeffs<S>(x + z), y, w) -
                            curvature_special(ops, Coeffs<S>(x - z), y, w)));
    return S(third * S(d1 - d2));
}

// Curvature of a vertical-tangential plane: R(E1,T,T,E1) = -a1 a1'' (and the
// same shape for the h-sector). The sign of the result is the sign of the
// sectional curvature.
template <class S>
S tangential_curvature(const S& value, const S& second_derivative) {
    return S(-value * second_derivative);
}

}  // namespace g2cohom
