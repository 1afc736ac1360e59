#pragma once

// The degree-d link: intersection of z0^d + z1^2 + ... + z7^2 = 0 with the
// unit sphere in C^8, carrying the circle-times-automorphism action
//
//     (c, A) . (z0, Z) = (c^-2 z0, c^-d A Z),     |c| = 1,  A in G2 < SO(7),
//
// where the real matrix A acts componentwise on Z in C^7. The two circle
// exponents must satisfy (multiplier on z0)^d = (multiplier on Z)^2 for the
// defining equation to survive, which pins the pair to (-2, -d) once the
// rotation block of the codim-2 stabilizer below is fixed. The orbit of a
// point is determined by |z0|, which runs over [0, t0] with t0 the positive
// root of t^d + t^2 = 1. This file provides the defining equations,
// distinguished points on the orbit interval, structural membership tests
// for the three stabilizer types, samplers for each, and the exact
// reflection-element suite together with its induced action on the
// twelve-dimensional frame.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2cohom/g2.hpp"
#include "g2cohom/linalg.hpp"
#include "g2cohom/sampling.hpp"

namespace g2cohom {

struct VarietyPoint {
    long d{1};
    std::array<std::complex<double>, 8> z{};
};

struct EquationResiduals {
    double defining{0};
    double sphere{0};
};

inline EquationResiduals equation_residuals(const VarietyPoint& p) {
    std::complex<double> lhs{1.0, 0.0};
    for (long i = 0; i < p.d; ++i) lhs *= p.z[0];
    double n = std::norm(p.z[0]);
    for (int i = 1; i < 8; ++i) {
        lhs += p.z[std::size_t(i)] * p.z[std::size_t(i)];
        n += std::norm(p.z[std::size_t(i)]);
    }
    return {std::abs(lhs), std::abs(n - 1.0)};
}

// c^n for unit c with negative exponents via the conjugate; the exponents in
// play are small, so repeated multiplication is exact enough and branch-free.
inline std::complex<double> unit_cpow(std::complex<double> c, long n) {
    if (n < 0) {
        c = std::conj(c);
        n = -n;
    }
    std::complex<double> out{1.0, 0.0};
    for (long i = 0; i < n; ++i) out *= c;
    return out;
}

inline VarietyPoint act(const GroupElement<double>& g, const VarietyPoint& p) {
    const std::complex<double> c{g.c_re, g.c_im};
    VarietyPoint q;
    q.d = p.d;
    q.z[0] = unit_cpow(c, -2) * p.z[0];
    const std::complex<double> twist = unit_cpow(c, -p.d);
    for (int i = 0; i < 7; ++i) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < 7; ++j) acc += g.g(i, j) * p.z[std::size_t(j + 1)];
        q.z[std::size_t(i + 1)] = twist * acc;
    }
    return q;
}

// Deck transformation of the two-fold quotient: fixes z0, negates the
// quadratic coordinates. It commutes with the action above.
inline VarietyPoint deck_involution(const VarietyPoint& p) {
    VarietyPoint q = p;
    for (int i = 1; i < 8; ++i) q.z[std::size_t(i)] = -q.z[std::size_t(i)];
    return q;
}

inline double variety_distance(const VarietyPoint& a, const VarietyPoint& b) {
    double m = 0;
    for (int i = 0; i < 8; ++i)
        m = std::max(m, std::abs(a.z[std::size_t(i)] - b.z[std::size_t(i)]));
    return m;
}

// Positive root of t^d + t^2 = 1; the right endpoint of the orbit interval.
// The function is strictly increasing on [0,1], so a bisection bracket plus a
// Newton polish pins the root to full precision.
inline double t0_solve(long d) {
    if (d < 1) throw std::domain_error("degree must be positive");
    auto f = [d](double t) { return std::pow(t, double(d)) + t * t - 1.0; };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double t = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) {
        const double df = double(d) * std::pow(t, double(d - 1)) + 2.0 * t;
        t -= f(t) / df;
    }
    return t;
}

// The codimension-two orbit point (|z0| = 0).
inline VarietyPoint p_minus(long d) {
    VarietyPoint p;
    p.d = d;
    const double r = 1.0 / std::sqrt(2.0);
    p.z[1] = {r, 0.0};
    p.z[2] = {0.0, r};
    return p;
}

// The codimension-six orbit point (|z0| = t0).
inline VarietyPoint p_plus(long d) {
    VarietyPoint p;
    p.d = d;
    const double t0 = t0_solve(d);
    p.z[0] = {t0, 0.0};
    p.z[1] = {0.0, std::sqrt(std::pow(t0, double(d)))};
    return p;
}

// A point with |z0| = x on the section joining the two ends; x in [0, t0].
// Its stabilizer for 0 < x < t0 is exactly the principal block form below.
inline VarietyPoint p_regular(long d, double x) {
    const double t0 = t0_solve(d);
    if (x < 0.0 || x > t0 * (1.0 + 1e-12)) throw std::domain_error("x out of range");
    const double xd = std::pow(x, double(d));
    const double s2 = 0.5 * (1.0 - x * x + xd);
    const double w2 = std::max(0.0, 0.5 * (1.0 - x * x - xd));
    VarietyPoint p;
    p.d = d;
    p.z[0] = {x, 0.0};
    p.z[1] = {0.0, std::sqrt(s2)};
    p.z[2] = {std::sqrt(w2), 0.0};
    return p;
}

// --- stabilizer membership --------------------------------------------------
//
// For odd exponent d the three stabilizer types have rigid block shapes:
//
//   principal:      (e,  diag{e, e, 1, A}),  e = +-1
//   codim-2 end:    (c,  diag{R(c^d), 1, A}) with R the rotation by c^d
//   codim-6 end:    (e,  diag{e, B}),        e = +-1 equal to the (0,0) entry
//
// each with the whole matrix an algebra automorphism. With tol = 0 the tests
// are exact; otherwise entries are compared in double at the given slack.

namespace detail {

template <class S>
bool near(const S& v, long want, double tol) {
    const S diff = S(v - scalar_traits<S>::from_long(want));
    if (tol > 0.0) return std::fabs(to_double(diff)) <= tol;
    return is_zero(diff);
}

template <class S>
bool near_s(const S& v, const S& want, double tol) {
    const S diff = S(v - want);
    if (tol > 0.0) return std::fabs(to_double(diff)) <= tol;
    return is_zero(diff);
}

// rows and columns `lo..hi-1` vanish outside the marked diagonal blocks
template <class S>
bool clean_cross(const Mat7<S>& m, int lo, int hi, double tol) {
    for (int i = lo; i < hi; ++i)
        for (int j = 0; j < 7; ++j) {
            if (j >= lo && j < hi) continue;
            if (!near<S>(m(i, j), 0, tol) || !near<S>(m(j, i), 0, tol)) return false;
        }
    return true;
}

template <class S>
int unit_sign(const S& re, const S& im, double tol) {
    if (!near<S>(im, 0, tol)) return 0;
    if (near<S>(re, 1, tol)) return 1;
    if (near<S>(re, -1, tol)) return -1;
    return 0;
}

}  // namespace detail

template <class S>
bool principal_stabilizer_member(const GroupElement<S>& w, double tol = 0.0) {
    const int e = detail::unit_sign(w.c_re, w.c_im, tol);
    if (e == 0) return false;
    if (!detail::near<S>(w.g(0, 0), e, tol) || !detail::near<S>(w.g(1, 1), e, tol) ||
        !detail::near<S>(w.g(2, 2), 1, tol))
        return false;
    if (!detail::clean_cross(w.g, 0, 1, tol) || !detail::clean_cross(w.g, 1, 2, tol) ||
        !detail::clean_cross(w.g, 2, 3, tol))
        return false;
    return is_automorphism(w.g, tol);
}

template <class S>
bool codim2_stabilizer_member(const GroupElement<S>& w, long d, double tol = 0.0) {
    // unit length of the circle part
    const S nrm = S(w.c_re * w.c_re + w.c_im * w.c_im);
    if (!detail::near<S>(nrm, 1, tol)) return false;
    // c^d by repeated multiplication (exact for exact scalars)
    S re = scalar_traits<S>::one(), im = scalar_traits<S>::zero();
    for (long i = 0; i < d; ++i) {
        const S nre = S(re * w.c_re - im * w.c_im);
        im = S(re * w.c_im + im * w.c_re);
        re = nre;
    }
    if (!detail::near_s<S>(w.g(0, 0), re, tol) || !detail::near_s<S>(w.g(1, 1), re, tol) ||
        !detail::near_s<S>(w.g(0, 1), im, tol) || !detail::near_s<S>(w.g(1, 0), S(-im), tol))
        return false;
    if (!detail::near<S>(w.g(2, 2), 1, tol)) return false;
    if (!detail::clean_cross(w.g, 0, 2, tol) || !detail::clean_cross(w.g, 2, 3, tol))
        return false;
    return is_automorphism(w.g, tol);
}

template <class S>
bool codim6_stabilizer_member(const GroupElement<S>& w, double tol = 0.0) {
    const int e = detail::unit_sign(w.c_re, w.c_im, tol);
    if (e == 0) return false;
    if (!detail::near<S>(w.g(0, 0), e, tol)) return false;
    if (!detail::clean_cross(w.g, 0, 1, tol)) return false;
    return is_automorphism(w.g, tol);
}

struct StabilizerClass {
    bool principal{false};
    bool codim2{false};
    bool codim6{false};
};

inline StabilizerClass classify_stabilizer(const GroupElement<double>& w, long d,
                                           double tol) {
    return {principal_stabilizer_member(w, tol), codim2_stabilizer_member(w, d, tol),
            codim6_stabilizer_member(w, tol)};
}

// The square of the odd reflection element: (-1, diag{-1,-1,1,-1,1,1,-1}).
// It lies in the principal stabilizer and generates its second component.
template <class S>
GroupElement<S> tau_element() {
    GroupElement<S> w;
    w.c_re = S(-scalar_traits<S>::one());
    w.g = detail::from_rows<S>({{{-1, 0, 0, 0, 0, 0, 0},
                                 {0, -1, 0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, -1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 0, 0, -1}}});
    return w;
}

// --- samplers ---------------------------------------------------------------

inline GroupElement<double> sample_principal_stabilizer(SampleRng& rng) {
    const Mat7<double> a = expm(h_matrix<double>(rng.uniform(-1.5, 1.5),
                                                 rng.uniform(-1.5, 1.5),
                                                 rng.uniform(-1.5, 1.5)));
    GroupElement<double> g;
    g.g = a;
    if (rng.uniform_int(0, 1) == 1) {
        const auto tau = tau_element<double>();
        g.c_re = -1.0;
        g.g = tau.g * a;
    }
    return g;
}

inline GroupElement<double> sample_codim2_stabilizer(SampleRng& rng, long d) {
    const double theta = rng.uniform(0.0, 6.283185307179586);
    GroupElement<double> g;
    g.c_re = std::cos(theta);
    g.c_im = std::sin(theta);
    g.g = expm(Mat7<double>((-0.5 * double(d) * theta) * u0_matrix<double>())) *
          expm(h_matrix<double>(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                rng.uniform(-1.5, 1.5)));
    return g;
}

inline GroupElement<double> sample_codim6_stabilizer(SampleRng& rng) {
    std::array<double, 6> x{};
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    GroupElement<double> g;
    g.g = expm(su3_stabilizer_matrix<double>(rng.uniform(-1.0, 1.0),
                                             rng.uniform(-1.0, 1.0), x));
    if (rng.uniform_int(0, 1) == 1) {
        const auto tau = tau_element<double>();
        g.c_re = -1.0;
        g.g = tau.g * g.g;
    }
    return g;
}

// --- the reflection-element suite -------------------------------------------

struct NamedCheck {
    std::string name;
    bool pass{false};
};

namespace detail {

template <class S>
bool group_equal(const GroupElement<S>& a, const GroupElement<S>& b) {
    if (!is_zero(S(a.c_re - b.c_re)) || !is_zero(S(a.c_im - b.c_im))) return false;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!is_zero(S(a.g(i, j) - b.g(i, j)))) return false;
    return true;
}

}  // namespace detail

// Exact structural facts about the two reflection elements at odd parameter k:
// where they live, their orders, and the order of their product.
inline std::vector<NamedCheck> reflection_element_checks(long k) {
    using S = Rat;
    std::vector<NamedCheck> out;
    const auto wm = weyl_minus<S>(k);
    const auto wp = weyl_plus<S>();
    const auto tau = tau_element<S>();
    const GroupElement<S> id;
    GroupElement<S> minus_id;
    minus_id.c_re = S(-1);

    out.push_back({"odd reflection is an automorphism", is_automorphism(wm.g)});
    out.push_back({"even reflection is an automorphism", is_automorphism(wp.g)});
    out.push_back({"odd reflection sits in the codim-2 stabilizer",
                   codim2_stabilizer_member(wm, k)});
    out.push_back({"even reflection sits in the codim-6 stabilizer",
                   codim6_stabilizer_member(wp)});
    out.push_back({"odd reflection avoids the principal stabilizer",
                   !principal_stabilizer_member(wm)});
    out.push_back({"even reflection avoids the principal stabilizer",
                   !principal_stabilizer_member(wp)});
    out.push_back(
        {"odd reflection squares to the marked element", detail::group_equal(wm * wm, tau)});
    out.push_back({"marked element is principal", principal_stabilizer_member(tau)});
    out.push_back({"even reflection squares to the identity",
                   detail::group_equal(wp * wp, id)});
    const auto prod = wp * wm;
    out.push_back({"product squares to the central element",
                   detail::group_equal(prod * prod, minus_id)});
    out.push_back({"central element is not principal",
                   !principal_stabilizer_member(minus_id)});
    out.push_back({"product has order four",
                   detail::group_equal(prod * prod * prod * prod, id) &&
                       principal_stabilizer_member(GroupElement<S>(id))});
    return out;
}

// Induced action of a group element on the twelve frame directions, expressed
// in frame coordinates; rows index the image decomposition.
template <class S>
Mat<S, 12, 12> frame_action(const GroupElement<S>& w, long k) {
    const auto& ctx = BasisContext<S>::instance();
    const S ks = scalar_traits<S>::from_long(k);
    Mat<S, 12, 12> out;
    for (int j = 0; j < 12; ++j) {
        const auto img =
            ctx.coords_of_element(adjoint(w, ctx.element(basis_vector<S>(j), ks)), ks);
        for (int i = 0; i < 12; ++i) out(i, j) = img(i, 0);
    }
    return out;
}

// Frozen form of the induced action of the two reflections and the marked
// element on the frame: signed permutations for the even reflection and the
// marked element, half-angle mixing of the paired module for the odd one.
inline std::vector<NamedCheck> frame_action_checks(long k) {
    using S = R23;
    const S h = scalar_traits<S>::from_ratio(1, 2);
    const S s3h = S(scalar_traits<S>::sqrt3() * h);
    const S one = scalar_traits<S>::one();
    const long e = ((((k % 4) + 4) % 4) == 1) ? 1 : -1;
    const S eps = scalar_traits<S>::from_long(e);

    auto expect = [](int i, int j, const S& v) {
        return std::tuple<int, int, S>(i, j, v);
    };
    // columns are images: entry (i, j) = coefficient of direction i in the
    // image of direction j. Slots: 0,1 = the so(2)-mixed pair, 2,3 = the two
    // remaining rotations, 4..7 and 8..11 the paired module.
    std::vector<std::tuple<int, int, S>> wm_entries = {
        expect(0, 0, one), expect(1, 1, one),
        expect(3, 2, eps), expect(2, 3, S(-eps)),
        expect(7, 4, S(eps * h)), expect(11, 4, S(eps * s3h)),
        expect(7, 8, S(eps * s3h)), expect(11, 8, S(-eps * h)),
        expect(5, 5, h), expect(9, 5, s3h),
        expect(5, 9, s3h), expect(9, 9, S(-h)),
        expect(6, 6, h), expect(10, 6, s3h),
        expect(6, 10, s3h), expect(10, 10, S(-h)),
        expect(4, 7, S(-eps * h)), expect(8, 7, S(-eps * s3h)),
        expect(4, 11, S(-eps * s3h)), expect(8, 11, S(eps * h)),
    };
    std::vector<std::tuple<int, int, S>> wp_entries = {
        expect(1, 0, one), expect(0, 1, one),
        expect(2, 2, one), expect(3, 3, S(-one)),
        expect(4, 4, S(-one)), expect(5, 5, S(-one)),
        expect(6, 6, one), expect(7, 7, one),
        expect(8, 8, S(-one)), expect(9, 9, S(-one)),
        expect(10, 10, one), expect(11, 11, one),
    };
    std::vector<std::tuple<int, int, S>> tau_entries = {
        expect(0, 0, one), expect(1, 1, one),
        expect(2, 2, S(-one)), expect(3, 3, S(-one)),
        expect(4, 4, S(-one)), expect(5, 5, one),
        expect(6, 6, one), expect(7, 7, S(-one)),
        expect(8, 8, S(-one)), expect(9, 9, one),
        expect(10, 10, one), expect(11, 11, S(-one)),
    };

    auto matches = [](const Mat<S, 12, 12>& m,
                      const std::vector<std::tuple<int, int, S>>& entries) {
        Mat<S, 12, 12> want;
        for (const auto& [i, j, v] : entries) want(i, j) = v;
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j)
                if (!is_zero(S(m(i, j) - want(i, j)))) return false;
        return true;
    };

    std::vector<NamedCheck> out;
    out.push_back({"odd reflection acts by the half-angle table",
                   matches(frame_action(weyl_minus<S>(k), k), wm_entries)});
    out.push_back({"even reflection swaps the mixed pair and flips the paired module",
                   matches(frame_action(weyl_plus<S>(), k), wp_entries)});
    out.push_back({"marked element negates the six odd directions",
                   matches(frame_action(tau_element<S>(), k), tau_entries)});
    return out;
}

// Block form of the isotropy action on the paired module: on the stacked
// basis the automorphism diag{I3, [[h1, -h2], [h2, h1]]} acts through the
// transpose of its own lower-right block.
inline std::vector<NamedCheck> paired_module_checks(const Rat& a1, const Rat& a2,
                                                    const Rat& b1, const Rat& b2) {
    using S = R3;
    auto lift = [](const Rat& q) { return S(q, Rat(0)); };
    const S A1 = lift(a1), A2 = lift(a2), B1 = lift(b1), B2 = lift(b2);

    Mat<S, 4, 4> blk;
    // upper-left h1, upper-right -h2, lower-left h2, lower-right h1 with
    // h1 = [[a1, b1], [-b1, a1]] and h2 = [[-b2, a2], [a2, b2]]
    blk(0, 0) = A1;
    blk(0, 1) = B1;
    blk(1, 0) = S(-B1);
    blk(1, 1) = A1;
    blk(0, 2) = B2;
    blk(0, 3) = S(-A2);
    blk(1, 2) = S(-A2);
    blk(1, 3) = S(-B2);
    blk(2, 0) = S(-B2);
    blk(2, 1) = A2;
    blk(3, 0) = A2;
    blk(3, 1) = B2;
    blk(2, 2) = A1;
    blk(2, 3) = B1;
    blk(3, 2) = S(-B1);
    blk(3, 3) = A1;

    Mat7<S> h = Mat7<S>::identity();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(3 + i, 3 + j) = blk(i, j);

    std::vector<NamedCheck> out;
    const S nrm = S(A1 * A1 + A2 * A2 + B1 * B1 + B2 * B2);
    out.push_back({"parameters sit on the unit sphere",
                   is_zero(S(nrm - scalar_traits<S>::one()))});
    out.push_back({"block element is an automorphism", is_automorphism(h)});

    auto conj_eq = [&h](const Mat7<S>& m, const Mat7<S>& want) {
        const Mat7<S> got = h * m * transpose(h);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (!is_zero(S(got(i, j) - want(i, j)))) return false;
        return true;
    };

    bool rot_fixed = conj_eq(u0_matrix<S>(), u0_matrix<S>()) &&
                     conj_eq(u1_matrix<S>(), u1_matrix<S>()) &&
                     conj_eq(u2_matrix<S>(), u2_matrix<S>());
    out.push_back({"rotation directions are fixed", rot_fixed});

    bool module_ok = true;
    for (int i = 0; i < 4 && module_ok; ++i) {
        Mat7<S> we, wf;
        for (int j = 0; j < 4; ++j) {
            we += blk(j, i) * e_matrix<S>(j);
            wf += blk(j, i) * f_matrix<S>(j);
        }
        module_ok = conj_eq(e_matrix<S>(i), we) && conj_eq(f_matrix<S>(i), wf);
    }
    out.push_back({"paired module transforms by the transposed block", module_ok});
    return out;
}

}  // namespace g2cohom
