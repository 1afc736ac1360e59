#pragma once

// The 14-dimensional derivation algebra of the octonions, presented as 7x7
// matrices acting on the imaginary units, together with the decomposition
// used by the curvature engine: an so(2)-aligned pair U0, two further
// rotations U1, U2, an 8-dimensional (E|F) module and a 3-dimensional su(2)
// block H. All structure constants live over Q(sqrt2, sqrt3).

#include "g2cohom/linalg.hpp"
#include "g2cohom/octonion.hpp"
#include "g2cohom/scalar.hpp"

#include <array>

namespace g2cohom {

template <class S>
using Mat7 = Mat<S, 7, 7>;

template <class S>
struct G2Params {
    S a{scalar_traits<S>::zero()};
    S b{scalar_traits<S>::zero()};
    std::array<S, 6> x{};
    std::array<S, 6> y{};

    G2Params() {
        x.fill(scalar_traits<S>::zero());
        y.fill(scalar_traits<S>::zero());
    }
};

// Generic element of the derivation algebra in its 14 coordinates
// (a, b, x1..x6, y1..y6).
template <class S>
Mat7<S> g2_matrix(const G2Params<S>& p) {
    const auto& x = p.x;
    const auto& y = p.y;
    const S a = p.a, b = p.b;
    Mat7<S> m;
    auto set = [&m](int i, int j, const S& v) {
        m(i, j) = v;
        m(j, i) = S(-v);
    };
    set(0, 1, S(x[0] - y[0]));
    set(0, 2, S(x[1] + y[1]));
    set(0, 3, S(-x[4] + y[4]));
    set(0, 4, S(-x[5] - y[5]));
    set(0, 5, S(x[2] + y[2]));
    set(0, 6, S(x[3] - y[3]));
    set(1, 2, b);
    set(1, 3, y[3]);
    set(1, 4, y[2]);
    set(1, 5, y[5]);
    set(1, 6, y[4]);
    set(2, 3, x[2]);
    set(2, 4, x[3]);
    set(2, 5, x[4]);
    set(2, 6, x[5]);
    set(3, 4, a);
    set(3, 5, y[1]);
    set(3, 6, y[0]);
    set(4, 5, x[0]);
    set(4, 6, x[1]);
    set(5, 6, S(a + b));
    return m;
}

template <class S>
std::array<Mat7<S>, 14> g2_param_basis() {
    std::array<Mat7<S>, 14> out;
    for (int i = 0; i < 14; ++i) {
        G2Params<S> p;
        const S one = scalar_traits<S>::one();
        if (i == 0) p.a = one;
        else if (i == 1) p.b = one;
        else if (i < 8) p.x[std::size_t(i - 2)] = one;
        else p.y[std::size_t(i - 8)] = one;
        out[std::size_t(i)] = g2_matrix(p);
    }
    return out;
}

// D (on Im O, extended by D(1) = 0) is a derivation iff it satisfies the
// Leibniz rule on all products of imaginary basis units.
template <class S>
bool is_derivation(const Mat7<S>& d, double tol = 0.0) {
    std::array<Octonion<S>, 7> dim;
    for (int j = 0; j < 7; ++j) {
        Octonion<S> o;
        for (int i = 0; i < 7; ++i) o.c[std::size_t(i + 1)] = d(i, j);
        dim[std::size_t(j)] = o;
    }
    auto apply = [&](const Octonion<S>& x) {
        Octonion<S> out;
        for (int j = 0; j < 7; ++j) {
            if (is_zero(x.c[std::size_t(j + 1)])) continue;
            out = out + x.c[std::size_t(j + 1)] * dim[std::size_t(j)];
        }
        return out;
    };
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            const Octonion<S> ei = Octonion<S>::unit(i);
            const Octonion<S> ej = Octonion<S>::unit(j);
            const Octonion<S> lhs = apply(ei * ej);
            const Octonion<S> rhs = dim[std::size_t(i - 1)] * ej + ei * dim[std::size_t(j - 1)];
            const Octonion<S> diff = lhs - rhs;
            if (tol > 0.0) {
                for (const auto& e : diff.c)
                    if (std::fabs(to_double(e)) > tol) return false;
            } else if (!is_zero(diff)) {
                return false;
            }
        }
    }
    return true;
}

// --- distinguished matrices -------------------------------------------------

namespace detail {

template <class S>
Mat7<S> from_rows(const std::array<std::array<int, 7>, 7>& rows) {
    Mat7<S> m;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (rows[std::size_t(i)][std::size_t(j)] != 0)
                m(i, j) = scalar_traits<S>::from_long(rows[std::size_t(i)][std::size_t(j)]);
    return m;
}

}  // namespace detail

template <class S>
Mat7<S> u0_matrix() {
    return detail::from_rows<S>({{{0, -2, 0, 0, 0, 0, 0},
                                  {2, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 0, -1, 0},
                                  {0, 0, 0, 0, 1, 0, 0},
                                  {0, 0, 0, -1, 0, 0, 0}}});
}

template <class S>
Mat7<S> u1_matrix() {
    return detail::from_rows<S>({{{0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 2, 0, 0, 0, 0},
                                  {0, -2, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, -1, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 0, -1, 0}}});
}

template <class S>
Mat7<S> u2_matrix() {
    return detail::from_rows<S>({{{0, 0, 2, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 0, 0},
                                  {-2, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 1},
                                  {0, 0, 0, -1, 0, 0, 0},
                                  {0, 0, 0, 0, -1, 0, 0}}});
}

// First-kind module generators; e_matrix(i) is the i-th of E1..E4.
template <class S>
Mat7<S> e_matrix(int i) {
    std::array<S, 4> x{};
    x.fill(scalar_traits<S>::zero());
    x[std::size_t(i)] = scalar_traits<S>::one();
    Mat7<S> m;
    auto set = [&m](int r, int c, const S& v) {
        m(r, c) = v;
        m(c, r) = S(-v);
    };
    set(1, 3, x[1]);
    set(1, 4, S(-x[0]));
    set(1, 5, S(-x[3]));
    set(1, 6, x[2]);
    set(2, 3, x[0]);
    set(2, 4, x[1]);
    set(2, 5, x[2]);
    set(2, 6, x[3]);
    return m;
}

// Second-kind module generators F1..F4; these carry an overall 1/sqrt3.
template <class S>
Mat7<S> f_matrix(int i) {
    std::array<S, 4> x{};
    x.fill(scalar_traits<S>::zero());
    x[std::size_t(i)] = scalar_traits<S>::one();
    Mat7<S> m;
    auto set = [&m](int r, int c, const S& v) {
        m(r, c) = v;
        m(c, r) = S(-v);
    };
    const S two = scalar_traits<S>::from_long(2);
    set(0, 3, S(-two * x[2]));
    set(0, 4, S(-two * x[3]));
    set(0, 5, S(two * x[0]));
    set(0, 6, S(two * x[1]));
    set(1, 3, S(-x[1]));
    set(1, 4, x[0]);
    set(1, 5, x[3]);
    set(1, 6, S(-x[2]));
    set(2, 3, x[0]);
    set(2, 4, x[1]);
    set(2, 5, x[2]);
    set(2, 6, x[3]);
    const S inv_s3 = inverse(scalar_traits<S>::sqrt3());
    return inv_s3 * m;
}

// su(2) block commuting with the X/Y directions, spanned by three rotations
// of the {e4..e7} subspace.
template <class S>
Mat7<S> h_matrix(const S& a, const S& x1, const S& x2) {
    Mat7<S> m;
    auto set = [&m](int r, int c, const S& v) {
        m(r, c) = v;
        m(c, r) = S(-v);
    };
    set(3, 4, a);
    set(3, 5, S(-x2));
    set(3, 6, x1);
    set(4, 5, x1);
    set(4, 6, x2);
    set(5, 6, a);
    return m;
}

template <class S>
std::array<Mat7<S>, 3> h_basis() {
    const S zero = scalar_traits<S>::zero();
    const S one = scalar_traits<S>::one();
    return {h_matrix<S>(one, zero, zero), h_matrix<S>(zero, one, zero),
            h_matrix<S>(zero, zero, one)};
}

// Stabilizer subalgebra of e1 inside the derivation algebra (an su(3)):
// the first column of the generic matrix vanishes iff y = (x1,-x2,-x3,x4,x5,-x6).
template <class S>
Mat7<S> su3_stabilizer_matrix(const S& a, const S& b, const std::array<S, 6>& x) {
    G2Params<S> p;
    p.a = a;
    p.b = b;
    p.x = x;
    p.y = {x[0], S(-x[1]), S(-x[2]), x[3], x[4], S(-x[5])};
    return g2_matrix(p);
}

// Invariant form: Q0(X,Y) = -tr(XY)/4 normalizes the twelve engine
// directions to unit length.
template <class S>
S q0_form(const Mat7<S>& x, const Mat7<S>& y) {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) t = S(t + x(i, j) * y(j, i));
    return S(scalar_traits<S>::from_ratio(-1, 4) * t);
}

// --- elements of so(2) + derivations, with the k-dependent pairing ----------

template <class S>
struct LieElement {
    S s{scalar_traits<S>::zero()};  // coordinate on the so(2) factor
    Mat7<S> m{};

    friend LieElement operator+(const LieElement& x, const LieElement& y) {
        return {S(x.s + y.s), x.m + y.m};
    }
    friend LieElement operator-(const LieElement& x, const LieElement& y) {
        return {S(x.s - y.s), x.m - y.m};
    }
    friend LieElement operator*(const S& c, const LieElement& x) {
        return {S(c * x.s), c * x.m};
    }
};

template <class S>
S q_pair(const S& k, const LieElement<S>& v, const LieElement<S>& w) {
    const S so2 = S(scalar_traits<S>::from_ratio(3, 4) * k * k * v.s * w.s);
    return S(so2 + q0_form(v.m, w.m));
}

// Group element (c, A) of the circle-times-automorphism symmetry group;
// c = c_re + j c_im is unit length in applications.
template <class S>
struct GroupElement {
    S c_re{scalar_traits<S>::one()};
    S c_im{scalar_traits<S>::zero()};
    Mat7<S> g{Mat7<S>::identity()};

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        return {S(x.c_re * y.c_re - x.c_im * y.c_im),
                S(x.c_re * y.c_im + x.c_im * y.c_re), x.g * y.g};
    }
};

// Conjugation acts trivially on the abelian circle factor and by matrix
// conjugation on the derivation part.
template <class S>
LieElement<S> adjoint(const GroupElement<S>& w, const LieElement<S>& v) {
    return {v.s, w.g * v.m * transpose(w.g)};
}

// The two reflection elements generating the relevant Weyl data. The sign in
// the first one depends on k mod 4.
template <class S>
GroupElement<S> weyl_minus(long k) {
    const int eps = (((k % 4) + 4) % 4 == 1) ? 1 : -1;
    GroupElement<S> w;
    w.c_re = scalar_traits<S>::zero();
    w.c_im = scalar_traits<S>::one();
    w.g = detail::from_rows<S>({{{0, eps, 0, 0, 0, 0, 0},
                                 {-eps, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, -eps},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, eps, 0, 0, 0}}});
    return w;
}

template <class S>
GroupElement<S> weyl_plus() {
    GroupElement<S> w;
    w.g = detail::from_rows<S>({{{1, 0, 0, 0, 0, 0, 0},
                                 {0, -1, 0, 0, 0, 0, 0},
                                 {0, 0, -1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, -1, 0},
                                 {0, 0, 0, 0, 0, 0, -1}}});
    return w;
}

// --- the 15-slot coordinate model used by the curvature engine --------------
//
// Index map: 0,1 = X1,X2 (the two so(2)-mixed directions, matrix parts
// +-U0/sqrt6), 2,3 = Y1,Y2, 4..7 = E1..E4, 8..11 = F1..F4, 12..14 = H block.
// The twelve geometric directions are Q-orthonormal for every k; brackets
// never produce an so(2) component, so the structure table is k-independent.

template <class S>
using Coeffs = Vec<S, 15>;

template <class S>
class BasisContext {
  public:
    static const BasisContext& instance() {
        static const BasisContext ctx;
        return ctx;
    }

    const Mat7<S>& mat(int i) const { return mats_[std::size_t(i)]; }

    Coeffs<S> coords(const Mat7<S>& m) const {
        Coeffs<S> c;
        const S q = q0_form(m, mats_[0]);
        c(0, 0) = q;
        c(1, 0) = S(-q);
        for (int i = 2; i < 15; ++i) c(i, 0) = q0_form(m, mats_[std::size_t(i)]);
        return c;
    }

    Mat7<S> materialize(const Coeffs<S>& u) const {
        Mat7<S> m;
        for (int i = 0; i < 15; ++i) {
            if (is_zero(u(i, 0))) continue;
            m += u(i, 0) * mats_[std::size_t(i)];
        }
        return m;
    }

    Coeffs<S> bracket(const Coeffs<S>& u, const Coeffs<S>& v) const {
        Coeffs<S> out;
        for (int i = 0; i < 15; ++i) {
            if (is_zero(u(i, 0))) continue;
            for (int j = 0; j < 15; ++j) {
                if (is_zero(v(j, 0))) continue;
                const S f = S(u(i, 0) * v(j, 0));
                const auto& row = sc_[std::size_t(i)][std::size_t(j)];
                for (int t = 0; t < 15; ++t) {
                    if (is_zero(row(t, 0))) continue;
                    out(t, 0) = S(out(t, 0) + f * row(t, 0));
                }
            }
        }
        return out;
    }

    // Lie element carried by a coefficient vector at parameter k (the
    // so(2) coordinates of X1 and X2 are both 2/(k sqrt6) = sqrt6/(3k)).
    LieElement<S> element(const Coeffs<S>& u, const S& k) const {
        LieElement<S> v;
        const S s_unit = S(scalar_traits<S>::sqrt6() *
                           inverse(S(scalar_traits<S>::from_long(3) * k)));
        v.s = S(s_unit * S(u(0, 0) + u(1, 0)));
        v.m = materialize(u);
        return v;
    }

    // Q-coordinates of a Lie element in the twelve geometric directions.
    Coeffs<S> coords_of_element(const LieElement<S>& v, const S& k) const {
        Coeffs<S> c;
        for (int i = 0; i < 12; ++i) {
            Coeffs<S> ei;
            ei(i, 0) = scalar_traits<S>::one();
            c(i, 0) = q_pair(k, v, element(ei, k));
        }
        return c;
    }

    BasisContext(const BasisContext&) = delete;
    BasisContext& operator=(const BasisContext&) = delete;

  private:
    BasisContext() {
        const S inv_s6 = inverse(scalar_traits<S>::sqrt6());
        const S inv_s3 = inverse(scalar_traits<S>::sqrt3());
        mats_[0] = inv_s6 * u0_matrix<S>();
        mats_[1] = -mats_[0];
        mats_[2] = inv_s3 * u1_matrix<S>();
        mats_[3] = inv_s3 * u2_matrix<S>();
        for (int i = 0; i < 4; ++i) {
            mats_[std::size_t(4 + i)] = e_matrix<S>(i);
            mats_[std::size_t(8 + i)] = f_matrix<S>(i);
        }
        const auto h = h_basis<S>();
        for (int i = 0; i < 3; ++i) mats_[std::size_t(12 + i)] = h[std::size_t(i)];
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                sc_[std::size_t(i)][std::size_t(j)] = coords(
                    commutator(mats_[std::size_t(i)], mats_[std::size_t(j)]));
    }

    std::array<Mat7<S>, 15> mats_;
    std::array<std::array<Coeffs<S>, 15>, 15> sc_;
};

template <class S>
Coeffs<S> basis_vector(int i) {
    Coeffs<S> c;
    c(i, 0) = scalar_traits<S>::one();
    return c;
}

// Orthonormal-frame inner product (valid for all k by construction).
template <class S>
S frame_dot(const Coeffs<S>& u, const Coeffs<S>& v) {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < 15; ++i) t = S(t + u(i, 0) * v(i, 0));
    return t;
}

// Projection onto the twelve geometric directions (drops the H block).
template <class S>
Coeffs<S> project_geometric(const Coeffs<S>& u) {
    Coeffs<S> out = u;
    for (int i = 12; i < 15; ++i) out(i, 0) = scalar_traits<S>::zero();
    return out;
}

}  // namespace g2cohom
