#pragma once

// The non-negative-curvature obstruction pipeline built on top of the
// curvature engine and the closed-form layer:
//
//   * the alpha/beta reparametrization of the reduced metric family,
//   * the vertical-plane curvature product p(beta), its factored form and the
//     admissible root window [beta1, beta2],
//   * the quartic forms psi1/psi2 that control mixed-plane curvature in the
//     collapse limit, with all of their identities checkable exactly over
//     Q(gam, sqrt3),
//   * the coefficient-extraction identities tying the monomial curvature
//     tables to those quartics,
//   * the q-polynomial coefficients of the mixed-plane discriminant,
//   * the derivative bound coming from the two-plane constraint and the
//     boundary smoothness validator,
//   * the per-k feasibility verdict chaining all of the above.

#include "g2cohom/appendix.hpp"
#include "g2cohom/poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2cohom {

// --- alpha/beta bookkeeping --------------------------------------------------

// alpha(beta) = sqrt3 / (sqrt3 (1 - beta^2) + 2 beta).  The denominator is
// positive exactly on the admissible slope window (-1/sqrt3, sqrt3).
template <class S>
S alpha_of_beta(const S& beta) {
    const S s3 = scalar_traits<S>::sqrt3();
    const S one = scalar_traits<S>::one();
    const S two = scalar_traits<S>::from_long(2);
    const S den = S(s3 * S(one - S(beta * beta)) + S(two * beta));
    if (sign_of(den) <= 0) throw std::domain_error("denominator nonpositive");
    return S(s3 * inverse(den));
}

template <class S>
S beta_of_alpha(const S& alpha, const S& gam) {
    const S s3 = scalar_traits<S>::sqrt3();
    return S(S(alpha - gam) * inverse(S(s3 * alpha)));
}

// gam^2 = alpha (4 alpha - 3); real for alpha >= 3/4.
inline double gamma_of_alpha(double alpha) {
    const double d = alpha * (4.0 * alpha - 3.0);
    if (d < 0.0) throw std::domain_error("negative radicand");
    return std::sqrt(d);
}

// Exact scalars in Q(gam, sqrt3) for a rational alpha.
inline QG3 qg3_rational(const Rat& q) { return QG3(QuadRat(q), QuadRat()); }

inline QG3 qg3_gamma_of(const Rat& alpha) {
    const Rat gsq(alpha * (4 * alpha - 3));
    return QG3(QuadRat(Rat(0), Rat(1), gsq), QuadRat());
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
};

// --- vertical-plane curvature product ---------------------------------------

// p(beta) = YE * YF - YEF^2, the determinant of the vertical-plane curvature
// pair at the singular orbit.
template <class S>
S p_of_beta(const S& beta) {
    const auto v = vertical_plane_closed(beta);
    return S(S(v[0] * v[1]) - S(v[2] * v[2]));
}

// The degree-six factor of the numerator of p, ascending coefficients.
template <class S>
Poly<S> p_sextic_poly() {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    return Poly<S>({cl(9), S(cl(30) * s3), cl(-183), S(cl(-4) * s3), cl(183),
                    S(cl(30) * s3), cl(-9)});
}

// The quadratic factor sqrt3 b^2 + 2 b - sqrt3 whose positive root closes the
// admissible window.
template <class S>
Poly<S> p_quadratic_factor_poly() {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    return Poly<S>({S(-s3), cl(2), s3});
}

// Numerator of p as a polynomial: quadratic factor times sextic.
template <class S>
Poly<S> p_numerator_poly() {
    return p_quadratic_factor_poly<S>() * p_sextic_poly<S>();
}

// Factored display of p: (sqrt3 b^2 + 2b - sqrt3) * sextic / (48 (sqrt3 b^2 - 2b - sqrt3)^3).
template <class S>
S p_of_beta_factored(const S& beta) {
    const S s3 = scalar_traits<S>::sqrt3();
    const S two = scalar_traits<S>::from_long(2);
    const S num = S(p_numerator_poly<S>().eval(beta));
    const S base = S(S(s3 * S(beta * beta)) - S(two * beta) - s3);
    const S den = S(scalar_traits<S>::from_long(48) * S(base * S(base * base)));
    return S(num * inverse(den));
}

struct BetaWindow {
    double beta1 = 0;  // simple root of p, near -0.122
    double beta2 = 0;  // positive root of the quadratic factor, 1/sqrt3
};

// Locate the window endpoints numerically: bisection on p for the simple root,
// the quadratic formula on the closing factor for the upper endpoint.
inline BetaWindow beta_window() {
    BetaWindow w;
    const double s3 = std::sqrt(3.0);
    w.beta2 = (-2.0 + std::sqrt(4.0 + 4.0 * s3 * s3)) / (2.0 * s3);

    double lo = -0.2, hi = -0.05;
    double flo = p_of_beta(lo);
    const double fhi = p_of_beta(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::logic_error("beta window bracket lost its sign change");
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p_of_beta(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    w.beta1 = 0.5 * (lo + hi);
    // One Newton step with a central-difference slope sharpens the last bit.
    const double h = 1e-7;
    const double slope = (p_of_beta(w.beta1 + h) - p_of_beta(w.beta1 - h)) / (2.0 * h);
    if (slope != 0.0) w.beta1 -= p_of_beta(w.beta1) / slope;
    return w;
}

// The upper endpoint is a triple root of the numerator: value and first two
// derivatives vanish there while the third does not.  All four statements are
// decidable exactly in Q(sqrt3).
inline std::vector<IdentityCheck> beta2_multiplicity_checks() {
    using S = R3;
    std::vector<IdentityCheck> out;
    const S b2(Rat(0), Rat(1, 3));  // sqrt3 / 3
    Poly<S> n = p_numerator_poly<S>();
    const char* names[4] = {
        "window endpoint: numerator vanishes",
        "window endpoint: first derivative vanishes",
        "window endpoint: second derivative vanishes",
        "window endpoint: third derivative nonzero",
    };
    for (int order = 0; order < 4; ++order) {
        const bool zero = is_zero(n.eval(b2));
        out.push_back({names[order], order < 3 ? zero : !zero});
        n = n.derivative();
    }
    return out;
}

// --- quartic forms -----------------------------------------------------------

template <class S>
std::array<S, 5> psi1_coefficients(const S& a, const S& g) {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    const S a2 = S(a * a);
    return {
        S(-inverse(S(cl(16) * a))),
        S(S(S(cl(2) * a) + g) * inverse(S(cl(8) * S(s3 * a2)))),
        S(-S(S(a + g) * inverse(S(cl(8) * a2)))),
        S(S(S(cl(2) * a) - g) * inverse(S(cl(24) * S(s3 * a2)))),
        S(S(S(cl(5) * a) + S(cl(2) * g)) * inverse(S(cl(48) * a2))),
    };
}

template <class S>
std::array<S, 5> psi2_coefficients(const S& a, const S& g) {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    const S a2 = S(a * a);
    return {
        scalar_traits<S>::from_ratio(1, 16),
        S(-inverse(S(cl(4) * s3))),
        S(S(cl(9) - S(cl(2) * a)) * inverse(S(cl(48) * a))),
        S(S(S(cl(2) * a2) - S(cl(3) * a) + g) * inverse(S(cl(8) * S(s3 * a2)))),
        S(S(S(cl(3) * a2) - a - S(cl(2) * g)) * inverse(S(cl(48) * a2))),
    };
}

template <class S>
struct QuarticPsi {
    S alpha{};
    S gam{};
    Poly<S> psi1;
    Poly<S> psi2;

    static QuarticPsi make(const S& alpha, const S& gam) {
        QuarticPsi q;
        q.alpha = alpha;
        q.gam = gam;
        const auto c1 = psi1_coefficients(alpha, gam);
        const auto c2 = psi2_coefficients(alpha, gam);
        q.psi1 = Poly<S>(std::vector<S>(c1.begin(), c1.end()));
        q.psi2 = Poly<S>(std::vector<S>(c2.begin(), c2.end()));
        return q;
    }

    // 3 psi1 + 4 psi2, assembled from the parts.
    Poly<S> combined() const {
        return scalar_traits<S>::from_long(3) * psi1 +
               scalar_traits<S>::from_long(4) * psi2;
    }

    // The same quartic with every coefficient written out directly.
    Poly<S> combined_direct() const {
        const S s3 = scalar_traits<S>::sqrt3();
        auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
        const S a = alpha, g = gam;
        const S a2 = S(a * a);
        std::vector<S> c = {
            S(S(S(cl(4) * a) - cl(3)) * inverse(S(cl(16) * a))),
            S(S(S(cl(6) * a) - S(cl(8) * a2) + S(cl(3) * g)) *
              inverse(S(cl(8) * S(s3 * a2)))),
            S(S(S(cl(9) * a) - S(cl(4) * a2) - S(cl(9) * g)) * inverse(S(cl(24) * a2))),
            S(S(S(cl(8) * a2) - S(cl(10) * a) + S(cl(3) * g)) *
              inverse(S(cl(8) * S(s3 * a2)))),
            S(S(S(cl(11) * a) + S(cl(12) * a2) - S(cl(2) * g)) * inverse(S(cl(48) * a2))),
        };
        return Poly<S>(std::move(c));
    }
};

// Critical point of the combined quartic: sqrt3 (3 - 4 alpha - 4 gam) / (3 + 12 alpha).
template <class S>
S x_alpha(const S& alpha, const S& gam) {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    const S num = S(s3 * S(cl(3) - S(cl(4) * alpha) - S(cl(4) * gam)));
    return S(num * inverse(S(cl(3) + S(cl(12) * alpha))));
}

// (psi1(x), psi2(x), 3 psi1(x) + 4 psi2(x)).
template <class S>
std::array<S, 3> psi_eval(const QuarticPsi<S>& q, const S& x) {
    const S v1 = q.psi1.eval(x);
    const S v2 = q.psi2.eval(x);
    return {v1, v2,
            S(S(scalar_traits<S>::from_long(3) * v1) +
              S(scalar_traits<S>::from_long(4) * v2))};
}

// psi2 at the critical point:
//   (16a - 9)(9 - 312a + 656a^2 - 48g + 320ag) / (36 a (1 + 4a)^4).
template <class S>
S psi2_at_xalpha_closed(const S& a, const S& g) {
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    const S a2 = S(a * a);
    const S f1 = S(S(cl(16) * a) - cl(9));
    const S f2 = S(cl(9) - S(cl(312) * a) + S(cl(656) * a2) - S(cl(48) * g) +
                   S(cl(320) * S(a * g)));
    const S base = S(cl(1) + S(cl(4) * a));
    const S b2 = S(base * base);
    const S den = S(cl(36) * S(a * S(b2 * b2)));
    return S(S(f1 * f2) * inverse(den));
}

// Second derivative of the combined quartic at the critical point: 8/3 - 3/(2a).
template <class S>
S psi_second_deriv_closed(const S& a) {
    return S(scalar_traits<S>::from_ratio(8, 3) -
             S(scalar_traits<S>::from_long(3) *
               inverse(S(scalar_traits<S>::from_long(2) * a))));
}

// Monic quadratic cofactor of (x - x_alpha)^2 in the combined quartic.
template <class S>
Poly<S> psi_quadratic_cofactor(const S& a, const S& g) {
    const S s3 = scalar_traits<S>::sqrt3();
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    const S lin = S(-S(S(cl(2) * s3) * S(cl(2) - a + g) *
                       inverse(S(cl(4) + S(cl(3) * a)))));
    const S cst = S(S(cl(3) * a) * inverse(S(cl(5) * a) + S(cl(2) * g)));
    return Poly<S>({cst, lin, scalar_traits<S>::one()});
}

// Its discriminant in closed form: 36 / (12 - 41a - 20g), negative on the window.
template <class S>
S psi_cofactor_disc_closed(const S& a, const S& g) {
    auto cl = [](long n) { return scalar_traits<S>::from_long(n); };
    return S(cl(36) * inverse(S(cl(12) - S(cl(41) * a) - S(cl(20) * g))));
}

// The seven structural identities of the quartic pair, decided exactly in
// Q(gam, sqrt3) at a rational alpha.
inline std::vector<IdentityCheck> lemma_quartic_checks(const Rat& alpha) {
    using S = QG3;
    std::vector<IdentityCheck> out;
    const S a = qg3_rational(alpha);
    const S g = qg3_gamma_of(alpha);
    const auto qp = QuarticPsi<S>::make(a, g);
    const Poly<S> psi = qp.combined();
    const S xa = x_alpha(a, g);

    out.push_back({"combined quartic matches direct display",
                   (psi - qp.combined_direct()).is_zero()});
    out.push_back({"combined quartic vanishes at critical point",
                   is_zero(psi.eval(xa))});
    out.push_back({"first derivative vanishes at critical point",
                   is_zero(psi.derivative().eval(xa))});
    out.push_back({"second derivative matches closed form",
                   is_zero(S(psi.derivative().derivative().eval(xa) -
                             psi_second_deriv_closed(a)))});
    out.push_back({"psi2 at critical point matches closed form",
                   is_zero(S(qp.psi2.eval(xa) - psi2_at_xalpha_closed(a, g)))});

    const S lead = psi.coeff(4);
    const Poly<S> root(std::vector<S>{S(-xa), scalar_traits<S>::one()});
    const Poly<S> rebuilt = lead * (root * root * psi_quadratic_cofactor(a, g));
    out.push_back({"quartic factors through squared critical root",
                   (psi - rebuilt).is_zero()});

    const Poly<S> q = psi_quadratic_cofactor(a, g);
    const S disc = S(S(q.coeff(1) * q.coeff(1)) -
                     S(scalar_traits<S>::from_long(4) * q.coeff(0)));
    out.push_back({"cofactor discriminant matches closed form",
                   is_zero(S(disc - psi_cofactor_disc_closed(a, g)))});
    return out;
}

// --- coefficient extraction from the monomial tables ------------------------

namespace detail {

// Value polynomial of a stored table at exact (alpha, gam): monomials in the
// seven profile variables with coefficients in Q(gam, sqrt3).  sqrt3-scaled
// tables are divided back; (alpha - xi)-scaled tables are kept scaled.
inline SparsePoly<QG3, kNumTableVars> table_value_poly(const CurvatureTable& ct,
                                                       const QG3& alpha,
                                                       const QG3& gam) {
    using MP = SparsePoly<QG3, kNumTableVars>;
    MP out;
    for (const auto& row : ct.rows) {
        QG3 c = rat_to_scalar<QG3>(row.q);
        c = QG3(c * scalar_pow(alpha, row.apow));
        c = QG3(c * scalar_pow(gam, row.gpow));
        out = out + MP::term(row.e, c);
    }
    if (ct.scale == RowScale::kSqrt3)
        out = inverse(scalar_traits<QG3>::sqrt3()) * out;
    return out;
}

}  // namespace detail

// The five collapse-limit identities: the q-coefficients of the mixed-plane
// discriminant, formed from the table polynomials, (a) vanish on the flat
// locus, and their (b) xi-rate and (c) D1-rate there reproduce the psi1/psi2
// coefficients.  Decided exactly at a rational alpha.
inline std::vector<IdentityCheck> lemma_extraction_checks(const Rat& alpha,
                                                          const CurvatureTableSet& ts) {
    using S = QG3;
    constexpr int NV = detail::kNumTableVars;
    using MP = SparsePoly<S, NV>;

    const S a = qg3_rational(alpha);
    const S g = qg3_gamma_of(alpha);
    const S two = scalar_traits<S>::from_long(2);
    const S four = scalar_traits<S>::from_long(4);

    std::array<MP, 10> tp;
    for (int t = 0; t < 10; ++t)
        tp[std::size_t(t)] = detail::table_value_poly(ts.tables[std::size_t(t)], a, g);
    const MP& r1 = tp[0];
    const MP& r2 = tp[1];
    const MP& p3 = tp[2];  // carries a factor (alpha - xi)
    const MP& r4 = tp[3];
    const MP& r5 = tp[4];
    const MP& p6 = tp[5];  // carries a factor (alpha - xi)
    const MP& r7 = tp[6];
    const MP& r8 = tp[7];
    const MP& r9 = tp[8];
    const MP& p10 = tp[9];  // carries a factor (alpha - xi)

    const MP amx = MP::constant(a) - MP::variable(0);  // alpha - xi
    const MP s89 = r8 + r9;

    std::array<MP, 5> N;
    N[0] = r1 * r4 - r7 * r7;
    N[1] = two * (r2 * r4 + r1 * r5 - r7 * r8 - r7 * r9);
    N[2] = amx * (four * (r2 * r5) - s89 * s89) - two * (r7 * p10) + r1 * p6 + p3 * r4;
    N[3] = two * (r2 * p6 + p3 * r5 - r8 * p10 - r9 * p10);
    N[4] = p3 * p6 - p10 * p10;
    const std::array<int, 5> scale_pow = {0, 0, 1, 1, 2};  // powers of (alpha - xi)

    const auto c1 = psi1_coefficients(a, g);
    const auto c2 = psi2_coefficients(a, g);

    // Variable order: xi, f1s, f2s, f12, D1, D2, D3.
    const std::array<bool, NV> kill_flat = {true, false, false, false, true, true, true};
    const std::array<bool, NV> kill_offdiag = {false, true, false, true, false, true, true};
    const std::array<bool, NV> kill_xid1 = {true, false, false, false, true, false, false};

    MP f2s_sq = MP::term({0, 0, 2, 0, 0, 0, 0}, scalar_traits<S>::one());

    std::vector<IdentityCheck> out;
    for (int i = 0; i < 5; ++i) {
        const MP& Ni = N[std::size_t(i)];
        const S ae = scalar_pow(a, scale_pow[std::size_t(i)]);
        std::ostringstream tag;
        tag << "q^" << i << " coefficient";

        out.push_back({tag.str() + ": vanishes on flat locus",
                       Ni.zeroed(kill_flat).is_zero()});

        const MP diag = Ni.zeroed(kill_offdiag);
        const MP xi_rate = diag.partial(0).zeroed(kill_xid1);
        out.push_back({tag.str() + ": xi-rate reproduces psi1",
                       (xi_rate - S(c1[std::size_t(i)] * ae) * f2s_sq).is_zero()});

        const MP d1_rate = diag.partial(4).zeroed(kill_xid1);
        out.push_back({tag.str() + ": D1-rate reproduces psi2",
                       (d1_rate - S(c2[std::size_t(i)] * ae) * f2s_sq).is_zero()});
    }
    return out;
}

// --- q-polynomial coefficients of the mixed-plane discriminant ---------------

template <class S>
struct IqCoefficients {
    std::array<S, 5> c{};

    S eval(const S& q) const {
        S acc = scalar_traits<S>::zero();
        for (int i = 4; i >= 0; --i) acc = S(S(acc * q) + c[std::size_t(i)]);
        return acc;
    }
};

// From the ten curvature values R1..R10 (r[0]..r[9]) and f2(0), the
// coefficients of f2(0)^-4 [ R(X1,Bq,Bq,X1) R(X2,Bq,Bq,X2) - R(X1,Bq,Bq,X2)^2 ]
// as a quartic in q.
template <class S>
IqCoefficients<S> iq_coefficients(const std::array<S, 10>& r, const S& f2_0) {
    if (is_zero(f2_0)) throw std::domain_error("inadmissible metric");
    const S s = scalar_pow(f2_0, -4);
    const S two = scalar_traits<S>::from_long(2);
    const S four = scalar_traits<S>::from_long(4);
    const S s89 = S(r[7] + r[8]);
    IqCoefficients<S> out;
    out.c[0] = S(S(S(r[0] * r[3]) - S(r[6] * r[6])) * s);
    out.c[1] = S(S(two * S(S(r[1] * r[3]) + S(r[0] * r[4]) - S(r[6] * r[7]) -
                           S(r[6] * r[8]))) *
                 s);
    out.c[2] = S(S(S(-S(s89 * s89)) - S(two * S(r[6] * r[9])) + S(four * S(r[1] * r[4])) +
                   S(r[0] * r[5]) + S(r[2] * r[3])) *
                 s);
    out.c[3] = S(S(two * S(S(r[1] * r[5]) + S(r[2] * r[4]) - S(r[7] * r[9]) -
                           S(r[8] * r[9]))) *
                 s);
    out.c[4] = S(S(S(r[2] * r[5]) - S(r[9] * r[9])) * s);
    return out;
}

// The same quantity assembled directly as a determinant of quadratics in q;
// the coefficient expansion must reproduce it at every probe value.
template <class S>
S iq_determinant_form(const std::array<S, 10>& r, const S& q, const S& f2_0) {
    if (is_zero(f2_0)) throw std::domain_error("inadmissible metric");
    const S two = scalar_traits<S>::from_long(2);
    const S q2 = S(q * q);
    const S d11 = S(r[0] + S(two * S(q * r[1])) + S(q2 * r[2]));
    const S d22 = S(r[3] + S(two * S(q * r[4])) + S(q2 * r[5]));
    const S d12 = S(r[6] + S(q * S(r[7] + r[8])) + S(q2 * r[9]));
    return S(S(S(d11 * d22) - S(d12 * d12)) * scalar_pow(f2_0, -4));
}

// --- two-plane constraint and the derivative bound ---------------------------

// True iff xi'^2 <= (8/3) F xi^2 with F = (f1s + f2s + 2 f12) / (f1s f2s - f12^2),
// evaluated without division so exact scalars stay exact.
template <class S>
bool kxy_constraint(const Jet<S>& xi, const S& f1sq, const S& f2sq, const S& f12) {
    const S det = S(S(f1sq * f2sq) - S(f12 * f12));
    if (sign_of(f1sq) <= 0 || sign_of(det) <= 0)
        throw std::domain_error("inadmissible metric");
    const S tr = S(f1sq + f2sq + S(scalar_traits<S>::from_long(2) * f12));
    const S lhs = S(S(xi.d * xi.d) * det);
    const S rhs = S(S(scalar_traits<S>::from_ratio(8, 3) * tr) * S(xi.v * xi.v));
    return sign_of(S(rhs - lhs)) >= 0;
}

template <class S>
bool kxy_constraint(const ReducedProfile<S>& p) {
    return kxy_constraint(p.xi, p.f1sq.v, p.f2sq.v, p.f12.v);
}

// f1^2 F for the degeneration f1 -> 0: the constraint turns into
// (f1 xi'/xi)^2 <= (8/3) * (this factor), and the factor tends to 1 when the
// off-diagonal entry vanishes faster than f1.
inline double kxy_limit_factor(double f1, double f2, double f12) {
    const double f1s = f1 * f1, f2s = f2 * f2;
    const double det = f1s * f2s - f12 * f12;
    if (f1s <= 0.0 || det <= 0.0) throw std::domain_error("inadmissible metric");
    return f1s * (f1s + f2s + 2.0 * f12) / det;
}

// --- boundary smoothness validator -------------------------------------------

struct FunctionBoundary {
    double v0 = 0, d0 = 0;  // value and derivative at t = 0
    double vL = 0, dL = 0;  // value and derivative at t = L
};

// Values and first derivatives of the ten metric functions at both ends of the
// interval, plus the bundle parameter.
struct BoundaryData {
    long k = 1;
    FunctionBoundary f1, f2, f12, h1, h2, h12, a1, a2, a12, b12;
};

// Check every closing condition at the two singular orbits.  Violations are
// returned as data — one message per failed condition — not thrown.
inline std::vector<std::string> smoothness_check(const BoundaryData& b,
                                                 double tol = 1e-12) {
    std::vector<std::string> v;
    auto expect_zero = [&](double x, const char* what) {
        if (std::abs(x) > tol) {
            std::ostringstream os;
            os << what << " = " << x << ", expected 0";
            v.push_back(os.str());
        }
    };
    auto expect_eq = [&](double x, double y, const char* what) {
        if (std::abs(x - y) > tol) {
            std::ostringstream os;
            os << what << ": " << x << " != " << y;
            v.push_back(os.str());
        }
    };
    auto expect_pos = [&](double x, const char* what) {
        if (!(x > tol)) {
            std::ostringstream os;
            os << what << " = " << x << ", expected > 0";
            v.push_back(os.str());
        }
    };

    if (b.k < 1 || b.k % 2 == 0)
        v.push_back("k must be a positive odd integer");

    // t = 0: the circle direction closes with rate 4/(k sqrt6); everything
    // else is even in t.
    expect_zero(b.f1.v0, "f1(0)");
    expect_zero(b.f12.v0, "f12(0)");
    expect_eq(b.h1.v0, b.h2.v0, "h1(0) = h2(0)");
    expect_pos(b.h1.v0, "h1(0)");
    expect_zero(b.h12.v0, "h12(0)");
    expect_eq(b.a12.v0,
              0.5 * std::sqrt(3.0) * (b.a1.v0 * b.a1.v0 - b.a2.v0 * b.a2.v0),
              "a12(0) = (sqrt3/2)(a1(0)^2 - a2(0)^2)");
    expect_zero(b.b12.v0, "b12(0)");
    if (b.k >= 1)
        expect_eq(b.f1.d0, 4.0 / (double(b.k) * std::sqrt(6.0)), "f1'(0) = 4/(k sqrt6)");
    expect_zero(b.f12.d0, "f12'(0)");
    expect_zero(b.f2.d0, "f2'(0)");
    expect_zero(b.h1.d0, "h1'(0)");
    expect_zero(b.h2.d0, "h2'(0)");
    expect_zero(b.h12.d0, "h12'(0)");
    expect_zero(b.a1.d0, "a1'(0)");
    expect_zero(b.a2.d0, "a2'(0)");
    expect_zero(b.a12.d0, "a12'(0)");
    expect_zero(b.b12.d0, "b12'(0)");

    // t = L: the other collapse identifies h2 with a2 and kills h1, a1.
    expect_eq(b.h2.vL, b.a2.vL, "h2(L) = a2(L)");
    expect_pos(b.h2.vL, "h2(L)");
    expect_zero(b.h2.dL, "h2'(L)");
    expect_zero(b.a2.dL, "a2'(L)");
    expect_zero(b.h1.vL, "h1(L)");
    expect_zero(b.a1.vL, "a1(L)");
    return v;
}

// Boundary data of a reduced-family profile that closes smoothly at both ends:
// the structural relations make every t = 0 condition hold automatically.
inline BoundaryData reduced_boundary_data(double beta, long k, double h0 = 1.0,
                                          double f2_0 = 1.0, double cap = 1.0) {
    const double alpha = alpha_of_beta(beta);
    BoundaryData b;
    b.k = k;
    b.f1 = {0.0, 4.0 / (double(k) * std::sqrt(6.0)), 0.0, 0.0};
    b.f2 = {f2_0, 0.0, 0.0, 0.0};
    b.f12 = {0.0, 0.0, 0.0, 0.0};
    b.h1 = {h0, 0.0, 0.0, 0.0};
    b.h2 = {h0, 0.0, cap, 0.0};
    b.h12 = {0.0, 0.0, 0.0, 0.0};
    b.a1 = {std::sqrt(alpha), 0.0, 0.0, 0.0};
    b.a2 = {std::sqrt(beta * beta * alpha + 1.0), 0.0, cap, 0.0};
    b.a12 = {-beta * alpha, 0.0, 0.0, 0.0};
    b.b12 = {0.0, 0.0, 0.0, 0.0};
    return b;
}

// --- reduced-profile construction from raw data ------------------------------

// Build a reduced profile from the slope parameter and the a1^2 jet; enforces
// the window and xi >= 0.
inline ReducedProfile<double> reduce_profile(double beta, Jet<double> a1sq,
                                             Jet<double> f1sq, Jet<double> f2sq,
                                             Jet<double> f12, Jet<double> h1sq,
                                             long k = 1) {
    const double alpha = alpha_of_beta(beta);  // throws outside the window
    if (!(a1sq.v > 0.0) || a1sq.v > alpha)
        throw std::domain_error("inadmissible metric");
    const Jet<double> xi{alpha - a1sq.v, -a1sq.d};
    const double disc = alpha * (4.0 * alpha - 3.0);
    const double gam = disc >= 0.0 ? std::sqrt(disc) : 0.0;
    return make_reduced_profile(beta, alpha, gam, xi, f1sq, f2sq, f12, h1sq, k);
}

// --- the feasibility verdict -------------------------------------------------

inline double short_bound(double alpha) { return (8.0 / 3.0) * alpha; }

struct GridScan {
    double lo = 0, hi = 0, step = 0;
    long points = 0;
    double min_psi2 = 0;        // minimum of psi2 at the critical point
    double alpha_at_min = 0;    // where the minimum is attained
    double xalpha_at_min = 0;   // the critical point there
    double max_ratio_residual = 0;  // max |psi1(x_a) + (4/3) psi2(x_a)|
};

// Sweep the alpha window and evaluate the quartic pair at the critical point.
inline GridScan psi2_grid_scan(double lo = 0.75, double hi = 1.1847,
                               double step = 1e-3) {
    if (!(step > 0.0) || !(hi > lo)) throw std::domain_error("bad grid");
    GridScan g;
    g.lo = lo;
    g.hi = hi;
    g.step = step;
    const long n = std::lround((hi - lo) / step);
    for (long i = 0; i <= n; ++i) {
        const double alpha = (i == n) ? hi : lo + double(i) * step;
        const double gam = gamma_of_alpha(alpha);
        const auto qp = QuarticPsi<double>::make(alpha, gam);
        const double xa = x_alpha(alpha, gam);
        const auto vals = psi_eval(qp, xa);
        const double resid = std::abs(vals[0] + (4.0 / 3.0) * vals[1]);
        g.max_ratio_residual = std::max(g.max_ratio_residual, resid);
        if (g.points == 0 || vals[1] < g.min_psi2) {
            g.min_psi2 = vals[1];
            g.alpha_at_min = alpha;
            g.xalpha_at_min = xa;
        }
        ++g.points;
    }
    return g;
}

struct ObstructionReport {
    long k = 0;
    GridScan grid;
    double q_alpha = 0;          // critical point at the most adverse grid alpha
    double psi2_at_q_alpha = 0;  // minimal psi2 value over the grid
    bool psi2_positive = false;
    double lmax = 0;             // bound on limsup f1 xi'/xi from the constraint
    long chained_bound = 0;      // largest k the chained inequality allows
    double short_bound_max = 0;  // sup of (8/3) alpha over the window
    std::string verdict;         // "infeasible" or "no contradiction"
};

// Chain the pieces for one bundle parameter k: positivity of psi2 at the
// critical point over the whole window, the derivative bound l <= 2 sqrt6 / 3,
// and the rate f1'(0) = 4/(k sqrt6) combine into (8/(3k) - 4/3) psi2 >= 0,
// which fails for every odd k >= 3.
inline ObstructionReport obstruction_verdict(long k, double grid_step = 1e-3) {
    if (k < 1 || k % 2 == 0)
        throw std::domain_error("k must be a positive odd integer");
    ObstructionReport rep;
    rep.k = k;
    rep.grid = psi2_grid_scan(0.75, 1.1847, grid_step);
    rep.q_alpha = rep.grid.xalpha_at_min;
    rep.psi2_at_q_alpha = rep.grid.min_psi2;
    rep.psi2_positive = rep.grid.min_psi2 > 0.0;

    // Exact arithmetic in Q(sqrt2, sqrt3): the rate constant 4/sqrt6 times the
    // derivative bound 2 sqrt6 / 3 is exactly 8/3, and the chained inequality
    // (8/(3k)) - 4/3 >= 0 holds precisely for k below the bound.
    const R23 s6 = scalar_traits<R23>::sqrt6();
    const R23 rate = R23(scalar_traits<R23>::from_long(4) * inverse(s6));
    const R23 lmax = R23(scalar_traits<R23>::from_ratio(2, 3) * s6);
    const R23 ratio = R23(rate * lmax);
    const R23 threshold = scalar_traits<R23>::from_ratio(4, 3);
    long bound = 0;
    while (sign_of(R23(ratio - R23(threshold * scalar_traits<R23>::from_long(bound + 1)))) >= 0)
        ++bound;
    rep.lmax = to_double(lmax);
    rep.chained_bound = bound;

    rep.short_bound_max = short_bound(alpha_of_beta(beta_window().beta1));
    rep.verdict = (rep.psi2_positive && k > rep.chained_bound) ? "infeasible"
                                                               : "no contradiction";
    return rep;
}

}  // namespace g2cohom
