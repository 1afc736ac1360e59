// The curvature engine: the 15-slot structure table, the invariant metric
// operators, the eight-term curvature formula, and the runtime monomial
// tables. Oracles: matrix commutators of materialized elements (independent
// of the cached structure constants), the algebraic curvature symmetries, and
// byte-level round trips for the serialized tables.

#include <catch2/catch_amalgamated.hpp>

#include "g2cohom/appendix.hpp"
#include "g2cohom/g2.hpp"
#include "g2cohom/metric.hpp"
#include "g2cohom/octonion.hpp"
#include "g2cohom/sampling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace g2cohom;

namespace {

// Apply a 7x7 matrix to the imaginary part of an octonion.
template <class S>
Octonion<S> rotate_im(const Mat7<S>& g, const Octonion<S>& x) {
    Octonion<S> out;
    for (int i = 0; i < 7; ++i) {
        S t = scalar_traits<S>::zero();
        for (int j = 0; j < 7; ++j) t = S(t + g(i, j) * x.c[std::size_t(j + 1)]);
        out.c[std::size_t(i + 1)] = t;
    }
    return out;
}

template <class S>
bool is_octonion_automorphism(const Mat7<S>& g) {
    using O = Octonion<S>;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            const O lhs = rotate_im(g, O(im(O(O::unit(i) * O::unit(j)))));
            const O rhs = O(rotate_im(g, O::unit(i)) * rotate_im(g, O::unit(j)));
            // Products of imaginary units may have a real part; compare the
            // imaginary parts (the real part is fixed by orthogonality).
            if (!(O(im(lhs)) == O(im(rhs)))) return false;
        }
    return true;
}

Coeffs<double> random_geometric(SampleRng& rng) {
    Coeffs<double> c;
    for (int i = 0; i < 12; ++i) c(i, 0) = rng.uniform(-1.0, 1.0);
    return c;
}

}  // namespace

TEST_CASE("parameter basis consists of independent derivations", "[engine]") {
    const auto basis = g2_param_basis<Rat>();
    REQUIRE(basis.size() == 14);
    for (const auto& m : basis) CHECK(is_derivation(m));

    // Pairwise q0-Gram matrix must be nonsingular for linear independence.
    Mat<Rat, 14, 14> gram;
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j)
            gram(i, j) = q0_form(basis[std::size_t(i)], basis[std::size_t(j)]);
    CHECK_NOTHROW(inverse(gram));
}

TEST_CASE("derivations close under the commutator", "[engine]") {
    const auto basis = g2_param_basis<Rat>();
    for (int i = 0; i < 14; ++i)
        for (int j = i + 1; j < 14; ++j)
            CHECK(is_derivation(commutator(basis[std::size_t(i)], basis[std::size_t(j)])));
}

TEST_CASE("structure table reproduces matrix commutators", "[engine]") {
    using S = R23;
    const auto& ctx = BasisContext<S>::instance();
    auto q = [](long n, long d) {
        return scalar_traits<S>::from_ratio(n, d);
    };
    SampleRng rng(21, 0);
    for (int trial = 0; trial < 10; ++trial) {
        Coeffs<S> u, v;
        // Slot 0/1 carry opposite copies of the circle direction; leave them
        // out so materialize is injective on the tested span.
        for (int i = 2; i < 15; ++i) {
            u(i, 0) = q(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
            v(i, 0) = q(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
        }
        u(0, 0) = q(rng.uniform_int(-3, 3), 2);
        v(0, 0) = q(rng.uniform_int(-3, 3), 2);
        const Mat7<S> lhs = ctx.materialize(ctx.bracket(u, v));
        const Mat7<S> rhs = commutator(ctx.materialize(u), ctx.materialize(v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("geometric frame is Q-orthonormal for every k", "[engine]") {
    using S = R23;
    const auto& ctx = BasisContext<S>::instance();
    for (long kv : {1L, 5L}) {
        const S k = scalar_traits<S>::from_long(kv);
        for (int i = 0; i < 12; ++i)
            for (int j = i; j < 12; ++j) {
                const S q = q_pair(k, ctx.element(basis_vector<S>(i), k),
                                   ctx.element(basis_vector<S>(j), k));
                CHECK(q == (i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero()));
            }
    }
}

TEST_CASE("bracket table matches the printed identities", "[engine]") {
    using S = R23;
    const auto& ctx = BasisContext<S>::instance();
    const S s3 = scalar_traits<S>::sqrt3();
    const S s2 = scalar_traits<S>::sqrt2();
    const S s6 = scalar_traits<S>::sqrt6();

    // [Y1, E1] = sqrt3 E2
    const Coeffs<S> ye = ctx.bracket(basis_vector<S>(2), basis_vector<S>(4));
    CHECK(Coeffs<S>(ye - s3 * basis_vector<S>(5)) == Coeffs<S>{});

    // [E1, F4] = -(1/sqrt2)(X1 - X2)
    const Coeffs<S> ef = ctx.bracket(basis_vector<S>(4), basis_vector<S>(11));
    const Coeffs<S> mixed = Coeffs<S>(basis_vector<S>(0) - basis_vector<S>(1));
    CHECK(Coeffs<S>(ef + inverse(s2) * mixed) == Coeffs<S>{});

    // [F1, F4] projects to (sqrt6/3)(X1 - X2) on the geometric directions.
    const Coeffs<S> ff =
        project_geometric(ctx.bracket(basis_vector<S>(8), basis_vector<S>(11)));
    CHECK(Coeffs<S>(ff - S(s6 * scalar_traits<S>::from_ratio(1, 3)) * mixed) ==
          Coeffs<S>{});
}

TEST_CASE("reflections act as Q-isometries", "[engine]") {
    // The Weyl elements have integer matrices, so the invariance of the
    // pairing under conjugation is decidable exactly.
    using S = R23;
    const auto& ctx = BasisContext<S>::instance();
    SampleRng rng(31, 1);
    for (long kv : {1L, 3L, 5L}) {
        const S k = scalar_traits<S>::from_long(kv);
        const auto wm = weyl_minus<S>(kv);
        const auto wp = weyl_plus<S>();
        for (int trial = 0; trial < 5; ++trial) {
            Coeffs<S> u, v;
            for (int i = 0; i < 12; ++i) {
                u(i, 0) = scalar_traits<S>::from_ratio(rng.uniform_int(-3, 3), 2);
                v(i, 0) = scalar_traits<S>::from_ratio(rng.uniform_int(-3, 3), 2);
            }
            const auto eu = ctx.element(u, k), ev = ctx.element(v, k);
            CHECK(q_pair(k, adjoint(wm, eu), adjoint(wm, ev)) == q_pair(k, eu, ev));
            CHECK(q_pair(k, adjoint(wp, eu), adjoint(wp, ev)) == q_pair(k, eu, ev));
        }
    }
}

TEST_CASE("weyl matrices are automorphisms", "[engine]") {
    CHECK(is_octonion_automorphism(weyl_minus<Rat>(1).g));
    CHECK(is_octonion_automorphism(weyl_minus<Rat>(3).g));
    CHECK(is_octonion_automorphism(weyl_plus<Rat>().g));
}

TEST_CASE("metric builder rejects indefinite profiles", "[engine]") {
    MetricProfile<Rat> m;
    m.f1sq = {rat(1), rat(0)};
    m.f2sq = {rat(1), rat(0)};
    m.h1sq = {rat(1), rat(0)};
    m.h2sq = {rat(1), rat(0)};
    m.a1sq = {rat(1), rat(0)};
    m.a2sq = {rat(1), rat(0)};
    CHECK_NOTHROW(build_P(m));

    // An off-diagonal coupling exceeding the diagonal breaks positivity.
    m.f12 = {rat(2), rat(0)};
    CHECK_THROWS_WITH(build_P(m), "inadmissible metric");
}

TEST_CASE("metric operators invert exactly", "[engine]") {
    MetricProfile<Rat> m;
    m.f1sq = {rat(2), rat(1, 3)};
    m.f2sq = {rat(3, 2), rat(-1, 4)};
    m.f12 = {rat(1, 4), rat(1, 7)};
    m.h1sq = {rat(1), rat(0)};
    m.h2sq = {rat(5, 4), rat(1, 9)};
    m.h12 = {rat(1, 8), rat(0)};
    m.a1sq = {rat(4, 5), rat(-1, 6)};
    m.a2sq = {rat(7, 6), rat(1, 5)};
    m.a12 = {rat(-1, 5), rat(1, 11)};
    m.b12 = {rat(1, 9), rat(2, 13)};
    const auto ops = metric_operators(m);
    const auto prod = ops.P * ops.Pinv;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) CHECK(prod(i, j) == (i == j ? rat(1) : rat(0)));
}

TEST_CASE("curvature tensor has the algebraic symmetries", "[engine]") {
    SampleRng rng(1001, 2);
    const auto p = random_reduced_profile(rng);
    const auto ops = metric_operators(p.lift());
    for (int trial = 0; trial < 4; ++trial) {
        SampleRng vr(1002, std::uint64_t(trial));
        const auto x = random_geometric(vr), y = random_geometric(vr),
                   z = random_geometric(vr), w = random_geometric(vr);
        const double rxyzw = curvature_full(ops, x, y, z, w);
        CHECK(curvature_full(ops, y, x, z, w) == Catch::Approx(-rxyzw).margin(1e-9));
        CHECK(curvature_full(ops, x, y, w, z) == Catch::Approx(-rxyzw).margin(1e-9));
        CHECK(curvature_full(ops, z, w, x, y) == Catch::Approx(rxyzw).margin(1e-9));
        const double bianchi = rxyzw + curvature_full(ops, y, z, x, w) +
                               curvature_full(ops, z, x, y, w);
        CHECK(bianchi == Catch::Approx(0.0).margin(1e-9));
        CHECK(curvature_full(ops, x, y, y, x) ==
              Catch::Approx(curvature_special(ops, x, y, y)).margin(1e-9));
    }
}

TEST_CASE("check_tables_roundtrip", "[engine]") {
    const auto builtin = CurvatureTableSet::builtin();
    const std::string text = builtin.serialize();
    const auto reparsed = CurvatureTableSet::parse(text);
    CHECK(reparsed.serialize() == text);

    // The shipped data file is the serialization of the compiled-in tables;
    // regenerate it with the table script if this ever diverges.
    std::ifstream in(G2COHOM_SOURCE_DIR "/data/curvature_tables.txt");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == text);
}

TEST_CASE("table parser rejects malformed input", "[engine]") {
    CHECK_THROWS_AS(CurvatureTableSet::parse("table R1 bogus\n"), std::runtime_error);
    CHECK_THROWS_AS(CurvatureTableSet::parse("1 0 0 0 0 0 0 1/2 0 0\n"),
                    std::runtime_error);
    CHECK_THROWS_AS(CurvatureTableSet::parse("table R1 plain\n0 0 0\n"),
                    std::runtime_error);
    // A complete header set with no rows parses (tables may be empty), but a
    // missing table must be reported.
    CHECK_THROWS_WITH(CurvatureTableSet::parse("table R1 plain\n"), "missing table R2");
}

TEST_CASE("closed forms agree with the engine", "[engine]") {
    const auto ts = CurvatureTableSet::builtin();
    for (const auto id : {ClosedFormId::A1_YE, ClosedFormId::A2_XY, ClosedFormId::R7}) {
        const auto rep = compare_closed_form(ts, id, 5, "float", 42);
        INFO(closed_form_name(id));
        CHECK(rep.pass());
        CHECK(rep.max_rel_err <= 1e-9);
    }
    const auto exact = compare_closed_form(ts, ClosedFormId::R4, 0, "exact", 42);
    CHECK(exact.pass());
}

TEST_CASE("altered table coefficients are named in the report", "[engine]") {
    auto ts = CurvatureTableSet::builtin();
    auto& row = ts.tables[3].rows.at(1);
    row.q = Rat(row.q + rat(1, 12));
    const auto rep = compare_closed_form(ts, ClosedFormId::R4, 0, "exact", 42);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.failures.front().detail.find("missing or altered") != std::string::npos);

    const auto vague = detail::diff_against_builtin(ts, 3);
    CHECK(vague.find("monomial") != std::string::npos);
    CHECK(detail::diff_against_builtin(CurvatureTableSet::builtin(), 3) ==
          "rows match certified data; engine disagreement is elsewhere");
}

TEST_CASE("tangential planes read the sign off the profile", "[engine]") {
    CHECK(tangential_curvature(1.5, -2.0) == 3.0);
    CHECK(tangential_curvature(1.5, 2.0) == -3.0);
}
