// The feasibility pipeline: the vertical-plane determinant p and its window,
// the quartic pair and its critical point, the coefficient-extraction
// identities, the boundary smoothness validator, and the final verdict.
// Oracles: polynomial factorizations evaluated exactly in Q(sqrt3) or
// Q(gamma, sqrt3), closed forms against finite differences, and the printed
// constants rederived from scratch.

#include <catch2/catch_amalgamated.hpp>

#include "g2cohom/obstruction.hpp"
#include "g2cohom/report.hpp"
#include "g2cohom/sampling.hpp"

#include <cmath>

using namespace g2cohom;

namespace {

bool all_pass(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

}  // namespace

TEST_CASE("window map sends the endpoints to the printed alphas", "[obstruction]") {
    // alpha(1/sqrt3) = 3/4, decided in Q(sqrt3).
    const R3 b2(Rat(0), rat(1, 3));  // sqrt3/3 = 1/sqrt3
    CHECK(alpha_of_beta(b2) == R3(rat(3, 4), Rat(0)));

    // alpha(0) = 1 and beta(1, gam=1) = 0 close the loop.
    CHECK(alpha_of_beta(R3(Rat(0), Rat(0))) == R3(Rat(1), Rat(0)));
    CHECK(beta_of_alpha(1.0, 1.0) == 0.0);

    // Outside the admissible window the denominator changes sign.
    CHECK_THROWS_WITH(alpha_of_beta(2.0), "denominator nonpositive");
}

TEST_CASE("vertical determinant matches its factored display", "[obstruction]") {
    // Exact agreement at points of Q(sqrt3), where both sides are closed.
    for (const R3& b : {R3(rat(1, 5), Rat(0)), R3(rat(-1, 10), rat(1, 7)),
                        R3(Rat(0), rat(1, 2))}) {
        CHECK(p_of_beta(b) == p_of_beta_factored(b));
    }
    SampleRng rng(7, 0);
    for (int i = 0; i < 25; ++i) {
        const double b = random_beta(rng);
        CHECK(p_of_beta(b) == Catch::Approx(p_of_beta_factored(b)).margin(1e-11));
    }
}

TEST_CASE("window endpoints carry the closed-form values", "[obstruction]") {
    const auto w = beta_window();
    const double beta1_closed = 7.0 * std::sqrt(3.0) / 3.0 - 2.0 * std::sqrt(39.0) / 3.0;
    CHECK(w.beta1 == Catch::Approx(beta1_closed).margin(1e-12));
    CHECK(std::fabs(p_of_beta(w.beta1)) <= 1e-10);
    CHECK(w.beta2 == Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-15));

    // beta1 is a root of the sextic factor: check it there too, where the
    // rational-function denominator cannot flatter the residual.
    CHECK(std::fabs(p_sextic_poly<double>().eval(beta1_closed)) <= 1e-9);

    const double alpha1 = alpha_of_beta(w.beta1);
    CHECK(alpha1 == Catch::Approx(7.0 / 12.0 + std::sqrt(13.0) / 6.0).margin(1e-10));
}

TEST_CASE("upper endpoint is a triple root of the numerator", "[obstruction]") {
    CHECK(all_pass(beta2_multiplicity_checks()));
}

TEST_CASE("quartic identities hold exactly in the gamma field", "[obstruction]") {
    for (const Rat& alpha : {rat(1), rat(4, 5), rat(9, 8), rat(3, 4), rat(15, 13)}) {
        INFO("alpha = " << to_string(alpha));
        CHECK(all_pass(lemma_quartic_checks(alpha)));
    }
}

TEST_CASE("critical point and closed values agree with direct evaluation",
          "[obstruction]") {
    SampleRng rng(13, 1);
    for (int i = 0; i < 20; ++i) {
        const double alpha = rng.uniform(0.76, 1.18);
        const double gam = gamma_of_alpha(alpha);
        const auto qp = QuarticPsi<double>::make(alpha, gam);
        const double xa = x_alpha(alpha, gam);
        const auto vals = psi_eval(qp, xa);

        // The closed form of psi2 at the critical point.
        CHECK(psi2_at_xalpha_closed(alpha, gam) ==
              Catch::Approx(vals[1]).margin(1e-12));

        // The combined quartic 3 psi1 + 4 psi2 has a double root at x_alpha:
        // value and finite-difference slope both vanish there.
        CHECK(std::fabs(vals[2]) < 1e-12);
        const double h = 1e-6;
        const auto up = psi_eval(qp, xa + h);
        const auto dn = psi_eval(qp, xa - h);
        CHECK(std::fabs((up[2] - dn[2]) / (2.0 * h)) < 1e-5);

        // Second derivative closed form 8/3 - 3/(2 alpha).
        const double fd2 = (up[2] - 2.0 * vals[2] + dn[2]) / (h * h);
        CHECK(psi_second_deriv_closed(alpha) == Catch::Approx(8.0 / 3.0 - 1.5 / alpha)
                                                    .margin(1e-12));
        CHECK(fd2 == Catch::Approx(psi_second_deriv_closed(alpha)).margin(1e-3));
    }
}

TEST_CASE("grid scan finds the positive minimum at the left edge", "[obstruction]") {
    const auto g = psi2_grid_scan();
    CHECK(g.points == 436);
    CHECK(g.min_psi2 > 0.0);
    CHECK(g.alpha_at_min == 0.75);
    // At alpha = 3/4 the quartic degenerates and psi2(x_alpha) = 1/16.
    CHECK(g.min_psi2 == Catch::Approx(1.0 / 16.0).margin(1e-12));
    CHECK(g.max_ratio_residual < 1e-9);
    CHECK_THROWS_AS(psi2_grid_scan(1.0, 0.5), std::domain_error);
}

TEST_CASE("extraction identities hold exactly", "[obstruction]") {
    const auto ts = CurvatureTableSet::builtin();
    for (const Rat& alpha : {rat(1), rat(4, 5), rat(9, 8)}) {
        INFO("alpha = " << to_string(alpha));
        CHECK(all_pass(lemma_extraction_checks(alpha, ts)));
    }
}

TEST_CASE("verdict is infeasible for odd k at least three", "[obstruction]") {
    for (long k : {3L, 5L, 9L}) {
        const auto rep = obstruction_verdict(k);
        CHECK(rep.verdict == "infeasible");
        CHECK(rep.psi2_positive);
        CHECK(rep.chained_bound == 2);
        CHECK(rep.lmax == Catch::Approx(2.0 * std::sqrt(6.0) / 3.0).margin(1e-15));
    }
    const auto r1 = obstruction_verdict(1);
    CHECK(r1.verdict == "no contradiction");

    // Short bound: (8/3) * alpha(beta1), rederived rather than pinned.
    const double alpha1 = 7.0 / 12.0 + std::sqrt(13.0) / 6.0;
    CHECK(r1.short_bound_max == Catch::Approx((8.0 / 3.0) * alpha1).margin(1e-10));

    CHECK_THROWS_WITH(obstruction_verdict(2), "k must be a positive odd integer");
    CHECK_THROWS_WITH(obstruction_verdict(0), "k must be a positive odd integer");
    CHECK_THROWS_WITH(obstruction_verdict(-3), "k must be a positive odd integer");
}

TEST_CASE("clean boundary data passes the smoothness validator", "[obstruction]") {
    SampleRng rng(17, 2);
    for (int i = 0; i < 10; ++i) {
        const double beta = random_beta(rng);
        const long k = 2 * rng.uniform_int(0, 3) + 1;
        const auto b = reduced_boundary_data(beta, k, rng.uniform(0.5, 1.5),
                                             rng.uniform(0.5, 1.5), rng.uniform(0.5, 2.0));
        const auto violations = smoothness_check(b);
        INFO("beta = " << beta << ", k = " << k);
        CHECK(violations.empty());
    }
}

TEST_CASE("each closing condition is enforced separately", "[obstruction]") {
    const auto base = reduced_boundary_data(0.25, 3);
    auto first_message = [&](BoundaryData b) {
        const auto v = smoothness_check(b);
        return v.empty() ? std::string() : v.front();
    };

    auto b = base;
    b.f1.d0 *= 2.0;
    CHECK(first_message(b).find("f1'(0) = 4/(k sqrt6)") != std::string::npos);

    b = base;
    b.h2.vL += 0.125;
    CHECK(first_message(b).find("h2(L) = a2(L)") != std::string::npos);

    b = base;
    b.a12.v0 += 0.1;
    CHECK(first_message(b).find("a12(0) = (sqrt3/2)(a1(0)^2 - a2(0)^2)") !=
          std::string::npos);

    b = base;
    b.k = 4;
    CHECK(first_message(b) == "k must be a positive odd integer");

    b = base;
    b.a1.vL = 0.3;
    CHECK(first_message(b).find("a1(L)") != std::string::npos);
}

TEST_CASE("profile reduction enforces the window and positivity", "[obstruction]") {
    const Jet<double> unit{1.0, 0.0};
    const auto p = reduce_profile(0.1, {0.9, -0.05}, {0.2, 0.5}, unit, {0.0, 0.0}, unit);
    CHECK(p.alpha == Catch::Approx(alpha_of_beta(0.1)).margin(1e-15));
    CHECK(p.xi.v == Catch::Approx(p.alpha - 0.9).margin(1e-15));
    CHECK(p.xi.d == Catch::Approx(0.05).margin(1e-15));

    CHECK_THROWS_WITH(reduce_profile(0.1, {-0.5, 0.0}, unit, unit, {0.0, 0.0}, unit),
                      "inadmissible metric");
    CHECK_THROWS_WITH(reduce_profile(2.0, {0.5, 0.0}, unit, unit, {0.0, 0.0}, unit),
                      "denominator nonpositive");
}

TEST_CASE("scan rows cover the window in both parameters", "[obstruction]") {
    const auto beta_rows = scan_beta(1e-2);
    REQUIRE(!beta_rows.empty());
    const auto w = beta_window();
    CHECK(beta_rows.front().parameter == Catch::Approx(w.beta1).margin(1e-12));
    CHECK(beta_rows.back().parameter == Catch::Approx(w.beta2).margin(1e-12));
    for (const auto& r : beta_rows) {
        CHECK(r.alpha >= 0.75 - 1e-12);
        CHECK(r.psi2_at_xalpha > 0.0);
    }

    const auto alpha_rows = scan_alpha(1e-2);
    REQUIRE(!alpha_rows.empty());
    CHECK(alpha_rows.front().parameter == Catch::Approx(0.75).margin(1e-12));

    const std::string csv = scan_csv(beta_rows);
    CHECK(csv.rfind("parameter,alpha,psi2_at_xalpha,p_beta,bound", 0) == 0);
}
