#pragma once

// Deterministic sampling. Every sample index gets its own generator seeded
// from (seed, index), so batch runs produce identical draws regardless of
// evaluation order or worker count. Uniform doubles are built from raw
// 64-bit output (not std distributions) to keep streams fully specified.

#include "g2cohom/g2.hpp"
#include "g2cohom/linalg.hpp"
#include "g2cohom/metric.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace g2cohom {

class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        gen_.seed(seq);
    }

    std::uint64_t raw() { return gen_(); }

    double unit() { return double(raw() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    long uniform_int(long lo, long hi) {  // inclusive bounds
        return lo + long(raw() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::mt19937_64 gen_;
};

// The admissible beta window (alpha stays positive strictly inside it).
inline double beta_window_lo() { return -1.0 / std::sqrt(3.0); }
inline double beta_window_hi() { return std::sqrt(3.0); }

inline double random_beta(SampleRng& rng) {
    const double margin = 0.02;
    return rng.uniform(beta_window_lo() + margin, beta_window_hi() - margin);
}

inline double alpha_of_beta_f(double b) {
    const double r3 = std::sqrt(3.0);
    const double den = r3 * (1.0 - b * b) + 2.0 * b;
    if (den <= 0.0) throw std::domain_error("denominator nonpositive");
    return r3 / den;
}

// Admissible random reduced profile: f1, f2 in (0.1, 2), |f12| < 0.9 f1 f2,
// xi in (0, 0.9 alpha), derivative fields in (-1, 1); rejection-sample until
// the assembled endomorphism is positive definite.
inline ReducedProfile<double> random_reduced_profile(SampleRng& rng, double beta,
                                                     long k = 1) {
    const double alpha = alpha_of_beta_f(beta);
    for (;;) {
        const double f1 = rng.uniform(0.1, 2.0);
        const double f2 = rng.uniform(0.1, 2.0);
        const double f12 = rng.uniform(-0.9, 0.9) * f1 * f2;
        const double f1p = rng.uniform(-1.0, 1.0);
        const double f2p = rng.uniform(-1.0, 1.0);
        const double f12p = rng.uniform(-1.0, 1.0);
        const double xi = rng.uniform(0.0, 0.9 * alpha);
        const double xip = rng.uniform(-1.0, 1.0);
        const double h1 = rng.uniform(0.3, 1.0);

        ReducedProfile<double> p;
        p.beta = beta;
        p.alpha = alpha;
        const double disc = alpha * (4.0 * alpha - 3.0);
        p.gam = disc >= 0.0 ? std::sqrt(disc) : 0.0;
        p.xi = {xi, xip};
        p.f1sq = {f1 * f1, 2.0 * f1 * f1p};
        p.f2sq = {f2 * f2, 2.0 * f2 * f2p};
        p.f12 = {f12, f12p};
        p.h1sq = {h1, 0.0};
        p.k = k;
        try {
            build_P(p.lift());
        } catch (const std::domain_error&) {
            continue;
        }
        return p;
    }
}

inline ReducedProfile<double> random_reduced_profile(SampleRng& rng, long k = 1) {
    return random_reduced_profile(rng, random_beta(rng), k);
}

// Random element of the automorphism group: exponential of a random
// derivation (coefficients in (-1, 1) over the 14 parameter directions).
inline Mat7<double> random_g2_element(SampleRng& rng, double scale = 1.0) {
    G2Params<double> p;
    p.a = scale * rng.uniform(-1.0, 1.0);
    p.b = scale * rng.uniform(-1.0, 1.0);
    for (int i = 0; i < 6; ++i) {
        p.x[std::size_t(i)] = scale * rng.uniform(-1.0, 1.0);
        p.y[std::size_t(i)] = scale * rng.uniform(-1.0, 1.0);
    }
    return expm(g2_matrix(p));
}

inline Octonion<double> random_octonion(SampleRng& rng, double scale = 2.0) {
    Octonion<double> o;
    for (int i = 0; i < 8; ++i) o.c[std::size_t(i)] = rng.uniform(-scale, scale);
    return o;
}

inline Octonion<Rat> random_rational_octonion(SampleRng& rng, long denom = 16) {
    Octonion<Rat> o;
    for (int i = 0; i < 8; ++i)
        o.c[std::size_t(i)] = rat(rng.uniform_int(-24, 24), denom);
    return o;
}

}  // namespace g2cohom
