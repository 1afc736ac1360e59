#pragma once

// Scalar tower used throughout the library.
//
//   Rat                 exact rationals (GMP mpq_class)
//   SurdExt<B, N>       B-linear combinations a + b*sqrt(N)
//   QuadRat             a + b*gam with gam^2 = gsq, a runtime rational square
//
// Composites used elsewhere:
//   R3  = SurdExt<Rat, 3>          Q(sqrt3)
//   R23 = SurdExt<R3, 2>           Q(sqrt2, sqrt3), enough for the bracket
//                                  constants and the exact curvature engine
//   QG3 = SurdExt<QuadRat, 3>      Q(gam)(sqrt3), enough for the quartic and
//                                  coefficient identities
//
// All types are plain values with field operations; sign_of() decides signs
// exactly by recursive squaring (a + b*sqrt(N) has the sign of a when a and b
// agree, otherwise the sign of a^2 - N b^2 transferred through a).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace g2cohom {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("non-invertible");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& x) { return sgn(x); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline double to_double(const Rat& x) { return x.get_d(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

inline int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline bool is_zero(double x) { return x == 0.0; }
inline double to_double(double x) { return x; }

inline int sign_of(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline bool is_zero(long long x) { return x == 0; }
inline double to_double(long long x) { return double(x); }

// ---------------------------------------------------------------------------
// SurdExt<B, N>: the quadratic extension B[sqrt(N)] for a compile-time N.
// ---------------------------------------------------------------------------

template <class B, int N>
struct SurdExt {
    static_assert(N > 1, "radicand must exceed 1");
    B a{};  // rational part (over B)
    B b{};  // coefficient of sqrt(N)

    SurdExt() = default;
    explicit SurdExt(long n) : a(B(n)), b() {}
    SurdExt(B a_, B b_) : a(std::move(a_)), b(std::move(b_)) {}

    static SurdExt surd() { return SurdExt(B(0), B(1)); }

    friend SurdExt operator+(const SurdExt& x, const SurdExt& y) {
        return SurdExt(B(x.a + y.a), B(x.b + y.b));
    }
    friend SurdExt operator-(const SurdExt& x, const SurdExt& y) {
        return SurdExt(B(x.a - y.a), B(x.b - y.b));
    }
    friend SurdExt operator-(const SurdExt& x) { return SurdExt(B(-x.a), B(-x.b)); }
    friend SurdExt operator*(const SurdExt& x, const SurdExt& y) {
        return SurdExt(B(x.a * y.a + B(N) * (x.b * y.b)),
                       B(x.a * y.b + x.b * y.a));
    }
    SurdExt& operator+=(const SurdExt& y) { *this = *this + y; return *this; }
    SurdExt& operator-=(const SurdExt& y) { *this = *this - y; return *this; }
    SurdExt& operator*=(const SurdExt& y) { *this = *this * y; return *this; }

    friend bool operator==(const SurdExt& x, const SurdExt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const SurdExt& x, const SurdExt& y) { return !(x == y); }
};

template <class B, int N>
bool is_zero(const SurdExt<B, N>& x) {
    return is_zero(x.a) && is_zero(x.b);
}

template <class B, int N>
int sign_of(const SurdExt<B, N>& x) {
    const int sa = sign_of(x.a);
    const int sb = sign_of(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    return sa * sign_of(B(x.a * x.a - B(N) * (x.b * x.b)));
}

template <class B, int N>
double to_double(const SurdExt<B, N>& x) {
    // sqrt over a double is fine here: conversions are for reporting only.
    return to_double(x.a) + to_double(x.b) * std::sqrt(double(N));
}

inline Rat inverse(const Rat& x) {
    if (sgn(x) == 0) throw std::domain_error("non-invertible");
    return Rat(1) / x;
}

inline double inverse(double x) {
    if (x == 0.0) throw std::domain_error("non-invertible");
    return 1.0 / x;
}

template <class B, int N>
SurdExt<B, N> inverse(const SurdExt<B, N>& x) {
    if (is_zero(x)) throw std::domain_error("non-invertible");
    const B norm(x.a * x.a - B(N) * (x.b * x.b));
    if (is_zero(norm)) throw std::domain_error("non-invertible");
    const B inv_norm = inverse(norm);
    return SurdExt<B, N>(B(x.a * inv_norm), B(-x.b * inv_norm));
}

template <class B, int N>
SurdExt<B, N> operator/(const SurdExt<B, N>& x, const SurdExt<B, N>& y) {
    return x * inverse(y);
}

template <class B, int N>
std::string to_string(const SurdExt<B, N>& x) {
    return "(" + to_string(x.a) + ") + (" + to_string(x.b) + ")*sqrt(" +
           std::to_string(N) + ")";
}

using R3 = SurdExt<Rat, 3>;
using R23 = SurdExt<R3, 2>;

// ---------------------------------------------------------------------------
// QuadRat: a + b*gam where gam = sqrt(gsq) for a runtime rational gsq >= 0.
//
// Elements with no radical part carry gsq = 0 and act as wildcards: they
// combine with any radicand. Mixing two distinct nonzero radicands is a
// logic error (one global gam per computation). When gsq = 0 the radical
// itself vanishes, so b folds to 0 -- this covers the degenerate parameter
// where gam = 0 exactly.
// ---------------------------------------------------------------------------

struct QuadRat {
    Rat a{0};
    Rat b{0};
    Rat gsq{0};

    QuadRat() = default;
    explicit QuadRat(long n) : a(n) {}
    explicit QuadRat(Rat a_) : a(std::move(a_)) {}
    QuadRat(Rat a_, Rat b_, Rat gsq_)
        : a(std::move(a_)), b(std::move(b_)), gsq(std::move(gsq_)) {
        normalize();
    }

    void normalize() {
        if (sgn(gsq) < 0) throw std::domain_error("negative radicand");
        if (sgn(gsq) == 0) b = 0;
        if (sgn(b) == 0) gsq = 0;
    }

    static Rat merged(const Rat& g1, const Rat& g2) {
        if (sgn(g1) == 0) return g2;
        if (sgn(g2) == 0) return g1;
        if (g1 != g2) throw std::logic_error("mixed radicands in QuadRat");
        return g1;
    }

    friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
        return QuadRat(Rat(x.a + y.a), Rat(x.b + y.b), merged(x.gsq, y.gsq));
    }
    friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
        return QuadRat(Rat(x.a - y.a), Rat(x.b - y.b), merged(x.gsq, y.gsq));
    }
    friend QuadRat operator-(const QuadRat& x) {
        return QuadRat(Rat(-x.a), Rat(-x.b), x.gsq);
    }
    friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
        const Rat g = merged(x.gsq, y.gsq);
        return QuadRat(Rat(x.a * y.a + x.b * y.b * g),
                       Rat(x.a * y.b + x.b * y.a), g);
    }
    QuadRat& operator+=(const QuadRat& y) { *this = *this + y; return *this; }
    QuadRat& operator-=(const QuadRat& y) { *this = *this - y; return *this; }
    QuadRat& operator*=(const QuadRat& y) { *this = *this * y; return *this; }

    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a == y.a && x.b == y.b && x.gsq == y.gsq;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
};

inline bool is_zero(const QuadRat& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

inline int sign_of(const QuadRat& x) {
    const int sa = sgn(x.a);
    const int sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;  // gam > 0 whenever it survives normalization
    if (sa == sb) return sa;
    return sa * sgn(Rat(x.a * x.a - x.b * x.b * x.gsq));
}

inline double to_double(const QuadRat& x) {
    return x.a.get_d() + x.b.get_d() * std::sqrt(x.gsq.get_d());
}

inline QuadRat inverse(const QuadRat& x) {
    if (is_zero(x)) throw std::domain_error("non-invertible");
    const Rat norm(x.a * x.a - x.b * x.b * x.gsq);
    if (sgn(norm) == 0) throw std::domain_error("non-invertible");
    return QuadRat(Rat(x.a / norm), Rat(-x.b / norm), x.gsq);
}

inline QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    return x * inverse(y);
}

inline std::string to_string(const QuadRat& x) {
    return "(" + x.a.get_str() + ") + (" + x.b.get_str() + ")*sqrt(" +
           x.gsq.get_str() + ")";
}

using QG3 = SurdExt<QuadRat, 3>;

// ---------------------------------------------------------------------------
// scalar_traits: uniform construction and constants for generic code.
// ---------------------------------------------------------------------------

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_long(long n) { return double(n); }
    static double from_ratio(long n, long d) { return double(n) / double(d); }
    static double sqrt2() { return std::sqrt(2.0); }
    static double sqrt3() { return std::sqrt(3.0); }
    static double sqrt6() { return std::sqrt(6.0); }
};

// Machine integers: exact as long as every intermediate fits in 64 bits;
// callers are responsible for the range analysis.
template <>
struct scalar_traits<long long> {
    static constexpr bool is_exact = true;
    static long long zero() { return 0; }
    static long long one() { return 1; }
    static long long from_long(long n) { return n; }
};

template <>
struct scalar_traits<Rat> {
    static constexpr bool is_exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_long(long n) { return Rat(n); }
    static Rat from_ratio(long n, long d) { return rat(n, d); }
};

template <>
struct scalar_traits<R3> {
    static constexpr bool is_exact = true;
    static R3 zero() { return R3(0); }
    static R3 one() { return R3(1); }
    static R3 from_long(long n) { return R3(n); }
    static R3 from_ratio(long n, long d) { return R3(rat(n, d), Rat(0)); }
    static R3 sqrt3() { return R3::surd(); }
};

template <>
struct scalar_traits<R23> {
    static constexpr bool is_exact = true;
    static R23 zero() { return R23(0); }
    static R23 one() { return R23(1); }
    static R23 from_long(long n) { return R23(n); }
    static R23 from_ratio(long n, long d) {
        return R23(scalar_traits<R3>::from_ratio(n, d), R3(0));
    }
    static R23 sqrt2() { return R23::surd(); }
    static R23 sqrt3() { return R23(R3::surd(), R3(0)); }
    static R23 sqrt6() { return R23(R3(0), R3::surd()); }
};

template <>
struct scalar_traits<QuadRat> {
    static constexpr bool is_exact = true;
    static QuadRat zero() { return QuadRat(0); }
    static QuadRat one() { return QuadRat(1); }
    static QuadRat from_long(long n) { return QuadRat(n); }
    static QuadRat from_ratio(long n, long d) { return QuadRat(rat(n, d)); }
};

template <>
struct scalar_traits<QG3> {
    static constexpr bool is_exact = true;
    static QG3 zero() { return QG3(0); }
    static QG3 one() { return QG3(1); }
    static QG3 from_long(long n) { return QG3(n); }
    static QG3 from_ratio(long n, long d) {
        return QG3(QuadRat(rat(n, d)), QuadRat(0));
    }
    static QG3 sqrt3() { return QG3::surd(); }
};

// Integer powers with possibly negative exponent (field scalars).
template <class S>
S scalar_pow(S base, int e) {
    if (e < 0) return scalar_pow(inverse(base), -e);
    S out = scalar_traits<S>::one();
    while (e > 0) {
        if (e & 1) out = S(out * base);
        base = S(base * base);
        e >>= 1;
    }
    return out;
}

}  // namespace g2cohom
