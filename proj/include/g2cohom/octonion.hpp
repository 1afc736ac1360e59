#pragma once

// Octonion arithmetic over the basis e0..e7 (e0 = 1). The multiplication
// table is generated at compile time from seven oriented triples; each triple
// (a,b,c) encodes e_a e_b = e_c together with its cyclic and antisymmetric
// companions, and every imaginary unit squares to -1.

#include "g2cohom/linalg.hpp"
#include "g2cohom/scalar.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

namespace g2cohom {

inline constexpr std::array<std::array<int, 3>, 7> kOrientedTriples{{
    {1, 2, 3},
    {1, 4, 5},
    {1, 7, 6},
    {2, 4, 6},
    {2, 5, 7},
    {3, 4, 7},
    {3, 6, 5},
}};

struct TableEntry {
    int sign;
    int index;
};

namespace detail {

constexpr std::array<std::array<TableEntry, 8>, 8> make_mul_table() {
    std::array<std::array<TableEntry, 8>, 8> t{};
    for (int j = 0; j < 8; ++j) {
        t[0][j] = {1, j};
        t[j][0] = {1, j};
    }
    for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
    for (const auto& tr : kOrientedTriples) {
        const int a = tr[0], b = tr[1], c = tr[2];
        t[a][b] = {1, c};
        t[b][a] = {-1, c};
        t[b][c] = {1, a};
        t[c][b] = {-1, a};
        t[c][a] = {1, b};
        t[a][c] = {-1, b};
    }
    return t;
}

}  // namespace detail

inline constexpr auto kMulTable = detail::make_mul_table();

template <class S>
struct Octonion {
    std::array<S, 8> c;

    Octonion() { c.fill(scalar_traits<S>::zero()); }

    static Octonion unit(int i) {
        Octonion o;
        o.c[std::size_t(i)] = scalar_traits<S>::one();
        return o;
    }
    static Octonion real(const S& x) {
        Octonion o;
        o.c[0] = x;
        return o;
    }

    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.c[i] = S(x.c[i] + y.c[i]);
        return o;
    }
    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.c[i] = S(x.c[i] - y.c[i]);
        return o;
    }
    friend Octonion operator-(const Octonion& x) {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.c[i] = S(-x.c[i]);
        return o;
    }
    friend Octonion operator*(const S& s, const Octonion& x) {
        Octonion o;
        for (int i = 0; i < 8; ++i) o.c[i] = S(s * x.c[i]);
        return o;
    }
    friend Octonion operator*(const Octonion& x, const Octonion& y) {
        Octonion o;
        for (int i = 0; i < 8; ++i) {
            if (is_zero(x.c[i])) continue;
            for (int j = 0; j < 8; ++j) {
                if (is_zero(y.c[j])) continue;
                const TableEntry e = kMulTable[std::size_t(i)][std::size_t(j)];
                const S term = S(x.c[i] * y.c[j]);
                o.c[std::size_t(e.index)] =
                    e.sign > 0 ? S(o.c[std::size_t(e.index)] + term)
                               : S(o.c[std::size_t(e.index)] - term);
            }
        }
        return o;
    }

    friend bool operator==(const Octonion& x, const Octonion& y) {
        for (int i = 0; i < 8; ++i)
            if (!(x.c[i] == y.c[i])) return false;
        return true;
    }
    friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }
};

template <class S>
bool is_zero(const Octonion<S>& x) {
    for (const auto& e : x.c)
        if (!is_zero(e)) return false;
    return true;
}

template <class S>
Octonion<S> conj(const Octonion<S>& x) {
    Octonion<S> o = -x;
    o.c[0] = x.c[0];
    return o;
}

template <class S>
S norm_sq(const Octonion<S>& x) {
    S t = scalar_traits<S>::zero();
    for (const auto& e : x.c) t = S(t + e * e);
    return t;
}

template <class S>
S re(const Octonion<S>& x) {
    return x.c[0];
}

template <class S>
Octonion<S> im(const Octonion<S>& x) {
    Octonion<S> o = x;
    o.c[0] = scalar_traits<S>::zero();
    return o;
}

template <class S>
Octonion<S> inverse(const Octonion<S>& x) {
    const S n = norm_sq(x);
    if (is_zero(n)) throw std::domain_error("non-invertible");
    return S(inverse(n)) * conj(x);
}

inline double abs_oct(const Octonion<double>& x) { return std::sqrt(norm_sq(x)); }

// (x/|x|)^p for real exponent p, via the polar form r(cos phi + sin phi w)
// with w a unit imaginary direction. A real octonion has empty polar data;
// integer exponents of -1 are resolved by parity, anything else is rejected.
inline Octonion<double> unit_power(const Octonion<double>& x, double p) {
    const double r = abs_oct(x);
    if (r == 0.0) throw std::domain_error("non-invertible");
    const Octonion<double> imx = im(x);
    const double s = abs_oct(imx);
    constexpr double kRealCut = 1e-300;
    if (s < kRealCut * (1.0 + r)) {
        if (x.c[0] > 0.0) return Octonion<double>::real(1.0);
        const double ip = std::round(p);
        if (std::fabs(p - ip) > 1e-12)
            throw std::domain_error("non-invertible");
        const long n = static_cast<long>(ip);
        return Octonion<double>::real((n % 2 == 0) ? 1.0 : -1.0);
    }
    const double phi = std::atan2(s, x.c[0]);
    const Octonion<double> w = (1.0 / s) * imx;
    Octonion<double> out = std::sin(p * phi) * w;
    out.c[0] += std::cos(p * phi);
    return out;
}

// g on Im O, extended by g(1) = 1, is an algebra automorphism iff it respects
// all products of imaginary basis units.
template <class S>
bool is_automorphism(const Mat<S, 7, 7>& g, double tol = 0.0) {
    std::array<Octonion<S>, 7> img;
    for (int j = 0; j < 7; ++j) {
        Octonion<S> o;
        for (int i = 0; i < 7; ++i) o.c[std::size_t(i + 1)] = g(i, j);
        img[std::size_t(j)] = o;
    }
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
            const TableEntry e = kMulTable[std::size_t(i + 1)][std::size_t(j + 1)];
            Octonion<S> want;
            if (e.index == 0) {
                want.c[0] = e.sign > 0 ? scalar_traits<S>::one()
                                       : S(-scalar_traits<S>::one());
            } else {
                want = e.sign > 0 ? img[std::size_t(e.index - 1)]
                                  : -img[std::size_t(e.index - 1)];
            }
            const Octonion<S> got = img[std::size_t(i)] * img[std::size_t(j)];
            const Octonion<S> diff = got - want;
            if (tol > 0.0) {
                for (const auto& d : diff.c)
                    if (std::fabs(to_double(d)) > tol) return false;
            } else if (!is_zero(diff)) {
                return false;
            }
        }
    }
    return true;
}

// Canonical text rendering of the signed table; the FNV-1a hash of this
// string stamps every report so results are tied to one fixed table.
inline std::string mul_table_text() {
    std::string out;
    for (int i = 0; i < 8; ++i) {
        out += "e" + std::to_string(i) + ":";
        for (int j = 0; j < 8; ++j) {
            const TableEntry e = kMulTable[std::size_t(i)][std::size_t(j)];
            out += (e.sign > 0 ? " +e" : " -e") + std::to_string(e.index);
        }
        out += "\n";
    }
    return out;
}

inline std::uint64_t mul_table_hash() {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char ch : mul_table_text()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace g2cohom
