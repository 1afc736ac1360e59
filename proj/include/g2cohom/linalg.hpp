#pragma once

// Fixed-size dense matrices over any scalar from scalar.hpp. Dimensions here
// are tiny (at most 15x15), so everything is a plain value type with
// Gauss-Jordan inversion; no external linear-algebra dependency is warranted.

#include "g2cohom/scalar.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace g2cohom {

template <class S, int Rows, int Cols>
struct Mat {
    static_assert(Rows > 0 && Cols > 0);
    std::array<S, std::size_t(Rows) * Cols> v;

    Mat() { v.fill(scalar_traits<S>::zero()); }

    S& operator()(int i, int j) { return v[std::size_t(i) * Cols + j]; }
    const S& operator()(int i, int j) const { return v[std::size_t(i) * Cols + j]; }

    static Mat zero() { return Mat(); }

    static Mat identity()
        requires(Rows == Cols)
    {
        Mat m;
        for (int i = 0; i < Rows; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat m;
        for (std::size_t i = 0; i < x.v.size(); ++i) m.v[i] = S(x.v[i] + y.v[i]);
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat m;
        for (std::size_t i = 0; i < x.v.size(); ++i) m.v[i] = S(x.v[i] - y.v[i]);
        return m;
    }
    friend Mat operator-(const Mat& x) {
        Mat m;
        for (std::size_t i = 0; i < x.v.size(); ++i) m.v[i] = S(-x.v[i]);
        return m;
    }
    friend Mat operator*(const S& c, const Mat& x) {
        Mat m;
        for (std::size_t i = 0; i < x.v.size(); ++i) m.v[i] = S(c * x.v[i]);
        return m;
    }
    Mat& operator+=(const Mat& y) { *this = *this + y; return *this; }
    Mat& operator-=(const Mat& y) { *this = *this - y; return *this; }

    friend bool operator==(const Mat& x, const Mat& y) {
        for (std::size_t i = 0; i < x.v.size(); ++i)
            if (!(x.v[i] == y.v[i])) return false;
        return true;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

template <class S, int R1, int C1, int C2>
Mat<S, R1, C2> operator*(const Mat<S, R1, C1>& x, const Mat<S, C1, C2>& y) {
    Mat<S, R1, C2> m;
    for (int i = 0; i < R1; ++i)
        for (int k = 0; k < C1; ++k) {
            const S& xik = x(i, k);
            if (is_zero(xik)) continue;
            for (int j = 0; j < C2; ++j) m(i, j) = S(m(i, j) + xik * y(k, j));
        }
    return m;
}

template <class S, int R, int C>
Mat<S, C, R> transpose(const Mat<S, R, C>& x) {
    Mat<S, C, R> m;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) m(j, i) = x(i, j);
    return m;
}

template <class S, int N>
S trace(const Mat<S, N, N>& x) {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < N; ++i) t = S(t + x(i, i));
    return t;
}

template <class S, int N>
Mat<S, N, N> commutator(const Mat<S, N, N>& x, const Mat<S, N, N>& y) {
    return x * y - y * x;
}

template <class S, int R, int C>
bool all_zero(const Mat<S, R, C>& x) {
    for (const auto& e : x.v)
        if (!is_zero(e)) return false;
    return true;
}

template <class S, int R, int C>
double max_abs(const Mat<S, R, C>& x) {
    double m = 0.0;
    for (const auto& e : x.v) m = std::max(m, std::fabs(to_double(e)));
    return m;
}

// Gauss-Jordan inverse. Pivots are chosen by double magnitude, which keeps
// float mode stable; in exact mode any nonzero pivot is equally valid.
template <class S, int N>
Mat<S, N, N> inverse(const Mat<S, N, N>& x) {
    Mat<S, N, N> a = x;
    Mat<S, N, N> inv = Mat<S, N, N>::identity();
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        double best = 0.0;
        for (int r = col; r < N; ++r) {
            if (is_zero(a(r, col))) continue;
            const double w = std::fabs(to_double(a(r, col)));
            if (pivot < 0 || w > best) {
                pivot = r;
                best = w;
            }
        }
        if (pivot < 0) throw std::domain_error("non-invertible");
        if (pivot != col) {
            for (int j = 0; j < N; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const S scale = inverse(a(col, col));
        for (int j = 0; j < N; ++j) {
            a(col, j) = S(scale * a(col, j));
            inv(col, j) = S(scale * inv(col, j));
        }
        for (int r = 0; r < N; ++r) {
            if (r == col || is_zero(a(r, col))) continue;
            const S f = a(r, col);
            for (int j = 0; j < N; ++j) {
                a(r, j) = S(a(r, j) - f * a(col, j));
                inv(r, j) = S(inv(r, j) - f * inv(col, j));
            }
        }
    }
    return inv;
}

// Matrix exponential by scaling-and-squaring with a Taylor core; the scaled
// argument has norm <= 1/2, so twenty terms reach machine precision.
template <int N>
Mat<double, N, N> expm(const Mat<double, N, N>& a) {
    double norm = 0.0;
    for (int i = 0; i < N; ++i) {
        double row = 0.0;
        for (int j = 0; j < N; ++j) row += std::fabs(a(i, j));
        norm = std::max(norm, row);
    }
    int s = 0;
    while (norm > 0.5) {
        norm *= 0.5;
        ++s;
    }
    Mat<double, N, N> t = std::ldexp(1.0, -s) * a;
    Mat<double, N, N> out = Mat<double, N, N>::identity();
    Mat<double, N, N> term = Mat<double, N, N>::identity();
    for (int k = 1; k <= 20; ++k) {
        term = (1.0 / k) * (term * t);
        out += term;
    }
    for (int i = 0; i < s; ++i) out = out * out;
    return out;
}

template <class S, int N>
using Vec = Mat<S, N, 1>;

template <class S, int N>
S dot(const Vec<S, N>& x, const Vec<S, N>& y) {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < N; ++i) t = S(t + x(i, 0) * y(i, 0));
    return t;
}

}  // namespace g2cohom
