#pragma once

// Small polynomial types used by the obstruction layer: dense univariate
// polynomials (the quartics and their factorizations) and sparse multivariate
// polynomials over a fixed variable set (the coefficient-extraction
// identities). Degrees and term counts are tiny; clarity over speed.

#include "g2cohom/scalar.hpp"

#include <array>
#include <map>
#include <vector>

namespace g2cohom {

template <class S>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, const S& coeff) {
        std::vector<S> c(std::size_t(degree) + 1, scalar_traits<S>::zero());
        c[std::size_t(degree)] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return int(c_.size()) - 1; }

    S coeff(int i) const {
        if (i < 0 || i >= int(c_.size())) return scalar_traits<S>::zero();
        return c_[std::size_t(i)];
    }

    bool is_zero() const { return c_.empty(); }

    S eval(const S& x) const {
        S acc = scalar_traits<S>::zero();
        for (int i = int(c_.size()) - 1; i >= 0; --i) acc = S(acc * x + c_[std::size_t(i)]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<S> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = S(scalar_traits<S>::from_long(long(i)) * c_[i]);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = S(c[i] + a.c_[i]);
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = S(c[i] + b.c_[i]);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<S> c(std::max(a.c_.size(), b.c_.size()), scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = S(c[i] + a.c_[i]);
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = S(c[i] - b.c_[i]);
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, scalar_traits<S>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = S(c[i + j] + a.c_[i] * b.c_[j]);
        return Poly(std::move(c));
    }
    friend Poly operator*(const S& s, const Poly& a) {
        std::vector<S> c = a.c_;
        for (auto& e : c) e = S(s * e);
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && g2cohom::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;  // c_[i] is the coefficient of x^i
};

template <class S, int N>
class SparsePoly {
  public:
    using Expo = std::array<int, N>;

    SparsePoly() = default;

    static SparsePoly term(const Expo& e, const S& coeff) {
        SparsePoly p;
        if (!g2cohom::is_zero(coeff)) p.terms_[e] = coeff;
        return p;
    }

    static SparsePoly constant(const S& c) { return term(Expo{}, c); }

    static SparsePoly variable(int i) {
        Expo e{};
        e[std::size_t(i)] = 1;
        return term(e, scalar_traits<S>::one());
    }

    const std::map<Expo, S>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    S coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? scalar_traits<S>::zero() : it->second;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, S(-c));
        return out;
    }
    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = S(-c);
        return out;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e;
                for (int i = 0; i < N; ++i)
                    e[std::size_t(i)] = ea[std::size_t(i)] + eb[std::size_t(i)];
                out.add_term(e, S(ca * cb));
            }
        }
        return out;
    }
    friend SparsePoly operator*(const S& s, const SparsePoly& a) {
        SparsePoly out;
        if (g2cohom::is_zero(s)) return out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = S(s * c);
        return out;
    }

    // Substitute zero for the flagged variables (drop every term that
    // contains any of them).
    SparsePoly zeroed(const std::array<bool, N>& kill) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            bool keep = true;
            for (int i = 0; i < N; ++i)
                if (kill[std::size_t(i)] && e[std::size_t(i)] > 0) {
                    keep = false;
                    break;
                }
            if (keep) out.terms_[e] = c;
        }
        return out;
    }

    SparsePoly partial(int var) const {
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            const int p = e[std::size_t(var)];
            if (p == 0) continue;
            Expo d = e;
            d[std::size_t(var)] = p - 1;
            out.add_term(d, S(scalar_traits<S>::from_long(p) * c));
        }
        return out;
    }

    S eval(const std::array<S, N>& x) const {
        S acc = scalar_traits<S>::zero();
        for (const auto& [e, c] : terms_) {
            S t = c;
            for (int i = 0; i < N; ++i)
                for (int p = 0; p < e[std::size_t(i)]; ++p) t = S(t * x[std::size_t(i)]);
            acc = S(acc + t);
        }
        return acc;
    }

  private:
    void add_term(const Expo& e, const S& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!g2cohom::is_zero(c)) terms_[e] = c;
            return;
        }
        it->second = S(it->second + c);
        if (g2cohom::is_zero(it->second)) terms_.erase(it);
    }

    std::map<Expo, S> terms_;
};

}  // namespace g2cohom
