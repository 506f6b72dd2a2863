// Homogeneous bivariate polynomials in (x, y) with cyclotomic coefficients.
// A degree-k polynomial stores c_0..c_k for sum_j c_j y^j x^{k-j}; the local
// weight enumerators live here. BivarPoly below is the general (not
// necessarily homogeneous) rational-coefficient variant needed for matrix
// powers of the linear form x+(q-1)y.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hcube/cyclotomic.hpp"

namespace hcube {

enum class LinearBase { Sum, Diff };  // x+(q-1)y  /  x-y

class HomoPoly {
  public:
    HomoPoly(int q, int degree)
        : coeffs_(static_cast<std::size_t>(check_degree(degree)) + 1, Cyclotomic(q)) {}

    static HomoPoly constant(Cyclotomic c) {
        HomoPoly g(c.q(), 0);
        g.coeffs_[0] = std::move(c);
        return g;
    }

    static HomoPoly from_coeffs(std::vector<Cyclotomic> coeffs) {
        if (coeffs.empty()) throw InputError("homogeneous polynomial needs >= 1 coefficient");
        HomoPoly g(coeffs[0].q(), static_cast<int>(coeffs.size()) - 1);
        for (const Cyclotomic& c : coeffs)
            if (c.q() != g.q()) throw InputError("mixed cyclotomic orders in coefficients");
        g.coeffs_ = std::move(coeffs);
        return g;
    }

    // (x+(q-1)y)^e: coefficients C(e,j)(q-1)^j.
    static HomoPoly linear_sum_pow(int q, int e) {
        HomoPoly g(q, check_degree(e));
        for (int j = 0; j <= e; ++j)
            g.coeffs_[j] = Cyclotomic(q, Rational(binomial(e, j) * int_pow(q - 1, j)));
        return g;
    }

    // (x-y)^e: coefficients C(e,j)(-1)^j.
    static HomoPoly linear_diff_pow(int q, int e) {
        HomoPoly g(q, check_degree(e));
        for (int j = 0; j <= e; ++j) {
            BigInt c = binomial(e, j);
            if (j % 2 != 0) c = -c;
            g.coeffs_[j] = Cyclotomic(q, Rational(c));
        }
        return g;
    }

    int q() const { return coeffs_[0].q(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Cyclotomic& coeff(int j) const { return coeffs_.at(j); }
    Cyclotomic& coeff(int j) { return coeffs_.at(j); }
    const std::vector<Cyclotomic>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Cyclotomic& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    HomoPoly& operator+=(const HomoPoly& o) {
        if (degree() != o.degree())
            throw InputError("cannot add homogeneous polynomials of different degrees");
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }

    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }

    friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
        HomoPoly r(a.q(), a.degree() + b.degree());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    HomoPoly scaled(const Cyclotomic& s) const {
        HomoPoly r = *this;
        for (Cyclotomic& c : r.coeffs_) c = c * s;
        return r;
    }

    HomoPoly scaled(const Rational& s) const {
        HomoPoly r = *this;
        for (Cyclotomic& c : r.coeffs_) c *= s;
        return r;
    }

    // g(x+(q-2)y, -y), expanded with binomial coefficients. An involution:
    // the substitution swaps x+(q-1)y and x-y.
    HomoPoly substitute_dual() const {
        const int k = degree();
        const BigInt base = q() - 2;
        HomoPoly r(q(), k);
        for (int j = 0; j <= k; ++j) {
            if (coeffs_[j].is_zero()) continue;
            for (int t = j; t <= k; ++t) {
                BigInt factor = binomial(k - j, t - j) * int_pow(base, t - j);
                if (j % 2 != 0) factor = -factor;
                r.coeffs_[t] += coeffs_[j] * Rational(factor);
            }
        }
        return r;
    }

    Cyclotomic evaluate(const Cyclotomic& x0, const Cyclotomic& y0) const {
        // Horner in y/x form would need division; plain powers are fine here.
        Cyclotomic acc(q());
        Cyclotomic xp(q(), 1);
        std::vector<Cyclotomic> xpow;
        xpow.reserve(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            xpow.push_back(xp);
            xp = xp * x0;
        }
        Cyclotomic yp(q(), 1);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            acc += coeffs_[j] * yp * xpow[coeffs_.size() - 1 - j];
            yp = yp * y0;
        }
        return acc;
    }

    friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HomoPoly& a, const HomoPoly& b) { return !(a == b); }

  private:
    static int check_degree(int k) {
        if (k < 0) throw InputError("polynomial degree must be >= 0");
        return k;
    }

    std::vector<Cyclotomic> coeffs_;
};

inline HomoPoly poly_substitute_dual(const HomoPoly& g) { return g.substitute_dual(); }

inline HomoPoly poly_mul_linear_power(const HomoPoly& g, LinearBase base, int e) {
    if (e == 0) return g;
    const HomoPoly p = base == LinearBase::Sum ? HomoPoly::linear_sum_pow(g.q(), e)
                                               : HomoPoly::linear_diff_pow(g.q(), e);
    return g * p;
}

// Sparse bivariate polynomial over Q, keyed by (x_degree, y_degree). Zero
// coefficients are never stored, so map equality is value equality.
class BivarPoly {
  public:
    using Key = std::pair<int, int>;

    void add_term(int xdeg, int ydeg, const Rational& c) {
        if (c == 0) return;
        const Key k{xdeg, ydeg};
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Accumulates s * g; g must have rational coefficients.
    void add_scaled(const HomoPoly& g, const Rational& s) {
        if (s == 0) return;
        const int k = g.degree();
        for (int j = 0; j <= k; ++j) add_term(k - j, j, s * g.coeff(j).as_rational());
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

  private:
    std::map<Key, Rational> terms_;
};

}  // namespace hcube
