// Exact arithmetic in the cyclotomic field Q(xi_q), xi_q = exp(2*pi*i/q).
//
// A value is stored as q rational coefficients c_0..c_{q-1} of powers of
// xi_q, kept in canonical form: reduced modulo the q-th cyclotomic
// polynomial Phi_q, so positions phi(q)..q-1 are zero. Canonical form is
// unique per value, which makes equality and the zero test coefficientwise.
// Multiplication works modulo x^q - 1 first (xi^q = 1) and canonicalizes
// afterwards; both moduli are compatible since Phi_q divides x^q - 1.

#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hcube/rational.hpp"

namespace hcube {

// Integer polynomials, ascending degree. Only used for the Phi_q moduli.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline IntPoly intpoly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic divisor; the remainder must vanish.
inline IntPoly intpoly_div_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    IntPoly quot(dn - dd + 1, BigInt(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        BigInt c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (const BigInt& c : num)
        if (c != 0) throw InternalError("inexact polynomial division");
    return quot;
}

}  // namespace detail

// Phi_q, computed by dividing x^q - 1 by the product of Phi_d over the
// proper divisors d of q. Monic, integer coefficients, degree phi(q).
inline const IntPoly& cyclotomic_polynomial_cached(int q) {
    if (q < 1) throw InputError("cyclotomic polynomial requires q >= 1");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(q); it != cache.end()) return it->second;
    }
    IntPoly phi;
    if (q == 1) {
        phi = {BigInt(-1), BigInt(1)};  // x - 1
    } else {
        IntPoly num(static_cast<std::size_t>(q) + 1, BigInt(0));
        num[0] = -1;
        num[static_cast<std::size_t>(q)] = 1;
        IntPoly den{BigInt(1)};
        for (int d = 1; d < q; ++d)
            if (q % d == 0) den = detail::intpoly_mul(den, cyclotomic_polynomial_cached(d));
        phi = detail::intpoly_div_exact(std::move(num), den);
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(q, std::move(phi)).first->second;
}

inline IntPoly cyclotomic_polynomial(int q) { return cyclotomic_polynomial_cached(q); }

// Euler phi(q), read off as the degree of Phi_q.
inline int cyclotomic_degree(int q) {
    return static_cast<int>(cyclotomic_polynomial_cached(q).size()) - 1;
}

class Cyclotomic {
  public:
    explicit Cyclotomic(int q) : q_(checked(q)), c_(static_cast<std::size_t>(q), Rational(0)) {}

    Cyclotomic(int q, Rational constant) : Cyclotomic(q) { c_[0] = std::move(constant); }

    Cyclotomic(int q, long constant) : Cyclotomic(q, Rational(constant)) {}

    // xi^k, k taken modulo q.
    static Cyclotomic root_power(int q, long k) {
        Cyclotomic r(q);
        r.c_[static_cast<std::size_t>(((k % q) + q) % q)] = 1;
        r.normalize();
        return r;
    }

    // Builds sum coeffs[i] * xi^i from a raw length-q vector and canonicalizes.
    static Cyclotomic from_coeffs(int q, std::vector<Rational> coeffs) {
        if (coeffs.size() != static_cast<std::size_t>(q))
            throw InputError("cyclotomic coefficient vector must have length q");
        Cyclotomic r(q);
        r.c_ = std::move(coeffs);
        r.normalize();
        return r;
    }

    int q() const { return q_; }

    // Canonical coefficients; positions cyclotomic_degree(q).. are zero.
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Rational& c : c_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw NotRationalError("value has a nonzero root-of-unity part");
        return c_[0];
    }

    // Complex conjugate: xi^i -> xi^{q-i}. Involution and ring homomorphism.
    Cyclotomic conj() const {
        Cyclotomic r(q_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.c_[(c_.size() - i) % c_.size()] = c_[i];
        r.normalize();
        return r;
    }

    // Multiplication by xi^k as a coefficient rotation; cheaper than a full
    // product and the workhorse of the transforms.
    Cyclotomic times_root_power(long k) const {
        const auto s = static_cast<std::size_t>(((k % q_) + q_) % q_);
        Cyclotomic r(q_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[(i + s) % c_.size()] = c_[i];
        r.normalize();
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        same_field(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;  // sum of canonical forms stays canonical
    }

    Cyclotomic& operator-=(const Cyclotomic& o) {
        same_field(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    Cyclotomic& operator*=(const Rational& s) {
        for (Rational& c : c_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic r = a;
        for (Rational& c : r.c_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.same_field(b);
        Cyclotomic r(a.q_);
        const std::size_t q = a.c_.size();
        for (std::size_t i = 0; i < q; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < q; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[(i + j) % q] += a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.q_ == b.q_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  private:
    static int checked(int q) {
        if (q < 1) throw InputError("cyclotomic order must be >= 1");
        return q;
    }

    void same_field(const Cyclotomic& o) const {
        if (q_ != o.q_) throw InputError("cyclotomic operands live in different fields");
    }

    // Reduce modulo Phi_q; Phi_q is monic so the division is exact.
    void normalize() {
        const IntPoly& phi = cyclotomic_polynomial_cached(q_);
        const std::size_t m = phi.size() - 1;
        for (std::size_t j = c_.size(); j-- > m;) {
            if (c_[j] == 0) continue;
            const Rational lead = c_[j];
            for (std::size_t i = 0; i < m; ++i) c_[j - m + i] -= lead * Rational(phi[i]);
            c_[j] = 0;
        }
    }

    int q_;
    std::vector<Rational> c_;
};

}  // namespace hcube
