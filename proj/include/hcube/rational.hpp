// Arbitrary-precision integers and rationals. The whole library computes
// exactly; no floating point appears anywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <string_view>

#include "hcube/errors.hpp"

namespace hcube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical rational from any integer pair; sign lives in the numerator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

// Serialized form is "p" for integers and "p/q" otherwise, always reduced.
inline std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline Rational rat_parse(std::string_view text) {
    const auto fail = [&] { return InputError("bad rational: \"" + std::string(text) + "\""); };
    if (text.empty()) throw fail();
    try {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        const BigInt num{std::string(text.substr(0, slash))};
        const BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) throw fail();
        return make_rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw fail();
    }
}

inline BigInt int_pow(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e != 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned long e) {
    return make_rational(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

}  // namespace hcube
