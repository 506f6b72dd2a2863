// The Fourier pair on F_q^n over the characters phi^beta(alpha) =
// xi^<alpha,beta>:
//
//   forward:  F(alpha) = sum_beta f(beta) * conj(xi^<alpha,beta>)
//   inverse:  f(alpha) = q^{-n} sum_beta F(beta) * xi^<alpha,beta>
//
// fourier_forward is the straight double loop and stays in the library as
// the oracle; fourier_forward_fast applies the q-point transform along one
// coordinate per pass (n passes) and must agree with the oracle exactly.
// Eigenspace projection goes through the transform: an eigenfunction with
// eigenvalue number h has its spectrum supported on the weight-h sphere.

#pragma once

#include <set>
#include <utility>
#include <vector>

#include "hcube/cyclotomic.hpp"
#include "hcube/space.hpp"

namespace hcube {

struct FunctionTable {
    SpaceParams params;
    std::vector<Cyclotomic> values;  // indexed by index_of
};

struct SpectrumTable {
    SpaceParams params;
    std::vector<Cyclotomic> values;
};

template <typename Table>
void validate_table(const Table& t) {
    if (t.values.size() != t.params.vertex_count())
        throw InputError("table length does not equal q^n");
    for (const Cyclotomic& v : t.values)
        if (v.q() != t.params.q) throw InputError("table value in the wrong cyclotomic field");
}

inline FunctionTable make_zero_table(const SpaceParams& p) {
    return FunctionTable{p, std::vector<Cyclotomic>(p.vertex_count(), Cyclotomic(p.q))};
}

inline FunctionTable make_constant_table(const SpaceParams& p, const Rational& value) {
    return FunctionTable{p, std::vector<Cyclotomic>(p.vertex_count(), Cyclotomic(p.q, value))};
}

inline FunctionTable make_delta_table(const SpaceParams& p, VertexIndex at,
                                      const Rational& value = Rational(1)) {
    FunctionTable f = make_zero_table(p);
    f.values.at(at) = Cyclotomic(p.q, value);
    return f;
}

// The character phi^beta as a value table.
inline FunctionTable make_character_table(const SpaceParams& p, const Vertex& beta) {
    validate_vertex(beta, p);
    FunctionTable f = make_zero_table(p);
    const std::size_t count = p.vertex_count();
    for (VertexIndex i = 0; i < count; ++i)
        f.values[i] = Cyclotomic::root_power(p.q, inner_product(vertex_of(i, p), beta, p));
    return f;
}

// f composed with translation by alpha: result(beta) = f(beta + alpha).
inline FunctionTable translate(const FunctionTable& f, const Vertex& alpha) {
    validate_table(f);
    validate_vertex(alpha, f.params);
    FunctionTable g = make_zero_table(f.params);
    const std::size_t count = f.params.vertex_count();
    for (VertexIndex i = 0; i < count; ++i)
        g.values[i] = f.values[index_of(vertex_add(vertex_of(i, f.params), alpha, f.params), f.params)];
    return g;
}

namespace detail {

// Digit table for all indices; avoids re-decoding in the double loop.
inline std::vector<std::vector<int>> all_digits(const SpaceParams& p) {
    const std::size_t count = p.vertex_count();
    std::vector<std::vector<int>> digits;
    digits.reserve(count);
    for (VertexIndex i = 0; i < count; ++i) digits.push_back(vertex_of(i, p).digits);
    return digits;
}

// One q-point pass per coordinate: out_a = sum_d v_d xi^{sign*a*d}.
inline std::vector<Cyclotomic> dimensionwise_transform(std::vector<Cyclotomic> values,
                                                       const SpaceParams& p, int sign) {
    const std::size_t q = static_cast<std::size_t>(p.q);
    std::vector<Cyclotomic> fiber(q, Cyclotomic(p.q));
    std::size_t stride = values.size() / q;  // coordinate 1 first
    for (int pass = 0; pass < p.n; ++pass) {
        const std::size_t fibers = values.size() / q;
        for (std::size_t t = 0; t < fibers; ++t) {
            const std::size_t base = (t / stride) * stride * q + (t % stride);
            for (std::size_t a = 0; a < q; ++a) {
                Cyclotomic acc(p.q);
                for (std::size_t d = 0; d < q; ++d)
                    acc += values[base + d * stride].times_root_power(
                        sign * static_cast<long>(a) * static_cast<long>(d));
                fiber[a] = std::move(acc);
            }
            for (std::size_t a = 0; a < q; ++a) values[base + a * stride] = std::move(fiber[a]);
        }
        stride /= q;
    }
    return values;
}

}  // namespace detail

// Oracle transform, O(q^{2n}) scalar operations.
inline SpectrumTable fourier_forward(const FunctionTable& f) {
    validate_table(f);
    const SpaceParams& p = f.params;
    const auto digits = detail::all_digits(p);
    const std::size_t count = f.values.size();
    SpectrumTable out{p, std::vector<Cyclotomic>(count, Cyclotomic(p.q))};
    for (VertexIndex a = 0; a < count; ++a) {
        Cyclotomic acc(p.q);
        for (VertexIndex b = 0; b < count; ++b) {
            long ip = 0;
            for (int i = 0; i < p.n; ++i)
                ip += static_cast<long>(digits[a][static_cast<std::size_t>(i)]) *
                      digits[b][static_cast<std::size_t>(i)] % p.q;
            acc += f.values[b].times_root_power(-(ip % p.q));
        }
        out.values[a] = std::move(acc);
    }
    return out;
}

// Same map as fourier_forward, computed in n dimension-wise passes,
// O(n q^{n+1}) scalar operations.
inline SpectrumTable fourier_forward_fast(const FunctionTable& f) {
    validate_table(f);
    return SpectrumTable{f.params, detail::dimensionwise_transform(f.values, f.params, -1)};
}

inline FunctionTable fourier_inverse(const SpectrumTable& spectrum) {
    validate_table(spectrum);
    const SpaceParams& p = spectrum.params;
    std::vector<Cyclotomic> values = detail::dimensionwise_transform(spectrum.values, p, +1);
    const Rational scale = make_rational(1, int_pow(p.q, static_cast<unsigned long>(p.n)));
    for (Cyclotomic& v : values) v *= scale;
    return FunctionTable{p, std::move(values)};
}

// Keeps only the spectrum on the weight-h sphere and transforms back. The
// result is an eigenfunction for eigenvalue (q-1)n - qh, or identically
// zero; summing the projections over h = 0..n recovers f.
inline FunctionTable eigenspace_project(const FunctionTable& f, int h) {
    validate_table(f);
    const SpaceParams& p = f.params;
    if (h < 0 || h > p.n) throw InputError("eigenvalue number h must be in [0, n]");
    SpectrumTable spectrum = fourier_forward_fast(f);
    const std::size_t count = spectrum.values.size();
    for (VertexIndex i = 0; i < count; ++i)
        if (weight(vertex_of(i, p)) != h) spectrum.values[i] = Cyclotomic(p.q);
    return fourier_inverse(spectrum);
}

// { h : some weight-h spectrum entry is nonzero }.
inline std::set<int> spectral_support_numbers(const FunctionTable& f) {
    validate_table(f);
    const SpectrumTable spectrum = fourier_forward_fast(f);
    std::set<int> support;
    const std::size_t count = spectrum.values.size();
    for (VertexIndex i = 0; i < count; ++i)
        if (!spectrum.values[i].is_zero()) support.insert(weight(vertex_of(i, f.params)));
    return support;
}

}  // namespace hcube
