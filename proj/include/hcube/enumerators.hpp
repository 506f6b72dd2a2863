// Local distributions and local weight enumerators of a function in a face.
//
// The distribution entry v_j is the sum of f over the face vertices at
// distance j from the anchor; the enumerator is the generating polynomial
// sum_j v_j y^j x^{|I|-j}. Two independent routes compute the enumerator:
// direct summation over the face, and the spectral formula
//
//   g^I_f = q^{-n} sum_beta F(beta) (x+(q-1)y)^{|I|-|I n s(beta)|} (x-y)^{|I n s(beta)|}
//
// which builds on the face sum of a single character
//
//   sum_{alpha in Gamma_I} phi^beta(alpha) x^{|I|-|s(alpha)|} y^{|s(alpha)|}
//     = (x-y)^{|I n s(beta)|} (x+(q-1)y)^{|I|-|I n s(beta)|}.
//
// The brute-force character face sum ships as a named operation; the test
// suites use it as the oracle for the closed form. The spectral route is
// anchored at the all-zero vertex; general anchors reduce to it by
// translate() from fourier.hpp.

#pragma once

#include <utility>
#include <vector>

#include "hcube/fourier.hpp"
#include "hcube/homopoly.hpp"

namespace hcube {

struct LocalDistribution {
    FaceSpec face;
    std::vector<Cyclotomic> entries;  // length |I|+1
};

inline LocalDistribution local_distribution(const FunctionTable& f, const FaceSpec& face) {
    validate_table(f);
    validate_face(face, f.params);
    std::vector<Cyclotomic> entries(static_cast<std::size_t>(face.dim()) + 1,
                                    Cyclotomic(f.params.q));
    for (const Vertex& v : face_vertices(face, f.params))
        entries[static_cast<std::size_t>(distance(v, face.anchor))] +=
            f.values[index_of(v, f.params)];
    return LocalDistribution{face, std::move(entries)};
}

inline HomoPoly local_weight_enumerator(const FunctionTable& f, const FaceSpec& face) {
    return HomoPoly::from_coeffs(local_distribution(f, face).entries);
}

// Spectral route for the face anchored at zero with free set I.
inline HomoPoly lwe_via_spectrum(const SpectrumTable& spectrum, const std::vector<int>& I) {
    validate_table(spectrum);
    const SpaceParams& p = spectrum.params;
    validate_face(FaceSpec{zero_vertex(p), I}, p);
    const int dim = static_cast<int>(I.size());

    // Group the spectrum by m = |I n s(beta)|; only |I|+1 distinct
    // polynomials (x-y)^m (x+(q-1)y)^{|I|-m} ever occur.
    std::vector<Cyclotomic> grouped(static_cast<std::size_t>(dim) + 1, Cyclotomic(p.q));
    const std::size_t count = spectrum.values.size();
    for (VertexIndex b = 0; b < count; ++b) {
        if (spectrum.values[b].is_zero()) continue;
        const int m = set_intersection_size(I, support(vertex_of(b, p)));
        grouped[static_cast<std::size_t>(m)] += spectrum.values[b];
    }

    HomoPoly acc(p.q, dim);
    for (int m = 0; m <= dim; ++m) {
        if (grouped[static_cast<std::size_t>(m)].is_zero()) continue;
        const HomoPoly base =
            HomoPoly::linear_diff_pow(p.q, m) * HomoPoly::linear_sum_pow(p.q, dim - m);
        acc += base.scaled(grouped[static_cast<std::size_t>(m)]);
    }
    const Rational scale = make_rational(1, int_pow(p.q, static_cast<unsigned long>(p.n)));
    return acc.scaled(scale);
}

// Closed form of the character face sum.
inline HomoPoly character_face_sum(const Vertex& beta, const std::vector<int>& I,
                                   const SpaceParams& p) {
    validate_vertex(beta, p);
    validate_face(FaceSpec{zero_vertex(p), I}, p);
    const int dim = static_cast<int>(I.size());
    const int m = set_intersection_size(I, support(beta));
    return HomoPoly::linear_diff_pow(p.q, m) * HomoPoly::linear_sum_pow(p.q, dim - m);
}

// Term-by-term sum over the face; oracle for character_face_sum.
inline HomoPoly character_face_sum_bruteforce(const Vertex& beta, const std::vector<int>& I,
                                              const SpaceParams& p) {
    validate_vertex(beta, p);
    const FaceSpec face{zero_vertex(p), I};
    validate_face(face, p);
    HomoPoly acc(p.q, face.dim());
    for (const Vertex& alpha : face_vertices(face, p))
        acc.coeff(weight(alpha)) += Cyclotomic::root_power(p.q, inner_product(alpha, beta, p));
    return acc;
}

}  // namespace hcube
