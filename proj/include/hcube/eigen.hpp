// Adjacency action of H(n,q), the eigenvalue numbering
// lambda_h = (q-1)n - qh, eigenfunction testing, and the orthogonal-face
// duality identity for eigenfunctions:
//
//   (x+(q-1)y)^{h-|Ic|} g^{Ic,alpha}_f(x,y) = (x-y)^{h-|I|} g^{I,alpha}_f(x', y')
//
// with x' = x+(q-2)y, y' = -y and Ic the complement of I. Exponents may be
// negative; the identity is read over rational functions and verified after
// clearing denominators with (x+(q-1)y)^{max(0,|Ic|-h)} (x-y)^{max(0,|I|-h)},
// which leaves two homogeneous polynomials of equal degree.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hcube/enumerators.hpp"

namespace hcube {

inline long eigenvalue_for_number(int h, const SpaceParams& p) {
    if (h < 0 || h > p.n) throw InputError("eigenvalue number h must be in [0, n]");
    return static_cast<long>(p.q - 1) * p.n - static_cast<long>(p.q) * h;
}

inline int eigenvalue_number(long lambda, const SpaceParams& p) {
    const long num = static_cast<long>(p.q - 1) * p.n - lambda;
    if (num % p.q != 0)
        throw NotAnEigenvalueError("lambda is not of the form (q-1)n - qh");
    const long h = num / p.q;
    if (h < 0 || h > p.n)
        throw NotAnEigenvalueError("eigenvalue number outside [0, n]");
    return static_cast<int>(h);
}

// A consistent (h, lambda_h) pair.
struct EigenvalueNumber {
    int h;
    long lambda;  // lambda = (q-1)n - qh

    static EigenvalueNumber from_number(int h, const SpaceParams& p) {
        return {h, eigenvalue_for_number(h, p)};
    }
    static EigenvalueNumber from_lambda(long lambda, const SpaceParams& p) {
        return {eigenvalue_number(lambda, p), lambda};
    }
};

// output(alpha) = sum of f over the n(q-1) neighbors of alpha.
inline FunctionTable adjacency_apply(const FunctionTable& f) {
    validate_table(f);
    FunctionTable out = make_zero_table(f.params);
    const std::size_t count = f.values.size();
    for (VertexIndex i = 0; i < count; ++i)
        for_each_neighbor(i, f.params, [&](VertexIndex nb) { out.values[i] += f.values[nb]; });
    return out;
}

inline bool is_eigenfunction(const FunctionTable& f, long lambda) {
    validate_table(f);
    const FunctionTable af = adjacency_apply(f);
    const Rational lam(lambda);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (af.values[i] != f.values[i] * lam) return false;
    return true;
}

struct IdentityVerdict {
    bool holds;
    HomoPoly lhs;   // denominator-cleared left side
    HomoPoly rhs;   // denominator-cleared right side
    int clear_sum;  // exponent of (x+(q-1)y) used for clearing
    int clear_diff; // exponent of (x-y) used for clearing
};

// Evaluates both cleared sides of the duality identity without any
// eigenfunction precondition. The negative-control tests depend on being
// able to run this on arbitrary functions.
inline IdentityVerdict eigenfunction_duality_identity(const FunctionTable& f, int h,
                                                      const std::vector<int>& I,
                                                      const Vertex& alpha) {
    validate_table(f);
    const SpaceParams& p = f.params;
    if (h < 0 || h > p.n) throw InputError("eigenvalue number h must be in [0, n]");
    validate_face(FaceSpec{zero_vertex(p), I}, p);
    validate_vertex(alpha, p);

    const std::vector<int> I_comp = complement_set(I, p.n);
    const int dim_i = static_cast<int>(I.size());
    const int dim_c = static_cast<int>(I_comp.size());

    // Anchor at zero via translation; enumerators of the translated
    // function in Gamma_I(0) equal those of f in Gamma_I(alpha).
    const FunctionTable g = translate(f, alpha);
    const HomoPoly enum_comp = local_weight_enumerator(g, FaceSpec{zero_vertex(p), I_comp});
    const HomoPoly enum_free = local_weight_enumerator(g, FaceSpec{zero_vertex(p), I});

    const int clear_sum = std::max(0, dim_c - h);
    const int clear_diff = std::max(0, dim_i - h);

    HomoPoly lhs = poly_mul_linear_power(enum_comp, LinearBase::Sum, std::max(0, h - dim_c));
    lhs = poly_mul_linear_power(lhs, LinearBase::Diff, clear_diff);

    HomoPoly rhs = poly_mul_linear_power(enum_free.substitute_dual(), LinearBase::Diff,
                                         std::max(0, h - dim_i));
    rhs = poly_mul_linear_power(rhs, LinearBase::Sum, clear_sum);

    return IdentityVerdict{lhs == rhs, std::move(lhs), std::move(rhs), clear_sum, clear_diff};
}

// Checked variant: requires f to be an eigenfunction for lambda_h.
inline IdentityVerdict eigenfunction_duality_check(const FunctionTable& f, int h,
                                                   const std::vector<int>& I,
                                                   const Vertex& alpha) {
    const EigenvalueNumber ev = EigenvalueNumber::from_number(h, f.params);
    if (!is_eigenfunction(f, ev.lambda))
        throw NotEigenfunctionError("function is not an eigenfunction for eigenvalue number h");
    return eigenfunction_duality_identity(f, h, I, alpha);
}

}  // namespace hcube
