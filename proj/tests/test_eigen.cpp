#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcube/eigen.hpp"
#include "test_util.hpp"

using namespace hcube;

TEST_CASE("adjacency action") {
    const SpaceParams p32(3, 2);
    const FunctionTable deg = adjacency_apply(make_constant_table(p32, Rational(1)));
    for (const Cyclotomic& v : deg.values) CHECK(v == Cyclotomic(3, Rational(4)));  // (q-1)n

    const SpaceParams p21(2, 1);
    FunctionTable f = make_zero_table(p21);
    f.values[0] = Cyclotomic(2, Rational(3));
    f.values[1] = Cyclotomic(2, Rational(7));
    const FunctionTable swapped = adjacency_apply(f);
    CHECK(swapped.values[0] == f.values[1]);
    CHECK(swapped.values[1] == f.values[0]);

    // character of weight 1 at (3,2): eigenfunction for lambda_1 = 1
    const FunctionTable chi = make_character_table(p32, Vertex{{1, 0}});
    const FunctionTable achi = adjacency_apply(chi);
    for (std::size_t i = 0; i < chi.values.size(); ++i)
        CHECK(achi.values[i] == chi.values[i] * Rational(eigenvalue_for_number(1, p32)));
}

TEST_CASE("eigenvalue numbering") {
    for (const SpaceParams p : {SpaceParams(2, 3), SpaceParams(3, 4), SpaceParams(5, 2)}) {
        CHECK(eigenvalue_number(static_cast<long>(p.q - 1) * p.n, p) == 0);
        for (int h = 0; h <= p.n; ++h) CHECK(eigenvalue_number(eigenvalue_for_number(h, p), p) == h);
    }
    CHECK(eigenvalue_number(-1, SpaceParams(3, 4)) == 3);
    const EigenvalueNumber ev = EigenvalueNumber::from_lambda(-1, SpaceParams(3, 4));
    CHECK(ev.h == 3);
    CHECK(EigenvalueNumber::from_number(ev.h, SpaceParams(3, 4)).lambda == -1);
    CHECK_THROWS_AS(eigenvalue_number(2, SpaceParams(2, 3)), NotAnEigenvalueError);   // parity
    CHECK_THROWS_AS(eigenvalue_number(5, SpaceParams(2, 3)), NotAnEigenvalueError);   // too large
    CHECK_THROWS_AS(eigenvalue_number(-7, SpaceParams(2, 3)), NotAnEigenvalueError);  // h > n
}

TEST_CASE("eigenfunction test") {
    const SpaceParams p(3, 2);
    CHECK(is_eigenfunction(make_constant_table(p, Rational(5)),
                           static_cast<long>(p.q - 1) * p.n));

    for (int h = 0; h <= p.n; ++h)
        CHECK_FALSE(is_eigenfunction(make_delta_table(p, 0), eigenvalue_for_number(h, p)));

    std::mt19937 rng(61);
    const SpaceParams p33(3, 3);
    const FunctionTable f = testutil::random_rational_table(p33, rng);
    for (int h = 0; h <= p33.n; ++h) {
        const FunctionTable part = eigenspace_project(f, h);
        CHECK(is_eigenfunction(part, eigenvalue_for_number(h, p33)));
    }
}

TEST_CASE("duality identity, worked two-point example") {
    // q=2, n=1, f = (1,-1), h=1, I={1}: both cleared sides equal x+y
    const SpaceParams p(2, 1);
    FunctionTable f = make_zero_table(p);
    f.values[0] = Cyclotomic(2, Rational(1));
    f.values[1] = Cyclotomic(2, Rational(-1));
    const IdentityVerdict v = eigenfunction_duality_check(f, 1, {1}, zero_vertex(p));
    CHECK(v.holds);
    CHECK(v.clear_sum == 0);
    CHECK(v.clear_diff == 0);
    CHECK(v.lhs == HomoPoly::linear_sum_pow(2, 1));
    CHECK(v.rhs == v.lhs);
}

TEST_CASE("duality identity for projections, all faces and anchors") {
    const SpaceParams p(3, 3);
    std::mt19937 rng(67);
    const FunctionTable f = testutil::random_rational_table(p, rng);
    const std::vector<Vertex> anchors{zero_vertex(p), vertex_of(5, p)};
    for (int h = 0; h <= p.n; ++h) {
        const FunctionTable part = eigenspace_project(f, h);
        bool zero = true;
        for (const Cyclotomic& v : part.values) zero = zero && v.is_zero();
        if (zero) continue;
        for (const auto& I : testutil::all_subsets(p.n))
            for (const Vertex& alpha : anchors) {
                const IdentityVerdict v = eigenfunction_duality_check(part, h, I, alpha);
                CHECK(v.holds);
                CHECK(v.lhs.degree() == v.rhs.degree());  // degree bookkeeping
            }
    }
}

TEST_CASE("duality identity for a constant function") {
    const SpaceParams p(3, 2);
    const FunctionTable ones = make_constant_table(p, Rational(2));
    for (const auto& I : testutil::all_subsets(p.n))
        for (VertexIndex a : {VertexIndex(0), VertexIndex(4)})
            CHECK(eigenfunction_duality_check(ones, 0, I, vertex_of(a, p)).holds);
}

TEST_CASE("full-face reduction case") {
    // |I| = n leaves a trivial complement face
    const SpaceParams p(3, 3);
    std::mt19937 rng(71);
    const FunctionTable part = eigenspace_project(testutil::random_rational_table(p, rng), 2);
    const IdentityVerdict v = eigenfunction_duality_check(part, 2, {1, 2, 3}, zero_vertex(p));
    CHECK(v.holds);
}

TEST_CASE("non-eigenfunctions are rejected and fail the identity") {
    const SpaceParams p(2, 3);
    FunctionTable f = make_delta_table(p, 0);
    f.values[4] += Cyclotomic(2, Rational(1));  // delta_0 + delta_{e1}

    for (int h = 0; h <= p.n; ++h)
        CHECK_THROWS_AS(eigenfunction_duality_check(f, h, {1}, zero_vertex(p)),
                        NotEigenfunctionError);

    // the unchecked identity evaluation finds a failing (h, I, alpha)
    int failures = 0;
    for (int h = 0; h <= p.n; ++h)
        for (const auto& I : testutil::all_subsets(p.n))
            for (VertexIndex a = 0; a < p.vertex_count(); ++a)
                if (!eigenfunction_duality_identity(f, h, I, vertex_of(a, p)).holds) ++failures;
    CHECK(failures > 0);
}
