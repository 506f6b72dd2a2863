#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcube/matrix.hpp"

using namespace hcube;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace

TEST_CASE("nullspace basis convention") {
    CHECK(mat_nullspace(RationalMatrix::identity(3)).empty());

    const auto zero_kernel = mat_nullspace(RationalMatrix(2, 2));
    REQUIRE(zero_kernel.size() == 2);
    CHECK(zero_kernel[0] == std::vector<Rational>{1, 0});
    CHECK(zero_kernel[1] == std::vector<Rational>{0, 1});

    const auto ones_kernel = mat_nullspace(from_rows({{1, 1}, {1, 1}}));
    REQUIRE(ones_kernel.size() == 1);
    CHECK(ones_kernel[0] == std::vector<Rational>{-1, 1});

    // every returned vector really lies in the kernel
    const RationalMatrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    for (const auto& v : mat_nullspace(a))
        for (int i = 0; i < a.rows(); ++i) {
            Rational acc(0);
            for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * v[static_cast<std::size_t>(j)];
            CHECK(acc == 0);
        }
}

TEST_CASE("exact inversion") {
    CHECK(mat_inverse(RationalMatrix::identity(4)) == RationalMatrix::identity(4));

    RationalMatrix diag(2, 2);
    diag.at(0, 0) = 2;
    diag.at(1, 1) = 4;
    RationalMatrix expected(2, 2);
    expected.at(0, 0) = make_rational(1, 2);
    expected.at(1, 1) = make_rational(1, 4);
    CHECK(mat_inverse(diag) == expected);

    CHECK_THROWS_AS(mat_inverse(from_rows({{1, 1}, {1, 1}})), SingularMatrixError);
    CHECK_THROWS_AS(mat_inverse(RationalMatrix(2, 3)), InputError);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-5, 5);
    int inverted = 0;
    while (inverted < 5) {
        RationalMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a.at(i, j) = entry(rng);
        try {
            const RationalMatrix inv = mat_inverse(a);
            CHECK(a * inv == RationalMatrix::identity(4));
            CHECK(inv * a == RationalMatrix::identity(4));
            ++inverted;
        } catch (const SingularMatrixError&) {
            // singular draw, try another
        }
    }
}

TEST_CASE("incremental rank accumulator") {
    RrefAccumulator acc(3);
    CHECK(acc.insert({Rational(1), Rational(2), Rational(3)}));
    CHECK_FALSE(acc.insert({Rational(2), Rational(4), Rational(6)}));
    CHECK(acc.insert({Rational(0), Rational(1), Rational(1)}));
    CHECK_FALSE(acc.insert({Rational(1), Rational(3), Rational(4)}));  // sum of the two
    CHECK(acc.rank() == 2);
    CHECK(acc.insert({Rational(0), Rational(0), Rational(1)}));
    CHECK(acc.rank() == 3);
    CHECK_FALSE(acc.insert({Rational(5), Rational(-7), Rational(9)}));
    CHECK_THROWS_AS(acc.insert({Rational(1)}), InputError);
}

TEST_CASE("rank via rref") {
    CHECK(mat_rank(RationalMatrix::identity(5)) == 5);
    CHECK(mat_rank(RationalMatrix(3, 4)) == 0);
    CHECK(mat_rank(from_rows({{1, 2}, {2, 4}, {3, 6}})) == 1);
}
