#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hcube/colorings.hpp"
#include "test_util.hpp"

using namespace hcube;

namespace {

std::vector<std::size_t> class_sizes(const Coloring& c) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(c.r), 0);
    for (int color : c.colors) ++sizes[static_cast<std::size_t>(color)];
    return sizes;
}

void check_balance(const Coloring& c, const ParameterMatrix& s) {
    const auto sizes = class_sizes(c);
    for (int i = 0; i < s.r; ++i) {
        long row_sum = 0;
        for (int j = 0; j < s.r; ++j) {
            row_sum += s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            CHECK(sizes[static_cast<std::size_t>(i)] *
                      static_cast<std::size_t>(s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ==
                  sizes[static_cast<std::size_t>(j)] *
                      static_cast<std::size_t>(s.s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
        }
        CHECK(row_sum == static_cast<long>(c.params.q - 1) * c.params.n);  // degree of H(n,q)
    }
}

}  // namespace

TEST_CASE("coloring validation") {
    const SpaceParams p(2, 2);
    CHECK_THROWS_AS(Coloring(p, 2, {0, 1, 2, 0}), InputError);   // color out of range
    CHECK_THROWS_AS(Coloring(p, 3, {0, 1, 1, 0}), InputError);   // empty class
    CHECK_THROWS_AS(Coloring(p, 2, {0, 1, 1}), InputError);      // wrong length
}

TEST_CASE("parameter matrix extraction") {
    const Coloring parity = fixture_parity(SpaceParams(2, 4));
    const ParameterMatrix s_parity = parameter_matrix_of(parity);
    CHECK(s_parity.s == std::vector<std::vector<int>>{{0, 4}, {4, 0}});

    const Coloring coord = fixture_coordinate(SpaceParams(3, 3));
    CHECK(parameter_matrix_of(coord).s ==
          std::vector<std::vector<int>>{{4, 1, 1}, {1, 4, 1}, {1, 1, 4}});

    const Coloring hamming = fixture_hamming_code_distance(3, 2);
    CHECK(hamming.params.n == 4);
    CHECK(class_sizes(hamming)[0] == 9);  // ternary [4,2] code
    CHECK(parameter_matrix_of(hamming).s == std::vector<std::vector<int>>{{0, 8}, {1, 7}});

    // flipping one vertex breaks equitability with a concrete witness
    std::vector<int> broken = parity.colors;
    broken[0] = 1 - broken[0];
    const Coloring not_equitable(parity.params, 2, broken);
    CHECK_THROWS_AS(parameter_matrix_of(not_equitable), NotEquitableError);
    try {
        parameter_matrix_of(not_equitable);
    } catch (const NotEquitableError& e) {
        CHECK(e.vertex_a != e.vertex_b);
    }
}

TEST_CASE("verify_perfect") {
    const Coloring parity = fixture_parity(SpaceParams(2, 4));
    CHECK(verify_perfect(parity, ParameterMatrix{2, {{0, 4}, {4, 0}}}));
    CHECK_FALSE(verify_perfect(parity, ParameterMatrix{2, {{4, 0}, {0, 4}}}));

    std::vector<int> broken = parity.colors;
    broken[0] = 1 - broken[0];
    CHECK_FALSE(verify_perfect(Coloring(parity.params, 2, broken),
                               ParameterMatrix{2, {{0, 4}, {4, 0}}}));

    const SpaceParams p(3, 2);
    CHECK(verify_perfect(fixture_all_one_color(p), ParameterMatrix{1, {{4}}}));
}

TEST_CASE("local distribution matrix and vector enumerator") {
    const SpaceParams p23(2, 3);
    const Coloring parity = fixture_parity(p23);
    const FaceSpec face{zero_vertex(p23), {1, 2}};
    const LocalDistributionMatrix m = local_distribution_matrix(parity, face);
    CHECK(m.counts == std::vector<std::vector<long>>{{1, 0, 1}, {0, 2, 0}});

    const std::vector<HomoPoly> g = vector_enumerator(parity, face);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == HomoPoly::from_coeffs({Cyclotomic(2, Rational(1)), Cyclotomic(2),
                                         Cyclotomic(2, Rational(1))}));  // x^2 + y^2
    CHECK(g[1] == HomoPoly::from_coeffs({Cyclotomic(2), Cyclotomic(2, Rational(2)),
                                         Cyclotomic(2)}));  // 2xy

    // one color: a single row of sphere-section counts
    const SpaceParams p32(3, 2);
    const Coloring trivial = fixture_all_one_color(p32);
    const auto g1 = vector_enumerator(trivial, FaceSpec{zero_vertex(p32), {1, 2}});
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == HomoPoly::linear_sum_pow(3, 2));

    // empty face: a unit column at the anchor's color
    const LocalDistributionMatrix m0 =
        local_distribution_matrix(parity, FaceSpec{vertex_of(1, p23), {}});
    CHECK(m0.counts == std::vector<std::vector<long>>{{0}, {1}});

    // components always sum to (x+(q-1)y)^{|I|}
    const SpaceParams p33(3, 3);
    const Coloring coord = fixture_coordinate(p33);
    for (const auto& I : testutil::all_subsets(p33.n)) {
        const auto parts = vector_enumerator(coord, FaceSpec{vertex_of(13, p33), I});
        HomoPoly total(p33.q, static_cast<int>(I.size()));
        for (const HomoPoly& part : parts) total += part;
        CHECK(total == HomoPoly::linear_sum_pow(p33.q, static_cast<int>(I.size())));
    }
}

TEST_CASE("exact spectral decomposition of S") {
    const SpaceParams p24(2, 4);
    const SpectralData sd = spectral_decompose(ParameterMatrix{2, {{0, 4}, {4, 0}}}, p24);
    CHECK(sd.mu == std::vector<long>{4, -4});
    CHECK(sd.h == std::vector<int>{0, 4});
    RationalMatrix expected_t(2, 2);
    expected_t.at(0, 0) = 1;
    expected_t.at(1, 0) = 1;
    expected_t.at(0, 1) = -1;
    expected_t.at(1, 1) = 1;
    CHECK(sd.T == expected_t);

    const SpectralData sd_h = spectral_decompose(ParameterMatrix{2, {{0, 8}, {1, 7}}},
                                                 SpaceParams(3, 4));
    CHECK(sd_h.mu == std::vector<long>{8, -1});
    CHECK(sd_h.h == std::vector<int>{0, 3});

    const SpectralData sd_c = spectral_decompose(
        ParameterMatrix{3, {{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}}, SpaceParams(3, 3));
    CHECK(sd_c.mu == std::vector<long>{6, 3, 3});
    CHECK(sd_c.h == std::vector<int>{0, 1, 1});

    // an S whose spectrum leaves {lambda_h} is rejected
    CHECK_THROWS_AS(spectral_decompose(ParameterMatrix{2, {{0, 2}, {2, 0}}}, SpaceParams(3, 1)),
                    NotDiagonalizableError);
}

TEST_CASE("h matrix") {
    CHECK(h_matrix(ParameterMatrix{1, {{4}}}, SpaceParams(2, 4)) == RationalMatrix(1, 1));

    RationalMatrix expected(2, 2);
    expected.at(0, 0) = 2;
    expected.at(0, 1) = -2;
    expected.at(1, 0) = -2;
    expected.at(1, 1) = 2;
    CHECK(h_matrix(ParameterMatrix{2, {{0, 4}, {4, 0}}}, SpaceParams(2, 4)) == expected);

    const RationalMatrix hm = h_matrix(
        ParameterMatrix{3, {{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}}, SpaceParams(3, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(hm.at(i, j) == (i == j ? make_rational(2, 3) : make_rational(-1, 3)));
}

TEST_CASE("matrix power of the linear form") {
    // trivial coloring: (x+(q-1)y)^0 = 1
    const MatrixEnumeratorPower mp1 =
        matrix_enumerator_power(ParameterMatrix{1, {{4}}}, 0, SpaceParams(2, 4));
    CHECK(mp1.d == 0);
    BivarPoly one;
    one.add_term(0, 0, Rational(1));
    CHECK(mp1.entries[0][0] == one);

    // S = [[0,4],[4,0]] at (2,4), k=0: P = [[(1+s)/2, (1-s)/2], [(1-s)/2, (1+s)/2]]
    // with s = (x+y)^4
    const SpaceParams p24(2, 4);
    const ParameterMatrix s_parity{2, {{0, 4}, {4, 0}}};
    const MatrixEnumeratorPower mp = matrix_enumerator_power(s_parity, 0, p24);
    CHECK(mp.d == 0);
    BivarPoly diag, off;
    diag.add_term(0, 0, make_rational(1, 2));
    diag.add_scaled(HomoPoly::linear_sum_pow(2, 4), make_rational(1, 2));
    off.add_term(0, 0, make_rational(1, 2));
    off.add_scaled(HomoPoly::linear_sum_pow(2, 4), make_rational(-1, 2));
    CHECK(mp.entries[0][0] == diag);
    CHECK(mp.entries[1][1] == diag);
    CHECK(mp.entries[0][1] == off);
    CHECK(mp.entries[1][0] == off);

    // rescaling the eigenbasis does not change (P, d)
    SpectralData sd = spectral_decompose(s_parity, p24);
    RationalMatrix doubled = sd.T;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) doubled.at(i, j) *= 2;
    const SpectralData rescaled{doubled, mat_inverse(doubled), sd.mu, sd.h};
    const MatrixEnumeratorPower mp2 = matrix_enumerator_power(rescaled, 0, p24);
    CHECK(mp2.d == mp.d);
    CHECK(mp2.entries == mp.entries);

    // negative diagonal exponents force a positive clearing power d
    const MatrixEnumeratorPower mp_k1 = matrix_enumerator_power(s_parity, 1, p24);
    CHECK(mp_k1.d == 1);
    CHECK(mp_k1.entries == mp.entries);  // exponents shift by d and cancel
}

TEST_CASE("coloring duality identity on fixtures") {
    const Coloring parity = fixture_parity(SpaceParams(2, 4));
    for (const auto& I : testutil::all_subsets(4)) {
        const ColoringDualityVerdict v = coloring_duality_check(parity, I, zero_vertex(parity.params));
        CHECK(v.holds);
        CHECK(v.columns.size() == 2);
    }

    const Coloring coord = fixture_coordinate(SpaceParams(3, 3));
    for (const auto& I : testutil::all_subsets(3))
        for (const Vertex& alpha : {zero_vertex(coord.params), Vertex{{1, 2, 0}}})
            CHECK(coloring_duality_check(coord, I, alpha).holds);

    // a non-equitable coloring is rejected up front
    std::vector<int> broken = parity.colors;
    broken[0] = 1 - broken[0];
    CHECK_THROWS_AS(
        coloring_duality_check(Coloring(parity.params, 2, broken), {1}, zero_vertex(parity.params)),
        NotEquitableError);
}

TEST_CASE("eigencolumn lifts are hypercube eigenfunctions") {
    const std::vector<Coloring> fixtures{
        fixture_parity(SpaceParams(2, 4)),
        fixture_coordinate(SpaceParams(3, 3)),
        fixture_linear_form(SpaceParams(3, 3), Vertex{{1, 1, 0}}),
        fixture_hamming_code_distance(3, 2),
        fixture_all_one_color(SpaceParams(4, 2)),
    };
    for (const Coloring& c : fixtures) {
        const ParameterMatrix s = parameter_matrix_of(c);
        check_balance(c, s);
        const SpectralData sd = spectral_decompose(s, c.params);  // spectrum containment
        for (int i = 0; i < c.r; ++i) {
            const FunctionTable lift = coloring_lift_column(c, sd, i);
            CHECK(is_eigenfunction(lift, sd.mu[static_cast<std::size_t>(i)]));
            CHECK(eigenvalue_number(sd.mu[static_cast<std::size_t>(i)], c.params) ==
                  sd.h[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("fixture construction rules") {
    // a full-support linear form over q=2 is the parity coloring
    CHECK(fixture_linear_form(SpaceParams(2, 4), Vertex{{1, 1, 1, 1}}).colors ==
          fixture_parity(SpaceParams(2, 4)).colors);

    const Coloring coord52 = fixture_coordinate(SpaceParams(5, 2));
    CHECK(coord52.r == 5);
    const ParameterMatrix s52 = parameter_matrix_of(coord52);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(s52.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == (i == j ? 4 : 1));

    // binary m=2 gives the length-3 repetition code; m=1 gives the zero code
    const Coloring rep = fixture_hamming_code_distance(2, 2);
    CHECK(rep.params.n == 3);
    CHECK(class_sizes(rep)[0] == 2);
    CHECK(parameter_matrix_of(rep).s == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
    const Coloring zero_code = fixture_hamming_code_distance(5, 1);
    CHECK(zero_code.params.n == 1);
    CHECK(parameter_matrix_of(zero_code).s == std::vector<std::vector<int>>{{0, 4}, {1, 3}});

    CHECK_THROWS_AS(fixture_parity(SpaceParams(3, 2)), InputError);
    CHECK_THROWS_AS(fixture_hamming_code_distance(4, 2), InputError);  // composite q
    CHECK_THROWS_AS(fixture_linear_form(SpaceParams(2, 3), Vertex{{0, 0, 0}}), InputError);
    CHECK_THROWS_AS(fixture_linear_form(SpaceParams(4, 2), Vertex{{2, 0}}), InputError);

    CHECK_THROWS_AS(builtin_fixture(FixtureRequest{"nope", 2, 2, 0, {}}), InputError);
    CHECK(builtin_fixture(FixtureRequest{"parity", 2, 4, 0, {}}).colors ==
          fixture_parity(SpaceParams(2, 4)).colors);
    CHECK(builtin_fixture(FixtureRequest{"hamming_code_distance", 3, 0, 2, {}}).params.n == 4);
}

TEST_CASE("backtracking search") {
    const ParameterMatrix proper2{2, {{0, 2}, {2, 0}}};
    const auto square = search_colorings(SpaceParams(2, 2), proper2, 0, false);
    REQUIRE(square.size() == 2);
    CHECK(square[0].colors == std::vector<int>{0, 1, 1, 0});
    CHECK(square[1].colors == std::vector<int>{1, 0, 0, 1});
    for (const Coloring& c : square) {
        CHECK(verify_perfect(c, proper2));
        check_balance(c, proper2);
    }

    const ParameterMatrix proper3{2, {{0, 3}, {3, 0}}};
    CHECK(search_colorings(SpaceParams(2, 3), proper3, 0, false).size() == 2);

    const ParameterMatrix triangle{3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
    const auto k3 = search_colorings(SpaceParams(3, 1), triangle, 0, false);
    REQUIRE(k3.size() == 6);
    CHECK(k3.front().colors == std::vector<int>{0, 1, 2});
    CHECK(k3.back().colors == std::vector<int>{2, 1, 0});
    for (std::size_t i = 1; i < k3.size(); ++i) CHECK(k3[i - 1].colors < k3[i].colors);

    // pinning vertex 0 keeps exactly the representatives with color 0 first
    const auto pinned = search_colorings(SpaceParams(2, 2), proper2, 0, true);
    REQUIRE(pinned.size() == 1);
    CHECK(pinned[0].colors == std::vector<int>{0, 1, 1, 0});

    // limit cuts off the enumeration, keeping lexicographic order
    const auto limited = search_colorings(SpaceParams(3, 1), triangle, 2, false);
    REQUIRE(limited.size() == 2);
    CHECK(limited[0].colors == std::vector<int>{0, 1, 2});
    CHECK(limited[1].colors == std::vector<int>{0, 2, 1});

    // no solutions: an S with valid row sums that no coloring realizes
    CHECK(search_colorings(SpaceParams(2, 2), ParameterMatrix{2, {{1, 1}, {2, 0}}}, 0, false)
              .empty());

    // one color: only the trivial coloring
    const auto trivial =
        search_colorings(SpaceParams(2, 2), ParameterMatrix{1, {{2}}}, 0, false);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].colors == std::vector<int>{0, 0, 0, 0});

    CHECK_THROWS_AS(search_colorings(SpaceParams(2, 2), ParameterMatrix{2, {{0, 1}, {1, 0}}}, 0, false),
                    InputError);
}
