// Perfect colorings (equitable partitions) of H(n,q) and their duality
// identity. A coloring with parameter matrix S has, for every vertex of
// color i, exactly s_ij neighbors of color j. Columns of T (the
// eigenvectors of S) lift to eigenfunctions of the hypercube: with F^i
// defined vertexwise as T[color(vertex)][i], S T^i = mu_i T^i implies that
// F^i is an eigenfunction for mu_i. The coloring identity is verified per
// eigencolumn with the eigenfunction identity at number
// h_i = ((q-1)n - mu_i)/q, which is equivalent to the matrix form
//
//   g^{Ic,alpha}_C (x+(q-1)y)^{h(S)-|Ic|E} = g^{I,alpha}_C(x',y') (x'+(q-1)y')^{h(S)-|I|E}
//
// after conjugating by the invertible T.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hcube/eigen.hpp"
#include "hcube/matrix.hpp"

namespace hcube {

struct Coloring {
    SpaceParams params;
    int r;                    // number of colors
    std::vector<int> colors;  // color of each vertex, by index

    Coloring(SpaceParams p, int r_, std::vector<int> colors_)
        : params(p), r(r_), colors(std::move(colors_)) {
        if (r < 1) throw InputError("coloring needs at least one color");
        if (colors.size() != params.vertex_count())
            throw InputError("coloring length does not equal q^n");
        std::vector<bool> seen(static_cast<std::size_t>(r), false);
        for (int c : colors) {
            if (c < 0 || c >= r) throw InputError("color out of range [0, r)");
            seen[static_cast<std::size_t>(c)] = true;
        }
        for (bool s : seen)
            if (!s) throw InputError("every color class must be nonempty");
    }
};

struct ParameterMatrix {
    int r;
    std::vector<std::vector<int>> s;  // r rows of r nonnegative entries

    friend bool operator==(const ParameterMatrix& a, const ParameterMatrix& b) {
        return a.r == b.r && a.s == b.s;
    }
    friend bool operator!=(const ParameterMatrix& a, const ParameterMatrix& b) {
        return !(a == b);
    }
};

inline void validate_parameter_matrix(const ParameterMatrix& m) {
    if (m.r < 1 || m.s.size() != static_cast<std::size_t>(m.r))
        throw InputError("parameter matrix must be square with r >= 1");
    for (const auto& row : m.s) {
        if (row.size() != static_cast<std::size_t>(m.r))
            throw InputError("parameter matrix must be square");
        for (int v : row)
            if (v < 0) throw InputError("parameter matrix entries must be >= 0");
    }
}

// Extracts S by counting neighbor colors at every vertex; all vertices of a
// color must agree. The witness of a disagreement is the first such pair.
inline ParameterMatrix parameter_matrix_of(const Coloring& c) {
    const SpaceParams& p = c.params;
    const std::size_t count = p.vertex_count();
    ParameterMatrix m{c.r, {}};
    m.s.resize(static_cast<std::size_t>(c.r));
    std::vector<VertexIndex> first_of_color(static_cast<std::size_t>(c.r), 0);
    std::vector<int> row(static_cast<std::size_t>(c.r));
    for (VertexIndex v = 0; v < count; ++v) {
        std::fill(row.begin(), row.end(), 0);
        for_each_neighbor(v, p, [&](VertexIndex nb) {
            ++row[static_cast<std::size_t>(c.colors[nb])];
        });
        auto& expected = m.s[static_cast<std::size_t>(c.colors[v])];
        if (expected.empty()) {
            expected = row;
            first_of_color[static_cast<std::size_t>(c.colors[v])] = v;
        } else if (expected != row) {
            throw NotEquitableError(first_of_color[static_cast<std::size_t>(c.colors[v])], v,
                                    c.colors[v]);
        }
    }
    return m;
}

inline bool verify_perfect(const Coloring& c, const ParameterMatrix& s) {
    validate_parameter_matrix(s);
    if (s.r != c.r) return false;
    try {
        return parameter_matrix_of(c) == s;
    } catch (const NotEquitableError&) {
        return false;
    }
}

struct LocalDistributionMatrix {
    FaceSpec face;
    std::vector<std::vector<long>> counts;  // r rows, |I|+1 columns
};

inline LocalDistributionMatrix local_distribution_matrix(const Coloring& c, const FaceSpec& face) {
    validate_face(face, c.params);
    LocalDistributionMatrix m{face, std::vector<std::vector<long>>(
                                        static_cast<std::size_t>(c.r),
                                        std::vector<long>(static_cast<std::size_t>(face.dim()) + 1, 0))};
    for (const Vertex& v : face_vertices(face, c.params))
        ++m.counts[static_cast<std::size_t>(c.colors[index_of(v, c.params)])]
                  [static_cast<std::size_t>(distance(v, face.anchor))];
    return m;
}

// One enumerator per color; the components sum to (x+(q-1)y)^{|I|}.
using VectorEnumerator = std::vector<HomoPoly>;

inline VectorEnumerator vector_enumerator(const Coloring& c, const FaceSpec& face) {
    const LocalDistributionMatrix m = local_distribution_matrix(c, face);
    std::vector<HomoPoly> out;
    out.reserve(static_cast<std::size_t>(c.r));
    for (const auto& row : m.counts) {
        HomoPoly g(c.params.q, face.dim());
        for (std::size_t j = 0; j < row.size(); ++j)
            g.coeff(static_cast<int>(j)) = Cyclotomic(c.params.q, Rational(row[j]));
        out.push_back(std::move(g));
    }
    return out;
}

// Exact eigendecomposition of S over the hypercube spectrum {lambda_h}.
struct SpectralData {
    RationalMatrix T;      // columns are eigenvectors, grouped by ascending h
    RationalMatrix T_inv;
    std::vector<long> mu;  // eigenvalue per column
    std::vector<int> h;    // eigenvalue number per column
};

inline RationalMatrix parameter_matrix_as_rational(const ParameterMatrix& s) {
    RationalMatrix m(s.r, s.r);
    for (int i = 0; i < s.r; ++i)
        for (int j = 0; j < s.r; ++j) m.at(i, j) = s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

inline SpectralData spectral_decompose(const ParameterMatrix& s, const SpaceParams& p) {
    validate_parameter_matrix(s);
    const RationalMatrix sm = parameter_matrix_as_rational(s);
    std::vector<std::vector<Rational>> columns;
    std::vector<long> mu;
    std::vector<int> numbers;
    for (int h = 0; h <= p.n; ++h) {
        const long lambda = eigenvalue_for_number(h, p);
        RationalMatrix shifted = sm;
        for (int i = 0; i < s.r; ++i) shifted.at(i, i) -= lambda;
        for (auto& v : mat_nullspace(shifted)) {
            columns.push_back(std::move(v));
            mu.push_back(lambda);
            numbers.push_back(h);
        }
    }
    if (static_cast<int>(columns.size()) != s.r)
        throw NotDiagonalizableError(
            "parameter matrix has only " + std::to_string(columns.size()) + " of " +
            std::to_string(s.r) + " eigenvectors over the hypercube spectrum");

    RationalMatrix t(s.r, s.r);
    for (int j = 0; j < s.r; ++j)
        for (int i = 0; i < s.r; ++i) t.at(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    SpectralData data{t, mat_inverse(t), std::move(mu), std::move(numbers)};

    // S T^i = mu_i T^i holds by construction; breaking it here is a bug.
    for (int j = 0; j < s.r; ++j)
        for (int i = 0; i < s.r; ++i) {
            Rational acc(0);
            for (int k = 0; k < s.r; ++k) acc += sm.at(i, k) * data.T.at(k, j);
            if (acc != Rational(data.mu[static_cast<std::size_t>(j)]) * data.T.at(i, j))
                throw InternalError("eigendecomposition failed verification");
        }
    return data;
}

// h(S) = ((q-1)nE - S)/q, the matrix of eigenvalue numbers.
inline RationalMatrix h_matrix(const ParameterMatrix& s, const SpaceParams& p) {
    validate_parameter_matrix(s);
    const long degree = static_cast<long>(p.q - 1) * p.n;
    RationalMatrix m(s.r, s.r);
    for (int i = 0; i < s.r; ++i)
        for (int j = 0; j < s.r; ++j) {
            long v = (i == j ? degree : 0) - s.s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            m.at(i, j) = make_rational(v, p.q);
        }
    return m;
}

// (x+(q-1)y)^{h(S)-kE} as P / (x+(q-1)y)^d with polynomial entries:
// P = T diag((x+(q-1)y)^{h_i-k+d}) T^{-1}, d = max(0, max_i(k-h_i)). The
// entries mix homogeneous parts of different degrees, hence BivarPoly.
// Independent of the eigenbasis choice within each eigenspace.
struct MatrixEnumeratorPower {
    std::vector<std::vector<BivarPoly>> entries;  // r x r
    int d;
};

inline MatrixEnumeratorPower matrix_enumerator_power(const SpectralData& sd, int k,
                                                     const SpaceParams& p) {
    const int r = sd.T.rows();
    int d = 0;
    for (int h : sd.h) d = std::max(d, k - h);
    std::map<int, HomoPoly> pow_cache;
    MatrixEnumeratorPower out{std::vector<std::vector<BivarPoly>>(
                                  static_cast<std::size_t>(r),
                                  std::vector<BivarPoly>(static_cast<std::size_t>(r))),
                              d};
    for (int i = 0; i < r; ++i) {
        const int e = sd.h[static_cast<std::size_t>(i)] - k + d;
        auto it = pow_cache.find(e);
        if (it == pow_cache.end())
            it = pow_cache.emplace(e, HomoPoly::linear_sum_pow(p.q, e)).first;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b)
                out.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].add_scaled(
                    it->second, sd.T.at(a, i) * sd.T_inv.at(i, b));
    }
    return out;
}

inline MatrixEnumeratorPower matrix_enumerator_power(const ParameterMatrix& s, int k,
                                                     const SpaceParams& p) {
    return matrix_enumerator_power(spectral_decompose(s, p), k, p);
}

// The lifted scalar function F^i(vertex) = T[color(vertex)][i]; an
// eigenfunction of the hypercube for mu_i.
inline FunctionTable coloring_lift_column(const Coloring& c, const SpectralData& sd, int column) {
    FunctionTable f = make_zero_table(c.params);
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        f.values[v] = Cyclotomic(c.params.q, sd.T.at(c.colors[v], column));
    return f;
}

struct ColoringDualityVerdict {
    bool holds;                           // all eigencolumn identities hold
    std::vector<IdentityVerdict> columns; // per eigencolumn, in T column order
    std::vector<long> mu;
    std::vector<int> h;
};

// Verifies the coloring duality identity per eigencolumn: the combination
// G_i = sum_k T[k][i] g_{C_k} satisfies the eigenfunction identity with
// number h_i. Aggregate holds iff every column holds.
inline ColoringDualityVerdict coloring_duality_check(const Coloring& c, const std::vector<int>& I,
                                                     const Vertex& alpha) {
    const SpaceParams& p = c.params;
    validate_face(FaceSpec{zero_vertex(p), I}, p);
    validate_vertex(alpha, p);
    const ParameterMatrix s = parameter_matrix_of(c);  // NotEquitable surfaces here
    const SpectralData sd = spectral_decompose(s, p);

    const std::vector<int> I_comp = complement_set(I, p.n);
    const std::vector<HomoPoly> g_free = vector_enumerator(c, FaceSpec{alpha, I});
    const std::vector<HomoPoly> g_comp = vector_enumerator(c, FaceSpec{alpha, I_comp});
    const int dim_i = static_cast<int>(I.size());
    const int dim_c = static_cast<int>(I_comp.size());

    ColoringDualityVerdict verdict{true, {}, sd.mu, sd.h};
    for (int i = 0; i < c.r; ++i) {
        HomoPoly comb_free(p.q, dim_i);
        HomoPoly comb_comp(p.q, dim_c);
        for (int k = 0; k < c.r; ++k) {
            comb_free += g_free[static_cast<std::size_t>(k)].scaled(sd.T.at(k, i));
            comb_comp += g_comp[static_cast<std::size_t>(k)].scaled(sd.T.at(k, i));
        }
        const int h = sd.h[static_cast<std::size_t>(i)];
        const int clear_sum = std::max(0, dim_c - h);
        const int clear_diff = std::max(0, dim_i - h);

        HomoPoly lhs = poly_mul_linear_power(comb_comp, LinearBase::Sum, std::max(0, h - dim_c));
        lhs = poly_mul_linear_power(lhs, LinearBase::Diff, clear_diff);
        HomoPoly rhs = poly_mul_linear_power(comb_free.substitute_dual(), LinearBase::Diff,
                                             std::max(0, h - dim_i));
        rhs = poly_mul_linear_power(rhs, LinearBase::Sum, clear_sum);

        const bool holds = lhs == rhs;
        verdict.holds = verdict.holds && holds;
        verdict.columns.push_back(
            IdentityVerdict{holds, std::move(lhs), std::move(rhs), clear_sum, clear_diff});
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// Built-in colorings used as fixtures by the test suites and the CLI.

inline Coloring fixture_all_one_color(const SpaceParams& p) {
    return Coloring(p, 1, std::vector<int>(p.vertex_count(), 0));
}

// color = first coordinate.
inline Coloring fixture_coordinate(const SpaceParams& p) {
    const std::size_t count = p.vertex_count();
    std::vector<int> colors(count);
    for (VertexIndex v = 0; v < count; ++v) colors[v] = vertex_of(v, p).digits[0];
    return Coloring(p, p.q, std::move(colors));
}

// color = Hamming weight mod 2; binary only.
inline Coloring fixture_parity(const SpaceParams& p) {
    if (p.q != 2) throw InputError("parity fixture requires q = 2");
    const std::size_t count = p.vertex_count();
    std::vector<int> colors(count);
    for (VertexIndex v = 0; v < count; ++v) colors[v] = weight(vertex_of(v, p)) % 2;
    return Coloring(p, 2, std::move(colors));
}

// color = <c, vertex> mod q; needs the form to be onto Z_q so that all q
// classes are nonempty.
inline Coloring fixture_linear_form(const SpaceParams& p, const Vertex& c) {
    validate_vertex(c, p);
    long g = p.q;
    for (int d : c.digits) g = std::gcd(g, static_cast<long>(d));
    if (g != 1)
        throw InputError("linear form is not surjective onto Z_q; some color would be empty");
    const std::size_t count = p.vertex_count();
    std::vector<int> colors(count);
    for (VertexIndex v = 0; v < count; ++v) colors[v] = inner_product(vertex_of(v, p), c, p);
    return Coloring(p, p.q, std::move(colors));
}

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace detail

// Distance coloring {code, complement} of the q-ary Hamming code of length
// n = (q^m-1)/(q-1), built from the parity-check matrix whose columns are
// the projective representatives (first nonzero entry 1) in index order.
// Prime q only: the construction needs a field.
inline Coloring fixture_hamming_code_distance(int q, int m) {
    if (!detail::is_prime(q)) throw InputError("hamming code fixture requires prime q");
    if (m < 1) throw InputError("hamming code fixture requires m >= 1");

    const SpaceParams column_space(q, m);
    std::vector<std::vector<int>> check_columns;
    const std::size_t col_count = column_space.vertex_count();
    for (VertexIndex i = 1; i < col_count; ++i) {
        const Vertex v = vertex_of(i, column_space);
        int first = 0;
        for (int d : v.digits)
            if (d != 0) {
                first = d;
                break;
            }
        if (first == 1) check_columns.push_back(v.digits);
    }
    const int n = static_cast<int>(check_columns.size());  // (q^m-1)/(q-1)

    const SpaceParams p(q, n);
    const std::size_t count = p.vertex_count();
    std::vector<int> colors(count);
    for (VertexIndex v = 0; v < count; ++v) {
        const Vertex word = vertex_of(v, p);
        bool in_code = true;
        for (int row = 0; row < m && in_code; ++row) {
            long acc = 0;
            for (int j = 0; j < n; ++j)
                acc += static_cast<long>(word.digits[static_cast<std::size_t>(j)]) *
                       check_columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)] % q;
            in_code = acc % q == 0;
        }
        colors[v] = in_code ? 0 : 1;
    }
    return Coloring(p, 2, std::move(colors));
}

// Dispatcher used by the CLI; every fixture is re-verified to be perfect
// before it is returned.
struct FixtureRequest {
    std::string name;
    int q = 0;
    int n = 0;
    int m = 0;
    std::vector<int> c;  // linear form coefficients
};

inline Coloring builtin_fixture(const FixtureRequest& req) {
    const auto build = [&]() -> Coloring {
        if (req.name == "all_one_color") return fixture_all_one_color(SpaceParams(req.q, req.n));
        if (req.name == "coordinate") return fixture_coordinate(SpaceParams(req.q, req.n));
        if (req.name == "parity") return fixture_parity(SpaceParams(req.q, req.n));
        if (req.name == "linear_form")
            return fixture_linear_form(SpaceParams(req.q, req.n), Vertex{req.c});
        if (req.name == "hamming_code_distance") return fixture_hamming_code_distance(req.q, req.m);
        throw InputError("unknown fixture \"" + req.name + "\"");
    };
    Coloring c = build();
    parameter_matrix_of(c);  // throws if the fixture is not perfect
    return c;
}

// ---------------------------------------------------------------------------
// Backtracking search for perfect colorings with a prescribed S.
//
// Vertices are assigned in index order, colors tried in ascending order, so
// results arrive in lexicographic order of the color sequence. A partial
// assignment dies as soon as some assigned vertex has more neighbors of a
// color than its row of S allows; because the row sums equal the degree,
// meeting every upper bound at completion forces equality.

namespace detail {

class ColoringSearch {
  public:
    ColoringSearch(const SpaceParams& p, const ParameterMatrix& s, std::size_t limit,
                   bool fix_first)
        : p_(p), s_(s), limit_(limit), fix_first_(fix_first), count_(p.vertex_count()),
          colors_(count_, -1),
          neighbor_counts_(count_, std::vector<int>(static_cast<std::size_t>(s.r), 0)) {
        neighbors_.reserve(count_);
        for (VertexIndex v = 0; v < count_; ++v) {
            std::vector<VertexIndex> nb;
            for_each_neighbor(v, p_, [&](VertexIndex u) { nb.push_back(u); });
            std::sort(nb.begin(), nb.end());
            neighbors_.push_back(std::move(nb));
        }
    }

    std::vector<Coloring> run() {
        results_.clear();
        descend(0);
        return std::move(results_);
    }

  private:
    bool color_feasible(VertexIndex v, int color) const {
        const auto& row = s_.s[static_cast<std::size_t>(color)];
        const auto& have = neighbor_counts_[v];
        for (int j = 0; j < s_.r; ++j)
            if (have[static_cast<std::size_t>(j)] > row[static_cast<std::size_t>(j)]) return false;
        return true;
    }

    // Places color on v and checks every affected assigned vertex; rolls
    // back and reports false when a row of S becomes unreachable.
    bool assign(VertexIndex v, int color) {
        if (!color_feasible(v, color)) return false;
        colors_[v] = color;
        bool ok = true;
        for (VertexIndex u : neighbors_[v]) {
            ++neighbor_counts_[u][static_cast<std::size_t>(color)];
            if (colors_[u] >= 0 &&
                neighbor_counts_[u][static_cast<std::size_t>(color)] >
                    s_.s[static_cast<std::size_t>(colors_[u])][static_cast<std::size_t>(color)])
                ok = false;
        }
        if (!ok) unassign(v, color);
        return ok;
    }

    void unassign(VertexIndex v, int color) {
        for (VertexIndex u : neighbors_[v]) --neighbor_counts_[u][static_cast<std::size_t>(color)];
        colors_[v] = -1;
    }

    void descend(VertexIndex v) {
        if (limit_reached()) return;
        if (v == count_) {
            emit();
            return;
        }
        const int last = fix_first_ && v == 0 ? 0 : s_.r - 1;
        for (int color = 0; color <= last; ++color) {
            if (!assign(v, color)) continue;
            descend(v + 1);
            unassign(v, color);
            if (limit_reached()) return;
        }
    }

    void emit() {
        for (int used = 0; used < s_.r; ++used)
            if (std::find(colors_.begin(), colors_.end(), used) == colors_.end())
                return;  // an empty class is not a valid r-coloring
        Coloring candidate(p_, s_.r, colors_);
        if (verify_perfect(candidate, s_)) results_.push_back(std::move(candidate));
    }

    bool limit_reached() const { return limit_ != 0 && results_.size() >= limit_; }

    SpaceParams p_;
    ParameterMatrix s_;
    std::size_t limit_;
    bool fix_first_;
    std::size_t count_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> neighbor_counts_;  // assigned neighbors by color
    std::vector<std::vector<VertexIndex>> neighbors_;
    std::vector<Coloring> results_;
};

}  // namespace detail

// Complete colorings with parameter matrix S, lexicographic by color
// sequence, at most `limit` of them (0 = no limit). fix_first pins vertex 0
// to color 0, which only breaks color-permutation symmetry; the enumeration
// is then deliberately incomplete.
inline std::vector<Coloring> search_colorings(const SpaceParams& p, const ParameterMatrix& s,
                                              std::size_t limit, bool fix_first) {
    validate_parameter_matrix(s);
    const long degree = static_cast<long>(p.q - 1) * p.n;
    for (const auto& row : s.s)
        if (std::accumulate(row.begin(), row.end(), 0L) != degree)
            throw InputError("every row of S must sum to the degree (q-1)n");
    return detail::ColoringSearch(p, s, limit, fix_first).run();
}

}  // namespace hcube
