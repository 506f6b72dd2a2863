// Combinatorics of the q-ary n-dimensional hypercube H(n,q): vertices of
// F_q^n, base-q indexing, Hamming weight/distance, spheres, faces and
// orthogonal faces.
//
// Serialization order is fixed everywhere: a vertex (v_1,...,v_n) has index
// sum v_i q^{n-i}, i.e. big-endian base q with coordinate 1 most
// significant. Coordinate sets I are 1-based, sorted, duplicate-free.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "hcube/errors.hpp"

namespace hcube {

using VertexIndex = std::size_t;

struct SpaceParams {
    int q;
    int n;

    SpaceParams(int q_, int n_) : q(q_), n(n_) {
        if (q < 2) throw InputError("alphabet size q must be >= 2");
        if (n < 1) throw InputError("dimension n must be >= 1");
        vertex_count();  // reject spaces whose index range overflows
    }

    std::size_t vertex_count() const {
        std::size_t count = 1;
        for (int i = 0; i < n; ++i) {
            if (count > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(q))
                throw InputError("q^n exceeds the platform index range");
            count *= static_cast<std::size_t>(q);
        }
        return count;
    }

    friend bool operator==(const SpaceParams& a, const SpaceParams& b) {
        return a.q == b.q && a.n == b.n;
    }
    friend bool operator!=(const SpaceParams& a, const SpaceParams& b) { return !(a == b); }
};

struct Vertex {
    std::vector<int> digits;  // digits[i] is coordinate i+1, each in [0, q)

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.digits == b.digits; }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
};

inline void validate_vertex(const Vertex& v, const SpaceParams& p) {
    if (v.digits.size() != static_cast<std::size_t>(p.n))
        throw InputError("vertex has wrong number of coordinates");
    for (int d : v.digits)
        if (d < 0 || d >= p.q) throw InputError("vertex digit out of range [0, q)");
}

inline Vertex zero_vertex(const SpaceParams& p) {
    return Vertex{std::vector<int>(static_cast<std::size_t>(p.n), 0)};
}

inline VertexIndex index_of(const Vertex& v, const SpaceParams& p) {
    validate_vertex(v, p);
    VertexIndex idx = 0;
    for (int d : v.digits) idx = idx * static_cast<VertexIndex>(p.q) + static_cast<VertexIndex>(d);
    return idx;
}

inline Vertex vertex_of(VertexIndex idx, const SpaceParams& p) {
    if (idx >= p.vertex_count()) throw InputError("vertex index out of range");
    Vertex v = zero_vertex(p);
    for (int i = p.n; i-- > 0;) {
        v.digits[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<VertexIndex>(p.q));
        idx /= static_cast<VertexIndex>(p.q);
    }
    return v;
}

inline int weight(const Vertex& v) {
    int w = 0;
    for (int d : v.digits)
        if (d != 0) ++w;
    return w;
}

// Support s(v): the 1-based positions of the nonzero coordinates.
inline std::vector<int> support(const Vertex& v) {
    std::vector<int> s;
    for (std::size_t i = 0; i < v.digits.size(); ++i)
        if (v.digits[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

inline int distance(const Vertex& u, const Vertex& v) {
    if (u.digits.size() != v.digits.size()) throw InputError("vertices have different lengths");
    int d = 0;
    for (std::size_t i = 0; i < u.digits.size(); ++i)
        if (u.digits[i] != v.digits[i]) ++d;  // u_i - v_i != 0 mod q
    return d;
}

inline Vertex vertex_add(const Vertex& u, const Vertex& v, const SpaceParams& p) {
    validate_vertex(u, p);
    validate_vertex(v, p);
    Vertex r = u;
    for (std::size_t i = 0; i < r.digits.size(); ++i) r.digits[i] = (r.digits[i] + v.digits[i]) % p.q;
    return r;
}

inline Vertex vertex_sub(const Vertex& u, const Vertex& v, const SpaceParams& p) {
    validate_vertex(u, p);
    validate_vertex(v, p);
    Vertex r = u;
    for (std::size_t i = 0; i < r.digits.size(); ++i)
        r.digits[i] = ((r.digits[i] - v.digits[i]) % p.q + p.q) % p.q;
    return r;
}

// <u,v> = sum u_i v_i mod q.
inline int inner_product(const Vertex& u, const Vertex& v, const SpaceParams& p) {
    if (u.digits.size() != v.digits.size()) throw InputError("vertices have different lengths");
    long acc = 0;
    for (std::size_t i = 0; i < u.digits.size(); ++i)
        acc += static_cast<long>(u.digits[i]) * v.digits[i] % p.q;
    return static_cast<int>(acc % p.q);
}

// Vertices at distance exactly `radius`, ascending index order. A radius
// above n matches nothing and yields an empty list.
inline std::vector<Vertex> sphere(const Vertex& center, int radius, const SpaceParams& p) {
    validate_vertex(center, p);
    if (radius < 0) throw InputError("sphere radius must be >= 0");
    std::vector<Vertex> out;
    if (radius > p.n) return out;
    const std::size_t count = p.vertex_count();
    for (VertexIndex i = 0; i < count; ++i) {
        Vertex v = vertex_of(i, p);
        if (distance(v, center) == radius) out.push_back(std::move(v));
    }
    return out;
}

// A face Gamma_I(alpha): all vertices that agree with the anchor outside
// the free coordinate set I.
struct FaceSpec {
    Vertex anchor;
    std::vector<int> free_set;  // sorted, distinct, 1-based

    int dim() const { return static_cast<int>(free_set.size()); }
};

inline void validate_face(const FaceSpec& f, const SpaceParams& p) {
    validate_vertex(f.anchor, p);
    if (!std::is_sorted(f.free_set.begin(), f.free_set.end()))
        throw InputError("face free set must be sorted ascending");
    if (std::adjacent_find(f.free_set.begin(), f.free_set.end()) != f.free_set.end())
        throw InputError("face free set has a duplicate index");
    for (int i : f.free_set)
        if (i < 1 || i > p.n) throw InputError("face free index out of [1, n]");
}

inline std::vector<int> complement_set(const std::vector<int>& index_set, int n) {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i) {
        if (k < index_set.size() && index_set[k] == i) {
            ++k;
            continue;
        }
        comp.push_back(i);
    }
    return comp;
}

inline FaceSpec orthogonal_face(const FaceSpec& f, const SpaceParams& p) {
    validate_face(f, p);
    return FaceSpec{f.anchor, complement_set(f.free_set, p.n)};
}

// All q^{|I|} face vertices, ordered by the base-q reading of the free
// coordinates with the smallest free index most significant. This is also
// ascending index order.
inline std::vector<Vertex> face_vertices(const FaceSpec& f, const SpaceParams& p) {
    validate_face(f, p);
    const int m = f.dim();
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<std::size_t>(p.q);
    std::vector<Vertex> out;
    out.reserve(total);
    for (std::size_t t = 0; t < total; ++t) {
        Vertex v = f.anchor;
        std::size_t rest = t;
        for (int i = m; i-- > 0;) {
            v.digits[static_cast<std::size_t>(f.free_set[static_cast<std::size_t>(i)] - 1)] =
                static_cast<int>(rest % static_cast<std::size_t>(p.q));
            rest /= static_cast<std::size_t>(p.q);
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline int set_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++count, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return count;
}

// Calls fn(neighbor_index) for the n(q-1) vertices at distance 1.
template <typename Fn>
void for_each_neighbor(VertexIndex idx, const SpaceParams& p, Fn&& fn) {
    const Vertex v = vertex_of(idx, p);
    long long place = 1;
    for (int i = p.n; i-- > 0;) {
        const int d = v.digits[static_cast<std::size_t>(i)];
        for (int other = 0; other < p.q; ++other) {
            if (other == d) continue;
            const long long delta = static_cast<long long>(other - d) * place;
            fn(static_cast<VertexIndex>(static_cast<long long>(idx) + delta));
        }
        place *= p.q;
    }
}

}  // namespace hcube
