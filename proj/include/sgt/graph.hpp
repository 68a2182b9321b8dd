#ifndef SGT_GRAPH_HPP
#define SGT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/matrix.hpp"

namespace sgt {

using Vertex = int;

struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    int sign = 1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Labeled simple graph with a +1/-1 sign on every edge. Vertices are
/// 0..n-1. Immutable once built; every editing operation returns a new graph.
///
/// Storage is the sorted edge list (u < v) plus an n*n sign table so that
/// adjacency and sign queries are O(1).
class SignedGraph {
public:
    SignedGraph() = default;

    /// Validates and normalizes (u, v) to u < v. Each malformed input gets
    /// its own ErrorKind.
    SignedGraph(int n, std::span<const SignedEdge> edges) : n_(n) {
        if (n < 0)
            throw Error(ErrorKind::ParameterRange, "vertex count must be non-negative");
        signs_.assign(static_cast<std::size_t>(n) * n, 0);
        edges_.reserve(edges.size());
        for (auto e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") has an endpoint outside 0.." + std::to_string(n - 1));
            if (e.u == e.v)
                throw Error(ErrorKind::Loop, "loop at vertex " + std::to_string(e.u));
            if (e.sign != 1 && e.sign != -1)
                throw Error(ErrorKind::ParameterRange, "edge sign must be +1 or -1");
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (at(e.u, e.v) != 0)
                throw Error(ErrorKind::DuplicateEdge, "duplicate pair (" + std::to_string(e.u) +
                                                          "," + std::to_string(e.v) + ")");
            set(e.u, e.v, e.sign);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end(), [](const SignedEdge& a, const SignedEdge& b) {
            return std::pair(a.u, a.v) < std::pair(b.u, b.v);
        });
    }

    SignedGraph(int n, std::initializer_list<SignedEdge> edges)
        : SignedGraph(n, std::span<const SignedEdge>(edges.begin(), edges.size())) {}

    SignedGraph(int n, const std::vector<SignedEdge>& edges)
        : SignedGraph(n, std::span<const SignedEdge>(edges)) {}

    /// Builds from a full sign table (row-major n*n, symmetric, zero
    /// diagonal). Used by internal transforms whose output is valid by
    /// construction.
    static SignedGraph from_sign_table(int n, std::vector<std::int8_t> table) {
        SignedGraph g;
        g.n_ = n;
        g.signs_ = std::move(table);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (int s = g.at(u, v); s != 0)
                    g.edges_.push_back({u, v, s});
        return g;
    }

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    std::span<const SignedEdge> edges() const noexcept { return edges_; }

    /// Sign of the pair, or 0 when u and v are not adjacent.
    int sign(Vertex u, Vertex v) const { return at(u, v); }
    bool adjacent(Vertex u, Vertex v) const { return at(u, v) != 0; }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w = 0; w < n_; ++w)
            if (at(v, w) != 0)
                out.push_back(w);
        return out;
    }

    int degree(Vertex v) const {
        int d = 0;
        for (Vertex w = 0; w < n_; ++w)
            d += at(v, w) != 0;
        return d;
    }

    std::size_t negative_edge_count() const {
        return static_cast<std::size_t>(std::count_if(
            edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign < 0; }));
    }

    /// Neighborhood as a bitmask; only meaningful for n <= 64.
    std::uint64_t neighbor_mask(Vertex v) const {
        std::uint64_t m = 0;
        for (Vertex w = 0; w < n_; ++w)
            if (at(v, w) != 0)
                m |= std::uint64_t{1} << w;
        return m;
    }

    const std::vector<std::int8_t>& sign_table() const noexcept { return signs_; }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.signs_ == b.signs_;
    }

private:
    int at(Vertex u, Vertex v) const { return signs_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(Vertex u, Vertex v, int s) {
        signs_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(s);
        signs_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(s);
    }

    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::int8_t> signs_;
};

/// The vertex set U of a switching. Kept sorted and duplicate-free.
class SwitchSet {
public:
    SwitchSet() = default;
    explicit SwitchSet(std::vector<Vertex> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (!members_.empty() && members_.front() < 0)
            throw Error(ErrorKind::InvalidSwitchSet, "switch set contains a negative label");
    }

    static SwitchSet from_mask(std::uint64_t mask) {
        std::vector<Vertex> m;
        for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
            if (mask & 1)
                m.push_back(v);
        return SwitchSet(std::move(m));
    }

    std::span<const Vertex> members() const noexcept { return members_; }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

    /// +1/-1 diagonal of S_U for an order-n graph (-1 on members).
    std::vector<int> signature(int n) const {
        validate(n);
        std::vector<int> s(static_cast<std::size_t>(n), 1);
        for (auto v : members_)
            s[static_cast<std::size_t>(v)] = -1;
        return s;
    }

    void validate(int n) const {
        if (!members_.empty() && members_.back() >= n)
            throw Error(ErrorKind::InvalidSwitchSet,
                        "switch set member " + std::to_string(members_.back()) +
                            " out of range for order " + std::to_string(n));
    }

    friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

private:
    std::vector<Vertex> members_;
};

inline SignedGraph make_graph(int n, const std::vector<SignedEdge>& edges) {
    return SignedGraph(n, edges);
}

namespace detail {

template <class F>
SignedGraph transform_signs(const SignedGraph& g, F&& f) {
    int n = g.order();
    std::vector<std::int8_t> table(g.sign_table());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            auto& s = table[static_cast<std::size_t>(u) * n + v];
            if (s != 0)
                s = static_cast<std::int8_t>(f(u, v, s));
        }
    return SignedGraph::from_sign_table(n, std::move(table));
}

} // namespace detail

/// Flips every edge with exactly one endpoint in U.
inline SignedGraph switched(const SignedGraph& g, const SwitchSet& u_set) {
    auto s = u_set.signature(g.order());
    return detail::transform_signs(g, [&](int u, int v, int sign) {
        return sign * s[static_cast<std::size_t>(u)] * s[static_cast<std::size_t>(v)];
    });
}

inline SignedGraph negate(const SignedGraph& g) {
    return detail::transform_signs(g, [](int, int, int sign) { return -sign; });
}

inline SignedGraph underlying(const SignedGraph& g) {
    return detail::transform_signs(g, [](int, int, int) { return 1; });
}

inline SignedMatrix adjacency_matrix(const SignedGraph& g) {
    auto n = static_cast<std::size_t>(g.order());
    IntMatrix a(n, n);
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = e.sign;
        a(e.v, e.u) = e.sign;
    }
    return SignedMatrix(std::move(a));
}

/// Relabels vertex v as perm[v].
inline SignedGraph permuted(const SignedGraph& g, std::span<const Vertex> perm) {
    int n = g.order();
    if (perm.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::ParameterRange, "permutation length must equal the graph order");
    std::vector<std::int8_t> table(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : g.edges()) {
        auto pu = static_cast<std::size_t>(perm[e.u]);
        auto pv = static_cast<std::size_t>(perm[e.v]);
        table[pu * n + pv] = static_cast<std::int8_t>(e.sign);
        table[pv * n + pu] = static_cast<std::int8_t>(e.sign);
    }
    return SignedGraph::from_sign_table(n, std::move(table));
}

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
inline SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> vertices) {
    int k = static_cast<int>(vertices.size());
    std::vector<std::int8_t> table(static_cast<std::size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b)
                table[static_cast<std::size_t>(a) * k + b] =
                    static_cast<std::int8_t>(g.sign(vertices[a], vertices[b]));
    return SignedGraph::from_sign_table(k, std::move(table));
}

/// BFS spanning forest: roots are the smallest label of each component and
/// neighbours are visited in label order. parent[root] == -1.
struct SpanningForest {
    std::vector<Vertex> parent;
    std::vector<Vertex> order; // BFS visiting order, components concatenated
    int components = 0;

    bool is_tree_edge(Vertex u, Vertex v) const {
        return parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u;
    }
};

inline SpanningForest spanning_forest(const SignedGraph& g) {
    int n = g.order();
    SpanningForest f;
    f.parent.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    f.order.reserve(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        ++f.components;
        seen[root] = 1;
        std::size_t head = f.order.size();
        f.order.push_back(root);
        while (head < f.order.size()) {
            Vertex u = f.order[head++];
            for (Vertex w = 0; w < n; ++w) {
                if (g.adjacent(u, w) && !seen[w]) {
                    seen[w] = 1;
                    f.parent[w] = u;
                    f.order.push_back(w);
                }
            }
        }
    }
    return f;
}

/// Switching that makes every spanning-forest edge positive, together with
/// the resulting graph.
struct CanonicalSwitching {
    SignedGraph graph;
    SwitchSet applied;
};

inline CanonicalSwitching canonical_switching(const SignedGraph& g) {
    auto forest = spanning_forest(g);
    std::vector<int> potential(static_cast<std::size_t>(g.order()), 1);
    for (Vertex v : forest.order) {
        Vertex p = forest.parent[v];
        if (p >= 0)
            potential[v] = potential[p] * g.sign(p, v);
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g.order(); ++v)
        if (potential[v] < 0)
            members.push_back(v);
    SwitchSet u_set(std::move(members));
    return {switched(g, u_set), std::move(u_set)};
}

/// Representative of the switching class of g for its fixed labeling. Two
/// graphs with the same labeled underlying graph are switching equivalent iff
/// their canonical forms are equal.
inline SignedGraph canonical_switch(const SignedGraph& g) {
    return canonical_switching(g).graph;
}

/// True iff some relabeling followed by some switching maps g1 onto g2.
/// Brute force over all n! permutations; meant for n <= 10.
inline bool are_switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size())
        return false;
    int n = g1.order();
    std::vector<int> d1(static_cast<std::size_t>(n)), d2(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        d1[v] = g1.degree(v);
        d2[v] = g2.degree(v);
    }
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2)
            return false;
    }
    auto target = canonical_switch(g1);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            ok = d2[v] == d1[perm[v]];
        for (const auto& e : g2.edges()) {
            if (!ok)
                break;
            ok = g1.adjacent(perm[e.u], perm[e.v]);
        }
        if (ok && canonical_switch(permuted(g2, perm)) == target)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace sgt

#endif // SGT_GRAPH_HPP
