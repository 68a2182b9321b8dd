#ifndef SGT_INVARIANTS_HPP
#define SGT_INVARIANTS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

/// Either a switching that makes the graph all-positive, or a negative
/// cycle given as its vertex sequence (closing edge implied).
using BalanceCertificate = std::variant<SwitchSet, std::vector<Vertex>>;

struct BalanceResult {
    bool balanced = true;
    BalanceCertificate certificate;
};

/// Sign product along a closed vertex sequence; 0 if some step is not an edge.
inline int cycle_sign(const SignedGraph& g, std::span<const Vertex> cycle) {
    int s = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        s *= g.sign(cycle[i], cycle[(i + 1) % cycle.size()]);
    return s;
}

inline bool verify_certificate(const SignedGraph& g, const BalanceResult& r) {
    if (r.balanced) {
        const auto* u = std::get_if<SwitchSet>(&r.certificate);
        if (u == nullptr)
            return false;
        auto h = switched(g, *u);
        return h.negative_edge_count() == 0;
    }
    const auto* cycle = std::get_if<std::vector<Vertex>>(&r.certificate);
    if (cycle == nullptr || cycle->size() < 3)
        return false;
    auto sorted = *cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return cycle_sign(g, *cycle) == -1;
}

/// Balanced iff the spanning-forest normalization leaves no negative edge.
/// Otherwise any negative non-forest edge closes a negative fundamental
/// cycle, which is returned as the witness.
inline BalanceResult is_balanced(const SignedGraph& g) {
    auto forest = spanning_forest(g);
    auto canon = canonical_switching(g);
    for (const auto& e : canon.graph.edges()) {
        if (e.sign > 0)
            continue;
        // Walk both endpoints up to their lowest common ancestor.
        std::vector<int> depth(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : forest.order)
            if (forest.parent[v] >= 0)
                depth[v] = depth[forest.parent[v]] + 1;
        std::vector<Vertex> left{e.u}, right{e.v};
        Vertex a = e.u, b = e.v;
        while (a != b) {
            if (depth[a] >= depth[b]) {
                a = forest.parent[a];
                left.push_back(a);
            } else {
                b = forest.parent[b];
                right.push_back(b);
            }
        }
        right.pop_back(); // common ancestor already in `left`
        left.insert(left.end(), right.rbegin(), right.rend());
        return {false, std::move(left)};
    }
    return {true, std::move(canon.applied)};
}

/// Length of a shortest negative cycle, or nullopt if g is balanced. BFS on
/// the signed double cover from every vertex: the shortest walk from (v,+)
/// to (v,-) is a shortest negative closed walk through v, and the minimum
/// over v is the negative girth.
inline std::optional<int> negative_girth(const SignedGraph& g) {
    const int n = g.order();
    std::optional<int> best;
    std::vector<int> dist(static_cast<std::size_t>(2 * n));
    std::vector<int> queue(static_cast<std::size_t>(2 * n));
    for (Vertex src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        dist[2 * src] = 0;
        queue[tail++] = 2 * src;
        while (head < tail) {
            int state = queue[head++];
            Vertex u = state / 2;
            int parity = state % 2;
            if (best && dist[state] + 1 >= *best)
                break;
            for (Vertex w = 0; w < n; ++w) {
                int s = g.sign(u, w);
                if (s == 0)
                    continue;
                int next = 2 * w + (s < 0 ? 1 - parity : parity);
                if (dist[next] < 0) {
                    dist[next] = dist[state] + 1;
                    queue[tail++] = next;
                }
            }
        }
        if (int d = dist[2 * src + 1]; d > 0 && (!best || d < *best))
            best = d;
    }
    return best;
}

inline bool is_c3_minus_free(const SignedGraph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            int ab = g.sign(a, b);
            if (ab == 0)
                continue;
            for (Vertex c = b + 1; c < n; ++c)
                if (ab * g.sign(a, c) * g.sign(b, c) < 0)
                    return false;
        }
    return true;
}

namespace detail {

inline void require_bitset_order(const SignedGraph& g) {
    if (g.order() > 64)
        throw Error(ErrorKind::ParameterRange, "clique search supports at most 64 vertices");
}

/// Branch and bound maximum clique on an adjacency-mask graph.
inline void max_clique_expand(std::span<const std::uint64_t> adj, int size, std::uint64_t cand,
                              int& best) {
    if (cand == 0) {
        best = std::max(best, size);
        return;
    }
    while (cand != 0) {
        if (size + std::popcount(cand) <= best)
            return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        max_clique_expand(adj, size + 1, cand & adj[static_cast<std::size_t>(v)], best);
    }
}

inline int max_clique(std::span<const std::uint64_t> adj, std::uint64_t vertices) {
    int best = 0;
    max_clique_expand(adj, 0, vertices, best);
    return best;
}

inline std::uint64_t all_vertices(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace detail

/// omega of the underlying graph.
inline int clique_number(const SignedGraph& g) {
    detail::require_bitset_order(g);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v] = g.neighbor_mask(v);
    return detail::max_clique(adj, detail::all_vertices(g.order()));
}

/// omega_b: largest complete subgraph that is balanced. For each choice of
/// lowest vertex a, the switching potential of every other member is forced
/// to sign(a, v); two further vertices b, w are compatible iff
/// sign(b, w) = sign(a, b) sign(a, w). A maximum clique of that
/// compatibility graph inside N(a) gives the best balanced clique through a.
inline int balanced_clique_number(const SignedGraph& g) {
    detail::require_bitset_order(g);
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    std::vector<std::uint64_t> agree(static_cast<std::size_t>(n));
    for (Vertex a = 0; a < n; ++a) {
        std::uint64_t higher = detail::all_vertices(n) & ~detail::all_vertices(a + 1);
        std::uint64_t cand = g.neighbor_mask(a) & higher;
        if (1 + std::popcount(cand) <= best)
            continue;
        for (Vertex b = 0; b < n; ++b) {
            agree[b] = 0;
            if (!(cand >> b & 1))
                continue;
            for (Vertex w = 0; w < n; ++w)
                if ((cand >> w & 1) && w != b && g.sign(b, w) == g.sign(a, b) * g.sign(a, w))
                    agree[b] |= std::uint64_t{1} << w;
        }
        best = std::max(best, 1 + detail::max_clique(agree, cand));
    }
    return best;
}

namespace detail {

inline bool star_unbalanced(const SignedGraph& g, std::span<const Vertex> clique) {
    Vertex a = clique[0];
    for (std::size_t i = 1; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (g.sign(a, clique[i]) * g.sign(a, clique[j]) * g.sign(clique[i], clique[j]) < 0)
                return true;
    return false;
}

inline bool find_unbalanced_expand(const SignedGraph& g, std::span<const std::uint64_t> adj,
                                   std::vector<Vertex>& clique, std::uint64_t cand,
                                   std::size_t k) {
    if (clique.size() == k)
        return star_unbalanced(g, clique);
    while (cand != 0) {
        if (clique.size() + static_cast<std::size_t>(std::popcount(cand)) < k)
            return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique.push_back(v);
        if (find_unbalanced_expand(g, adj, clique, cand & adj[static_cast<std::size_t>(v)], k))
            return true;
        clique.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically first k-subset inducing an unbalanced complete signed
/// graph, or nullopt if g is free of all of them. k > n is vacuously free.
inline std::optional<std::vector<Vertex>> find_unbalanced_complete(const SignedGraph& g, int k) {
    if (k < 2)
        throw Error(ErrorKind::ParameterRange, "unbalanced complete order must be at least 2");
    detail::require_bitset_order(g);
    if (k > g.order() || k < 3)
        return std::nullopt; // K_2 is a tree, always balanced
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v] = g.neighbor_mask(v);
    std::vector<Vertex> clique;
    clique.reserve(static_cast<std::size_t>(k));
    if (detail::find_unbalanced_expand(g, adj, clique, detail::all_vertices(g.order()),
                                       static_cast<std::size_t>(k)))
        return clique;
    return std::nullopt;
}

inline bool is_unbalanced_complete_free(const SignedGraph& g, int k) {
    return !find_unbalanced_complete(g, k).has_value();
}

/// n (1 - 1/omega); the common shape of both Wilf-type index bounds.
inline double clique_index_bound(int n, int omega) {
    if (omega <= 0)
        return 0.0;
    return n * (1.0 - 1.0 / omega);
}

struct RadiusIndexCheck {
    bool radius_exceeds = false;    // rho > n - 2
    bool negation_free = false;     // -g has no balanced K_{r+1}
    bool hypotheses_hold = false;
    double spectral_radius = 0;
    double index = 0;
    double smallest = 0;
    bool conclusion_holds = true;   // rho == lambda_1 when the hypotheses hold
};

/// For n >= 2r and r >= 4: if rho(g) > n-2 and the negation of g contains
/// no balanced complete graph of order r+1, then rho(g) = lambda_1(g).
inline RadiusIndexCheck check_radius_equals_index(const SignedGraph& g, int r, double tol = 1e-9) {
    const int n = g.order();
    if (r < 4 || n < 2 * r)
        throw Error(ErrorKind::ParameterRange, "radius/index check needs r >= 4 and n >= 2r (got n=" +
                                                   std::to_string(n) + ", r=" + std::to_string(r) + ")");
    auto spec = spectrum(g);
    RadiusIndexCheck out;
    out.index = spec.index();
    out.smallest = spec.smallest();
    out.spectral_radius = spec.spectral_radius();
    out.radius_exceeds = out.spectral_radius > n - 2 + tol;
    out.negation_free = balanced_clique_number(negate(g)) <= r;
    out.hypotheses_hold = out.radius_exceeds && out.negation_free;
    if (out.hypotheses_hold)
        out.conclusion_holds = std::abs(out.spectral_radius - out.index) <= tol;
    return out;
}

} // namespace sgt

#endif // SGT_INVARIANTS_HPP
