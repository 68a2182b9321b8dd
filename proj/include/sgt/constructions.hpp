#ifndef SGT_CONSTRUCTIONS_HPP
#define SGT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"

namespace sgt {

/// All-positive K_{n-1} on 1..n-1 plus vertex 0 joined to 1 by a negative
/// edge and to 2..r-1 by positive edges. Requires 3 <= r <= n-1.
inline SignedGraph gamma_construction(int n, int r) {
    if (r < 3 || r > n - 1)
        throw Error(ErrorKind::ParameterRange,
                    "gamma construction needs 3 <= r <= n-1 (got n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")");
    std::vector<SignedEdge> edges;
    edges.push_back({0, 1, -1});
    for (Vertex v = 2; v < r; ++v)
        edges.push_back({0, v, 1});
    for (Vertex u = 1; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v, 1});
    return SignedGraph(n, edges);
}

inline std::int64_t gamma_edge_count(std::int64_t n, std::int64_t r) {
    return n * (n - 1) / 2 - (n - r);
}

/// Sizes of the r near-equal parts of T_r(n); the first n mod r parts get
/// the extra vertex.
inline std::vector<int> turan_part_sizes(int n, int r) {
    if (r < 1 || n < 0)
        throw Error(ErrorKind::ParameterRange, "Turan graph needs r >= 1 and n >= 0");
    std::vector<int> sizes;
    for (int i = 0; i < r; ++i) {
        int s = n / r + (i < n % r ? 1 : 0);
        if (s > 0)
            sizes.push_back(s);
    }
    return sizes;
}

struct TuranGraph {
    SignedGraph graph;
    std::int64_t edge_count = 0; // t_r(n)
    std::vector<int> part_sizes;
};

/// All-positive complete r-partite graph with parts as equal as possible;
/// vertices are assigned to parts in consecutive label runs.
inline TuranGraph turan_graph(int n, int r) {
    auto sizes = turan_part_sizes(n, r);
    std::vector<int> part(static_cast<std::size_t>(n));
    for (int p = 0, v = 0; p < static_cast<int>(sizes.size()); ++p)
        for (int i = 0; i < sizes[p]; ++i)
            part[v++] = p;
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v])
                edges.push_back({u, v, 1});
    std::int64_t count = static_cast<std::int64_t>(edges.size());
    return {SignedGraph(n, edges), count, std::move(sizes)};
}

/// Homogeneous complete graph (K_n, sign).
inline SignedGraph complete(int n, int sign) {
    if (n < 0)
        throw Error(ErrorKind::ParameterRange, "complete graph needs n >= 0");
    if (sign != 1 && sign != -1)
        throw Error(ErrorKind::ParameterRange, "sign must be +1 or -1");
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v, sign});
    return SignedGraph(n, edges);
}

/// K_k with the single negative edge (0, 1): one representative of the
/// unbalanced complete graphs of order k.
inline SignedGraph unbalanced_complete(int k) {
    if (k < 3)
        throw Error(ErrorKind::ParameterRange, "no unbalanced complete graph has fewer than 3 vertices");
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            edges.push_back({u, v, (u == 0 && v == 1) ? -1 : 1});
    return SignedGraph(k, edges);
}

} // namespace sgt

#endif // SGT_CONSTRUCTIONS_HPP
