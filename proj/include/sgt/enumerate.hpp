#ifndef SGT_ENUMERATE_HPP
#define SGT_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"

namespace sgt {

constexpr int kMaxEnumerationOrder = 7;

/// Identifies one yielded switching class: the labeled underlying graph
/// (bit t set = t-th pair in lexicographic (u, v) order is an edge) and the
/// signing of its non-forest edges (bit t set = t-th non-forest edge in the
/// same order is negative). Forest edges are always positive.
struct ClassCode {
    std::uint32_t graph = 0;
    std::uint32_t signing = 0;

    friend auto operator<=>(const ClassCode&, const ClassCode&) = default;
};

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(int n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

inline std::uint64_t underlying_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// Per-underlying-graph data the iterator needs: the all-positive graph and
/// the indices (into vertex_pairs) of its non-forest edges.
struct UnderlyingGraph {
    std::uint32_t code = 0;
    SignedGraph positive;
    std::vector<int> cotree_pairs;

    std::uint64_t class_count() const { return std::uint64_t{1} << cotree_pairs.size(); }
};

inline UnderlyingGraph decode_underlying(int n, std::uint32_t code) {
    auto pairs = vertex_pairs(n);
    std::vector<SignedEdge> edges;
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (code >> t & 1)
            edges.push_back({pairs[t].first, pairs[t].second, 1});
    UnderlyingGraph u{code, SignedGraph(n, edges), {}};
    auto forest = spanning_forest(u.positive);
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if ((code >> t & 1) && !forest.is_tree_edge(pairs[t].first, pairs[t].second))
            u.cotree_pairs.push_back(static_cast<int>(t));
    return u;
}

inline SignedGraph class_graph(const UnderlyingGraph& u, std::uint32_t signing) {
    int n = u.positive.order();
    auto table = u.positive.sign_table();
    auto pairs = vertex_pairs(n);
    for (std::size_t t = 0; t < u.cotree_pairs.size(); ++t) {
        if (signing >> t & 1) {
            auto [a, b] = pairs[static_cast<std::size_t>(u.cotree_pairs[t])];
            table[static_cast<std::size_t>(a) * n + b] = -1;
            table[static_cast<std::size_t>(b) * n + a] = -1;
        }
    }
    return SignedGraph::from_sign_table(n, std::move(table));
}

inline SignedGraph decode_class(int n, ClassCode code) {
    return class_graph(decode_underlying(n, code.graph), code.signing);
}

/// Inverse of decode_class for any signed graph of order <= 7: the code of
/// the yielded representative of its switching class.
inline ClassCode encode_class(const SignedGraph& g) {
    auto canon = canonical_switch(g);
    int n = g.order();
    auto pairs = vertex_pairs(n);
    ClassCode code;
    for (std::size_t t = 0; t < pairs.size(); ++t)
        if (canon.adjacent(pairs[t].first, pairs[t].second))
            code.graph |= std::uint32_t{1} << t;
    auto u = decode_underlying(n, code.graph);
    for (std::size_t t = 0; t < u.cotree_pairs.size(); ++t) {
        auto [a, b] = pairs[static_cast<std::size_t>(u.cotree_pairs[t])];
        if (canon.sign(a, b) < 0)
            code.signing |= std::uint32_t{1} << t;
    }
    return code;
}

/// Yields one representative per (labeled underlying graph, switching
/// class): the graph whose BFS spanning forest is all-positive. Covers the
/// underlying-graph codes [begin, end).
class SwitchingClassIterator {
public:
    explicit SwitchingClassIterator(int n) : SwitchingClassIterator(n, 0, 0, true) {}

    SwitchingClassIterator(int n, std::uint64_t begin, std::uint64_t end)
        : SwitchingClassIterator(n, begin, end, false) {}

    /// Advances to the next class; false when the range is exhausted.
    bool next() {
        if (!started_) {
            started_ = true;
            if (next_graph_ >= end_)
                return false;
            load(next_graph_++);
            signing_ = 0;
            return true;
        }
        if (++signing_ < current_.class_count())
            return true;
        if (next_graph_ >= end_)
            return false;
        load(next_graph_++);
        signing_ = 0;
        return true;
    }

    int order() const noexcept { return n_; }
    const UnderlyingGraph& underlying_graph() const noexcept { return current_; }
    ClassCode code() const { return {current_.code, static_cast<std::uint32_t>(signing_)}; }
    SignedGraph graph() const { return class_graph(current_, static_cast<std::uint32_t>(signing_)); }
    /// The representative is balanced iff no non-forest edge is negative.
    bool balanced() const noexcept { return signing_ == 0; }
    bool first_of_graph() const noexcept { return signing_ == 0; }

private:
    SwitchingClassIterator(int n, std::uint64_t begin, std::uint64_t end, bool full) : n_(n) {
        if (n < 1 || n > kMaxEnumerationOrder)
            throw Error(ErrorKind::ParameterRange, "enumeration supports 1 <= n <= " +
                                                       std::to_string(kMaxEnumerationOrder) +
                                                       " (got " + std::to_string(n) + ")");
        auto total = underlying_graph_count(n);
        next_graph_ = full ? 0 : begin;
        end_ = full ? total : std::min(end, total);
    }

    void load(std::uint64_t code) { current_ = decode_underlying(n_, static_cast<std::uint32_t>(code)); }

    int n_;
    std::uint64_t next_graph_ = 0;
    std::uint64_t end_ = 0;
    bool started_ = false;
    UnderlyingGraph current_;
    std::uint64_t signing_ = 0;
};

inline SwitchingClassIterator enumerate_switching_classes(int n) {
    return SwitchingClassIterator(n);
}

} // namespace sgt

#endif // SGT_ENUMERATE_HPP
