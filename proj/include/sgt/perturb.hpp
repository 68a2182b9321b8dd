#ifndef SGT_PERTURB_HPP
#define SGT_PERTURB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

enum class PerturbationKind {
    AddPositive,    // add some positive edges
    RemoveNegative, // delete some negative edges
    FlipNegative,   // make some negative edges positive
    RotatePositive, // move positive edge ij to the non-edge ik
    SwapSigns,      // positive ij becomes negative, negative ik becomes positive
};

inline const char* to_string(PerturbationKind kind) {
    switch (kind) {
    case PerturbationKind::AddPositive: return "add-positive";
    case PerturbationKind::RemoveNegative: return "remove-negative";
    case PerturbationKind::FlipNegative: return "flip-negative";
    case PerturbationKind::RotatePositive: return "rotate-positive";
    case PerturbationKind::SwapSigns: return "swap-signs";
    }
    return "unknown";
}

inline bool uses_edge_list(PerturbationKind kind) {
    return kind == PerturbationKind::AddPositive || kind == PerturbationKind::RemoveNegative ||
           kind == PerturbationKind::FlipNegative;
}

/// One of the five index-monotone edits. Edge-list kinds apply the whole
/// list atomically; the triple kinds use (i, j, k).
struct Perturbation {
    PerturbationKind kind = PerturbationKind::AddPositive;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex i = 0, j = 0, k = 0;

    static Perturbation add_positive(std::vector<std::pair<Vertex, Vertex>> e) {
        return {PerturbationKind::AddPositive, std::move(e)};
    }
    static Perturbation remove_negative(std::vector<std::pair<Vertex, Vertex>> e) {
        return {PerturbationKind::RemoveNegative, std::move(e)};
    }
    static Perturbation flip_negative(std::vector<std::pair<Vertex, Vertex>> e) {
        return {PerturbationKind::FlipNegative, std::move(e)};
    }
    static Perturbation rotate_positive(Vertex i, Vertex j, Vertex k) {
        return {PerturbationKind::RotatePositive, {}, i, j, k};
    }
    static Perturbation swap_signs(Vertex i, Vertex j, Vertex k) {
        return {PerturbationKind::SwapSigns, {}, i, j, k};
    }
};

namespace detail {

[[noreturn]] inline void perturb_fail(PerturbationKind kind, const std::string& msg) {
    throw Error(ErrorKind::Precondition, std::string(to_string(kind)) + ": " + msg);
}

inline std::string pair_str(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

inline void check_vertex(const SignedGraph& g, PerturbationKind kind, Vertex v) {
    if (v < 0 || v >= g.order())
        perturb_fail(kind, "vertex " + std::to_string(v) + " out of range");
}

} // namespace detail

/// Throws Error(Precondition) naming the violated condition for the kind.
inline void validate(const SignedGraph& g, const Perturbation& p) {
    using detail::perturb_fail;
    if (uses_edge_list(p.kind)) {
        if (p.edges.empty())
            perturb_fail(p.kind, "edge list is empty");
        std::vector<std::pair<Vertex, Vertex>> seen;
        for (auto [u, v] : p.edges) {
            detail::check_vertex(g, p.kind, u);
            detail::check_vertex(g, p.kind, v);
            if (u == v)
                perturb_fail(p.kind, "loop at " + std::to_string(u));
            std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                perturb_fail(p.kind, "pair " + detail::pair_str(u, v) + " listed twice");
            seen.push_back(key);
            int s = g.sign(u, v);
            if (p.kind == PerturbationKind::AddPositive && s != 0)
                perturb_fail(p.kind, "pair " + detail::pair_str(u, v) + " is already an edge");
            if (p.kind != PerturbationKind::AddPositive && s != -1)
                perturb_fail(p.kind, "pair " + detail::pair_str(u, v) + " is not a negative edge");
        }
        return;
    }
    for (Vertex v : {p.i, p.j, p.k})
        detail::check_vertex(g, p.kind, v);
    if (p.i == p.j || p.i == p.k || p.j == p.k)
        perturb_fail(p.kind, "i, j, k must be distinct");
    if (g.sign(p.i, p.j) != 1)
        perturb_fail(p.kind, "edge " + detail::pair_str(p.i, p.j) + " must be positive");
    if (p.kind == PerturbationKind::RotatePositive && g.adjacent(p.i, p.k))
        perturb_fail(p.kind, "pair " + detail::pair_str(p.i, p.k) + " must be a non-edge");
    if (p.kind == PerturbationKind::SwapSigns && g.sign(p.i, p.k) != -1)
        perturb_fail(p.kind, "edge " + detail::pair_str(p.i, p.k) + " must be negative");
}

inline SignedGraph apply(const SignedGraph& g, const Perturbation& p) {
    validate(g, p);
    int n = g.order();
    std::vector<std::int8_t> table = g.sign_table();
    auto put = [&](Vertex u, Vertex v, int s) {
        table[static_cast<std::size_t>(u) * n + v] = static_cast<std::int8_t>(s);
        table[static_cast<std::size_t>(v) * n + u] = static_cast<std::int8_t>(s);
    };
    switch (p.kind) {
    case PerturbationKind::AddPositive:
    case PerturbationKind::FlipNegative:
        for (auto [u, v] : p.edges)
            put(u, v, 1);
        break;
    case PerturbationKind::RemoveNegative:
        for (auto [u, v] : p.edges)
            put(u, v, 0);
        break;
    case PerturbationKind::RotatePositive:
        put(p.i, p.j, 0);
        put(p.i, p.k, 1);
        break;
    case PerturbationKind::SwapSigns:
        put(p.i, p.j, -1);
        put(p.i, p.k, 1);
        break;
    }
    return SignedGraph::from_sign_table(n, std::move(table));
}

/// Switching-equivalent graph whose index has a non-negative eigenvector:
/// switch at the vertices where a leading eigenvector is negative.
struct NonnegSwitch {
    SignedGraph graph;
    SwitchSet applied;
    double index = 0;
    std::vector<double> eigenvector; // unit, entrywise >= 0
};

inline NonnegSwitch nonneg_switch(const SignedGraph& g) {
    auto lead = leading_eigenpair(g);
    std::vector<Vertex> negative;
    for (Vertex v = 0; v < g.order(); ++v)
        if (lead.vector[static_cast<std::size_t>(v)] < 0)
            negative.push_back(v);
    SwitchSet u_set(std::move(negative));
    NonnegSwitch out{switched(g, u_set), u_set, lead.value, std::move(lead.vector)};
    for (auto& x : out.eigenvector)
        x = std::abs(x);
    return out;
}

/// x^T (A(g') - A(g)) x as predicted for each kind:
/// 2 sum x_u x_v, 2 sum x_u x_v, 4 sum x_u x_v, 2 x_i (x_k - x_j), 4 x_i (x_k - x_j).
inline double closed_form_increment(const Perturbation& p, std::span<const double> x) {
    auto at = [&](Vertex v) { return x[static_cast<std::size_t>(v)]; };
    double pair_sum = 0;
    for (auto [u, v] : p.edges)
        pair_sum += at(u) * at(v);
    switch (p.kind) {
    case PerturbationKind::AddPositive:
    case PerturbationKind::RemoveNegative: return 2 * pair_sum;
    case PerturbationKind::FlipNegative: return 4 * pair_sum;
    case PerturbationKind::RotatePositive: return 2 * at(p.i) * (at(p.k) - at(p.j));
    case PerturbationKind::SwapSigns: return 4 * at(p.i) * (at(p.k) - at(p.j));
    }
    return 0;
}

inline double quadratic_form(const SignedGraph& g, std::span<const double> x) {
    double s = 0;
    for (const auto& e : g.edges())
        s += 2.0 * e.sign * x[static_cast<std::size_t>(e.u)] * x[static_cast<std::size_t>(e.v)];
    return s;
}

/// Outcome of applying a perturbation, with both sides of the equality
/// characterization: did lambda_1 stay put, and do the eigenvector entries
/// satisfy the zero condition (endpoints all zero for kinds 1-3,
/// x_i = 0 and x_j = x_k for kinds 4-5).
struct EqualityDiagnosis {
    PerturbationKind kind = PerturbationKind::AddPositive;
    double index_before = 0;
    double index_after = 0;
    double delta = 0;
    double rayleigh_increment = 0; // x^T A(g') x - lambda_1(g)
    double closed_form = 0;
    bool eigenvector_nonnegative = false;
    bool ordering_holds = true; // x_j <= x_k for kinds 4-5
    bool precondition_holds = false;
    bool degenerate = false;    // lambda_1 repeated in g
    bool index_equal = false;   // |delta| < equal_tol
    bool index_distinct = false; // |delta| > distinct_tol
    bool condition_met = false;
    /// Only meaningful when the instance is neither degenerate nor in the
    /// ambiguous band between the two thresholds.
    bool decidable = false;
    bool consistent = true;
};

struct DiagnosisTolerances {
    double equal = 1e-10;
    double distinct = 1e-6;
    double zero_entry = 1e-8;
    double degenerate_gap = 1e-8;
    double nonnegative_slack = 1e-10;
};

inline EqualityDiagnosis equality_diagnosis(const SignedGraph& g, const Perturbation& p,
                                            std::span<const double> x,
                                            DiagnosisTolerances tol = {}) {
    auto after = apply(g, p);
    auto spec_before = spectrum(g);
    EqualityDiagnosis d;
    d.kind = p.kind;
    d.index_before = spec_before.index();
    d.index_after = index(after);
    d.delta = d.index_after - d.index_before;
    d.rayleigh_increment = quadratic_form(after, x) - d.index_before;
    d.closed_form = closed_form_increment(p, x);
    d.eigenvector_nonnegative =
        std::all_of(x.begin(), x.end(), [&](double v) { return v >= -tol.nonnegative_slack; });
    auto at = [&](Vertex v) { return x[static_cast<std::size_t>(v)]; };
    if (!uses_edge_list(p.kind))
        d.ordering_holds = at(p.j) <= at(p.k) + tol.nonnegative_slack;
    d.precondition_holds = d.eigenvector_nonnegative && d.ordering_holds;
    d.degenerate = spec_before.size() > 1 && spec_before[0] - spec_before[1] < tol.degenerate_gap;
    d.index_equal = std::abs(d.delta) < tol.equal;
    d.index_distinct = std::abs(d.delta) > tol.distinct;
    auto zero = [&](Vertex v) { return std::abs(at(v)) <= tol.zero_entry; };
    if (uses_edge_list(p.kind)) {
        d.condition_met = std::all_of(p.edges.begin(), p.edges.end(),
                                      [&](auto e) { return zero(e.first) && zero(e.second); });
    } else {
        d.condition_met = zero(p.i) && std::abs(at(p.j) - at(p.k)) <= tol.zero_entry;
    }
    d.decidable = d.precondition_holds && !d.degenerate && (d.index_equal || d.index_distinct);
    d.consistent = !d.decidable || (d.index_equal == d.condition_met);
    return d;
}

inline EqualityDiagnosis equality_diagnosis(const SignedGraph& g, const Perturbation& p,
                                            DiagnosisTolerances tol = {}) {
    auto x = leading_eigenvector(g);
    return equality_diagnosis(g, p, x, tol);
}

/// If lambda_1 > n - k then x has at most k - 2 zero entries, for every
/// k in 2..n. Returns false on the first k that violates it.
inline bool zero_entry_bound_holds(double lambda1, std::span<const double> x,
                                   double zero_tol = 1e-8, double tol = 1e-9) {
    const int n = static_cast<int>(x.size());
    int zeros = static_cast<int>(
        std::count_if(x.begin(), x.end(), [&](double v) { return std::abs(v) <= zero_tol; }));
    for (int k = 2; k <= n; ++k)
        if (lambda1 > n - k + tol && zeros > k - 2)
            return false;
    return true;
}

} // namespace sgt

#endif // SGT_PERTURB_HPP
