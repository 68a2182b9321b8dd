#ifndef SGT_SWEEPS_HPP
#define SGT_SWEEPS_HPP

// Exhaustive and randomized checks of the index bounds and perturbation
// facts the extremal results rely on.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/graph.hpp"
#include "sgt/invariants.hpp"
#include "sgt/parallel.hpp"
#include "sgt/perturb.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

constexpr double kBoundTolerance = 1e-9;

/// Violation counters for one order n, over every enumerated class.
struct LemmaSweep {
    int n = 0;
    std::uint64_t classes = 0;
    std::uint64_t clique_bound_violations = 0;          // lambda_1 <= n(1 - 1/omega)
    std::uint64_t balanced_clique_bound_violations = 0; // lambda_1 <= n(1 - 1/omega_b)
    std::uint64_t underlying_violations = 0;            // lambda_1 <= lambda_1(G)
    std::uint64_t order_bound_violations = 0;           // lambda_1 <= n - 1
    std::uint64_t order_equality_mismatches = 0;        // equality iff balanced and complete
    std::uint64_t order_equality_cases = 0;
    std::uint64_t zero_entry_violations = 0;            // zero-entry bound on x
    double max_clique_bound_slack = -1e300;             // max of lambda_1 - bound

    void merge(const LemmaSweep& o) {
        classes += o.classes;
        clique_bound_violations += o.clique_bound_violations;
        balanced_clique_bound_violations += o.balanced_clique_bound_violations;
        underlying_violations += o.underlying_violations;
        order_bound_violations += o.order_bound_violations;
        order_equality_mismatches += o.order_equality_mismatches;
        order_equality_cases += o.order_equality_cases;
        zero_entry_violations += o.zero_entry_violations;
        max_clique_bound_slack = std::max(max_clique_bound_slack, o.max_clique_bound_slack);
    }

    bool passed() const {
        return clique_bound_violations == 0 && balanced_clique_bound_violations == 0 &&
               underlying_violations == 0 && order_bound_violations == 0 &&
               order_equality_mismatches == 0 && zero_entry_violations == 0;
    }
};

inline LemmaSweep lemma_sweep_range(int n, CodeRange range) {
    LemmaSweep s;
    s.n = n;
    SwitchingClassIterator it(n, range.begin, range.end);
    double underlying_index = 0;
    const std::size_t full = static_cast<std::size_t>(n) * (n - 1) / 2;
    while (it.next()) {
        ++s.classes;
        auto g = it.graph();
        auto lead = leading_eigenpair(g);
        double lambda = lead.value;
        // Signing 0 is the all-positive graph, i.e. the underlying graph.
        if (it.first_of_graph())
            underlying_index = lambda;

        int omega = clique_number(g);
        int omega_b = balanced_clique_number(g);
        double wilf = clique_index_bound(n, omega);
        s.max_clique_bound_slack = std::max(s.max_clique_bound_slack, lambda - wilf);
        s.clique_bound_violations += lambda > wilf + kBoundTolerance;
        s.balanced_clique_bound_violations += lambda > clique_index_bound(n, omega_b) + kBoundTolerance;
        s.underlying_violations += lambda > underlying_index + kBoundTolerance;
        s.order_bound_violations += lambda > n - 1 + kBoundTolerance;
        bool at_order_bound = std::abs(lambda - (n - 1)) <= kBoundTolerance;
        bool balanced_complete = it.balanced() && g.size() == full;
        s.order_equality_cases += at_order_bound;
        s.order_equality_mismatches += at_order_bound != balanced_complete;
        s.zero_entry_violations += !zero_entry_bound_holds(lambda, lead.vector);
    }
    return s;
}

inline LemmaSweep lemma_sweep(int n, unsigned jobs = 1) {
    auto ranges = split_range(underlying_graph_count(n), 64);
    std::vector<std::size_t> todo(ranges.size());
    for (std::size_t c = 0; c < todo.size(); ++c)
        todo[c] = c;
    LemmaSweep total;
    total.n = n;
    run_chunks<LemmaSweep>(
        todo, jobs, [&](std::size_t c) { return lemma_sweep_range(n, ranges[c]); },
        [&](std::size_t, LemmaSweep&& part) { total.merge(part); });
    return total;
}

// ---------------------------------------------------------------------------
// Random signed graphs
// ---------------------------------------------------------------------------

/// Order uniform in [n_min, n_max], edge density uniform in [0.2, 0.9],
/// each edge negative with probability 1/2.
inline SignedGraph random_signed_graph(std::mt19937_64& rng, int n_min, int n_max) {
    std::uniform_int_distribution<int> order(n_min, n_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int n = order(rng);
    double density = 0.2 + 0.7 * unit(rng);
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < density)
                edges.push_back({u, v, unit(rng) < 0.5 ? -1 : 1});
    return SignedGraph(n, edges);
}

struct NonnegSweep {
    std::uint64_t trials = 0;
    std::uint64_t negative_entry_failures = 0;
    std::uint64_t index_drift_failures = 0;
    std::uint64_t residual_failures = 0;
    double most_negative_entry = 0;

    bool passed() const {
        return negative_entry_failures == 0 && index_drift_failures == 0 && residual_failures == 0;
    }
};

/// The switched graph must carry a non-negative unit eigenvector for the
/// same index.
inline NonnegSweep nonneg_sweep(std::uint64_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    NonnegSweep s;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto g = random_signed_graph(rng, 2, 9);
        auto res = nonneg_switch(g);
        ++s.trials;
        double lo = *std::min_element(res.eigenvector.begin(), res.eigenvector.end());
        s.most_negative_entry = std::min(s.most_negative_entry, lo);
        s.negative_entry_failures += lo < -1e-10;
        s.index_drift_failures += std::abs(index(res.graph) - index(g)) > kBoundTolerance;
        s.residual_failures += eigen_residual(res.graph, res.index, res.eigenvector) > 1e-8;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Perturbation trials
// ---------------------------------------------------------------------------

struct PerturbationSuite {
    PerturbationKind kind = PerturbationKind::AddPositive;
    std::uint64_t trials = 0;
    std::uint64_t monotonicity_violations = 0;
    std::uint64_t rayleigh_violations = 0;
    double max_rayleigh_error = 0;
    double min_delta = 1e300;
    std::uint64_t strict_increases = 0;
    /// Equality characterization, on decidable instances only.
    std::uint64_t decidable = 0;
    std::uint64_t equality_without_condition = 0;
    std::uint64_t condition_without_equality = 0;

    bool passed() const { return monotonicity_violations == 0 && rayleigh_violations == 0; }
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::mt19937_64& rng,
                                                           std::vector<std::pair<Vertex, Vertex>> pool) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(3, pool.size()));
    pool.resize(count(rng));
    return pool;
}

/// A random perturbation of `kind` on g whose preconditions hold for x;
/// nullopt if g admits none.
inline std::optional<Perturbation> random_perturbation(std::mt19937_64& rng, const SignedGraph& g,
                                                       std::span<const double> x, PerturbationKind kind) {
    const int n = g.order();
    if (uses_edge_list(kind)) {
        std::vector<std::pair<Vertex, Vertex>> pool;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                int s = g.sign(u, v);
                if ((kind == PerturbationKind::AddPositive && s == 0) ||
                    (kind != PerturbationKind::AddPositive && s == -1))
                    pool.emplace_back(u, v);
            }
        if (pool.empty())
            return std::nullopt;
        return Perturbation{kind, sample_pairs(rng, std::move(pool))};
    }
    std::vector<std::array<Vertex, 3>> triples;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            for (Vertex k = 0; k < n; ++k) {
                if (i == j || i == k || j == k || g.sign(i, j) != 1)
                    continue;
                bool second_ok = kind == PerturbationKind::RotatePositive ? !g.adjacent(i, k) : g.sign(i, k) == -1;
                if (second_ok && x[static_cast<std::size_t>(j)] <= x[static_cast<std::size_t>(k)])
                    triples.push_back({i, j, k});
            }
    if (triples.empty())
        return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    auto [i, j, k] = triples[pick(rng)];
    return Perturbation{kind, {}, i, j, k};
}

} // namespace detail

/// `trials` random (graph, perturbation) pairs of one kind. Each graph is
/// first moved to a switching with a non-negative leading eigenvector x;
/// perturbations are drawn so that the kind's conditions on x hold.
inline PerturbationSuite perturbation_suite(PerturbationKind kind, std::uint64_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(kind) + 1)));
    PerturbationSuite s;
    s.kind = kind;
    while (s.trials < trials) {
        auto g0 = random_signed_graph(rng, 3, 8);
        auto base = nonneg_switch(g0);
        auto p = detail::random_perturbation(rng, base.graph, base.eigenvector, kind);
        if (!p)
            continue;
        ++s.trials;
        auto d = equality_diagnosis(base.graph, *p, base.eigenvector);
        s.min_delta = std::min(s.min_delta, d.delta);
        s.monotonicity_violations += d.delta < -kBoundTolerance;
        s.strict_increases += d.index_distinct;
        double err = std::abs(d.rayleigh_increment - d.closed_form);
        s.max_rayleigh_error = std::max(s.max_rayleigh_error, err);
        s.rayleigh_violations += err > kBoundTolerance;
        if (d.decidable) {
            ++s.decidable;
            s.equality_without_condition += d.index_equal && !d.condition_met;
            s.condition_without_equality += !d.index_equal && d.condition_met;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Radius equals index, on the extremal constructions where it applies.
// ---------------------------------------------------------------------------

struct RadiusIndexSweep {
    std::uint64_t checked = 0;
    std::uint64_t hypotheses_held = 0;
    std::uint64_t conclusion_failures = 0;

    bool passed() const { return conclusion_failures == 0; }
};

/// For 8 <= n <= n_max and 4 <= r <= n/2, on the construction and its
/// negation.
inline RadiusIndexSweep radius_index_sweep(int n_max) {
    RadiusIndexSweep s;
    for (int n = 8; n <= n_max; ++n)
        for (int r = 4; 2 * r <= n; ++r)
            for (const auto& g : {gamma_construction(n, r), negate(gamma_construction(n, r))}) {
                auto c = check_radius_equals_index(g, r);
                ++s.checked;
                s.hypotheses_held += c.hypotheses_hold;
                s.conclusion_failures += !c.conclusion_holds;
            }
    return s;
}

} // namespace sgt

#endif // SGT_SWEEPS_HPP
