#ifndef SGT_SEARCH_HPP
#define SGT_SEARCH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/error.hpp"
#include "sgt/graph.hpp"
#include "sgt/invariants.hpp"
#include "sgt/parallel.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

enum class Objective { Edges, Index, SpectralRadius };

inline const char* to_string(Objective o) {
    switch (o) {
    case Objective::Edges: return "edges";
    case Objective::Index: return "index";
    case Objective::SpectralRadius: return "spectral_radius";
    }
    return "unknown";
}

/// What to scan: unbalanced classes of order n that avoid every unbalanced
/// K_{r+1} (when `r` is set) or every negative triangle (when it is not),
/// maximizing `objective`.
struct SearchSpec {
    int n = 0;
    std::optional<int> r;
    Objective objective = Objective::Edges;

    /// Co-maximizer band. Edge counts are compared exactly.
    double band() const { return objective == Objective::Edges ? 0.0 : 1e-9; }

    std::string key() const {
        return "n=" + std::to_string(n) + ";family=" + (r ? "K-" + std::to_string(*r + 1) : "C3-") +
               ";objective=" + to_string(objective);
    }
};

struct ClassCounts {
    std::uint64_t scanned = 0;
    std::uint64_t unbalanced = 0;
    std::uint64_t admissible = 0; // unbalanced and free

    void merge(const ClassCounts& o) {
        scanned += o.scanned;
        unbalanced += o.unbalanced;
        admissible += o.admissible;
    }
};

struct Candidate {
    double value = 0;
    ClassCode code;
};

/// Running maximum plus every class within the band of it.
struct PartialExtremum {
    bool found = false;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<Candidate> candidates;
    ClassCounts counts;

    void offer(double value, ClassCode code, double band) {
        if (value < best - band)
            return;
        found = true;
        if (value > best) {
            best = value;
            prune(band);
        }
        candidates.push_back({value, code});
    }

    void merge(PartialExtremum&& o, double band) {
        counts.merge(o.counts);
        if (!o.found)
            return;
        found = true;
        best = std::max(best, o.best);
        candidates.insert(candidates.end(), o.candidates.begin(), o.candidates.end());
        prune(band);
    }

    void prune(double band) {
        std::erase_if(candidates, [&](const Candidate& c) { return c.value < best - band; });
    }

    void sort() {
        std::sort(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& b) { return a.code < b.code; });
    }
};

inline bool admissible(const SignedGraph& g, const SearchSpec& spec) {
    return spec.r ? is_unbalanced_complete_free(g, *spec.r + 1) : is_c3_minus_free(g);
}

inline double objective_value(const SignedGraph& g, Objective o) {
    switch (o) {
    case Objective::Edges: return static_cast<double>(g.size());
    case Objective::Index: return spectrum(g).index();
    case Objective::SpectralRadius: return spectrum(g).spectral_radius();
    }
    return 0;
}

/// Scans the underlying-graph codes [range.begin, range.end).
inline PartialExtremum scan_range(const SearchSpec& spec, CodeRange range) {
    PartialExtremum part;
    SwitchingClassIterator it(spec.n, range.begin, range.end);
    const double band = spec.band();
    while (it.next()) {
        ++part.counts.scanned;
        if (it.balanced())
            continue;
        ++part.counts.unbalanced;
        auto g = it.graph();
        if (!admissible(g, spec))
            continue;
        ++part.counts.admissible;
        part.offer(objective_value(g, spec.objective), it.code(), band);
    }
    return part;
}

// ---------------------------------------------------------------------------
// Checkpointing: one JSON line per finished chunk, keyed by the spec.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json partial_to_json(std::size_t chunk, const PartialExtremum& p) {
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : p.candidates)
        cands.push_back({c.value, c.code.graph, c.code.signing});
    return {{"chunk", chunk},
            {"found", p.found},
            {"best", p.found ? p.best : 0.0},
            {"scanned", p.counts.scanned},
            {"unbalanced", p.counts.unbalanced},
            {"admissible", p.counts.admissible},
            {"candidates", cands}};
}

inline PartialExtremum partial_from_json(const nlohmann::json& j) {
    PartialExtremum p;
    p.found = j.at("found").get<bool>();
    if (p.found)
        p.best = j.at("best").get<double>();
    p.counts.scanned = j.at("scanned").get<std::uint64_t>();
    p.counts.unbalanced = j.at("unbalanced").get<std::uint64_t>();
    p.counts.admissible = j.at("admissible").get<std::uint64_t>();
    for (const auto& c : j.at("candidates"))
        p.candidates.push_back({c.at(0).get<double>(), {c.at(1).get<std::uint32_t>(), c.at(2).get<std::uint32_t>()}});
    return p;
}

} // namespace detail

struct ScanOptions {
    unsigned jobs = 1;
    std::uint64_t chunks = 64;
    /// When set, finished chunks are appended here and skipped on rerun.
    std::optional<std::filesystem::path> checkpoint;
};

inline PartialExtremum scan(const SearchSpec& spec, const ScanOptions& opts = {}) {
    auto ranges = split_range(underlying_graph_count(spec.n), opts.chunks);
    std::vector<char> done(ranges.size(), 0);
    PartialExtremum total;
    const double band = spec.band();

    std::ofstream log;
    if (opts.checkpoint) {
        std::ifstream in(*opts.checkpoint);
        std::string line;
        bool header_seen = false;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto j = nlohmann::json::parse(line);
            if (!header_seen) {
                if (j.value("spec", "") != spec.key() || j.value("chunks", 0ull) != ranges.size())
                    throw Error(ErrorKind::Precondition,
                                "checkpoint " + opts.checkpoint->string() + " belongs to a different scan");
                header_seen = true;
                continue;
            }
            auto chunk = j.at("chunk").get<std::size_t>();
            if (chunk < done.size() && !done[chunk]) {
                done[chunk] = 1;
                total.merge(detail::partial_from_json(j), band);
            }
        }
        log.open(*opts.checkpoint, std::ios::app);
        if (!header_seen)
            log << nlohmann::json{{"spec", spec.key()}, {"chunks", ranges.size()}}.dump() << '\n'
                << std::flush;
    }

    std::vector<std::size_t> todo;
    for (std::size_t c = 0; c < ranges.size(); ++c)
        if (!done[c])
            todo.push_back(c);
    run_chunks<PartialExtremum>(
        todo, opts.jobs, [&](std::size_t c) { return scan_range(spec, ranges[c]); },
        [&](std::size_t c, PartialExtremum&& part) {
            if (log.is_open())
                log << detail::partial_to_json(c, part).dump() << '\n' << std::flush;
            total.merge(std::move(part), band);
        });
    total.sort();
    return total;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ExtremalReport {
    SearchSpec spec;
    bool found = false;
    double best = 0;
    std::optional<double> expected;
    std::vector<SignedGraph> maximizers; // one per switching-isomorphism class
    std::size_t labeled_maximizers = 0;
    ClassCounts counts;
    std::vector<Assertion> assertions;

    bool passed() const {
        return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
    }
};

/// Collapses graphs that are switching isomorphic. Graphs are bucketed by
/// degree sequence and rounded spectrum first; only bucket-mates are
/// compared by brute force.
inline std::vector<SignedGraph> dedupe_switching_isomorphic(const std::vector<SignedGraph>& graphs) {
    std::map<std::pair<std::vector<int>, std::vector<long long>>, std::vector<std::size_t>> buckets;
    std::vector<SignedGraph> reps;
    for (const auto& g : graphs) {
        std::vector<int> degrees;
        for (Vertex v = 0; v < g.order(); ++v)
            degrees.push_back(g.degree(v));
        std::sort(degrees.begin(), degrees.end());
        std::vector<long long> rounded;
        for (double x : spectrum(g).values())
            rounded.push_back(std::llround(x * 1e6));
        auto& bucket = buckets[{degrees, rounded}];
        bool seen = std::any_of(bucket.begin(), bucket.end(),
                                [&](std::size_t idx) { return are_switching_isomorphic(reps[idx], g); });
        if (!seen) {
            bucket.push_back(reps.size());
            reps.push_back(g);
        }
    }
    return reps;
}

/// Whether some switching of g leaves exactly one negative edge. Brute
/// force over the 2^(n-1) switchings that fix vertex 0.
inline bool has_single_negative_edge_switching(const SignedGraph& g) {
    const int n = g.order();
    if (n == 0 || n > 24)
        return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::size_t neg = 0;
        for (const auto& e : g.edges()) {
            int su = e.u == 0 ? 1 : ((mask >> (e.u - 1) & 1) ? -1 : 1);
            int sv = e.v == 0 ? 1 : ((mask >> (e.v - 1) & 1) ? -1 : 1);
            neg += e.sign * su * sv < 0;
        }
        if (neg == 1)
            return true;
    }
    return false;
}

namespace detail {

inline void check_search_params(int n, std::optional<int> r) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error(ErrorKind::ParameterRange, "search needs n <= " + std::to_string(kMaxEnumerationOrder));
    if (r && (*r < 3 || *r > n - 1))
        throw Error(ErrorKind::ParameterRange, "search needs 3 <= r <= n-1 (got n=" + std::to_string(n) +
                                                   ", r=" + std::to_string(*r) + ")");
    if (!r && n < 3)
        throw Error(ErrorKind::ParameterRange, "negative-triangle search needs n >= 3");
}

inline ExtremalReport build_report(const SearchSpec& spec, const PartialExtremum& scan_result) {
    ExtremalReport rep;
    rep.spec = spec;
    rep.found = scan_result.found;
    rep.best = scan_result.found ? scan_result.best : 0.0;
    rep.counts = scan_result.counts;
    rep.labeled_maximizers = scan_result.candidates.size();
    std::vector<SignedGraph> labeled;
    labeled.reserve(scan_result.candidates.size());
    for (const auto& c : scan_result.candidates)
        labeled.push_back(decode_class(spec.n, c.code));
    rep.maximizers = dedupe_switching_isomorphic(labeled);

    // Every listed maximizer is re-checked with the general-purpose
    // predicates, independent of the enumeration's shortcuts.
    bool all_ok = true;
    std::string bad;
    for (const auto& g : rep.maximizers) {
        bool ok = !is_balanced(g).balanced && admissible(g, spec) &&
                  std::abs(objective_value(g, spec.objective) - rep.best) <= spec.band();
        if (!ok && bad.empty())
            bad = "maximizer fails unbalance/freeness/value re-check";
        all_ok = all_ok && ok;
    }
    rep.assertions.push_back({"maximizers_admissible", all_ok, bad});
    return rep;
}

} // namespace detail

/// Largest edge count over unbalanced classes with no unbalanced K_{r+1};
/// must equal n(n-1)/2 - (n-r).
inline ExtremalReport max_edges_report(int n, int r, const ScanOptions& opts = {}) {
    detail::check_search_params(n, r);
    SearchSpec spec{n, r, Objective::Edges};
    auto rep = detail::build_report(spec, scan(spec, opts));
    auto bound = gamma_edge_count(n, r);
    rep.expected = static_cast<double>(bound);
    rep.assertions.push_back({"best_equals_bound", rep.found && rep.best == static_cast<double>(bound),
                              "best=" + std::to_string(static_cast<long long>(rep.best)) +
                                  " bound=" + std::to_string(bound)});
    bool all_have_kr = std::all_of(rep.maximizers.begin(), rep.maximizers.end(), [&](const SignedGraph& g) {
        return find_unbalanced_complete(g, r).has_value();
    });
    rep.assertions.push_back({"maximizers_contain_unbalanced_K_r", all_have_kr, ""});
    auto gamma = gamma_construction(n, r);
    bool has_gamma = std::any_of(rep.maximizers.begin(), rep.maximizers.end(),
                                 [&](const SignedGraph& g) { return are_switching_isomorphic(g, gamma); });
    rep.assertions.push_back({"gamma_among_maximizers", has_gamma, ""});
    return rep;
}

/// Largest index over the same classes; must equal the index of the
/// one-negative-edge construction, which must be the unique maximizer.
inline ExtremalReport max_index_report(int n, int r, const ScanOptions& opts = {}) {
    detail::check_search_params(n, r);
    SearchSpec spec{n, r, Objective::Index};
    auto rep = detail::build_report(spec, scan(spec, opts));
    auto gamma = gamma_construction(n, r);
    double expected = index(gamma);
    rep.expected = expected;
    rep.assertions.push_back({"best_equals_gamma_index", rep.found && std::abs(rep.best - expected) <= 1e-9,
                              "best=" + std::to_string(rep.best) + " expected=" + std::to_string(expected)});
    double cubic_root = largest_real_root(gamma_cubic(n, r), n - 2.0, n - 1.0);
    rep.assertions.push_back({"best_matches_cubic_root", rep.found && std::abs(rep.best - cubic_root) <= 1e-9,
                              "root=" + std::to_string(cubic_root)});
    bool unique = rep.maximizers.size() == 1 && are_switching_isomorphic(rep.maximizers.front(), gamma);
    rep.assertions.push_back({"unique_maximizer_is_gamma", unique,
                              std::to_string(rep.maximizers.size()) + " maximizer class(es)"});
    bool one_negative = std::all_of(rep.maximizers.begin(), rep.maximizers.end(),
                                    [](const SignedGraph& g) { return has_single_negative_edge_switching(g); });
    rep.assertions.push_back({"maximizers_have_one_negative_edge", one_negative, ""});
    return rep;
}

struct C3Reports {
    ExtremalReport edges;
    ExtremalReport radius;
};

/// Edge and spectral-radius extremes over unbalanced classes with no
/// negative triangle. The maximizer families are reported, not asserted.
inline C3Reports c3_reports(int n, const ScanOptions& opts = {}) {
    if (n < 3 || n > kMaxEnumerationOrder)
        throw Error(ErrorKind::ParameterRange, "negative-triangle reports need 3 <= n <= " +
                                                   std::to_string(kMaxEnumerationOrder));
    SearchSpec edge_spec{n, std::nullopt, Objective::Edges};
    SearchSpec radius_spec{n, std::nullopt, Objective::SpectralRadius};
    C3Reports out{detail::build_report(edge_spec, scan(edge_spec, opts)),
                  detail::build_report(radius_spec, scan(radius_spec, opts))};

    long long edge_bound = static_cast<long long>(n) * (n - 1) / 2 - (n - 2);
    out.edges.expected = static_cast<double>(edge_bound);
    // With no admissible class (n = 3) the upper bound holds vacuously.
    out.edges.assertions.push_back(
        {"best_equals_bound", !out.edges.found || out.edges.best == static_cast<double>(edge_bound),
         out.edges.found ? "best=" + std::to_string(static_cast<long long>(out.edges.best)) +
                               " bound=" + std::to_string(edge_bound)
                         : "no admissible class"});

    double radius_bound = (std::sqrt(static_cast<double>(n) * n - 8) + n - 4) / 2;
    out.radius.expected = radius_bound;
    out.radius.assertions.push_back(
        {"best_equals_bound", !out.radius.found || std::abs(out.radius.best - radius_bound) <= 1e-9,
         out.radius.found ? "best=" + std::to_string(out.radius.best) + " bound=" + std::to_string(radius_bound)
                          : "no admissible class"});
    return out;
}

} // namespace sgt

#endif // SGT_SEARCH_HPP
