#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "sgt/constructions.hpp"
#include "sgt/enumerate.hpp"
#include "sgt/parallel.hpp"
#include "sgt/search.hpp"

using namespace sgt;

namespace {

std::set<std::vector<std::int8_t>> yield_set(int n) {
    std::set<std::vector<std::int8_t>> out;
    auto it = enumerate_switching_classes(n);
    while (it.next())
        out.insert(it.graph().sign_table());
    return out;
}

std::uint64_t count_classes(int n) {
    std::uint64_t c = 0;
    auto it = enumerate_switching_classes(n);
    while (it.next())
        ++c;
    return c;
}

/// Sum over labeled graphs of 2^(cycle rank), counted without the
/// enumerator: components by union-find over each edge subset.
std::uint64_t class_count_formula(int n) {
    auto pairs = vertex_pairs(n);
    std::uint64_t total = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        int m = 0, components = n;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((code >> e) & 1) {
                ++m;
                int a = find(pairs[e].first), b = find(pairs[e].second);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
        total += std::uint64_t{1} << (m - n + components);
    }
    return total;
}

ScanOptions two_jobs() {
    ScanOptions o;
    o.jobs = 2;
    o.chunks = 16;
    return o;
}

const Assertion& assertion(const ExtremalReport& r, const std::string& name) {
    for (const auto& a : r.assertions)
        if (a.name == name)
            return a;
    throw std::runtime_error("missing assertion " + name);
}

} // namespace

TEST(Enumeration, SmallCounts) {
    EXPECT_EQ(count_classes(1), 1u);
    EXPECT_EQ(count_classes(2), 2u);
    EXPECT_EQ(count_classes(3), 9u);
    auto two = yield_set(2);
    EXPECT_TRUE(two.count(SignedGraph(2, std::vector<SignedEdge>{}).sign_table()));
    EXPECT_TRUE(two.count(complete(2, 1).sign_table()));
}

TEST(Enumeration, CountsMatchCycleRankFormula) {
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(count_classes(n), class_count_formula(n)) << "n=" << n;
}

TEST(Enumeration, OrderCap) {
    EXPECT_THROW(enumerate_switching_classes(0), Error);
    EXPECT_THROW(enumerate_switching_classes(8), Error);
}

TEST(Enumeration, CompleteAtFourAgainstAllEdgeStates) {
    // Every assignment of {absent, +, -} to the six pairs, bucketed by
    // switching class via the brute-force equivalence test.
    auto pairs = vertex_pairs(4);
    std::vector<SignedGraph> reps;
    for (int code = 0; code < 729; ++code) {
        std::vector<SignedEdge> edges;
        int c = code;
        for (auto [u, v] : pairs) {
            int state = c % 3;
            c /= 3;
            if (state)
                edges.push_back({u, v, state == 1 ? 1 : -1});
        }
        SignedGraph g(4, edges);
        bool seen = std::any_of(reps.begin(), reps.end(),
                                [&](const SignedGraph& h) { return oracle::switching_equivalent(g, h); });
        if (!seen)
            reps.push_back(g);
    }
    EXPECT_EQ(reps.size(), 108u);
    EXPECT_EQ(count_classes(4), reps.size());
    auto yielded = yield_set(4);
    for (const auto& g : reps)
        EXPECT_EQ(yielded.count(canonical_switch(g).sign_table()), 1u);
}

TEST(Enumeration, YieldedClassesAreCanonicalAndDistinct) {
    for (int n = 3; n <= 5; ++n) {
        std::set<std::vector<std::int8_t>> seen;
        auto it = enumerate_switching_classes(n);
        while (it.next()) {
            auto g = it.graph();
            EXPECT_EQ(canonical_switch(g), g);
            EXPECT_TRUE(seen.insert(g.sign_table()).second);
            EXPECT_EQ(it.balanced(), is_balanced(g).balanced);
        }
    }
}

TEST(Enumeration, SoundOnRandomGraphs) {
    std::mt19937_64 rng(51);
    std::vector<std::set<std::vector<std::int8_t>>> sets(7);
    for (int n = 1; n <= 6; ++n)
        sets[n] = yield_set(n);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto g = oracle::random_graph(rng, n, 0.2 + 0.7 * (rng() % 100) / 100.0);
        EXPECT_EQ(sets[n].count(canonical_switch(g).sign_table()), 1u);
        EXPECT_EQ(decode_class(n, encode_class(g)), canonical_switch(g));
    }
}

TEST(Enumeration, RangesPartitionTheSequence) {
    const int n = 5;
    auto ranges = split_range(underlying_graph_count(n), 7);
    std::uint64_t total = 0;
    std::uint64_t prev_end = 0;
    for (auto r : ranges) {
        EXPECT_EQ(r.begin, prev_end);
        prev_end = r.end;
        SwitchingClassIterator it(n, r.begin, r.end);
        while (it.next())
            ++total;
    }
    EXPECT_EQ(prev_end, underlying_graph_count(n));
    EXPECT_EQ(total, count_classes(n));
}

TEST(Parallel, MergesEveryChunkAndPropagatesErrors) {
    std::vector<std::size_t> todo(50);
    for (std::size_t i = 0; i < todo.size(); ++i)
        todo[i] = i;
    std::size_t sum = 0;
    run_chunks<std::size_t>(todo, 4, [](std::size_t c) { return c * c; },
                            [&](std::size_t, std::size_t&& v) { sum += v; });
    EXPECT_EQ(sum, 49u * 50u * 99u / 6u);
    EXPECT_THROW(run_chunks<int>(
                     todo, 3,
                     [](std::size_t c) -> int {
                         if (c == 17)
                             throw std::runtime_error("boom");
                         return 0;
                     },
                     [](std::size_t, int&&) {}),
                 std::runtime_error);
}

TEST(Scan, ParallelAndSerialAgree) {
    SearchSpec spec{5, 3, Objective::Index};
    auto serial = scan(spec);
    ScanOptions par;
    par.jobs = 4;
    par.chunks = 37;
    auto parallel = scan(spec, par);
    EXPECT_EQ(serial.best, parallel.best);
    EXPECT_EQ(serial.counts.scanned, parallel.counts.scanned);
    EXPECT_EQ(serial.counts.admissible, parallel.counts.admissible);
    ASSERT_EQ(serial.candidates.size(), parallel.candidates.size());
    for (std::size_t i = 0; i < serial.candidates.size(); ++i)
        EXPECT_EQ(serial.candidates[i].code, parallel.candidates[i].code);
}

TEST(Scan, CheckpointResumes) {
    auto path = std::filesystem::temp_directory_path() / "sgt_scan_checkpoint_test.jsonl";
    std::filesystem::remove(path);
    SearchSpec spec{5, 4, Objective::Edges};
    ScanOptions opts;
    opts.chunks = 8;
    opts.checkpoint = path;
    auto first = scan(spec, opts);
    auto resumed = scan(spec, opts); // every chunk read back from the file
    EXPECT_EQ(first.best, resumed.best);
    EXPECT_EQ(first.counts.scanned, resumed.counts.scanned);
    EXPECT_EQ(first.candidates.size(), resumed.candidates.size());
    EXPECT_EQ(first.counts.scanned, count_classes(5));

    SearchSpec other{5, 3, Objective::Edges};
    EXPECT_THROW(scan(other, opts), Error);
    std::filesystem::remove(path);
}

TEST(EdgeReport, FiveThree) {
    auto rep = max_edges_report(5, 3, two_jobs());
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.best, 8);
    EXPECT_GT(rep.maximizers.size(), 1u);
    EXPECT_TRUE(assertion(rep, "gamma_among_maximizers").passed);
}

TEST(EdgeReport, SixFour) {
    auto rep = max_edges_report(6, 4, two_jobs());
    EXPECT_TRUE(rep.passed());
    EXPECT_EQ(rep.best, 13);
}

TEST(EdgeReport, SmallGrid) {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 4}}) {
        auto rep = max_edges_report(n, r, two_jobs());
        EXPECT_TRUE(rep.passed()) << n << "," << r;
        EXPECT_EQ(rep.best, n * (n - 1) / 2 - (n - r));
        for (const auto& g : rep.maximizers) {
            EXPECT_FALSE(is_balanced(g).balanced);
            EXPECT_TRUE(is_unbalanced_complete_free(g, r + 1));
            EXPECT_EQ(static_cast<double>(g.size()), rep.best);
        }
    }
}

TEST(IndexReport, SixThreeIsGammaOneOne) {
    auto rep = max_index_report(6, 3, two_jobs());
    EXPECT_TRUE(rep.passed());
    EXPECT_NEAR(rep.best, 4.0, 1e-9);
    ASSERT_EQ(rep.maximizers.size(), 1u);
    EXPECT_TRUE(are_switching_isomorphic(rep.maximizers[0], gamma_construction(6, 3)));
}

TEST(IndexReport, SixFourMatchesCubic) {
    auto rep = max_index_report(6, 4, two_jobs());
    EXPECT_TRUE(rep.passed());
    EXPECT_NEAR(rep.best, largest_real_root(gamma_cubic(6, 4), 4, 5), 1e-9);
    ASSERT_EQ(rep.maximizers.size(), 1u);
    EXPECT_TRUE(are_switching_isomorphic(rep.maximizers[0], gamma_construction(6, 4)));
}

TEST(IndexReport, SmallGridIncludingBoundaryR) {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}}) {
        auto rep = max_index_report(n, r, two_jobs());
        EXPECT_TRUE(rep.passed()) << n << "," << r;
        EXPECT_EQ(rep.maximizers.size(), 1u);
    }
}

TEST(IndexReport, ParameterRange) {
    EXPECT_THROW(max_index_report(5, 2), Error);
    EXPECT_THROW(max_index_report(5, 5), Error);
    EXPECT_THROW(max_edges_report(8, 3), Error);
}

TEST(C3Report, EdgeAndRadiusBounds) {
    auto four = c3_reports(4, two_jobs());
    EXPECT_TRUE(four.edges.passed());
    EXPECT_EQ(four.edges.best, 4);
    auto five = c3_reports(5, two_jobs());
    EXPECT_TRUE(five.edges.passed());
    EXPECT_TRUE(five.radius.passed());
    EXPECT_EQ(five.edges.best, 7);
    auto six = c3_reports(6, two_jobs());
    EXPECT_TRUE(six.radius.passed());
    EXPECT_NEAR(six.radius.best, (std::sqrt(28.0) + 2) / 2, 1e-9);
    for (const auto& g : six.radius.maximizers) {
        EXPECT_TRUE(is_c3_minus_free(g));
        EXPECT_FALSE(is_balanced(g).balanced);
    }
}

TEST(C3Report, OrderThreeHasNoAdmissibleClass) {
    auto three = c3_reports(3);
    EXPECT_FALSE(three.edges.found);
    EXPECT_TRUE(three.edges.passed());
    EXPECT_EQ(three.edges.counts.admissible, 0u);
}

TEST(Dedupe, CollapsesRelabeledCopies) {
    auto g = gamma_construction(5, 3);
    std::vector<Vertex> perm{4, 3, 2, 1, 0};
    auto copies = dedupe_switching_isomorphic({g, permuted(g, perm), switched(g, SwitchSet({1, 2})),
                                               unbalanced_complete(5)});
    EXPECT_EQ(copies.size(), 2u);
}

TEST(SingleNegativeEdge, Detection) {
    EXPECT_TRUE(has_single_negative_edge_switching(gamma_construction(6, 4)));
    EXPECT_TRUE(has_single_negative_edge_switching(switched(gamma_construction(6, 4), SwitchSet({0, 3}))));
    EXPECT_FALSE(has_single_negative_edge_switching(complete(4, 1)));
}
