// One PASS/FAIL line per acceptance criterion, then a summary line naming
// the failed criteria. Exit status is 0 only if every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "sgt/constructions.hpp"
#include "sgt/invariants.hpp"
#include "sgt/search.hpp"
#include "sgt/spectra.hpp"
#include "sgt/sweeps.hpp"

using namespace sgt;

namespace {

constexpr double kIndexTol = 1e-9;
constexpr double kRadiusTol = 1e-9;
constexpr double kRootTol = 1e-9;
constexpr std::uint64_t kPerturbationTrials = 1000;
constexpr std::uint64_t kNonnegTrials = 1000;
constexpr std::uint64_t kSeed = 20240611;

const std::vector<std::pair<int, int>> kGrid{{4, 3}, {5, 3}, {5, 4}, {6, 3}, {6, 4}, {6, 5}};

struct Outcome {
    int id;
    bool passed;
    std::string title;
    std::vector<std::string> details;
    double seconds = 0;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

ScanOptions scan_options() {
    ScanOptions o;
    o.jobs = std::max(1u, std::thread::hardware_concurrency());
    o.chunks = 128;
    return o;
}

struct GridReports {
    std::vector<ExtremalReport> edges, index;
};

Outcome criterion_edges(const GridReports& g) {
    Outcome o{1, true, "edge bound n(n-1)/2-(n-r) over the (n,r) grid", {}};
    for (const auto& rep : g.edges) {
        int n = rep.spec.n, r = *rep.spec.r;
        long long bound = gamma_edge_count(n, r);
        bool ok = rep.found && rep.best == static_cast<double>(bound);
        o.passed = o.passed && ok;
        o.details.push_back(fmt("(n=%d,r=%d) best=%lld bound=%lld classes=%llu %s", n, r,
                                static_cast<long long>(rep.best), bound,
                                static_cast<unsigned long long>(rep.counts.scanned), ok ? "ok" : "MISMATCH"));
    }
    return o;
}

Outcome criterion_index(const GridReports& g) {
    Outcome o{2, true, "index bound attained only by the one-negative-edge construction", {}};
    for (const auto& rep : g.index) {
        int n = rep.spec.n, r = *rep.spec.r;
        auto gamma = gamma_construction(n, r);
        double expected = index(gamma);
        bool value_ok = rep.found && std::abs(rep.best - expected) <= kIndexTol;
        bool unique = rep.maximizers.size() == 1 && are_switching_isomorphic(rep.maximizers[0], gamma);
        o.passed = o.passed && value_ok && unique;
        o.details.push_back(fmt("(n=%d,r=%d) best=%.12g expected=%.12g maximizer classes=%zu %s", n, r, rep.best,
                                expected, rep.maximizers.size(), value_ok && unique ? "ok" : "MISMATCH"));
    }
    return o;
}

Outcome criterion_cubic() {
    Outcome o{3, true, "cubic characterization of the index for 5<=n<=30", {}};
    int cases = 0, root_fail = 0, bracket_fail = 0, value_fail = 0, factor_fail = 0;
    std::string first_value_fail;
    for (int n = 5; n <= 30; ++n)
        for (int r = 3; r <= n - 1; ++r) {
            ++cases;
            auto f = gamma_cubic(n, r);
            double l = index(gamma_construction(n, r));
            double root = largest_real_root(f, n - 2, n - 1);
            root_fail += std::abs(l - root) > kRootTol;
            bracket_fail += !(l >= n - 2 - kRootTol && l < n - 1);
            std::int64_t at = f.evaluate(static_cast<std::int64_t>(n - 2));
            if (at != -(r - 3)) {
                ++value_fail;
                if (first_value_fail.empty())
                    first_value_fail = fmt("first at (n=%d,r=%d): f(n-2)=%lld, -(r-3)=%d", n, r,
                                           static_cast<long long>(at), -(r - 3));
            }
            factor_fail += !(char_poly(gamma_quotient(n, r)) == IntPolynomial::linear(-1) * f);
        }
    o.passed = root_fail == 0 && bracket_fail == 0 && value_fail == 0 && factor_fail == 0;
    o.details.push_back(fmt("index equals largest root of f within %g: %d/%d", kRootTol, cases - root_fail, cases));
    o.details.push_back(fmt("n-2 <= index < n-1: %d/%d", cases - bracket_fail, cases));
    o.details.push_back(fmt("f(n-2) = -(r-3) in exact integers: %d/%d%s", cases - value_fail, cases,
                            value_fail ? (" (" + first_value_fail + ")").c_str() : ""));
    o.details.push_back(fmt("char_poly(Q1) = (x+1) f(x) coefficient-exact: %d/%d", cases - factor_fail, cases));
    return o;
}

Outcome criterion_c3() {
    Outcome o{4, true, "negative-triangle-free edge and spectral radius bounds for n in {4,5,6}", {}};
    for (int n = 4; n <= 6; ++n) {
        auto rep = c3_reports(n, scan_options());
        long long edge_bound = static_cast<long long>(n) * (n - 1) / 2 - (n - 2);
        double radius_bound = (std::sqrt(static_cast<double>(n * n - 8)) + n - 4) / 2;
        bool e_ok = rep.edges.found && rep.edges.best == static_cast<double>(edge_bound);
        bool r_ok = rep.radius.found && std::abs(rep.radius.best - radius_bound) <= kRadiusTol;
        o.passed = o.passed && e_ok && r_ok;
        o.details.push_back(fmt("n=%d edges=%lld (bound %lld, %zu classes) radius=%.12g (bound %.12g, %zu classes) %s",
                                n, static_cast<long long>(rep.edges.best), edge_bound, rep.edges.maximizers.size(),
                                rep.radius.best, radius_bound, rep.radius.maximizers.size(),
                                e_ok && r_ok ? "ok" : "MISMATCH"));
    }
    return o;
}

Outcome criterion_triangle_base(const GridReports& g) {
    Outcome o{5, true, "r=3 base cases at n in {5,6}: edges and index n-2 with unique maximizer", {}};
    for (int n : {5, 6}) {
        auto pick = [&](const std::vector<ExtremalReport>& reps) {
            return *std::find_if(reps.begin(), reps.end(),
                                 [&](const ExtremalReport& r) { return r.spec.n == n && *r.spec.r == 3; });
        };
        auto e = pick(g.edges);
        auto i = pick(g.index);
        long long bound = static_cast<long long>(n) * (n - 1) / 2 - (n - 3);
        bool e_ok = e.found && e.best == static_cast<double>(bound);
        bool i_ok = i.found && std::abs(i.best - (n - 2)) <= kIndexTol;
        bool unique = i.maximizers.size() == 1 && are_switching_isomorphic(i.maximizers[0], gamma_construction(n, 3));
        o.passed = o.passed && e_ok && i_ok && unique;
        o.details.push_back(fmt("n=%d edges=%lld (bound %lld) index=%.12g maximizer classes=%zu %s", n,
                                static_cast<long long>(e.best), bound, i.best, i.maximizers.size(),
                                e_ok && i_ok && unique ? "ok" : "MISMATCH"));
    }
    return o;
}

Outcome criterion_perturbations() {
    Outcome o{6, true, "index monotone under the five perturbations; Rayleigh closed forms", {}};
    for (auto kind : {PerturbationKind::AddPositive, PerturbationKind::RemoveNegative, PerturbationKind::FlipNegative,
                      PerturbationKind::RotatePositive, PerturbationKind::SwapSigns}) {
        auto s = perturbation_suite(kind, kPerturbationTrials, kSeed);
        bool ok = s.monotonicity_violations == 0 && s.rayleigh_violations == 0;
        o.passed = o.passed && ok;
        o.details.push_back(fmt("%-15s trials=%llu decreases=%llu rayleigh>1e-9=%llu max_rayleigh_err=%.3g "
                                "min_delta=%.3g | equality w/o condition=%llu, condition w/o equality=%llu (of %llu decidable)",
                                to_string(kind), static_cast<unsigned long long>(s.trials),
                                static_cast<unsigned long long>(s.monotonicity_violations),
                                static_cast<unsigned long long>(s.rayleigh_violations), s.max_rayleigh_error,
                                s.min_delta, static_cast<unsigned long long>(s.equality_without_condition),
                                static_cast<unsigned long long>(s.condition_without_equality),
                                static_cast<unsigned long long>(s.decidable)));
    }
    return o;
}

Outcome criterion_lemmas() {
    Outcome o{7, true, "index bounds over all classes at n<=6; non-negative eigenvector switching", {}};
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    for (int n = 1; n <= 6; ++n) {
        auto s = lemma_sweep(n, jobs);
        o.passed = o.passed && s.passed();
        o.details.push_back(fmt("n=%d classes=%llu wilf=%llu wilf_b=%llu underlying=%llu order=%llu "
                                "order-equality cases=%llu mismatches=%llu zero-entry=%llu",
                                n, static_cast<unsigned long long>(s.classes),
                                static_cast<unsigned long long>(s.clique_bound_violations),
                                static_cast<unsigned long long>(s.balanced_clique_bound_violations),
                                static_cast<unsigned long long>(s.underlying_violations),
                                static_cast<unsigned long long>(s.order_bound_violations),
                                static_cast<unsigned long long>(s.order_equality_cases),
                                static_cast<unsigned long long>(s.order_equality_mismatches),
                                static_cast<unsigned long long>(s.zero_entry_violations)));
    }
    auto nn = nonneg_sweep(kNonnegTrials, kSeed);
    o.passed = o.passed && nn.passed();
    o.details.push_back(fmt("non-negative switching: trials=%llu negative entries=%llu index drift=%llu "
                            "residual=%llu most negative entry=%.3g",
                            static_cast<unsigned long long>(nn.trials),
                            static_cast<unsigned long long>(nn.negative_entry_failures),
                            static_cast<unsigned long long>(nn.index_drift_failures),
                            static_cast<unsigned long long>(nn.residual_failures), nn.most_negative_entry));
    return o;
}

template <class F>
Outcome timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

} // namespace

int main() {
    GridReports grid;
    auto t0 = std::chrono::steady_clock::now();
    for (auto [n, r] : kGrid) {
        grid.edges.push_back(max_edges_report(n, r, scan_options()));
        grid.index.push_back(max_index_report(n, r, scan_options()));
    }
    double grid_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<Outcome> outcomes;
    outcomes.push_back(criterion_edges(grid));
    outcomes.push_back(criterion_index(grid));
    outcomes.push_back(timed(criterion_cubic));
    outcomes.push_back(timed(criterion_c3));
    outcomes.push_back(criterion_triangle_base(grid));
    outcomes.push_back(timed(criterion_perturbations));
    outcomes.push_back(timed(criterion_lemmas));

    std::string failed;
    for (const auto& o : outcomes) {
        std::printf("[%s] criterion %d: %s\n", o.passed ? "PASS" : "FAIL", o.id, o.title.c_str());
        for (const auto& d : o.details)
            std::printf("         %s\n", d.c_str());
        if (o.seconds > 0)
            std::printf("         time %.2fs\n", o.seconds);
        if (!o.passed)
            failed += (failed.empty() ? "" : ",") + std::to_string(o.id);
    }
    std::printf("         (criteria 1, 2 and 5 share one grid scan: %.2fs)\n", grid_seconds);
    std::printf("[EXCLUDED] criterion 8: theorems for all n are not checkable by computation; "
                "covered by criteria 1-7 at small n and the n<=30 cubic cross-check\n");
    std::printf("acceptance summary: failed criteria: %s\n", failed.empty() ? "none" : failed.c_str());
    return failed.empty() ? 0 : 1;
}
