#ifndef SGT_VERIFY_HPP
#define SGT_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "sgt/report.hpp"
#include "sgt/search.hpp"
#include "sgt/sweeps.hpp"

namespace sgt {

struct VerifyOptions {
    int n_min = 1;
    int n_max = 5;
    std::optional<int> r_min;
    std::optional<int> r_max;
    bool edges = true;
    bool index = true;
    bool c3 = true;
    bool lemmas = true;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::uint64_t random_trials = 1000;
    /// n = 7 index and radius scans take hours; they only run when set.
    bool allow_large = false;
    std::optional<std::filesystem::path> checkpoint_dir;
};

struct VerifySummary {
    Json document;
    bool passed = true;
};

namespace detail {

inline ScanOptions scan_options(const VerifyOptions& opts, const std::string& tag) {
    ScanOptions s;
    s.jobs = opts.jobs;
    s.chunks = 256;
    if (opts.checkpoint_dir) {
        std::filesystem::create_directories(*opts.checkpoint_dir);
        s.checkpoint = *opts.checkpoint_dir / (tag + ".jsonl");
    }
    return s;
}

} // namespace detail

/// Runs every requested extremal scan and bound sweep. Assertion failures
/// are recorded in the document, never thrown.
inline VerifySummary verify(const VerifyOptions& opts) {
    if (opts.n_max > kMaxEnumerationOrder || opts.n_min > opts.n_max)
        throw Error(ErrorKind::ParameterRange, "verify needs n_min <= n_max <= " +
                                                   std::to_string(kMaxEnumerationOrder));
    VerifySummary out;
    Json& doc = out.document;
    Json skipped = Json::array();
    auto record = [&](const ExtremalReport& r) {
        out.passed = out.passed && r.passed();
        return to_json(r);
    };
    auto large_blocked = [&](int n) { return n >= kMaxEnumerationOrder && !opts.allow_large; };

    auto r_range = [&](int n) {
        int lo = std::max(3, opts.r_min.value_or(3));
        int hi = std::min(n - 1, opts.r_max.value_or(n - 1));
        return std::pair{lo, hi};
    };

    if (opts.edges) {
        Json list = Json::array();
        for (int n = std::max(4, opts.n_min); n <= opts.n_max; ++n)
            for (auto [r, hi] = r_range(n); r <= hi; ++r)
                list.push_back(record(max_edges_report(
                    n, r, detail::scan_options(opts, "edges_n" + std::to_string(n) + "_r" + std::to_string(r)))));
        doc["edges"] = list;
    }
    if (opts.index) {
        Json list = Json::array();
        for (int n = std::max(4, opts.n_min); n <= opts.n_max; ++n) {
            for (auto [r, hi] = r_range(n); r <= hi; ++r) {
                if (large_blocked(n)) {
                    skipped.push_back({{"mode", "index"}, {"n", n}, {"r", r}, {"reason", "n = 7 needs --allow-n7"}});
                    continue;
                }
                list.push_back(record(max_index_report(
                    n, r, detail::scan_options(opts, "index_n" + std::to_string(n) + "_r" + std::to_string(r)))));
            }
        }
        doc["index"] = list;
    }
    if (opts.c3) {
        Json list = Json::array();
        for (int n = std::max(3, opts.n_min); n <= opts.n_max; ++n) {
            if (large_blocked(n)) {
                skipped.push_back({{"mode", "c3"}, {"n", n}, {"reason", "n = 7 needs --allow-n7"}});
                continue;
            }
            auto c = c3_reports(n, detail::scan_options(opts, "c3_n" + std::to_string(n)));
            list.push_back({{"n", n}, {"edges", record(c.edges)}, {"spectral_radius", record(c.radius)}});
        }
        doc["c3"] = list;
    }
    if (opts.lemmas) {
        Json sweeps = Json::array();
        for (int n = std::max(1, opts.n_min); n <= std::min(opts.n_max, 6); ++n) {
            auto s = lemma_sweep(n, opts.jobs);
            out.passed = out.passed && s.passed();
            sweeps.push_back(to_json(s));
        }
        auto nonneg = nonneg_sweep(opts.random_trials, opts.seed);
        out.passed = out.passed && nonneg.passed();
        auto radius = radius_index_sweep(12);
        out.passed = out.passed && radius.passed();
        doc["lemmas"] = {{"exhaustive", sweeps}, {"nonneg_switch", to_json(nonneg)}, {"radius_index", to_json(radius)}};
    }
    doc["skipped"] = skipped;
    doc["passed"] = out.passed;
    return out;
}

inline VerifySummary verify_all(int n_max, unsigned jobs = 1) {
    VerifyOptions opts;
    opts.n_max = n_max;
    opts.jobs = jobs;
    return verify(opts);
}

} // namespace sgt

#endif // SGT_VERIFY_HPP
