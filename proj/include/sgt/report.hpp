#ifndef SGT_REPORT_HPP
#define SGT_REPORT_HPP

// JSON encodings of every result type. Floats are rounded to 12
// significant digits so that identical runs serialize byte-identically.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "sgt/graph.hpp"
#include "sgt/invariants.hpp"
#include "sgt/perturb.hpp"
#include "sgt/search.hpp"
#include "sgt/sg1.hpp"
#include "sgt/spectra.hpp"
#include "sgt/sweeps.hpp"

namespace sgt {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

inline double round_sig(double x, int digits = 12) {
    if (!std::isfinite(x) || x == 0.0)
        return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r; // no negative zero
}

inline Json real(double x) { return round_sig(x); }

inline Json reals(std::span<const double> xs) {
    Json a = Json::array();
    for (double x : xs)
        a.push_back(real(x));
    return a;
}

inline Json to_json(const IntPolynomial& p) {
    return Json{{"coefficients", p.coefficients()}, {"text", p.to_string()}};
}

inline Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (auto v : m.row(i))
            row.push_back(v);
        rows.push_back(row);
    }
    return rows;
}

inline Json graph_summary(const SignedGraph& g) {
    return Json{{"n", g.order()},
                {"edges", g.size()},
                {"negative_edges", g.negative_edge_count()},
                {"sg1", to_sg1(g)}};
}

inline Json to_json(const Spectrum& s) {
    return Json{{"eigenvalues", reals(s.values())},
                {"index", real(s.index())},
                {"spectral_radius", real(s.spectral_radius())}};
}

inline Json to_json(const BalanceResult& b) {
    Json j{{"balanced", b.balanced}};
    if (const auto* u = std::get_if<SwitchSet>(&b.certificate))
        j["switch_set"] = std::vector<Vertex>(u->members().begin(), u->members().end());
    else
        j["negative_cycle"] = std::get<std::vector<Vertex>>(b.certificate);
    return j;
}

inline Json to_json(const RadiusIndexCheck& c) {
    return Json{{"radius_exceeds_n_minus_2", c.radius_exceeds},
                {"negation_free", c.negation_free},
                {"hypotheses_hold", c.hypotheses_hold},
                {"spectral_radius", real(c.spectral_radius)},
                {"index", real(c.index)},
                {"smallest", real(c.smallest)},
                {"conclusion_holds", c.conclusion_holds}};
}

inline Json to_json(const Perturbation& p) {
    Json j{{"kind", to_string(p.kind)}};
    if (uses_edge_list(p.kind)) {
        Json e = Json::array();
        for (auto [u, v] : p.edges)
            e.push_back({u, v});
        j["edges"] = e;
    } else {
        j["i"] = p.i;
        j["j"] = p.j;
        j["k"] = p.k;
    }
    return j;
}

inline Json to_json(const EqualityDiagnosis& d) {
    return Json{{"kind", to_string(d.kind)},
                {"index_before", real(d.index_before)},
                {"index_after", real(d.index_after)},
                {"delta", real(d.delta)},
                {"rayleigh_increment", real(d.rayleigh_increment)},
                {"closed_form_increment", real(d.closed_form)},
                {"eigenvector_nonnegative", d.eigenvector_nonnegative},
                {"ordering_holds", d.ordering_holds},
                {"precondition_holds", d.precondition_holds},
                {"degenerate", d.degenerate},
                {"index_equal", d.index_equal},
                {"index_distinct", d.index_distinct},
                {"condition_met", d.condition_met},
                {"decidable", d.decidable},
                {"consistent", d.consistent}};
}

inline Json to_json(const Assertion& a) {
    return Json{{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}};
}

inline Json to_json(const ExtremalReport& r) {
    Json maximizers = Json::array();
    for (const auto& g : r.maximizers)
        maximizers.push_back(to_sg1(g));
    Json assertions = Json::array();
    for (const auto& a : r.assertions)
        assertions.push_back(to_json(a));
    Json j{{"n", r.spec.n}};
    j["family"] = r.spec.r ? "K-_{r+1}-free" : "C3--free";
    j["r"] = r.spec.r ? Json(*r.spec.r) : Json(nullptr);
    j["objective"] = to_string(r.spec.objective);
    j["found"] = r.found;
    if (r.spec.objective == Objective::Edges)
        j["best"] = static_cast<long long>(r.best);
    else
        j["best"] = real(r.best);
    if (r.expected)
        j["expected"] = r.spec.objective == Objective::Edges ? Json(static_cast<long long>(*r.expected))
                                                             : real(*r.expected);
    j["counts"] = {{"classes_scanned", r.counts.scanned},
                   {"unbalanced", r.counts.unbalanced},
                   {"unbalanced_and_free", r.counts.admissible}};
    j["labeled_maximizers"] = r.labeled_maximizers;
    j["maximizer_classes"] = r.maximizers.size();
    j["maximizers_sg1"] = maximizers;
    j["assertions"] = assertions;
    j["passed"] = r.passed();
    return j;
}

inline Json to_json(const LemmaSweep& s) {
    return Json{{"n", s.n},
                {"classes", s.classes},
                {"clique_bound_violations", s.clique_bound_violations},
                {"balanced_clique_bound_violations", s.balanced_clique_bound_violations},
                {"underlying_index_violations", s.underlying_violations},
                {"order_bound_violations", s.order_bound_violations},
                {"order_bound_equality_cases", s.order_equality_cases},
                {"order_bound_equality_mismatches", s.order_equality_mismatches},
                {"zero_entry_violations", s.zero_entry_violations},
                {"passed", s.passed()}};
}

inline Json to_json(const NonnegSweep& s) {
    return Json{{"trials", s.trials},
                {"negative_entry_failures", s.negative_entry_failures},
                {"index_drift_failures", s.index_drift_failures},
                {"residual_failures", s.residual_failures},
                {"most_negative_entry", real(s.most_negative_entry)},
                {"passed", s.passed()}};
}

inline Json to_json(const PerturbationSuite& s) {
    return Json{{"kind", to_string(s.kind)},
                {"trials", s.trials},
                {"monotonicity_violations", s.monotonicity_violations},
                {"rayleigh_violations", s.rayleigh_violations},
                {"max_rayleigh_error", real(s.max_rayleigh_error)},
                {"min_delta", real(s.min_delta)},
                {"strict_increases", s.strict_increases},
                {"decidable", s.decidable},
                {"equality_without_condition", s.equality_without_condition},
                {"condition_without_equality", s.condition_without_equality},
                {"passed", s.passed()}};
}

inline Json to_json(const RadiusIndexSweep& s) {
    return Json{{"checked", s.checked},
                {"hypotheses_held", s.hypotheses_held},
                {"conclusion_failures", s.conclusion_failures},
                {"passed", s.passed()}};
}

} // namespace sgt

#endif // SGT_REPORT_HPP
