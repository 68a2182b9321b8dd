#ifndef SGT_TOOLS_CLI_HPP
#define SGT_TOOLS_CLI_HPP

#include <chrono>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "sgt/constructions.hpp"
#include "sgt/error.hpp"
#include "sgt/invariants.hpp"
#include "sgt/perturb.hpp"
#include "sgt/report.hpp"
#include "sgt/sg1.hpp"
#include "sgt/spectra.hpp"
#include "sgt/verify.hpp"

namespace sgt::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2 };

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

inline int parse_int(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(ErrorKind::Parse, std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
    return v;
}

/// "0-1,2-3"
inline std::vector<std::pair<Vertex, Vertex>> parse_pairs(std::string_view s) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto item : split(s, ',')) {
        auto uv = split(item, '-');
        if (uv.size() != 2)
            throw Error(ErrorKind::Parse, "--edges: expected u-v, got '" + std::string(item) + "'");
        out.emplace_back(parse_int(uv[0], "--edges"), parse_int(uv[1], "--edges"));
    }
    return out;
}

/// "i,j,k"
inline std::array<Vertex, 3> parse_triple(std::string_view s) {
    auto parts = split(s, ',');
    if (parts.size() != 3)
        throw Error(ErrorKind::Parse, "--triple: expected i,j,k, got '" + std::string(s) + "'");
    return {parse_int(parts[0], "--triple"), parse_int(parts[1], "--triple"), parse_int(parts[2], "--triple")};
}

/// "0|1|2,3"
inline std::vector<std::vector<Vertex>> parse_blocks(std::string_view s) {
    std::vector<std::vector<Vertex>> blocks;
    for (auto block : split(s, '|')) {
        std::vector<Vertex> b;
        for (auto v : split(block, ','))
            b.push_back(parse_int(v, "--partition"));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

inline PerturbationKind parse_kind(const std::string& s) {
    for (auto k : {PerturbationKind::AddPositive, PerturbationKind::RemoveNegative, PerturbationKind::FlipNegative,
                   PerturbationKind::RotatePositive, PerturbationKind::SwapSigns})
        if (s == to_string(k))
            return k;
    throw Error(ErrorKind::Parse, "unknown perturbation kind '" + s + "'");
}

} // namespace detail

/// Runs one invocation. `args` excludes the program name. Diagnostics go
/// to `err` as a single line.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral and extremal tools for signed graphs", "sgt"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string input = "-";
    std::string output;
    bool timing = false;
    auto io_flags = [&](CLI::App* sub, bool reads_graph) {
        if (reads_graph)
            sub->add_option("--in", input, "SG1 input file, '-' for stdin");
        sub->add_option("--out", output, "Write output here instead of stdout");
        sub->add_flag("--timing", timing, "Include wall-clock timing in the report");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "Emit a construction in SG1 format");
    std::string family;
    int n = 0, r = 0, k = 0;
    std::string sign = "+";
    gen->add_option("family", family, "gamma | turan | complete | unbalanced-complete")
        ->required()
        ->check(CLI::IsMember({"gamma", "turan", "complete", "unbalanced-complete"}));
    gen->add_option("--n", n, "Order");
    gen->add_option("--r", r, "Parameter r");
    gen->add_option("--k", k, "Order of the unbalanced complete graph");
    gen->add_option("--sign", sign, "Edge sign for complete")->check(CLI::IsMember({"+", "-"}));
    io_flags(gen, false);

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues, index and spectral radius");
    bool want_charpoly = false;
    spec_cmd->add_flag("--charpoly", want_charpoly, "Also print the exact characteristic polynomial");
    io_flags(spec_cmd, true);

    // check
    auto* check = app.add_subcommand("check", "Structural and spectral checks");
    bool want_balanced = false, want_bounds = false, want_c3 = false;
    std::vector<int> free_k;
    std::optional<int> radius_r;
    check->add_flag("--balanced", want_balanced, "Balance with certificate, negative girth");
    check->add_option("--free", free_k, "Test for a member of K^-_k (repeatable)");
    check->add_flag("--c3", want_c3, "Test for negative triangles");
    check->add_flag("--bounds", want_bounds, "Clique and order bounds on the index");
    check->add_option("--radius-index", radius_r, "Spectral radius equals index check for parameter r");
    io_flags(check, true);

    // perturb
    auto* perturb = app.add_subcommand("perturb", "Apply an index-monotone perturbation");
    std::string kind_name, edges_arg, triple_arg;
    bool want_switch = false;
    perturb->add_option("--kind", kind_name, "add-positive | remove-negative | flip-negative | rotate-positive | swap-signs")
        ->required();
    perturb->add_option("--edges", edges_arg, "Edge list u-v,u-v for the edge kinds");
    perturb->add_option("--triple", triple_arg, "i,j,k for the triple kinds");
    perturb->add_flag("--nonneg-switch", want_switch, "Switch first so the leading eigenvector is non-negative");
    io_flags(perturb, true);

    // quotient
    auto* quotient = app.add_subcommand("quotient", "Quotient matrix of an equitable partition");
    std::string partition_arg;
    quotient->add_option("--partition", partition_arg, "Blocks separated by '|', vertices by ','")->required();
    io_flags(quotient, true);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification of the extremal results");
    std::string mode = "all";
    std::optional<int> n_exact, n_min, n_max, r_exact, r_min, r_max;
    unsigned jobs = 1;
    std::uint64_t seed = 1, trials = 1000;
    bool allow_n7 = false;
    std::string checkpoint;
    verify_cmd->add_option("--mode", mode, "edges | index | c3 | lemmas | all")
        ->check(CLI::IsMember({"edges", "index", "c3", "lemmas", "all"}));
    verify_cmd->add_option("--n", n_exact, "Single order");
    verify_cmd->add_option("--n-min", n_min, "Smallest order");
    verify_cmd->add_option("--n-max", n_max, "Largest order (at most 7)");
    verify_cmd->add_option("--r", r_exact, "Single r");
    verify_cmd->add_option("--r-min", r_min, "Smallest r");
    verify_cmd->add_option("--r-max", r_max, "Largest r");
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    verify_cmd->add_option("--seed", seed, "Seed for randomized sweeps");
    verify_cmd->add_option("--trials", trials, "Random trials for the eigenvector sweep");
    verify_cmd->add_flag("--allow-n7", allow_n7, "Permit the n = 7 index and radius scans");
    verify_cmd->add_option("--checkpoint", checkpoint, "Directory for resumable scan checkpoints");
    io_flags(verify_cmd, false);

    std::vector<const char*> argv{"sgt"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    auto emit = [&](const std::string& text) {
        if (output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(output);
        if (!f)
            throw Error(ErrorKind::Parse, "cannot write " + output);
        f << text;
    };
    auto document = [&](const std::string& command, Json results) {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = {{"name", command}, {"args", args}};
        doc["results"] = std::move(results);
        if (timing)
            doc["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
        emit(doc.dump(2) + "\n");
    };
    auto read_graph = [&]() {
        if (input == "-")
            return parse_sg1(in);
        std::ifstream f(input);
        if (!f)
            throw Error(ErrorKind::Parse, "cannot open " + input);
        return parse_sg1(f);
    };

    try {
        if (gen->parsed()) {
            SignedGraph g;
            if (family == "gamma")
                g = gamma_construction(n, r);
            else if (family == "turan")
                g = turan_graph(n, r).graph;
            else if (family == "complete")
                g = complete(n, sign == "+" ? 1 : -1);
            else
                g = unbalanced_complete(k);
            emit(to_sg1(g));
            return kOk;
        }

        if (spec_cmd->parsed()) {
            auto g = read_graph();
            Json res{{"graph", graph_summary(g)}, {"spectrum", to_json(spectrum(g))}};
            if (want_charpoly)
                res["char_poly"] = to_json(char_poly(adjacency_matrix(g)));
            document("spectrum", res);
            return kOk;
        }

        if (check->parsed()) {
            auto g = read_graph();
            if (!want_balanced && !want_bounds && !want_c3 && free_k.empty() && !radius_r)
                want_balanced = true;
            bool ok = true;
            Json res{{"graph", graph_summary(g)}};
            if (want_balanced) {
                auto b = is_balanced(g);
                Json j = to_json(b);
                auto girth = negative_girth(g);
                j["negative_girth"] = girth ? Json(*girth) : Json(nullptr);
                res["balanced"] = j;
            }
            if (want_c3)
                res["c3_minus_free"] = is_c3_minus_free(g);
            if (!free_k.empty()) {
                Json list = Json::array();
                for (int kk : free_k) {
                    auto found = find_unbalanced_complete(g, kk);
                    Json j{{"k", kk}, {"free", !found.has_value()}};
                    if (found)
                        j["witness"] = *found;
                    list.push_back(j);
                }
                res["unbalanced_complete"] = list;
            }
            if (want_bounds) {
                const int order = g.order();
                double lambda = order > 0 ? index(g) : 0.0;
                double lambda_u = order > 0 ? index(underlying(g)) : 0.0;
                int omega = clique_number(g), omega_b = balanced_clique_number(g);
                double wilf = clique_index_bound(order, omega), wilf_b = clique_index_bound(order, omega_b);
                bool holds = lambda <= wilf + kBoundTolerance && lambda <= wilf_b + kBoundTolerance &&
                             lambda <= lambda_u + kBoundTolerance && lambda <= order - 1 + kBoundTolerance;
                ok = ok && holds;
                res["bounds"] = {{"index", real(lambda)},
                                 {"clique_number", omega},
                                 {"balanced_clique_number", omega_b},
                                 {"clique_bound", real(wilf)},
                                 {"balanced_clique_bound", real(wilf_b)},
                                 {"underlying_index", real(lambda_u)},
                                 {"order_bound", order - 1},
                                 {"all_hold", holds}};
            }
            if (radius_r) {
                auto c = check_radius_equals_index(g, *radius_r);
                ok = ok && c.conclusion_holds;
                res["radius_index"] = to_json(c);
            }
            document("check", res);
            return ok ? kOk : kAssertionFailed;
        }

        if (perturb->parsed()) {
            auto g = read_graph();
            auto kind = detail::parse_kind(kind_name);
            Perturbation p;
            p.kind = kind;
            if (uses_edge_list(kind)) {
                if (edges_arg.empty())
                    throw Error(ErrorKind::Parse, std::string(to_string(kind)) + " needs --edges");
                p.edges = detail::parse_pairs(edges_arg);
            } else {
                if (triple_arg.empty())
                    throw Error(ErrorKind::Parse, std::string(to_string(kind)) + " needs --triple");
                auto [i, j, kk] = detail::parse_triple(triple_arg);
                p.i = i, p.j = j, p.k = kk;
            }
            Json res;
            SignedGraph base = g;
            std::vector<double> x;
            if (want_switch) {
                auto s = nonneg_switch(g);
                base = s.graph;
                x = s.eigenvector;
                res["switch_set"] = std::vector<Vertex>(s.applied.members().begin(), s.applied.members().end());
            } else {
                x = leading_eigenvector(g);
            }
            auto d = equality_diagnosis(base, p, x);
            auto after = apply(base, p);
            res["perturbation"] = to_json(p);
            res["before"] = graph_summary(base);
            res["after"] = graph_summary(after);
            res["index_before"] = real(d.index_before);
            res["index_after"] = real(d.index_after);
            res["diagnosis"] = to_json(d);
            document("perturb", res);
            return kOk;
        }

        if (quotient->parsed()) {
            auto g = read_graph();
            Partition part(g.order(), detail::parse_blocks(partition_arg));
            auto q = quotient_matrix(adjacency_matrix(g), part);
            Json res{{"graph", graph_summary(g)},
                     {"quotient", to_json(q)},
                     {"eigenvalues", reals(quotient_eigenvalues(q, part))},
                     {"char_poly", to_json(char_poly(q))}};
            document("quotient", res);
            return kOk;
        }

        if (verify_cmd->parsed()) {
            VerifyOptions opts;
            opts.n_min = n_exact.value_or(n_min.value_or(1));
            opts.n_max = n_exact.value_or(n_max.value_or(5));
            opts.r_min = r_exact ? r_exact : r_min;
            opts.r_max = r_exact ? r_exact : r_max;
            opts.edges = mode == "edges" || mode == "all";
            opts.index = mode == "index" || mode == "all";
            opts.c3 = mode == "c3" || mode == "all";
            opts.lemmas = mode == "lemmas" || mode == "all";
            opts.jobs = jobs;
            opts.seed = seed;
            opts.random_trials = trials;
            opts.allow_large = allow_n7;
            if (!checkpoint.empty())
                opts.checkpoint_dir = checkpoint;
            if (opts.n_min < 1)
                throw Error(ErrorKind::ParameterRange, "--n-min must be at least 1");
            auto summary = verify(opts);
            document("verify", summary.document);
            return summary.passed ? kOk : kAssertionFailed;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace sgt::cli

#endif // SGT_TOOLS_CLI_HPP
