#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace sgt;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

} // namespace

TEST(Cli, GenGammaEmitsSg1) {
    auto r = run({"gen", "gamma", "--n", "6", "--r", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_sg1(r.out), gamma_construction(6, 3));
}

TEST(Cli, GenFamiliesRoundTrip) {
    EXPECT_EQ(parse_sg1(run({"gen", "turan", "--n", "7", "--r", "3"}).out), turan_graph(7, 3).graph);
    EXPECT_EQ(parse_sg1(run({"gen", "complete", "--n", "4", "--sign", "-"}).out), complete(4, -1));
    EXPECT_EQ(parse_sg1(run({"gen", "unbalanced-complete", "--k", "5"}).out), unbalanced_complete(5));
}

TEST(Cli, GenPipesIntoCheck) {
    auto gen = run({"gen", "complete", "--n", "5"});
    auto check = run({"check", "--balanced"}, gen.out);
    ASSERT_EQ(check.code, 0) << check.err;
    auto j = json_of(check);
    EXPECT_TRUE(j["results"]["balanced"]["balanced"].get<bool>());

    auto gamma = run({"gen", "gamma", "--n", "7", "--r", "4"});
    auto c = json_of(run({"check", "--in", "-", "--balanced", "--free", "5", "--free", "4", "--c3"}, gamma.out));
    EXPECT_FALSE(c["results"]["balanced"]["balanced"].get<bool>());
    EXPECT_EQ(c["results"]["balanced"]["negative_girth"], 3);
    EXPECT_TRUE(c["results"]["unbalanced_complete"][0]["free"].get<bool>());
    EXPECT_FALSE(c["results"]["unbalanced_complete"][1]["free"].get<bool>());
    EXPECT_EQ(c["results"]["unbalanced_complete"][1]["witness"], (std::vector<int>{0, 1, 2, 3}));
    EXPECT_FALSE(c["results"]["c3_minus_free"].get<bool>());
}

TEST(Cli, SpectrumWithCharPoly) {
    auto r = run({"spectrum", "--charpoly"}, "3 3\n0 1 +\n0 2 +\n1 2 -\n");
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
    EXPECT_EQ(j["command"]["name"], "spectrum");
    EXPECT_EQ(j["results"]["char_poly"]["coefficients"], (std::vector<long long>{2, -3, 0, 1}));
    EXPECT_DOUBLE_EQ(j["results"]["spectrum"]["index"].get<double>(), 1.0);
    EXPECT_DOUBLE_EQ(j["results"]["spectrum"]["spectral_radius"].get<double>(), 2.0);
    EXPECT_FALSE(j.contains("timing"));
}

TEST(Cli, BoundsAndRadiusIndex) {
    auto g = run({"gen", "gamma", "--n", "10", "--r", "4"}).out;
    auto r = run({"check", "--bounds", "--radius-index", "4"}, g);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    EXPECT_TRUE(j["results"]["bounds"]["all_hold"].get<bool>());
    EXPECT_TRUE(j["results"]["radius_index"]["hypotheses_hold"].get<bool>());
    EXPECT_TRUE(j["results"]["radius_index"]["conclusion_holds"].get<bool>());
}

TEST(Cli, Perturb) {
    auto g = run({"gen", "gamma", "--n", "5", "--r", "3"}).out;
    auto r = run({"perturb", "--kind", "flip-negative", "--edges", "0-1", "--nonneg-switch"}, g);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    EXPECT_GT(j["results"]["index_after"].get<double>(), j["results"]["index_before"].get<double>());
    EXPECT_EQ(j["results"]["diagnosis"]["kind"], "flip-negative");

    auto t = run({"perturb", "--kind", "rotate-positive", "--triple", "0,2,4"}, run({"gen", "gamma", "--n", "6", "--r", "4"}).out);
    EXPECT_EQ(t.code, 0) << t.err;
}

TEST(Cli, Quotient) {
    auto g = run({"gen", "gamma", "--n", "10", "--r", "4"}).out;
    auto r = run({"quotient", "--partition", "0|1|2,3|4,5,6,7,8,9"}, g);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    EXPECT_EQ(j["results"]["quotient"], to_json(gamma_quotient(10, 4)));
    EXPECT_EQ(j["results"]["char_poly"]["text"], "x^4 - 6x^3 - 18x^2 + 12x + 23");
}

TEST(Cli, VerifyIndexSixThree) {
    auto r = run({"verify", "--mode", "index", "--n", "6", "--r", "3", "--jobs", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json_of(r);
    ASSERT_EQ(j["results"]["index"].size(), 1u);
    auto rep = j["results"]["index"][0];
    EXPECT_DOUBLE_EQ(rep["best"].get<double>(), 4.0);
    EXPECT_EQ(rep["maximizer_classes"], 1);
    EXPECT_TRUE(j["results"]["passed"].get<bool>());
}

TEST(Cli, VerifyWritesOutputFile) {
    auto path = std::filesystem::temp_directory_path() / "sgt_cli_verify_test.json";
    std::filesystem::remove(path);
    auto r = run({"verify", "--mode", "edges", "--n", "5", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    auto j = Json::parse(f);
    EXPECT_EQ(j["results"]["edges"].size(), 2u);
    std::filesystem::remove(path);
}

TEST(Cli, OutputIsDeterministic) {
    std::vector<std::string> args{"verify", "--mode", "all", "--n-max", "4", "--seed", "3", "--trials", "50"};
    auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto g = run({"gen", "gamma", "--n", "8", "--r", "5"}).out;
    EXPECT_EQ(run({"spectrum", "--charpoly"}, g).out, run({"spectrum", "--charpoly"}, g).out);
}

TEST(Cli, TimingIsOptIn) {
    auto r = run({"spectrum", "--timing"}, "2 1\n0 1 -\n");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(json_of(r).contains("timing"));
}

TEST(Cli, UsageErrorsExitTwoWithOneLine) {
    auto one_line = [](const Result& r) {
        EXPECT_EQ(r.code, 2);
        EXPECT_FALSE(r.err.empty());
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    };
    one_line(run({"frobnicate"}));
    one_line(run({}));
    one_line(run({"gen", "gamma", "--n", "5", "--r", "9"}));
    one_line(run({"gen", "octahedron"}));
    one_line(run({"spectrum"}, "3 2\n0 1 +\n"));
    one_line(run({"spectrum", "--in", "/nonexistent/graph.sg1"}));
    one_line(run({"check", "--free", "1"}, "3 0\n"));
    one_line(run({"quotient", "--partition", "0|1,2"}, "3 2\n0 1 +\n1 2 +\n"));
    one_line(run({"perturb", "--kind", "add-positive", "--edges", "0-1"}, "3 1\n0 1 +\n"));
    one_line(run({"perturb", "--kind", "teleport", "--edges", "0-1"}, "3 0\n"));
    one_line(run({"verify", "--n", "9"}));
    one_line(run({"verify", "--mode", "nothing"}));
}

TEST(Cli, HelpExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
