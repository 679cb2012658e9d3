#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "regdec/io.hpp"

using regdec::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = regdec::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateA3) {
    const auto r = run({"enumerate", "--family", "A", "--rank", "3", "--min-blocks", "3", "--modulo", "renumber,sign"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["class_count"], 7);
    EXPECT_EQ(j["modulo"], "renumber,sign");
    EXPECT_EQ(j["family"], "A");
}

TEST(Cli, EnumerateB3IsEmptyAndModuloDefaultsToNone) {
    const auto r = run({"enumerate", "--family", "B", "--rank", "3", "--min-blocks", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["class_count"], 0);
    EXPECT_EQ(r.json()["modulo"], "none");
}

TEST(Cli, EnumerateCsv) {
    const auto r = run({"--format", "csv", "enumerate", "--family", "A", "--rank", "2", "--min-blocks", "3", "--modulo",
                        "renumber,sign,weyl"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    EXPECT_EQ(header, "family,rank,min_blocks,modulo,class_count,node_count,wall_time");
    EXPECT_EQ(row.rfind("A,2,3,\"renumber,sign,weyl\",1,", 0), 0u) << row;
}

TEST(Cli, EnumerateIsDeterministicApartFromWallTime) {
    auto strip = [](Json j) {
        j.erase("wall_time");
        return j;
    };
    const std::vector<std::string> args{"enumerate", "--family", "A", "--rank", "3", "--min-blocks", "3",
                                        "--modulo", "renumber", "--list"};
    EXPECT_EQ(strip(run(args).json()), strip(run(args).json()));
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "2"});
    auto a = strip(run(args).json());
    auto b = strip(run(parallel).json());
    a.erase("node_count");
    b.erase("node_count");
    EXPECT_EQ(a, b);
}

TEST(Cli, BudgetExceededExitsWithThree) {
    const auto r = run({"enumerate", "--family", "A", "--rank", "4", "--node-budget", "50"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.json()["error"], "budget_exceeded");
    EXPECT_EQ(r.json()["node_budget"], 50);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "A"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "A", "--rank", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "C", "--rank", "2"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "A", "--rank", "3", "--modulo", "colour"}).code, 2);
    EXPECT_EQ(run({"construct", "--family-k1k", "--family-kk", "--n", "2", "--lambda", "1,1"}).code, 2);
    EXPECT_EQ(run({"construct", "--family-kk", "--n", "2", "--lambda", "1,1", "--x", "0,1"}).code, 2);
    EXPECT_EQ(run({"construct", "--family-k1k", "--n", "3", "--lambda", "2,2"}).code, 2);
    EXPECT_EQ(run({"--format", "csv", "build", "--family", "A", "--rank", "2"}).code, 2);
    EXPECT_EQ(run({"verify-decomposition", "-"}, "{not json").code, 2);
    EXPECT_EQ(run({"verify-decomposition", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Cli, Build) {
    const auto r = run({"build", "--family", "G", "--rank", "2", "--list"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["size"], 12);
    EXPECT_EQ(r.json()["roots"].size(), 12u);
}

TEST(Cli, ConstructVerifyPipes) {
    const std::vector<std::vector<std::string>> constructions{
        {"construct", "--family-k1k", "--n", "2", "--lambda", "1,1"},
        {"construct", "--family-k1k", "--beta-form", "--n", "3", "--lambda", "2,1"},
        {"construct", "--family-kk", "--n", "2", "--lambda", "1,1"},
        {"construct", "--family-kk", "--n", "2", "--lambda", "1,1", "--x", "1/2,0"},
        {"construct", "--family-kk", "--n", "4", "--lambda", "2,2", "--x", "0,0,1,0"},
        {"construct", "--family-kk", "--n", "3", "--lambda", "1,1,1", "--x", "-3/7,0,0"},
    };
    for (const auto& args : constructions) {
        const auto c = run(args);
        ASSERT_EQ(c.code, 0) << c.err;
        const auto v = run({"verify-decomposition", "-"}, c.out);
        EXPECT_EQ(v.code, 0) << c.out << v.out;
        EXPECT_EQ(v.json()["valid"], true);
    }
    const auto v = run({"verify-decomposition", "-"}, run({"construct", "--family-k1k", "--n", "2", "--lambda", "1,1"}).out);
    EXPECT_EQ(v.json()["type"], Json::parse("[3,2]"));
}

TEST(Cli, ExtendPipes) {
    const auto row = run({"construct", "--finest", "row", "--n", "3"});
    ASSERT_EQ(row.code, 0) << row.err;
    for (const char* ref : {"first", "last"}) {
        const auto ext = run({"construct", "--extend", "-", "--reference", ref}, row.out);
        ASSERT_EQ(ext.code, 0) << ext.err;
        EXPECT_EQ(run({"verify-decomposition", "-"}, ext.out).code, 0);
    }
    const auto lam = run({"construct", "--int-partition", "2,1,1", "--n", "3"});
    ASSERT_EQ(lam.code, 0) << lam.err;
    const auto ext = run({"construct", "--extend", "-"}, lam.out);
    EXPECT_EQ(run({"verify-decomposition", "-"}, ext.out).code, 0);

    const std::string two = R"({"family":"B","rank":2,"blocks":[[[1,0],[0,1],[1,1],[1,2]],[[-1,0],[0,-1],[-1,-1],[-1,-2]]]})";
    const auto b2 = run({"construct", "--extend", "-"}, two);
    ASSERT_EQ(b2.code, 0) << b2.err;
    const auto vb = run({"verify-decomposition", "-"}, b2.out);
    EXPECT_EQ(vb.code, 0) << vb.out;
}

TEST(Cli, VerifyDecompositionReportsWitness) {
    const std::string input = R"({"family":"A","rank":2,
        "blocks":[[[1,0],[1,1]],[[-1,0],[0,1]],[[-1,-1],[0,-1]]],
        "cartan":[[["1","0"],["0","1"]],[],[]]})";
    const auto r = run({"verify-decomposition", "-"}, input);
    EXPECT_EQ(r.code, 1);
    const auto j = r.json();
    EXPECT_EQ(j["valid"], false);
    EXPECT_EQ(j["witness"]["pair"], Json::parse("[2,3]"));
    EXPECT_EQ(j["witness"]["bracket_of"], Json::parse(R"(["E_{2,3}","E_{3,2}"])"));
    EXPECT_EQ(j["witness"]["escapes_span"], true);
}

TEST(Cli, VerifyPartition) {
    const auto ok = run({"verify-partition", "-"}, run({"construct", "--finest", "column", "--n", "2"}).out);
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.json()["regular"], true);
    const std::string bad = R"({"family":"A","rank":2,"blocks":[[[1,0]],[[0,1]],[[1,1],[-1,0],[0,-1],[-1,-1]]]})";
    const auto r = run({"verify-partition", "-"}, bad);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["violation"]["sum"], Json::parse("[1,1]"));
    const std::string partial = R"({"family":"A","rank":2,"blocks":[[[1,0]]]})";
    EXPECT_EQ(run({"verify-partition", "-"}, partial).code, 1);
}

TEST(Cli, GraphReconstructRoundTrip) {
    const std::string example = R"({"family":"A","rank":3,"blocks":[
        [[0,-1,0],[0,-1,-1],[1,0,0]],
        [[0,0,-1],[0,1,0],[1,1,0]],
        [[0,0,1],[0,1,1],[1,1,1],[-1,-1,-1],[-1,0,0],[-1,-1,0]]]})";
    const auto g = run({"graph", "-"}, example);
    ASSERT_EQ(g.code, 0) << g.err;
    const auto gj = g.json();
    EXPECT_EQ(gj["graph"], Json::parse(R"({"m":3,"loops":[[3,3]],"edges":[[1,3,1],[2,3,2]]})"));
    EXPECT_EQ(gj["properties"]["all_pass"], true);
    const auto rec = run({"reconstruct", "-", "--family", "A", "--rank", "3"}, gj["graph"].dump());
    ASSERT_EQ(rec.code, 0) << rec.err;
    auto expected = Json::parse(example);
    for (auto& b : expected["blocks"]) std::sort(b.begin(), b.end());
    EXPECT_EQ(rec.json()["blocks"], expected["blocks"]);
}

TEST(Cli, Canonicalize) {
    const auto row = run({"construct", "--finest", "row", "--n", "2"}).out;
    const auto col = run({"construct", "--finest", "column", "--n", "2"}).out;
    const auto a = run({"canonicalize", "-", "--modulo", "renumber,sign"}, row);
    const auto b = run({"canonicalize", "-", "--modulo", "renumber,sign"}, col);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.json(), b.json());
    EXPECT_EQ(a.json()["modulo"], "renumber,sign");
}

TEST(Cli, Count) {
    const auto r = run({"count", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["renumber,sign"], 36);
    EXPECT_EQ(r.json()["renumber,sign,weyl"], 4);
}
