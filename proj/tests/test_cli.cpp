#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "pss/cli.hpp"
#include "pss/permutation.hpp"

using namespace pss;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "pss");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(Cli, Sort) {
    EXPECT_EQ(run({"sort", "--map", "s12", "2,4,1,3"}).out, "2,3,1,4\n");
    EXPECT_EQ(run({"sort", "--map", "m12", "--times", "2", "2,4,6,1,3,5"}).out, "2,1,3,4,5,6\n");
    EXPECT_EQ(run({"sort", "--map", "west", "35142"}).out, "3,1,2,4,5\n");
    EXPECT_EQ(run({"sort", "--map", "s21", "--times", "0", "2,1"}).out, "2,1\n");
}

TEST(Cli, SortTrace) {
    const auto r = run({"sort", "--map", "s12", "--trace", "3,5,1,4,2"});
    EXPECT_EQ(r.code, kExitOk);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 11u);
    EXPECT_EQ(l.front(), "0 push 3");
    EXPECT_EQ(l[1], "1 pop 3");
    EXPECT_EQ(l[9], "9 pop 5");
    EXPECT_EQ(l.back(), "3,2,4,1,5");
}

TEST(Cli, Runs) {
    EXPECT_EQ(run({"runs", "--kind", "peak", "2,4,3,1,5"}).out, "[2][4,3,1][5]\n");
    EXPECT_EQ(run({"runs", "--kind", "valley", "2,4,3,1,5"}).out, "[2,4,3][1,5]\n");
}

TEST(Cli, Image) {
    const auto r = run({"image", "--map", "m12", "--n", "5", "--power", "auto"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1,2,3,4,5\n1,3,2,4,5\n2,1,3,4,5\n2,3,1,4,5\n3,1,2,4,5\n");
    EXPECT_EQ(run({"image", "--map", "s12", "--n", "4", "--power", "auto"}).out,
              "1,2,3,4\n2,1,3,4\n");
    EXPECT_EQ(run({"image", "--map", "west", "--n", "4", "--power", "auto"}).code, kExitUsage);
}

TEST(Cli, FixedPoints) {
    EXPECT_EQ(run({"fixed-points", "--machine", "m21", "--n", "3", "--list"}).out,
              "2: 1,2,3 | 2,1,3\n");
    EXPECT_EQ(run({"fixed-points", "--machine", "m21", "--n", "7"}).out, "65\n");
}

TEST(Cli, Orbit) {
    EXPECT_EQ(run({"orbit", "--map", "west", "2,3,4,1"}).out,
              "tail_length=3 cycle_length=1 reaches_identity_at=3 periodic=false\n");
    const auto j = nlohmann::json::parse(
        run({"orbit", "--map", "s21", "--format", "json", "2,1"}).out);
    EXPECT_EQ(j["tail_length"], 0);
    EXPECT_EQ(j["cycle_length"], 1);
    EXPECT_TRUE(j["reaches_identity_at"].is_null());
}

TEST(Cli, Witness) {
    EXPECT_EQ(run({"witness", "--family", "pi312", "--n", "5", "--check"}).out,
              "3,5,1,2,4 → 3,1,2,4,5 PASS\n");
    EXPECT_EQ(run({"witness", "--family", "even", "--n", "6"}).out, "2,4,6,1,3,5\n");
    EXPECT_EQ(run({"witness", "--family", "even", "--n", "7"}).code, kExitUsage);
}

TEST(Cli, Count) {
    EXPECT_EQ(run({"count", "--claim", "T3_4", "--n", "5", "--t", "2"}).out, "54\n");
    EXPECT_EQ(run({"count", "--claim", "T4_4", "--n", "9"}).out, "654\n");
    EXPECT_EQ(run({"count", "--claim", "T4_2", "--n", "70"}).out,
              "590295810358705651712\n");
    EXPECT_EQ(run({"count", "--claim", "T3_4", "--n", "5"}).code, kExitUsage);
}

TEST(Cli, VerifyJson) {
    const auto r = run({"verify", "--claim", "T4_2", "--n-max", "6", "--format", "json"});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["claim"], "T4_2");
    EXPECT_EQ(j["params"]["n_min"], 1);
    EXPECT_EQ(j["params"]["n_max"], 6);
    EXPECT_TRUE(j["overall_pass"].get<bool>());
    ASSERT_EQ(j["rows"].size(), 6u);
    EXPECT_EQ(j["rows"][5]["expected"], "32");
    EXPECT_EQ(j["rows"][5]["observed"], "32");

    const auto all = nlohmann::json::parse(
        run({"verify", "--claim", "all", "--n-max", "5", "--format", "json"}).out);
    EXPECT_EQ(all["reports"].size(), 15u);
    EXPECT_TRUE(all["overall_pass"].get<bool>());
}

TEST(Cli, VerifyCsvAndTable) {
    const auto csv = run({"verify", "--claim", "T5_2", "--n-max", "5", "--format", "csv"});
    const auto l = lines(csv.out);
    ASSERT_FALSE(l.empty());
    EXPECT_EQ(l.front(), "claim,n,param,expected,observed,pass");
    EXPECT_EQ(l.size(), 5u);  // header plus n = 2..5

    const auto table = run({"verify", "--claim", "T3_6", "--n-max", "4"});
    EXPECT_EQ(table.code, kExitOk);
    EXPECT_NE(table.out.find("T3_6: PASS"), std::string::npos);
    EXPECT_NE(table.err.find("took"), std::string::npos);
}

TEST(Cli, JobsDoNotChangeOutput) {
    for (const char* fmt : {"json", "csv"}) {
        const auto one = run({"verify", "--claim", "all", "--n-max", "7", "--jobs", "1",
                              "--format", fmt});
        const auto four = run({"verify", "--claim", "all", "--n-max", "7", "--jobs", "4",
                               "--format", fmt});
        EXPECT_EQ(one.code, kExitOk);
        EXPECT_EQ(one.out, four.out);
    }
    EXPECT_EQ(run({"image", "--map", "m21", "--n", "7", "--power", "2", "--jobs", "1"}).out,
              run({"image", "--map", "m21", "--n", "7", "--power", "2", "--jobs", "3"}).out);
}

TEST(Cli, PrintedPermutationsParseBack) {
    const auto r = run({"image", "--map", "s21", "--n", "5", "--power", "1"});
    for (const auto& line : lines(r.out)) {
        EXPECT_EQ(format(parse(line)), line);
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"sort", "--map", "s13", "1,2"}).code, kExitUsage);
    EXPECT_EQ(run({"sort", "--map", "s12", "1,1"}).code, kExitUsage);
    EXPECT_EQ(run({"sort", "--map", "s12", "--trace", "--times", "2", "2,1"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--claim", "T9_9"}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"fixed-points", "--machine", "m21", "--n", "3", "--format", "csv"}).code,
              kExitUsage);

    const auto guarded = run({"image", "--map", "s12", "--n", "13", "--power", "1"});
    EXPECT_EQ(guarded.code, kExitUsage);
    EXPECT_NE(guarded.err.find("--force"), std::string::npos);
    EXPECT_EQ(run({"verify", "--claim", "T4_2", "--n-max", "13"}).code, kExitUsage);
}

TEST(Cli, Help) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}
