#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "braidrep/representations.hpp"
#include "braidrep/serialization.hpp"
#include "braidrep_cli/cli.hpp"

using namespace braidrep;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, EvalArtin)
{
    auto r = run({"eval", "--rep", "artin", "--n", "3", "--word", "s1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "x1 -> x1 x2 x1^-1\nx2 -> x1\nx3 -> x3\n")) << r.out;
}

TEST(Cli, EvalIotaAndIdentity)
{
    auto r = run({"eval", "--rep", "iota-d", "--n", "4", "--word", "d1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "x2 -> x2 x1^-1\nx3 -> x3 x1^-1\nx4 -> x1 x4 x1^-1")) << r.out;
    auto id = run({"eval", "--rep", "artin", "--n", "3", "--word", ""});
    EXPECT_EQ(id.code, 0);
    EXPECT_TRUE(contains(id.out, "x1 -> x1\nx2 -> x2\nx3 -> x3\n")) << id.out;
}

TEST(Cli, EvalJsonRoundTrips)
{
    auto r = run({"eval", "--rep", "rho-u", "--n", "4", "--g", "1", "--p", "2", "--word", "s1 x1", "--format",
                  "json"});
    ASSERT_EQ(r.code, 0);
    auto f = endo_from_json(r.out);
    EXPECT_EQ(f, evaluate(rho_u(4, 1, 2), parse_word("s1 x1", surface_alphabet(3, 1, 2))));
}

TEST(Cli, EvalErrorsExitTwo)
{
    EXPECT_EQ(run({"eval", "--rep", "artin", "--n", "3", "--word", "y1"}).code, 2);
    EXPECT_EQ(run({"eval", "--rep", "artin", "--n", "3", "--word", "s3"}).code, 2);
    EXPECT_EQ(run({"eval", "--rep", "rho-u", "--n", "2", "--word", ""}).code, 2);
    EXPECT_EQ(run({"eval", "--rep", "nope", "--n", "3", "--word", ""}).code, 2);
    EXPECT_EQ(run({"eval", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "--n", "three", "--word", ""}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify)
{
    auto r = run({"verify", "--rep", "rho-u", "--n", "4", "--g", "1", "--p", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "result: PASS"));
    EXPECT_EQ(run({"verify", "--rep", "rho-w", "--n", "3", "--g", "2", "--p", "2"}).code, 0);
    auto v = run({"verify", "--rep", "rho-v", "--n", "4", "--g", "1", "--format", "json"});
    EXPECT_EQ(v.code, 0);
    auto rep = report_from_json(v.out);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.relators.back().schema, "RT.1");
    EXPECT_EQ(run({"verify", "--rep", "rho-w", "--n", "3", "--g", "0"}).code, 2);
}

TEST(Cli, VerifyMutatedFails)
{
    int failed = 0;
    for (int seed = 1; seed <= 10; ++seed) {
        auto r = run({"verify", "--rep", "artin", "--n", "4", "--mutate-seed", std::to_string(seed)});
        EXPECT_NE(r.code, 2);
        failed += r.code == 1 ? 1 : 0;
    }
    EXPECT_GE(failed, 9);
    auto j = run({"verify", "--rep", "rho-u", "--n", "4", "--g", "1", "--p", "2", "--mutate-seed", "3",
                  "--format", "json"});
    EXPECT_EQ(j.code, 1);
    EXPECT_FALSE(report_from_json(j.out).pass);
}

TEST(Cli, Fixed)
{
    auto r = run({"fixed", "--rep", "rho-u", "--n", "4", "--g", "1", "--p", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "A = t3^-1 t2^-1 t1^-1 xi1 w1 w2^-1 w1^-1 w2"));
    auto j = nlohmann::json::parse(run({"fixed", "--rep", "rho-w", "--n", "3", "--g", "1", "--p", "2",
                                        "--format", "json"})
                                       .out);
    EXPECT_EQ(j["product"], "t2^-1 t1^-1 xi1 w1^2");
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(run({"fixed", "--rep", "rho-d", "--n", "4"}).code, 2);
}

TEST(Cli, ArtinCheckFile)
{
    auto path = testing::TempDir() + "braidrep_f.json";
    {
        std::ofstream f(path);
        f << endo_to_json(evaluate(artin_rep(3), parse_word("s1 s2^-1", braid_alphabet(3))));
    }
    auto r = run({"artin-check", "--n", "3", "--endo-file", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "accepted"));
    EXPECT_TRUE(contains(r.out, "permutation: "));
    {
        std::ofstream f(path);
        f << R"({"alphabet":[{"family":"x","count":3}],"images":{"x1":"x2","x2":"x1"}})";
    }
    auto bad = run({"artin-check", "--n", "3", "--endo-file", path, "--format", "json"});
    EXPECT_EQ(bad.code, 1);
    auto j = nlohmann::json::parse(bad.out);
    EXPECT_FALSE(j["accepted"].get<bool>());
    EXPECT_FALSE(j["reason"].get<std::string>().empty());
    EXPECT_EQ(run({"artin-check", "--n", "4", "--endo-file", path}).code, 2);
    EXPECT_EQ(run({"artin-check", "--n", "3", "--endo-file", "/nonexistent/f.json"}).code, 2);
    std::remove(path.c_str());
}

TEST(Cli, ArtinCheckWordAndSamples)
{
    auto r = run({"artin-check", "--n", "3", "--word", "s1", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["permutation"], (std::vector<int>{2, 1, 3}));
    EXPECT_EQ(j["conjugators"][0], "x1^-1");
    auto s = run({"artin-check", "--n", "4", "--samples", "50", "--seed", "9"});
    EXPECT_EQ(s.code, 0) << s.out;
    EXPECT_EQ(run({"artin-check", "--n", "3"}).code, 2);
}

TEST(Cli, Rewrite)
{
    auto r = run({"rewrite", "--n", "4", "--g", "0", "--p", "1", "--word", "s3 s3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "rewritten: [t3]")) << r.out;
    EXPECT_TRUE(contains(r.out, "s[m3,s3]"));
    EXPECT_EQ(run({"rewrite", "--n", "4", "--word", "s3"}).code, 2);
    auto table = run({"rewrite", "--n", "3", "--g", "1", "--p", "2"});
    EXPECT_EQ(table.code, 0);
    EXPECT_TRUE(contains(table.out, "s[m1,x1]  w1  s2 s1 x1 s1^-1 s2^-1")) << table.out;
    auto j = nlohmann::json::parse(
        run({"rewrite", "--n", "3", "--surface", "nonorientable", "--g", "1", "--p", "1", "--word",
             "s2 s1 a1 s1^-1 s2^-1", "--format", "json"})
            .out);
    EXPECT_EQ(j["rewritten"], "w1");
    EXPECT_EQ(run({"rewrite", "--n", "4", "--g", "1", "--p", "2", "--samples", "20"}).code, 0);
    EXPECT_EQ(run({"rewrite", "--n", "3", "--surface", "nonorientable", "--g", "1", "--samples", "10"}).code, 0);
    EXPECT_EQ(run({"rewrite", "--n", "3", "--surface", "closed", "--g", "1", "--samples", "10"}).code, 2);
    EXPECT_EQ(run({"rewrite", "--n", "3", "--surface", "mobius"}).code, 2);
}

TEST(Cli, ListPresentations)
{
    auto r = run({"list-presentations"});
    EXPECT_EQ(r.code, 0);
    for (const char* name : {"braid", "surface", "nonorientable", "closed", "dn-orientable", "dn-nonorientable",
                             "dn-closed", "artin-tits-d"})
        EXPECT_TRUE(contains(r.out, name));
    auto s = run({"list-presentations", "--show", "braid", "--n", "3"});
    EXPECT_TRUE(contains(s.out, "s1 s2 s1 = s2 s1 s2")) << s.out;
    auto j = nlohmann::json::parse(run({"list-presentations", "--show", "closed", "--n", "3", "--g", "1",
                                        "--format", "json"})
                                       .out);
    EXPECT_EQ(j["relators"].size(), 7u);
    EXPECT_EQ(run({"list-presentations", "--show", "torus"}).code, 2);
}
