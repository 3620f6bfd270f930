#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "msp/io.hpp"
#include "msp/reduction.hpp"

using namespace msp;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name)
{
    return std::string(MSP_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("msp_cli_test_" + name)).string();
}

} // namespace

TEST(Cli, Score)
{
    const auto r = run({"score", "--kappa", "6", "1 2 3 4", "1 3 2 5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 2\n");
}

TEST(Cli, ScoreErrorsAreUsageErrors)
{
    EXPECT_EQ(run({"score", "--kappa", "2", "1 2 3", "1 3"}).code, 2);
    EXPECT_EQ(run({"score", "--kappa", "2", "1 2", "1 3"}).code, 2);
    EXPECT_EQ(run({"score", "1 2", "1 2"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"solve", fixture("pinned.msp"), "--frobnicate"}).code, 2);
    EXPECT_EQ(run({"solve", fixture("pinned.msp"), "--mode", "magic"}).code, 2);
    EXPECT_EQ(run({"solve", fixture("missing.msp")}).code, 2);
    EXPECT_EQ(run({"roundtrip"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SolveReducedTriangleWithOneVertexIsUnsat)
{
    // The fixture must be exactly the reduction of K3 with n = 1.
    const auto k3 = io::parse_graph(io::read_file(fixture("k3.gr")));
    ASSERT_EQ(io::read_file(fixture("k3n1.msp")), io::serialize_instance(reduce(k3, 1).instance));

    const auto r = run({"solve", fixture("k3n1.msp")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "UNSAT\n");
}

TEST(Cli, SolveModesAndAll)
{
    EXPECT_EQ(run({"solve", fixture("pinned.msp")}).out, "1 1\n");
    EXPECT_EQ(run({"solve", fixture("pinned.msp"), "--mode", "exhaustive"}).out, "1 1\n");
    EXPECT_EQ(run({"solve", fixture("pinned.msp"), "--all"}).out, "1 1\n");
    // 8^12 codes is far above a cap of 1000.
    EXPECT_EQ(run({"--cap", "1000", "solve", fixture("k3n1.msp"), "--mode", "exhaustive"}).code, 3);
    EXPECT_EQ(run({"solve", fixture("k3n1.msp"), "--mode", "exhaustive", "--cap", "1000"}).code, 3);
}

TEST(Cli, Verify)
{
    EXPECT_EQ(run({"verify", fixture("pinned.msp"), "1 1"}).out, "VALID\n");
    const auto bad = run({"verify", fixture("pinned.msp"), "1 2"});
    EXPECT_EQ(bad.out, "INVALID\n");
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(run({"verify", fixture("pinned.msp"), "1 2 1"}).code, 2);
}

TEST(Cli, Unique)
{
    const auto r = run({"unique", fixture("pinned.msp")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "UNIQUE\nfollowups 5\n");

    const auto unsat = run({"unique", fixture("k3n1.msp")});
    EXPECT_EQ(unsat.code, 1);
    EXPECT_EQ(unsat.out, "UNSAT\nfollowups 0\n");
}

TEST(Cli, ReduceSolveExtract)
{
    const std::string out_path = temp_path("k3n2.msp");
    const auto red = run({"reduce", fixture("k3.gr"), "--cover-size", "2", "-o", out_path});
    ASSERT_EQ(red.code, 0);
    EXPECT_EQ(red.out, "kappa 8\nlength 12\nguesses 6\n");

    const auto sol = run({"solve", out_path});
    ASSERT_EQ(sol.code, 0);
    std::string witness = sol.out.substr(0, sol.out.size() - 1);

    const auto ext = run({"extract", fixture("k3.gr"), "--cover-size", "2", out_path, witness});
    EXPECT_EQ(ext.code, 0);
    const auto cover = io::parse_code(ext.out);
    EXPECT_EQ(cover.length(), 2u);

    const auto bad = run({"extract", fixture("k3.gr"), "--cover-size", "2", out_path,
                          "7 7 7 7 7 7 7 7 7 7 7 7"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.out, "INVALID\n");

    // Instance file that is not this graph's reduction.
    EXPECT_EQ(run({"extract", fixture("k3.gr"), "--cover-size", "1", out_path, witness}).code, 2);
    std::remove(out_path.c_str());
}

TEST(Cli, ReduceToStdout)
{
    const auto r = run({"reduce", fixture("single_edge.gr"), "--cover-size", "1", "--compact"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 8), "msp 5 6\n");
    EXPECT_NE(r.err.find("length 6"), std::string::npos);
    EXPECT_EQ(run({"reduce", fixture("k3.gr"), "--cover-size", "4"}).code, 2);
}

TEST(Cli, RoundtripOnEveryFixtureGraph)
{
    for (const char* name : {"k3.gr", "p3.gr", "single_edge.gr", "c5.gr", "petersen.gr"}) {
        const auto r = run({"roundtrip", fixture(name)});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
        EXPECT_NE(r.out.find("disagreements 0\n"), std::string::npos) << name;
    }
}

TEST(Cli, RoundtripRandomGraphs)
{
    const auto r = run({"roundtrip", "--random", "20", "--seed", "3", "--max-vertices", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("disagreements 0\n"), std::string::npos);
}
