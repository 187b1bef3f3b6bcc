#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result runCli(std::vector<std::string> args)
{
    args.insert(args.begin(), "cyclocond");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cyclocond::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST(Cli, CoeffsFour)
{
    const Result r = runCli({"coeffs", "4"});
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    EXPECT_EQ(j["formatVersion"], 1);
    EXPECT_EQ(j["coeffs"], nlohmann::json({"1", "0", "1"}));
    EXPECT_EQ(j["m"], 2);
}

TEST(Cli, CoeffsOneAndOneHundredFive)
{
    EXPECT_EQ(parse(runCli({"coeffs", "1"}))["coeffs"], nlohmann::json({"-1", "1"}));
    const auto j = parse(runCli({"coeffs", "105"}));
    EXPECT_EQ(j["coeffs"].size(), 49u);
    EXPECT_EQ(j["A"], 2);
}

TEST(Cli, CoeffsBadArgument)
{
    EXPECT_EQ(runCli({"coeffs", "0"}).code, 2);
    EXPECT_EQ(runCli({"coeffs", "abc"}).code, 2);
    EXPECT_EQ(runCli({}).code, 2);
    EXPECT_EQ(runCli({"frobnicate"}).code, 2);
}

TEST(Cli, CondEight)
{
    const auto j = parse(runCli({"cond", "8"}));
    EXPECT_EQ(j["formatVersion"], 1);
    EXPECT_DOUBLE_EQ(j["cond"].get<double>(), 4.0);
    EXPECT_EQ(j["method"], "closed-form");
    EXPECT_EQ(j["bounds"]["tightestBoundId"], "THM_3_10");
}

TEST(Cli, CondKeyOrderIsStable)
{
    const auto r = runCli({"cond", "3", "--bits", "160"});
    ASSERT_EQ(r.code, 0);
    EXPECT_LT(r.out.find("\"formatVersion\""), r.out.find("\"n\""));
    const auto j = parse(r);
    EXPECT_NEAR(j["cond"].get<double>(), 2.3094010767585034, 1e-12);
    EXPECT_EQ(j["bits"], 160);
}

TEST(Cli, CondOracleAgreement)
{
    const auto j = parse(runCli({"cond", "200", "--oracle"}));
    EXPECT_LE(j["oracle"]["agreement"].get<double>(), 1e-8);
    EXPECT_EQ(j["oracle"]["method"], "lu-oracle");
}

TEST(Cli, CondErrors)
{
    EXPECT_EQ(runCli({"cond", "0"}).code, 2);
    EXPECT_EQ(runCli({"cond", "5001"}).code, 2);
    EXPECT_EQ(runCli({"cond", "12", "--bits", "20"}).code, 2);
    ::setenv("CYCLOCOND_MAX_BITS", "128", 1);
    const Result r = runCli({"cond", "7"});
    ::unsetenv("CYCLOCOND_MAX_BITS");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("ceiling"), std::string::npos);
}

TEST(Cli, SweepCsv)
{
    const Result r = runCli({"sweep", "--from", "2", "--to", "50", "--format", "csv", "--jobs", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 50u);
    EXPECT_EQ(ls[0], "n,m,omega,rad,A,condLog10,cond,tightestBoundId,tightestBoundLog10,marginLog10,bits,relErr");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::vector<std::string> f;
        std::istringstream in(ls[i]);
        for (std::string cell; std::getline(in, cell, ',');)
            f.push_back(cell);
        ASSERT_EQ(f.size(), 12u) << ls[i];
        EXPECT_EQ(std::stoul(f[0]), i + 1);
        EXPECT_GE(std::stod(f[9]), 0.0) << ls[i];
    }
    EXPECT_EQ(ls[7].substr(0, 2), "8,");
    EXPECT_NE(ls[7].find(",4,THM_3_10,"), std::string::npos) << ls[7];
}

TEST(Cli, SweepJsonAndDeterminism)
{
    const Result a = runCli({"sweep", "--from", "90", "--to", "110", "--format", "json", "--jobs", "1"});
    const Result b = runCli({"sweep", "--from", "90", "--to", "110", "--format", "json", "--jobs", "3"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = parse(a);
    EXPECT_EQ(j["formatVersion"], 1);
    EXPECT_EQ(j["rows"].size(), 21u);
    EXPECT_EQ(j["rows"][15]["n"], 105);
    EXPECT_EQ(j["rows"][15]["A"], 2);
    EXPECT_EQ(j["rows"][15]["tightestBoundId"], "THREE_PRIME_4_6");
}

TEST(Cli, SweepBoundsOnly)
{
    const Result r = runCli({"sweep", "--bounds-only", "--from", "99990", "--to", "100000"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 12u);
    EXPECT_NE(ls.back().find("100000,40000,2,10,1,,,"), std::string::npos) << ls.back();
}

TEST(Cli, SweepRanges)
{
    EXPECT_EQ(runCli({"sweep", "--from", "1", "--to", "5"}).code, 2);
    EXPECT_EQ(runCli({"sweep", "--from", "9", "--to", "5"}).code, 2);
    EXPECT_EQ(runCli({"sweep", "--to", "1501"}).code, 2);
    EXPECT_EQ(runCli({"sweep", "--to", "5", "--format", "xml"}).code, 2);
}

TEST(Cli, SweepToFileAndUnwritablePath)
{
    const auto path = std::filesystem::temp_directory_path() / "cyclocond_sweep_test.csv";
    ASSERT_EQ(runCli({"sweep", "--to", "10", "--out", path.string()}).code, 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.substr(0, 6), "n,m,om");
    std::filesystem::remove(path);
    EXPECT_EQ(runCli({"sweep", "--to", "10", "--out", "/nonexistent-dir/x.csv"}).code, 4);
}

TEST(Cli, Subfield)
{
    const auto j11 = parse(runCli({"subfield", "11"}));
    EXPECT_EQ(j11["threshold"], 16.0);
    EXPECT_EQ(j11["exceedsThreshold"], true);
    EXPECT_NEAR(j11["cond"].get<double>(), 43.2434966208793, 1e-9);
    EXPECT_EQ(parse(runCli({"subfield", "13"}))["threshold"], 32.0);
    EXPECT_EQ(runCli({"subfield", "4"}).code, 2);
}

TEST(Cli, DistortionDeterministic)
{
    const std::vector<std::string> args = {"distortion", "8", "--sigma", "3.2", "--count", "1000", "--seed", "7"};
    const Result a = runCli(args);
    const Result b = runCli(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = parse(a);
    EXPECT_LE(j["maxRoundTrip"].get<double>(), 4.0);
    EXPECT_EQ(j["generator"], "splitmix64+box-muller");
}

TEST(Cli, DistortionTrivial)
{
    const auto j = parse(runCli({"distortion", "1"}));
    EXPECT_EQ(j["maxForward"], 1.0);
    EXPECT_EQ(j["maxBackward"], 1.0);
    EXPECT_EQ(j["maxRoundTrip"], 1.0);
    EXPECT_EQ(runCli({"distortion", "1001"}).code, 2);
}

TEST(Cli, VerifyArith)
{
    const Result r = runCli({"verify", "--suite", "arith"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS factor round trip"), std::string::npos);
    EXPECT_EQ(runCli({"verify", "--suite", "nope"}).code, 2);
}

TEST(Cli, Help)
{
    const Result r = runCli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}
