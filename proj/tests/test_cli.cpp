#include "minorlab/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace minorlab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

std::string data(const char* name)
{
    return std::string(MINORLAB_EXAMPLES_DIR) + "/" + name;
}

Outcome cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "minorlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text)
{
    auto end = text.find_last_not_of('\n');
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST(Cli, MinorsOfGoldenToeplitzEndInF7)
{
    for (const char* engine : {"oracle", "auto"}) {
        const auto r = cli({"minors", "--spec", data("golden_toeplitz.json"), "--n", "6", "--engine", engine});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(last_line(r.out), "5,13") << engine;
    }
}

TEST(Cli, MinorsJsonNamesEngine)
{
    const auto r = cli({"minors", "--spec", data("fib_toeplitz.json"), "--engine", "auto", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"toeplitz_gibonacci\""), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"13\""), std::string::npos);
    const auto oracle = cli({"minors", "--spec", data("fib_toeplitz.json")});
    EXPECT_EQ(last_line(oracle.out), "5,13");
}

TEST(Cli, BuildPrintsDisplayedGrid)
{
    const auto r = cli({"build", "--spec", data("bespoke_a.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1,1,1,1\n1,2,2,1\n1,4,6,6\n1,7,14,20\n");
    const auto j = cli({"build", "--spec", data("bespoke_a.json"), "--format", "json"});
    EXPECT_NE(j.out.find("\"20\""), std::string::npos);
}

TEST(Cli, SeqPrintsTerms)
{
    const auto r = cli({"seq", "--spec", data("jacobsthal_seq.json"), "--n", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "index,value\n0,1\n1,3\n2,7\n3,15\n");
}

TEST(Cli, EquimodularVerdicts)
{
    const auto yes = cli({"equimodular", "--specs", data("fib_toeplitz.json"), data("fib_pascal.json"),
                          data("fib_seven.json"), "--upto", "8"});
    EXPECT_EQ(yes.code, 0) << yes.out << yes.err;
    EXPECT_EQ(yes.out.substr(0, 13), "verdict,true\n");
    const auto no = cli({"equimodular", "--specs", data("fib_toeplitz.json"), data("bespoke_a.json"), "--upto", "4"});
    EXPECT_EQ(no.code, 1);
    EXPECT_NE(no.out.find("divergence,"), std::string::npos);
}

TEST(Cli, FactorcheckPasses)
{
    const auto r = cli({"factorcheck", "--a", "2", "--b", "-1", "--r", "3", "--n", "7"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 40), "factorization,true\nclosed_form,true\ninde");
}

TEST(Cli, IdentifyNamesSequence)
{
    const auto r = cli({"identify", "--values-from", data("fib_minors.csv")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("F_{n+2}"), std::string::npos) << r.out;
}

TEST(Cli, SolvePrintsFamiliesAndAgreement)
{
    const auto r = cli({"solve", "--r", "1", "--s", "1", "--c", "3", "--n", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("field,5\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("solution,5/2-1/2*s,5/2+1/2*s,3\n"), std::string::npos) << r.out;
    EXPECT_EQ(last_line(r.out), "6,29,29,29");
}

TEST(Cli, VerifyPaperTable1)
{
    const auto r = cli({"verify-paper", "--suite", "table1"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t lines = 0, passes = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line); ++lines)
        passes += line.rfind("PASS ", 0) == 0;
    EXPECT_EQ(lines, 10u);
    EXPECT_EQ(passes, 10u);
}

TEST(Cli, ErrorsExitWithTwo)
{
    EXPECT_EQ(cli({"minors", "--spec", data("missing.json")}).code, 2);
    const auto broken = cli({"build", "--spec", data("broken.json")});
    EXPECT_EQ(broken.code, 2);
    EXPECT_NE(broken.err.find("error:"), std::string::npos);
    EXPECT_EQ(cli({"minors", "--spec", data("bespoke_a.json"), "--engine", "fast"}).code, 2);
    EXPECT_EQ(cli({"verify-paper", "--suite", "nope"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"minors", "--spec", data("bespoke_a.json"), "--n", "-3"}).code, 2);
}

TEST(Cli, DirectRunConfig)
{
    RunConfig cfg;
    cfg.command = Command::minors;
    cfg.inputs = {data("lucas_modified.json")};
    cfg.bound = 5;
    std::ostringstream out, err;
    EXPECT_EQ(run(cfg, out, err), 0) << err.str();
    // L_{n+1}: 1, 3, 4, 7, 11
    EXPECT_EQ(out.str(), "index,value\n0,1\n1,3\n2,4\n3,7\n4,11\n");
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::string> args{"solve", "--r", "2", "--s", "1", "--c", "1/3", "--format", "json"};
    EXPECT_EQ(cli(args).out, cli(args).out);
}
