// End-to-end checks of the command-line tool via subprocess invocation.

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PERSYMM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

TEST(Cli, GammaClosedFormCsv) {
    const RunResult r = run_cli("gamma --s 3 --m 2 --k 4 --method closed-form");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("s,m,k,i,gamma,method"), std::string::npos);
    EXPECT_NE(r.out.find("3,2,4,4,15648,closed-form"), std::string::npos);
}

TEST(Cli, GammaSingleRankFilter) {
    const RunResult r = run_cli("gamma --s 3 --m 2 --k 4 --i 4");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "s,m,k,i,gamma,method\n3,2,4,4,15648,closed-form\n");
}

TEST(Cli, GammaOracleSmallest) {
    const RunResult r = run_cli("gamma --s 1 --m 0 --k 1 --method oracle");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("1,0,1,0,1,oracle"), std::string::npos);
    EXPECT_NE(r.out.find("1,0,1,1,3,oracle"), std::string::npos);
}

TEST(Cli, MethodsAgreeByteForByte) {
    const RunResult oracle = run_cli("gamma --s 2 --m 1 --k 5 --method oracle");
    const RunResult recurrence = run_cli("gamma --s 2 --m 1 --k 5 --method recurrence");
    EXPECT_EQ(oracle.exit_code, 0);
    // Same numbers; only the method column differs.
    std::string normalized = recurrence.out;
    size_t pos;
    while ((pos = normalized.find("recurrence")) != std::string::npos)
        normalized.replace(pos, 10, "oracle");
    EXPECT_EQ(normalized, oracle.out);
}

TEST(Cli, DeterministicAcrossRunsAndWorkers) {
    const std::string args = "gamma --s 2 --m 2 --k 4 --method oracle";
    const RunResult a = run_cli(args + " --workers 1");
    const RunResult b = run_cli(args + " --workers 2");
    const RunResult c = run_cli(args + " --workers 2");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(b.out, c.out);
}

TEST(Cli, JsonRoundTripsByteIdentically) {
    const RunResult r = run_cli("gamma --s 3 --m 2 --k 4 --format json");
    EXPECT_EQ(r.exit_code, 0);
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
    EXPECT_EQ(parsed["counts"][4], "15648");
    EXPECT_EQ(parsed["checks"]["moments"], "ok");
}

TEST(Cli, CountCommands) {
    EXPECT_EQ(run_cli("count --q 3 --s 3 --m 2 --k 4").out, "35356672\n");
    EXPECT_EQ(run_cli("count --q 1 --s 2 --m 0 --k 3").out, "23\n");
    const RunResult formula = run_cli("count --q 2 --s 2 --m 0 --k 2");
    const RunResult brute = run_cli("count --q 2 --s 2 --m 0 --k 2 --method bruteforce");
    EXPECT_EQ(formula.out, "424\n");
    EXPECT_EQ(brute.out, formula.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("gamma --s 3 --m 2 --k 4").exit_code, 0);
    // Usage errors.
    EXPECT_EQ(run_cli("gamma --s 3 --m 2").exit_code, 2);
    EXPECT_EQ(run_cli("gamma --s 0 --m 0 --k 1").exit_code, 2);
    EXPECT_EQ(run_cli("gamma --s 2 --m 0 --k 2 --method wrong").exit_code, 2);
    // Budget refusals.
    EXPECT_EQ(run_cli("gamma --s 4 --m 3 --k 8 --method oracle --budget-bits 12").exit_code, 3);
    EXPECT_EQ(run_cli("count --q 4 --s 4 --m 3 --k 8 --method bruteforce").exit_code, 3);
}

TEST(Cli, EnvironmentBudgetOverride) {
    const std::string cmd = "PERSYMM_BUDGET_BITS=4 " + std::string(PERSYMM_CLI_PATH) +
                            " gamma --s 2 --m 0 --k 3 --method oracle 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {
    }
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 3);
}

TEST(Cli, VerifySweepPassesAndReportsSkips) {
    const RunResult ok = run_cli("verify --s-range 2..2 --m-range 0..1 --k-range 1..3 --budget-bits 12");
    EXPECT_EQ(ok.exit_code, 0);
    EXPECT_NE(ok.out.find("[PASS]"), std::string::npos);
    EXPECT_NE(ok.out.find("summary:"), std::string::npos);

    const RunResult tiny =
        run_cli("verify --s-range 2..2 --m-range 0..0 --k-range 4..4 --budget-bits 3");
    EXPECT_EQ(tiny.exit_code, 0);
    EXPECT_NE(tiny.out.find("skipped (budget)"), std::string::npos);
}

TEST(Cli, VerifyJsonRoundTrips) {
    const RunResult r =
        run_cli("verify --s-range 2..2 --m-range 0..0 --k-range 1..2 --budget-bits 8 --format json");
    EXPECT_EQ(r.exit_code, 0);
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
    EXPECT_EQ(parsed["summary"]["failed"], 0);
}

}  // namespace
