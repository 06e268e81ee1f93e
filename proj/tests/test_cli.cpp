#include "qschub/json.hpp"
#include "qschub/polyring.hpp"
#include "qschub/suites.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace qschub;

namespace {

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(QSCHUB_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST(Cli, QuantumSchubert)
{
    auto r = run("qschubert --n 3 --word 121");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1^2*x2 + q1*x1\n");
    EXPECT_EQ(run("qschubert --n 3 --perm 321").out, "x1^2*x2 + q1*x1\n");
}

TEST(Cli, VerifyS4Table)
{
    auto r = run("verify --suite appendixA --n 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "24/24 match\n");
}

TEST(Cli, QuantumPairing)
{
    auto r = run("pair --n 3 --f \"x1^2*x2\" --g \"x1*x2\" --quantum");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-2*q1\n");
    EXPECT_EQ(run("pair --n 3 --f \"x1^2*x2\" --g \"x1*x2\"").out, "0\n");
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("qschubert --n 3 --word 1x").code, 2);
    EXPECT_EQ(run("pair --n 3 --f \"x1^\" --g 1").code, 2);
    EXPECT_EQ(run("qschubert --n 3").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("qschubert --n 5 --word 1").code, 3);
    EXPECT_EQ(run("qschubert --n 5 --word 1", "QSCHUB_MAX_N=5").code, 0);
    EXPECT_EQ(run("qschubert --n 7 --word 1", "QSCHUB_MAX_N=9").code, 3);
    EXPECT_EQ(run("verify --suite appendixB").code, 1);
    EXPECT_EQ(run("verify --suite nope").code, 2);
}

TEST(Cli, Deterministic)
{
    auto a = run("table --n 4");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run("table --n 4").out);
    EXPECT_EQ(a.out.substr(0, a.out.find(':')), "121321");
}

TEST(Cli, JsonRoundTrip)
{
    auto r = run("qdouble --n 3 --word 121 --format json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(poly_from_json(j), parse("(x1 + y2)*(x1 + y1)*(x2 + y1) + q1*(x1 + y2)", 3));
    EXPECT_EQ(j.at("terms").size(), parse(j.at("text").get<std::string>(), 3).size());
}

TEST(Cli, Numeric)
{
    EXPECT_EQ(run("correlate --n 3 --f \"x1^5\" --q 2,3").out, "2\n");
    EXPECT_EQ(run("correlate --n 3 --f 1 --genus 1").out, "6\n");
}

TEST(Suites, ReportJson)
{
    auto r = suites::run_suite("orthogonality", {.n = 3});
    EXPECT_EQ(r.total(), 36);
    EXPECT_TRUE(r.ok());
    auto j = r.to_json();
    EXPECT_EQ(j.at("passed").get<int>(), 36);
    EXPECT_EQ(j.at("cases").size(), 36u);
    EXPECT_EQ(r.summary(), "36/36 match");
}

TEST(Suites, AllNamesRun)
{
    for (auto& name : suites::suite_names()) {
        auto r = suites::run_suite(name);
        EXPECT_GT(r.total(), 0) << name;
        if (name != "appendixB") EXPECT_TRUE(r.ok()) << name;
    }
}
