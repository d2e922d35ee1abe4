#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "superpoint/io.hpp"

using superpoint::io::Json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SUPERPOINT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

Json json_of(const Run& r) { return Json::parse(r.out); }

const std::string kWitt = "--p 3 --family witt --n 1 --m 2";

}  // namespace

TEST(Cli, AlgebraInfo) {
    auto r = run("algebra-info " + kWitt);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["dim"], 18);
    EXPECT_EQ(json_of(run("algebra-info --p 3 --family elem_abelian --n 2"))["dim"], 9);
    EXPECT_EQ(run("algebra-info --p 9 --family witt").code, 1);
    EXPECT_EQ(run("algebra-info --p 3 --family spin").code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("no-such-verb").code, 2);
    EXPECT_EQ(run("rank-variety").code, 2);
    EXPECT_EQ(run("rank-variety --module /nonexistent.json").code, 2);
    EXPECT_EQ(run("restrict --module " + sample("witt312_k.json") + " --point \"[1,\"").code, 2);
    EXPECT_EQ(run("rank-variety --module " + sample("witt312_k.json") + " --exterior-matrix other").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ModuleValidate) {
    auto ok = run("module-validate --module " + sample("witt312_mod_sigma.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(json_of(ok)["valid"], true);
    auto bad = run("module-validate --module " + sample("bad_parity.json"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(json_of(bad)["valid"], false);
    EXPECT_FALSE(json_of(bad)["violations"].empty());
}

TEST(Cli, ModuleRandomIsDeterministicAndValid) {
    const std::string args = "module-random " + kWitt + " --dim 6 --seed 0";
    auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto M = superpoint::io::module_from_json(json_of(a));
    EXPECT_TRUE(superpoint::validate(M).empty());
    EXPECT_LE(M.dim(), 6u);
    // output re-parses to an equal value and re-serializes byte for byte
    EXPECT_EQ(superpoint::io::dump(superpoint::io::module_to_json(M)), a.out);
    auto shifted = run("module-random " + kWitt + " --dim 6 --seed 0 --parity-split 1 --keep-basis");
    EXPECT_EQ(shifted.code, 0);
    EXPECT_EQ(run("module-random " + kWitt + " --dim 0").code, 1);
}

TEST(Cli, TensorAndHom) {
    const std::string l = sample("witt312_mod_sigma.json"), r = sample("witt312_mod_s.json");
    auto t = run("tensor --left " + l + " --right " + r);
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(json_of(t)["dim"], 6);
    EXPECT_TRUE(superpoint::validate(superpoint::io::module_from_json(json_of(t))).empty());
    auto h = run("hom --left " + l + " --right " + r);
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(json_of(h)["dim"], 6);
    EXPECT_EQ(run("tensor --left " + l + " --right " + sample("elem32_random_seed11.json")).code, 1);
}

TEST(Cli, Restrict) {
    auto r = run("restrict --module " + sample("witt312_mod_sigma.json") + " --point \"[0,1]\"");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["T"], Json::parse("[[0,0,0],[1,0,0],[0,1,0]]"));
    EXPECT_EQ(json_of(r)["max_image"], true);
    auto z = run("restrict --module " + sample("witt312_mod_sigma.json") + " --point \"[0,0]\"");
    EXPECT_EQ(z.code, 1);
    auto s = run("restrict --module " + sample("witt312_mod_sigma.json") + " --spec " + sample("spec_standard.json"));
    EXPECT_EQ(s.code, 0);
}

TEST(Cli, RankVarietyAndSupport) {
    auto v = run("rank-variety --module " + sample("witt312_mod_sigma.json") + " --ext-degree 1");
    ASSERT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "{\"field\":{\"degree\":1,\"p\":3},\"points\":[[0,0],[1,0],[2,0]]}\n");
    auto par = run("rank-variety --module " + sample("witt312_random_seed7.json") + " --ext-degree 2 --parallel --threads 3");
    auto ser = run("rank-variety --module " + sample("witt312_random_seed7.json") + " --ext-degree 2");
    EXPECT_EQ(par.out, ser.out);
    auto s = run("support --module " + sample("witt312_mod_sigma.json") + " --ext-degree 1");
    ASSERT_EQ(s.code, 0);
    EXPECT_EQ(json_of(s)["projective_points"], Json::parse("[[1,0]]"));
    EXPECT_EQ(run("rank-variety --module " + sample("witt312_k.json") + " --ext-degree 2 --budget 10").code, 1);
    auto printed = run("rank-variety --module " + sample("exterior31_random_seed2_f9.json") + " --ext-degree 2 --exterior-matrix printed");
    EXPECT_EQ(printed.code, 0);
}

TEST(Cli, IsProjective) {
    auto r = run("is-projective --module " + sample("witt312_mod_sigma.json") + " --max-ext 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["verdict"], "NotProjective");
    EXPECT_EQ(json_of(r)["witness"], Json::parse("[1,0]"));
}

TEST(Cli, ResolveAndCarlson) {
    auto r = run("resolve " + kWitt + " --length 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json_of(r)["ranks"], Json::parse("[1,2,3,4,5]"));
    auto m = run("resolve --module " + sample("witt312_mod_sigma.json") + " --length 2");
    EXPECT_EQ(m.code, 0);
    // parities on F_2 are [0,1,0]: the class (1,0,0)
    auto c = run("carlson " + kWitt + " --degree 2 --xi \"[1,0,0]\"");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(json_of(c)["dim"], 18);
    EXPECT_EQ(json_of(c)["omega_dim"], 19);
    EXPECT_EQ(run("carlson " + kWitt + " --degree 2 --xi \"[0,0,0]\"").code, 1);
    EXPECT_EQ(run("carlson " + kWitt + " --degree 2 --xi \"[0,1,0]\"").code, 1);
}

TEST(Cli, PiNormalizeAndEquiv) {
    auto n = run("pi-normalize --spec " + sample("spec_standard.json"));
    ASSERT_EQ(n.code, 0);
    EXPECT_EQ(json_of(n)["coefficients"], Json::parse("[2,1]"));
    EXPECT_EQ(run("pi normalize --spec " + sample("spec_standard.json")).out, n.out);
    EXPECT_EQ(run("pi-normalize --spec " + sample("spec_incompatible.json")).code, 1);
    EXPECT_EQ(run("pi-normalize --spec " + sample("spec_not_pi_point.json")).code, 1);
    auto e = run("pi-equiv " + kWitt + " --a \"[0,1]\" --b \"[0,2]\"");
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(json_of(e)["equivalent"], true);
    EXPECT_EQ(json_of(run("pi equiv " + kWitt + " --a \"[1,0]\" --b \"[0,1]\""))["equivalent"], false);
    auto cross = run("pi-equiv " + kWitt + " --a \"[1,0]\" --b \"[[2,0],[0,0]]\" --b-field-degree 2");
    ASSERT_EQ(cross.code, 0);
    EXPECT_EQ(json_of(cross)["equivalent"], true);
    EXPECT_EQ(run("pi-equiv " + kWitt + " --a \"[0,0]\" --b \"[0,1]\"").code, 1);
}

TEST(Cli, CheckSuiteQuick) {
    auto r = run("check-suite --scale 0.02");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(json_of(r)["ok"], true);
    EXPECT_EQ(json_of(r)["checks"].size(), 11u);
}
