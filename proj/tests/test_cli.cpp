#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "qeuler/shuffle.hpp"
#include "qeuler/wreath.hpp"

#ifndef QEULER_CLI_PATH
#error "QEULER_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QEULER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stats golden output") {
    RunResult r = run("stats --l 4 \"1 8:1 3 4 6 2:2 7 5:1 9\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "FIX: {1,3,4,7,9}"));
    CHECK(contains(r.out, "Der: 4:1 3 1:2 2:1"));
    CHECK(contains(r.out, "fix=5 des=3 maj=13 exc=1 col=4 maf=11 fmaj=56 fmaf=48"));

    RunResult zeros = run("stats --l 1 \"1 2 3\"");
    CHECK(zeros.exit_code == 0);
    CHECK(contains(zeros.out, "fix=3 des=0 maj=0 exc=0 col=0 maf=0 fmaj=0 fmaf=0"));

    RunResult maj29 = run("stats --l 3 \"1 9:1 3 10 5 6 7 4 2 8:2\"");
    CHECK(maj29.exit_code == 0);
    CHECK(contains(maj29.out, "maj=29"));
}

TEST_CASE("psi golden output") {
    RunResult r = run("psi --l 3 \"1 9:1 3 10 5 6 7 4 2 8:2\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "6:1 8 2 4 5 1 7 3:2 9 10"));

    RunResult r2 = run("psi --l 1 \"1 5 3 4 2 7 6 8\"");
    CHECK(contains(r2.out, "1 3 2 4 8 6 7 5"));

    // a derangement maps to itself
    RunResult r3 = run("psi --l 3 \"4:1 5 2 1 3:2\"");
    CHECK(contains(r3.out, "4:1 5 2 1 3:2"));

    // trace shows the slot values and the recursion path
    RunResult traced = run("psi --l 3 \"1 9:1 3 10 5 6 7 4 2 8:2\" --trace");
    CHECK(contains(traced.out, "der: 4:1 5 2 1 3:2"));
    CHECK(contains(traced.out, "seq: 0 1 2 2 2"));
    CHECK(contains(traced.out, "slot 2: red value 5"));
    CHECK(contains(traced.out, "-> 3 3 4 5 5"));
}

TEST_CASE("fh golden outputs") {
    RunResult r = run("fh phi-inv \"02001430\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "02010403"));

    RunResult f = run("fh f \"02010403\" --trace");
    CHECK(f.exit_code == 0);
    CHECK(contains(f.out, "02104003"));
    // the seven recursion lines
    CHECK(contains(f.out, "F(02) = 02  [no descent]"));
    CHECK(contains(f.out, "F(020) = 200  [case 3]"));
    CHECK(contains(f.out, "F(0201) = 0201  [case 2]"));
    CHECK(contains(f.out, "F(02010) = 20100  [case 3]"));
    CHECK(contains(f.out, "F(020104) = 201004  [case 1]"));
    CHECK(contains(f.out, "F(0201040) = 2104000  [case 3]"));
    CHECK(contains(f.out, "F(02010403) = 02104003  [case 2]"));

    RunResult fact = run("fh factorize \"1 5 3 4 2 7 6 8\"");
    CHECK(fact.exit_code == 0);
    CHECK(contains(fact.out, "1 3 2 4 8 6 7 5"));
    CHECK(contains(fact.out, "agreement=true"));

    RunResult round = run("fh phi \"02010403\"");
    CHECK(contains(round.out, "02001430"));
}

TEST_CASE("table golden outputs") {
    RunResult one = run("table --l 1 --n 3");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.out, "q+2*q^2+q^3"));
    CHECK(contains(one.out, "1+2*q+2*q^2+q^3"));

    RunResult two = run("table --l 2 --n 3");
    CHECK(two.exit_code == 0);
    // the corrected entry forced by the recurrence
    CHECK(contains(two.out, "q+3*q^2+5*q^3+7*q^4+8*q^5+7*q^6+5*q^7+3*q^8+q^9"));

    RunResult zero = run("table --l 3 --n 0");
    CHECK(contains(zero.out, "n=0 | 1"));

    // single-entry selection
    RunResult entry = run("table --l 2 --n 3 --m 2");
    CHECK(entry.exit_code == 0);
    CHECK(entry.out == "q+3*q^2+5*q^3+7*q^4+8*q^5+7*q^6+5*q^7+3*q^8+q^9\n");
    RunResult badm = run("table --l 2 --n 3 --m 4");
    CHECK(badm.exit_code == 2);
}

TEST_CASE("verify targets and exit codes") {
    RunResult r = run("verify thm1 --l 1 --n 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "summary: 1/1 checks passed"));

    RunResult thm3 = run("verify thm3 --n 4");
    CHECK(thm3.exit_code == 0);

    RunResult witness = run("verify witness");
    CHECK(witness.exit_code == 0);
    CHECK(contains(witness.out, "witness l=1 n=3 m=1"));

    // with one color no separating class exists below order 3
    RunResult nowitness = run("verify witness --l 1 --n 2");
    CHECK(nowitness.exit_code == 1);
    CHECK(contains(nowitness.out, "[FAIL]"));

    // budget exceeded: exit 3, cardinality named
    RunResult budget = run("verify haglund --l 3 --n 12 --budget 1000");
    CHECK(budget.exit_code == 3);

    // parse error: exit 2
    RunResult bad = run("stats --l 1 \"1 2 2\"");
    CHECK(bad.exit_code == 2);
    RunResult badcolor = run("stats --l 2 \"1 2:5\"");
    CHECK(badcolor.exit_code == 2);
    RunResult badword = run("fh phi-inv \"010\"");
    CHECK(badword.exit_code == 2);

    // CLI usage errors share the input-error code
    RunResult badaction = run("fh bogus \"1\"");
    CHECK(badaction.exit_code == 2);
    RunResult nosub = run("");
    CHECK(nosub.exit_code == 2);

    // --help is not an error
    RunResult help = run("--help");
    CHECK(help.exit_code == 0);
}

TEST_CASE("json outputs round trip through the text parsers") {
    using nlohmann::json;

    RunResult stats = run("stats --l 4 \"1 8:1 3 4 6 2:2 7 5:1 9\" --json");
    json s = json::parse(stats.out);
    CHECK(s["maj"] == 13);
    CHECK(s["fmaf"] == 48);
    qeuler::ColoredPermutation sigma =
        qeuler::parse_permutation(s["sigma"].get<std::string>(), s["l"].get<int>());
    CHECK(qeuler::to_string(sigma) == s["sigma"].get<std::string>());
    qeuler::ColoredPermutation dpart =
        qeuler::parse_permutation(s["der"].get<std::string>(), s["l"].get<int>());
    CHECK(qeuler::to_string(dpart) == s["der"].get<std::string>());

    RunResult psi = run("psi --l 3 \"1 9:1 3 10 5 6 7 4 2 8:2\" --json");
    json p = json::parse(psi.out);
    CHECK(p["result"] == "6:1 8 2 4 5 1 7 3:2 9 10");
    CHECK(p["fmaf_result"] == 90);

    RunResult fh = run("fh f \"02010403\" --json --trace");
    json f = json::parse(fh.out);
    CHECK(f["result"] == "0 2 1 0 4 0 0 3");
    qeuler::ZWord w = qeuler::parse_word(f["result"].get<std::string>());
    CHECK(qeuler::word_to_string(w) == f["result"].get<std::string>());
    CHECK(f["steps"].size() == 7);

    RunResult table = run("table --l 2 --n 2 --json");
    json t = json::parse(table.out);
    CHECK(t["entries"]["g[2][2]"].is_array());

    RunResult verify = run("verify haglund --l 2 --n 2 --json");
    json v = json::parse(verify.out);
    CHECK(v["pass"] == true);
    CHECK(v["checks"].size() == 3);
}

TEST_CASE("environment variable mirrors the budget flag") {
    std::string cmd = std::string("QEULER_BUDGET=1000 ") + QEULER_CLI_PATH +
                      " verify haglund --l 3 --n 12 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {
    }
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
}
