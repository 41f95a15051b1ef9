#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mnp/cli.hpp"
#include "mnp/json_io.hpp"

#include <sstream>

using namespace mnp;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kSquareBracketMap = R"({"rank":2,"class":3,"images":["a [a,a,a]","b [b,a,a]"]})";

}  // namespace

TEST_CASE("nf and eq") {
    Run r = run({"nf", "--rank", "2", "--class", "3", "(a b)^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "a^2 b^2 [b,a] [b,a,b]\n");
    CHECK(run({"nf", "[b,a,a]"}).out == "[b,a,a]\n");
    CHECK(run({"--rank", "3", "nf", "[c,b,a]"}).out == "[b,a,c]^-1 [c,a,b]\n");

    Run eq = run({"eq", "--rank", "2", "--class", "2", "[b,a,a]", ""});
    CHECK(eq.code == 0);
    CHECK(eq.out == "equal\n");
    CHECK(run({"eq", "a b", "b a"}).out == "not equal\n");

    Json j = Json::parse(run({"nf", "--json", "b a"}).out);
    CHECK(j.at("exp") == Json::array({1, 1}));
    CHECK(run({"nf", "--json", "b a"}).out == run({"nf", "--json", j.dump()}).out);
    CHECK(run({"nf", "-"}, "a^-1 b^-1 a b\n").out == "[b,a]^-1\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"nf"}).code == 1);
    CHECK(run({"nf", "--bogus", "a"}).code == 1);
    Run bad = run({"nf", "a ^ z"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run({"nf", "--rank", "2", "c"}).code == 2);
    CHECK(run({"apply", "{not json", "a"}).code == 2);
    CHECK(run({"nf", "--rank", "0", "a"}).code == 1);
    CHECK(run({"invert", R"({"rank":2,"class":3,"images":["b","a"]})"}).code == 3);
    CHECK(run({"verify-paper", "--suite", "nope"}).code == 1);
}

TEST_CASE("maps") {
    Run inner = run({"is-inner", kSquareBracketMap});
    CHECK(inner.code == 0);
    CHECK(inner.out.find("not inner") == 0);
    Json verdict = Json::parse(run({"is-inner", "--json", "-"}, kSquareBracketMap).out);
    CHECK(verdict.at("inner") == false);

    Json conj = Json::parse(run({"is-inner", "--json", R"({"rank":2,"class":3,"images":["b^-1 a b","b"]})"}).out);
    CHECK(conj.at("inner") == true);

    Run applied = run({"apply", kSquareBracketMap, "b"});
    CHECK(applied.out == "b [b,a,a]\n");
    Run gi = run({"apply", R"({"rank":2,"class":3,"pairs":[{"u":"b","lambda":1}]})", "a"});
    CHECK(gi.out == run({"nf", "b^-1 a b"}).out);

    Json composed = Json::parse(run({"compose", "--json", kSquareBracketMap, kSquareBracketMap}).out);
    CHECK(composed.at("images").size() == 2);

    Json inv = Json::parse(run({"invert", R"({"rank":2,"class":3,"pairs":[{"u":"a","lambda":-2},{"u":"a^2","lambda":1}]})", "--json"}).out);
    CHECK(inv.at("pairs").size() >= 2);
}

TEST_CASE("synthesize") {
    Json data = Json::parse(run({"synthesize", kSquareBracketMap}).out);
    REQUIRE(data.contains("pairs"));
    // The synthesized data reproduces the map.
    Run back = run({"apply", data.dump(), "b"});
    CHECK(back.out == "b [b,a,a]\n");

    Run refused = run({"synthesize", R"({"rank":3,"class":5,"images":["a [a,b]","b","c"]})"});
    CHECK(refused.code == 0);
    Json r = Json::parse(refused.out);
    CHECK(r.contains("witness_generator"));
    CHECK(r.contains("layer"));
    CHECK(r.at("certificate").contains("multiplier"));

    CHECK(run({"synthesize", R"({"rank":2,"class":3,"pairs":[{"u":"a","epsilon":1},{"u":"b","epsilon":-1}]})"}).code == 3);
}

TEST_CASE("oracle self-test and verify suites") {
    Run st = run({"oracle-selftest", "--rank", "2", "--class", "3"});
    CHECK(st.code == 0);
    CHECK(st.out.rfind("PASS", 0) == 0);

    Run s2 = run({"verify-paper", "--suite", "section2-ia"});
    CHECK(s2.code == 0);
    CHECK(s2.out.find("rank 3, class 5") != std::string::npos);
    CHECK(s2.out.find("FAIL") == std::string::npos);

    Run c2 = run({"verify-paper", "--suite", "class2", "--samples", "10", "--json"});
    CHECK(c2.code == 0);
    CHECK(Json::parse(c2.out).at("pass") == true);

    // Same seed, same report.
    Run p1 = run({"verify-paper", "--suite", "prop14", "--seed", "5", "--samples", "5"});
    Run p2 = run({"verify-paper", "--suite", "prop14", "--seed", "5", "--samples", "5"});
    CHECK(p1.out == p2.out);
    CHECK(p1.code == 0);
}
