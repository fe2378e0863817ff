#include <doctest.h>

#include <sstream>

#include "ordwb/cli.hpp"
#include "transcript.hpp"

using namespace ordwb;

TEST_CASE("golden transcripts") {
    auto cases = transcript::load(ORDWB_GOLDEN);
    REQUIRE(cases.size() > 20);
    for (auto& c : cases) {
        CAPTURE(c.command);
        auto got = transcript::run(c.command);
        CHECK(got.out == c.expected);
        CHECK(got.code == c.code);
    }
}

TEST_CASE("syntax errors report the column on stderr") {
    const char* argv[] = {"parse", "phi(0, Om"};
    std::ostringstream out, err;
    CHECK(run_cli(2, argv, out, err, std::nullopt) == 2);
    CHECK(err.str().find("column 10") != std::string::npos);
}

TEST_CASE("budget precedence") {
    Budget b = parse_budget("maxlen=3,fuel=9");
    CHECK(b.maxlen == 3);
    CHECK(b.fuel == 9);
    CHECK(b.seed == Budget{}.seed);
    CHECK_THROWS_AS(parse_budget("maxlen"), Error);
    CHECK_THROWS_AS(parse_budget("speed=3"), Error);
    CHECK_THROWS_AS(parse_budget("fuel=-1"), Error);
    auto flag = transcript::run("ORDWB_BUDGET=maxlen=3 enum --maxlen 1");
    auto env = transcript::run("ORDWB_BUDGET=maxlen=1 enum");
    auto dflt = transcript::run("enum");
    CHECK(flag.out == env.out);
    CHECK(dflt.out.size() > env.out.size());
}

TEST_CASE("jsonl output is stable") {
    auto a = transcript::run("--format jsonl check descent --maxlen 4 --trials 10 --seed 9");
    auto b = transcript::run("--format jsonl check descent --maxlen 4 --trials 10 --seed 9");
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}
