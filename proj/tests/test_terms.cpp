#include <doctest.h>

#include "ordwb/arith.hpp"
#include "ordwb/parse.hpp"
#include "ordwb/term.hpp"

using namespace ordwb;

TEST_CASE("interning gives pointer equality") {
    OrdTerm a = parse("phi(1, Om) + 2");
    OrdTerm b = add(veblen(one(), constant(ConstName::Omega)), nat(2));
    CHECK(a == b);
    CHECK(a.id() == b.id());
    CHECK(parse("1") == one());
}

TEST_CASE("parse normalizes") {
    CHECK(render(parse("1 + 1")) == "2");
    CHECK(render(parse("w + 1 + w")) == "w * 2");
    CHECK(render(parse("phi(0, 1)")) == "w");
    CHECK(render(parse("phi(0, phi(1, 0))")) == "phi(1, 0)");
    CHECK(render(parse("2 * 3")) == "6");
    CHECK(render(parse("psi(Om; 0) + 5")) == "psi(Om; 0) + 5");
    CHECK(parse("phi(0, 0)") == one());
    CHECK(parse("  psi ( Om ;0 ) ") == parse("psi(Om; 0)"));
}

TEST_CASE("render round trip") {
    for (const char* s : {"0", "Om", "psi(Om; Om * 2 + 1)", "phi(psi(Om; 0), Om)", "w * 3 + 4"}) {
        OrdTerm t = parse(s);
        CHECK(parse(render(t)) == t);
    }
    OrdTerm f = parse("psi(S, {0: t~(1, 0), 1: K}; 0)", SystemId::pi11());
    CHECK(parse(render(f), SystemId::pi11()) == f);
    OrdTerm i = parse("I[psi(dag(Om), {0: 1}; 0)]", SystemId::stab());
    CHECK(render(i) == "I[psi(dag(Om), {0: 1}; 0)]");
    OrdTerm v = parse("psi(K, [1, 0]; 2)", SystemId::pin(4));
    CHECK(parse(render(v), SystemId::pin(4)) == v);
}

TEST_CASE("unicode rendering") {
    CHECK(render(parse("psi(Om; w)"), Style::Unicode).find("ψ") != std::string::npos);
}

TEST_CASE("syntax errors carry a column") {
    try {
        parse("phi(0, Om");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 10);
        CHECK(e.code() == ErrorCode::SyntaxError);
    }
    CHECK_THROWS_AS(parse("psi(Om 0)"), SyntaxError);
    CHECK_THROWS_AS(parse("Q"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
}

TEST_CASE("lengths") {
    CHECK(length(zero()) == 1);
    CHECK(length(constant(ConstName::Omega)) == 1);
    CHECK(length(one()) == 3);
    CHECK(length(parse("psi(Om; 0)")) == 3);
    CHECK(length(parse("Om * 2")) > length(parse("Om")));
}

TEST_CASE("system names") {
    CHECK(SystemId::from_name("bh") == SystemId::bh());
    CHECK(SystemId::from_name("piN:5") == SystemId::pin(5));
    CHECK(SystemId::pin(5).name() == "piN:5");
    CHECK_THROWS_AS(SystemId::from_name("pi7"), Error);
}
