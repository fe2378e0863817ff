#include <doctest.h>

#include "ordwb/collapse.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"
#include "ordwb/systems.hpp"

using namespace ordwb;

TEST_CASE("pi11 collapse clauses") {
    const SystemId s = SystemId::pi11();
    OrdTerm rho = parse("psi(S, {0: 1}; 1)", s);
    CHECK(collapse_target(s, rho) == parse("S", s));
    CHECK(collapse(s, parse("S", s), rho) == rho);
    CHECK(collapse(s, parse("K", s), rho) == parse("reg+(psi(S, {0: 1}; 1))", s));
    CHECK(collapse(s, parse("psi(K; 0)", s), rho) == parse("psi(reg+(psi(S, {0: 1}; 1)); 0)", s));
    CHECK(collapse(s, parse("Om + 1", s), rho) == parse("Om + 1", s));
    CHECK(uncollapse(s, rho, rho) == parse("S", s));
    CHECK_THROWS_AS(uncollapse(s, parse("S", s), rho), Error);
    CHECK_THROWS_AS(collapse_target(s, parse("Om", s)), Error);
    CHECK_THROWS_AS(collapse_target(SystemId::bh(), parse("psi(Om; 0)")), Error);
}

TEST_CASE("collapse preserves order and round trips") {
    const SystemId s = SystemId::pi11();
    OrdTerm rho = parse("psi(S, {0: 1}; 1)", s);
    Budget b;
    b.maxlen = 5;
    std::vector<OrdTerm> dom;
    for (auto& t : enumerate(s, b))
        if (in_domain(s, t, rho))
            dom.push_back(t);
    REQUIRE(dom.size() > 20);
    for (std::size_t i = 0; i < dom.size(); ++i) {
        OrdTerm x = collapse(s, dom[i], rho);
        CHECK(uncollapse(s, x, rho) == dom[i]);
        CHECK(is_valid(s, x));
        if (i > 0)
            CHECK(cmp(collapse(s, dom[i - 1], rho), x) < 0);
    }
}

TEST_CASE("stab collapse clauses") {
    const SystemId s = SystemId::stab();
    OrdTerm rho = parse("psi(dag(Om), {0: 1}; 0)", s);
    CHECK(collapse_target(s, rho) == parse("dag(Om)", s));
    CHECK(collapse(s, parse("dag(Om)", s), rho) == rho);
    CHECK(collapse(s, parse("dag(dag(Om))", s), rho) == parse("dag(psi(dag(Om), {0: 1}; 0))", s));
    CHECK(collapse(s, parse("I", s), rho) == parse("I[psi(dag(Om), {0: 1}; 0)]", s));
    CHECK(uncollapse(s, parse("I[psi(dag(Om), {0: 1}; 0)]", s), rho) == parse("I", s));
}

TEST_CASE("out of domain") {
    const SystemId s = SystemId::pi11();
    OrdTerm rho = parse("psi(S, {0: 1}; 0)", s);
    OrdTerm big = parse("psi(S, {0: 1}; 5)", s);
    CHECK_FALSE(in_domain(s, big, rho));
    CHECK_THROWS_AS(collapse(s, big, rho), Error);
}
