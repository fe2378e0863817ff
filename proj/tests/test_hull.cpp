#include <doctest.h>

#include <algorithm>

#include "ordwb/hull.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"
#include "ordwb/systems.hpp"

using namespace ordwb;

TEST_CASE("strongly critical parts") {
    SupportSet s = sc(parse("phi(psi(Om; 0), Om + 1) + 1"));
    REQUIRE(s.size() == 1);
    CHECK(*s.begin() == parse("psi(Om; 0)"));
    CHECK(sc(parse("psi(Om; Om)")).size() == 1);
    CHECK(sc(parse("Om * 2 + 1")).empty());
    CHECK(sc(zero()).empty());
}

TEST_CASE("hull membership") {
    OrdTerm d = parse("psi(Om; Om)");
    CHECK(in_hull(parse("Om"), zero(), d));
    CHECK(in_hull(parse("psi(Om; 0)"), zero(), d));
    CHECK(in_hull(parse("psi(Om; 0)"), one(), parse("1")));
    CHECK_FALSE(in_hull(parse("psi(Om; Om)"), one(), parse("1")));
    CHECK(in_hull(parse("psi(Om; Om)"), parse("Om + 1"), parse("1")));
}

TEST_CASE("hull closure agrees with membership") {
    Budget b;
    b.maxlen = 4;
    const SystemId sys = SystemId::bh();
    auto u = enumerate(sys, b);
    OrdTerm a = parse("Om");
    OrdTerm delta = parse("psi(Om; 0)");
    std::vector<OrdTerm> gens;
    for (auto& t : u)
        if (cmp(t, delta) < 0)
            gens.push_back(t);
    auto closed = hull_closure(u, gens, a, sys);
    for (auto& t : u) {
        bool in = std::find(closed.begin(), closed.end(), t) != closed.end();
        CHECK(in == in_hull(t, a, delta));
    }
}

TEST_CASE("system constants") {
    CHECK(system_constants(SystemId::bh()).size() == 2);
    CHECK(system_constants(SystemId::pi11()).size() == 4);
}
