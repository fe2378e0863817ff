#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"
#include "ordwb/systems.hpp"

using namespace ordwb;

namespace {
int C(const char* a, const char* b, SystemId sys = SystemId::bh()) { return cmp(parse(a, sys), parse(b, sys)); }
}

TEST_CASE("basic comparisons") {
    CHECK(C("psi(Om; 0)", "Om") < 0);
    CHECK(C("psi(Om; 0)", "phi(1, 0)") > 0);
    CHECK(C("psi(Om; 0)", "w") > 0);
    CHECK(C("psi(Om; Om)", "psi(Om; Om + 1)") < 0);
    CHECK(C("Om", "psi(Om; Om)") > 0);
    CHECK(C("Om * 2", "Om + psi(Om; 0)") > 0);
    CHECK(C("0", "0") == 0);
}

TEST_CASE("compare rejects foreign constructors") {
    CHECK(compare(SystemId::pi3(), parse("K"), parse("Om")) == Cmp::Greater);
    CHECK_THROWS_AS(compare(SystemId::bh(), parse("K"), parse("Om")), Error);
    CHECK(std::string(cmp_symbol(Cmp::Less)) == "<");
}

TEST_CASE("big constants") {
    const SystemId p3 = SystemId::pi3();
    CHECK(C("psi(K; 0)", "K", p3) < 0);
    CHECK(C("psi(K; 0)", "Om", p3) > 0);
    CHECK(C("psi(K, 1; 1)", "psi(K; 1)", p3) > 0);
    const SystemId st = SystemId::stab();
    CHECK(C("dag(Om)", "I", st) < 0);
    CHECK(C("psi(dag(Om); 0)", "dag(Om)", st) < 0);
}

TEST_CASE("collapsed successors sit below the stable they copy") {
    const SystemId st = SystemId::stab();
    const char* rho = "psi(dag(Om), {0: 1}; 0)";
    std::string r = rho;
    CHECK(C(rho, "dag(Om)", st) < 0);
    CHECK(C(("dag(" + r + ")").c_str(), "dag(Om)", st) < 0);
    CHECK(C(("dag(" + r + ")").c_str(), rho, st) > 0);
    CHECK(C(("I[" + r + "]").c_str(), ("dag(" + r + ")").c_str(), st) > 0);
    CHECK(C(("I[" + r + "]").c_str(), "dag(Om)", st) < 0);
}

TEST_CASE("enumerated universes are strictly sorted") {
    for (SystemId sys : {SystemId::bh(), SystemId::pi3(), SystemId::pi11(), SystemId::stab()}) {
        Budget b;
        b.maxlen = 4;
        auto u = enumerate(sys, b);
        REQUIRE(u.size() > 5);
        for (std::size_t i = 1; i < u.size(); ++i)
            CHECK(cmp(u[i - 1], u[i]) < 0);
    }
}

TEST_CASE("index order") {
    CHECK(index_less(PsiIndex::none(), PsiIndex::of_ord(one())));
    CHECK_FALSE(index_less(PsiIndex::of_ord(one()), PsiIndex::none()));
}
