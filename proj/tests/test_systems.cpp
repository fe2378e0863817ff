#include <doctest.h>

#include "ordwb/parse.hpp"
#include "ordwb/systems.hpp"

using namespace ordwb;

namespace {
Verdict V(SystemId sys, const char* s) { return validate(sys, parse(s, sys)); }
bool has_rule(const Verdict& v, const std::string& rule) {
    for (auto& r : v.reason)
        if (r.rule == rule)
            return true;
    return false;
}
}

TEST_CASE("bh validity") {
    const SystemId bh = SystemId::bh();
    CHECK(V(bh, "psi(Om; Om)").ok);
    CHECK(V(bh, "psi(Om; Om * 2 + psi(Om; 0))").ok);
    Verdict r = V(bh, "psi(Om; psi(Om; Om))");
    CHECK_FALSE(r.ok);
    CHECK(has_rule(r, "hull"));
    CHECK(r.reason[0].path == "$");
    CHECK_FALSE(V(bh, "K").ok);
}

TEST_CASE("pi3 argument bound on the index") {
    const SystemId p3 = SystemId::pi3();
    CHECK(V(p3, "psi(K, 1; 1)").ok);
    Verdict r = V(p3, "psi(K, 2; 1)");
    CHECK_FALSE(r.ok);
    CHECK(has_rule(r, "pi3.nu-le-arg"));
}

TEST_CASE("violations point at the failing subterm") {
    Verdict r = V(SystemId::bh(), "Om + psi(Om; psi(Om; Om))");
    REQUIRE_FALSE(r.ok);
    CHECK(r.reason[0].path == "$.part[1]");
}

TEST_CASE("pi11 and stab shapes") {
    const SystemId p11 = SystemId::pi11(), st = SystemId::stab();
    CHECK(V(p11, "psi(S, {0: 1}; 1)").ok);
    CHECK(has_rule(V(p11, "psi(S, {0: 1, 1: 1}; 1)"), "pi11.s-index"));
    CHECK(V(p11, "reg+(psi(S, {0: 1}; 1))").ok);
    CHECK(V(st, "dag(psi(dag(Om), {0: 1}; 0))").ok);
    CHECK(V(st, "I[psi(dag(Om), {0: 1}; 0)]").ok);
    CHECK(has_rule(V(st, "dag(Om + 1)"), "stab.dag-base"));
    CHECK(has_rule(V(st, "psi(psi(I; 0); 0)"), "stab.sub"));
}

TEST_CASE("attributes") {
    const SystemId p11 = SystemId::pi11(), st = SystemId::stab();
    OrdTerm rho = parse("psi(S, {0: 1}; 1)", p11);
    CHECK(p0(p11, rho) == one());
    CHECK(prec(rho, parse("S", p11)));
    CHECK(collapse_root(p11, rho) == parse("S", p11));
    OrdTerm r2 = parse("psi(dag(Om), {0: 1}; 0)", st);
    CHECK(collapse_root(st, r2) == parse("dag(Om)", st));
    CHECK(p0(st, r2) == zero());
    MValue m = m_of(p11, rho);
    CHECK_FALSE(m.top);
    CHECK(m.index.tag == PsiIndex::Tag::Fn);
    CHECK(m_of(p11, parse("K", p11)).top);
    CHECK_THROWS_AS(m_of(SystemId::bh(), one()), Error);
}

TEST_CASE("enumeration emits only valid terms") {
    for (SystemId sys : {SystemId::bh(), SystemId::pi3(), SystemId::pin(4), SystemId::pi11(), SystemId::stab()}) {
        Budget b;
        b.maxlen = 4;
        auto u = enumerate(sys, b);
        for (auto& t : u) {
            CHECK(is_valid(sys, t));
            CHECK(length(t) <= 4);
        }
    }
}

TEST_CASE("enumeration budget") {
    Budget b;
    b.maxlen = 6;
    b.max_items = 10;
    CHECK_THROWS_AS(enumerate(SystemId::pi3(), b), Error);
}
