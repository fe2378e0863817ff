#include <doctest.h>

#include "ordwb/arith.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"

using namespace ordwb;

namespace {
OrdTerm P(const char* s) { return parse(s); }
}

TEST_CASE("ordinal addition absorbs") {
    CHECK(add(one(), P("w")) == P("w"));
    CHECK(add(P("w"), one()) == P("w + 1"));
    CHECK(add(P("Om + 1"), P("Om")) == P("Om * 2"));
    CHECK(add(zero(), P("Om")) == P("Om"));
}

TEST_CASE("natural sum commutes") {
    OrdTerm a = P("w + 1"), b = P("Om");
    CHECK(natural_sum(a, b) == natural_sum(b, a));
    CHECK(natural_sum(a, b) == P("Om + w + 1"));
}

TEST_CASE("veblen fixed points") {
    OrdTerm e0 = P("phi(1, 0)");
    CHECK(veblen(zero(), e0) == e0);
    CHECK(veblen(zero(), P("Om")) == P("Om"));
    CHECK(cmp(P("phi(0, Om + 1)"), P("Om * 2")) > 0);
}

TEST_CASE("towers") {
    CHECK(omega_tower(0, P("Om")) == P("Om"));
    CHECK(omega_tower(1, P("Om + 1")) == P("phi(0, Om + 1)"));
    CHECK(cmp(omega_tower(3, P("Om + 1")), omega_tower(2, P("Om + 1"))) > 0);
}

TEST_CASE("theta tilde and its inverse") {
    const ConstName K = ConstName::BigK;
    CHECK(theta_tilde(zero(), P("2"), K) == P("2"));
    CHECK(theta_tilde(one(), zero(), K) == one());
    OrdTerm t = theta_tilde(P("2"), P("3"), K);
    CHECK(theta_tilde_inv(P("2"), t, K) == P("3"));
}

TEST_CASE("unary constructors") {
    OrdTerm om = P("Om");
    CHECK(cmp(nextreg(om), om) > 0);
    CHECK(cmp(dagger(om), om) > 0);
}
