#include <doctest.h>

#include "ordwb/finite_fn.hpp"
#include "ordwb/parse.hpp"

using namespace ordwb;

namespace {
OrdTerm P(const char* s) { return parse(s); }
FiniteFn F(std::vector<std::pair<const char*, const char*>> es) {
    std::vector<std::pair<OrdTerm, OrdTerm>> v;
    for (auto& [k, x] : es)
        v.emplace_back(P(k), P(x));
    return make_fn(v);
}
}

TEST_CASE("make_fn sorts and drops zeros") {
    FiniteFn f = F({{"2", "1"}, {"0", "K"}, {"1", "0"}});
    REQUIRE(f.size() == 2);
    CHECK(f.entries[0].first == P("0"));
    CHECK(f.at(P("1")).is_zero());
    CHECK_THROWS_AS(F({{"1", "1"}, {"1", "2"}}), Error);
}

TEST_CASE("restriction and concatenation") {
    FiniteFn f = F({{"0", "1"}, {"1", "2"}, {"2", "3"}});
    CHECK(restrict_below(f, P("1")).size() == 1);
    CHECK(restrict_from(f, P("1")).size() == 2);
    FiniteFn g = F({{"0", "K"}});
    FiniteFn h = concat(g, f, P("1"));
    CHECK(h.at(P("0")) == P("K"));
    CHECK(h.at(P("2")) == P("3"));
    CHECK(*next_key(f, P("0")) == P("1"));
    CHECK(!prev_key(f, P("0")));
    CHECK(max_key(f) == P("2"));
    CHECK_THROWS_AS(max_key(FiniteFn{}), Error);
}

TEST_CASE("special functions and prime") {
    CHECK(is_special(F({{"0", "K"}})));
    CHECK(is_special(F({{"0", "1"}, {"1", "K * 2"}})));
    CHECK_FALSE(is_special(F({{"0", "K + 1"}})));
    CHECK(prime(F({{"0", "K * 2"}})) == F({{"0", "K"}}));
    CHECK(prime(F({{"0", "K"}})).empty());
    CHECK_THROWS_AS(prime(F({{"0", "1"}})), Error);
}

TEST_CASE("step down") {
    FiniteFn g = F({{"0", "K"}, {"1", "K"}});
    FiniteFn h = step_down(g, P("0"), P("0"));
    CHECK(h == F({{"0", "K * 2"}}));
    CHECK(is_special(h));
    CHECK(prime(h) == F({{"0", "K"}}));
    CHECK(step_down_base_fn(g, P("0"), P("0")) == F({{"0", "K + 1"}}));
    CHECK_THROWS_AS(step_down(g, P("1"), P("0")), Error);
    CHECK_THROWS_AS(step_down(F({{"0", "1"}}), P("0"), P("0")), Error);
}

TEST_CASE("domination") {
    FiniteFn f = F({{"1", "1"}});
    CHECK(less_at(f, P("2"), zero()));
    CHECK(less_at(f, P("1"), P("2")));
    CHECK_FALSE(less_at(f, P("1"), P("1")));
    CHECK_FALSE(less_at(f, P("0"), zero()));
}

TEST_CASE("irreducibility and pointwise order") {
    CHECK(is_irreducible(F({{"0", "K"}})));
    CHECK(pointwise_leq(F({{"0", "1"}}), F({{"0", "2"}, {"1", "1"}})));
    CHECK_FALSE(pointwise_leq(F({{"0", "3"}}), F({{"0", "2"}})));
}
