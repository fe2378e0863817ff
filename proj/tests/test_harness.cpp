#include <doctest.h>

#include <algorithm>

#include "ordwb/harness.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"

using namespace ordwb;

namespace {
HarnessOptions opts(std::uint64_t maxlen, Exec exec) {
    HarnessOptions o;
    o.budget.maxlen = maxlen;
    o.exec = exec;
    o.trials = 20;
    return o;
}
}

TEST_CASE("serial and parallel kernels agree") {
    for (const char* s : {"linear", "hull", "psi-mono", "descent"}) {
        Report a = run_suite(s, SystemId::bh(), opts(4, Exec::Serial));
        Report b = run_suite(s, SystemId::bh(), opts(4, Exec::Parallel));
        CHECK(a.universe_size == b.universe_size);
        CHECK(a.checked == b.checked);
        CHECK(a.failure_count == b.failure_count);
        CHECK(a.failures == b.failures);
        CHECK(a.passed());
    }
}

TEST_CASE("report line") {
    Report r;
    r.suite = "x";
    r.universe_size = 3;
    r.elapsed_ms = 1.25;
    r.fail("bad");
    CHECK(report_line(r) == "x, 3, 1, 1.2");
    Report q;
    q.merge(r);
    q.merge(r);
    CHECK(q.failure_count == 2);
    CHECK(q.failures.size() == 2);
}

TEST_CASE("linear order detects a broken corpus") {
    std::vector<OrdTerm> u{parse("0"), parse("1"), parse("Om"), parse("1")};
    Report r = check_linear_order_on(u, Exec::Serial);
    CHECK_FALSE(r.passed());
}

TEST_CASE("closure is antitone in alpha") {
    Budget b;
    b.maxlen = 4;
    const SystemId sys = SystemId::bh();
    auto big = closure_c(zero(), {}, sys, b);
    auto small = closure_c(parse("psi(Om; Om)"), {}, sys, b);
    CHECK(small.size() <= big.size());
    for (auto& t : small)
        CHECK(std::find(big.begin(), big.end(), t) != big.end());
}

TEST_CASE("descent terminates under fuel") {
    Budget b;
    b.maxlen = 4;
    auto u = enumerate(SystemId::bh(), b);
    Report r = check_descent(SystemId::bh(), parse("psi(Om; Om * 2)"), Stepper::RandomSmaller, 1000, 7, u);
    CHECK(r.passed());
    CHECK(r.max_chain >= 1);
    Report z = check_descent(SystemId::bh(), parse("psi(Om; Om * 2)"), Stepper::MaxSubterm, 1000, 7, u);
    CHECK(z.passed());
}

TEST_CASE("ladder") {
    auto lad = milestone_ladder(SystemId::pi3(), 3);
    REQUIRE(lad.size() == 4);
    CHECK(check_ladder(SystemId::pi3(), 8).passed());
    CHECK(check_ladder(SystemId::bh(), 8).passed());
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SystemId::bh(), {}), Error); }
