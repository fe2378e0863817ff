// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ordwb/harness.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"
#include "ordwb/systems.hpp"
#include "transcript.hpp"

using namespace ordwb;

namespace {

constexpr double kLinearMs = 60e3;
constexpr double kHullMs = 120e3;
constexpr double kCollapseMs = 60e3;
constexpr double kDescentMs = 300e3;
constexpr double kLadderMs = 1e3;
constexpr std::uint64_t kMinRhos = 20;
constexpr std::uint64_t kMinPairs = 200;
constexpr std::uint64_t kMinStepInstances = 1000;
constexpr std::uint64_t kDescentTrials = 1000;
constexpr std::uint64_t kDescentFuel = 1000000;
constexpr unsigned kLadderTop = 8;

struct Line {
    bool ok = true;
    std::string detail;
    void add(const Report& r, double limit_ms) {
        const bool pass = r.passed() && r.elapsed_ms <= limit_ms;
        ok = ok && pass;
        if (!detail.empty())
            detail += "; ";
        detail += report_line(r);
        if (r.elapsed_ms > limit_ms)
            detail += " (over time)";
        if (!r.failures.empty())
            detail += " first: " + r.failures.front();
    }
    void check(bool cond, const std::string& what) {
        ok = ok && cond;
        if (!detail.empty())
            detail += "; ";
        detail += what + (cond ? " ok" : " FAILED");
    }
};

HarnessOptions at(std::uint64_t maxlen) {
    HarnessOptions o;
    o.budget.maxlen = maxlen;
    return o;
}

bool rejected_with(SystemId sys, const char* text, const std::string& rule) {
    Verdict v = validate(sys, parse(text, sys));
    if (v.ok)
        return false;
    for (auto& r : v.reason)
        if (r.rule == rule)
            return true;
    return false;
}

}  // namespace

int main() {
    std::vector<std::function<Line()>> criteria = {
        [] {
            Line l;
            l.add(check_linear_order(SystemId::bh(), at(5)), kLinearMs);
            l.add(check_linear_order(SystemId::pi3(), at(4)), kLinearMs);
            l.add(check_linear_order(SystemId::pi11(), at(4)), kLinearMs);
            l.add(check_linear_order(SystemId::stab(), at(4)), kLinearMs);
            return l;
        },
        [] {
            Line l;
            l.add(check_hull_equiv(SystemId::bh(), at(4)), kHullMs);
            l.add(check_hull_equiv(SystemId::pi3(), at(4)), kHullMs);
            return l;
        },
        [] {
            Line l;
            for (SystemId sys : {SystemId::pi11(), SystemId::stab()}) {
                HarnessOptions o = at(6);
                o.rho_count = kMinRhos;
                o.pairs_per_rho = kMinPairs;
                l.add(check_collapse_iso(sys, o), kCollapseMs);
            }
            return l;
        },
        [] {
            Line l;
            Report r = check_stepdown_props(at(5));
            l.add(r, 1e12);
            l.check(r.checked >= kMinStepInstances, "instances>=" + std::to_string(kMinStepInstances));
            return l;
        },
        [] {
            Line l;
            l.add(check_psi_monotone(at(5)), 1e12);
            return l;
        },
        [] {
            Line l;
            HarnessOptions o = at(5);
            o.trials = kDescentTrials;
            o.budget.fuel = kDescentFuel;
            l.add(check_descent_all(SystemId::bh(), o), kDescentMs);
            return l;
        },
        [] {
            Line l;
            l.check(rejected_with(SystemId::pi3(), "psi(K, 2; 1)", "pi3.nu-le-arg") &&
                        is_valid(SystemId::pi3(), parse("psi(K, 1; 1)", SystemId::pi3())),
                    "index above argument");
            l.check(rejected_with(SystemId::bh(), "psi(Om; psi(Om; Om))", "hull"), "redundant psi(Om; psi(Om; Om))");
            l.add(check_jumpover(at(6)), 1e12);
            auto cases = transcript::load(ORDWB_GOLDEN);
            std::size_t bad = 0;
            for (auto& c : cases) {
                auto got = transcript::run(c.command);
                if (got.out != c.expected || got.code != c.code) {
                    ++bad;
                    std::printf("  transcript mismatch: %s\n", c.command.c_str());
                }
            }
            l.check(!cases.empty() && bad == 0, std::to_string(cases.size()) + " transcripts");
            return l;
        },
        [] {
            Line l;
            for (SystemId sys : {SystemId::bh(), SystemId::pi3()})
                l.add(check_ladder(sys, kLadderTop), kLadderMs);
            return l;
        },
    };
    const char* names[] = {"linearity", "hull oracle",     "collapse isomorphism", "stepping-down",
                           "psi monotonicity", "descent", "validity gates",     "milestone ladder"};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        try {
            l = criteria[i]();
        } catch (const std::exception& e) {
            l.ok = false;
            l.detail = std::string("error: ") + e.what();
        }
        all = all && l.ok;
        std::printf("criterion %zu %s: %s  [%s]\n", i + 1, names[i], l.ok ? "PASS" : "FAIL", l.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
