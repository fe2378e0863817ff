#include "ordwb/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ordwb/arith.hpp"
#include "ordwb/collapse.hpp"
#include "ordwb/finite_fn.hpp"
#include "ordwb/hull.hpp"
#include "ordwb/order.hpp"
#include "ordwb/parse.hpp"

namespace ordwb {

namespace {

using Clock = std::chrono::steady_clock;
using TermSet = std::unordered_set<OrdTerm, OrdTermHash>;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Runs body(i, local) for i < n and merges the locals in index order, so the
// result does not depend on scheduling.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Report& rep, Body&& body) {
    std::vector<Report> locals(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            body(static_cast<std::size_t>(i), locals[static_cast<std::size_t>(i)]);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            body(i, locals[i]);
    }
    for (auto& l : locals)
        rep.merge(l);
}

std::string tuple(std::initializer_list<OrdTerm> ts) {
    std::string s;
    for (auto& t : ts) {
        if (!s.empty())
            s += " | ";
        s += render(t);
    }
    return s;
}

std::string fn_text(const FiniteFn& f) { return f.empty() ? "{}" : render_index(PsiIndex::of_fn(f)); }

std::vector<OrdTerm> universe(SystemId sys, const Budget& b, Report& rep) {
    try {
        auto u = enumerate(sys, b);
        rep.universe_size = u.size();
        return u;
    } catch (const Error& e) {
        rep.fail(std::string("enumeration: ") + e.what());
        return {};
    }
}

// c is in the set, or lies outside the ordinary universe and is built from members.
bool member(OrdTerm c, const TermSet& in, const TermSet& uni) {
    if (in.count(c))
        return true;
    if (uni.count(c))
        return false;
    if (c.kind() == Kind::Zero || c.kind() == Kind::Const)
        return true;
    for (auto& d : children(c))
        if (!member(d, in, uni))
            return false;
    return true;
}

std::vector<OrdTerm> closure_over(const std::vector<OrdTerm>& uni, OrdTerm alpha, const std::vector<OrdTerm>& X,
                                  SystemId sys) {
    TermSet all(uni.begin(), uni.end());
    std::vector<OrdTerm> cand = uni;
    TermSet in;
    for (auto& c : system_constants(sys))
        in.insert(c);
    for (auto& x : X) {
        if (!all.count(x)) {
            all.insert(x);
            cand.push_back(x);
        }
        if (cmp(x, alpha) < 0)
            in.insert(x);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& t : cand) {
            if (in.count(t) || t.kind() == Kind::Zero || t.kind() == Kind::Const)
                continue;
            if (t.kind() == Kind::Psi && cmp(t->a, alpha) <= 0)
                continue;
            bool ok = true;
            for (auto& c : children(t))
                if (!member(c, in, all)) {
                    ok = false;
                    break;
                }
            if (ok) {
                in.insert(t);
                grew = true;
            }
        }
    }
    std::vector<OrdTerm> out;
    for (auto& t : cand)
        if (in.count(t))
            out.push_back(t);
    sort_terms(out);
    return out;
}

bool subset(const std::vector<OrdTerm>& a, const std::vector<OrdTerm>& b) {
    TermSet sb(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](OrdTerm x) { return sb.count(x) > 0; });
}

OrdTerm big() { return constant(ConstName::BigK); }

// Special finite functions over the fixed pools, |supp| <= 2.
struct StepPools {
    std::vector<OrdTerm> keys;
    std::vector<OrdTerm> values;
    std::vector<OrdTerm> small;  // the a, a0, a1 arguments
    std::vector<FiniteFn> specials;
};

StepPools step_pools() {
    StepPools p;
    for (const char* s : {"0", "1", "2", "w", "psi(Om; 0)", "Om"})
        p.keys.push_back(parse(s));
    for (const char* s : {"1", "w", "K", "K + w", "K * 2", "t~(1, 2)"})
        p.values.push_back(parse(s));
    for (const char* s : {"0", "1", "2", "w"})
        p.small.push_back(parse(s));
    std::vector<OrdTerm> tops;
    for (auto& v : p.values) {
        OrdTerm t = add(v, big());
        if (std::find(tops.begin(), tops.end(), t) == tops.end())
            tops.push_back(t);
    }
    if (std::find(tops.begin(), tops.end(), big()) == tops.end())
        tops.insert(tops.begin(), big());
    for (std::size_t i = 0; i < p.keys.size(); ++i)
        for (auto& t : tops)
            p.specials.push_back(make_fn({{p.keys[i], t}}));
    for (std::size_t i = 0; i < p.keys.size(); ++i)
        for (std::size_t j = i + 1; j < p.keys.size(); ++j)
            for (auto& v : p.values)
                for (auto& t : tops)
                    p.specials.push_back(make_fn({{p.keys[i], v}, {p.keys[j], t}}));
    return p;
}

std::vector<OrdTerm> collapse_rhos(SystemId sys, std::size_t want) {
    std::vector<OrdTerm> out;
    std::vector<OrdTerm> roots;
    if (sys.kind == SystemId::Kind::Pi11)
        roots.push_back(constant(ConstName::BigS));
    else
        roots = {parse("dag(Om)", sys), parse("dag(dag(Om))", sys)};
    const char* keys[] = {"0", "1", "Om"};
    const char* vals[] = {"1", "2", "w", "Om", "K"};
    const char* args[] = {"0", "1", "Om", "Om + 1"};
    for (auto& root : roots)
        for (auto* a : args)
            for (auto* k : keys)
                for (auto* v : vals) {
                    const std::string lam = sys.kind == SystemId::Kind::Stab ? "I" : "K";
                    const std::string val = std::string(v) == "K" ? lam : v;
                    OrdTerm t;
                    try {
                        t = mk_psi(root, parse(std::string("psi(Om, {") + k + ": " + val + "}; 0)", sys)->index,
                                   parse(a, sys));
                    } catch (const Error&) {
                        continue;
                    }
                    if (is_valid(sys, t) && std::find(out.begin(), out.end(), t) == out.end())
                        out.push_back(t);
                }
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i)
        for (const char* a : {"0", "Om"}) {
            OrdTerm t = mk_psi(out[i], PsiIndex::none(), parse(a, sys));
            if (is_valid(sys, t))
                out.push_back(t);
        }
    sort_terms(out);
    if (out.size() > want) {
        std::vector<OrdTerm> pick;
        for (std::size_t i = 0; i < want; ++i)
            pick.push_back(out[i * out.size() / want]);
        out = pick;
    }
    return out;
}

}  // namespace

void Report::fail(std::string what) {
    ++failure_count;
    if (failures.size() < kMaxListed)
        failures.push_back(std::move(what));
}

void Report::merge(const Report& o) {
    checked += o.checked;
    failure_count += o.failure_count;
    for (auto& f : o.failures)
        if (failures.size() < kMaxListed)
            failures.push_back(f);
    max_chain = std::max(max_chain, o.max_chain);
}

std::string report_line(const Report& r) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    return r.suite + ", " + std::to_string(r.universe_size) + ", " + std::to_string(r.failure_count) + ", " + ms;
}

std::vector<OrdTerm> closure_c(OrdTerm alpha, const std::vector<OrdTerm>& X, SystemId sys, const Budget& budget) {
    return closure_over(enumerate(sys, budget), alpha, X, sys);
}

Report check_linear_order_on(const std::vector<OrdTerm>& u, Exec exec) {
    Report rep;
    rep.suite = "linear";
    rep.universe_size = u.size();
    const std::size_t n = u.size();
    std::vector<std::int8_t> M(n * n, 0);
    std::vector<std::uint8_t> bad(n * n, 0);
    for_each_index(n, exec, rep, [&](std::size_t i, Report& loc) {
        for (std::size_t j = 0; j < n; ++j) {
            try {
                M[i * n + j] = static_cast<std::int8_t>(cmp(u[i], u[j]));
            } catch (const Error& e) {
                bad[i * n + j] = 1;
                loc.fail("incomparable: " + tuple({u[i], u[j]}) + ": " + e.what());
            }
            ++loc.checked;
        }
        if (u[i].kind() == Kind::Psi) {
            try {
                if (cmp(u[i], u[i]->a) >= 0)
                    loc.fail("psi not below its subscript: " + render(u[i]));
            } catch (const Error& e) {
                loc.fail("psi vs subscript: " + render(u[i]) + ": " + e.what());
            }
        }
    });
    for_each_index(n, exec, rep, [&](std::size_t i, Report& loc) {
        for (std::size_t j = 0; j < n; ++j) {
            if (bad[i * n + j] || bad[j * n + i])
                continue;
            const int c = M[i * n + j];
            if (c != -M[j * n + i] || (c == 0) != (i == j))
                loc.fail("trichotomy: " + tuple({u[i], u[j]}));
        }
    });
    if (n <= 2000) {
        const std::size_t words = (n + 63) / 64;
        std::vector<std::uint64_t> above(n * words, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!bad[i * n + k] && M[i * n + k] < 0)
                    above[i * words + k / 64] |= 1ull << (k % 64);
        for_each_index(n, exec, rep, [&](std::size_t i, Report& loc) {
            for (std::size_t j = 0; j < n; ++j) {
                if (bad[i * n + j] || M[i * n + j] >= 0)
                    continue;
                loc.checked += n;
                for (std::size_t w = 0; w < words; ++w) {
                    const std::uint64_t miss = above[j * words + w] & ~above[i * words + w];
                    if (miss) {
                        const std::size_t k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(miss));
                        loc.fail("transitivity: " + tuple({u[i], u[j], u[k]}));
                        break;
                    }
                }
            }
        });
    } else {
        const std::size_t batches = 100, per = 1000;
        for_each_index(batches, exec, rep, [&](std::size_t b, Report& loc) {
            std::mt19937_64 rng(mix_seed(1, b));
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (std::size_t t = 0; t < per; ++t) {
                const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
                if (bad[i * n + j] || bad[j * n + k] || bad[i * n + k])
                    continue;
                ++loc.checked;
                if (M[i * n + j] < 0 && M[j * n + k] < 0 && M[i * n + k] >= 0)
                    loc.fail("transitivity: " + tuple({u[i], u[j], u[k]}));
            }
        });
    }
    return rep;
}

Report check_linear_order(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report pre;
    auto u = universe(sys, opt.budget, pre);
    Report rep = check_linear_order_on(u, opt.exec);
    rep.merge(pre);
    for (auto& t : u) {
        const Verdict v = validate(sys, t);
        if (!v.ok)
            rep.fail("enumerated term fails validation: " + render(t));
    }
    rep.suite = "linear/" + sys.name();
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_hull_equiv(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "hull/" + sys.name();
    auto u = universe(sys, opt.budget, rep);
    const std::size_t n = u.size();
    for_each_index(n * n, opt.exec, rep, [&](std::size_t idx, Report& loc) {
        const OrdTerm a = u[idx / n], delta = u[idx % n];
        std::vector<OrdTerm> gens;
        for (auto& x : u)
            if (cmp(x, delta) < 0)
                gens.push_back(x);
        auto hc = hull_closure(u, gens, a, sys);
        TermSet in(hc.begin(), hc.end());
        for (auto& t : u) {
            ++loc.checked;
            const bool fast = in_hull(t, a, delta);
            if (fast != (in.count(t) > 0)) {
                loc.fail("in_hull vs closure: " + tuple({t, a, delta}));
                continue;
            }
            const auto ks = k_set(delta, t);
            const bool kchar = std::all_of(ks.begin(), ks.end(), [&](OrdTerm k) { return cmp(k, a) < 0; });
            if (fast != kchar)
                loc.fail("in_hull vs K-set: " + tuple({t, a, delta}));
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_collapse_iso(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "collapse/" + sys.name();
    auto u = universe(sys, opt.budget, rep);
    auto rhos = collapse_rhos(sys, opt.rho_count);
    if (rhos.size() < opt.rho_count)
        rep.fail("only " + std::to_string(rhos.size()) + " collapsing points available");
    for_each_index(rhos.size(), opt.exec, rep, [&](std::size_t r, Report& loc) {
        const OrdTerm rho = rhos[r];
        std::vector<OrdTerm> dom, img;
        for (auto& t : u) {
            if (!in_domain(sys, t, rho))
                continue;
            try {
                OrdTerm c = collapse(sys, t, rho);
                dom.push_back(t);
                img.push_back(c);
                ++loc.checked;
                OrdTerm back = uncollapse(sys, c, rho);
                if (back != t)
                    loc.fail("round trip: " + tuple({t, rho, back}));
            } catch (const Error& e) {
                loc.fail("collapse: " + tuple({t, rho}) + ": " + e.what());
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = i + 1; j < dom.size(); ++j)
                pairs.emplace_back(i, j);
        if (pairs.size() < opt.pairs_per_rho)
            loc.fail("only " + std::to_string(pairs.size()) + " in-domain pairs for " + render(rho));
        for (auto [i, j] : pairs) {
            ++loc.checked;
            try {
                if (cmp(dom[i], dom[j]) != cmp(img[i], img[j]))
                    loc.fail("order not preserved: " + tuple({dom[i], dom[j], rho}));
            } catch (const Error& e) {
                loc.fail("compare: " + tuple({dom[i], dom[j], rho}) + ": " + e.what());
            }
        }
        try {
            if (in_domain(sys, rho, rho))
                loc.fail("rho in its own domain: " + render(rho));
            if (uncollapse(sys, rho, rho) != collapse_target(sys, rho))
                loc.fail("rho does not uncollapse to its root: " + render(rho));
        } catch (const Error& e) {
            loc.fail("rho: " + render(rho) + ": " + e.what());
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_collapse_valid(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "collapse-valid/" + sys.name();
    auto u = universe(sys, opt.budget, rep);
    auto rhos = collapse_rhos(sys, opt.rho_count);
    for_each_index(rhos.size(), opt.exec, rep, [&](std::size_t r, Report& loc) {
        const OrdTerm rho = rhos[r];
        for (auto& t : u) {
            if (!in_domain(sys, t, rho))
                continue;
            ++loc.checked;
            try {
                OrdTerm c = collapse(sys, t, rho);
                Verdict v = validate(sys, c);
                if (!v.ok)
                    loc.fail("collapsed term invalid (" + v.reason[0].rule + " at " + v.reason[0].path +
                             "): " + tuple({t, rho, c}));
            } catch (const Error& e) {
                loc.fail("collapse: " + tuple({t, rho}) + ": " + e.what());
            }
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_stepdown_props(const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "stepdown";
    const StepPools P = step_pools();
    rep.universe_size = P.specials.size();
    const std::size_t n = P.specials.size();
    for_each_index(n, opt.exec, rep, [&](std::size_t gi, Report& loc) {
        const FiniteFn& g = P.specials[gi];
        const OrdTerm cmax = max_key(g);
        // Law 1: h^b(h^e(g;a0);a1) <= (h^b(g;a))', the prime taken as alpha_0.
        for (auto& b : P.keys)
            for (auto& e : P.keys) {
                if (cmp(b, e) >= 0 || cmp(e, cmax) >= 0)
                    continue;
                for (auto& a : P.small)
                    for (auto& a0 : P.small)
                        for (auto& a1 : P.small) {
                            if (cmp(a0, a) >= 0 || cmp(a1, a) >= 0)
                                continue;
                            ++loc.checked;
                            try {
                                const FiniteFn lhs = step_down(step_down(g, e, a0), b, a1);
                                const FiniteFn rhs = step_down_base_fn(g, b, a);
                                if (!pointwise_leq(lhs, rhs))
                                    loc.fail("law 1: g=" + fn_text(g) + " b=" + render(b) + " e=" + render(e) +
                                             " a=" + render(a) + " a0=" + render(a0) + " a1=" + render(a1));
                            } catch (const Error& ex) {
                                loc.fail("law 1 error: g=" + fn_text(g) + ": " + ex.what());
                            }
                        }
            }
        // Law 2: f <^d g'(d), f_d = g_d, b < d  =>  f_b = h_b and f <^b h'(b).
        const FiniteFn gp = prime(g);
        for (auto& [d, gd] : g.entries) {
            for (auto& f : P.specials) {
                if (restrict_below(f, d).entries != restrict_below(g, d).entries)
                    continue;
                bool hyp;
                try {
                    hyp = less_at(f, d, gp.at(d));
                } catch (const Error& ex) {
                    loc.fail("law 2 hypothesis error: f=" + fn_text(f) + " g=" + fn_text(g) + ": " + ex.what());
                    continue;
                }
                if (!hyp)
                    continue;
                for (auto& b : P.keys) {
                    if (cmp(b, d) >= 0)
                        continue;
                    for (auto& a : P.small) {
                        ++loc.checked;
                        try {
                            const FiniteFn h = step_down(g, b, a);
                            const bool same = restrict_below(f, b).entries == restrict_below(h, b).entries;
                            if (!same || !less_at(f, b, step_down_base_fn(g, b, a).at(b)))
                                loc.fail("law 2: f=" + fn_text(f) + " g=" + fn_text(g) + " d=" + render(d) +
                                         " b=" + render(b) + " a=" + render(a));
                        } catch (const Error& ex) {
                            loc.fail("law 2 error: f=" + fn_text(f) + " g=" + fn_text(g) + ": " + ex.what());
                        }
                    }
                }
            }
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_psi_monotone(const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    const SystemId sys = SystemId::bh();
    Report rep;
    rep.suite = "psi-mono/bh";
    auto u = universe(sys, opt.budget, rep);
    const OrdTerm om = constant(ConstName::Omega);
    std::vector<OrdTerm> args, psis;
    for (auto& a : u) {
        OrdTerm p = mk_psi(om, PsiIndex::none(), a);
        if (is_valid(sys, p)) {
            args.push_back(a);
            psis.push_back(p);
        }
    }
    const std::size_t n = args.size();
    for_each_index(n, opt.exec, rep, [&](std::size_t i, Report& loc) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            ++loc.checked;
            try {
                if ((cmp(args[i], args[j]) < 0) != (cmp(psis[i], psis[j]) < 0))
                    loc.fail("psi monotonicity: " + tuple({args[i], args[j]}));
            } catch (const Error& e) {
                loc.fail("psi monotonicity: " + tuple({args[i], args[j]}) + ": " + e.what());
            }
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_closure_antitone(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "closure/" + sys.name();
    auto u = universe(sys, opt.budget, rep);
    if (u.empty())
        return rep;
    // Generator sets X with gamma in C^gamma(X) for every gamma in X.
    std::vector<std::vector<OrdTerm>> xs{{}};
    std::mt19937_64 rng(opt.budget.seed);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    for (int tries = 0; tries < 200 && xs.size() < 12; ++tries) {
        std::vector<OrdTerm> X{u[pick(rng)], u[pick(rng)]};
        bool ok = true;
        for (auto& g : X) {
            auto c = closure_over(u, g, X, sys);
            ok = ok && std::find(c.begin(), c.end(), g) != c.end();
        }
        if (ok)
            xs.push_back(X);
    }
    std::vector<OrdTerm> alphas;
    for (std::size_t i = 0; i < u.size(); i += std::max<std::size_t>(1, u.size() / 12))
        alphas.push_back(u[i]);
    for_each_index(xs.size(), opt.exec, rep, [&](std::size_t xi, Report& loc) {
        std::vector<std::vector<OrdTerm>> cs;
        for (auto& a : alphas)
            cs.push_back(closure_over(u, a, xs[xi], sys));
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (std::size_t j = 0; j < alphas.size(); ++j) {
                if (cmp(alphas[i], alphas[j]) > 0)
                    continue;
                ++loc.checked;
                if (!subset(cs[j], cs[i]))
                    loc.fail("C^beta not inside C^alpha: " + tuple({alphas[i], alphas[j]}));
            }
        for (std::size_t i = 0; i < alphas.size(); ++i)
            for (auto& t : cs[i])
                if (t.kind() == Kind::Psi && cmp(t->a, alphas[i]) <= 0 &&
                    std::find(xs[xi].begin(), xs[xi].end(), t) == xs[xi].end())
                    loc.fail("psi with subscript <= alpha in closure: " + tuple({t, alphas[i]}));
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_jumpover(const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    const SystemId sys = SystemId::stab();
    Report rep;
    rep.suite = "jumpover/stab";
    auto u = universe(sys, opt.budget, rep);
    std::vector<OrdTerm> psis;
    for (auto& t : u)
        if (t.kind() == Kind::Psi)
            psis.push_back(t);
    for_each_index(u.size(), opt.exec, rep, [&](std::size_t i, Report& loc) {
        const OrdTerm rho = u[i];
        if (rho.is_zero())
            return;
        const OrdTerm rd = dagger(rho);
        for (auto& p : psis) {
            ++loc.checked;
            try {
                if (cmp(rho, p) < 0 && cmp(p, rd) <= 0 && cmp(rd, p->a) < 0)
                    loc.fail("jump over: " + tuple({rho, p}));
            } catch (const Error& e) {
                loc.fail("jump over: " + tuple({rho, p}) + ": " + e.what());
            }
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_stab_chain(const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    const SystemId sys = SystemId::stab();
    Report rep;
    rep.suite = "stab-chain";
    auto u = universe(sys, opt.budget, rep);
    for_each_index(u.size(), opt.exec, rep, [&](std::size_t i, Report& loc) {
        const OrdTerm t = u[i];
        if (t.kind() != Kind::Psi || t->a.kind() != Kind::Dagger)
            return;
        const OrdTerm sigma = t->a, rho = sigma->a;
        ++loc.checked;
        try {
            const OrdTerm top = iof(rho);
            if (!(cmp(rho, t) < 0 && cmp(t, sigma) < 0 && cmp(sigma, top) < 0))
                loc.fail("chain rho < psi < rho-dagger < I[rho]: " + tuple({rho, t}));
        } catch (const Error& e) {
            loc.fail("chain: " + render(t) + ": " + e.what());
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<OrdTerm> milestone_ladder(SystemId sys, unsigned n_max) {
    const OrdTerm c = sys.kind == SystemId::Kind::BH ? constant(ConstName::Omega) : big();
    const OrdTerm base = add(c, one());
    std::vector<OrdTerm> out;
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(mk_psi(constant(ConstName::Omega), PsiIndex::none(), omega_tower(n, base)));
    return out;
}

Report check_ladder(SystemId sys, unsigned n_max) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "ladder/" + sys.name();
    auto lad = milestone_ladder(sys, n_max);
    rep.universe_size = lad.size();
    const OrdTerm om = constant(ConstName::Omega);
    for (std::size_t i = 0; i < lad.size(); ++i) {
        rep.checked += 3;
        if (!is_valid(sys, lad[i]))
            rep.fail("invalid: " + render(lad[i]));
        if (cmp(lad[i], om) >= 0)
            rep.fail("not below Om: " + render(lad[i]));
        if (i > 0 && cmp(lad[i - 1], lad[i]) >= 0)
            rep.fail("not increasing: " + tuple({lad[i - 1], lad[i]}));
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report check_descent(SystemId sys, OrdTerm start, Stepper stepper, std::uint64_t fuel, std::uint64_t seed,
                     const std::vector<OrdTerm>& uni) {
    (void)sys;
    Report rep;
    rep.suite = stepper == Stepper::MaxSubterm ? "descent-subterm" : "descent-random";
    rep.universe_size = uni.size();
    std::mt19937_64 rng(seed);
    OrdTerm cur = start;
    std::uint64_t steps = 0;
    std::vector<OrdTerm> cands;
    while (true) {
        cands.clear();
        if (stepper == Stepper::MaxSubterm) {
            for (auto& s : subterms(cur))
                if (s != cur && cmp(s, cur) < 0)
                    cands.push_back(s);
            if (!cands.empty()) {
                OrdTerm best = cands[0];
                for (auto& s : cands)
                    if (cmp(best, s) < 0)
                        best = s;
                cands = {best};
            }
        } else {
            for (auto& s : uni)
                if (cmp(s, cur) < 0)
                    cands.push_back(s);
        }
        if (cands.empty())
            break;
        if (steps == fuel) {
            rep.fail("FuelExhausted from " + render(start));
            break;
        }
        OrdTerm next = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
        ++steps;
        ++rep.checked;
        if (cmp(next, cur) >= 0) {
            rep.fail("step does not descend: " + tuple({cur, next}));
            break;
        }
        cur = next;
    }
    rep.max_chain = steps;
    return rep;
}

Report check_descent_all(SystemId sys, const HarnessOptions& opt) {
    const auto t0 = Clock::now();
    Report rep;
    rep.suite = "descent/" + sys.name();
    auto u = universe(sys, opt.budget, rep);
    for_each_index(u.size(), opt.exec, rep, [&](std::size_t i, Report& loc) {
        try {
            loc.merge(check_descent(sys, u[i], Stepper::MaxSubterm, opt.budget.fuel, 0, u));
            for (std::uint64_t k = 0; k < opt.trials; ++k)
                loc.merge(check_descent(sys, u[i], Stepper::RandomSmaller, opt.budget.fuel,
                                        mix_seed(opt.budget.seed, i * opt.trials + k), u));
        } catch (const Error& e) {
            loc.fail("descent: " + render(u[i]) + ": " + e.what());
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"linear",  "hull",     "collapse",   "collapse-valid",
                                                "stepdown", "psi-mono", "descent",    "closure",
                                                "jumpover", "stab-chain", "ladder"};
    return names;
}

Report run_suite(const std::string& name, SystemId sys, const HarnessOptions& opt) {
    if (name == "linear")
        return check_linear_order(sys, opt);
    if (name == "hull")
        return check_hull_equiv(sys, opt);
    if (name == "collapse")
        return check_collapse_iso(sys, opt);
    if (name == "collapse-valid")
        return check_collapse_valid(sys, opt);
    if (name == "stepdown")
        return check_stepdown_props(opt);
    if (name == "psi-mono")
        return check_psi_monotone(opt);
    if (name == "descent")
        return check_descent_all(sys, opt);
    if (name == "closure")
        return check_closure_antitone(sys, opt);
    if (name == "jumpover")
        return check_jumpover(opt);
    if (name == "stab-chain")
        return check_stab_chain(opt);
    if (name == "ladder")
        return check_ladder(sys, 8);
    throw Error(ErrorCode::InvalidTerm, "unknown suite: " + name);
}

}  // namespace ordwb
