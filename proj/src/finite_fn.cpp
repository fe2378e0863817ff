#include "ordwb/finite_fn.hpp"

#include <algorithm>

#include "ordwb/arith.hpp"
#include "ordwb/order.hpp"

namespace ordwb {

namespace {

OrdTerm omega() { return omega_pow(one()); }

bool key_less(const std::pair<OrdTerm, OrdTerm>& x, const std::pair<OrdTerm, OrdTerm>& y) {
    return cmp(x.first, y.first) < 0;
}

FiniteFn build(const FiniteFn& shape, std::vector<std::pair<OrdTerm, OrdTerm>> entries) {
    FiniteFn r;
    r.lam = shape.lam;
    r.entries = std::move(entries);
    return r;
}

// Keys of f and g that are >= b, ascending, without duplicates.
std::vector<OrdTerm> keys_from(const FiniteFn& f, const FiniteFn& g, OrdTerm b) {
    std::vector<OrdTerm> ks;
    for (auto* h : {&f, &g})
        for (auto& [k, v] : h->entries)
            if (cmp(k, b) >= 0)
                ks.push_back(k);
    std::sort(ks.begin(), ks.end(), [](OrdTerm x, OrdTerm y) { return cmp(x, y) < 0; });
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

OrdTerm shortest_segment_above(OrdTerm x, OrdTerm bound, ConstName lam) {
    auto segs = segments(x, lam);
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
        if (cmp(bound, *it) < 0)
            return *it;
    throw Error(ErrorCode::InvalidTerm, "no segment above the bound");
}

bool lex_rec(const FiniteFn& f, const FiniteFn& g, OrdTerm b) {
    const ConstName lam = f.lam;
    std::optional<OrdTerm> diff;
    for (auto& k : keys_from(f, g, b))
        if (f.at(k) != g.at(k)) {
            diff = k;
            break;
        }
    if (!diff)
        return false;
    const OrdTerm c = *diff;
    const OrdTerm fc = f.at(c), gc = g.at(c);
    if (cmp(fc, gc) < 0) {
        const OrdTerm mu = shortest_segment_above(gc, fc, lam);
        const OrdTerm tl = tail(mu, lam);
        for (auto& [k, v] : f.entries) {
            if (cmp(k, c) <= 0)
                continue;
            if (cmp(tl, theta_tilde(lsub(c, k), v, lam)) <= 0 && !lex_rec(f, g, k))
                return false;
        }
        return true;
    }
    const OrdTerm nu = shortest_segment_above(fc, gc, lam);
    const OrdTerm tl = tail(nu, lam);
    for (auto& [k, v] : g.entries) {
        if (cmp(k, c) <= 0)
            continue;
        if (cmp(tl, theta_tilde(lsub(c, k), v, lam)) <= 0 && lex_rec(f, g, k))
            return true;
    }
    return false;
}

bool same_entries(const std::vector<std::pair<OrdTerm, OrdTerm>>& x, std::size_t n,
                  const std::vector<std::pair<OrdTerm, OrdTerm>>& y) {
    if (n != y.size())
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != y[i])
            return false;
    return true;
}

}  // namespace

FiniteFn make_fn(std::vector<std::pair<OrdTerm, OrdTerm>> entries, ConstName lam) {
    FiniteFn f;
    f.lam = lam;
    for (auto& e : entries)
        if (!e.second.is_zero())
            f.entries.push_back(e);
    std::sort(f.entries.begin(), f.entries.end(), key_less);
    for (std::size_t i = 1; i < f.entries.size(); ++i)
        if (f.entries[i].first == f.entries[i - 1].first)
            throw Error(ErrorCode::InvalidTerm, "duplicate key in finite function");
    return f;
}

FiniteFn restrict_below(const FiniteFn& f, OrdTerm c) {
    std::vector<std::pair<OrdTerm, OrdTerm>> out;
    for (auto& e : f.entries)
        if (cmp(e.first, c) < 0)
            out.push_back(e);
    return build(f, std::move(out));
}

FiniteFn restrict_from(const FiniteFn& f, OrdTerm c) {
    std::vector<std::pair<OrdTerm, OrdTerm>> out;
    for (auto& e : f.entries)
        if (cmp(e.first, c) >= 0)
            out.push_back(e);
    return build(f, std::move(out));
}

FiniteFn concat(const FiniteFn& g, const FiniteFn& f, OrdTerm c) {
    auto out = restrict_below(g, c).entries;
    for (auto& e : restrict_from(f, c).entries)
        out.push_back(e);
    return build(f, std::move(out));
}

FiniteFn with_value(const FiniteFn& f, OrdTerm c, OrdTerm v) {
    std::vector<std::pair<OrdTerm, OrdTerm>> out;
    for (auto& e : f.entries)
        if (e.first != c)
            out.push_back(e);
    out.emplace_back(c, v);
    return make_fn(std::move(out), f.lam);
}

std::optional<OrdTerm> next_key(const FiniteFn& f, OrdTerm c) {
    for (auto& [k, v] : f.entries)
        if (cmp(c, k) < 0)
            return k;
    return std::nullopt;
}

std::optional<OrdTerm> prev_key(const FiniteFn& f, OrdTerm c) {
    std::optional<OrdTerm> r;
    for (auto& [k, v] : f.entries)
        if (cmp(k, c) < 0)
            r = k;
    return r;
}

OrdTerm max_key(const FiniteFn& f) {
    if (f.empty())
        throw Error(ErrorCode::ZeroArg, "empty finite function");
    return f.entries.back().first;
}

bool less_at(const FiniteFn& f, OrdTerm c, OrdTerm x) {
    if (restrict_from(f, c).empty())
        return true;
    if (x.is_zero())
        return false;
    const OrdTerm v = f.at(c);
    const auto nk = next_key(f, c);
    for (auto& mu : segments(x, f.lam)) {
        if (cmp(v, mu) >= 0)
            continue;
        if (!nk)
            return true;
        if (less_at(f, *nk, theta_tilde_inv(lsub(c, *nk), tail(mu, f.lam), f.lam)))
            return true;
    }
    return false;
}

bool is_special(const FiniteFn& f) {
    if (f.empty())
        return false;
    auto ps = parts_of(f.entries.back().second);
    const Part& last = ps.back();
    if (!last.prin.is_const(f.lam))
        return false;
    if (!last.coeff)
        return true;
    const Part& cl = parts_of(last.coeff).back();
    return cl.prin == one() && !cl.coeff;
}

FiniteFn prime(const FiniteFn& f) {
    if (!is_special(f))
        throw Error(ErrorCode::NotSpecial, "finite function is not special");
    auto ps = parts_of(f.entries.back().second);
    Part& last = ps.back();
    if (!last.coeff) {
        last.count -= 1;
    } else {
        auto cp = parts_of(last.coeff);
        cp.back().count -= 1;
        last.coeff = mk_sum(std::move(cp));
        last.count = 1;
    }
    auto out = f.entries;
    out.back().second = mk_sum(std::move(ps));
    return make_fn(std::move(out), f.lam);
}

namespace {

// alpha_0 of the step-down recursion.
OrdTerm step_down_base(const FiniteFn& g, OrdTerm b, OrdTerm a) {
    if (!is_special(g))
        throw Error(ErrorCode::NotSpecial, "step-down needs a special function");
    const OrdTerm cmax = max_key(g);
    if (cmp(b, cmax) >= 0)
        throw Error(ErrorCode::BadCut, "cut point must lie below the top key");
    std::vector<OrdTerm> bs{b};
    for (auto& [k, v] : g.entries)
        if (cmp(b, k) < 0)
            bs.push_back(k);
    OrdTerm alpha = add(prime(g).at(cmax), a);
    for (std::size_t i = bs.size() - 1; i-- > 0;)
        alpha = add(g.at(bs[i]), theta_tilde(lsub(bs[i], bs[i + 1]), alpha, g.lam));
    return alpha;
}

}  // namespace

FiniteFn step_down(const FiniteFn& g, OrdTerm b, OrdTerm a) {
    const OrdTerm alpha = step_down_base(g, b, a);
    auto out = restrict_below(g, b).entries;
    out.emplace_back(b, add(alpha, constant(g.lam)));
    return make_fn(std::move(out), g.lam);
}

FiniteFn step_down_base_fn(const FiniteFn& g, OrdTerm b, OrdTerm a) {
    const OrdTerm alpha = step_down_base(g, b, a);
    auto out = restrict_below(g, b).entries;
    out.emplace_back(b, alpha);
    return make_fn(std::move(out), g.lam);
}

bool is_irreducible(const FiniteFn& f) {
    if (f.size() <= 1)
        return true;
    const auto& [c, fc] = f.entries[f.size() - 2];
    const auto& [k, fk] = f.entries.back();
    const OrdTerm t = theta_tilde(lsub(c, k), fk, f.lam);
    if (cmp(tail(fc, f.lam), t) <= 0)
        return false;
    std::vector<std::pair<OrdTerm, OrdTerm>> out(f.entries.begin(), f.entries.end() - 2);
    out.emplace_back(c, add(fc, t));
    return is_irreducible(build(f, std::move(out)));
}

bool lex_less(const FiniteFn& f, const FiniteFn& g, OrdTerm b) {
    if (!is_irreducible(f) || !is_irreducible(g))
        throw Error(ErrorCode::NotIrreducible, "lexicographic order needs irreducible functions");
    return lex_rec(f, g, b);
}

bool pointwise_leq(const FiniteFn& f, const FiniteFn& g) {
    for (auto& k : keys_from(f, g, zero()))
        if (cmp(f.at(k), g.at(k)) > 0)
            return false;
    return true;
}

bool coefficients_ok(const FiniteFn& f) {
    for (auto& [k, v] : f.entries) {
        auto lp = lam_parts(v, f.lam);
        for (std::size_t i = 0; i < lp.size(); ++i) {
            if (lp[i].coeff == one())
                continue;
            if (i + 1 != lp.size())
                return false;
            const OrdTerm p = lp[i].prin;
            const bool unit_sub = p == one() || p.is_const(f.lam) || p->a == one();
            if (!unit_sub)
                return false;
        }
    }
    return true;
}

bool derived_from(const FiniteFn& f, const FiniteFn& g) {
    const ConstName lam = f.lam;
    for (auto& [c, fc] : f.entries) {
        if (!less_at(g, c, fc))
            continue;
        const auto gb = restrict_below(g, c).entries;
        const auto fb = restrict_below(f, c).entries;
        const auto p = prev_key(f, c);
        auto room = [&](OrdTerm d) {
            return lam_mul(theta_tilde(lsub(d, c), fc, lam), omega(), lam);
        };
        if (p) {
            const auto fp = restrict_below(f, *p).entries;
            bool shape = same_entries(gb, gb.size(), fp) ||
                         (gb.size() == fp.size() + 1 && gb.back().first == *p && same_entries(gb, fp.size(), fp));
            if (shape && cmp(g.at(*p), add(f.at(*p), room(*p))) < 0)
                return true;
            if (gb.size() == fb.size() + 1 && same_entries(gb, fb.size(), fb) &&
                cmp(gb.back().second, room(gb.back().first)) < 0)
                return true;
        } else {
            if (gb.empty() && !c.is_zero())
                return true;
            if (gb.size() == 1 && cmp(gb[0].second, room(gb[0].first)) < 0)
                return true;
        }
    }
    return false;
}

}  // namespace ordwb
