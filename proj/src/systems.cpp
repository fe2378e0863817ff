#include "ordwb/systems.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "ordwb/arith.hpp"
#include "ordwb/finite_fn.hpp"
#include "ordwb/hull.hpp"
#include "ordwb/order.hpp"

namespace ordwb {

namespace {

using SK = SystemId::Kind;

enum class Ctx { Ord, Lam };

bool has_lam_world(SystemId sys) { return sys.kind == SK::PiN || sys.kind == SK::Pi11 || sys.kind == SK::Stab; }

bool kind_legal(SystemId sys, OrdTerm t) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Sum:
    case Kind::Veblen:
    case Kind::Psi:
        return true;
    case Kind::Const:
        switch (t->cname) {
        case ConstName::Omega: return true;
        case ConstName::BigK: return sys.kind == SK::Pi3 || sys.kind == SK::PiN || sys.kind == SK::Pi11;
        case ConstName::BigS: return sys.kind == SK::Pi11;
        case ConstName::BigI: return sys.kind == SK::Stab;
        }
        return false;
    case Kind::Theta:
        return has_lam_world(sys) && t->cname == sys.lambda();
    case Kind::NextReg:
        return sys.kind == SK::Pi11;
    case Kind::Dagger:
    case Kind::IOf:
        return sys.kind == SK::Stab;
    }
    return false;
}

bool index_legal(SystemId sys, const PsiIndex& idx) {
    using Tag = PsiIndex::Tag;
    switch (idx.tag) {
    case Tag::None: return true;
    case Tag::Ord: return sys.kind == SK::Pi3;
    case Tag::Vec: return sys.kind == SK::PiN && static_cast<int>(idx.vec.size()) == sys.n - 2;
    case Tag::Fn: return (sys.kind == SK::Pi11 || sys.kind == SK::Stab) && idx.fn.lam == sys.lambda();
    }
    return false;
}

bool is_psi(OrdTerm t) { return t.kind() == Kind::Psi; }

// psi term whose subscript chain reaches S.
bool in_psi_s(OrdTerm t) {
    while (is_psi(t)) {
        if (t->a.is_const(ConstName::BigS))
            return true;
        t = t->a;
    }
    return false;
}

// psi term whose subscript chain reaches a successor stable.
bool in_psi_sst(OrdTerm t) {
    while (is_psi(t)) {
        if (t->a.kind() == Kind::Dagger)
            return true;
        t = t->a;
    }
    return false;
}

OrdTerm eps_after(OrdTerm k) { return veblen(one(), add(k, one())); }

std::vector<OrdTerm> vec_of(const PsiIndex& idx, int n) {
    if (idx.tag == PsiIndex::Tag::Vec)
        return idx.vec;
    return std::vector<OrdTerm>(static_cast<std::size_t>(n), zero());
}

bool all_zero(const std::vector<OrdTerm>& v) {
    return std::all_of(v.begin(), v.end(), [](OrdTerm x) { return x.is_zero(); });
}

// nu = (xi_2..xi_{k-1}, xi_k + Lambda^{xi_{k+1}} c, 0...) with the sum dotted.
bool pin_step_rule(const std::vector<OrdTerm>& nu, const std::vector<OrdTerm>& xi, ConstName lam) {
    const std::size_t n = nu.size();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (xi[j + 1].is_zero())
            continue;
        bool shape = true;
        for (std::size_t i = 0; i < j && shape; ++i)
            shape = nu[i] == xi[i];
        for (std::size_t i = j + 1; i < n && shape; ++i)
            shape = nu[i].is_zero();
        if (!shape || cmp(xi[j], nu[j]) >= 0)
            continue;
        const OrdTerm d = lsub(xi[j], nu[j]);
        if (!is_dotted(xi[j], d))
            continue;
        auto lp = lam_parts(d, lam);
        if (lp.size() != 1 || lp[0].prin != theta_tilde(one(), xi[j + 1], lam))
            continue;
        if (cmp(lp[0].coeff, constant(lam)) < 0)
            return true;
    }
    return false;
}

// nu = (xi_2..xi_{k-1}) * nu' with nu' < xi_k.
bool pin_reflect_rule(const std::vector<OrdTerm>& nu, const std::vector<OrdTerm>& xi, int N, ConstName lam) {
    const std::size_t n = nu.size();
    for (std::size_t j = 0; j < n; ++j) {
        bool prefix = true;
        for (std::size_t i = 0; i < j && prefix; ++i)
            prefix = nu[i] == xi[i];
        if (!prefix)
            break;
        std::vector<OrdTerm> rest(nu.begin() + static_cast<std::ptrdiff_t>(j), nu.end());
        if (less_vec(rest, xi[j], N, lam))
            return true;
    }
    return false;
}

class Validator {
public:
    Validator(SystemId sys, Verdict& v) : sys_(sys), v_(v), lam_(sys.lambda()) {}

    void walk(OrdTerm t, Ctx ctx, const std::string& path) {
        const std::size_t before = v_.reason.size();
        if (!kind_legal(sys_, t)) {
            fail("constructor", path);
            return;
        }
        switch (t.kind()) {
        case Kind::Sum:
            for (std::size_t i = 0; i < t->parts.size(); ++i) {
                walk(t->parts[i].prin, ctx, path + ".part[" + std::to_string(i) + "]");
                if (t->parts[i].coeff)
                    walk(t->parts[i].coeff, Ctx::Ord, path + ".coeff[" + std::to_string(i) + "]");
            }
            break;
        case Kind::Veblen:
            walk(t->a, Ctx::Ord, path + ".b");
            walk(t->b, Ctx::Ord, path + ".x");
            break;
        case Kind::Theta:
            walk(t->a, Ctx::Ord, path + ".b");
            walk(t->b, Ctx::Lam, path + ".x");
            break;
        case Kind::Psi:
            walk(t->a, Ctx::Ord, path + ".sub");
            walk_index(t->index, path);
            walk(t->b, Ctx::Ord, path + ".arg");
            break;
        case Kind::NextReg:
        case Kind::Dagger:
        case Kind::IOf:
            walk(t->a, Ctx::Ord, path + ".base");
            break;
        default:
            break;
        }
        if (v_.reason.size() == before)
            check_node(t, ctx, path);
    }

    void check_node(OrdTerm t, Ctx ctx, const std::string& path) {
        if (!kind_legal(sys_, t)) {
            fail("constructor", path);
            return;
        }
        try {
            node_rules(t, ctx, path);
        } catch (const Error&) {
            fail("incomparable", path);
        }
    }

private:
    void fail(const char* rule, const std::string& path) {
        v_.ok = false;
        v_.reason.push_back({rule, path});
    }

    void walk_index(const PsiIndex& idx, const std::string& path) {
        if (!index_legal(sys_, idx)) {
            fail("index-kind", path + ".idx");
            return;
        }
        switch (idx.tag) {
        case PsiIndex::Tag::None:
            break;
        case PsiIndex::Tag::Ord:
            walk(idx.ord, Ctx::Ord, path + ".idx");
            break;
        case PsiIndex::Tag::Vec:
            for (std::size_t i = 0; i < idx.vec.size(); ++i)
                walk(idx.vec[i], Ctx::Lam, path + ".idx[" + std::to_string(i) + "]");
            break;
        case PsiIndex::Tag::Fn:
            for (std::size_t i = 0; i < idx.fn.size(); ++i) {
                walk(idx.fn.entries[i].first, Ctx::Ord, path + ".key[" + std::to_string(i) + "]");
                walk(idx.fn.entries[i].second, Ctx::Lam, path + ".val[" + std::to_string(i) + "]");
            }
            break;
        }
    }

    bool below_lam(OrdTerm t) { return cmp(t, constant(lam_)) < 0; }

    void node_rules(OrdTerm t, Ctx ctx, const std::string& path) {
        switch (t.kind()) {
        case Kind::Zero:
            return;
        case Kind::Const:
            if (ctx == Ctx::Lam && !t.is_const(lam_) && !below_lam(t))
                fail("lam-nf", path);
            return;
        case Kind::Sum:
            sum_rules(t, ctx, path);
            return;
        case Kind::Veblen:
            if (veblen(t->a, t->b) != t)
                fail("veblen-nf", path);
            else if (ctx == Ctx::Lam && !below_lam(t))
                fail("lam-nf", path);
            return;
        case Kind::Theta:
            if (ctx == Ctx::Ord) {
                fail("theta-context", path);
                return;
            }
            if (t->a.is_zero() || t->a.kind() == Kind::Sum || theta_tilde(t->a, t->b, lam_) != t)
                fail("theta-nf", path);
            return;
        case Kind::Psi:
            if (ctx == Ctx::Lam && !below_lam(t)) {
                fail("lam-nf", path);
                return;
            }
            psi_rules(t, path);
            return;
        case Kind::NextReg:
        case Kind::Dagger:
        case Kind::IOf:
            if (ctx == Ctx::Lam && !below_lam(t)) {
                fail("lam-nf", path);
                return;
            }
            unary_rules(t, path);
            return;
        }
    }

    void sum_rules(OrdTerm t, Ctx ctx, const std::string& path) {
        const auto& ps = t->parts;
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            if (cmp(ps[i].prin, ps[i + 1].prin) <= 0) {
                fail("sum-order", path);
                return;
            }
        for (auto& p : ps) {
            if (!p.coeff)
                continue;
            if (ctx == Ctx::Ord || !is_lam_principal(p.prin, lam_)) {
                fail("coeff-context", path);
                return;
            }
            if (!below_lam(p.coeff)) {
                fail("coeff-bound", path);
                return;
            }
        }
        if (ctx == Ctx::Lam) {
            try {
                lam_parts(t, lam_);
            } catch (const Error&) {
                fail("lam-nf", path);
            }
        }
    }

    bool own(OrdTerm x, OrdTerm a, OrdTerm t) { return in_hull_own(x, a, t); }

    bool base_hull(OrdTerm t, bool with_index) {
        const OrdTerm a = t->b;
        if (!own(t->a, a, t) || !own(a, a, t))
            return false;
        if (with_index)
            for (auto& c : children(t))
                if (!own(c, a, t))
                    return false;
        return true;
    }

    bool fn_sc_in(const FiniteFn& f, OrdTerm a, OrdTerm t) {
        for (auto& u : sc_fn(f))
            if (!own(u, a, t))
                return false;
        return true;
    }

    bool keys_below_lam(const FiniteFn& f) {
        for (auto& [k, v] : f.entries)
            if (!below_lam(k))
                return false;
        return true;
    }

    void psi_rules(OrdTerm t, const std::string& path) {
        switch (sys_.kind) {
        case SK::BH: bh_rules(t, path); return;
        case SK::Pi3: pi3_rules(t, path); return;
        case SK::PiN: pin_rules(t, path); return;
        case SK::Pi11: pi11_rules(t, path); return;
        case SK::Stab: stab_rules(t, path); return;
        }
    }

    void bh_rules(OrdTerm t, const std::string& path) {
        if (!t->a.is_const(ConstName::Omega))
            return fail("bh.sub", path);
        if (!t->index.is_none())
            return fail("bh.index", path);
        if (!base_hull(t, false))
            fail("hull", path);
    }

    void pi3_rules(OrdTerm t, const std::string& path) {
        const OrdTerm sigma = t->a;
        const bool sub_ok = sigma.is_const(ConstName::Omega) || sigma.is_const(ConstName::BigK) || is_psi(sigma);
        if (!sub_ok)
            return fail("pi3.sub", path);
        const OrdTerm nu = t->index.is_none() ? zero() : t->index.ord;
        bool m2_ok;
        if (sigma.is_const(ConstName::Omega))
            m2_ok = nu.is_zero();
        else if (sigma.is_const(ConstName::BigK))
            m2_ok = cmp(nu, eps_after(sigma)) < 0;
        else
            m2_ok = cmp(nu, sigma->index.is_none() ? zero() : sigma->index.ord) < 0;
        if (!m2_ok)
            fail("pi3.m2", path);
        if (cmp(nu, t->b) > 0)
            fail("pi3.nu-le-arg", path);
        for (auto& u : sc(nu)) {
            bool below = is_psi(u) ? psi_less_direct(u, t) : cmp(u, t) < 0;
            if (!below) {
                fail("pi3.sc-nu", path);
                break;
            }
        }
        if (!base_hull(t, true))
            fail("hull", path);
    }

    void pin_rules(OrdTerm t, const std::string& path) {
        const OrdTerm sigma = t->a;
        const int N = sys_.n;
        const bool sub_ok = sigma.is_const(ConstName::Omega) || sigma.is_const(ConstName::BigK) || is_psi(sigma);
        if (!sub_ok)
            return fail("pin.sub", path);
        const auto nu = vec_of(t->index, N - 2);
        const MValue m = m_of(sys_, sigma);
        bool allowed;
        if (all_zero(nu)) {
            allowed = m.top || !m.index.is_none();
        } else if (m.top) {
            allowed = true;
        } else {
            const auto xi = vec_of(m.index, N - 2);
            allowed = pin_step_rule(nu, xi, lam_) || pin_reflect_rule(nu, xi, N, lam_);
        }
        if (!allowed)
            fail("pin.index", path);
        if (!base_hull(t, true))
            fail("hull", path);
    }

    void pi11_rules(OrdTerm t, const std::string& path) {
        const OrdTerm sigma = t->a;
        const PsiIndex& idx = t->index;
        if (sigma.is_const(ConstName::Omega) || sigma.is_const(ConstName::BigK) || sigma.kind() == Kind::NextReg) {
            if (!idx.is_none())
                fail("pi11.index", path);
        } else if (sigma.is_const(ConstName::BigS)) {
            if (idx.tag != PsiIndex::Tag::Fn || idx.fn.size() != 1)
                return fail("pi11.s-index", path);
            if (!keys_below_lam(idx.fn) || !coefficients_ok(idx.fn))
                fail("fn-form", path);
            if (!fn_sc_in(idx.fn, t->b, t))
                fail("pi11.s-hull", path);
        } else if (in_psi_s(sigma)) {
            if (!idx.is_none())
                reflect_rules(t, path, "pi11");
        } else {
            return fail("pi11.sub", path);
        }
        if (!base_hull(t, false))
            fail("hull", path);
    }

    void stab_rules(OrdTerm t, const std::string& path) {
        const OrdTerm sigma = t->a;
        const PsiIndex& idx = t->index;
        if (sigma.is_const(ConstName::Omega) || sigma.is_const(ConstName::BigI) || sigma.kind() == Kind::IOf) {
            if (!idx.is_none())
                fail("stab.index", path);
        } else if (sigma.kind() == Kind::Dagger) {
            if (!idx.is_none()) {
                if (!keys_below_lam(idx.fn) || !coefficients_ok(idx.fn))
                    fail("fn-form", path);
                const auto gens = sc(t->b);
                for (auto& u : sc_fn(idx.fn))
                    if (!in_hull_set(u, t->b, gens)) {
                        fail("stab.sst-hull", path);
                        break;
                    }
            }
        } else if (in_psi_sst(sigma)) {
            if (!idx.is_none())
                reflect_rules(t, path, "stab");
        } else {
            return fail("stab.sub", path);
        }
        if (!base_hull(t, false))
            fail("hull", path);
    }

    void reflect_rules(OrdTerm t, const std::string& path, const std::string& pre) {
        const FiniteFn& g = t->index.fn;
        if (!keys_below_lam(g) || !coefficients_ok(g))
            return fail("fn-form", path);
        if (!is_irreducible(g))
            fail("irreducible", path);
        const PsiIndex& fm = t->a->index;
        FiniteFn f;
        f.lam = lam_;
        if (fm.tag == PsiIndex::Tag::Fn)
            f = fm.fn;
        if (!derived_from(f, g))
            fail((pre + ".recipe").c_str(), path);
        if (!fn_sc_in(g, p0(sys_, t), t))
            fail((pre + ".sc-g").c_str(), path);
    }

    void unary_rules(OrdTerm t, const std::string& path) {
        const OrdTerm base = t->a;
        switch (t.kind()) {
        case Kind::NextReg: {
            if (nextreg(base) != t)
                return fail("unary-nf", path);
            const bool ok = base.is_const(ConstName::Omega) || base.kind() == Kind::NextReg || in_psi_s(base);
            if (!ok)
                fail("pi11.reg-base", path);
            return;
        }
        case Kind::Dagger: {
            if (dagger(base) != t)
                return fail("unary-nf", path);
            bool ok = base.is_const(ConstName::Omega) || base.kind() == Kind::Dagger || in_psi_sst(base);
            if (is_psi(base) && (base->a.is_const(ConstName::BigI) || base->a.kind() == Kind::IOf))
                ok = true;
            if (!ok)
                fail("stab.dag-base", path);
            return;
        }
        case Kind::IOf:
            if (!in_psi_sst(base))
                fail("stab.iof-base", path);
            return;
        default:
            return;
        }
    }

    SystemId sys_;
    Verdict& v_;
    ConstName lam_;
};

bool node_ok(SystemId sys, OrdTerm t, Ctx ctx) {
    Verdict v;
    Validator(sys, v).check_node(t, ctx, "$");
    return v.ok;
}

void collect(OrdTerm t, std::unordered_set<OrdTerm, OrdTermHash>& seen, std::vector<OrdTerm>& out) {
    if (!seen.insert(t).second)
        return;
    out.push_back(t);
    for (auto& c : children(t))
        collect(c, seen, out);
}

class Enumerator {
public:
    Enumerator(SystemId sys, const Budget& b)
        : sys_(sys), maxlen_(b.maxlen), max_items_(b.max_items), lam_(sys.lambda()), lamw_(has_lam_world(sys)) {
        ord_.resize(maxlen_ + 1);
        lamp_.resize(maxlen_ + 1);
    }

    std::vector<OrdTerm> run() {
        for (std::uint64_t L = 1; L <= maxlen_; ++L) {
            fill(L, Ctx::Ord);
            if (lamw_)
                fill(L, Ctx::Lam);
        }
        std::vector<OrdTerm> out;
        for (auto& layer : ord_)
            out.insert(out.end(), layer.begin(), layer.end());
        sort_terms(out);
        return out;
    }

private:
    std::vector<std::vector<OrdTerm>>& pool(Ctx c) { return c == Ctx::Ord ? ord_ : lamp_; }

    void keep(OrdTerm t, Ctx ctx, std::uint64_t L, std::unordered_set<OrdTerm, OrdTermHash>& seen) {
        if (length(t) != L || !seen.insert(t).second)
            return;
        if (!node_ok(sys_, t, ctx))
            return;
        pool(ctx)[L].push_back(t);
        if (ctx == Ctx::Ord && ++items_ > max_items_)
            throw Error(ErrorCode::BudgetExceeded, "enumeration exceeds the item budget");
    }

    void fill(std::uint64_t L, Ctx ctx) {
        std::unordered_set<OrdTerm, OrdTermHash> seen;
        if (L == 1) {
            for (auto& c : system_constants(sys_))
                keep(c, ctx, L, seen);
            return;
        }
        for (std::uint64_t lb = 1; lb + 1 < L; ++lb) {
            const std::uint64_t lx = L - 1 - lb;
            for (auto& b : ord_[lb])
                for (auto& x : ord_[lx])
                    keep(mk_veblen(b, x), ctx, L, seen);
            if (ctx == Ctx::Lam)
                for (auto& b : ord_[lb])
                    if (is_principal(b))
                        for (auto& x : lamp_[lx])
                            keep(mk_theta(b, x, lam_), ctx, L, seen);
        }
        psi_candidates(L, ctx, seen);
        if (sys_.kind == SK::Pi11 || sys_.kind == SK::Stab)
            for (auto& b : ord_[L - 1]) {
                if (sys_.kind == SK::Pi11) {
                    keep(mk_nextreg(b), ctx, L, seen);
                } else {
                    keep(mk_dagger(b), ctx, L, seen);
                    keep(mk_iof(b), ctx, L, seen);
                }
            }
        std::vector<Part> parts;
        sums(L, ctx, L - 1, OrdTerm(), parts, seen);
    }

    void sums(std::uint64_t L, Ctx ctx, std::uint64_t rem, OrdTerm upper, std::vector<Part>& parts,
              std::unordered_set<OrdTerm, OrdTermHash>& seen) {
        if (rem == 0) {
            if (parts.size() > 1 || (parts.size() == 1 && (parts[0].count > 1 || parts[0].coeff)))
                keep(mk_sum(parts), ctx, L, seen);
            return;
        }
        auto& pl = pool(ctx);
        for (std::uint64_t l = 1; l <= rem && l < L; ++l)
            for (auto& p : pl[l]) {
                if (!is_principal(p))
                    continue;
                if (upper) {
                    int c;
                    try {
                        c = cmp(p, upper);
                    } catch (const Error&) {
                        continue;
                    }
                    if (c >= 0)
                        continue;
                }
                for (std::uint64_t n = 1; n * l <= rem; ++n) {
                    parts.push_back(Part{p, n, OrdTerm()});
                    sums(L, ctx, rem - n * l, p, parts, seen);
                    parts.pop_back();
                }
                if (ctx == Ctx::Lam && is_lam_principal(p, lam_))
                    for (std::uint64_t lc = 1; l + lc <= rem; ++lc)
                        for (auto& c : ord_[lc]) {
                            std::uint64_t dummy;
                            if (as_nat(c, dummy))
                                continue;
                            parts.push_back(Part{p, 1, c});
                            sums(L, ctx, rem - l - lc, p, parts, seen);
                            parts.pop_back();
                        }
            }
    }

    void psi_candidates(std::uint64_t L, Ctx ctx, std::unordered_set<OrdTerm, OrdTermHash>& seen) {
        for (std::uint64_t ls = 1; ls + 1 < L; ++ls)
            for (auto& sigma : ord_[ls]) {
                if (!is_atom(sigma))
                    continue;
                for (std::uint64_t la = 1; ls + la < L; ++la) {
                    const std::uint64_t li = L - 1 - ls - la;
                    for (auto& idx : indices(li))
                        for (auto& a : ord_[la])
                            keep(mk_psi(sigma, idx, a), ctx, L, seen);
                }
            }
    }

    std::vector<PsiIndex> indices(std::uint64_t li) {
        std::vector<PsiIndex> out;
        if (li == 0) {
            out.push_back(PsiIndex::none());
            return out;
        }
        switch (sys_.kind) {
        case SK::BH:
            break;
        case SK::Pi3:
            for (auto& nu : ord_[li])
                if (!nu.is_zero())
                    out.push_back(PsiIndex::of_ord(nu));
            break;
        case SK::PiN: {
            std::vector<OrdTerm> cur;
            vectors(static_cast<std::size_t>(sys_.n - 2), li, cur, out);
            break;
        }
        case SK::Pi11:
        case SK::Stab: {
            std::vector<std::pair<OrdTerm, OrdTerm>> cur;
            functions(li, OrdTerm(), cur, out);
            break;
        }
        }
        return out;
    }

    void vectors(std::size_t arity, std::uint64_t rem, std::vector<OrdTerm>& cur, std::vector<PsiIndex>& out) {
        if (cur.size() == arity) {
            if (rem == 0 && !all_zero(cur))
                out.push_back(PsiIndex::of_vec(cur));
            return;
        }
        const std::uint64_t left = arity - cur.size() - 1;
        for (std::uint64_t l = 1; l + left <= rem; ++l)
            for (auto& v : lamp_[l]) {
                cur.push_back(v);
                vectors(arity, rem - l, cur, out);
                cur.pop_back();
            }
    }

    void functions(std::uint64_t rem, OrdTerm lower, std::vector<std::pair<OrdTerm, OrdTerm>>& cur,
                   std::vector<PsiIndex>& out) {
        if (rem == 0) {
            if (!cur.empty()) {
                FiniteFn f;
                f.lam = lam_;
                f.entries = cur;
                out.push_back(PsiIndex::of_fn(f));
            }
            return;
        }
        for (std::uint64_t lk = 1; lk < rem; ++lk)
            for (auto& k : ord_[lk]) {
                if (lower && cmp(k, lower) <= 0)
                    continue;
                for (std::uint64_t lv = 1; lk + lv <= rem; ++lv)
                    for (auto& v : lamp_[lv]) {
                        if (v.is_zero())
                            continue;
                        cur.emplace_back(k, v);
                        functions(rem - lk - lv, k, cur, out);
                        cur.pop_back();
                    }
            }
    }

    SystemId sys_;
    std::uint64_t maxlen_;
    std::uint64_t max_items_;
    std::uint64_t items_ = 0;
    ConstName lam_;
    bool lamw_;
    std::vector<std::vector<OrdTerm>> ord_;
    std::vector<std::vector<OrdTerm>> lamp_;
};

}  // namespace

bool constructors_legal(SystemId sys, OrdTerm t) {
    if (!kind_legal(sys, t))
        return false;
    if (t.kind() == Kind::Psi && !index_legal(sys, t->index))
        return false;
    for (auto& c : children(t))
        if (!constructors_legal(sys, c))
            return false;
    return true;
}

Verdict validate(SystemId sys, OrdTerm t) {
    Verdict v;
    Validator(sys, v).walk(t, Ctx::Ord, "$");
    return v;
}

MValue m_of(SystemId sys, OrdTerm t) {
    MValue r;
    if (is_psi(t)) {
        r.index = t->index;
        return r;
    }
    if (t.is_const(ConstName::BigK) && (sys.kind == SK::Pi3 || sys.kind == SK::PiN || sys.kind == SK::Pi11)) {
        r.top = true;
        return r;
    }
    if (t.is_const(ConstName::Omega)) {
        if (sys.kind == SK::Pi3) {
            r.index = PsiIndex::of_ord(one());
            return r;
        }
        if (sys.kind == SK::PiN) {
            std::vector<OrdTerm> v(static_cast<std::size_t>(sys.n - 2), zero());
            v[0] = one();
            r.index = PsiIndex::of_vec(v);
            return r;
        }
    }
    throw Error(ErrorCode::NoAttribute, "no m attribute");
}

OrdTerm s_of(OrdTerm t) {
    if (is_psi(t) && t->index.tag == PsiIndex::Tag::Fn && !t->index.fn.empty())
        return max_key(t->index.fn);
    throw Error(ErrorCode::NoAttribute, "no s attribute");
}

OrdTerm p0(SystemId sys, OrdTerm t) {
    if (!is_psi(t))
        throw Error(ErrorCode::NoAttribute, "p0 needs a psi term");
    if (sys.kind == SK::Pi11) {
        for (OrdTerm u = t; is_psi(u); u = u->a)
            if (u->a.is_const(ConstName::BigS))
                return u->b;
        throw Error(ErrorCode::NoAttribute, "p0 needs a term below S");
    }
    if (sys.kind == SK::Stab) {
        for (OrdTerm u = t; is_psi(u); u = u->a)
            if (u->a.kind() == Kind::Dagger)
                return u->b;
        return zero();
    }
    throw Error(ErrorCode::NoAttribute, "p0 is not defined in " + sys.name());
}

bool prec(OrdTerm r, OrdTerm s) {
    for (OrdTerm u = r; is_psi(u); u = u->a)
        if (u->a == s)
            return true;
    return false;
}

OrdTerm collapse_root(SystemId sys, OrdTerm rho) {
    for (OrdTerm u = rho; is_psi(u); u = u->a) {
        if (sys.kind == SK::Pi11 && u->a.is_const(ConstName::BigS))
            return u->a;
        if (sys.kind == SK::Stab && u->a.kind() == Kind::Dagger)
            return u->a;
    }
    throw Error(ErrorCode::NoAttribute, "no collapse root");
}

std::vector<OrdTerm> enumerate(SystemId sys, const Budget& budget) { return Enumerator(sys, budget).run(); }

std::vector<OrdTerm> subterms(OrdTerm t) {
    std::unordered_set<OrdTerm, OrdTermHash> seen;
    std::vector<OrdTerm> out;
    collect(t, seen, out);
    return out;
}

std::vector<OrdTerm> subterms_below(OrdTerm t, OrdTerm bound, SystemId) {
    std::vector<OrdTerm> out;
    for (auto& u : subterms(t)) {
        try {
            if (cmp(u, bound) < 0)
                out.push_back(u);
        } catch (const Error&) {
        }
    }
    sort_terms(out);
    return out;
}

void sort_terms(std::vector<OrdTerm>& v, std::size_t* errors) {
    auto less = [&](OrdTerm x, OrdTerm y) {
        try {
            return cmp(x, y) < 0;
        } catch (const Error&) {
            if (errors)
                ++*errors;
            return x.id() < y.id();
        }
    };
    std::vector<OrdTerm> buf(v.size());
    for (std::size_t w = 1; w < v.size(); w *= 2) {
        for (std::size_t lo = 0; lo < v.size(); lo += 2 * w) {
            const std::size_t mid = std::min(lo + w, v.size());
            const std::size_t hi = std::min(lo + 2 * w, v.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi)
                buf[k++] = less(v[j], v[i]) ? v[j++] : v[i++];
            while (i < mid)
                buf[k++] = v[i++];
            while (j < hi)
                buf[k++] = v[j++];
        }
        v.swap(buf);
    }
}

}  // namespace ordwb
