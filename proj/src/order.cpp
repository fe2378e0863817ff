#include "ordwb/order.hpp"

#include <unordered_map>

#include "ordwb/arith.hpp"
#include "ordwb/finite_fn.hpp"
#include "ordwb/hull.hpp"
#include "ordwb/systems.hpp"

namespace ordwb {

namespace {

constexpr std::size_t kMemoCap = 1u << 22;

thread_local std::unordered_map<std::uint64_t, int> t_memo;

int sgn(int x) { return (x > 0) - (x < 0); }

int const_rank(ConstName c) {
    switch (c) {
    case ConstName::Omega: return 0;
    case ConstName::BigS: return 1;
    case ConstName::BigK: return 2;
    case ConstName::BigI: return 3;
    }
    return 0;
}

[[noreturn]] void incomparable(const char* what) { throw Error(ErrorCode::InvalidTerm, what); }

// phi-style comparison of P = f(Pb, Px) with Q = f(Qb, Qx).
int vrule(OrdTerm P, OrdTerm Pb, OrdTerm Px, OrdTerm Q, OrdTerm Qb, OrdTerm Qx) {
    int c = cmp(Pb, Qb);
    if (c == 0)
        return cmp(Px, Qx);
    if (c < 0)
        return cmp(Px, Q) < 0 ? -1 : 1;
    return cmp(P, Qx) <= 0 ? -1 : 1;
}

int cmp_mult(const Part& x, const Part& y) {
    if (!x.coeff && !y.coeff)
        return x.count < y.count ? -1 : (x.count > y.count ? 1 : 0);
    if (!x.coeff)
        return -1;
    if (!y.coeff)
        return 1;
    return cmp(x.coeff, y.coeff);
}

bool psi_less_cases(OrdTerm beta, OrdTerm alpha, bool with_last) {
    const OrdTerm pi = beta->a, b = beta->b;
    const OrdTerm kappa = alpha->a, a = alpha->b;
    if (cmp(pi, alpha) <= 0)
        return true;
    int ba = cmp(b, a);
    if (ba < 0 && cmp(beta, kappa) < 0 && in_hull(pi, a, alpha) && in_hull(b, a, alpha) &&
        in_hull_index(beta->index, a, alpha))
        return true;
    if (ba == 0 && pi == kappa && in_hull_index(beta->index, a, alpha) && index_less(beta->index, alpha->index))
        return true;
    if (with_last && ba >= 0 &&
        !(in_hull(kappa, b, beta) && in_hull(a, b, beta) && in_hull_index(alpha->index, b, beta)))
        return true;
    return false;
}

bool psi_less(OrdTerm beta, OrdTerm alpha) { return psi_less_cases(beta, alpha, true); }

int cmp_psi(OrdTerm x, OrdTerm y) {
    bool lt = psi_less(x, y);
    bool gt = psi_less(y, x);
    if (lt == gt)
        incomparable(lt ? "inconsistent psi comparison" : "incomparable psi terms");
    return lt ? -1 : 1;
}

// psi term p against a non-psi atom u.
int cmp_psi_atom(OrdTerm p, OrdTerm u) {
    if (cmp(p->a, u) <= 0)
        return -1;
    if (u.kind() == Kind::Const)
        return 1;
    return in_hull(u->a, p->b, p) ? 1 : -1;
}

// Dagger and I[.] atoms. A base y in (x, x') lives in the collapsed copy
// opened by x, so its successor stays below x'.
int cmp_chain(OrdTerm x, OrdTerm y) {
    const int c = cmp(x->a, y->a);
    if (c == 0) {
        if (x.kind() == y.kind())
            return 0;
        return x.kind() == Kind::Dagger ? -1 : 1;
    }
    if (c < 0)
        return cmp(y->a, x) < 0 ? 1 : -1;
    return cmp(x->a, y) < 0 ? -1 : 1;
}

int cmp_atoms(OrdTerm x, OrdTerm y) {
    const Kind kx = x.kind(), ky = y.kind();
    if (kx == Kind::Psi && ky == Kind::Psi)
        return cmp_psi(x, y);
    if (kx == Kind::Psi)
        return cmp_psi_atom(x, y);
    if (ky == Kind::Psi)
        return -cmp_psi_atom(y, x);
    if (kx == Kind::Const && ky == Kind::Const)
        return sgn(const_rank(x->cname) - const_rank(y->cname));
    if (ky == Kind::Const)
        return cmp(x->a, y) < 0 ? -1 : 1;
    if (kx == Kind::Const)
        return cmp(y->a, x) < 0 ? 1 : -1;
    if (kx == Kind::NextReg && ky == Kind::NextReg)
        return cmp(x->a, y->a);
    if ((kx == Kind::Dagger || kx == Kind::IOf) && (ky == Kind::Dagger || ky == Kind::IOf))
        return cmp_chain(x, y);
    incomparable("terms from different systems");
}

// Theta node x against an ordinary principal u.
int cmp_theta_ordinary(OrdTerm x, OrdTerm u) {
    const OrdTerm big = constant(x->cname);
    if (u == big)
        return vrule(x, x->a, x->b, u, one(), one());
    if (u.kind() == Kind::Const && u->cname != x->cname && const_rank(u->cname) > const_rank(x->cname))
        incomparable("theta-tilde term mixed with a larger constant");
    int c = cmp(u, big);
    if (c < 0)
        return 1;
    incomparable("theta-tilde term mixed with an ordinary term above its constant");
}

int cmp_principal(OrdTerm x, OrdTerm y) {
    const Kind kx = x.kind(), ky = y.kind();
    if (kx == Kind::Theta || ky == Kind::Theta) {
        if (kx == Kind::Theta && ky == Kind::Theta) {
            if (x->cname != y->cname)
                incomparable("theta-tilde terms over different constants");
            return vrule(x, x->a, x->b, y, y->a, y->b);
        }
        if (kx == Kind::Theta)
            return cmp_theta_ordinary(x, y);
        return -cmp_theta_ordinary(y, x);
    }
    if (kx == Kind::Veblen || ky == Kind::Veblen) {
        OrdTerm xb = kx == Kind::Veblen ? x->a : x;
        OrdTerm xx = kx == Kind::Veblen ? x->b : zero();
        OrdTerm yb = ky == Kind::Veblen ? y->a : y;
        OrdTerm yx = ky == Kind::Veblen ? y->b : zero();
        return vrule(x, xb, xx, y, yb, yx);
    }
    return cmp_atoms(x, y);
}

int cmp_uncached(OrdTerm a, OrdTerm b) {
    if (a.kind() == Kind::Sum || b.kind() == Kind::Sum) {
        auto pa = parts_of(a);
        auto pb = parts_of(b);
        std::size_t n = std::min(pa.size(), pb.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = cmp(pa[i].prin, pb[i].prin);
            if (c != 0)
                return c;
            c = cmp_mult(pa[i], pb[i]);
            if (c != 0)
                return c;
        }
        return pa.size() < pb.size() ? -1 : (pa.size() > pb.size() ? 1 : 0);
    }
    return cmp_principal(a, b);
}

int cmp_vec(const std::vector<OrdTerm>& x, const std::vector<OrdTerm>& y) {
    std::size_t n = std::max(x.size(), y.size());
    for (std::size_t k = n; k-- > 0;) {
        OrdTerm u = k < x.size() ? x[k] : zero();
        OrdTerm v = k < y.size() ? y[k] : zero();
        int c = cmp(u, v);
        if (c != 0)
            return c;
    }
    return 0;
}

// Fallback on finite functions: highest key first, then its value.
int cmp_fn_keys(const FiniteFn& f, const FiniteFn& g) {
    std::size_t i = f.size(), j = g.size();
    while (i > 0 && j > 0) {
        --i;
        --j;
        int c = cmp(f.entries[i].first, g.entries[j].first);
        if (c != 0)
            return c;
        c = cmp(f.entries[i].second, g.entries[j].second);
        if (c != 0)
            return c;
    }
    return i > 0 ? 1 : (j > 0 ? -1 : 0);
}

bool fn_less(const FiniteFn& f, const FiniteFn& g) {
    if (f == g)
        return false;
    try {
        bool lt = lex_less(f, g, zero());
        bool gt = lex_less(g, f, zero());
        if (lt != gt)
            return lt;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotIrreducible)
            throw;
    }
    return cmp_fn_keys(f, g) < 0;
}

std::vector<OrdTerm> lam_exponents_parts(OrdTerm alpha, ConstName lam, std::vector<OrdTerm>& segs) {
    auto lp = lam_parts(alpha, lam);
    std::vector<OrdTerm> exps;
    OrdTerm acc = zero();
    for (auto& p : lp) {
        OrdTerm e;
        if (p.prin == one())
            e = zero();
        else if (p.prin.is_const(lam))
            e = one();
        else {
            OrdTerm q = p.prin->a, x = p.prin->b;
            auto qp = parts_of(q);
            if (qp.back().prin == one() && !qp.back().coeff) {
                qp.back().count -= 1;
                e = theta_tilde(mk_sum(qp), x, lam);
            } else {
                e = p.prin;
            }
        }
        exps.push_back(e);
        acc = add(acc, p.whole);
        segs.push_back(acc);
    }
    return exps;
}

bool less_vec_rec(const std::vector<OrdTerm>& v, std::size_t from, OrdTerm alpha, ConstName lam) {
    if (from + 1 == v.size())
        return cmp(v[from], alpha) < 0;
    if (alpha.is_zero())
        return false;
    std::vector<OrdTerm> segs;
    auto exps = lam_exponents_parts(alpha, lam, segs);
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (cmp(v[from], segs[i]) < 0 && less_vec_rec(v, from + 1, exps[i], lam))
            return true;
    return false;
}

}  // namespace

const char* cmp_symbol(Cmp c) {
    switch (c) {
    case Cmp::Less: return "<";
    case Cmp::Equal: return "=";
    case Cmp::Greater: return ">";
    }
    return "?";
}

int cmp(OrdTerm a, OrdTerm b) {
    if (a == b)
        return 0;
    if (a.is_zero())
        return -1;
    if (b.is_zero())
        return 1;
    const std::uint64_t key = (std::uint64_t(a.id()) << 32) | b.id();
    auto it = t_memo.find(key);
    if (it != t_memo.end())
        return it->second;
    int r = cmp_uncached(a, b);
    if (t_memo.size() >= kMemoCap)
        t_memo.clear();
    t_memo.emplace(key, r);
    return r;
}

bool psi_less_direct(OrdTerm beta, OrdTerm alpha) {
    if (beta == alpha)
        return false;
    const OrdTerm kappa = alpha->a;
    const Kind kk = kappa.kind();
    if ((kk == Kind::NextReg || kk == Kind::Dagger || kk == Kind::IOf) && cmp(beta, kappa->a) <= 0)
        return true;
    return psi_less_cases(beta, alpha, false);
}

Cmp compare(SystemId sys, OrdTerm a, OrdTerm b) {
    if (!constructors_legal(sys, a) || !constructors_legal(sys, b))
        throw Error(ErrorCode::InvalidTerm, "constructor not available in " + sys.name());
    return static_cast<Cmp>(cmp(a, b));
}

bool index_less(const PsiIndex& x, const PsiIndex& y) {
    using Tag = PsiIndex::Tag;
    if (x.is_none() && y.is_none())
        return false;
    const Tag tag = x.is_none() ? y.tag : x.tag;
    if (!y.is_none() && y.tag != tag)
        throw Error(ErrorCode::InvalidTerm, "psi superscripts of different kinds");
    switch (tag) {
    case Tag::Ord:
        return cmp(x.is_none() ? zero() : x.ord, y.is_none() ? zero() : y.ord) < 0;
    case Tag::Vec:
        return cmp_vec(x.vec, y.vec) < 0;
    case Tag::Fn: {
        FiniteFn f = x.fn, g = y.fn;
        const ConstName lam = x.is_none() ? g.lam : f.lam;
        f.lam = g.lam = lam;
        return fn_less(f, g);
    }
    case Tag::None:
        break;
    }
    return false;
}

bool less_pair(OrdTerm beta, OrdTerm nu, OrdTerm alpha, ConstName lam) {
    return less_vec({beta, nu}, alpha, 4, lam);
}

bool less_vec(const std::vector<OrdTerm>& v, OrdTerm alpha, int N, ConstName lam) {
    if (v.empty() || static_cast<int>(v.size()) > N - 2)
        throw Error(ErrorCode::ArityMismatch, "vector arity does not fit N");
    return less_vec_rec(v, 0, alpha, lam);
}

void clear_caches() {
    t_memo.clear();
    clear_hull_caches();
}

}  // namespace ordwb
