#include "ordwb/collapse.hpp"

#include <unordered_map>

#include "ordwb/arith.hpp"
#include "ordwb/finite_fn.hpp"
#include "ordwb/hull.hpp"
#include "ordwb/order.hpp"
#include "ordwb/systems.hpp"

namespace ordwb {

namespace {

using SK = SystemId::Kind;

// Rebuilds t with the collapse (or its inverse) applied to ordinary
// positions. Inside Lambda-world positions the constant Lambda is kept as is.
class Mapper {
public:
    Mapper(SystemId sys, OrdTerm root, OrdTerm rho, bool inverse)
        : sys_(sys), lam_(sys.lambda()), root_(root), rho_(rho), inverse_(inverse) {}

    OrdTerm ord(OrdTerm t) {
        auto it = memo_.find(t.id());
        if (it != memo_.end())
            return it->second;
        OrdTerm r = inverse_ ? back(t) : forth(t);
        memo_.emplace(t.id(), r);
        return r;
    }

private:
    OrdTerm forth(OrdTerm t) {
        if (t == root_)
            return rho_;
        if (cmp(t, root_) < 0)
            return t;
        if (t.kind() == Kind::Const) {
            if (sys_.kind == SK::Pi11 && t->cname == ConstName::BigK)
                return nextreg(rho_);
            if (sys_.kind == SK::Stab && t->cname == ConstName::BigI)
                return iof(rho_);
            throw Error(ErrorCode::OutOfDomain, "constant outside the collapse domain");
        }
        return rebuild(t);
    }

    OrdTerm back(OrdTerm t) {
        if (t == rho_)
            return root_;
        if (cmp(t, rho_) < 0)
            return t;
        switch (t.kind()) {
        case Kind::Const:
            throw Error(ErrorCode::NotInImage, "constant above every collapsed value");
        case Kind::NextReg:
            if (t->a == rho_)
                return constant(ConstName::BigK);
            break;
        case Kind::IOf:
            if (t->a == rho_)
                return constant(ConstName::BigI);
            break;
        default:
            break;
        }
        return rebuild(t);
    }

    OrdTerm lam(OrdTerm t) {
        switch (t.kind()) {
        case Kind::Const:
            if (t->cname == lam_)
                return t;
            return ord(t);
        case Kind::Sum: {
            std::vector<Part> ps = t->parts;
            for (auto& p : ps) {
                p.prin = lam(p.prin);
                if (p.coeff)
                    p.coeff = ord(p.coeff);
            }
            return mk_sum(std::move(ps));
        }
        case Kind::Theta:
            return theta_tilde(ord(t->a), lam(t->b), lam_);
        default:
            return ord(t);
        }
    }

    PsiIndex index(const PsiIndex& idx) {
        switch (idx.tag) {
        case PsiIndex::Tag::None:
            return idx;
        case PsiIndex::Tag::Ord:
            return PsiIndex::of_ord(ord(idx.ord));
        case PsiIndex::Tag::Vec: {
            std::vector<OrdTerm> v;
            for (auto& x : idx.vec)
                v.push_back(lam(x));
            return PsiIndex::of_vec(std::move(v));
        }
        case PsiIndex::Tag::Fn: {
            std::vector<std::pair<OrdTerm, OrdTerm>> es;
            for (auto& [k, v] : idx.fn.entries)
                es.emplace_back(ord(k), lam(v));
            return PsiIndex::of_fn(make_fn(std::move(es), idx.fn.lam));
        }
        }
        return idx;
    }

    OrdTerm rebuild(OrdTerm t) {
        switch (t.kind()) {
        case Kind::Sum: {
            OrdTerm r = zero();
            for (auto& p : t->parts) {
                if (p.coeff)
                    throw Error(ErrorCode::InvalidTerm, "coefficient in an ordinary sum");
                r = add(r, mul(ord(p.prin), nat(p.count)));
            }
            return r;
        }
        case Kind::Veblen:
            return veblen(ord(t->a), ord(t->b));
        case Kind::Psi:
            return mk_psi(ord(t->a), index(t->index), ord(t->b));
        case Kind::NextReg:
            return nextreg(ord(t->a));
        case Kind::Dagger:
            return dagger(ord(t->a));
        case Kind::IOf:
            return iof(ord(t->a));
        case Kind::Theta:
            throw Error(ErrorCode::InvalidTerm, "theta-tilde term in an ordinary position");
        default:
            return t;
        }
    }

    SystemId sys_;
    ConstName lam_;
    OrdTerm root_;
    OrdTerm rho_;
    bool inverse_;
    std::unordered_map<std::uint32_t, OrdTerm> memo_;
};

}  // namespace

OrdTerm collapse_target(SystemId sys, OrdTerm rho) {
    if (sys.kind != SK::Pi11 && sys.kind != SK::Stab)
        throw Error(ErrorCode::BadRho, "no collapsing in " + sys.name());
    try {
        return collapse_root(sys, rho);
    } catch (const Error&) {
        throw Error(ErrorCode::BadRho, "rho is not below a collapsible constant");
    }
}

bool in_domain(SystemId sys, OrdTerm t, OrdTerm rho) {
    collapse_target(sys, rho);
    return in_hull(t, p0(sys, rho), rho);
}

OrdTerm collapse(SystemId sys, OrdTerm t, OrdTerm rho) {
    const OrdTerm root = collapse_target(sys, rho);
    if (!in_hull(t, p0(sys, rho), rho))
        throw Error(ErrorCode::OutOfDomain, "term is not in the collapse domain");
    Mapper m(sys, root, rho, false);
    return m.ord(t);
}

OrdTerm uncollapse(SystemId sys, OrdTerm u, OrdTerm rho) {
    const OrdTerm root = collapse_target(sys, rho);
    OrdTerm t;
    try {
        Mapper m(sys, root, rho, true);
        t = m.ord(u);
        if (!in_hull(t, p0(sys, rho), rho) || Mapper(sys, root, rho, false).ord(t) != u)
            t = OrdTerm();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadRho)
            throw;
        t = OrdTerm();
    }
    if (!t)
        throw Error(ErrorCode::NotInImage, "term is not a collapsed value");
    return t;
}

}  // namespace ordwb
