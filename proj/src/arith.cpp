#include "ordwb/arith.hpp"

#include "ordwb/order.hpp"

namespace ordwb {

namespace {

constexpr std::uint64_t kMaxUnfold = 4096;

OrdTerm mult_term(const Part& p) { return p.coeff ? p.coeff : nat(p.count); }

Part add_mult(const Part& x, const Part& y) {
    Part r{x.prin, 0, OrdTerm()};
    if (!x.coeff && !y.coeff) {
        r.count = x.count + y.count;
        if (r.count < x.count)
            throw Error(ErrorCode::TooDeep, "count overflow");
        return r;
    }
    r.coeff = add(mult_term(x), mult_term(y));
    return r;
}

Part nsum_mult(const Part& x, const Part& y) {
    Part r{x.prin, 0, OrdTerm()};
    if (!x.coeff && !y.coeff) {
        r.count = x.count + y.count;
        return r;
    }
    r.coeff = natural_sum(mult_term(x), mult_term(y));
    return r;
}

bool same_part(const Part& x, const Part& y) {
    return x.prin == y.prin && x.count == y.count && x.coeff == y.coeff;
}

}  // namespace

OrdTerm add(OrdTerm a, OrdTerm b) {
    if (b.is_zero())
        return a;
    if (a.is_zero())
        return b;
    auto pa = parts_of(a);
    auto pb = parts_of(b);
    const OrdTerm lead = pb[0].prin;
    std::vector<Part> out;
    for (auto& p : pa) {
        int c = cmp(p.prin, lead);
        if (c > 0) {
            out.push_back(p);
            continue;
        }
        if (c == 0) {
            out.push_back(add_mult(p, pb[0]));
            out.insert(out.end(), pb.begin() + 1, pb.end());
            return mk_sum(std::move(out));
        }
        break;
    }
    out.insert(out.end(), pb.begin(), pb.end());
    return mk_sum(std::move(out));
}

OrdTerm natural_sum(OrdTerm a, OrdTerm b) {
    auto pa = parts_of(a);
    auto pb = parts_of(b);
    std::vector<Part> out;
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        if (j == pb.size()) {
            out.push_back(pa[i++]);
            continue;
        }
        if (i == pa.size()) {
            out.push_back(pb[j++]);
            continue;
        }
        int c = cmp(pa[i].prin, pb[j].prin);
        if (c > 0)
            out.push_back(pa[i++]);
        else if (c < 0)
            out.push_back(pb[j++]);
        else
            out.push_back(nsum_mult(pa[i++], pb[j++]));
    }
    return mk_sum(std::move(out));
}

bool is_dotted(OrdTerm a, OrdTerm b) { return add(a, b) == natural_sum(a, b); }

OrdTerm exponent_of(OrdTerm p) {
    if (p.kind() == Kind::Veblen && p->a.is_zero())
        return p->b;
    if (p.kind() == Kind::Theta || !is_principal(p))
        throw Error(ErrorCode::NotPrincipal, "no ordinary exponent");
    return p;
}

OrdTerm omega_pow(OrdTerm e) { return veblen(zero(), e); }

OrdTerm omega_tower(unsigned n, OrdTerm x) {
    for (unsigned i = 0; i < n; ++i)
        x = omega_pow(x);
    return x;
}

OrdTerm mul(OrdTerm a, OrdTerm c) {
    if (a.is_zero() || c.is_zero())
        return zero();
    auto pa = parts_of(a);
    for (auto& p : pa)
        if (p.prin.kind() == Kind::Theta || p.coeff)
            throw Error(ErrorCode::InvalidTerm, "ordinary product of a theta-tilde term");
    const OrdTerm e0 = exponent_of(pa[0].prin);
    OrdTerm r = zero();
    for (auto& q : parts_of(c)) {
        if (q.coeff)
            throw Error(ErrorCode::InvalidTerm, "ordinary product by a coefficient term");
        if (q.prin == one()) {
            std::vector<Part> ps = pa;
            ps[0].count *= q.count;
            r = add(r, mk_sum(std::move(ps)));
        } else {
            OrdTerm p = omega_pow(add(e0, exponent_of(q.prin)));
            r = add(r, mk_sum({Part{p, q.count, OrdTerm()}}));
        }
    }
    return r;
}

bool is_lam_principal(OrdTerm p, ConstName lam) {
    return (p.kind() == Kind::Theta && p->cname == lam) || p.is_const(lam);
}

OrdTerm lam_mul(OrdTerm a, OrdTerm c, ConstName lam) {
    if (a.is_zero() || c.is_zero())
        return zero();
    auto pa = parts_of(a);
    if (!is_lam_principal(pa[0].prin, lam))
        return mul(a, c);
    std::uint64_t n = 0;
    if (as_nat(c, n)) {
        Part lead = pa[0];
        if (lead.coeff)
            lead.coeff = mul(lead.coeff, c);
        else
            lead.count *= n;
        pa[0] = lead;
        return mk_sum(std::move(pa));
    }
    if (pa.size() == 1) {
        Part lead = pa[0];
        lead.coeff = mul(mult_term(lead), c);
        lead.count = 1;
        return mk_sum({lead});
    }
    throw Error(ErrorCode::InvalidTerm, "unsupported theta-tilde product");
}

OrdTerm lsub(OrdTerm b, OrdTerm c) {
    auto pb = parts_of(b);
    auto pc = parts_of(c);
    std::size_t i = 0;
    while (i < pb.size() && i < pc.size() && same_part(pb[i], pc[i]))
        ++i;
    if (i == pb.size())
        return mk_sum(std::vector<Part>(pc.begin() + i, pc.end()));
    if (i == pc.size())
        throw Error(ErrorCode::InvalidTerm, "left subtraction of a larger term");
    int c1 = cmp(pb[i].prin, pc[i].prin);
    if (c1 < 0)
        return mk_sum(std::vector<Part>(pc.begin() + i, pc.end()));
    if (c1 > 0)
        throw Error(ErrorCode::InvalidTerm, "left subtraction of a larger term");
    std::vector<Part> out;
    Part p{pc[i].prin, 0, OrdTerm()};
    if (!pb[i].coeff && !pc[i].coeff) {
        if (pb[i].count > pc[i].count)
            throw Error(ErrorCode::InvalidTerm, "left subtraction of a larger term");
        p.count = pc[i].count - pb[i].count;
        if (p.count == 0)
            throw Error(ErrorCode::InvalidTerm, "left subtraction of a larger term");
    } else {
        OrdTerm mb = mult_term(pb[i]);
        OrdTerm mc = mult_term(pc[i]);
        if (cmp(mb, mc) >= 0)
            throw Error(ErrorCode::InvalidTerm, "left subtraction of a larger term");
        p.coeff = lsub(mb, mc);
        p.count = 1;
    }
    out.push_back(p);
    out.insert(out.end(), pc.begin() + i + 1, pc.end());
    return mk_sum(std::move(out));
}

OrdTerm veblen(OrdTerm b, OrdTerm x) {
    if (x.is_zero() && is_atom(b))
        return b;
    if (is_atom(x) && cmp(b, x) < 0)
        return x;
    if (x.kind() == Kind::Veblen && cmp(x->a, b) > 0)
        return x;
    return mk_veblen(b, x);
}

OrdTerm theta(OrdTerm c, OrdTerm a) {
    auto pc = parts_of(c);
    for (auto it = pc.rbegin(); it != pc.rend(); ++it) {
        if (it->coeff || it->count > kMaxUnfold)
            throw Error(ErrorCode::TooDeep, "theta unfolding exceeds budget");
        OrdTerm e = it->prin == one() ? zero() : exponent_of(it->prin);
        for (std::uint64_t k = 0; k < it->count; ++k)
            a = veblen(e, a);
    }
    return a;
}

namespace {

OrdTerm theta_tilde_step(OrdTerm q, OrdTerm x, ConstName lam) {
    if (q == one()) {
        if (x.is_zero())
            return one();
        if (x == one())
            return constant(lam);
    }
    if (x.kind() == Kind::Theta && x->cname == lam && cmp(x->a, q) > 0)
        return x;
    return mk_theta(q, x, lam);
}

}  // namespace

OrdTerm theta_tilde(OrdTerm b, OrdTerm x, ConstName lam) {
    auto pb = parts_of(b);
    for (auto it = pb.rbegin(); it != pb.rend(); ++it) {
        if (it->coeff || it->count > kMaxUnfold)
            throw Error(ErrorCode::TooDeep, "theta-tilde unfolding exceeds budget");
        if (it->prin.kind() == Kind::Theta)
            throw Error(ErrorCode::InvalidTerm, "theta-tilde subscript must be ordinary");
        for (std::uint64_t k = 0; k < it->count; ++k)
            x = theta_tilde_step(it->prin, x, lam);
    }
    return x;
}

OrdTerm theta_tilde_inv(OrdTerm c, OrdTerm z, ConstName lam) {
    OrdTerm b, xi;
    if (z == one()) {
        b = one();
        xi = zero();
    } else if (z.is_const(lam)) {
        b = one();
        xi = one();
    } else if (z.kind() == Kind::Theta && z->cname == lam) {
        b = z->a;
        xi = z->b;
    } else {
        throw Error(ErrorCode::NotPrincipal, "not a theta-tilde principal term");
    }
    if (c.is_zero())
        return z;
    if (cmp(b, c) >= 0)
        return theta_tilde(lsub(c, b), xi, lam);
    if (xi.is_zero())
        return zero();
    return theta_tilde_inv(lsub(b, c), head(xi, lam), lam);
}

std::vector<LamPart> lam_parts(OrdTerm x, ConstName lam) {
    std::vector<LamPart> out;
    std::vector<Part> small;
    const OrdTerm big = constant(lam);
    for (auto& p : parts_of(x)) {
        if (is_lam_principal(p.prin, lam)) {
            if (!small.empty())
                throw Error(ErrorCode::InvalidTerm, "theta-tilde part after a smaller part");
            out.push_back(LamPart{p.prin, mult_term(p), mk_sum({p})});
            continue;
        }
        if (cmp(p.prin, big) > 0)
            throw Error(ErrorCode::NotPrincipal, "ordinary part above the big constant");
        small.push_back(p);
    }
    if (!small.empty()) {
        OrdTerm s = mk_sum(std::move(small));
        out.push_back(LamPart{one(), s, s});
    }
    return out;
}

std::vector<OrdTerm> segments(OrdTerm x, ConstName lam) {
    if (x.is_zero())
        throw Error(ErrorCode::ZeroArg, "segments of zero");
    auto lp = lam_parts(x, lam);
    std::vector<OrdTerm> prefix{zero()};
    for (auto& p : lp)
        prefix.push_back(add(prefix.back(), p.whole));
    return std::vector<OrdTerm>(prefix.rbegin(), prefix.rend());
}

OrdTerm head(OrdTerm x, ConstName lam) {
    if (x.is_zero())
        throw Error(ErrorCode::ZeroArg, "head of zero");
    return lam_parts(x, lam).front().prin;
}

OrdTerm tail(OrdTerm x, ConstName lam) {
    if (x.is_zero())
        throw Error(ErrorCode::ZeroArg, "tail of zero");
    return lam_parts(x, lam).back().prin;
}

OrdTerm nextreg(OrdTerm base) {
    if (base.is_const(ConstName::BigS))
        return constant(ConstName::BigK);
    if (cmp(base, constant(ConstName::Omega)) < 0)
        return constant(ConstName::Omega);
    return mk_nextreg(base);
}

OrdTerm dagger(OrdTerm base) {
    if (cmp(base, constant(ConstName::Omega)) < 0)
        base = constant(ConstName::Omega);
    return mk_dagger(base);
}

OrdTerm iof(OrdTerm rho) { return mk_iof(rho); }

}  // namespace ordwb
