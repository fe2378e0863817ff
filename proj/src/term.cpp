#include "ordwb/term.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <unordered_map>

namespace ordwb {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r < a ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

class Table {
public:
    OrdTerm intern(Node&& proto, std::vector<std::uint64_t>&& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end())
            return OrdTerm(it->second);
        proto.id = static_cast<std::uint32_t>(nodes_.size() + 1);
        nodes_.push_back(std::move(proto));
        const Node* n = &nodes_.back();
        map_.emplace(std::move(key), n);
        return OrdTerm(n);
    }
    std::size_t size() {
        std::lock_guard<std::mutex> lock(mu_);
        return nodes_.size();
    }

private:
    std::mutex mu_;
    std::deque<Node> nodes_;
    std::unordered_map<std::vector<std::uint64_t>, const Node*, KeyHash> map_;
};

Table& table() {
    static Table* t = new Table();
    return *t;
}

std::uint64_t tid(const OrdTerm& t) { return t ? t.id() : 0; }

void key_index(std::vector<std::uint64_t>& key, const PsiIndex& idx) {
    key.push_back(static_cast<std::uint64_t>(idx.tag));
    switch (idx.tag) {
    case PsiIndex::Tag::None:
        break;
    case PsiIndex::Tag::Ord:
        key.push_back(tid(idx.ord));
        break;
    case PsiIndex::Tag::Vec:
        key.push_back(idx.vec.size());
        for (auto& v : idx.vec)
            key.push_back(tid(v));
        break;
    case PsiIndex::Tag::Fn:
        key.push_back(static_cast<std::uint64_t>(idx.fn.lam));
        key.push_back(idx.fn.entries.size());
        for (auto& [k, v] : idx.fn.entries) {
            key.push_back(tid(k));
            key.push_back(tid(v));
        }
        break;
    }
}

}  // namespace

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::NotPrincipal: return "NotPrincipal";
    case ErrorCode::ZeroArg: return "ZeroArg";
    case ErrorCode::TooDeep: return "TooDeep";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::BadCut: return "BadCut";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoAttribute: return "NoAttribute";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadRho: return "BadRho";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    }
    return "Error";
}

Kind OrdTerm::kind() const { return n_->kind; }
std::uint32_t OrdTerm::id() const { return n_ ? n_->id : 0; }
bool OrdTerm::is_zero() const { return n_->kind == Kind::Zero; }
bool OrdTerm::is_const(ConstName c) const { return n_->kind == Kind::Const && n_->cname == c; }

std::size_t OrdTermHash::operator()(const OrdTerm& t) const {
    return std::hash<std::uint32_t>()(t.id());
}

OrdTerm FiniteFn::at(const OrdTerm& key) const {
    for (auto& [k, v] : entries)
        if (k == key)
            return v;
    return zero();
}

bool FiniteFn::operator==(const FiniteFn& o) const {
    return lam == o.lam && entries == o.entries;
}

PsiIndex PsiIndex::of_ord(OrdTerm nu) {
    PsiIndex r;
    r.tag = Tag::Ord;
    r.ord = nu;
    return r;
}

PsiIndex PsiIndex::of_vec(std::vector<OrdTerm> v) {
    PsiIndex r;
    r.tag = Tag::Vec;
    r.vec = std::move(v);
    return r;
}

PsiIndex PsiIndex::of_fn(FiniteFn f) {
    PsiIndex r;
    r.tag = Tag::Fn;
    r.fn = std::move(f);
    return r;
}

bool PsiIndex::operator==(const PsiIndex& o) const {
    if (tag != o.tag)
        return false;
    switch (tag) {
    case Tag::None: return true;
    case Tag::Ord: return ord == o.ord;
    case Tag::Vec: return vec == o.vec;
    case Tag::Fn: return fn == o.fn;
    }
    return false;
}

std::string SystemId::name() const {
    switch (kind) {
    case Kind::BH: return "bh";
    case Kind::Pi3: return "pi3";
    case Kind::PiN: return "piN:" + std::to_string(n);
    case Kind::Pi11: return "pi11";
    case Kind::Stab: return "stab";
    }
    return "?";
}

SystemId SystemId::from_name(const std::string& s) {
    if (s == "bh") return bh();
    if (s == "pi3") return pi3();
    if (s == "pi11") return pi11();
    if (s == "stab") return stab();
    if (s.rfind("piN:", 0) == 0 || s.rfind("pin:", 0) == 0) {
        std::string num = s.substr(4);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
            throw Error(ErrorCode::InvalidTerm, "bad system name: " + s);
        int n = std::stoi(num);
        if (n < 3)
            throw Error(ErrorCode::InvalidTerm, "piN needs N >= 3: " + s);
        return pin(n);
    }
    throw Error(ErrorCode::InvalidTerm, "unknown system: " + s);
}

OrdTerm zero() {
    static const OrdTerm z = [] {
        Node n;
        n.kind = Kind::Zero;
        return table().intern(std::move(n), {0});
    }();
    return z;
}

OrdTerm constant(ConstName c) {
    Node n;
    n.kind = Kind::Const;
    n.cname = c;
    return table().intern(std::move(n), {1, static_cast<std::uint64_t>(c)});
}

OrdTerm one() {
    static const OrdTerm o = mk_veblen(zero(), zero());
    return o;
}

OrdTerm mk_sum(std::vector<Part> parts) {
    std::vector<Part> ps;
    for (auto& p : parts) {
        if (!p.prin || p.prin.is_zero())
            continue;
        if (p.prin.kind() == Kind::Sum)
            throw Error(ErrorCode::InvalidTerm, "sum part is a sum");
        if (p.coeff) {
            std::uint64_t n = 0;
            if (as_nat(p.coeff, n)) {
                p.count = n;
                p.coeff = OrdTerm();
            }
        }
        if (!p.coeff && p.count == 0)
            continue;
        ps.push_back(p);
    }
    if (ps.empty())
        return zero();
    if (ps.size() == 1 && !ps[0].coeff && ps[0].count == 1)
        return ps[0].prin;
    Node n;
    n.kind = Kind::Sum;
    std::vector<std::uint64_t> key{2, ps.size()};
    std::uint64_t len = 1;
    for (auto& p : ps) {
        key.push_back(tid(p.prin));
        key.push_back(p.coeff ? 0 : p.count);
        key.push_back(tid(p.coeff));
        if (p.coeff)
            len = sat_add(len, sat_add(length(p.prin), length(p.coeff)));
        else
            len = sat_add(len, sat_mul(p.count, length(p.prin)));
    }
    n.parts = std::move(ps);
    n.len = len;
    return table().intern(std::move(n), std::move(key));
}

OrdTerm mk_veblen(OrdTerm b, OrdTerm x) {
    Node n;
    n.kind = Kind::Veblen;
    n.a = b;
    n.b = x;
    n.len = sat_add(1, sat_add(length(b), length(x)));
    return table().intern(std::move(n), {3, tid(b), tid(x)});
}

OrdTerm mk_theta(OrdTerm b, OrdTerm x, ConstName lam) {
    Node n;
    n.kind = Kind::Theta;
    n.cname = lam;
    n.a = b;
    n.b = x;
    n.len = sat_add(1, sat_add(length(b), length(x)));
    return table().intern(std::move(n), {4, static_cast<std::uint64_t>(lam), tid(b), tid(x)});
}

OrdTerm mk_psi(OrdTerm sub, PsiIndex idx, OrdTerm arg) {
    if (idx.tag == PsiIndex::Tag::Ord && idx.ord.is_zero())
        idx = PsiIndex::none();
    if (idx.tag == PsiIndex::Tag::Fn && idx.fn.empty())
        idx = PsiIndex::none();
    if (idx.tag == PsiIndex::Tag::Vec) {
        bool all_zero = true;
        for (auto& v : idx.vec)
            all_zero = all_zero && v.is_zero();
        if (all_zero)
            idx = PsiIndex::none();
    }
    Node n;
    n.kind = Kind::Psi;
    n.a = sub;
    n.b = arg;
    std::vector<std::uint64_t> key{5, tid(sub), tid(arg)};
    key_index(key, idx);
    n.len = sat_add(1, sat_add(sat_add(length(sub), length(arg)), index_length(idx)));
    n.index = std::move(idx);
    return table().intern(std::move(n), std::move(key));
}

namespace {
OrdTerm mk_unary(Kind k, OrdTerm base) {
    Node n;
    n.kind = k;
    n.a = base;
    n.len = sat_add(1, length(base));
    return table().intern(std::move(n), {static_cast<std::uint64_t>(k) + 10, tid(base)});
}
}  // namespace

OrdTerm mk_nextreg(OrdTerm base) { return mk_unary(Kind::NextReg, base); }
OrdTerm mk_dagger(OrdTerm base) { return mk_unary(Kind::Dagger, base); }
OrdTerm mk_iof(OrdTerm base) { return mk_unary(Kind::IOf, base); }

std::uint64_t length(OrdTerm t) { return t ? t->len : 0; }

std::uint64_t index_length(const PsiIndex& idx) {
    std::uint64_t len = 0;
    switch (idx.tag) {
    case PsiIndex::Tag::None:
        break;
    case PsiIndex::Tag::Ord:
        len = length(idx.ord);
        break;
    case PsiIndex::Tag::Vec:
        for (auto& v : idx.vec)
            len = sat_add(len, length(v));
        break;
    case PsiIndex::Tag::Fn:
        for (auto& [k, v] : idx.fn.entries)
            len = sat_add(len, sat_add(length(k), length(v)));
        break;
    }
    return len;
}

std::vector<Part> parts_of(OrdTerm t) {
    if (t.is_zero())
        return {};
    if (t.kind() == Kind::Sum)
        return t->parts;
    return {Part{t, 1, OrdTerm()}};
}

bool is_atom(OrdTerm t) {
    switch (t.kind()) {
    case Kind::Const:
    case Kind::Psi:
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        return true;
    default:
        return false;
    }
}

bool is_principal(OrdTerm t) { return t.kind() != Kind::Sum && t.kind() != Kind::Zero; }

OrdTerm nat(std::uint64_t n) {
    if (n == 0)
        return zero();
    if (n == 1)
        return one();
    return mk_sum({Part{one(), n, OrdTerm()}});
}

bool as_nat(OrdTerm t, std::uint64_t& n) {
    if (t.is_zero()) {
        n = 0;
        return true;
    }
    if (t == one()) {
        n = 1;
        return true;
    }
    if (t.kind() == Kind::Sum && t->parts.size() == 1 && t->parts[0].prin == one() && !t->parts[0].coeff) {
        n = t->parts[0].count;
        return true;
    }
    return false;
}

std::vector<OrdTerm> children(OrdTerm t) {
    std::vector<OrdTerm> out;
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        break;
    case Kind::Sum:
        for (auto& p : t->parts) {
            out.push_back(p.prin);
            if (p.coeff)
                out.push_back(p.coeff);
        }
        break;
    case Kind::Veblen:
    case Kind::Theta:
        out.push_back(t->a);
        out.push_back(t->b);
        break;
    case Kind::Psi:
        out.push_back(t->a);
        switch (t->index.tag) {
        case PsiIndex::Tag::None:
            break;
        case PsiIndex::Tag::Ord:
            out.push_back(t->index.ord);
            break;
        case PsiIndex::Tag::Vec:
            for (auto& v : t->index.vec)
                out.push_back(v);
            break;
        case PsiIndex::Tag::Fn:
            for (auto& [k, v] : t->index.fn.entries) {
                out.push_back(k);
                out.push_back(v);
            }
            break;
        }
        out.push_back(t->b);
        break;
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        out.push_back(t->a);
        break;
    }
    return out;
}

std::size_t interned_count() { return table().size(); }

}  // namespace ordwb
