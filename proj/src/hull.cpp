#include "ordwb/hull.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ordwb/order.hpp"

namespace ordwb {

namespace {

using IdSet = std::set<OrdTerm, IdLess>;

struct Key3 {
    std::uint32_t t, a, d;
    bool operator==(const Key3& o) const { return t == o.t && a == o.a && d == o.d; }
};

struct Key3Hash {
    std::size_t operator()(const Key3& k) const {
        std::uint64_t h = (std::uint64_t(k.t) * 0x9e3779b97f4a7c15ull) ^ (std::uint64_t(k.a) << 21) ^ k.d;
        return std::hash<std::uint64_t>()(h);
    }
};

constexpr std::size_t kMemoCap = 1u << 22;

thread_local std::unordered_map<Key3, bool, Key3Hash> t_hull_memo;

SupportSet sorted(const IdSet& s) {
    SupportSet out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](OrdTerm x, OrdTerm y) { return cmp(x, y) < 0; });
    return out;
}

bool is_unary(Kind k) { return k == Kind::NextReg || k == Kind::Dagger || k == Kind::IOf; }

std::vector<OrdTerm> index_parts(const PsiIndex& idx) {
    std::vector<OrdTerm> out;
    switch (idx.tag) {
    case PsiIndex::Tag::None:
        break;
    case PsiIndex::Tag::Ord:
        out.push_back(idx.ord);
        break;
    case PsiIndex::Tag::Vec:
        out = idx.vec;
        break;
    case PsiIndex::Tag::Fn:
        for (auto& [k, v] : idx.fn.entries) {
            out.push_back(k);
            out.push_back(v);
        }
        break;
    }
    return out;
}

void sc_into(OrdTerm t, IdSet& out) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        return;
    case Kind::Psi:
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        out.insert(t);
        return;
    default:
        for (auto& c : children(t))
            sc_into(c, out);
    }
}

void e_into(OrdTerm t, IdSet& out) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        return;
    case Kind::Psi:
        out.insert(t);
        return;
    default:
        for (auto& c : children(t))
            e_into(c, out);
    }
}

void g_into(OrdTerm delta, OrdTerm t, IdSet& out) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        return;
    case Kind::Psi:
        if (cmp(delta, t->a) < 0) {
            for (auto& c : children(t))
                g_into(delta, c, out);
        } else {
            out.insert(t);
        }
        return;
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        if (cmp(t, delta) < 0)
            out.insert(t);
        else
            g_into(delta, t->a, out);
        return;
    default:
        for (auto& c : children(t))
            g_into(delta, c, out);
    }
}

// K_delta when big, k_delta otherwise.
void k_into(OrdTerm delta, OrdTerm t, IdSet& out, bool big) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        return;
    case Kind::Psi:
        if (cmp(t, delta) < 0)
            return;
        out.insert(big ? t->b : t);
        k_into(delta, t->a, out, big);
        k_into(delta, t->b, out, big);
        for (auto& c : index_parts(t->index))
            k_into(delta, c, out, big);
        return;
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        if (cmp(t, delta) < 0)
            return;
        k_into(delta, t->a, out, big);
        return;
    default:
        for (auto& c : children(t))
            k_into(delta, c, out, big);
    }
}

template <class InGen>
bool hull_rec(OrdTerm t, OrdTerm a, const InGen& gen);

template <class InGen>
bool hull_children(OrdTerm t, OrdTerm a, const InGen& gen) {
    for (auto& c : children(t))
        if (!hull_rec(c, a, gen))
            return false;
    return true;
}

template <class InGen>
bool hull_rec(OrdTerm t, OrdTerm a, const InGen& gen) {
    switch (t.kind()) {
    case Kind::Zero:
    case Kind::Const:
        return true;
    case Kind::Psi:
        if (gen(t))
            return true;
        return cmp(t->b, a) < 0 && hull_children(t, a, gen);
    case Kind::NextReg:
    case Kind::Dagger:
    case Kind::IOf:
        if (gen(t))
            return true;
        return hull_rec(t->a, a, gen);
    default:
        return hull_children(t, a, gen);
    }
}

}  // namespace

SupportSet sc(OrdTerm t) {
    IdSet s;
    sc_into(t, s);
    return sorted(s);
}

SupportSet sc_index(const PsiIndex& idx) {
    IdSet s;
    for (auto& c : index_parts(idx))
        sc_into(c, s);
    return sorted(s);
}

SupportSet sc_fn(const FiniteFn& f) { return sc_index(PsiIndex::of_fn(f)); }

SupportSet e_set(OrdTerm t) {
    IdSet s;
    e_into(t, s);
    return sorted(s);
}

SupportSet g_set(OrdTerm delta, OrdTerm t) {
    IdSet s;
    g_into(delta, t, s);
    return sorted(s);
}

SupportSet k_set(OrdTerm delta, OrdTerm t) {
    IdSet s;
    k_into(delta, t, s, true);
    return sorted(s);
}

SupportSet k_small(OrdTerm delta, OrdTerm t) {
    IdSet s;
    k_into(delta, t, s, false);
    return sorted(s);
}

bool in_hull(OrdTerm t, OrdTerm a, OrdTerm delta) {
    const Kind k = t.kind();
    if (k == Kind::Zero || k == Kind::Const)
        return true;
    const Key3 key{t.id(), a.id(), delta.id()};
    auto it = t_hull_memo.find(key);
    if (it != t_hull_memo.end())
        return it->second;
    bool r;
    if (k == Kind::Psi || is_unary(k)) {
        if (cmp(t, delta) < 0)
            r = true;
        else if (k == Kind::Psi)
            r = cmp(t->b, a) < 0 && in_hull(t->a, a, delta) && in_hull(t->b, a, delta) &&
                in_hull_index(t->index, a, delta);
        else
            r = in_hull(t->a, a, delta);
    } else {
        r = true;
        for (auto& c : children(t))
            if (!in_hull(c, a, delta)) {
                r = false;
                break;
            }
    }
    if (t_hull_memo.size() >= kMemoCap)
        t_hull_memo.clear();
    t_hull_memo.emplace(key, r);
    return r;
}

bool in_hull_index(const PsiIndex& idx, OrdTerm a, OrdTerm delta) {
    for (auto& c : index_parts(idx))
        if (!in_hull(c, a, delta))
            return false;
    return true;
}

bool in_hull_set(OrdTerm t, OrdTerm a, const SupportSet& X) {
    std::unordered_set<OrdTerm, OrdTermHash> gens(X.begin(), X.end());
    return hull_rec(t, a, [&](OrdTerm u) { return gens.count(u) > 0; });
}

bool in_hull_own(OrdTerm t, OrdTerm a, OrdTerm psi) {
    return hull_rec(t, a, [&](OrdTerm u) {
        if (u.kind() == Kind::Psi)
            return psi_less_direct(u, psi);
        return cmp(u, psi) < 0;
    });
}

std::vector<OrdTerm> system_constants(SystemId sys) {
    std::vector<OrdTerm> out{zero(), constant(ConstName::Omega)};
    switch (sys.kind) {
    case SystemId::Kind::BH:
        break;
    case SystemId::Kind::Pi3:
    case SystemId::Kind::PiN:
        out.push_back(constant(ConstName::BigK));
        break;
    case SystemId::Kind::Pi11:
        out.push_back(constant(ConstName::BigS));
        out.push_back(constant(ConstName::BigK));
        break;
    case SystemId::Kind::Stab:
        out.push_back(constant(ConstName::BigI));
        break;
    }
    return out;
}

std::vector<OrdTerm> hull_closure(const std::vector<OrdTerm>& universe, const std::vector<OrdTerm>& gens,
                                  OrdTerm a, SystemId sys) {
    std::unordered_set<OrdTerm, OrdTermHash> in;
    for (auto& c : system_constants(sys))
        in.insert(c);
    for (auto& g : gens)
        in.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& t : universe) {
            if (in.count(t))
                continue;
            if (t.kind() == Kind::Zero || t.kind() == Kind::Const)
                continue;
            if (t.kind() == Kind::Psi && cmp(t->b, a) >= 0)
                continue;
            bool ok = true;
            for (auto& c : children(t))
                if (!in.count(c)) {
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
    for (auto& t : universe)
        if (in.count(t))
            out.push_back(t);
    return out;
}

void clear_hull_caches() { t_hull_memo.clear(); }

}  // namespace ordwb
