#include "ordwb/parse.hpp"

#include <cctype>
#include <limits>

#include "ordwb/arith.hpp"
#include "ordwb/finite_fn.hpp"

namespace ordwb {

namespace {

class Parser {
public:
    Parser(std::string_view s, const ParseOptions& o) : s_(s), lam_(o.lam) {}

    OrdTerm run() {
        OrdTerm t = sum();
        skip();
        if (i_ < s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(i_ + 1, msg); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) {
            if (i_ >= s_.size())
                fail(std::string("expected '") + c + "' before end of input");
            fail(std::string("expected '") + c + "'");
        }
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    std::uint64_t number() {
        std::uint64_t n = 0;
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(s_[i_] - '0');
            if (n > (std::numeric_limits<std::uint32_t>::max() - d) / 10) {
                i_ = start;
                fail("number too large");
            }
            n = n * 10 + d;
            ++i_;
        }
        return n;
    }

    OrdTerm sum() {
        OrdTerm t = product();
        while (eat('+'))
            t = add(t, product());
        return t;
    }

    OrdTerm product() {
        OrdTerm t = primary();
        while (eat('*')) {
            skip();
            if (eat('(')) {
                OrdTerm c = sum();
                expect(')');
                t = lam_mul(t, c, lam_);
            } else if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                t = lam_mul(t, nat(number()), lam_);
            } else {
                fail("expected a natural number or '(' after '*'");
            }
        }
        return t;
    }

    std::string word() {
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '~'))
            ++i_;
        if (i_ < s_.size() && s_[i_] == '+' && s_.substr(start, i_ - start) == "reg")
            ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    std::pair<OrdTerm, OrdTerm> two_args() {
        expect('(');
        OrdTerm a = sum();
        expect(',');
        OrdTerm b = sum();
        expect(')');
        return {a, b};
    }

    OrdTerm one_arg() {
        expect('(');
        OrdTerm a = sum();
        expect(')');
        return a;
    }

    OrdTerm primary() {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return nat(number());
        if (c == '(') {
            ++i_;
            OrdTerm t = sum();
            expect(')');
            return t;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            fail("unexpected '" + std::string(1, c) + "'");
        const std::size_t start = i_;
        const std::string w = word();
        if (w == "Om")
            return constant(ConstName::Omega);
        if (w == "K")
            return constant(ConstName::BigK);
        if (w == "S")
            return constant(ConstName::BigS);
        if (w == "I") {
            if (eat('[')) {
                OrdTerm r = sum();
                expect(']');
                return iof(r);
            }
            return constant(ConstName::BigI);
        }
        if (w == "w")
            return omega_pow(one());
        if (w == "phi") {
            auto [b, x] = two_args();
            return veblen(b, x);
        }
        if (w == "t~") {
            auto [b, x] = two_args();
            return theta_tilde(b, x, lam_);
        }
        if (w == "th") {
            auto [b, x] = two_args();
            return theta(b, x);
        }
        if (w == "reg+")
            return nextreg(one_arg());
        if (w == "dag")
            return dagger(one_arg());
        if (w == "psi")
            return psi();
        i_ = start;
        fail("unknown name '" + w + "'");
    }

    OrdTerm psi() {
        expect('(');
        OrdTerm sub = sum();
        PsiIndex idx;
        if (eat(',')) {
            if (eat('[')) {
                std::vector<OrdTerm> v;
                if (!peek(']')) {
                    v.push_back(sum());
                    while (eat(','))
                        v.push_back(sum());
                }
                expect(']');
                idx = PsiIndex::of_vec(std::move(v));
            } else if (eat('{')) {
                std::vector<std::pair<OrdTerm, OrdTerm>> es;
                if (!peek('}')) {
                    do {
                        OrdTerm k = sum();
                        expect(':');
                        es.emplace_back(k, sum());
                    } while (eat(','));
                }
                const std::size_t at = i_;
                expect('}');
                try {
                    idx = PsiIndex::of_fn(make_fn(std::move(es), lam_));
                } catch (const Error& e) {
                    i_ = at;
                    fail(e.what());
                }
            } else {
                idx = PsiIndex::of_ord(sum());
            }
        }
        expect(';');
        OrdTerm a = sum();
        expect(')');
        return mk_psi(sub, std::move(idx), a);
    }

    std::string_view s_;
    std::size_t i_ = 0;
    ConstName lam_;
};

const char* const_text(ConstName c, Style st) {
    const bool u = st == Style::Unicode;
    switch (c) {
    case ConstName::Omega: return u ? "Ω" : "Om";
    case ConstName::BigS: return u ? "𝕊" : "S";
    case ConstName::BigK: return u ? "𝕂" : "K";
    case ConstName::BigI: return u ? "𝕀" : "I";
    }
    return "?";
}

void render_into(OrdTerm t, Style st, std::string& out);

void render_index_into(const PsiIndex& idx, Style st, std::string& out) {
    switch (idx.tag) {
    case PsiIndex::Tag::None:
        return;
    case PsiIndex::Tag::Ord:
        render_into(idx.ord, st, out);
        return;
    case PsiIndex::Tag::Vec:
        out += '[';
        for (std::size_t i = 0; i < idx.vec.size(); ++i) {
            if (i)
                out += ", ";
            render_into(idx.vec[i], st, out);
        }
        out += ']';
        return;
    case PsiIndex::Tag::Fn:
        out += '{';
        for (std::size_t i = 0; i < idx.fn.size(); ++i) {
            if (i)
                out += ", ";
            render_into(idx.fn.entries[i].first, st, out);
            out += ": ";
            render_into(idx.fn.entries[i].second, st, out);
        }
        out += '}';
        return;
    }
}

void render_into(OrdTerm t, Style st, std::string& out) {
    const bool u = st == Style::Unicode;
    std::uint64_t n = 0;
    if (as_nat(t, n)) {
        out += std::to_string(n);
        return;
    }
    switch (t.kind()) {
    case Kind::Zero:
        out += '0';
        return;
    case Kind::Const:
        out += const_text(t->cname, st);
        return;
    case Kind::Sum:
        for (std::size_t i = 0; i < t->parts.size(); ++i) {
            const Part& p = t->parts[i];
            if (i)
                out += " + ";
            if (p.prin == one() && !p.coeff) {
                out += std::to_string(p.count);
                continue;
            }
            render_into(p.prin, st, out);
            if (p.coeff) {
                out += " * (";
                render_into(p.coeff, st, out);
                out += ')';
            } else if (p.count != 1) {
                out += " * " + std::to_string(p.count);
            }
        }
        return;
    case Kind::Veblen:
        if (t->a.is_zero() && t->b == one()) {
            out += u ? "ω" : "w";
            return;
        }
        out += u ? "φ(" : "phi(";
        render_into(t->a, st, out);
        out += ", ";
        render_into(t->b, st, out);
        out += ')';
        return;
    case Kind::Theta:
        out += u ? "θ̃(" : "t~(";
        render_into(t->a, st, out);
        out += ", ";
        render_into(t->b, st, out);
        out += ')';
        return;
    case Kind::Psi:
        out += u ? "ψ(" : "psi(";
        render_into(t->a, st, out);
        if (!t->index.is_none()) {
            out += ", ";
            render_index_into(t->index, st, out);
        }
        out += "; ";
        render_into(t->b, st, out);
        out += ')';
        return;
    case Kind::NextReg:
        out += "reg+(";
        render_into(t->a, st, out);
        out += ')';
        return;
    case Kind::Dagger:
        out += u ? "†(" : "dag(";
        render_into(t->a, st, out);
        out += ')';
        return;
    case Kind::IOf:
        out += u ? "𝕀[" : "I[";
        render_into(t->a, st, out);
        out += ']';
        return;
    }
}

}  // namespace

OrdTerm parse(std::string_view text, const ParseOptions& opts) { return Parser(text, opts).run(); }

OrdTerm parse(std::string_view text, SystemId sys) {
    ParseOptions o;
    o.lam = sys.lambda();
    return parse(text, o);
}

std::string render(OrdTerm t, Style style) {
    std::string out;
    render_into(t, style, out);
    return out;
}

std::string render_index(const PsiIndex& idx, Style style) {
    std::string out;
    render_index_into(idx, style, out);
    return out;
}

}  // namespace ordwb
