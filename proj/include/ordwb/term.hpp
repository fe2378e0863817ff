#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordwb {

enum class Kind : std::uint8_t { Zero, Const, Sum, Veblen, Theta, Psi, NextReg, Dagger, IOf };
enum class ConstName : std::uint8_t { Omega, BigS, BigK, BigI };

enum class ErrorCode {
    SyntaxError,
    InvalidTerm,
    NotPrincipal,
    ZeroArg,
    TooDeep,
    NotSpecial,
    BadCut,
    NotIrreducible,
    NoAttribute,
    BudgetExceeded,
    BadRho,
    OutOfDomain,
    NotInImage,
    ArityMismatch,
    FuelExhausted,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t column, const std::string& msg)
        : Error(ErrorCode::SyntaxError, msg), column_(column) {}
    // 1-based
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct Node;

// Handle to an interned, immutable term node. Equal terms share one node.
class OrdTerm {
public:
    OrdTerm() = default;
    explicit OrdTerm(const Node* n) : n_(n) {}

    const Node* node() const { return n_; }
    const Node* operator->() const { return n_; }
    explicit operator bool() const { return n_ != nullptr; }
    bool operator==(const OrdTerm& o) const { return n_ == o.n_; }
    bool operator!=(const OrdTerm& o) const { return n_ != o.n_; }

    Kind kind() const;
    std::uint32_t id() const;
    bool is_zero() const;
    bool is_const(ConstName c) const;

private:
    const Node* n_ = nullptr;
};

struct OrdTermHash {
    std::size_t operator()(const OrdTerm& t) const;
};

// Orders terms by node id; only for containers, not the ordinal order.
struct IdLess {
    bool operator()(const OrdTerm& a, const OrdTerm& b) const { return a.id() < b.id(); }
};

// One summand: prin * count, or prin * coeff when coeff is set (coeff >= omega).
struct Part {
    OrdTerm prin;
    std::uint64_t count = 1;
    OrdTerm coeff;
};

struct FiniteFn {
    std::vector<std::pair<OrdTerm, OrdTerm>> entries;  // sorted by key, values nonzero
    ConstName lam = ConstName::BigK;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    OrdTerm at(const OrdTerm& key) const;  // zero when absent
    bool operator==(const FiniteFn& o) const;
};

struct PsiIndex {
    enum class Tag : std::uint8_t { None, Ord, Vec, Fn };
    Tag tag = Tag::None;
    OrdTerm ord;
    std::vector<OrdTerm> vec;
    FiniteFn fn;

    static PsiIndex none() { return {}; }
    static PsiIndex of_ord(OrdTerm nu);
    static PsiIndex of_vec(std::vector<OrdTerm> v);
    static PsiIndex of_fn(FiniteFn f);
    bool is_none() const { return tag == Tag::None; }
    bool operator==(const PsiIndex& o) const;
};

struct Node {
    Kind kind = Kind::Zero;
    ConstName cname = ConstName::Omega;  // Const; Lambda for Theta
    OrdTerm a;                            // sub / base
    OrdTerm b;                            // arg
    std::vector<Part> parts;              // Sum
    PsiIndex index;                       // Psi
    std::uint32_t id = 0;
    std::uint64_t len = 1;
};

struct SystemId {
    enum class Kind : std::uint8_t { BH, Pi3, PiN, Pi11, Stab };
    Kind kind = Kind::BH;
    int n = 0;  // PiN only

    static SystemId bh() { return {Kind::BH, 0}; }
    static SystemId pi3() { return {Kind::Pi3, 0}; }
    static SystemId pin(int n) { return {Kind::PiN, n}; }
    static SystemId pi11() { return {Kind::Pi11, 0}; }
    static SystemId stab() { return {Kind::Stab, 0}; }
    bool operator==(const SystemId& o) const { return kind == o.kind && n == o.n; }

    // Big constant used by theta-tilde terms and finite functions.
    ConstName lambda() const { return kind == Kind::Stab ? ConstName::BigI : ConstName::BigK; }
    std::string name() const;
    static SystemId from_name(const std::string& s);  // throws Error(InvalidTerm)
};

// Raw interned constructors; no normalization beyond structural checks.
OrdTerm zero();
OrdTerm constant(ConstName c);
OrdTerm one();
OrdTerm mk_sum(std::vector<Part> parts);
OrdTerm mk_veblen(OrdTerm b, OrdTerm x);
OrdTerm mk_theta(OrdTerm b, OrdTerm x, ConstName lam);
OrdTerm mk_psi(OrdTerm sub, PsiIndex idx, OrdTerm arg);
OrdTerm mk_nextreg(OrdTerm base);
OrdTerm mk_dagger(OrdTerm base);
OrdTerm mk_iof(OrdTerm base);

// Constructor count, saturating.
std::uint64_t length(OrdTerm t);
std::uint64_t index_length(const PsiIndex& idx);

// Summands of t: empty for zero, one part for a non-sum.
std::vector<Part> parts_of(OrdTerm t);

// Strongly critical non-sum, non-Veblen, non-theta nodes.
bool is_atom(OrdTerm t);
// Not a sum and not zero.
bool is_principal(OrdTerm t);

// Natural number n as a term.
OrdTerm nat(std::uint64_t n);
// n when t is a natural number.
bool as_nat(OrdTerm t, std::uint64_t& n);

// Immediate children, including index components, in a fixed order.
std::vector<OrdTerm> children(OrdTerm t);

std::size_t interned_count();

}  // namespace ordwb
