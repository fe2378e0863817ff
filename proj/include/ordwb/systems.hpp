#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordwb/term.hpp"

namespace ordwb {

struct Budget {
    std::uint64_t maxlen = 5;
    std::uint64_t max_items = 2000000;
    std::uint64_t fuel = 1000000;
    std::uint64_t seed = 1;
};

struct Violation {
    std::string rule;
    std::string path;  // "$" is the whole term; ".sub", ".arg", ".part[i]" ... descend
};

struct Verdict {
    bool ok = true;
    std::vector<Violation> reason;
};

bool constructors_legal(SystemId sys, OrdTerm t);

Verdict validate(SystemId sys, OrdTerm t);
inline bool is_valid(SystemId sys, OrdTerm t) { return validate(sys, t).ok; }

// m(t). top is set for the big constant, whose attribute lies above every index.
struct MValue {
    bool top = false;
    PsiIndex index;
};
MValue m_of(SystemId sys, OrdTerm t);  // NoAttribute
OrdTerm s_of(OrdTerm t);               // NoAttribute
OrdTerm p0(SystemId sys, OrdTerm t);   // NoAttribute

// r reaches s through psi subscripts.
bool prec(OrdTerm r, OrdTerm s);
// The strongly stable or S constant above rho in its subscript chain; NoAttribute if none.
OrdTerm collapse_root(SystemId sys, OrdTerm rho);

// Every valid term of length <= budget.maxlen, ascending. BudgetExceeded past max_items.
std::vector<OrdTerm> enumerate(SystemId sys, const Budget& budget);

// Subterms (including t) strictly below bound.
std::vector<OrdTerm> subterms_below(OrdTerm t, OrdTerm bound, SystemId sys);
// All subterms including t itself.
std::vector<OrdTerm> subterms(OrdTerm t);

// Stable merge sort under cmp. Comparison errors fall back to node order and
// are counted in *errors when given.
void sort_terms(std::vector<OrdTerm>& v, std::size_t* errors = nullptr);

}  // namespace ordwb
