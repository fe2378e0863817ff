#pragma once

#include <vector>

#include "ordwb/term.hpp"

namespace ordwb {

enum class Cmp : int { Less = -1, Equal = 0, Greater = 1 };

const char* cmp_symbol(Cmp c);

// Total comparison shared by every system; -1, 0 or 1.
// Throws Error(InvalidTerm) when the operands are not comparable.
int cmp(OrdTerm a, OrdTerm b);
inline bool less(OrdTerm a, OrdTerm b) { return cmp(a, b) < 0; }

// beta < alpha for psi terms by the direct cases only (subscript bound,
// smaller argument, equal argument with smaller index).
bool psi_less_direct(OrdTerm beta, OrdTerm alpha);

// As cmp, after checking that both terms only use constructors of sys.
Cmp compare(SystemId sys, OrdTerm a, OrdTerm b);

// Order on psi superscripts of one kind; None reads as the zero index.
bool index_less(const PsiIndex& x, const PsiIndex& y);

// (beta, nu) < alpha with alpha read as a sum of Lambda^beta_i * a_i.
bool less_pair(OrdTerm beta, OrdTerm nu, OrdTerm alpha, ConstName lam = ConstName::BigK);
// (nu_k, ..., nu_{N-1}) < alpha; v.size() must be at most N-2.
bool less_vec(const std::vector<OrdTerm>& v, OrdTerm alpha, int N, ConstName lam = ConstName::BigK);

void clear_caches();

}  // namespace ordwb
