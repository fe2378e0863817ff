#pragma once

#include <vector>

#include "ordwb/term.hpp"

namespace ordwb {

// Finite term set, ascending under cmp, no duplicates.
using SupportSet = std::vector<OrdTerm>;

SupportSet sc(OrdTerm t);
SupportSet sc_index(const PsiIndex& idx);
SupportSet sc_fn(const FiniteFn& f);

SupportSet e_set(OrdTerm t);
SupportSet g_set(OrdTerm delta, OrdTerm t);
SupportSet k_set(OrdTerm delta, OrdTerm t);
SupportSet k_small(OrdTerm delta, OrdTerm t);

// t in H_a(delta).
bool in_hull(OrdTerm t, OrdTerm a, OrdTerm delta);
bool in_hull_index(const PsiIndex& idx, OrdTerm a, OrdTerm delta);
// t in H_a(X) for a finite generator set X.
bool in_hull_set(OrdTerm t, OrdTerm a, const SupportSet& X);
// t in H_a(psi) for a psi term under test: u < psi is only concluded by
// comparison cases that do not presuppose psi is itself a notation.
bool in_hull_own(OrdTerm t, OrdTerm a, OrdTerm psi);

// Least subset of universe containing gens, the constants of sys, and closed
// under the constructors, with psi arguments below a. universe must be closed
// under immediate subterms.
std::vector<OrdTerm> hull_closure(const std::vector<OrdTerm>& universe, const std::vector<OrdTerm>& gens,
                                  OrdTerm a, SystemId sys);

std::vector<OrdTerm> system_constants(SystemId sys);

void clear_hull_caches();

}  // namespace ordwb
