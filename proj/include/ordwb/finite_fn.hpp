#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordwb/term.hpp"

namespace ordwb {

// Sorts entries by key and drops zero values. Duplicate keys throw InvalidTerm.
FiniteFn make_fn(std::vector<std::pair<OrdTerm, OrdTerm>> entries, ConstName lam = ConstName::BigK);

FiniteFn restrict_below(const FiniteFn& f, OrdTerm c);  // f_c
FiniteFn restrict_from(const FiniteFn& f, OrdTerm c);   // f^c
FiniteFn concat(const FiniteFn& g, const FiniteFn& f, OrdTerm c);  // g_c * f^c
FiniteFn with_value(const FiniteFn& f, OrdTerm c, OrdTerm v);

std::optional<OrdTerm> next_key(const FiniteFn& f, OrdTerm c);  // least key > c
std::optional<OrdTerm> prev_key(const FiniteFn& f, OrdTerm c);  // greatest key < c
OrdTerm max_key(const FiniteFn& f);  // ZeroArg on empty f

// f <^c x
bool less_at(const FiniteFn& f, OrdTerm c, OrdTerm x);

bool is_special(const FiniteFn& f);
FiniteFn prime(const FiniteFn& f);  // NotSpecial
// h^b(g; a)
FiniteFn step_down(const FiniteFn& g, OrdTerm b, OrdTerm a);
// g_b * {b: alpha_0} where h^b(g; a)(b) = alpha_0 + Lambda. Differs from
// prime(step_down(..)) when alpha_0 ends below Lambda.
FiniteFn step_down_base_fn(const FiniteFn& g, OrdTerm b, OrdTerm a);

bool is_irreducible(const FiniteFn& f);
// f <^b_lx g; NotIrreducible unless both are irreducible.
bool lex_less(const FiniteFn& f, const FiniteFn& g, OrdTerm b);

// Pointwise f(c) <= g(c) on supp(f) u supp(g).
bool pointwise_leq(const FiniteFn& f, const FiniteFn& g);

// Coefficients a_i = 1 except the tail, and the tail only when its subscript is 1.
bool coefficients_ok(const FiniteFn& f);

// g is obtained from f by one reflection step: some d < c in supp(f) with
// (d,c) free of both supports, g_d = f_d, g(d) < f(d) + t~_{c-d}(f(c)) * omega
// and g <^c f(c).
bool derived_from(const FiniteFn& f, const FiniteFn& g);

}  // namespace ordwb
