#pragma once

#include <string>
#include <string_view>

#include "ordwb/term.hpp"

namespace ordwb {

// Text form of terms.
//   0  Om  K  S  I  w  <digits>
//   a + b        normal-form sum
//   t * n        product by a natural number
//   t * (c)      product by an ordinal coefficient
//   phi(b, x)  t~(b, x)  th(c, a)
//   psi(sub; a)  psi(sub, nu; a)  psi(sub, [v, ...]; a)  psi(sub, {c: x, ...}; a)
//   reg+(a)  dag(a)  I[r]
// Constructors normalize as they go, so parse returns normal forms.
struct ParseOptions {
    ConstName lam = ConstName::BigK;  // the constant behind t~ and {..} indices
};

OrdTerm parse(std::string_view text, const ParseOptions& opts = {});  // SyntaxError, Error
OrdTerm parse(std::string_view text, SystemId sys);

enum class Style { Ascii, Unicode };

// Ascii output parses back to the same term.
std::string render(OrdTerm t, Style style = Style::Ascii);
std::string render_index(const PsiIndex& idx, Style style = Style::Ascii);

}  // namespace ordwb
