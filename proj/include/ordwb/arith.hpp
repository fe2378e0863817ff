#pragma once

#include <vector>

#include "ordwb/term.hpp"

namespace ordwb {

// Normal-form sum a + b.
OrdTerm add(OrdTerm a, OrdTerm b);
inline OrdTerm add(OrdTerm a, OrdTerm b, SystemId) { return add(a, b); }
OrdTerm natural_sum(OrdTerm a, OrdTerm b);
inline OrdTerm natural_sum(OrdTerm a, OrdTerm b, SystemId) { return natural_sum(a, b); }
bool is_dotted(OrdTerm a, OrdTerm b);

// Ordinal product of ordinary terms.
OrdTerm mul(OrdTerm a, OrdTerm c);
// Product where a may carry theta-tilde parts (coefficients attach to them).
OrdTerm lam_mul(OrdTerm a, OrdTerm c, ConstName lam);
// The d with b + d = c; requires b <= c.
OrdTerm lsub(OrdTerm b, OrdTerm c);

OrdTerm veblen(OrdTerm b, OrdTerm x);
inline OrdTerm veblen(OrdTerm b, OrdTerm x, SystemId) { return veblen(b, x); }
OrdTerm omega_pow(OrdTerm e);
// e with omega^e = p for an ordinary principal p.
OrdTerm exponent_of(OrdTerm p);
// omega_n(x): n-fold tower omega^omega^...^x.
OrdTerm omega_tower(unsigned n, OrdTerm x);

// theta_c(a), the c-th iterate of omega^.
OrdTerm theta(OrdTerm c, OrdTerm a);
OrdTerm theta_tilde(OrdTerm b, OrdTerm x, ConstName lam);
inline OrdTerm theta_tilde(OrdTerm b, OrdTerm x, SystemId sys) { return theta_tilde(b, x, sys.lambda()); }
OrdTerm theta_tilde_inv(OrdTerm c, OrdTerm z, ConstName lam);

// Parts of a term read in theta-tilde normal form; ordinary parts below the
// big constant are grouped into one part with principal 1.
struct LamPart {
    OrdTerm prin;
    OrdTerm coeff;
    OrdTerm whole;
};
bool is_lam_principal(OrdTerm p, ConstName lam);
std::vector<LamPart> lam_parts(OrdTerm x, ConstName lam);
std::vector<OrdTerm> segments(OrdTerm x, ConstName lam);
OrdTerm head(OrdTerm x, ConstName lam);
OrdTerm tail(OrdTerm x, ConstName lam);

OrdTerm nextreg(OrdTerm base);
OrdTerm dagger(OrdTerm base);
OrdTerm iof(OrdTerm rho);

}  // namespace ordwb
