#pragma once

#include "ordwb/term.hpp"

namespace ordwb {

// The constant S that rho collapses (S in pi11, the dagger root in stab). BadRho otherwise.
OrdTerm collapse_target(SystemId sys, OrdTerm rho);

// t in M_rho = H_{p0(rho)}(rho).
bool in_domain(SystemId sys, OrdTerm t, OrdTerm rho);  // BadRho

// t[rho/S].
OrdTerm collapse(SystemId sys, OrdTerm t, OrdTerm rho);  // BadRho, OutOfDomain

// The t in M_rho with t[rho/S] = u.
OrdTerm uncollapse(SystemId sys, OrdTerm u, OrdTerm rho);  // BadRho, NotInImage

}  // namespace ordwb
