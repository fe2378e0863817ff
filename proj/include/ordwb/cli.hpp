#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ordwb/systems.hpp"

namespace ordwb {

// "maxlen=4,fuel=1000,seed=7,items=50000"; keys may be omitted. Throws
// Error(InvalidTerm) on malformed text.
Budget parse_budget(const std::string& text, Budget base = {});

// Full command line without argv[0]. Exit codes: 0 ok, 1 domain error or a
// failed check, 2 usage or syntax error. env_budget stands in for ORDWB_BUDGET.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_budget);

}  // namespace ordwb
