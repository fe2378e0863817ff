#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordwb/systems.hpp"
#include "ordwb/term.hpp"

namespace ordwb {

struct Report {
    std::string suite;
    std::uint64_t universe_size = 0;
    std::uint64_t checked = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;  // the first kMaxListed counterexamples
    double elapsed_ms = 0;
    std::uint64_t max_chain = 0;  // descent only

    static constexpr std::size_t kMaxListed = 50;

    bool passed() const { return failure_count == 0; }
    void fail(std::string what);
    // Appends other's counts and failures; associative.
    void merge(const Report& other);
};

// "suite, size, failures, elapsed-ms"
std::string report_line(const Report& r);

enum class Exec { Serial, Parallel };

struct HarnessOptions {
    Budget budget;
    Exec exec = Exec::Parallel;
    std::uint64_t trials = 1000;       // descent trials per start
    std::uint64_t rho_count = 20;      // collapse suite
    std::uint64_t pairs_per_rho = 200;  // collapse suite, minimum
};

// C^alpha(X) within the valid universe of length <= budget.maxlen (plus X).
std::vector<OrdTerm> closure_c(OrdTerm alpha, const std::vector<OrdTerm>& X, SystemId sys, const Budget& budget);

Report check_linear_order(SystemId sys, const HarnessOptions& opt);
// Same laws on a caller-supplied corpus; incomparable pairs become failures.
Report check_linear_order_on(const std::vector<OrdTerm>& corpus, Exec exec);

Report check_hull_equiv(SystemId sys, const HarnessOptions& opt);
Report check_collapse_iso(SystemId sys, const HarnessOptions& opt);
Report check_collapse_valid(SystemId sys, const HarnessOptions& opt);
Report check_stepdown_props(const HarnessOptions& opt);
Report check_psi_monotone(const HarnessOptions& opt);
Report check_closure_antitone(SystemId sys, const HarnessOptions& opt);
Report check_jumpover(const HarnessOptions& opt);
Report check_stab_chain(const HarnessOptions& opt);
Report check_ladder(SystemId sys, unsigned n_max);

enum class Stepper { MaxSubterm, RandomSmaller };

// One descending chain from start. RandomSmaller draws from universe.
Report check_descent(SystemId sys, OrdTerm start, Stepper stepper, std::uint64_t fuel, std::uint64_t seed,
                     const std::vector<OrdTerm>& universe);
// Every start in the universe: one max-subterm chain and opt.trials random chains.
Report check_descent_all(SystemId sys, const HarnessOptions& opt);

// psi_Om(omega_n(C+1)) for n <= n_max, with C = Om in bh and K otherwise.
std::vector<OrdTerm> milestone_ladder(SystemId sys, unsigned n_max);

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, SystemId sys, const HarnessOptions& opt);  // InvalidTerm on unknown names

}  // namespace ordwb
