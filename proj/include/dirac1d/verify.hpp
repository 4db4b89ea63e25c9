// Self-contained invariant suite: every library-level property that the CLI
// `verify` verb reports and the acceptance harness gates on. Each check is
// deterministic (fixed seeds) and runs in well under a minute combined.

#pragma once

#include <string>
#include <vector>

namespace dirac1d {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult check_matching_closed_forms();  // exp formula vs literal matrices
CheckResult check_unitarity_analytic();     // |sigma|^2+|rho|^2 = 1, closed forms
CheckResult check_unitarity_numeric();      // same through transfer products, N <= 8
CheckResult check_symmetry_identities();    // side equality + species conjugation
CheckResult check_bound_state_tables();     // quadrant/species sweep structure
CheckResult check_pole_correspondence();    // denominator zeros <-> bound states
CheckResult check_charge_densities();       // closed-form densities + total charge
CheckResult check_phase_shifts();           // eigenvalue delta vs closed tan(2 delta)
CheckResult check_oracle_equivalence();     // analytic vs transfer, 500 draws

std::vector<CheckResult> run_verification();

}  // namespace dirac1d
