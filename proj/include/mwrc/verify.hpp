#pragma once

// End-to-end verification checks: numbered, self-describing pass/fail
// results shared by the `mwrc verify` subcommand and the acceptance test
// binary. Tolerances are pinned inside each check.

#include <string>
#include <vector>

namespace mwrc::verify {

struct CheckResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

CheckResult check_df_optimality_threshold();   // 1
CheckResult check_df_nnc_crossing_reference(); // 2
CheckResult check_high_snr_gaps();             // 3
CheckResult check_df_af_ian_gap();             // 4
CheckResult check_dof_slopes();                // 5
CheckResult check_rate_ordering();             // 6
CheckResult check_lp_oracle_equivalence();     // 7
CheckResult check_gee2_solver_agreement();     // 8
CheckResult check_dinkelbach_analytic();       // 9
CheckResult check_game_suite();                // 10
CheckResult check_figure_claims();             // 11

std::vector<CheckResult> run_all_checks();
CheckResult run_check(int number);

// "[PASS] 3. high_snr_gaps: ..." style line.
std::string format_result(const CheckResult& r);

}  // namespace mwrc::verify
