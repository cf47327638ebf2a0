#ifndef PDQ_VERIFY_HPP
#define PDQ_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdq::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    // Informative criteria are reported but never fail the suite.
    bool gating = true;
    bool passed = false;
    std::string detail;
};

CriterionResult correctness_sweep();
CriterionResult partition_oracle();
CriterionResult linear_in_distinct_values();
CriterionResult pivot_reuse_trace();
CriterionResult linear_patterns();
CriterionResult worst_case_bound();
CriterionResult depth_bound();
CriterionResult entropy_table();
CriterionResult bench_determinism();
CriterionResult performance_report();

// "[PASS] 3 name: detail", "[FAIL] ...", or "[INFO] ..." for informative criteria.
std::string format_line(const CriterionResult& result);

// Runs every criterion in order, printing one line each as it completes.
std::vector<CriterionResult> run_all(std::ostream& out);

bool all_gating_passed(const std::vector<CriterionResult>& results);

}  // namespace pdq::verify

#endif  // PDQ_VERIFY_HPP
