#ifndef DAISY_SELFCHECK_HPP
#define DAISY_SELFCHECK_HPP

#include <string>
#include <vector>

namespace daisy {

/// End-to-end verification battery: reproduces the library's headline
/// constructions and bound checks with their expected values and runtime
/// budgets. Used by the acceptance test binary and `daisy demo`.
struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

std::vector<CriterionResult> run_selfcheck();

// "[PASS] 3. q3-instance (0.42s): ..." one line per criterion.
std::string format_criterion(const CriterionResult& c);

} // namespace daisy

#endif
