// Acceptance suite: one pass/fail line per criterion, exit code is the
// number of failures.

#include "daisy/selfcheck.hpp"

#include <iostream>

int main() {
    int failures = 0;
    for (const daisy::CriterionResult& c : daisy::run_selfcheck()) {
        std::cout << daisy::format_criterion(c) << std::endl;
        if (!c.pass) ++failures;
    }
    return failures;
}
