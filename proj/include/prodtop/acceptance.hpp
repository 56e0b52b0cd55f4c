#ifndef PRODTOP_ACCEPTANCE_HPP
#define PRODTOP_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace prodtop {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double limit = 0.0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> lines;  // claim / expected / computed rows
};

/// Runs every acceptance criterion whose id or name contains the filter
/// (empty filter runs all), timing each one against its budget.
std::vector<CriterionResult> run_acceptance(const std::string& filter);

std::string format_criterion_line(const CriterionResult& r);

} // namespace prodtop

#endif
