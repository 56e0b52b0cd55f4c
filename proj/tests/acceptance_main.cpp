#include <cstdio>
#include <iostream>

#include "prodtop/acceptance.hpp"

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    auto results = prodtop::run_acceptance(filter);
    bool all = !results.empty();
    for (const auto& r : results) {
        std::cout << prodtop::format_criterion_line(r) << "\n";
        for (const auto& line : r.lines) std::cout << line << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: failures present") << "\n";
    return all ? 0 : 1;
}
