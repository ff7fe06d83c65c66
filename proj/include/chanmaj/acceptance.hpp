#pragma once

#include <string>
#include <vector>

namespace chanmaj::acceptance {

struct criterion_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full acceptance battery. fast trims the randomized instance
// counts; the deterministic worked examples always run in full.
std::vector<criterion_result> run_all(bool fast = false);

} // namespace chanmaj::acceptance
