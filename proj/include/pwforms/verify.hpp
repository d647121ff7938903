#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwforms/elimination.hpp"

namespace pwf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The acceptance checks, in order; every comparison is exact.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, ExecutionPolicy policy = kDefaultPolicy);

} // namespace pwf
