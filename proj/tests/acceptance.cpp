// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "pwforms/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    auto results = pwf::run_acceptance(seed);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " — " << r.detail
                  << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
    return all ? 0 : 1;
}
