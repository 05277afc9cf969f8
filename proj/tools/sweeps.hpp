#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lir {

struct SweepResult {
    std::string name;
    bool ok = false;
    std::string note;
    double seconds = 0;
};

// Named theorem-scale suites; each maps onto one acceptance criterion.
std::vector<std::string> sweep_names();
SweepResult run_sweep(const std::string& name, std::uint64_t seed = 1);

}  // namespace lir
