#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::repro {

struct Item {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// Re-run the bundled reference constructions end to end and check each
/// against its known values. Covers the Singer reproduction, the dense
/// Sidon set mod 31, the empty size-7 search mod 43, the crystal-ball count
/// identities, the grid/quadratic constructions, and the d^2+1 state-design
/// family.
std::vector<Item> run_suite();

/// Render the pass/fail table; returns true iff every item passed.
bool print_table(const std::vector<Item>& items, std::ostream& out);

}  // namespace toric::repro
