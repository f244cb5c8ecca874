#pragma once

// Reproduction suites: each claim recomputes a family of leading minors with
// the elimination oracle and compares against an independently evaluated
// closed form or structural statement.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace minorlab {

struct ClaimResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First failing case, empty when passed.
    std::string counterexample;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
std::vector<ClaimResult> run_suite(std::string_view suite);

/// Runs every suite in order.
std::vector<ClaimResult> run_all_suites();

} // namespace minorlab
