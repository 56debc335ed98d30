#pragma once

// The acceptance suite: every quantitative certificate this library provides,
// each run at a pinned tolerance, size and time budget.

#include <cstdint>
#include <string>
#include <vector>

namespace jamesgeo::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0: no limit
};

struct Options {
    std::uint64_t seed = 20190611;
};

inline constexpr int kCriterionCount = 15;

/// Runs criterion `id` (1-based). Exceptions thrown by the library are
/// caught and reported as failures.
CriterionResult run_criterion(int id, const Options& options = {});

std::vector<CriterionResult> run_all(const Options& options = {});

/// "[PASS] 01 name (0.12 s): detail"
std::string format_line(const CriterionResult& result);

}  // namespace jamesgeo::suite
