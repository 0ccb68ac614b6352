#pragma once

#include "leibniz/json_io.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace leibniz {

struct SuiteConfig {
    int n_min = 4;
    int n_max = 8;
    int samples = 20;
    std::uint64_t seed = 42;
    bool strict_transcription = false;
    bool parallel = false;
};

// Throws UsageError unless 4 <= n_min <= n_max and samples >= 1.
void validate_config(const SuiteConfig& config);

struct CriterionResult {
    int id = 0;
    std::string title;
    int checks = 0;
    std::map<std::string, int> per_family; // checks per family label
    std::vector<std::string> failures;     // "label: message", in task order
    bool passed() const { return failures.empty(); }
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CriterionResult> criteria;
    std::vector<std::string> patches_exercised;
    bool passed() const;
};

constexpr int criterion_count = 10;
std::string criterion_title(int id);

// One criterion over the configured range of n. Criteria with their own n
// range (7: n >= 5, 9: n in {5, 6}, 10: fixed sizes) intersect it.
CriterionResult run_criterion(int id, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

std::string format_report(const SuiteReport& report);
Json report_to_json(const SuiteReport& report);

// Dimension of the derivation algebra by an integer fraction-free elimination
// over constraints assembled map by map, sharing no code with derivation_space.
int derivation_dim_oracle(const StructureTensor& T);

} // namespace leibniz
