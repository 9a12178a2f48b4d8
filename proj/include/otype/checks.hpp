#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otype::checks {

struct SuiteOptions {
    std::uint64_t seed = 0;
    /// Overrides the suite's default case count (exhaustive suites ignore it).
    std::optional<std::size_t> cases;
    /// Overrides the enumeration cap (brute-force) or witness rank cap.
    std::optional<std::size_t> cap;
};

struct SuiteResult {
    std::string name;
    std::string title;
    bool passed = true;
    std::size_t cases = 0;
    std::size_t failures = 0;
    /// Smallest failing case found, empty when the suite passed.
    std::string counterexample;
    double seconds = 0.0;
};

/// Suite names in the order `all` runs them:
///   counterexample k0-law proof-trace brute-force structure absorption
///   expansion monotonicity witness
const std::vector<std::string>& suite_names();

/// DomainError for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

std::vector<SuiteResult> run_all(const SuiteOptions& options = {});

}  // namespace otype::checks
