#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystal/serialize.hpp"
#include "crystal/series.hpp"

namespace crystal {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
    std::optional<exponent_vector> counterexample;  // first differing monomial
};

struct VerifyOptions {
    int max_degree = 6;
    int max_chamber = 2;
    std::uint64_t seed = 1;
    /// Flips one coefficient of the first series comparison (self-test hook).
    bool inject_fault = false;
};

/// Cross-engine identities at the given sizes; failures are data, not errors.
std::vector<CheckResult> verify_all(const VerifyOptions& opts);

json checks_to_json(const std::vector<CheckResult>& checks);

} // namespace crystal
