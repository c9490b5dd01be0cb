#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace geodex::app {

struct VerifyRequest {
    std::string family;  // tree, block, cactus, closed-forms, product
    int count = 100;
    int max_n = 14;
    std::uint64_t seed = 42;
};

struct Mismatch {
    std::string instance;  // edge-list text or a family label
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string family;
    int instances = 0;
    std::uint64_t seed = 0;
    std::vector<Mismatch> mismatches;
    /// Instances the oracle could not finish within its budget; not counted
    /// as mismatches.
    std::vector<std::string> budget_exceeded;
    double elapsed_ms = 0;

    bool ok() const { return mismatches.empty(); }
    nlohmann::json to_json() const;
};

/// Throws std::invalid_argument on an unknown family.
VerifyReport run_verify(const VerifyRequest& req);

}  // namespace geodex::app
