#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "famlab/family.hpp"

namespace famlab {

// One entry of the claim-verification suite. All measured quantities
// are exact integers or booleans; PASS means measured matches expected
// exactly.
struct ClaimRecord {
    std::string id;
    std::string anchor;  // human-readable statement of the claim
    nlohmann::ordered_json params;
    std::string verdict;  // "PASS" | "FAIL" | "ERROR"
    nlohmann::ordered_json measured;
    nlohmann::ordered_json expected;
    std::int64_t elapsed_ms = 0;
};

struct ClaimOptions {
    // Override for the q(3) length-6 witness (claim C6-lower).
    std::optional<SetFamily> q3_witness;
    // Enumeration candidate budget override; overruns yield ERROR
    // verdicts without aborting the suite.
    std::optional<std::uint64_t> candidate_budget;
};

// Claim ids in execution (dependency) order.
const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);

// Runs the selected claims; every id must be valid. The returned
// records follow execution order and are complete even when claims
// fail or error.
std::vector<ClaimRecord> run_suite(const std::vector<std::string>& selection,
                                   const ClaimOptions& opts = {});

// {"claims":[...sorted by id...],"summary":{"pass","fail","error"},
//  "coverage":[{"statement","claims"}...]}
nlohmann::ordered_json suite_report(const std::vector<ClaimRecord>& records);

// Static table mapping each verified statement to the claims covering it.
const std::vector<std::pair<std::string, std::vector<std::string>>>& statement_coverage();

}  // namespace famlab
