#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopbench/scenario.hpp"
#include "hopbench/trial.hpp"

namespace hopbench::baseline {

// Rule-based solver: fixed lexical patterns plus single-hop (same-section)
// candidate combination. Deliberately no cross-section linking.

struct ExtractedEntity {
    enum class Kind { name, year, org, place };
    std::string surface;
    Kind kind = Kind::name;
    int doc = 0;
    int section = 0;
    std::size_t offset = 0;  // char offset into the section text
};

const char* to_string(ExtractedEntity::Kind k);

// Scans section body text for capitalized name tokens, 4-digit years, and
// suffix-marked org/event/place tokens. Headings and titles are not scanned.
std::vector<ExtractedEntity> extract_entities(const std::vector<Document>& documents);

struct CandidateSet {
    std::vector<std::string> candidates;  // deduplicated, priority-ordered
};

// Single-hop combination: only pairs of entities sharing a section are
// surfaced, ordered by co-location tightness then lexically, each expanded
// under the full combination-rule surface set.
CandidateSet generate_candidates(const std::vector<ExtractedEntity>& entities, int budget);

// Extract -> combine -> verify, stopping at first hit or budget exhaustion.
// Only scenario.documents is read for solving; the rest of the scenario
// feeds the verifier.
TrialRecord solve(const Scenario& scenario, int budget,
                  MatchPolicy policy = MatchPolicy::exact);

inline constexpr const char* kSolverId = "rule-based";

}  // namespace hopbench::baseline
