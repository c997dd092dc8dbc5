#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopbench/scenario.hpp"

namespace hopbench {

// One solver run over one scenario.
struct TrialRecord {
    std::string scenario_id;
    std::string solver_id;
    std::string model;
    std::string task_type;
    int difficulty = 1;
    int hop_count = 1;
    int trial_index = 0;
    bool success = false;
    int attempts = 0;     // number of verified candidates (== index of first hit on success)
    int rounds_used = 0;  // multi-agent refinement rounds; 0 for rule-based
    std::string transcript_ref;
    double wall_ms = 0.0;
    std::uint64_t master_seed = 0;
    std::uint64_t scenario_seed = 0;
    // Post-hoc analyst extraction score; negative when not applicable.
    double extraction_accuracy = -1.0;
};

// Budget-enforcing candidate checker shared by every solver. Duplicate
// submissions are ignored rather than charged against the budget.
class Verifier {
  public:
    Verifier(const Scenario& scenario, int budget, MatchPolicy policy = MatchPolicy::exact)
        : scenario_(scenario), budget_(budget), policy_(policy) {}

    // Returns true on a hit. No-op once succeeded or exhausted.
    bool try_candidate(const std::string& candidate) {
        if (success_ || exhausted()) return success_ && candidate == hit_;
        for (const auto& [c, ok] : log_)
            if (c == candidate) return false;
        const bool ok = verify_candidate(scenario_, candidate, policy_);
        log_.emplace_back(candidate, ok);
        ++attempts_;
        if (ok) {
            success_ = true;
            hit_ = candidate;
        }
        return ok;
    }

    bool succeeded() const { return success_; }
    bool exhausted() const { return attempts_ >= budget_; }
    int attempts() const { return attempts_; }
    int budget() const { return budget_; }
    int remaining() const { return budget_ - attempts_; }

    std::vector<std::string> failed_candidates() const {
        std::vector<std::string> out;
        for (const auto& [c, ok] : log_)
            if (!ok) out.push_back(c);
        return out;
    }

    const std::vector<std::pair<std::string, bool>>& log() const { return log_; }

  private:
    const Scenario& scenario_;
    int budget_;
    MatchPolicy policy_;
    int attempts_ = 0;
    bool success_ = false;
    std::string hit_;
    std::vector<std::pair<std::string, bool>> log_;
};

}  // namespace hopbench
