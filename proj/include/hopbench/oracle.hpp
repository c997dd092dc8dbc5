#pragma once

#include <array>
#include <cstdint>

#include "hopbench/gateway.hpp"

namespace hopbench::oracle {

// Capability profile for the scripted oracle agent. Every probability is a
// deterministic keyed roll, so the same scenario and profile always produce
// the same reply.
struct OracleProfile {
    double extraction_accuracy = 0.95;
    // Probability the agent completes the cross-section synthesis for a task
    // of the given hop count (index 1..4; index 0 unused).
    std::array<double, 5> synthesis_per_hop = {0.0, 0.9, 0.7, 0.45, 0.25};
    // Probability a failed synthesis is recovered on a refinement round.
    double refinement_recovery = 0.35;
    // Multiplicative penalty on the first multi-agent round (coordination cost).
    double round_overhead = 0.85;
    // Extra penalty when the generator works without strategist hypotheses.
    double unguided_penalty = 0.5;
    std::uint64_t seed = 0;

    void validate() const;
};

// Plays whichever agent role the prompt's system message selects. Solves from
// the document text embedded in the prompt alone -- it never sees a scenario's
// hidden graph or target -- and degrades its behavior per the profile.
class OracleBackend final : public gateway::Backend {
  public:
    explicit OracleBackend(OracleProfile profile);
    ~OracleBackend() override;
    gateway::ChatResult complete(const gateway::ChatRequest& request) override;
    std::string id() const override { return "oracle"; }

    const OracleProfile& profile() const { return profile_; }

  private:
    struct ParseCache;
    OracleProfile profile_;
    std::unique_ptr<ParseCache> cache_;  // memoized document parses
};

}  // namespace hopbench::oracle
