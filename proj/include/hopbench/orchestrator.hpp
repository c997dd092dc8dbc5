#pragma once

#include <string>
#include <vector>

#include "hopbench/gateway.hpp"
#include "hopbench/scenario.hpp"
#include "hopbench/trial.hpp"

namespace hopbench::orchestrator {

enum class Mode { single_agent, multi_agent };
enum class Ablation { full, no_strategist, no_refinement };

const char* to_string(Mode m);
const char* to_string(Ablation a);

struct WorkflowConfig {
    Mode mode = Mode::multi_agent;
    int max_rounds = 3;
    int max_attempts = 50;
    Ablation ablation = Ablation::full;
    int max_failures_in_prompt = 20;
    MatchPolicy match_policy = MatchPolicy::exact;
    std::string model = "scripted";
    double temperature = 0.4;
    double top_p = 0.9;
    int max_tokens = 2048;

    void validate() const;
    std::string solver_id() const;  // e.g. "multi-agent/no-strategist"
};

struct TranscriptTurn {
    std::string role;  // single | analyst | strategist | generator
    int round = 1;
    std::string system;
    std::string prompt;
    std::string reply;
    std::vector<std::string> parsed;  // candidates or payload lines
    double latency_ms = 0;
    bool timed_out = false;
};

// Append-only; parsing the stored replies must reproduce the stored payloads.
struct AgentTranscript {
    std::vector<TranscriptTurn> turns;
};

struct AgentState {
    std::vector<std::string> extracted_facts;  // analyst payload lines
    std::vector<std::string> hypotheses;       // strategist payload lines
    std::vector<std::string> failed_attempts;  // no duplicates, oldest first
    int round = 0;
    int remaining_attempts = 0;
};

struct WorkflowResult {
    TrialRecord record;
    AgentTranscript transcript;
    AgentState state;                           // final state
    std::vector<std::string> analyst_entities;  // surfaces for extraction scoring
    // Full failure-ledger snapshot at the start of each round; the prompts
    // receive the most recent max_failures_in_prompt of these.
    std::vector<std::vector<std::string>> failures_per_round;
};

// Order-preserving, deduplicated lines of the reply's fenced blocks.
std::vector<std::string> parse_candidates(const std::string& reply);

WorkflowResult run_single_agent(const Scenario& scenario, const WorkflowConfig& config,
                                gateway::Backend& backend);
WorkflowResult run_multi_agent(const Scenario& scenario, const WorkflowConfig& config,
                               gateway::Backend& backend);
WorkflowResult run_workflow(const Scenario& scenario, const WorkflowConfig& config,
                            gateway::Backend& backend);

std::string transcript_to_json(const AgentTranscript& t);
AgentTranscript transcript_from_json(const std::string& json_text);

}  // namespace hopbench::orchestrator
