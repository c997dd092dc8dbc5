#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopbench/gateway.hpp"
#include "hopbench/orchestrator.hpp"
#include "hopbench/scenario.hpp"
#include "hopbench/trial.hpp"

namespace hopbench::runner {

inline constexpr const char* kResultsSchemaVersion = "results/v1";

struct SolverConfig {
    enum class Kind { rule_based, single_agent, multi_agent };
    Kind kind = Kind::rule_based;
    orchestrator::WorkflowConfig workflow;  // agent kinds only

    std::string id() const;
};

struct CellKey {
    std::string model;
    std::string solver;
    std::string task_type;
    int difficulty = 1;

    std::string str() const;
    bool operator<(const CellKey& o) const { return str() < o.str(); }
};

struct Cell {
    std::vector<TrialRecord> trials;
    int successes = 0;
    int n = 0;
    bool incomplete = false;
};

struct ExperimentMatrix {
    std::map<CellKey, Cell> cells;
    bool complete = true;

    void add(const CellKey& key, TrialRecord record);
};

struct MatrixConfig {
    std::vector<gateway::ModelSpec> models;
    std::vector<SolverConfig> solvers;
    std::vector<TaskType> task_types = {TaskType::structured, TaskType::contextual};
    std::vector<int> difficulties = {1, 2, 3};
    int trials_per_cell = 5;
    std::uint64_t master_seed = 42;
    int max_attempts = 50;

    void validate() const;
};

// Scenario seeds depend only on the task dimensions and trial index, never on
// the model or solver: every solver in a comparison sees identical scenarios.
std::uint64_t derive_scenario_seed(std::uint64_t master_seed, TaskType task,
                                   int difficulty, int trial_index);

std::string trial_id(const CellKey& key, int trial_index, std::uint64_t master_seed);

using BackendMap = std::map<std::string, std::shared_ptr<gateway::Backend>>;

struct RunOutcome {
    ExperimentMatrix matrix;
    int executed = 0;  // trials run in this invocation (excludes resumed ones)
    int failed = 0;    // trials lost to backend hard failures
    std::string results_path;
    std::string manifest_path;
};

// Executes every (model x solver x task x difficulty x trial) cell, streaming
// TrialRecords to <out_dir>/results.jsonl (append-only, deterministic order)
// with transcripts in <out_dir>/transcripts/. Already-persisted trials are
// skipped, which makes an interrupted run resumable. Backend hard failures
// mark the cell incomplete and the run continues.
RunOutcome run_experiment(const MatrixConfig& matrix_config,
                          const ScenarioConfig& scenario_base, const BackendMap& backends,
                          const std::string& out_dir);

ExperimentMatrix load_matrix(const std::string& results_path);

std::string record_to_json(const TrialRecord& r, const CellKey& key, int trial_index);
std::pair<TrialRecord, CellKey> record_from_json(const std::string& line);

// Post-hoc analyst scoring: the fraction of task-relevant atoms (chain entity
// names plus the terminal attribute value) present in the payload, matched
// after trimming and case folding. Empty payload scores 0.
double score_entity_extraction(const std::vector<std::string>& analyst_payload,
                               const FactGraph& graph);

// Success-rate drop in percentage points, computed on rates rounded to one
// decimal the way reports print them. Both solvers must have seen identical
// scenario sets.
double reasoner_ablation_delta(const ExperimentMatrix& matrix, const std::string& full_id,
                               const std::string& ablated_id,
                               const std::string& task_type = "contextual");

}  // namespace hopbench::runner
