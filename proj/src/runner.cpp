#include "hopbench/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hopbench/baseline.hpp"
#include "hopbench/rng.hpp"

namespace hopbench::runner {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string SolverConfig::id() const {
    return kind == Kind::rule_based ? baseline::kSolverId : workflow.solver_id();
}

std::string CellKey::str() const {
    return model + "|" + solver + "|" + task_type + "|d" + std::to_string(difficulty);
}

void ExperimentMatrix::add(const CellKey& key, TrialRecord record) {
    Cell& cell = cells[key];
    cell.n += 1;
    cell.successes += record.success ? 1 : 0;
    cell.trials.push_back(std::move(record));
}

void MatrixConfig::validate() const {
    if (models.empty()) throw ConfigError("matrix needs at least one model");
    if (solvers.empty()) throw ConfigError("matrix needs at least one solver");
    if (task_types.empty()) throw ConfigError("matrix needs at least one task type");
    if (difficulties.empty()) throw ConfigError("matrix needs at least one difficulty");
    if (trials_per_cell < 1) throw ConfigError("trials_per_cell must be >= 1");
    if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
    for (const auto& m : models) m.validate();
}

std::uint64_t derive_scenario_seed(std::uint64_t master_seed, TaskType task,
                                   int difficulty, int trial_index) {
    std::uint64_t h = mix(master_seed, "scenario-seed");
    h = mix(h, to_string(task));
    h = mix(h, static_cast<std::uint64_t>(difficulty));
    h = mix(h, static_cast<std::uint64_t>(trial_index));
    return h;
}

std::string trial_id(const CellKey& key, int trial_index, std::uint64_t master_seed) {
    return key.str() + "|t" + std::to_string(trial_index) + "|s" +
           std::to_string(master_seed);
}

std::string record_to_json(const TrialRecord& r, const CellKey& key, int trial_index) {
    ordered_json j{
        {"schema_version", kResultsSchemaVersion},
        {"trial_id", trial_id(key, trial_index, r.master_seed)},
        {"model", key.model},
        {"solver", key.solver},
        {"task_type", key.task_type},
        {"difficulty", key.difficulty},
        {"trial_index", trial_index},
        {"master_seed", r.master_seed},
        {"scenario_seed", r.scenario_seed},
        {"scenario_id", r.scenario_id},
        {"hop_count", r.hop_count},
        {"success", r.success},
        {"attempts", r.attempts},
        {"rounds_used", r.rounds_used},
        {"extraction_accuracy", r.extraction_accuracy},
        {"transcript_ref", r.transcript_ref},
        {"wall_ms", r.wall_ms},
    };
    return j.dump();
}

std::pair<TrialRecord, CellKey> record_from_json(const std::string& line) {
    const json j = json::parse(line);
    if (j.at("schema_version").get<std::string>() != kResultsSchemaVersion)
        throw AnalysisError("unsupported results schema version");
    TrialRecord r;
    CellKey key;
    key.model = j.at("model").get<std::string>();
    key.solver = j.at("solver").get<std::string>();
    key.task_type = j.at("task_type").get<std::string>();
    key.difficulty = j.at("difficulty").get<int>();
    r.model = key.model;
    r.solver_id = key.solver;
    r.task_type = key.task_type;
    r.difficulty = key.difficulty;
    r.trial_index = j.at("trial_index").get<int>();
    r.master_seed = j.at("master_seed").get<std::uint64_t>();
    r.scenario_seed = j.at("scenario_seed").get<std::uint64_t>();
    r.scenario_id = j.at("scenario_id").get<std::string>();
    r.hop_count = j.at("hop_count").get<int>();
    r.success = j.at("success").get<bool>();
    r.attempts = j.at("attempts").get<int>();
    r.rounds_used = j.at("rounds_used").get<int>();
    r.extraction_accuracy = j.at("extraction_accuracy").get<double>();
    r.transcript_ref = j.at("transcript_ref").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return {std::move(r), std::move(key)};
}

namespace {

struct TrialTask {
    CellKey key;
    int trial_index = 0;
    const gateway::ModelSpec* model = nullptr;
    const SolverConfig* solver = nullptr;
};

struct TrialOutput {
    TrialRecord record;
    std::string transcript_json;  // empty for rule-based
    bool failed = false;
    std::string error;
};

std::string normalize_atom(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

TrialOutput execute_trial(const TrialTask& task, const MatrixConfig& mc,
                          const ScenarioConfig& scenario_base,
                          gateway::Backend* backend) {
    TrialOutput out;
    const auto t0 = std::chrono::steady_clock::now();

    ScenarioConfig cfg = scenario_base;
    cfg.task_type =
        task.key.task_type == "structured" ? TaskType::structured : TaskType::contextual;
    cfg.difficulty = task.key.difficulty;
    const std::uint64_t seed =
        derive_scenario_seed(mc.master_seed, cfg.task_type, cfg.difficulty, task.trial_index);

    try {
        const Scenario scenario = generate_scenario(seed, cfg);
        if (task.solver->kind == SolverConfig::Kind::rule_based) {
            out.record = baseline::solve(scenario, mc.max_attempts, cfg.match_policy);
        } else {
            orchestrator::WorkflowConfig wf = task.solver->workflow;
            wf.mode = task.solver->kind == SolverConfig::Kind::single_agent
                          ? orchestrator::Mode::single_agent
                          : orchestrator::Mode::multi_agent;
            wf.max_attempts = mc.max_attempts;
            wf.match_policy = cfg.match_policy;
            wf.model = task.key.model;
            auto result = orchestrator::run_workflow(scenario, wf, *backend);
            if (!result.analyst_entities.empty())
                result.record.extraction_accuracy =
                    score_entity_extraction(result.analyst_entities, scenario.graph);
            out.record = std::move(result.record);
            out.transcript_json = orchestrator::transcript_to_json(result.transcript);
        }
        out.record.model = task.key.model;
        out.record.trial_index = task.trial_index;
        out.record.master_seed = mc.master_seed;
    } catch (const TransportError& e) {
        out.failed = true;
        out.error = e.what();
    } catch (const ProtocolError& e) {
        out.failed = true;
        out.error = e.what();
    }
    out.record.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

}  // namespace

RunOutcome run_experiment(const MatrixConfig& matrix_config,
                          const ScenarioConfig& scenario_base, const BackendMap& backends,
                          const std::string& out_dir) {
    matrix_config.validate();

    // Agent solvers require a configured backend per model up front.
    const bool needs_backend = std::any_of(
        matrix_config.solvers.begin(), matrix_config.solvers.end(),
        [](const SolverConfig& s) { return s.kind != SolverConfig::Kind::rule_based; });
    if (needs_backend)
        for (const auto& m : matrix_config.models)
            if (!backends.count(m.name))
                throw ConfigError("no backend configured for model " + m.name);

    fs::create_directories(out_dir);
    fs::create_directories(fs::path(out_dir) / "transcripts");
    const std::string results_path = (fs::path(out_dir) / "results.jsonl").string();

    RunOutcome outcome;
    outcome.results_path = results_path;

    // Resume: anything already persisted is kept as-is.
    std::set<std::string> done;
    if (fs::exists(results_path)) {
        std::ifstream in(results_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto [record, key] = record_from_json(line);
            done.insert(trial_id(key, record.trial_index, record.master_seed));
            outcome.matrix.add(key, std::move(record));
        }
    }

    // Deterministic task order; the results file is an ordered append log.
    std::vector<TrialTask> pending;
    for (const auto& model : matrix_config.models) {
        for (const auto& solver : matrix_config.solvers) {
            for (TaskType task : matrix_config.task_types) {
                for (int difficulty : matrix_config.difficulties) {
                    CellKey key{model.name, solver.id(), to_string(task), difficulty};
                    for (int t = 0; t < matrix_config.trials_per_cell; ++t) {
                        if (done.count(trial_id(key, t, matrix_config.master_seed)))
                            continue;
                        pending.push_back(TrialTask{key, t, &model, &solver});
                    }
                }
            }
        }
    }

    std::ofstream results(results_path, std::ios::app);
    std::set<std::string> failed_cells;

    // Chunked execution: each chunk runs in parallel, then lands in the log
    // in task order, so a killed run leaves a clean prefix behind.
    constexpr std::size_t kChunk = 64;
    for (std::size_t base = 0; base < pending.size(); base += kChunk) {
        const std::size_t count = std::min(kChunk, pending.size() - base);
        std::vector<TrialOutput> outputs(count);

#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < count; ++i) {
            const TrialTask& task = pending[base + i];
            gateway::Backend* backend = nullptr;
            if (task.solver->kind != SolverConfig::Kind::rule_based)
                backend = backends.at(task.key.model).get();
            outputs[i] = execute_trial(task, matrix_config, scenario_base, backend);
        }

        for (std::size_t i = 0; i < count; ++i) {
            const TrialTask& task = pending[base + i];
            TrialOutput& out = outputs[i];
            if (out.failed) {
                outcome.matrix.cells[task.key].incomplete = true;
                failed_cells.insert(task.key.str());
                ++outcome.failed;
                continue;
            }
            const std::string id = trial_id(task.key, task.trial_index,
                                            matrix_config.master_seed);
            if (!out.transcript_json.empty()) {
                std::uint64_t ref = fnv1a64(id);
                std::ostringstream name;
                name << std::hex << ref;
                out.record.transcript_ref = "transcripts/" + name.str() + ".json";
                std::ofstream t(fs::path(out_dir) / out.record.transcript_ref);
                t << out.transcript_json << "\n";
            }
            results << record_to_json(out.record, task.key, task.trial_index) << "\n";
            outcome.matrix.add(task.key, out.record);
            ++outcome.executed;
        }
        results.flush();
    }

    outcome.matrix.complete = outcome.failed == 0;

    // Run manifest: full configuration echo for reproducibility.
    ordered_json models = ordered_json::array();
    for (const auto& m : matrix_config.models)
        models.push_back({{"name", m.name},
                          {"total_params_b", m.total_params_b},
                          {"active_params_b", m.active_params_b},
                          {"arch", m.arch == gateway::ModelSpec::Arch::moe ? "moe" : "dense"}});
    ordered_json solvers = ordered_json::array();
    for (const auto& s : matrix_config.solvers) solvers.push_back(s.id());
    ordered_json backend_ids = ordered_json::object();
    for (const auto& [name, b] : backends) backend_ids[name] = b->id();
    ordered_json manifest{
        {"schema_version", "manifest/v1"},
        {"master_seed", matrix_config.master_seed},
        {"trials_per_cell", matrix_config.trials_per_cell},
        {"max_attempts", matrix_config.max_attempts},
        {"models", models},
        {"solvers", solvers},
        {"task_types", [&] {
             ordered_json a = ordered_json::array();
             for (auto t : matrix_config.task_types) a.push_back(to_string(t));
             return a;
         }()},
        {"difficulties", matrix_config.difficulties},
        {"scenario",
         {{"info_density", scenario_base.info_density},
          {"relation_kind",
           scenario_base.relation_kind ? to_string(*scenario_base.relation_kind) : "any"},
          {"match_policy",
           scenario_base.match_policy == MatchPolicy::exact ? "exact" : "case_insensitive"}}},
        {"backends", backend_ids},
        {"executed", outcome.executed},
        {"failed", outcome.failed},
        {"incomplete_cells", std::vector<std::string>(failed_cells.begin(),
                                                      failed_cells.end())},
    };
    const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
    std::ofstream mf(manifest_path);
    mf << manifest.dump(2) << "\n";
    outcome.manifest_path = manifest_path;
    return outcome;
}

ExperimentMatrix load_matrix(const std::string& results_path) {
    if (!fs::exists(results_path))
        throw AnalysisError("results file not found: " + results_path);
    ExperimentMatrix m;
    std::ifstream in(results_path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto [record, key] = record_from_json(line);
        m.add(key, std::move(record));
    }
    if (m.cells.empty()) throw AnalysisError("results file is empty");
    return m;
}

double score_entity_extraction(const std::vector<std::string>& analyst_payload,
                               const FactGraph& graph) {
    std::set<std::string> relevant;
    for (const auto& e : graph.entities) relevant.insert(normalize_atom(e.name));
    if (graph.chain.atoms.size() >= 2)
        relevant.insert(normalize_atom(graph.chain.atoms[1]));
    if (relevant.empty()) return 0.0;
    std::set<std::string> extracted;
    for (const auto& p : analyst_payload) extracted.insert(normalize_atom(p));
    int hits = 0;
    for (const auto& r : relevant) hits += extracted.count(r) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(relevant.size());
}

double reasoner_ablation_delta(const ExperimentMatrix& matrix, const std::string& full_id,
                               const std::string& ablated_id,
                               const std::string& task_type) {
    int full_successes = 0, full_n = 0, ablated_successes = 0, ablated_n = 0;
    std::multiset<std::string> full_scenarios, ablated_scenarios;
    for (const auto& [key, cell] : matrix.cells) {
        if (key.task_type != task_type) continue;
        if (key.solver == full_id) {
            full_successes += cell.successes;
            full_n += cell.n;
            for (const auto& t : cell.trials) full_scenarios.insert(t.scenario_id);
        }
        if (key.solver == ablated_id) {
            ablated_successes += cell.successes;
            ablated_n += cell.n;
            for (const auto& t : cell.trials) ablated_scenarios.insert(t.scenario_id);
        }
    }
    if (full_n == 0 || ablated_n == 0)
        throw AnalysisError("reasoner_ablation_delta: solver missing from matrix");
    if (full_scenarios != ablated_scenarios)
        throw AnalysisError("reasoner_ablation_delta: scenario sets differ");
    // Deltas are taken on rates rounded to one decimal, the report precision.
    const double full_rate =
        std::round(1000.0 * full_successes / full_n) / 10.0;
    const double ablated_rate =
        std::round(1000.0 * ablated_successes / ablated_n) / 10.0;
    return full_rate - ablated_rate;
}

}  // namespace hopbench::runner
