#include "hopbench/orchestrator.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

#include "hopbench/prompts.hpp"

namespace hopbench::orchestrator {

using gateway::Backend;
using gateway::ChatRequest;
using gateway::ChatResult;

const char* to_string(Mode m) {
    return m == Mode::single_agent ? "single-agent" : "multi-agent";
}

const char* to_string(Ablation a) {
    switch (a) {
        case Ablation::full: return "full";
        case Ablation::no_strategist: return "no-strategist";
        case Ablation::no_refinement: return "no-refinement";
    }
    return "?";
}

void WorkflowConfig::validate() const {
    if (max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
    if (max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
    if (max_failures_in_prompt < 1)
        throw ConfigError("max_failures_in_prompt must be >= 1");
}

std::string WorkflowConfig::solver_id() const {
    std::string id = to_string(mode);
    if (mode == Mode::multi_agent && ablation != Ablation::full)
        id += std::string("/") + to_string(ablation);
    return id;
}

std::vector<std::string> parse_candidates(const std::string& reply) {
    std::vector<std::string> out;
    for (const auto& line : prompts::fenced_lines(reply)) {
        bool seen = false;
        for (const auto& c : out)
            if (c == line) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(line);
    }
    return out;
}

namespace {

struct TurnOutcome {
    std::string reply;
    bool timed_out = false;
};

// One agent turn. Timeouts forfeit the turn (empty payload) and the workflow
// continues; transport and protocol failures propagate to the runner.
TurnOutcome call_backend(Backend& backend, const WorkflowConfig& cfg,
                         const std::string& system, const std::string& user,
                         AgentTranscript& transcript, const std::string& role,
                         int round) {
    ChatRequest req;
    req.model = cfg.model;
    req.temperature = cfg.temperature;
    req.top_p = cfg.top_p;
    req.max_tokens = cfg.max_tokens;
    req.messages = {{"system", system}, {"user", user}};

    TranscriptTurn turn;
    turn.role = role;
    turn.round = round;
    turn.system = system;
    turn.prompt = user;

    TurnOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ChatResult res = backend.complete(req);
        out.reply = res.text;
        turn.reply = res.text;
        turn.latency_ms = res.latency_ms;
    } catch (const TimeoutError&) {
        out.timed_out = true;
        turn.timed_out = true;
    }
    if (turn.latency_ms == 0)
        turn.latency_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
    transcript.turns.push_back(turn);
    return out;
}

void set_parsed(AgentTranscript& transcript, const std::vector<std::string>& payload) {
    transcript.turns.back().parsed = payload;
}

std::vector<std::string> recent_failures(const std::vector<std::string>& all, int cap) {
    if (static_cast<int>(all.size()) <= cap) return all;
    return {all.end() - cap, all.end()};
}

void fill_record(TrialRecord& rec, const Scenario& s, const WorkflowConfig& cfg) {
    rec.scenario_id = s.id;
    rec.solver_id = cfg.solver_id();
    rec.model = cfg.model;
    rec.task_type = to_string(s.task_type);
    rec.difficulty = s.difficulty;
    rec.hop_count = s.graph.chain.hop_count;
    rec.scenario_seed = s.seed;
}

void verify_batch(Verifier& verifier, const std::vector<std::string>& candidates,
                  int round_cap) {
    int verified_this_round = 0;
    for (const auto& c : candidates) {
        if (verifier.succeeded() || verifier.exhausted()) return;
        if (verified_this_round >= round_cap) return;
        const int before = verifier.attempts();
        verifier.try_candidate(c);
        verified_this_round += verifier.attempts() - before;
    }
}

}  // namespace

WorkflowResult run_single_agent(const Scenario& scenario, const WorkflowConfig& config,
                                Backend& backend) {
    config.validate();
    if (config.mode != Mode::single_agent)
        throw ConfigError("run_single_agent called with multi-agent config");

    const auto start = std::chrono::steady_clock::now();
    WorkflowResult out;
    fill_record(out.record, scenario, config);

    const std::string docs = documents_as_text(scenario.documents);
    Verifier verifier(scenario, config.max_attempts, config.match_policy);

    int stalls = 0;
    int batch = 0;
    while (!verifier.succeeded() && !verifier.exhausted() && stalls < 2 &&
           batch < config.max_attempts) {
        ++batch;
        out.failures_per_round.push_back(out.state.failed_attempts);
        const auto failures =
            recent_failures(out.state.failed_attempts, config.max_failures_in_prompt);
        const auto turn =
            call_backend(backend, config, prompts::kSingleAgentSystem,
                         prompts::single_agent_user(docs, failures), out.transcript,
                         "single", batch);
        const auto candidates = parse_candidates(turn.reply);
        set_parsed(out.transcript, candidates);

        const int before = verifier.attempts();
        verify_batch(verifier, candidates, config.max_attempts);
        if (verifier.attempts() == before) ++stalls;

        out.state.failed_attempts = verifier.failed_candidates();
        out.state.round = batch;
    }

    out.record.success = verifier.succeeded();
    out.record.attempts = verifier.attempts();
    out.record.rounds_used = batch;
    out.state.remaining_attempts = verifier.remaining();
    out.record.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

WorkflowResult run_multi_agent(const Scenario& scenario, const WorkflowConfig& config,
                               Backend& backend) {
    config.validate();
    if (config.mode != Mode::multi_agent)
        throw ConfigError("run_multi_agent called with single-agent config");

    const auto start = std::chrono::steady_clock::now();
    WorkflowResult out;
    fill_record(out.record, scenario, config);

    const std::string docs = documents_as_text(scenario.documents);
    Verifier verifier(scenario, config.max_attempts, config.match_policy);

    const int rounds = config.ablation == Ablation::no_refinement ? 1 : config.max_rounds;
    const int base_cap = config.max_attempts / rounds;
    const int remainder = config.max_attempts % rounds;

    for (int round = 1; round <= rounds; ++round) {
        const int round_cap = base_cap + (round == rounds ? remainder : 0);
        out.failures_per_round.push_back(out.state.failed_attempts);
        const auto failures =
            recent_failures(out.state.failed_attempts, config.max_failures_in_prompt);

        // Analyst.
        const auto analyst = call_backend(backend, config, prompts::kAnalystSystem,
                                          prompts::analyst_user(docs), out.transcript,
                                          "analyst", round);
        const auto entity_lines = prompts::labeled_list(analyst.reply, "ENTITIES");
        set_parsed(out.transcript, entity_lines);
        out.state.extracted_facts = entity_lines;
        out.analyst_entities.clear();
        for (const auto& line : entity_lines) {
            const auto fields = prompts::split_fields(line);
            if (!fields.empty() && !fields[0].empty())
                out.analyst_entities.push_back(fields[0]);
        }

        // Strategist (skipped under the no-strategist ablation).
        std::string hypotheses_text;
        if (config.ablation != Ablation::no_strategist) {
            const auto strategist = call_backend(
                backend, config, prompts::kStrategistSystem,
                prompts::strategist_user(analyst.reply, failures), out.transcript,
                "strategist", round);
            const auto lines = prompts::labeled_list(strategist.reply, "HYPOTHESES");
            set_parsed(out.transcript, lines);
            out.state.hypotheses = lines;
            for (const auto& line : lines) hypotheses_text += "- " + line + "\n";
        }

        // Generator.
        const auto generator = call_backend(
            backend, config, prompts::kGeneratorSystem,
            prompts::generator_user(hypotheses_text, analyst.reply, failures),
            out.transcript, "generator", round);
        const auto candidates = parse_candidates(generator.reply);
        set_parsed(out.transcript, candidates);

        verify_batch(verifier, candidates, round_cap);
        out.state.failed_attempts = verifier.failed_candidates();
        out.state.round = round;
        out.record.rounds_used = round;
        if (verifier.succeeded() || verifier.exhausted()) break;
    }

    out.record.success = verifier.succeeded();
    out.record.attempts = verifier.attempts();
    out.state.remaining_attempts = verifier.remaining();
    out.record.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

WorkflowResult run_workflow(const Scenario& scenario, const WorkflowConfig& config,
                            Backend& backend) {
    return config.mode == Mode::single_agent ? run_single_agent(scenario, config, backend)
                                             : run_multi_agent(scenario, config, backend);
}

std::string transcript_to_json(const AgentTranscript& t) {
    nlohmann::ordered_json turns = nlohmann::ordered_json::array();
    for (const auto& turn : t.turns) {
        turns.push_back({{"role", turn.role},
                         {"round", turn.round},
                         {"system", turn.system},
                         {"prompt", turn.prompt},
                         {"reply", turn.reply},
                         {"parsed", turn.parsed},
                         {"latency_ms", turn.latency_ms},
                         {"timed_out", turn.timed_out}});
    }
    return nlohmann::ordered_json{{"schema_version", "transcript/v1"}, {"turns", turns}}
        .dump();
}

AgentTranscript transcript_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    AgentTranscript t;
    for (const auto& turn : j.at("turns")) {
        TranscriptTurn tt;
        tt.role = turn.at("role").get<std::string>();
        tt.round = turn.at("round").get<int>();
        tt.system = turn.at("system").get<std::string>();
        tt.prompt = turn.at("prompt").get<std::string>();
        tt.reply = turn.at("reply").get<std::string>();
        tt.parsed = turn.at("parsed").get<std::vector<std::string>>();
        tt.latency_ms = turn.at("latency_ms").get<double>();
        tt.timed_out = turn.at("timed_out").get<bool>();
        t.turns.push_back(std::move(tt));
    }
    return t;
}

}  // namespace hopbench::orchestrator
