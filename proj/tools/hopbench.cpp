#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <nlohmann/json.hpp>

#include "hopbench/oracle.hpp"
#include "hopbench/report.hpp"
#include "hopbench/rng.hpp"
#include "hopbench/runner.hpp"
#include "hopbench/scenario.hpp"

namespace fs = std::filesystem;
using namespace hopbench;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitAnalysis = 3;

// ---------------------------------------------------------------------------
// defaults: evaluated model metadata and offline oracle capability ladder
// ---------------------------------------------------------------------------

std::vector<gateway::ModelSpec> default_models() {
    using Arch = gateway::ModelSpec::Arch;
    return {
        {"llama3-8b", 8.0, 8.0, Arch::dense},
        {"llama2-13b", 13.0, 13.0, Arch::dense},
        {"mixtral-8x7b", 47.0, 12.0, Arch::moe},
        {"deepseek-v2-16b", 16.0, 2.4, Arch::moe},
    };
}

oracle::OracleProfile default_profile(const std::string& model) {
    oracle::OracleProfile p;
    p.seed = fnv1a64(model);
    if (model == "llama3-8b") {
        p.extraction_accuracy = 0.92;
        p.synthesis_per_hop = {0, 0.90, 0.70, 0.45, 0.25};
        p.refinement_recovery = 0.45;
    } else if (model == "mixtral-8x7b") {
        p.extraction_accuracy = 0.89;
        p.synthesis_per_hop = {0, 0.88, 0.55, 0.35, 0.18};
        p.refinement_recovery = 0.35;
    } else if (model == "llama2-13b") {
        p.extraction_accuracy = 0.82;
        p.synthesis_per_hop = {0, 0.65, 0.25, 0.12, 0.06};
        p.refinement_recovery = 0.15;
    } else if (model == "deepseek-v2-16b") {
        p.extraction_accuracy = 0.80;
        p.synthesis_per_hop = {0, 0.40, 0.10, 0.05, 0.02};
        p.refinement_recovery = 0.08;
    } else {
        p.extraction_accuracy = 0.85;
        p.synthesis_per_hop = {0, 0.75, 0.45, 0.28, 0.15};
        p.refinement_recovery = 0.25;
    }
    return p;
}

runner::SolverConfig solver_by_name(const std::string& name) {
    runner::SolverConfig s;
    if (name == "rule-based") {
        s.kind = runner::SolverConfig::Kind::rule_based;
        return s;
    }
    if (name == "single-agent") {
        s.kind = runner::SolverConfig::Kind::single_agent;
        s.workflow.mode = orchestrator::Mode::single_agent;
        return s;
    }
    s.kind = runner::SolverConfig::Kind::multi_agent;
    s.workflow.mode = orchestrator::Mode::multi_agent;
    if (name == "multi-agent")
        s.workflow.ablation = orchestrator::Ablation::full;
    else if (name == "multi-agent/no-strategist")
        s.workflow.ablation = orchestrator::Ablation::no_strategist;
    else if (name == "multi-agent/no-refinement")
        s.workflow.ablation = orchestrator::Ablation::no_refinement;
    else
        throw ConfigError("unknown solver: " + name);
    return s;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        if (comma == std::string::npos) {
            if (pos < s.size()) out.push_back(s.substr(pos));
            break;
        }
        if (comma > pos) out.push_back(s.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
    int count = 10;
    std::uint64_t seed = 42;
    std::string task_type = "contextual";
    int difficulty = 0;  // 0: cycle 1..3
    int info_density = 6;
    std::string relation_kind = "any";
    std::string out = "scenarios";
    bool public_views = false;
};

int cmd_generate(const GenerateArgs& args) {
    ScenarioConfig base;
    if (args.task_type == "structured")
        base.task_type = TaskType::structured;
    else if (args.task_type == "contextual")
        base.task_type = TaskType::contextual;
    else
        throw ConfigError("task-type must be structured or contextual");
    base.info_density = args.info_density;
    if (args.relation_kind != "any") {
        if (args.relation_kind == "family")
            base.relation_kind = RelationKind::family;
        else if (args.relation_kind == "professional")
            base.relation_kind = RelationKind::professional;
        else if (args.relation_kind == "temporal")
            base.relation_kind = RelationKind::temporal;
        else if (args.relation_kind == "geographical")
            base.relation_kind = RelationKind::geographical;
        else
            throw ConfigError("unknown relation kind: " + args.relation_kind);
    }
    if (args.difficulty != 0 && (args.difficulty < 1 || args.difficulty > 3))
        throw ConfigError("difficulty must be 1..3 (or 0 for all)");
    if (args.count < 1) throw ConfigError("count must be >= 1");

    fs::create_directories(args.out);
    ordered_json files = ordered_json::array();
    std::map<int, int> hop_histogram;
    for (int i = 0; i < args.count; ++i) {
        ScenarioConfig cfg = base;
        cfg.difficulty = args.difficulty == 0 ? 1 + i % 3 : args.difficulty;
        const std::uint64_t seed = mix(args.seed, static_cast<std::uint64_t>(i));
        const Scenario s = generate_scenario(seed, cfg);
        const std::string name = s.id + ".json";
        std::ofstream f(fs::path(args.out) / name);
        f << serialize_scenario(s) << "\n";
        if (args.public_views) {
            std::ofstream pub(fs::path(args.out) / (s.id + ".public.json"));
            pub << serialize_public_view(s) << "\n";
        }
        hop_histogram[s.graph.chain.hop_count] += 1;
        files.push_back({{"file", name},
                         {"id", s.id},
                         {"seed", seed},
                         {"task_type", to_string(s.task_type)},
                         {"difficulty", s.difficulty},
                         {"hop_count", s.graph.chain.hop_count}});
    }
    ordered_json hops = ordered_json::object();
    for (const auto& [h, n] : hop_histogram) hops["hop_" + std::to_string(h)] = n;
    ordered_json manifest{{"schema_version", "generate-manifest/v1"},
                          {"count", args.count},
                          {"master_seed", args.seed},
                          {"task_type", args.task_type},
                          {"difficulty", args.difficulty},
                          {"info_density", args.info_density},
                          {"relation_kind", args.relation_kind},
                          {"hop_histogram", hops},
                          {"scenarios", files}};
    std::ofstream mf(fs::path(args.out) / "generate_manifest.json");
    mf << manifest.dump(2) << "\n";
    std::cout << "wrote " << args.count << " scenarios to " << args.out << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunArgs {
    std::string preset = "main-text";
    std::string out = "runs/out";
    std::string backend = "oracle";  // oracle | http
    std::string backend_url;
    std::string models;   // comma list of name:total:active:arch
    std::string solvers;  // comma list
    std::vector<std::uint64_t> seeds;
    int trials_per_cell = 0;
    int max_rounds = 0;
    int max_attempts = 0;
    int info_density = 6;
    std::string config_file;
};

void apply_config_file(RunArgs& args, std::map<std::string, oracle::OracleProfile>& profiles,
                       const CLI::App* cmd) {
    if (args.config_file.empty()) return;
    std::ifstream in(args.config_file);
    if (!in) throw ConfigError("cannot open config file: " + args.config_file);
    json cfg = json::parse(in, nullptr, true, true);  // allow comments

    auto flag_given = [&](const std::string& name) {
        return cmd->count(name) > 0;
    };
    if (cfg.contains("preset") && !flag_given("--preset"))
        args.preset = cfg["preset"].get<std::string>();
    if (cfg.contains("out") && !flag_given("--out"))
        args.out = cfg["out"].get<std::string>();
    if (cfg.contains("backend") && !flag_given("--backend"))
        args.backend = cfg["backend"].get<std::string>();
    if (cfg.contains("backend_url") && !flag_given("--backend-url"))
        args.backend_url = cfg["backend_url"].get<std::string>();
    if (cfg.contains("models") && !flag_given("--models")) {
        std::string joined;
        for (const auto& m : cfg["models"]) {
            if (!joined.empty()) joined += ",";
            joined += m["name"].get<std::string>() + ":" +
                      std::to_string(m["total_b"].get<double>()) + ":" +
                      std::to_string(m["active_b"].get<double>()) + ":" +
                      m["arch"].get<std::string>();
        }
        args.models = joined;
    }
    if (cfg.contains("solvers") && !flag_given("--solvers")) {
        std::string joined;
        for (const auto& s : cfg["solvers"]) {
            if (!joined.empty()) joined += ",";
            joined += s.get<std::string>();
        }
        args.solvers = joined;
    }
    if (cfg.contains("seeds") && !flag_given("--seeds"))
        args.seeds = cfg["seeds"].get<std::vector<std::uint64_t>>();
    if (cfg.contains("trials_per_cell") && !flag_given("--trials"))
        args.trials_per_cell = cfg["trials_per_cell"].get<int>();
    if (cfg.contains("max_rounds") && !flag_given("--max-rounds"))
        args.max_rounds = cfg["max_rounds"].get<int>();
    if (cfg.contains("max_attempts") && !flag_given("--max-attempts"))
        args.max_attempts = cfg["max_attempts"].get<int>();
    if (cfg.contains("info_density") && !flag_given("--info-density"))
        args.info_density = cfg["info_density"].get<int>();
    if (cfg.contains("oracle_profiles")) {
        for (const auto& [model, pj] : cfg["oracle_profiles"].items()) {
            oracle::OracleProfile p = default_profile(model);
            if (pj.contains("extraction_accuracy"))
                p.extraction_accuracy = pj["extraction_accuracy"].get<double>();
            if (pj.contains("synthesis_per_hop")) {
                const auto v = pj["synthesis_per_hop"].get<std::vector<double>>();
                for (std::size_t i = 0; i < v.size() && i + 1 < p.synthesis_per_hop.size();
                     ++i)
                    p.synthesis_per_hop[i + 1] = v[i];
            }
            if (pj.contains("refinement_recovery"))
                p.refinement_recovery = pj["refinement_recovery"].get<double>();
            if (pj.contains("round_overhead"))
                p.round_overhead = pj["round_overhead"].get<double>();
            if (pj.contains("unguided_penalty"))
                p.unguided_penalty = pj["unguided_penalty"].get<double>();
            if (pj.contains("seed")) p.seed = pj["seed"].get<std::uint64_t>();
            profiles[model] = p;
        }
    }
}

std::vector<gateway::ModelSpec> parse_models(const std::string& spec) {
    if (spec.empty()) return default_models();
    std::vector<gateway::ModelSpec> out;
    for (const auto& item : split_csv(spec)) {
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= item.size()) {
            const auto colon = item.find(':', pos);
            if (colon == std::string::npos) {
                parts.push_back(item.substr(pos));
                break;
            }
            parts.push_back(item.substr(pos, colon - pos));
            pos = colon + 1;
        }
        if (parts.size() != 4)
            throw ConfigError("model spec must be name:total:active:dense|moe");
        gateway::ModelSpec m;
        m.name = parts[0];
        m.total_params_b = std::stod(parts[1]);
        m.active_params_b = std::stod(parts[2]);
        m.arch = parts[3] == "moe" ? gateway::ModelSpec::Arch::moe
                                   : gateway::ModelSpec::Arch::dense;
        m.validate();
        out.push_back(std::move(m));
    }
    return out;
}

int cmd_run(RunArgs args, const CLI::App* cmd) {
    std::map<std::string, oracle::OracleProfile> profiles;
    apply_config_file(args, profiles, cmd);

    // Presets pin the published trial configuration; custom starts from the
    // main-text values and applies explicit overrides.
    int trials = 5, rounds = 3, attempts = 50;
    std::vector<std::uint64_t> seeds = {42};
    if (args.preset == "appendix") {
        trials = 10;
        rounds = 5;
        seeds = {42, 123, 456, 789, 1011};
    } else if (args.preset != "main-text" && args.preset != "custom") {
        throw ConfigError("preset must be main-text, appendix, or custom");
    }
    if (args.trials_per_cell > 0) trials = args.trials_per_cell;
    if (args.max_rounds > 0) rounds = args.max_rounds;
    if (args.max_attempts > 0) attempts = args.max_attempts;
    if (!args.seeds.empty()) seeds = args.seeds;

    runner::MatrixConfig mc;
    mc.models = parse_models(args.models);
    const auto solver_names =
        args.solvers.empty()
            ? std::vector<std::string>{"rule-based", "single-agent", "multi-agent"}
            : split_csv(args.solvers);
    for (const auto& name : solver_names) {
        auto s = solver_by_name(name);
        s.workflow.max_rounds = rounds;
        mc.solvers.push_back(std::move(s));
    }
    mc.trials_per_cell = trials;
    mc.max_attempts = attempts;

    ScenarioConfig scenario;
    scenario.info_density = args.info_density;

    runner::BackendMap backends;
    if (args.backend == "oracle") {
        for (const auto& m : mc.models) {
            const auto it = profiles.find(m.name);
            backends[m.name] = std::make_shared<oracle::OracleBackend>(
                it != profiles.end() ? it->second : default_profile(m.name));
        }
    } else if (args.backend == "http") {
        auto cfg = gateway::http_config_from_env(args.backend_url);
        if (cfg.base_url.empty())
            throw ConfigError("http backend needs --backend-url or HOPBENCH_BASE_URL");
        auto shared = std::make_shared<gateway::HttpBackend>(cfg);
        for (const auto& m : mc.models) backends[m.name] = shared;
    } else {
        throw ConfigError("backend must be oracle or http");
    }

    bool all_complete = true;
    int executed = 0;
    for (const std::uint64_t seed : seeds) {
        mc.master_seed = seed;
        const auto outcome = runner::run_experiment(mc, scenario, backends, args.out);
        all_complete = all_complete && outcome.matrix.complete;
        executed += outcome.executed;
        std::cout << "seed " << seed << ": executed " << outcome.executed << " trials, "
                  << outcome.failed << " failed\n";
    }
    std::cout << "results: " << (fs::path(args.out) / "results.jsonl").string() << "\n";
    if (!all_complete) {
        std::cerr << "run incomplete; re-run the same command to resume\n";
        return kExitPartial;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze / report
// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& results, const std::string& out, int expected_n) {
    const auto matrix = runner::load_matrix(results);
    report::AnalysisOptions opt;
    opt.expected_n = expected_n;
    const auto analysis = report::analyze(matrix, opt);
    report::write_reports(analysis, out);
    for (const auto& w : analysis.warnings) std::cerr << "WARNING: " << w << "\n";
    std::cout << "reports written to " << out << "\n";
    return kExitOk;
}

int cmd_report(const std::string& results, int expected_n) {
    const auto matrix = runner::load_matrix(results);
    report::AnalysisOptions opt;
    opt.expected_n = expected_n;
    std::cout << report::render_text(report::analyze(matrix, opt));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

struct FitArgs {
    std::string points;
    std::string kinds = "both";  // power_law | sigmoid | both
    std::string axis = "total";
    bool include_literature = false;
    std::string out_prefix = "fit";
    bool svg = false;
    int bootstrap = 0;
    std::uint64_t seed = 42;
};

int cmd_fit(const FitArgs& args) {
    const auto rows = report::read_points_csv(args.points);
    const auto axis = args.axis == "active" ? scalefit::ParamAxis::active
                      : args.axis == "total"
                          ? scalefit::ParamAxis::total
                          : throw ConfigError("axis must be total or active");
    const auto points = scalefit::select_axis(rows, axis, args.include_literature);

    std::vector<scalefit::ModelKind> kinds;
    if (args.kinds == "both")
        kinds = {scalefit::ModelKind::power_law, scalefit::ModelKind::sigmoid};
    else if (args.kinds == "power_law")
        kinds = {scalefit::ModelKind::power_law};
    else if (args.kinds == "sigmoid")
        kinds = {scalefit::ModelKind::sigmoid};
    else
        throw ConfigError("model kinds must be power_law, sigmoid, or both");

    std::vector<scalefit::FitResult> fits;
    for (const auto kind : kinds) {
        auto fit = scalefit::fit(kind, points);
        std::optional<scalefit::BootstrapFitResult> ci;
        if (args.bootstrap > 0)
            ci = scalefit::bootstrap_fit_ci(points, kind, args.bootstrap, args.seed);
        const std::string base = args.out_prefix + "_" + scalefit::to_string(kind);
        {
            std::ofstream f(base + ".json");
            f << report::fit_to_json(fit, ci ? &*ci : nullptr) << "\n";
        }
        {
            std::ofstream f(base + "_curve.csv");
            f << report::curve_csv(fit, points);
        }
        if (!fit.converged)
            std::cerr << "WARNING: " << scalefit::to_string(kind)
                      << " fit did not converge\n";
        fits.push_back(std::move(fit));
    }

    if (fits.size() == 2) {
        const auto cmp = scalefit::compare_bic(fits[0], fits[1]);
        std::ofstream f(args.out_prefix + "_comparison.csv");
        f << "power_law_bic,sigmoid_bic,better,delta_bic\n";
        f << fits[0].bic << "," << fits[1].bic << "," << scalefit::to_string(cmp.better)
          << "," << cmp.delta_bic << "\n";
        std::cout << "better fit: " << scalefit::to_string(cmp.better)
                  << " (delta BIC " << cmp.delta_bic << ")\n";
    }
    if (args.svg) {
        std::ofstream f(args.out_prefix + ".svg");
        f << report::curve_svg(points, fits);
    }
    std::cout << "fit outputs written with prefix " << args.out_prefix << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"synthetic multi-hop contextual-reasoning evaluation harness"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate scenario files");
    generate->add_option("--count", gen.count, "number of scenarios");
    generate->add_option("--seed", gen.seed, "master seed");
    generate->add_option("--task-type", gen.task_type, "structured|contextual");
    generate->add_option("--difficulty", gen.difficulty, "1..3, or 0 to cycle");
    generate->add_option("--info-density", gen.info_density, "distractor atoms per scenario");
    generate->add_option("--relation-kind", gen.relation_kind,
                         "any|family|professional|temporal|geographical");
    generate->add_option("--out", gen.out, "output directory");
    generate->add_flag("--public-views", gen.public_views,
                       "also write agent-facing views without graph/target");

    RunArgs run;
    auto* runcmd = app.add_subcommand("run", "run an experiment matrix");
    runcmd->add_option("--preset", run.preset, "main-text|appendix|custom");
    runcmd->add_option("--out", run.out, "output directory");
    runcmd->add_option("--backend", run.backend, "oracle|http");
    runcmd->add_option("--backend-url", run.backend_url, "chat-completions base URL");
    runcmd->add_option("--models", run.models, "name:total:active:arch, comma separated");
    runcmd->add_option("--solvers", run.solvers,
                       "rule-based,single-agent,multi-agent[,multi-agent/no-strategist,...]");
    runcmd->add_option("--seeds", run.seeds, "master seeds");
    runcmd->add_option("--trials", run.trials_per_cell, "trials per cell");
    runcmd->add_option("--max-rounds", run.max_rounds, "multi-agent refinement rounds");
    runcmd->add_option("--max-attempts", run.max_attempts, "attempt budget per trial");
    runcmd->add_option("--info-density", run.info_density, "distractor atoms per scenario");
    runcmd->add_option("--config", run.config_file, "JSON config file (flags override)");

    std::string an_results, an_out = "reports";
    int an_expected_n = 0;
    auto* analyze = app.add_subcommand("analyze", "compute report tables from results");
    analyze->add_option("--results", an_results, "results.jsonl path")->required();
    analyze->add_option("--out", an_out, "report output directory");
    analyze->add_option("--expected-n", an_expected_n,
                        "expected trials per cell; short cells are excluded");

    std::string rp_results;
    int rp_expected_n = 0;
    auto* reportcmd = app.add_subcommand("report", "print formatted result tables");
    reportcmd->add_option("--results", rp_results, "results.jsonl path")->required();
    reportcmd->add_option("--expected-n", rp_expected_n,
                          "expected trials per cell; short cells are excluded");

    FitArgs fit;
    auto* fitcmd = app.add_subcommand("fit", "fit scaling curves to accuracy points");
    fitcmd->add_option("--points", fit.points, "CSV: label,total_b,active_b,accuracy[,source]")
        ->required();
    fitcmd->add_option("--kinds", fit.kinds, "power_law|sigmoid|both");
    fitcmd->add_option("--axis", fit.axis, "total|active");
    fitcmd->add_flag("--include-literature", fit.include_literature,
                     "include literature reference rows");
    fitcmd->add_option("--out-prefix", fit.out_prefix, "output file prefix");
    fitcmd->add_flag("--svg", fit.svg, "write a static SVG plot");
    fitcmd->add_option("--bootstrap", fit.bootstrap, "bootstrap resamples for CIs");
    fitcmd->add_option("--seed", fit.seed, "bootstrap seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (runcmd->parsed()) return cmd_run(run, runcmd);
        if (analyze->parsed()) return cmd_analyze(an_results, an_out, an_expected_n);
        if (reportcmd->parsed()) return cmd_report(rp_results, rp_expected_n);
        if (fitcmd->parsed()) return cmd_fit(fit);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
