// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is checked too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hopbench/baseline.hpp"
#include "hopbench/oracle.hpp"
#include "hopbench/report.hpp"
#include "hopbench/rng.hpp"
#include "hopbench/runner.hpp"
#include "hopbench/scalefit.hpp"
#include "hopbench/scenario.hpp"
#include "hopbench/stats.hpp"
#include "support/fisher_oracle.hpp"

using namespace hopbench;

namespace {

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

ScenarioConfig scn_config(TaskType t, int difficulty, int density) {
    ScenarioConfig cfg;
    cfg.task_type = t;
    cfg.difficulty = difficulty;
    cfg.info_density = density;
    return cfg;
}

// Deterministic standard normal from the average of twelve uniforms.
double approx_normal(RngStream& rng) {
    double g = 0;
    for (int i = 0; i < 12; ++i) g += rng.unit();
    return g - 6.0;
}

// --- criterion 1: baseline crossover -----------------------------------

bool baseline_crossover(std::string& detail) {
    int structured_hits = 0, contextual_hits = 0;
    const int per_type = 220;
    for (int i = 0; i < per_type; ++i) {
        const int difficulty = 1 + i % 3;
        const int density = i % 11;
        const auto st = generate_scenario(
            static_cast<std::uint64_t>(i),
            scn_config(TaskType::structured, difficulty, density));
        structured_hits += baseline::solve(st, 50).success ? 1 : 0;
        const auto ct = generate_scenario(
            static_cast<std::uint64_t>(i),
            scn_config(TaskType::contextual, difficulty, density));
        contextual_hits += baseline::solve(ct, 50).success ? 1 : 0;
    }
    detail = "structured " + std::to_string(structured_hits) + "/" +
             std::to_string(per_type) + ", contextual " +
             std::to_string(contextual_hits) + "/" + std::to_string(per_type);
    return structured_hits == per_type && contextual_hits == 0;
}

// --- criterion 2: generator determinism and solvability ----------------

bool generator_determinism(std::string& detail) {
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const TaskType t = i % 2 == 0 ? TaskType::structured : TaskType::contextual;
        const auto cfg = scn_config(t, 1 + i % 3, i % 9);
        const auto seed = static_cast<std::uint64_t>(1000 + i);
        const Scenario a = generate_scenario(seed, cfg);
        const Scenario b = generate_scenario(seed, cfg);
        if (serialize_scenario(a) != serialize_scenario(b)) {
            detail = "byte mismatch at seed " + std::to_string(seed);
            return false;
        }
        if (construct_target(a.graph.chain, a.graph.rule) != a.graph.target) {
            detail = "round-trip mismatch at seed " + std::to_string(seed);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " scenarios byte-identical and round-tripped";
    return true;
}

// --- criterion 3: fisher oracle equivalence ----------------------------

bool fisher_equivalence(std::string& detail) {
    long long tables = 0;
    double max_err = 0;
    for (long long n = 1; n <= 30; ++n) {
        for (long long a = 0; a <= n; ++a)
            for (long long b = 0; a + b <= n; ++b)
                for (long long c = 0; a + b + c <= n; ++c) {
                    const long long d = n - a - b - c;
                    const double got = stats::fisher_exact_two_tailed(a, b, c, d).p_value;
                    const double want = testsupport::fisher_two_sided_oracle(a, b, c, d);
                    max_err = std::max(max_err, std::abs(got - want));
                    ++tables;
                    if (max_err > 1e-12) {
                        detail = "divergence at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + "," +
                                 std::to_string(d) + ")";
                        return false;
                    }
                }
    }
    const double frozen = stats::fisher_exact_two_tailed(12, 3, 5, 10).p_value;
    if (std::abs(frozen - 0.02533) > 1e-5) {
        detail = "frozen table p=" + std::to_string(frozen);
        return false;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld tables, max |diff| %.2e, (12,3,5,10) -> %.5f",
                  tables, max_err, frozen);
    detail = buf;
    return true;
}

// --- criterion 4: standard-error reproduction --------------------------

bool se_reproduction(std::string& detail) {
    struct IntRow {
        int successes, n;
        double rate_pct, se_pct;
    };
    // The sixteen success-rate cells of the main results grid.
    const std::vector<IntRow> grid = {
        {13, 15, 86.7, 8.8}, {5, 15, 33.3, 12.2}, {13, 15, 86.7, 8.8},
        {12, 15, 80.0, 10.3},                                            // row 1
        {13, 15, 86.7, 8.8}, {6, 15, 40.0, 12.6}, {3, 15, 20.0, 10.3},
        {8, 15, 53.3, 12.9},                                             // row 2
        {5, 15, 33.3, 12.2}, {0, 15, 0.0, 0.0},   {2, 15, 13.3, 8.8},
        {4, 15, 26.7, 11.4},                                             // row 3
        {9, 15, 60.0, 12.6}, {1, 15, 6.7, 6.4},   {3, 15, 20.0, 10.3},
        {3, 15, 20.0, 10.3},                                             // row 4
    };
    auto round1 = [](double v) { return std::round(v * 10.0) / 10.0; };
    for (const auto& row : grid) {
        const auto e = stats::proportion_estimate(row.successes, row.n);
        if (round1(e.rate * 100.0) != row.rate_pct || round1(e.se) != row.se_pct) {
            detail = "mismatch for " + std::to_string(row.successes) + "/" +
                     std::to_string(row.n);
            return false;
        }
    }
    // Extraction-accuracy rows: continuous per-trial means with their ns.
    struct RateRow {
        double rate;
        int n;
        double se_pct;
    };
    const std::vector<RateRow> extraction = {
        {0.923, 42, 4.1}, {0.817, 32, 6.8}, {0.894, 35, 5.2}};
    for (const auto& row : extraction) {
        const auto e = stats::proportion_from_rate(row.rate, row.n);
        if (round1(e.se) != row.se_pct) {
            detail = "extraction-row mismatch at rate " + std::to_string(row.rate);
            return false;
        }
    }
    detail = "16 grid cells and 3 extraction rows reproduced to 0.1pp";
    return true;
}

// --- criterion 5: curve-fit recovery and model selection ----------------

std::vector<scalefit::ScalingPoint> sigmoid_dataset() {
    std::vector<scalefit::ScalingPoint> pts;
    for (double lx : {0.0, 6.0, 12.0, 18.0, 24.2, 30.0, 36.0, 42.0, 48.0})
        pts.push_back({std::exp(lx),
                       82.3 / (1.0 + std::exp(-0.18 * (lx - 24.2))) + 3.1});
    return pts;
}

std::vector<scalefit::ScalingPoint> power_dataset() {
    std::vector<scalefit::ScalingPoint> pts;
    for (double x : {8.0, 13.0, 30.0, 70.0, 2.0, 4.0, 150.0, 400.0, 1000.0})
        pts.push_back({x, 42.3 * std::pow(x, -0.31) + 95.2});
    return pts;
}

bool curve_fit_recovery(std::string& detail) {
    // Noiseless parameter recovery.
    {
        std::vector<scalefit::ScalingPoint> pts;
        for (double x : {8.0, 13.0, 30.0, 70.0})
            pts.push_back({x, 42.3 * std::pow(x, -0.31) + 95.2});
        const auto f = scalefit::fit_power_law(pts);
        const double want[] = {42.3, 0.31, 95.2};
        for (int i = 0; i < 3; ++i)
            if (std::abs(f.params[i] - want[i]) / want[i] > 1e-6) {
                detail = "power-law parameter " + std::to_string(i) + " off";
                return false;
            }
    }
    {
        const auto f = scalefit::fit_sigmoid(sigmoid_dataset());
        const double want[] = {82.3, 0.18, 24.2, 3.1};
        for (int i = 0; i < 4; ++i)
            if (std::abs(f.params[i] - want[i]) / want[i] > 1e-6) {
                detail = "sigmoid parameter " + std::to_string(i) + " off";
                return false;
            }
    }

    // Model recovery under 5% noise: BIC must select the generating model in
    // at least 95% of 200 replications, for both generators.
    auto selection_rate = [](const std::vector<scalefit::ScalingPoint>& clean,
                             scalefit::ModelKind truth, std::uint64_t seed) {
        double lo = 1e300, hi = -1e300;
        for (const auto& p : clean) {
            lo = std::min(lo, p.accuracy);
            hi = std::max(hi, p.accuracy);
        }
        const double sigma = 0.05 * (hi - lo);
        int wins = 0;
        const int reps = 200;
        for (int r = 0; r < reps; ++r) {
            RngStream rng(mix(seed, static_cast<std::uint64_t>(r)));
            auto noisy = clean;
            for (auto& p : noisy) p.accuracy += sigma * approx_normal(rng);
            const auto pw = scalefit::fit_power_law(noisy);
            const auto sg = scalefit::fit_sigmoid(noisy);
            if (scalefit::compare_bic(pw, sg).better == truth) ++wins;
        }
        return static_cast<double>(wins) / reps;
    };
    const double sig_rate = selection_rate(sigmoid_dataset(),
                                           scalefit::ModelKind::sigmoid, 501);
    const double pow_rate = selection_rate(power_dataset(),
                                           scalefit::ModelKind::power_law, 502);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "noiseless to 1e-6; BIC picks sigmoid %.1f%%, power %.1f%% of 200",
                  sig_rate * 100, pow_rate * 100);
    detail = buf;
    return sig_rate >= 0.95 && pow_rate >= 0.95;
}

// --- criterion 6: bootstrap determinism and width ------------------------

bool bootstrap_determinism(std::string& detail) {
    RngStream rng(99);
    std::vector<double> data;
    const int n = 1000;
    for (int i = 0; i < n; ++i) data.push_back(approx_normal(rng));
    const auto statistic = [](std::span<const double> xs) { return stats::mean(xs); };

    const auto a = stats::bootstrap_ci(data, statistic, 2000, 0.95, 7);
    const auto b = stats::bootstrap_ci(data, statistic, 2000, 0.95, 7);
    const auto serial = stats::bootstrap_ci_serial(data, statistic, 2000, 0.95, 7);
    if (a.lo != b.lo || a.hi != b.hi || a.lo != serial.lo || a.hi != serial.hi) {
        detail = "seeded CIs not reproducible";
        return false;
    }
    const double sd = std::sqrt(stats::sample_variance(data));
    const double expected_width = 2.0 * 1.96 * sd / std::sqrt(static_cast<double>(n));
    const double width = a.hi - a.lo;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "width %.5f vs analytic %.5f (%+.1f%%)", width,
                  expected_width, 100.0 * (width / expected_width - 1.0));
    detail = buf;
    return std::abs(width / expected_width - 1.0) <= 0.15;
}

// --- criterion 7: orchestrator structure ---------------------------------

bool orchestrator_structure(std::string& detail) {
    oracle::OracleProfile profile;
    profile.extraction_accuracy = 0.9;
    profile.synthesis_per_hop = {0, 0.8, 0.5, 0.3, 0.15};
    profile.refinement_recovery = 0.35;
    profile.seed = 17;
    oracle::OracleBackend backend(profile);

    int checked = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = generate_scenario(seed, scn_config(TaskType::contextual,
                                                          1 + static_cast<int>(seed % 3), 6));
        orchestrator::WorkflowConfig cfg;  // main-text preset values
        cfg.mode = orchestrator::Mode::multi_agent;
        cfg.max_rounds = 3;
        cfg.max_attempts = 50;

        for (auto ablation : {orchestrator::Ablation::full,
                              orchestrator::Ablation::no_strategist,
                              orchestrator::Ablation::no_refinement}) {
            cfg.ablation = ablation;
            const auto result = orchestrator::run_multi_agent(s, cfg, backend);
            if (result.record.attempts > 50 || result.record.rounds_used > 3) {
                detail = "budget exceeded";
                return false;
            }
            if (!result.record.success &&
                result.record.attempts !=
                    static_cast<int>(result.state.failed_attempts.size())) {
                detail = "attempt accounting mismatch";
                return false;
            }
            int strategist_turns = 0, generator_turns = 0;
            for (const auto& turn : result.transcript.turns) {
                strategist_turns += turn.role == "strategist" ? 1 : 0;
                generator_turns += turn.role == "generator" ? 1 : 0;
            }
            if (ablation == orchestrator::Ablation::no_strategist && strategist_turns != 0) {
                detail = "strategist turn under no-strategist ablation";
                return false;
            }
            if (ablation == orchestrator::Ablation::full && strategist_turns == 0) {
                detail = "full workflow missing strategist turns";
                return false;
            }
            if (ablation == orchestrator::Ablation::no_refinement &&
                (result.record.rounds_used != 1 || generator_turns != 1)) {
                detail = "no-refinement ablation ran more than one round";
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " workflow runs structurally conformant";
    return true;
}

// --- criterion 8: end-to-end oracle experiment ---------------------------

bool end_to_end_pattern(std::string& detail) {
    const std::string dir = "/tmp/hopbench-acceptance-e2e";
    std::filesystem::remove_all(dir);

    runner::MatrixConfig mc;
    mc.models = {{"profiled-model", 8, 8, gateway::ModelSpec::Arch::dense}};
    runner::SolverConfig single;
    single.kind = runner::SolverConfig::Kind::single_agent;
    single.workflow.mode = orchestrator::Mode::single_agent;
    runner::SolverConfig multi;
    multi.kind = runner::SolverConfig::Kind::multi_agent;
    multi.workflow.mode = orchestrator::Mode::multi_agent;
    multi.workflow.max_rounds = 3;
    mc.solvers = {single, multi};
    mc.task_types = {TaskType::contextual};
    mc.difficulties = {1, 2, 3};
    mc.trials_per_cell = 500;
    mc.master_seed = 4242;

    oracle::OracleProfile profile;  // high extraction, hop-decaying synthesis,
    profile.extraction_accuracy = 0.92;  // refinement recovering failures
    profile.synthesis_per_hop = {0, 0.9, 0.7, 0.45, 0.22};
    profile.refinement_recovery = 0.45;
    profile.round_overhead = 0.85;
    profile.unguided_penalty = 0.5;
    profile.seed = 31;
    runner::BackendMap backends;
    backends["profiled-model"] = std::make_shared<oracle::OracleBackend>(profile);

    const auto outcome = runner::run_experiment(mc, ScenarioConfig{}, backends, dir);

    auto rate = [&](const std::string& solver, int difficulty) {
        const runner::CellKey key{"profiled-model", solver, "contextual", difficulty};
        const auto& cell = outcome.matrix.cells.at(key);
        return static_cast<double>(cell.successes) / cell.n;
    };
    const double s2 = rate("single-agent", 1), s3 = rate("single-agent", 2),
                 s4 = rate("single-agent", 3);
    const double m2 = rate("multi-agent", 1), m3 = rate("multi-agent", 2),
                 m4 = rate("multi-agent", 3);

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "single %.1f/%.1f/%.1f%%, multi %.1f/%.1f/%.1f%% across 2/3/4 hops",
                  100 * s2, 100 * s3, 100 * s4, 100 * m2, 100 * m3, 100 * m4);
    detail = buf;

    const bool multi_beats_single = m2 > s2 && m3 > s3 && m4 > s4;
    const bool single_decreasing = s2 > s3 && s3 > s4;
    const bool multi_flatter = (m2 - m4) < (s2 - s4);
    return multi_beats_single && single_decreasing && multi_flatter;
}

// --- criterion 9: reasoner-ablation report -------------------------------

bool ablation_report(std::string& detail) {
    runner::ExperimentMatrix m;
    auto fill = [&](const std::string& solver, int successes) {
        for (int i = 0; i < 15; ++i) {
            TrialRecord t;
            t.scenario_id = "scn-" + std::to_string(i);
            t.success = i < successes;
            t.extraction_accuracy = -1;
            m.add(runner::CellKey{"mixtral-8x7b", solver, "contextual", 1}, t);
        }
    };
    fill("multi-agent", 8);
    fill("multi-agent/no-strategist", 4);
    fill("multi-agent/no-refinement", 5);
    fill("single-agent", 6);

    const double d_strat =
        runner::reasoner_ablation_delta(m, "multi-agent", "multi-agent/no-strategist");
    const double d_refine =
        runner::reasoner_ablation_delta(m, "multi-agent", "multi-agent/no-refinement");
    const double d_single =
        runner::reasoner_ablation_delta(m, "multi-agent", "single-agent");

    const auto analysis = report::analyze(m);
    double rep_strat = 0, rep_refine = 0, rep_single = 0;
    for (const auto& row : analysis.ablation) {
        if (!row.delta_vs_full_pp) continue;
        if (row.solver == "multi-agent/no-strategist") rep_strat = *row.delta_vs_full_pp;
        if (row.solver == "multi-agent/no-refinement") rep_refine = *row.delta_vs_full_pp;
        if (row.solver == "single-agent") rep_single = *row.delta_vs_full_pp;
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf), "deltas %.1f / %.1f / %.1f pp", rep_strat, rep_refine,
                  rep_single);
    detail = buf;
    auto near = [](double got, double want) { return std::abs(got - want) < 1e-9; };
    return near(d_strat, 26.6) && near(d_refine, 20.0) && near(d_single, 13.3) &&
           near(rep_strat, -26.6) && near(rep_refine, -20.0) && near(rep_single, -13.3);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "baseline crossover (structured 100%, contextual 0%)", 10, baseline_crossover},
        {2, "generator determinism and target round-trip", 30, generator_determinism},
        {3, "fisher exact vs enumeration oracle (all n <= 30)", 60, fisher_equivalence},
        {4, "standard-error reproduction", 10, se_reproduction},
        {5, "curve-fit recovery and BIC model selection", 300, curve_fit_recovery},
        {6, "bootstrap determinism and analytic width", 120, bootstrap_determinism},
        {7, "orchestrator ablation structure and budgets", 60, orchestrator_structure},
        {8, "end-to-end capability pattern (multi vs single, hops)", 300,
         end_to_end_pattern},
        {9, "reasoner-ablation report deltas", 10, ablation_report},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = seconds <= c.budget_seconds;
        if (!in_budget) detail += " [over budget]";
        const bool pass = ok && in_budget;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d: %s — %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), detail.c_str(), seconds);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
