#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopbench/runner.hpp"
#include "hopbench/scalefit.hpp"
#include "hopbench/stats.hpp"

namespace hopbench::report {

struct AnalysisOptions {
    std::string baseline_id = "rule-based";
    std::string single_id = "single-agent";
    std::string multi_id = "multi-agent";
    // Cells with fewer trials than this are excluded with a warning; zero
    // disables the check.
    int expected_n = 0;
};

struct GridRow {
    std::string model, solver, task;
    int successes = 0, n = 0;
    double rate_pct = 0, se_pct = 0;
};

struct ImprovementRow {
    std::string model;
    double single_rate_pct = 0, multi_rate_pct = 0, delta_pp = 0;
    double fisher_p = 1.0;
    std::string stars;
};

struct ExtractionRow {
    std::string model;
    double mean_pct = 0, se_pct = 0;
    int n = 0;
};

struct AblationRow {
    std::string solver;
    int successes = 0, n = 0;
    double rate_pct = 0;
    std::optional<double> delta_vs_full_pp;  // empty for the full workflow row
};

struct HopRow {
    std::string model, solver;
    int hops = 0, successes = 0, n = 0;
    double rate_pct = 0;
};

struct SeedTestRow {
    std::string model;
    double t_statistic = 0;
    double p_raw = 1.0, p_bonferroni = 1.0;
    int n_seeds = 0;
    bool degenerate = false;
};

struct Analysis {
    std::vector<GridRow> grid;
    std::vector<ImprovementRow> improvements;
    std::vector<ExtractionRow> extraction;
    std::vector<AblationRow> ablation;
    std::vector<HopRow> hops;
    std::vector<SeedTestRow> seed_t_tests;
    std::vector<std::string> warnings;
};

// Pure function of the loaded results; never mutates them.
Analysis analyze(const runner::ExperimentMatrix& matrix,
                 const AnalysisOptions& options = {});

// report_grid.csv, report_improvements.csv, report_extraction.csv,
// report_ablation.csv, report_hops.csv and report_tests.json under out_dir.
void write_reports(const Analysis& analysis, const std::string& out_dir);

// Human-readable tables (the `report` command output).
std::string render_text(const Analysis& analysis);

std::string format_pm(double rate_pct, double se_pct);  // "80.0 ± 10.3"

// --- curve-fit outputs ---

std::string fit_to_json(const scalefit::FitResult& fit,
                        const scalefit::BootstrapFitResult* ci);

// Fitted-curve samples for plotting: params_b,accuracy rows on a log grid.
std::string curve_csv(const scalefit::FitResult& fit,
                      std::span<const scalefit::ScalingPoint> points, int samples = 120);

// Minimal static plot: data points plus the fitted curves.
std::string curve_svg(std::span<const scalefit::ScalingPoint> points,
                      const std::vector<scalefit::FitResult>& fits);

std::vector<scalefit::DataRow> read_points_csv(const std::string& path);

}  // namespace hopbench::report
