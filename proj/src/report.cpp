#include "hopbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hopbench::report {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using runner::ExperimentMatrix;

namespace {

std::string fmt1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

double pct1(int successes, int n) {
    return n == 0 ? 0.0 : std::round(1000.0 * successes / n) / 10.0;
}

struct Agg {
    int successes = 0, n = 0;
    std::vector<const TrialRecord*> trials;
};

}  // namespace

std::string format_pm(double rate_pct, double se_pct) {
    return fmt1(rate_pct) + " ± " + fmt1(se_pct);
}

Analysis analyze(const ExperimentMatrix& matrix, const AnalysisOptions& options) {
    if (matrix.cells.empty()) throw AnalysisError("analyze: empty results");
    Analysis out;

    // Schema sanity plus incomplete-cell exclusion.
    std::map<std::tuple<std::string, std::string, std::string>, Agg> by_mst;
    std::set<std::string> models;
    for (const auto& [key, cell] : matrix.cells) {
        const bool short_cell =
            cell.incomplete || (options.expected_n > 0 && cell.n < options.expected_n);
        if (short_cell) {
            out.warnings.push_back("excluded incomplete cell: " + key.str() + " (n=" +
                                   std::to_string(cell.n) + ")");
            continue;
        }
        auto& agg = by_mst[{key.model, key.solver, key.task_type}];
        agg.successes += cell.successes;
        agg.n += cell.n;
        for (const auto& t : cell.trials) agg.trials.push_back(&t);
        models.insert(key.model);
    }
    if (by_mst.empty()) throw AnalysisError("analyze: every cell was incomplete");

    // Success grid, one row per (model, solver, task).
    for (const auto& [key, agg] : by_mst) {
        const auto& [model, solver, task] = key;
        const auto est = stats::proportion_estimate(agg.successes, agg.n);
        out.grid.push_back(GridRow{model, solver, task, agg.successes, agg.n,
                                   est.rate * 100.0, est.se});
    }

    // Multi-agent improvement per model on contextual tasks, with the exact
    // test on the pooled 2x2 counts.
    for (const auto& model : models) {
        const auto single = by_mst.find({model, options.single_id, "contextual"});
        const auto multi = by_mst.find({model, options.multi_id, "contextual"});
        if (single == by_mst.end() || multi == by_mst.end()) continue;
        ImprovementRow row;
        row.model = model;
        const auto s = stats::proportion_estimate(single->second.successes, single->second.n);
        const auto m = stats::proportion_estimate(multi->second.successes, multi->second.n);
        row.single_rate_pct = s.rate * 100.0;
        row.multi_rate_pct = m.rate * 100.0;
        row.delta_pp = stats::multiagent_improvement(s, m);
        const auto fisher = stats::fisher_exact_two_tailed(
            multi->second.successes, multi->second.n - multi->second.successes,
            single->second.successes, single->second.n - single->second.successes);
        row.fisher_p = fisher.p_value;
        row.stars = stats::significance_stars(fisher.p_value);
        out.improvements.push_back(std::move(row));
    }

    // Entity extraction accuracy per model (multi-agent contextual trials).
    for (const auto& model : models) {
        const auto it = by_mst.find({model, options.multi_id, "contextual"});
        if (it == by_mst.end()) continue;
        double sum = 0;
        int n = 0;
        for (const auto* t : it->second.trials) {
            if (t->extraction_accuracy < 0) continue;
            sum += t->extraction_accuracy;
            ++n;
        }
        if (n == 0) continue;
        const double mean = sum / n;
        const auto est = stats::proportion_from_rate(std::clamp(mean, 0.0, 1.0), n);
        out.extraction.push_back(ExtractionRow{model, mean * 100.0, est.se, n});
    }

    // Ablation table on contextual tasks, pooled over models.
    {
        std::vector<std::string> ablation_ids = {
            options.multi_id, options.multi_id + "/no-strategist",
            options.multi_id + "/no-refinement", options.single_id};
        std::map<std::string, Agg> per_solver;
        for (const auto& [key, agg] : by_mst) {
            const auto& [model, solver, task] = key;
            if (task != "contextual") continue;
            if (std::find(ablation_ids.begin(), ablation_ids.end(), solver) ==
                ablation_ids.end())
                continue;
            auto& a = per_solver[solver];
            a.successes += agg.successes;
            a.n += agg.n;
        }
        if (per_solver.count(options.multi_id) && per_solver.size() >= 2) {
            const auto& full = per_solver.at(options.multi_id);
            const double full_rate = pct1(full.successes, full.n);
            for (const auto& id : ablation_ids) {
                const auto it = per_solver.find(id);
                if (it == per_solver.end()) continue;
                AblationRow row;
                row.solver = id;
                row.successes = it->second.successes;
                row.n = it->second.n;
                row.rate_pct = pct1(it->second.successes, it->second.n);
                if (id != options.multi_id)
                    row.delta_vs_full_pp = row.rate_pct - full_rate;
                out.ablation.push_back(std::move(row));
            }
        }
    }

    // Hop-count degradation per (model, solver).
    {
        std::map<std::tuple<std::string, std::string, int>, std::pair<int, int>> hop_agg;
        for (const auto& [key, agg] : by_mst) {
            const auto& [model, solver, task] = key;
            for (const auto* t : agg.trials) {
                auto& [s, n] = hop_agg[{model, solver, t->hop_count}];
                s += t->success ? 1 : 0;
                n += 1;
            }
        }
        for (const auto& [key, sn] : hop_agg) {
            const auto& [model, solver, hops] = key;
            out.hops.push_back(HopRow{model, solver, hops, sn.first, sn.second,
                                      pct1(sn.first, sn.second)});
        }
    }

    // Per-seed Welch t-tests (multi vs single, contextual) when the results
    // span several master seeds; Bonferroni over the models tested.
    {
        std::map<std::string, std::map<std::uint64_t, std::pair<int, int>>> single_by_seed,
            multi_by_seed;
        for (const auto& [key, agg] : by_mst) {
            const auto& [model, solver, task] = key;
            if (task != "contextual") continue;
            auto* dst = solver == options.single_id  ? &single_by_seed
                        : solver == options.multi_id ? &multi_by_seed
                                                     : nullptr;
            if (!dst) continue;
            for (const auto* t : agg.trials) {
                auto& [s, n] = (*dst)[model][t->master_seed];
                s += t->success ? 1 : 0;
                n += 1;
            }
        }
        std::vector<SeedTestRow> rows;
        for (const auto& [model, seeds] : multi_by_seed) {
            const auto sit = single_by_seed.find(model);
            if (sit == single_by_seed.end()) continue;
            if (seeds.size() < 2 || sit->second.size() < 2) continue;
            std::vector<double> multi_rates, single_rates;
            for (const auto& [seed, sn] : seeds)
                multi_rates.push_back(static_cast<double>(sn.first) / sn.second);
            for (const auto& [seed, sn] : sit->second)
                single_rates.push_back(static_cast<double>(sn.first) / sn.second);
            const auto t = stats::welch_t_test(multi_rates, single_rates);
            SeedTestRow row;
            row.model = model;
            row.t_statistic = t.statistic;
            row.p_raw = t.p_value;
            row.degenerate = t.degenerate;
            row.n_seeds = static_cast<int>(seeds.size());
            rows.push_back(row);
        }
        for (auto& row : rows) {
            row.p_bonferroni =
                std::min(1.0, row.p_raw * static_cast<double>(rows.size()));
            out.seed_t_tests.push_back(row);
        }
    }

    return out;
}

void write_reports(const Analysis& a, const std::string& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream f(fs::path(out_dir) / "report_grid.csv");
        f << "model,solver,task,successes,n,rate_pct,se_pct\n";
        for (const auto& r : a.grid)
            f << r.model << "," << r.solver << "," << r.task << "," << r.successes << ","
              << r.n << "," << fmt1(r.rate_pct) << "," << fmt1(r.se_pct) << "\n";
    }
    {
        std::ofstream f(fs::path(out_dir) / "report_improvements.csv");
        f << "model,single_rate_pct,multi_rate_pct,delta_pp,fisher_p,stars\n";
        for (const auto& r : a.improvements)
            f << r.model << "," << fmt1(r.single_rate_pct) << "," << fmt1(r.multi_rate_pct)
              << "," << fmt1(r.delta_pp) << "," << r.fisher_p << "," << r.stars << "\n";
    }
    {
        std::ofstream f(fs::path(out_dir) / "report_extraction.csv");
        f << "model,extraction_pct,se_pct,n\n";
        for (const auto& r : a.extraction)
            f << r.model << "," << fmt1(r.mean_pct) << "," << fmt1(r.se_pct) << "," << r.n
              << "\n";
    }
    {
        std::ofstream f(fs::path(out_dir) / "report_ablation.csv");
        f << "solver,successes,n,rate_pct,delta_vs_full_pp\n";
        for (const auto& r : a.ablation) {
            f << r.solver << "," << r.successes << "," << r.n << "," << fmt1(r.rate_pct)
              << ",";
            if (r.delta_vs_full_pp) f << fmt1(*r.delta_vs_full_pp);
            f << "\n";
        }
    }
    {
        std::ofstream f(fs::path(out_dir) / "report_hops.csv");
        f << "model,solver,hops,successes,n,rate_pct\n";
        for (const auto& r : a.hops)
            f << r.model << "," << r.solver << "," << r.hops << "," << r.successes << ","
              << r.n << "," << fmt1(r.rate_pct) << "\n";
    }
    {
        ordered_json tests;
        ordered_json fisher = ordered_json::array();
        for (const auto& r : a.improvements)
            fisher.push_back({{"model", r.model},
                              {"kind", "fisher_exact"},
                              {"delta_pp", r.delta_pp},
                              {"p_value", r.fisher_p},
                              {"stars", r.stars}});
        ordered_json welch = ordered_json::array();
        for (const auto& r : a.seed_t_tests)
            welch.push_back({{"model", r.model},
                             {"kind", "welch_t"},
                             {"t", r.t_statistic},
                             {"p_raw", r.p_raw},
                             {"p_bonferroni", r.p_bonferroni},
                             {"n_seeds", r.n_seeds},
                             {"degenerate", r.degenerate}});
        tests["schema_version"] = "report-tests/v1";
        tests["fisher"] = fisher;
        tests["welch_per_seed"] = welch;
        tests["warnings"] = a.warnings;
        std::ofstream f(fs::path(out_dir) / "report_tests.json");
        f << tests.dump(2) << "\n";
    }
}

std::string render_text(const Analysis& a) {
    std::ostringstream out;
    for (const auto& w : a.warnings) out << "WARNING: " << w << "\n";
    if (!a.warnings.empty()) out << "\n";

    out << "Success rates (% ± SE)\n";
    std::set<std::string> models, solvers;
    for (const auto& r : a.grid) {
        models.insert(r.model);
        solvers.insert(r.solver);
    }
    for (const auto& solver : solvers) {
        out << "  [" << solver << "]\n";
        for (const auto& model : models) {
            std::string structured = "-", contextual = "-";
            for (const auto& r : a.grid) {
                if (r.model != model || r.solver != solver) continue;
                (r.task == "structured" ? structured : contextual) =
                    format_pm(r.rate_pct, r.se_pct);
            }
            if (structured == "-" && contextual == "-") continue;
            out << "    " << model << ": structured " << structured << " | contextual "
                << contextual << "\n";
        }
    }

    if (!a.improvements.empty()) {
        out << "\nMulti-agent improvement (contextual, pp)\n";
        for (const auto& r : a.improvements)
            out << "  " << r.model << ": " << fmt1(r.single_rate_pct) << " -> "
                << fmt1(r.multi_rate_pct) << "  (" << (r.delta_pp >= 0 ? "+" : "")
                << fmt1(r.delta_pp) << "pp, p=" << r.fisher_p
                << (r.stars.empty() ? "" : " " + r.stars) << ")\n";
    }

    if (!a.extraction.empty()) {
        out << "\nEntity extraction accuracy (multi-agent, contextual)\n";
        for (const auto& r : a.extraction)
            out << "  " << r.model << ": " << format_pm(r.mean_pct, r.se_pct) << "  (n="
                << r.n << ")\n";
    }

    if (!a.ablation.empty()) {
        out << "\nAblation (contextual)\n";
        for (const auto& r : a.ablation) {
            out << "  " << r.solver << ": " << fmt1(r.rate_pct) << "%";
            if (r.delta_vs_full_pp)
                out << "  (" << (*r.delta_vs_full_pp >= 0 ? "+" : "")
                    << fmt1(*r.delta_vs_full_pp) << "pp vs full)";
            out << "\n";
        }
    }

    if (!a.hops.empty()) {
        out << "\nSuccess by hop count\n";
        for (const auto& r : a.hops)
            out << "  " << r.model << " / " << r.solver << " @ " << r.hops
                << " hops: " << fmt1(r.rate_pct) << "% (" << r.successes << "/" << r.n
                << ")\n";
    }

    if (!a.seed_t_tests.empty()) {
        out << "\nPer-seed Welch t-tests (multi vs single, contextual)\n";
        for (const auto& r : a.seed_t_tests)
            out << "  " << r.model << ": t=" << fmt1(r.t_statistic)
                << " p=" << r.p_raw << " (bonferroni " << r.p_bonferroni << ", "
                << r.n_seeds << " seeds)" << (r.degenerate ? " [degenerate]" : "")
                << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// curve-fit outputs
// ---------------------------------------------------------------------------

std::string fit_to_json(const scalefit::FitResult& fit,
                        const scalefit::BootstrapFitResult* ci) {
    ordered_json j;
    j["model"] = scalefit::to_string(fit.kind);
    const char* power_names[] = {"a", "alpha", "b"};
    const char* sigmoid_names[] = {"L", "k", "N0", "c"};
    ordered_json params = ordered_json::object();
    for (std::size_t i = 0; i < fit.params.size(); ++i) {
        const char* name = fit.kind == scalefit::ModelKind::power_law
                               ? power_names[i]
                               : sigmoid_names[i];
        ordered_json p{{"estimate", fit.params[i]}};
        if (ci && i < ci->intervals.size()) {
            p["ci_lo"] = ci->intervals[i].lo;
            p["ci_hi"] = ci->intervals[i].hi;
        }
        params[name] = p;
    }
    j["params"] = params;
    j["rss"] = fit.rss;
    j["log_likelihood"] = fit.log_likelihood;
    j["bic"] = fit.bic;
    j["converged"] = fit.converged;
    j["identifiable"] = fit.identifiable;
    j["n_points"] = fit.n_points;
    if (ci) {
        j["bootstrap_resamples"] = ci->resamples;
        j["bootstrap_failures"] = ci->failures;
        j["bootstrap_flagged"] = ci->flagged;
    }
    return j.dump(2);
}

std::string curve_csv(const scalefit::FitResult& fit,
                      std::span<const scalefit::ScalingPoint> points, int samples) {
    double lo = 1e300, hi = 0;
    for (const auto& p : points) {
        lo = std::min(lo, p.params_b);
        hi = std::max(hi, p.params_b);
    }
    std::ostringstream out;
    out << "params_b,accuracy\n";
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < samples; ++i) {
        const double x =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (samples - 1));
        out << x << "," << scalefit::predict(fit.kind, fit.params, x) << "\n";
    }
    return out.str();
}

std::string curve_svg(std::span<const scalefit::ScalingPoint> points,
                      const std::vector<scalefit::FitResult>& fits) {
    constexpr int W = 640, H = 420, M = 50;
    double lo = 1e300, hi = 0, ylo = 1e300, yhi = -1e300;
    for (const auto& p : points) {
        lo = std::min(lo, p.params_b);
        hi = std::max(hi, p.params_b);
        ylo = std::min(ylo, p.accuracy);
        yhi = std::max(yhi, p.accuracy);
    }
    const double pad = std::max(1.0, (yhi - ylo) * 0.1);
    ylo -= pad;
    yhi += pad;
    const double llo = std::log(lo), lhi = std::log(hi);
    auto px = [&](double x) {
        return M + (std::log(x) - llo) / (lhi - llo) * (W - 2 * M);
    };
    auto py = [&](double y) { return H - M - (y - ylo) / (yhi - ylo) * (H - 2 * M); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\""
        << H - M << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M
        << "\" stroke=\"black\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c"};
    for (std::size_t f = 0; f < fits.size(); ++f) {
        svg << "<polyline fill=\"none\" stroke=\"" << colors[f % 3] << "\" points=\"";
        for (int i = 0; i < 120; ++i) {
            const double x = std::exp(llo + (lhi - llo) * i / 119.0);
            svg << px(x) << "," << py(scalefit::predict(fits[f].kind, fits[f].params, x))
                << " ";
        }
        svg << "\"/>\n";
    }
    for (const auto& p : points)
        svg << "<circle cx=\"" << px(p.params_b) << "\" cy=\"" << py(p.accuracy)
            << "\" r=\"4\" fill=\""
            << (p.source == scalefit::PointSource::literature ? "gray" : "black")
            << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::vector<scalefit::DataRow> read_points_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AnalysisError("cannot open points CSV: " + path);
    std::vector<scalefit::DataRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && line.rfind("label", 0) == 0) {
            first = false;
            continue;  // header
        }
        first = false;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() < 4)
            throw AnalysisError("points CSV row needs label,total_b,active_b,accuracy[,source]");
        scalefit::DataRow row;
        row.label = fields[0];
        row.total_b = std::stod(fields[1]);
        row.active_b = std::stod(fields[2]);
        row.accuracy = std::stod(fields[3]);
        row.source = fields.size() > 4 && fields[4] == "literature"
                         ? scalefit::PointSource::literature
                         : scalefit::PointSource::experiment;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw AnalysisError("points CSV is empty");
    return rows;
}

}  // namespace hopbench::report
