// Serial-vs-OpenMP comparison for the parallel kernels: percentile bootstrap,
// residual fit bootstrap, and the trial loop. The parallel paths must produce
// identical results; this target reports how much wall time they save.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include <omp.h>

#include "hopbench/oracle.hpp"
#include "hopbench/rng.hpp"
#include "hopbench/runner.hpp"
#include "hopbench/scalefit.hpp"
#include "hopbench/stats.hpp"

using namespace hopbench;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "results identical" : "RESULTS DIFFER");
}

void bench_bootstrap() {
    std::vector<double> data;
    RngStream rng(7);
    for (int i = 0; i < 4000; ++i) data.push_back(rng.unit() * 10.0 - 5.0);
    const auto statistic = [](std::span<const double> xs) {
        double m = stats::mean(xs);
        double s = 0;
        for (double x : xs) s += (x - m) * (x - m);
        return std::sqrt(s / static_cast<double>(xs.size()));
    };

    const auto t0 = std::chrono::steady_clock::now();
    const auto serial = stats::bootstrap_ci_serial(data, statistic, 4000, 0.95, 11);
    const double serial_ms = ms_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel = stats::bootstrap_ci(data, statistic, 4000, 0.95, 11);
    const double parallel_ms = ms_since(t1);

    report("bootstrap_ci", serial_ms, parallel_ms,
           serial.lo == parallel.lo && serial.hi == parallel.hi);
}

void bench_fit_bootstrap() {
    std::vector<scalefit::ScalingPoint> pts;
    RngStream rng(3);
    for (int i = 0; i < 14; ++i) {
        const double lx = 0.5 * i;
        const double y = 75.0 / (1.0 + std::exp(-0.8 * (lx - 3.0))) + 5.0;
        pts.push_back({std::exp(lx), y + (rng.unit() - 0.5) * 3.0});
    }

    const auto t0 = std::chrono::steady_clock::now();
    const auto serial =
        scalefit::bootstrap_fit_ci_serial(pts, scalefit::ModelKind::sigmoid, 600, 5);
    const double serial_ms = ms_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel =
        scalefit::bootstrap_fit_ci(pts, scalefit::ModelKind::sigmoid, 600, 5);
    const double parallel_ms = ms_since(t1);

    bool identical = serial.failures == parallel.failures;
    for (std::size_t i = 0; identical && i < serial.intervals.size(); ++i)
        identical = serial.intervals[i].lo == parallel.intervals[i].lo &&
                    serial.intervals[i].hi == parallel.intervals[i].hi;
    report("bootstrap_fit_ci", serial_ms, parallel_ms, identical);
}

runner::RunOutcome run_trials(const std::string& dir) {
    runner::MatrixConfig mc;
    mc.models = {{"bench-model", 8, 8, gateway::ModelSpec::Arch::dense}};
    runner::SolverConfig solver;
    solver.kind = runner::SolverConfig::Kind::multi_agent;
    solver.workflow.mode = orchestrator::Mode::multi_agent;
    mc.solvers = {solver};
    mc.task_types = {TaskType::contextual};
    mc.trials_per_cell = 40;

    oracle::OracleProfile profile;
    profile.extraction_accuracy = 0.9;
    profile.synthesis_per_hop = {0, 0.9, 0.6, 0.4, 0.2};
    runner::BackendMap backends;
    backends["bench-model"] = std::make_shared<oracle::OracleBackend>(profile);

    std::filesystem::remove_all(dir);
    return runner::run_experiment(mc, ScenarioConfig{}, backends, dir);
}

void bench_trial_loop() {
    const int max_threads = omp_get_max_threads();

    omp_set_num_threads(1);
    const auto t0 = std::chrono::steady_clock::now();
    const auto serial = run_trials("/tmp/hopbench-bench-serial");
    const double serial_ms = ms_since(t0);

    omp_set_num_threads(max_threads);
    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel = run_trials("/tmp/hopbench-bench-parallel");
    const double parallel_ms = ms_since(t1);

    bool identical = serial.matrix.cells.size() == parallel.matrix.cells.size();
    if (identical)
        for (const auto& [key, cell] : serial.matrix.cells) {
            const auto& other = parallel.matrix.cells.at(key);
            identical = identical && other.successes == cell.successes &&
                        other.n == cell.n;
        }
    report("runner trial loop", serial_ms, parallel_ms, identical);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    bench_bootstrap();
    bench_fit_bootstrap();
    bench_trial_loop();
    return 0;
}
