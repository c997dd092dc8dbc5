#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hopbench/errors.hpp"

namespace hopbench::scalefit {

enum class ModelKind { power_law, sigmoid };
enum class ParamAxis { total, active };
enum class PointSource { experiment, literature };

const char* to_string(ModelKind k);

struct ScalingPoint {
    double params_b = 0;  // parameter count, billions, on the chosen axis
    double accuracy = 0;  // percent
    PointSource source = PointSource::experiment;
};

// One dataset row before axis selection. Fitting against total vs. active
// parameters changes only the abscissa of MoE rows.
struct DataRow {
    std::string label;
    double total_b = 0;
    double active_b = 0;
    double accuracy = 0;
    PointSource source = PointSource::experiment;
};

std::vector<ScalingPoint> select_axis(std::span<const DataRow> rows, ParamAxis axis,
                                      bool include_literature);

struct FitResult {
    ModelKind kind = ModelKind::power_law;
    // power law: {a, alpha, b} for a * N^(-alpha) + b
    // sigmoid:   {L, k, N0, c} for L / (1 + exp(-k (ln N - N0))) + c
    std::vector<double> params;
    double rss = 0;
    double log_likelihood = 0;
    double bic = 0;
    bool converged = false;
    bool identifiable = true;
    int n_points = 0;
    std::uint64_t points_hash = 0;
};

// Damped least squares with analytic Jacobians over a 10-point start grid.
// Preconditions: power law needs >= 4 points, sigmoid >= 5, all abscissas
// positive. Non-convergence is flagged on the result, never silent.
FitResult fit(ModelKind kind, std::span<const ScalingPoint> points);
FitResult fit_power_law(std::span<const ScalingPoint> points);
FitResult fit_sigmoid(std::span<const ScalingPoint> points);

double predict(ModelKind kind, std::span<const double> params, double n_billions);

struct BicComparison {
    ModelKind better = ModelKind::power_law;
    double delta_bic = 0;
};

// Requires both fits to come from the identical point set.
BicComparison compare_bic(const FitResult& a, const FitResult& b);

struct ParamInterval {
    double lo = 0;
    double hi = 0;
};

struct BootstrapFitResult {
    std::vector<ParamInterval> intervals;  // one per model parameter
    int resamples = 0;
    int failures = 0;
    bool flagged = false;  // > 20% of resamples failed to converge
};

// Residual-resampling bootstrap around a converged fit; percentile CIs,
// deterministic per seed, parallel path must match the serial reference.
BootstrapFitResult bootstrap_fit_ci(std::span<const ScalingPoint> points, ModelKind kind,
                                    int resamples = 1000, std::uint64_t seed = 0);
BootstrapFitResult bootstrap_fit_ci_serial(std::span<const ScalingPoint> points,
                                           ModelKind kind, int resamples = 1000,
                                           std::uint64_t seed = 0);

}  // namespace hopbench::scalefit
