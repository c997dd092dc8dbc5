#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "hopbench/errors.hpp"

namespace hopbench::stats {

struct ProportionEstimate {
    double successes = 0;  // fractional for continuous per-trial accuracies
    int n = 0;
    double rate = 0;  // successes / n, in [0,1]
    double se = 0;    // percentage points: 100 * sqrt(rate*(1-rate)/n)
};

ProportionEstimate proportion_estimate(int successes, int n);
// Aggregate of continuous per-trial scores (entity-extraction accuracies).
ProportionEstimate proportion_from_rate(double rate, int n);

struct TestResult {
    double statistic = 0;  // Fisher: observed table probability; Welch: t
    double p_value = 1;
    std::string kind;
    bool bonferroni_applied = false;
    int bonferroni_m = 1;
    bool degenerate = false;
};

// Exact two-sided p by the point-probability method: the sum of all
// fixed-margin tables whose hypergeometric probability does not exceed the
// observed table's. Integer arithmetic is exact throughout.
TestResult fisher_exact_two_tailed(long long a, long long b, long long c, long long d);

TestResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b);

TestResult with_bonferroni(TestResult r, int m);

// Fig-style significance markers: *** below 0.001, * below 0.05.
std::string significance_stars(double p);

struct Interval {
    double lo = 0;
    double hi = 0;
};

using Statistic = std::function<double(std::span<const double>)>;

// Percentile bootstrap. Each resample draws its RNG from (seed, resample
// index), so the result is independent of execution order; the default path
// runs the resamples in parallel and must agree with the serial reference
// bit for bit.
Interval bootstrap_ci(std::span<const double> data, const Statistic& stat,
                      int resamples = 1000, double level = 0.95, std::uint64_t seed = 0);
Interval bootstrap_ci_serial(std::span<const double> data, const Statistic& stat,
                             int resamples = 1000, double level = 0.95,
                             std::uint64_t seed = 0);

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

// Percentage-point gain of the multi-agent workflow over single-agent.
double multiagent_improvement(const ProportionEstimate& single_agent,
                              const ProportionEstimate& multi_agent);

}  // namespace hopbench::stats
