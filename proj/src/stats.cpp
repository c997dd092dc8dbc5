#include "hopbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/students_t.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "hopbench/rng.hpp"

namespace hopbench::stats {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

cpp_int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    cpp_int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0;
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

ProportionEstimate proportion_estimate(int successes, int n) {
    if (n <= 0) throw AnalysisError("proportion_estimate: n must be positive");
    if (successes < 0 || successes > n)
        throw AnalysisError("proportion_estimate: successes out of range");
    ProportionEstimate e;
    e.successes = successes;
    e.n = n;
    e.rate = static_cast<double>(successes) / n;
    e.se = 100.0 * std::sqrt(e.rate * (1.0 - e.rate) / n);
    return e;
}

ProportionEstimate proportion_from_rate(double rate, int n) {
    if (n <= 0) throw AnalysisError("proportion_from_rate: n must be positive");
    if (rate < 0.0 || rate > 1.0)
        throw AnalysisError("proportion_from_rate: rate out of range");
    ProportionEstimate e;
    e.successes = rate * n;
    e.n = n;
    e.rate = rate;
    e.se = 100.0 * std::sqrt(rate * (1.0 - rate) / n);
    return e;
}

TestResult fisher_exact_two_tailed(long long a, long long b, long long c, long long d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw AnalysisError("fisher_exact: negative count");
    const long long r1 = a + b, r2 = c + d, c1 = a + c, n = r1 + r2;
    if (n == 0) throw AnalysisError("fisher_exact: all-zero table");

    const long long k_lo = std::max(0ll, c1 - r2);
    const long long k_hi = std::min(r1, c1);

    // With fixed margins every table shares the denominator C(n, c1), so
    // "no more probable than observed" is an exact integer comparison of
    // numerator weights C(r1,k) * C(r2,c1-k).
    const cpp_int observed = binomial(r1, a) * binomial(r2, c1 - a);
    cpp_int tail = 0;
    cpp_int denom = 0;
    for (long long k = k_lo; k <= k_hi; ++k) {
        const cpp_int w = binomial(r1, k) * binomial(r2, c1 - k);
        denom += w;
        if (w <= observed) tail += w;
    }

    TestResult r;
    r.kind = "fisher_exact";
    r.statistic = cpp_rational(observed, denom).convert_to<double>();
    r.p_value = std::min(1.0, cpp_rational(tail, denom).convert_to<double>());
    return r;
}

TestResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b) {
    if (sample_a.size() < 2 || sample_b.size() < 2)
        throw AnalysisError("welch_t_test: need at least two values per sample");
    const double m1 = mean(sample_a), m2 = mean(sample_b);
    const double v1 = sample_variance(sample_a), v2 = sample_variance(sample_b);
    const auto n1 = static_cast<double>(sample_a.size());
    const auto n2 = static_cast<double>(sample_b.size());

    TestResult r;
    r.kind = "welch_t";
    if (v1 == 0.0 && v2 == 0.0) {
        r.degenerate = true;
        r.statistic = 0.0;
        r.p_value = m1 == m2 ? 1.0 : 0.0;
        return r;
    }
    const double se2 = v1 / n1 + v2 / n2;
    r.statistic = (m1 - m2) / std::sqrt(se2);
    const double df = se2 * se2 /
                      (v1 * v1 / (n1 * n1 * (n1 - 1)) + v2 * v2 / (n2 * n2 * (n2 - 1)));
    boost::math::students_t dist(df);
    r.p_value = 2.0 * boost::math::cdf(dist, -std::abs(r.statistic));
    return r;
}

TestResult with_bonferroni(TestResult r, int m) {
    if (m < 1) throw AnalysisError("bonferroni: m must be >= 1");
    r.bonferroni_applied = true;
    r.bonferroni_m = m;
    r.p_value = std::min(1.0, r.p_value * m);
    return r;
}

std::string significance_stars(double p) {
    if (p < 0.001) return "***";
    if (p < 0.05) return "*";
    return "";
}

double mean(std::span<const double> xs) {
    double s = 0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

namespace {

double resample_statistic(std::span<const double> data, const Statistic& stat,
                          std::uint64_t seed, int index) {
    RngStream rng(mix(seed, static_cast<std::uint64_t>(index) ^ 0x626f6f74ull));
    std::vector<double> draw(data.size());
    for (std::size_t i = 0; i < draw.size(); ++i) draw[i] = data[rng.bounded(data.size())];
    return stat(draw);
}

Interval percentile_interval(std::vector<double> stats, double level) {
    std::sort(stats.begin(), stats.end());
    const double alpha = (1.0 - level) / 2.0;
    return Interval{quantile_sorted(stats, alpha), quantile_sorted(stats, 1.0 - alpha)};
}

void check_bootstrap_args(std::span<const double> data, int resamples, double level) {
    if (data.empty()) throw AnalysisError("bootstrap_ci: empty data");
    if (resamples < 100) throw AnalysisError("bootstrap_ci: need >= 100 resamples");
    if (level <= 0.0 || level >= 1.0) throw AnalysisError("bootstrap_ci: bad level");
}

}  // namespace

Interval bootstrap_ci_serial(std::span<const double> data, const Statistic& stat,
                             int resamples, double level, std::uint64_t seed) {
    check_bootstrap_args(data, resamples, level);
    std::vector<double> stats(static_cast<std::size_t>(resamples));
    for (int i = 0; i < resamples; ++i)
        stats[static_cast<std::size_t>(i)] = resample_statistic(data, stat, seed, i);
    return percentile_interval(std::move(stats), level);
}

Interval bootstrap_ci(std::span<const double> data, const Statistic& stat, int resamples,
                      double level, std::uint64_t seed) {
    check_bootstrap_args(data, resamples, level);
    std::vector<double> stats(static_cast<std::size_t>(resamples));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < resamples; ++i)
        stats[static_cast<std::size_t>(i)] = resample_statistic(data, stat, seed, i);
    return percentile_interval(std::move(stats), level);
}

double multiagent_improvement(const ProportionEstimate& single_agent,
                              const ProportionEstimate& multi_agent) {
    return multi_agent.rate * 100.0 - single_agent.rate * 100.0;
}

}  // namespace hopbench::stats
