#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hopbench/stats.hpp"
#include "support/fisher_oracle.hpp"

using namespace hopbench;

namespace {

double fisher_oracle(long long a, long long b, long long c, long long d) {
    return testsupport::fisher_two_sided_oracle(a, b, c, d);
}

}  // namespace

TEST_CASE("fisher: identical groups give p = 1") {
    const auto r = stats::fisher_exact_two_tailed(5, 10, 5, 10);
    CHECK(r.p_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fisher: frozen values verified against the enumeration oracle") {
    // (12,3,5,10): oracle-checked before freezing.
    const double oracle = fisher_oracle(12, 3, 5, 10);
    const auto r = stats::fisher_exact_two_tailed(12, 3, 5, 10);
    CHECK(std::abs(r.p_value - oracle) < 1e-14);
    CHECK(r.p_value == doctest::Approx(0.02533).epsilon(4e-4));

    // Maximal separation: both extreme tables are equally improbable, so the
    // two-sided tail is exactly 2 / C(30,15).
    const auto extreme = stats::fisher_exact_two_tailed(15, 0, 0, 15);
    CHECK(std::abs(extreme.p_value - fisher_oracle(15, 0, 0, 15)) < 1e-20);
    CHECK(extreme.p_value == doctest::Approx(2.0 / 155117520.0).epsilon(1e-9));
}

TEST_CASE("fisher: symmetry in rows and in group order") {
    const std::vector<std::array<long long, 4>> tables = {
        {12, 3, 5, 10}, {7, 8, 2, 13}, {1, 0, 3, 9}, {4, 4, 4, 4}, {9, 1, 0, 2}};
    for (const auto& t : tables) {
        const double base = stats::fisher_exact_two_tailed(t[0], t[1], t[2], t[3]).p_value;
        const double rows = stats::fisher_exact_two_tailed(t[2], t[3], t[0], t[1]).p_value;
        const double cols = stats::fisher_exact_two_tailed(t[1], t[0], t[3], t[2]).p_value;
        CHECK(std::abs(base - rows) < 1e-15);
        CHECK(std::abs(base - cols) < 1e-15);
    }
}

TEST_CASE("fisher: matches the oracle across a table sweep") {
    for (long long a = 0; a <= 6; ++a)
        for (long long b = 0; b <= 6; ++b)
            for (long long c = 0; c <= 6; ++c)
                for (long long d = 0; d <= 6; ++d) {
                    if (a + b + c + d == 0) continue;
                    const double got =
                        stats::fisher_exact_two_tailed(a, b, c, d).p_value;
                    CHECK(std::abs(got - fisher_oracle(a, b, c, d)) < 1e-12);
                }
}

TEST_CASE("fisher: degenerate and invalid input") {
    CHECK_THROWS_AS(stats::fisher_exact_two_tailed(0, 0, 0, 0), AnalysisError);
    CHECK_THROWS_AS(stats::fisher_exact_two_tailed(-1, 2, 3, 4), AnalysisError);
}

TEST_CASE("proportion estimate reproduces the published rate/SE pairs") {
    struct Row {
        int successes, n;
        double rate_pct, se_pct;
    };
    const std::vector<Row> rows = {
        {12, 15, 80.0, 10.3}, {13, 15, 86.7, 8.8}, {5, 15, 33.3, 12.2},
        {6, 15, 40.0, 12.6},  {3, 15, 20.0, 10.3}, {8, 15, 53.3, 12.9},
        {0, 15, 0.0, 0.0},    {2, 15, 13.3, 8.8},  {4, 15, 26.7, 11.4},
        {9, 15, 60.0, 12.6},  {1, 15, 6.7, 6.4},
    };
    for (const auto& row : rows) {
        const auto e = stats::proportion_estimate(row.successes, row.n);
        CHECK(std::round(e.rate * 1000.0) / 10.0 == doctest::Approx(row.rate_pct));
        CHECK(std::round(e.se * 10.0) / 10.0 == doctest::Approx(row.se_pct));
    }
    CHECK_THROWS_AS(stats::proportion_estimate(1, 0), AnalysisError);
    CHECK_THROWS_AS(stats::proportion_estimate(9, 5), AnalysisError);
}

TEST_CASE("proportion from continuous rate") {
    const auto e = stats::proportion_from_rate(0.923, 42);
    CHECK(std::round(e.se * 10.0) / 10.0 == doctest::Approx(4.1));
    CHECK_THROWS_AS(stats::proportion_from_rate(1.2, 10), AnalysisError);
}

TEST_CASE("welch t: known value derived from the formula") {
    // mean 10, sd 1, n 5 vs mean 12, sd 1, n 5: t = -2 / sqrt(2/5).
    const std::vector<double> a = {9, 11, 9, 11, 10};
    const std::vector<double> b = {11, 13, 11, 13, 12};
    const auto r = stats::welch_t_test(a, b);
    CHECK(r.statistic == doctest::Approx(-2.0 / std::sqrt(0.4)).epsilon(1e-12));
    CHECK(r.statistic == doctest::Approx(-3.162).epsilon(1e-3));
    CHECK(r.p_value > 0.0);
    CHECK(r.p_value < 0.05);
}

TEST_CASE("welch t: identical and degenerate samples") {
    const std::vector<double> a = {1, 2, 3};
    CHECK(stats::welch_t_test(a, a).p_value == doctest::Approx(1.0));

    const std::vector<double> zeros = {0, 0, 0};
    const std::vector<double> ones = {1, 1, 1};
    const auto deg = stats::welch_t_test(zeros, ones);
    CHECK(deg.degenerate);
    CHECK(deg.p_value == 0.0);
    const auto same = stats::welch_t_test(zeros, zeros);
    CHECK(same.degenerate);
    CHECK(same.p_value == 1.0);

    CHECK_THROWS_AS(stats::welch_t_test(std::vector<double>{1.0}, a), AnalysisError);
}

TEST_CASE("bonferroni correction caps at one") {
    auto r = stats::fisher_exact_two_tailed(12, 3, 5, 10);
    const double raw = r.p_value;
    const auto corrected = stats::with_bonferroni(r, 4);
    CHECK(corrected.p_value == doctest::Approx(std::min(1.0, raw * 4)));
    CHECK(corrected.bonferroni_applied);
    const auto capped = stats::with_bonferroni(corrected, 1000);
    CHECK(capped.p_value == 1.0);
}

TEST_CASE("significance stars follow the figure thresholds") {
    CHECK(stats::significance_stars(0.0005) == "***");
    CHECK(stats::significance_stars(0.01) == "*");
    CHECK(stats::significance_stars(0.2).empty());
}

TEST_CASE("bootstrap: determinism, degenerate data, serial/parallel agreement") {
    const auto statistic = [](std::span<const double> xs) { return stats::mean(xs); };

    const std::vector<double> constant(25, 3.25);
    const auto c = stats::bootstrap_ci(constant, statistic, 500, 0.95, 7);
    CHECK(c.lo == 3.25);
    CHECK(c.hi == 3.25);

    std::vector<double> data;
    for (int i = 0; i < 40; ++i) data.push_back(std::sin(i * 0.7) * 2 + i % 5);
    const auto a = stats::bootstrap_ci(data, statistic, 1000, 0.95, 42);
    const auto b = stats::bootstrap_ci(data, statistic, 1000, 0.95, 42);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
    const auto serial = stats::bootstrap_ci_serial(data, statistic, 1000, 0.95, 42);
    CHECK(a.lo == serial.lo);
    CHECK(a.hi == serial.hi);
    const auto other = stats::bootstrap_ci(data, statistic, 1000, 0.95, 43);
    CHECK((other.lo != a.lo || other.hi != a.hi));

    const double m = stats::mean(data);
    CHECK(a.lo <= m);
    CHECK(a.hi >= m);

    CHECK_THROWS_AS(stats::bootstrap_ci({}, statistic, 1000, 0.95, 1), AnalysisError);
    CHECK_THROWS_AS(stats::bootstrap_ci(data, statistic, 50, 0.95, 1), AnalysisError);
}

TEST_CASE("multi-agent improvement deltas") {
    const auto single_33 = stats::proportion_estimate(5, 15);
    const auto multi_80 = stats::proportion_estimate(12, 15);
    CHECK(stats::multiagent_improvement(single_33, multi_80) ==
          doctest::Approx(46.6667).epsilon(1e-4));

    const auto single_40 = stats::proportion_estimate(6, 15);
    const auto multi_53 = stats::proportion_estimate(8, 15);
    CHECK(stats::multiagent_improvement(single_40, multi_53) ==
          doctest::Approx(13.3333).epsilon(1e-4));

    CHECK(stats::multiagent_improvement(multi_80, multi_80) == 0.0);
}
