#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hopbench/rng.hpp"
#include "hopbench/scalefit.hpp"

using namespace hopbench;
using scalefit::ModelKind;
using scalefit::ScalingPoint;

namespace {

std::vector<ScalingPoint> power_points(double a, double alpha, double b,
                                       const std::vector<double>& xs) {
    std::vector<ScalingPoint> pts;
    for (double x : xs) pts.push_back({x, a * std::pow(x, -alpha) + b});
    return pts;
}

std::vector<ScalingPoint> sigmoid_points(double L, double k, double n0, double c,
                                         const std::vector<double>& log_xs) {
    std::vector<ScalingPoint> pts;
    for (double lx : log_xs) {
        const double x = std::exp(lx);
        pts.push_back({x, L / (1.0 + std::exp(-k * (lx - n0))) + c});
    }
    return pts;
}

const std::vector<double> kWideLogGrid = {0, 6, 12, 18, 24.2, 30, 36, 42, 48};

}  // namespace

TEST_CASE("noiseless power-law parameters are recovered to 1e-6 relative") {
    const auto pts = power_points(42.3, 0.31, 95.2, {8, 13, 30, 70});
    const auto f = scalefit::fit_power_law(pts);
    REQUIRE(f.converged);
    CHECK(std::abs(f.params[0] - 42.3) / 42.3 < 1e-6);
    CHECK(std::abs(f.params[1] - 0.31) / 0.31 < 1e-6);
    CHECK(std::abs(f.params[2] - 95.2) / 95.2 < 1e-6);
    CHECK(f.rss < 1e-12);
}

TEST_CASE("noiseless sigmoid parameters are recovered to 1e-6 relative") {
    const auto pts = sigmoid_points(82.3, 0.18, 24.2, 3.1, kWideLogGrid);
    const auto f = scalefit::fit_sigmoid(pts);
    REQUIRE(f.converged);
    CHECK(std::abs(f.params[0] - 82.3) / 82.3 < 1e-6);
    CHECK(std::abs(f.params[1] - 0.18) / 0.18 < 1e-6);
    CHECK(std::abs(f.params[2] - 24.2) / 24.2 < 1e-6);
    CHECK(std::abs(f.params[3] - 3.1) / 3.1 < 1e-6);
    CHECK(f.params[0] > 0);
    CHECK(f.params[1] > 0);
}

TEST_CASE("sigmoid midpoint: prediction at ln N == N0 equals L/2 + c") {
    const std::vector<double> params = {82.3, 0.18, 24.2, 3.1};
    const double mid = scalefit::predict(ModelKind::sigmoid, params, std::exp(24.2));
    CHECK(mid == doctest::Approx(82.3 / 2 + 3.1).epsilon(1e-12));
}

TEST_CASE("constant data flags the power law as unidentifiable") {
    std::vector<ScalingPoint> pts;
    for (double x : {2.0, 8.0, 20.0, 50.0, 90.0}) pts.push_back({x, 55.0});
    const auto f = scalefit::fit_power_law(pts);
    CHECK(f.rss < 1e-10);
    CHECK(!f.identifiable);
    CHECK(f.params[0] + f.params[2] == doctest::Approx(55.0).epsilon(1e-6));
}

TEST_CASE("underdetermined inputs are errors") {
    const auto three = power_points(10, 0.5, 2, {1, 10, 100});
    CHECK_THROWS_AS(scalefit::fit_power_law(three), AnalysisError);
    const auto four = power_points(10, 0.5, 2, {1, 10, 100, 1000});
    CHECK_THROWS_AS(scalefit::fit_sigmoid(four), AnalysisError);
    std::vector<ScalingPoint> bad = {{-1, 5}, {2, 5}, {3, 5}, {4, 5}};
    CHECK_THROWS_AS(scalefit::fit_power_law(bad), AnalysisError);
}

TEST_CASE("fits are invariant to point order") {
    auto pts = sigmoid_points(60, 0.5, 3.0, 5, {0, 1, 2, 3, 4, 5, 6});
    const auto f1 = scalefit::fit_sigmoid(pts);
    RngStream rng(9);
    rng.shuffle(pts);
    const auto f2 = scalefit::fit_sigmoid(pts);
    REQUIRE(f1.params.size() == f2.params.size());
    for (std::size_t i = 0; i < f1.params.size(); ++i)
        CHECK(f1.params[i] == f2.params[i]);
    CHECK(f1.points_hash == f2.points_hash);
}

TEST_CASE("affine rescaling of the accuracy axis maps the linear parameters") {
    const auto pts = power_points(20, 0.4, 50, {2, 5, 11, 23, 47});
    const double s = 2.5, t = -7.0;
    std::vector<ScalingPoint> scaled = pts;
    for (auto& p : scaled) p.accuracy = s * p.accuracy + t;
    const auto f = scalefit::fit_power_law(pts);
    const auto g = scalefit::fit_power_law(scaled);
    REQUIRE(f.converged);
    REQUIRE(g.converged);
    CHECK(g.params[0] == doctest::Approx(s * f.params[0]).epsilon(1e-6));
    CHECK(g.params[1] == doctest::Approx(f.params[1]).epsilon(1e-6));
    CHECK(g.params[2] == doctest::Approx(s * f.params[2] + t).epsilon(1e-6));
}

TEST_CASE("BIC follows k*ln(n) - 2*lnL for hand-computed triples") {
    const auto pts = power_points(42.3, 0.31, 95.2, {8, 13, 30, 70, 120});
    const auto f = scalefit::fit_power_law(pts);
    const double n = 5, k = 3;
    const double sigma2 = std::max(f.rss / n, 1e-280);
    const double lnl = -0.5 * n * (std::log(2 * 3.14159265358979323846 * sigma2) + 1);
    CHECK(f.log_likelihood == doctest::Approx(lnl).epsilon(1e-9));
    CHECK(f.bic == doctest::Approx(k * std::log(n) - 2 * lnl).epsilon(1e-9));
}

TEST_CASE("compare_bic picks the lower and requires identical point sets") {
    const auto pts = sigmoid_points(70, 0.8, 3.2, 8, {0, 1, 2, 3, 4, 5, 6, 7});
    const auto sig = scalefit::fit_sigmoid(pts);
    const auto pow = scalefit::fit_power_law(pts);
    const auto cmp = scalefit::compare_bic(pow, sig);
    CHECK(cmp.better == ModelKind::sigmoid);
    CHECK(cmp.delta_bic == doctest::Approx(std::abs(pow.bic - sig.bic)));
    CHECK(scalefit::compare_bic(sig, sig).delta_bic == 0.0);

    auto other = pts;
    other[0].accuracy += 1.0;
    const auto sig2 = scalefit::fit_sigmoid(other);
    CHECK_THROWS_AS(scalefit::compare_bic(sig2, pow), AnalysisError);
}

TEST_CASE("model recovery under noise prefers the generating model") {
    // Smaller replicate count here; the acceptance suite runs the full set.
    int sigmoid_wins = 0;
    const int reps = 40;
    for (int rep = 0; rep < reps; ++rep) {
        auto pts = sigmoid_points(80, 0.9, 3.0, 5, {0, 0.8, 1.6, 2.4, 3.2, 4.0, 4.8, 5.6, 6.4});
        RngStream rng(mix(1234, static_cast<std::uint64_t>(rep)));
        double span = 0;
        for (const auto& p : pts) span = std::max(span, p.accuracy);
        for (auto& p : pts) {
            // Approximate standard normal from the average of uniforms.
            double g = 0;
            for (int i = 0; i < 12; ++i) g += rng.unit();
            p.accuracy += (g - 6.0) * 0.05 * span * 0.2;
        }
        const auto sig = scalefit::fit_sigmoid(pts);
        const auto pow = scalefit::fit_power_law(pts);
        if (scalefit::compare_bic(sig, pow).better == ModelKind::sigmoid) ++sigmoid_wins;
    }
    CHECK(sigmoid_wins >= reps * 9 / 10);
}

TEST_CASE("steep synthetic step localizes N0") {
    std::vector<ScalingPoint> pts;
    const double step_at = 3.0;
    for (double lx : {0.0, 0.8, 1.6, 2.4, 2.8, 3.2, 3.6, 4.4, 5.2, 6.0})
        pts.push_back({std::exp(lx), lx < step_at ? 2.0 : 82.0});
    const auto f = scalefit::fit_sigmoid(pts);
    CHECK(std::abs(f.params[2] - step_at) < 0.8);
}

TEST_CASE("bootstrap fit CIs: determinism, zero-noise degeneracy, serial parity") {
    const auto clean = sigmoid_points(70, 0.6, 3.0, 6, {0, 1, 2, 3, 4, 5, 6, 7});
    const auto bc = scalefit::bootstrap_fit_ci(clean, ModelKind::sigmoid, 200, 11);
    REQUIRE(bc.intervals.size() == 4);
    for (const auto& ci : bc.intervals) CHECK(ci.hi - ci.lo < 1e-6);
    CHECK(!bc.flagged);

    auto noisy = clean;
    RngStream rng(77);
    for (auto& p : noisy) p.accuracy += (rng.unit() - 0.5) * 4.0;
    const auto a = scalefit::bootstrap_fit_ci(noisy, ModelKind::sigmoid, 200, 5);
    const auto b = scalefit::bootstrap_fit_ci(noisy, ModelKind::sigmoid, 200, 5);
    const auto s = scalefit::bootstrap_fit_ci_serial(noisy, ModelKind::sigmoid, 200, 5);
    for (std::size_t i = 0; i < a.intervals.size(); ++i) {
        CHECK(a.intervals[i].lo == b.intervals[i].lo);
        CHECK(a.intervals[i].hi == b.intervals[i].hi);
        CHECK(a.intervals[i].lo == s.intervals[i].lo);
        CHECK(a.intervals[i].hi == s.intervals[i].hi);
    }
}

TEST_CASE("axis selection moves only the MoE abscissa") {
    const std::vector<scalefit::DataRow> rows = {
        {"dense-a", 8, 8, 30, scalefit::PointSource::experiment},
        {"moe-b", 47, 12, 55, scalefit::PointSource::experiment},
        {"lit-c", 70, 70, 80, scalefit::PointSource::literature},
    };
    const auto total = scalefit::select_axis(rows, scalefit::ParamAxis::total, false);
    const auto active = scalefit::select_axis(rows, scalefit::ParamAxis::active, false);
    REQUIRE(total.size() == 2);
    REQUIRE(active.size() == 2);
    CHECK(total[0].params_b == active[0].params_b);
    CHECK(total[1].params_b == 47);
    CHECK(active[1].params_b == 12);
    CHECK(total[0].accuracy == active[0].accuracy);
    CHECK(total[1].accuracy == active[1].accuracy);
    const auto with_lit = scalefit::select_axis(rows, scalefit::ParamAxis::total, true);
    CHECK(with_lit.size() == 3);
}
