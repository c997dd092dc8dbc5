#include "hopbench/scalefit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "hopbench/rng.hpp"

namespace hopbench::scalefit {

namespace {

constexpr int kMaxIterations = 400;
constexpr double kLambdaInit = 1e-3;
constexpr double kMinSigma2 = 1e-280;

const char* kind_names[] = {"power_law", "sigmoid"};

struct Model {
    ModelKind kind;
    int n_params() const { return kind == ModelKind::power_law ? 3 : 4; }

    double eval(std::span<const double> p, double x) const {
        if (kind == ModelKind::power_law)
            return p[0] * std::pow(x, -p[1]) + p[2];
        const double u = std::exp(-p[1] * (std::log(x) - p[2]));
        return p[0] / (1.0 + u) + p[3];
    }

    void jacobian(std::span<const double> p, double x, double* row) const {
        if (kind == ModelKind::power_law) {
            const double xa = std::pow(x, -p[1]);
            row[0] = xa;
            row[1] = -p[0] * std::log(x) * xa;
            row[2] = 1.0;
            return;
        }
        const double z = std::log(x) - p[2];
        const double u = std::exp(-p[1] * z);
        const double denom = (1.0 + u) * (1.0 + u);
        row[0] = 1.0 / (1.0 + u);
        row[1] = p[0] * z * u / denom;
        row[2] = -p[0] * p[1] * u / denom;
        row[3] = 1.0;
    }
};

double rss_of(const Model& m, std::span<const double> p,
              std::span<const ScalingPoint> pts) {
    double rss = 0;
    for (const auto& pt : pts) {
        const double r = pt.accuracy - m.eval(p, pt.params_b);
        rss += r * r;
    }
    return rss;
}

// Gaussian elimination with partial pivoting; systems here are at most 4x4.
// Returns false when the matrix is numerically singular.
bool solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t cc = col + 1; cc < n; ++cc) b[col] -= a[col][cc] * b[cc];
        b[col] /= a[col][col];
    }
    return true;
}

struct LmOutcome {
    std::vector<double> params;
    double rss = 0;
    bool converged = false;
};

LmOutcome levenberg_marquardt(const Model& m, std::vector<double> p,
                              std::span<const ScalingPoint> pts) {
    const int np = m.n_params();
    double lambda = kLambdaInit;
    double rss = rss_of(m, p, pts);

    for (int it = 0; it < kMaxIterations; ++it) {
        // Build JtJ and Jtr at the current point.
        std::vector<std::vector<double>> jtj(np, std::vector<double>(np, 0.0));
        std::vector<double> jtr(np, 0.0);
        std::vector<double> row(np);
        for (const auto& pt : pts) {
            m.jacobian(p, pt.params_b, row.data());
            const double r = pt.accuracy - m.eval(p, pt.params_b);
            for (int i = 0; i < np; ++i) {
                jtr[i] += row[i] * r;
                for (int j = 0; j < np; ++j) jtj[i][j] += row[i] * row[j];
            }
        }

        bool stepped = false;
        for (int damp = 0; damp < 12 && !stepped; ++damp) {
            auto a = jtj;
            auto b = jtr;
            for (int i = 0; i < np; ++i)
                a[i][i] += lambda * (jtj[i][i] != 0.0 ? jtj[i][i] : 1.0);
            if (!solve_linear(a, b)) {
                lambda *= 10;
                continue;
            }
            std::vector<double> trial = p;
            for (int i = 0; i < np; ++i) trial[i] += b[i];
            const double trial_rss = rss_of(m, trial, pts);
            if (std::isfinite(trial_rss) && trial_rss <= rss) {
                double step = 0;
                for (int i = 0; i < np; ++i)
                    step = std::max(step, std::abs(b[i]) / (std::abs(p[i]) + 1e-12));
                const bool tiny_step = step < 1e-13;
                const bool tiny_gain = rss - trial_rss <= 1e-15 * (rss + 1e-30);
                p = std::move(trial);
                rss = trial_rss;
                lambda = std::max(lambda / 3.0, 1e-14);
                stepped = true;
                if (tiny_step || tiny_gain)
                    return {std::move(p), rss, true};
            } else {
                lambda *= 10;
            }
        }
        if (!stepped) return {std::move(p), rss, rss < 1e-18};
    }
    return {std::move(p), rss, false};
}

// Given the nonlinear shape column u_i, solve the 2x2 least squares for the
// linear pair (scale, offset) in y ~ scale*u + offset. Used to seed starts.
bool linear_pair(std::span<const double> u, std::span<const ScalingPoint> pts,
                 double& scale, double& offset) {
    double suu = 0, su = 0, suy = 0, sy = 0;
    const double n = static_cast<double>(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        suu += u[i] * u[i];
        su += u[i];
        suy += u[i] * pts[i].accuracy;
        sy += pts[i].accuracy;
    }
    const double det = suu * n - su * su;
    if (std::abs(det) < 1e-12 * (std::abs(suu * n) + 1.0)) return false;
    scale = (suy * n - su * sy) / det;
    offset = (suu * sy - su * suy) / det;
    return true;
}

std::uint64_t hash_points(std::span<const ScalingPoint> pts) {
    std::vector<std::pair<double, double>> v;
    for (const auto& p : pts) v.emplace_back(p.params_b, p.accuracy);
    std::sort(v.begin(), v.end());
    std::uint64_t h = 0x9ae16a3b2f90404full;
    for (const auto& [x, y] : v) {
        h = mix(h, std::bit_cast<std::uint64_t>(x));
        h = mix(h, std::bit_cast<std::uint64_t>(y));
    }
    return h;
}

std::vector<ScalingPoint> sorted_points(std::span<const ScalingPoint> pts) {
    std::vector<ScalingPoint> v(pts.begin(), pts.end());
    std::sort(v.begin(), v.end(), [](const ScalingPoint& a, const ScalingPoint& b) {
        if (a.params_b != b.params_b) return a.params_b < b.params_b;
        return a.accuracy < b.accuracy;
    });
    return v;
}

void finish_fit(FitResult& f, std::span<const ScalingPoint> pts) {
    const auto n = static_cast<double>(pts.size());
    const int k = f.kind == ModelKind::power_law ? 3 : 4;
    const double sigma2 = std::max(f.rss / n, kMinSigma2);
    f.log_likelihood = -0.5 * n * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0);
    f.bic = k * std::log(n) - 2.0 * f.log_likelihood;
    f.n_points = static_cast<int>(pts.size());
    f.points_hash = hash_points(pts);
}

FitResult run_fit(ModelKind kind, std::span<const ScalingPoint> raw,
                  const std::vector<double>* single_start) {
    const std::size_t min_points = kind == ModelKind::power_law ? 4 : 5;
    if (raw.size() < min_points)
        throw AnalysisError(std::string(to_string(kind)) + " fit needs at least " +
                            std::to_string(min_points) + " points");
    for (const auto& p : raw)
        if (!(p.params_b > 0)) throw AnalysisError("parameter counts must be positive");

    const auto pts_v = sorted_points(raw);
    std::span<const ScalingPoint> pts(pts_v);
    const Model model{kind};

    std::vector<std::vector<double>> starts;
    if (single_start) {
        starts.push_back(*single_start);
    } else if (kind == ModelKind::power_law) {
        for (double alpha : {-2.0, -1.0, -0.5, -0.2, 0.05, 0.2, 0.5, 1.0, 2.0, 3.0}) {
            std::vector<double> u(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i)
                u[i] = std::pow(pts[i].params_b, -alpha);
            double a = 0, b = 0;
            if (!linear_pair(u, pts, a, b)) continue;
            starts.push_back({a, alpha, b});
        }
    } else {
        std::vector<double> lx(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) lx[i] = std::log(pts[i].params_b);
        const double lo = lx.front(), hi = lx.back();
        for (double kk : {0.1, 1.0}) {
            for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const double n0 = lo + q * (hi - lo);
                std::vector<double> u(pts.size());
                for (std::size_t i = 0; i < pts.size(); ++i)
                    u[i] = 1.0 / (1.0 + std::exp(-kk * (lx[i] - n0)));
                double L = 0, c = 0;
                if (!linear_pair(u, pts, L, c)) continue;
                starts.push_back({L, kk, n0, c});
            }
        }
    }
    if (starts.empty()) starts.push_back(std::vector<double>(model.n_params(), 1.0));

    LmOutcome best;
    best.rss = std::numeric_limits<double>::infinity();
    for (const auto& s : starts) {
        LmOutcome out = levenberg_marquardt(model, s, pts);
        if ((out.converged && !best.converged) ||
            (out.converged == best.converged && out.rss < best.rss))
            best = std::move(out);
    }

    FitResult f;
    f.kind = kind;
    f.params = best.params;
    f.rss = best.rss;
    f.converged = best.converged;

    if (kind == ModelKind::sigmoid && f.params[1] < 0) {
        // (L,k,N0,c) and (-L,-k,N0,c+L) describe the same curve; keep k > 0.
        f.params[3] += f.params[0];
        f.params[0] = -f.params[0];
        f.params[1] = -f.params[1];
    }
    if (kind == ModelKind::power_law) {
        // alpha ~ 0 leaves only a+b determined; a ~ 0 leaves alpha free.
        const double scale = std::abs(f.params[0]) + std::abs(f.params[2]) + 1e-12;
        if (std::abs(f.params[1]) < 1e-7 || std::abs(f.params[0]) < 1e-7 * scale)
            f.identifiable = false;
    }

    finish_fit(f, pts);
    return f;
}

}  // namespace

const char* to_string(ModelKind k) { return kind_names[static_cast<int>(k)]; }

std::vector<ScalingPoint> select_axis(std::span<const DataRow> rows, ParamAxis axis,
                                      bool include_literature) {
    std::vector<ScalingPoint> pts;
    for (const auto& r : rows) {
        if (r.source == PointSource::literature && !include_literature) continue;
        ScalingPoint p;
        p.params_b = axis == ParamAxis::total ? r.total_b : r.active_b;
        p.accuracy = r.accuracy;
        p.source = r.source;
        pts.push_back(p);
    }
    return pts;
}

FitResult fit(ModelKind kind, std::span<const ScalingPoint> points) {
    return run_fit(kind, points, nullptr);
}

FitResult fit_power_law(std::span<const ScalingPoint> points) {
    return fit(ModelKind::power_law, points);
}

FitResult fit_sigmoid(std::span<const ScalingPoint> points) {
    return fit(ModelKind::sigmoid, points);
}

double predict(ModelKind kind, std::span<const double> params, double n_billions) {
    return Model{kind}.eval(params, n_billions);
}

BicComparison compare_bic(const FitResult& a, const FitResult& b) {
    if (a.points_hash != b.points_hash || a.n_points != b.n_points)
        throw AnalysisError("compare_bic: fits come from different point sets");
    BicComparison c;
    c.better = a.bic <= b.bic ? a.kind : b.kind;
    c.delta_bic = std::abs(a.bic - b.bic);
    return c;
}

namespace {

BootstrapFitResult bootstrap_impl(std::span<const ScalingPoint> points, ModelKind kind,
                                  int resamples, std::uint64_t seed, bool parallel) {
    if (resamples < 100) throw AnalysisError("bootstrap_fit_ci: need >= 100 resamples");
    const FitResult base = fit(kind, points);
    if (!base.converged)
        throw AnalysisError("bootstrap_fit_ci: base fit did not converge");

    const auto pts = sorted_points(points);
    const Model model{kind};
    const int np = model.n_params();

    std::vector<double> fitted(pts.size());
    std::vector<double> residuals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        fitted[i] = model.eval(base.params, pts[i].params_b);
        residuals[i] = pts[i].accuracy - fitted[i];
    }

    std::vector<std::vector<double>> draws(static_cast<std::size_t>(resamples));
    std::vector<char> ok(static_cast<std::size_t>(resamples), 0);

    auto one = [&](int r) {
        RngStream rng(mix(seed, static_cast<std::uint64_t>(r) ^ 0x66697462ull));
        std::vector<ScalingPoint> sample = pts;
        for (std::size_t i = 0; i < sample.size(); ++i)
            sample[i].accuracy = fitted[i] + residuals[rng.bounded(residuals.size())];
        try {
            FitResult f = run_fit(kind, sample, &base.params);
            if (f.converged) {
                draws[static_cast<std::size_t>(r)] = f.params;
                ok[static_cast<std::size_t>(r)] = 1;
            }
        } catch (const AnalysisError&) {
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int r = 0; r < resamples; ++r) one(r);
    } else {
        for (int r = 0; r < resamples; ++r) one(r);
    }

    BootstrapFitResult out;
    out.resamples = resamples;
    for (int r = 0; r < resamples; ++r)
        if (!ok[static_cast<std::size_t>(r)]) ++out.failures;
    out.flagged = out.failures * 5 > resamples;  // > 20%

    for (int p = 0; p < np; ++p) {
        std::vector<double> values;
        values.reserve(static_cast<std::size_t>(resamples));
        for (int r = 0; r < resamples; ++r)
            if (ok[static_cast<std::size_t>(r)])
                values.push_back(draws[static_cast<std::size_t>(r)][static_cast<std::size_t>(p)]);
        std::sort(values.begin(), values.end());
        ParamInterval ci;
        if (!values.empty()) {
            auto quant = [&](double q) {
                const double pos = q * static_cast<double>(values.size() - 1);
                const auto lo = static_cast<std::size_t>(pos);
                const auto hi = std::min(lo + 1, values.size() - 1);
                const double frac = pos - static_cast<double>(lo);
                return values[lo] * (1 - frac) + values[hi] * frac;
            };
            ci.lo = quant(0.025);
            ci.hi = quant(0.975);
        }
        out.intervals.push_back(ci);
    }
    return out;
}

}  // namespace

BootstrapFitResult bootstrap_fit_ci(std::span<const ScalingPoint> points, ModelKind kind,
                                    int resamples, std::uint64_t seed) {
    return bootstrap_impl(points, kind, resamples, seed, true);
}

BootstrapFitResult bootstrap_fit_ci_serial(std::span<const ScalingPoint> points,
                                           ModelKind kind, int resamples,
                                           std::uint64_t seed) {
    return bootstrap_impl(points, kind, resamples, seed, false);
}

}  // namespace hopbench::scalefit
