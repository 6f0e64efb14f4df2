#include "crosswalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace crosswalk {

RegressionFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("fit_line: mismatched input lengths");
    int n = static_cast<int>(xs.size());
    if (n < 3)
        throw std::invalid_argument("fit_line: need at least three points");

    double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;

    double sxx = 0.0, sxy = 0.0, sum_x2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double dx = xs[static_cast<std::size_t>(i)] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ys[static_cast<std::size_t>(i)] - mean_y);
        sum_x2 += xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
    }
    if (sxx == 0.0) throw std::domain_error("singular design");

    RegressionFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = ys[static_cast<std::size_t>(i)] -
                   (fit.intercept + fit.slope * xs[static_cast<std::size_t>(i)]);
        rss += r * r;
    }
    fit.residual_mse = rss / (n - 2);
    fit.var_slope = fit.residual_mse / sxx;
    fit.var_intercept = fit.residual_mse * sum_x2 / (n * sxx);
    return fit;
}

ConfidenceBand confidence_bounds(const RegressionFit& fit, double t, bool quantile_mode) {
    if (fit.n < 3)
        throw std::invalid_argument("confidence_bounds: fit has no degrees of freedom");
    double multiplier = quantile_mode ? student_t_critical(t, fit.n - 2) : t;
    double half_i = multiplier * std::sqrt(fit.var_intercept);
    double half_s = multiplier * std::sqrt(fit.var_slope);

    ConfidenceBand band;
    band.level = t;
    band.intercept_lower = fit.intercept - half_i;
    band.intercept_upper = fit.intercept + half_i;
    band.slope_lower = fit.slope - half_s;
    band.slope_upper = fit.slope + half_s;
    return band;
}

namespace {

// Regularized incomplete beta I_x(a, b) via the standard continued
// fraction (Lentz), stable for x < (a+1)/(a+b+2); the symmetry
// I_x(a,b) = 1 - I_{1-x}(b,a) covers the rest.
double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    if (x > (a + 1.0) / (a + b + 2.0))
        return 1.0 - incomplete_beta(b, a, 1.0 - x);

    double log_front = a * std::log(x) + b * std::log(1.0 - x) +
                       std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    double front = std::exp(log_front) / a;

    const double tiny = 1e-300;
    double f = 1.0, c = 1.0, d = 0.0;
    for (int m = 0; m <= 300; ++m) {
        double numerator;
        if (m == 0) {
            numerator = 1.0;
        } else if (m % 2 == 0) {
            double k = m / 2.0;
            numerator = k * (b - k) * x / ((a + 2.0 * k - 1.0) * (a + 2.0 * k));
        } else {
            double k = (m - 1.0) / 2.0;
            numerator = -(a + k) * (a + b + k) * x / ((a + 2.0 * k) * (a + 2.0 * k + 1.0));
        }
        d = 1.0 + numerator * d;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = 1.0 + numerator / c;
        if (std::abs(c) < tiny) c = tiny;
        double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return front * (f - 1.0);
}

// P(T_df <= t) for Student's t.
double student_t_cdf(double t, int df) {
    double x = df / (df + t * t);
    double tail = 0.5 * incomplete_beta(df / 2.0, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

} // namespace

double student_t_critical(double level, int df) {
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("student_t_critical: level must lie in (0, 1)");
    if (df < 1)
        throw std::invalid_argument("student_t_critical: degrees of freedom must be >= 1");

    double target = 0.5 * (1.0 + level);  // two-sided -> upper quantile
    double lo = 0.0, hi = 1.0;
    while (student_t_cdf(hi, df) < target) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

ScenarioReport scenario_report(const std::vector<BatchResult>& batches,
                               const std::vector<double>& levels,
                               bool quantile_mode) {
    if (batches.size() != 4)
        throw std::invalid_argument("scenario_report: expects exactly four batches");

    // Order by scenario id and require the canonical set 1..4.
    std::array<const BatchResult*, 4> ordered{};
    for (const auto& b : batches) {
        if (b.scenario_id < 1 || b.scenario_id > 4 ||
            ordered[static_cast<std::size_t>(b.scenario_id - 1)] != nullptr)
            throw std::invalid_argument("scenario_report: needs scenarios 1 through 4");
        ordered[static_cast<std::size_t>(b.scenario_id - 1)] = &b;
    }

    ScenarioReport report;
    for (std::size_t i = 0; i < 4; ++i) {
        const BatchResult& b = *ordered[i];
        if (b.mean_trace.empty())
            throw std::invalid_argument("scenario_report: empty mean trace");

        std::vector<double> xs(b.mean_trace.size());
        std::iota(xs.begin(), xs.end(), 1.0);

        ScenarioSummary& s = report.scenarios[i];
        s.scenario_id = b.scenario_id;
        s.fit = fit_line(xs, b.mean_trace);
        for (double level : levels)
            s.bands.push_back(confidence_bounds(s.fit, level, quantile_mode));
        s.final_trust = b.mean_trace.back();
        s.mean_steps = b.mean_steps;
        s.variance_score =
            std::accumulate(b.trace_variance.begin(), b.trace_variance.end(), 0.0) /
            static_cast<double>(b.trace_variance.size());
    }

    // Rank 1 goes to the highest variance score.
    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.scenarios[a].variance_score > report.scenarios[b].variance_score;
    });
    for (std::size_t rank = 0; rank < 4; ++rank)
        report.scenarios[order[rank]].variance_rank = static_cast<int>(rank + 1);

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            report.final_trust_deltas.push_back(
                std::abs(report.scenarios[i].final_trust - report.scenarios[j].final_trust));

    double s1 = report.scenarios[0].final_trust;
    double s4 = report.scenarios[3].final_trust;
    report.s1_s4_relative_gap = s1 != 0.0 ? std::abs(s1 - s4) / std::abs(s1) : 0.0;
    return report;
}

} // namespace crosswalk
