#ifndef CROSSWALK_ANALYSIS_HPP
#define CROSSWALK_ANALYSIS_HPP

#include <array>
#include <vector>

#include "crosswalk/engine.hpp"

namespace crosswalk {

// Ordinary least squares fit of y = intercept + slope * x with the
// coefficient variances from diag((X^T X)^-1 * s^2), s^2 = RSS/(n-2).
struct RegressionFit {
    double intercept = 0.0;
    double slope = 0.0;
    double residual_mse = 0.0;   // s^2
    double var_intercept = 0.0;  // S_0
    double var_slope = 0.0;      // S_1
    int n = 0;
};

struct ConfidenceBand {
    double level = 0.0;       // the multiplier t (or its quantile mode input)
    double intercept_lower = 0.0, intercept_upper = 0.0;
    double slope_lower = 0.0, slope_upper = 0.0;
};

// Fits a line through at least three points. Throws std::invalid_argument
// on fewer points or mismatched lengths, std::domain_error("singular
// design") when all x are identical.
RegressionFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// Interval b +/- t * sqrt(S) per coefficient; t is used literally as the
// multiplier. With quantile_mode the multiplier becomes the two-sided
// Student-t quantile of confidence level t at n-2 degrees of freedom.
ConfidenceBand confidence_bounds(const RegressionFit& fit, double t,
                                 bool quantile_mode = false);

// Two-sided Student-t critical value: the quantile q with
// P(|T_df| <= q) = level.
double student_t_critical(double level, int df);

struct ScenarioSummary {
    int scenario_id = 0;
    RegressionFit fit;
    std::vector<ConfidenceBand> bands;
    double final_trust = 0.0;
    double mean_steps = 0.0;
    double variance_score = 0.0;  // mean per-iteration trace variance
    int variance_rank = 0;        // 1 = highest variance
};

struct ScenarioReport {
    std::array<ScenarioSummary, 4> scenarios;
    // Pairwise |final_trust(i) - final_trust(j)| for i<j in scenario order.
    std::vector<double> final_trust_deltas;
    // Relative S1-vs-S4 gap: |final(S1) - final(S4)| / |final(S1)|.
    double s1_s4_relative_gap = 0.0;
};

// Cross-scenario analysis over the four canonical batches. Requires all
// four scenarios present (throws std::invalid_argument otherwise). The
// regression runs on (iteration, mean trust) with iterations numbered
// from 1.
ScenarioReport scenario_report(const std::vector<BatchResult>& batches,
                               const std::vector<double>& levels,
                               bool quantile_mode = false);

} // namespace crosswalk

#endif
