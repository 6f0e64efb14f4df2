#ifndef CROSSWALK_SURVEY_HPP
#define CROSSWALK_SURVEY_HPP

#include <array>

namespace crosswalk {

// Probability distribution over the five surveyed pedestrian response
// categories. Cross covers all four walking directions; the expansion to
// concrete moves happens in the behavior layer.
struct ActionDistribution {
    double stop = 0.0;
    double wait = 0.0;
    double cross = 0.0;
    double dont_notice = 0.0;
    double get_in = 0.0;

    double total() const { return stop + wait + cross + dont_notice + get_in; }
};

// Raw pre-survey tallies for the five categories, in the same order.
struct SurveyCounts {
    double stop = 23;
    double wait = 22;
    double cross = 25;
    double dont_notice = 17;
    double get_in = 13;
};

// Result of trust reweighting. `clamped` flags the degenerate case where
// the boosted risky mass reached 1 and the careful categories were zeroed.
struct ReweightResult {
    ActionDistribution distribution;
    bool clamped = false;
};

// Normalizes survey tallies into a base action distribution.
// Throws std::invalid_argument on negative or all-zero counts.
ActionDistribution baseline_distribution(const SurveyCounts& counts);

// Trust level = achieved score / maximum score, both in sensible ranges.
// Throws std::invalid_argument otherwise.
double trust_level(double score, double max_score);

// Trust-informed reweighting: the risky responses (GetInCar, DontNotice)
// scale by (1 + trust); whatever mass remains is split equally among Wait,
// Stop and Cross. If the boosted risky mass meets or exceeds 1 it is
// proportionally clamped and the careful categories get zero.
ReweightResult reweight(const ActionDistribution& base, double trust);

} // namespace crosswalk

#endif
