#ifndef CROSSWALK_SCENARIO_HPP
#define CROSSWALK_SCENARIO_HPP

#include <array>
#include <string>
#include <vector>

#include "crosswalk/survey.hpp"

namespace crosswalk {

// Step table mapping proximity to the probability that the vehicle halts.
// Entries are (max_distance, probability) breakpoints sorted by distance;
// beyond the last breakpoint `far` applies. Probabilities must be
// non-increasing in distance: the closer the pedestrian, the more likely
// the vehicle is to stop.
struct StopProfile {
    std::vector<std::pair<int, double>> breakpoints;
    double far = 0.1;

    double probability(int distance) const;
    void validate() const;
};

// Per-group scores for the eight post-survey agreement questions, rated
// out of max_score. Groups are the four scenario cohorts in order.
struct SurveyTable {
    static constexpr int kQuestions = 8;
    std::array<std::array<double, 4>, kQuestions> scores;
    double max_score = 30.0;

    // Row of "I trust the communication of the car", the question whose
    // scores seed the scenario trust levels.
    static constexpr int kTrustRow = 3;
};

// Built-in post-survey results.
SurveyTable default_survey_table();

// One encounter configuration: intent communication on/off, pedestrian
// prior knowledge on/off, and the derived interaction parameters.
struct Scenario {
    int id = 0;
    std::string name;
    bool ics_enabled = false;
    bool prior_knowledge = false;
    int distance_threshold = 1;
    double trust_level = 0.0;
    StopProfile stop_profile;
    // Calibration constant added to each individual reward inside the
    // interaction reward; kept smaller in magnitude than the step cost so
    // realized in-window rewards stay negative and erode trust.
    double interaction_reward_base = 0.0;

    void validate() const;
};

// The four canonical scenarios, trust levels derived from the embedded
// survey table. Order: 1 = ICS+prior, 2 = ICS only, 3 = prior only,
// 4 = neither.
std::array<Scenario, 4> canonical_scenarios();
std::array<Scenario, 4> canonical_scenarios(const SurveyTable& table);

} // namespace crosswalk

#endif
