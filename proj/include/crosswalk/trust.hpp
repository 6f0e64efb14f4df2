#ifndef CROSSWALK_TRUST_HPP
#define CROSSWALK_TRUST_HPP

#include <vector>

#include "crosswalk/actions.hpp"
#include "crosswalk/geometry.hpp"
#include "crosswalk/scenario.hpp"

namespace crosswalk {

// Geometric discount factors: gamma weights transition rewards across
// iterations, phi weights interaction rewards inside the trust sum.
struct DiscountParams {
    double gamma = 0.9;
    double phi = 0.95;
};

// Individual reward shaping shared by both agents.
struct RewardParams {
    double goal_reward = 1.0;
    double step_cost = -0.05;
};

// Joint positions plus both goals. ped_in_car means the pedestrian
// boarded the vehicle, which forces co-location.
struct JointState {
    Cell car_pos;
    Cell ped_pos;
    Cell car_goal;
    Cell ped_goal;
    bool ped_in_car = false;

    void validate(const GridWorld& grid) const;
};

// Transition probabilities of the two realized actions, used to weight
// the interaction reward.
struct TransitionProbs {
    double car = 1.0;
    double pedestrian = 1.0;
};

// Per-iteration trust ledger. values[j] is the phi-discounted interaction
// reward of iteration j; cumulative is their sum.
struct TrustTrace {
    std::vector<double> values;
    double cumulative = 0.0;
};

// Interaction weight theta = P(s'|s,a) * O * d. The observation factor O
// is 1 under joint full observability; it stays a parameter so the
// degenerate cases remain testable.
inline double theta(double transition_prob, double observation, int distance) {
    return transition_prob * observation * static_cast<double>(distance);
}

// Reward one agent earns for one action: goal_reward when the move lands
// on the goal cell, zero for holding position at the goal, step_cost
// otherwise. DontNoticeCar resolves to the pedestrian's goal-seeking move.
double individual_reward(const GridWorld& grid, const Cell& pos, CarAction a,
                         const Cell& goal, const RewardParams& params);
double individual_reward(const GridWorld& grid, const Cell& pos, PedestrianAction a,
                         const Cell& goal, const RewardParams& params);

// Gamma-discounted sum of both agents' individual rewards along two equal
// length trajectories. Throws std::invalid_argument on length mismatch.
double transition_reward(const GridWorld& grid,
                         const std::vector<std::pair<Cell, CarAction>>& car_steps,
                         const std::vector<std::pair<Cell, PedestrianAction>>& ped_steps,
                         const Cell& car_goal, const Cell& ped_goal,
                         double gamma, const RewardParams& params);

// Core of the interaction reward: theta-weighted, base-shifted individual
// rewards of the realized pair. Zero at distance zero by construction.
double interaction_reward_kernel(double p_car, double p_ped, double observation,
                                 int distance, double r_car, double r_ped,
                                 double base);

// Interaction reward of a realized joint action. Returns 0 when the
// agents are further apart than the scenario threshold or co-located.
double interaction_reward(const JointState& state, CarAction a1, PedestrianAction a2,
                          const Scenario& scenario, const TransitionProbs& probs,
                          const GridWorld& grid, const RewardParams& params);

// Folds per-iteration interaction rewards into a trust trace with
// geometric phi discounting.
TrustTrace accumulate_trust(const std::vector<double>& rewards, double phi);

} // namespace crosswalk

#endif
