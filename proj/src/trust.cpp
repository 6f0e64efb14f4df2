#include "crosswalk/trust.hpp"

#include <stdexcept>

namespace crosswalk {

void JointState::validate(const GridWorld& grid) const {
    if (!grid.contains(car_pos) || !grid.contains(ped_pos) ||
        !grid.contains(car_goal) || !grid.contains(ped_goal))
        throw std::invalid_argument("JointState: cell outside the grid");
    if (ped_in_car && !(car_pos == ped_pos))
        throw std::invalid_argument("JointState: ped_in_car requires co-location");
}

namespace {

double landing_reward(const Cell& from, const Cell& to, bool holds_at_goal,
                      const Cell& goal, const RewardParams& params) {
    if (holds_at_goal && from == goal) return 0.0;
    if (to == goal) return params.goal_reward;
    return params.step_cost;
}

} // namespace

double individual_reward(const GridWorld& grid, const Cell& pos, CarAction a,
                         const Cell& goal, const RewardParams& params) {
    Cell to = apply_move(grid, pos, a);
    return landing_reward(pos, to, a == CarAction::Stop, goal, params);
}

double individual_reward(const GridWorld& grid, const Cell& pos, PedestrianAction a,
                         const Cell& goal, const RewardParams& params) {
    // DontNoticeCar is a goal-seeking walk; GetInCar boards at the cost of
    // a step. Wait and Stop hold position.
    Cell to;
    if (a == PedestrianAction::DontNoticeCar)
        to = apply_move(grid, pos, pedestrian_goal_move(pos, goal));
    else
        to = apply_move(grid, pos, a);
    bool holds = a == PedestrianAction::Wait || a == PedestrianAction::Stop;
    return landing_reward(pos, to, holds, goal, params);
}

double transition_reward(const GridWorld& grid,
                         const std::vector<std::pair<Cell, CarAction>>& car_steps,
                         const std::vector<std::pair<Cell, PedestrianAction>>& ped_steps,
                         const Cell& car_goal, const Cell& ped_goal,
                         double gamma, const RewardParams& params) {
    if (car_steps.size() != ped_steps.size())
        throw std::invalid_argument("transition_reward: trajectory lengths differ");

    double total = 0.0;
    double weight = 1.0;
    for (std::size_t i = 0; i < car_steps.size(); ++i) {
        total += weight * individual_reward(grid, car_steps[i].first, car_steps[i].second,
                                            car_goal, params);
        total += weight * individual_reward(grid, ped_steps[i].first, ped_steps[i].second,
                                            ped_goal, params);
        weight *= gamma;
    }
    return total;
}

double interaction_reward_kernel(double p_car, double p_ped, double observation,
                                 int distance, double r_car, double r_ped,
                                 double base) {
    return theta(p_car, observation, distance) * (r_car + base) +
           theta(p_ped, observation, distance) * (r_ped + base);
}

double interaction_reward(const JointState& state, CarAction a1, PedestrianAction a2,
                          const Scenario& scenario, const TransitionProbs& probs,
                          const GridWorld& grid, const RewardParams& params) {
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);
    if (d > scenario.distance_threshold) return 0.0;
    double r1 = individual_reward(grid, state.car_pos, a1, state.car_goal, params);
    double r2 = individual_reward(grid, state.ped_pos, a2, state.ped_goal, params);
    return interaction_reward_kernel(probs.car, probs.pedestrian, 1.0, d, r1, r2,
                                     scenario.interaction_reward_base);
}

TrustTrace accumulate_trust(const std::vector<double>& rewards, double phi) {
    TrustTrace trace;
    trace.values.reserve(rewards.size());
    double weight = 1.0;
    for (double r : rewards) {
        double v = weight * r;
        trace.values.push_back(v);
        trace.cumulative += v;
        weight *= phi;
    }
    return trace;
}

} // namespace crosswalk
