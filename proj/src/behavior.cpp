#include "crosswalk/behavior.hpp"

#include "crosswalk/rng.hpp"

namespace crosswalk {

PedestrianModel PedestrianModel::for_scenario(const Scenario& scenario,
                                              const ActionDistribution& baseline) {
    PedestrianModel m;
    // Intent communication is what lets the surveyed trust shift behavior;
    // without it the pedestrian acts on the raw baseline.
    m.effective = scenario.ics_enabled
                      ? reweight(baseline, scenario.trust_level).distribution
                      : baseline;
    return m;
}

std::array<double, kPedestrianActionCount>
pedestrian_action_probabilities(const ActionDistribution& dist, int distance) {
    std::array<double, kPedestrianActionCount> p{};
    double quarter = dist.cross / 4.0;
    p[static_cast<int>(PedestrianAction::Forward)] = quarter;
    p[static_cast<int>(PedestrianAction::Backwards)] = quarter;
    p[static_cast<int>(PedestrianAction::Left)] = quarter;
    p[static_cast<int>(PedestrianAction::Right)] = quarter;
    p[static_cast<int>(PedestrianAction::Wait)] = dist.wait;
    p[static_cast<int>(PedestrianAction::GetInCar)] = distance <= 1 ? dist.get_in : 0.0;
    p[static_cast<int>(PedestrianAction::DontNoticeCar)] = dist.dont_notice;
    p[static_cast<int>(PedestrianAction::Stop)] = dist.stop;

    double total = 0.0;
    for (double v : p) total += v;
    if (total > 0.0)
        for (double& v : p) v /= total;
    return p;
}

double car_action_probability(const JointState& state, CarAction a,
                              const Scenario& scenario, const GridWorld& grid) {
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);
    double p_stop = scenario.stop_profile.probability(d);
    if (a == CarAction::Stop) return p_stop;
    if (a == car_goal_move(state.car_pos, state.car_goal)) return 1.0 - p_stop;
    return 0.0;
}

CarAction car_action(const JointState& state, const Scenario& scenario,
                     const GridWorld& grid, std::mt19937_64& rng) {
    if (state.car_pos == state.car_goal) return CarAction::Stop;
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);
    if (d > scenario.distance_threshold)
        return car_goal_move(state.car_pos, state.car_goal);
    if (uniform01(rng) < scenario.stop_profile.probability(d)) return CarAction::Stop;
    return car_goal_move(state.car_pos, state.car_goal);
}

namespace {

PedestrianAction sample_action(const std::array<double, kPedestrianActionCount>& probs,
                               std::mt19937_64& rng) {
    double u = uniform01(rng);
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return static_cast<PedestrianAction>(i);
    }
    return PedestrianAction::Stop;
}

} // namespace

PedestrianAction pedestrian_action(const JointState& state, const Scenario& scenario,
                                   const PedestrianModel& model, const GridWorld& grid,
                                   std::mt19937_64& rng) {
    if (state.ped_pos == state.ped_goal) return PedestrianAction::Wait;
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);
    if (d > scenario.distance_threshold)
        return pedestrian_goal_move(state.ped_pos, state.ped_goal);
    return sample_action(pedestrian_action_probabilities(model.effective, d), rng);
}

CarAction interaction_car_choice(const JointState& state, const Scenario& scenario,
                                 const PedestrianModel& model, const GridWorld& grid,
                                 const RewardParams& params) {
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);
    if (d == 0) return CarAction::Stop;  // every pairing scores zero here

    auto ped_probs = pedestrian_action_probabilities(model.effective, d);

    double best = 0.0;
    CarAction best_car = CarAction::Forward;
    bool first = true;
    for (std::size_t i = 0; i < kCarActionCount; ++i) {
        auto a1 = static_cast<CarAction>(i);
        double p1 = car_action_probability(state, a1, scenario, grid);
        double r1 = individual_reward(grid, state.car_pos, a1, state.car_goal, params);
        for (std::size_t j = 0; j < kPedestrianActionCount; ++j) {
            auto a2 = static_cast<PedestrianAction>(j);
            double r2 = individual_reward(grid, state.ped_pos, a2, state.ped_goal, params);
            double value = interaction_reward_kernel(p1, ped_probs[j], 1.0, d, r1, r2,
                                                     scenario.interaction_reward_base);
            if (first || value > best) {
                best = value;
                best_car = a1;
                first = false;
            }
        }
    }

    // A plan the transition model gives zero probability is not something
    // the vehicle can execute; the controller holds position instead.
    if (car_action_probability(state, best_car, scenario, grid) == 0.0)
        return CarAction::Stop;
    return best_car;
}

StepResult joint_policy_step(const JointState& state, const Scenario& scenario,
                             const PedestrianModel& model, const GridWorld& grid,
                             const RewardParams& params, std::mt19937_64& rng) {
    int d = proximity(state.car_pos, state.ped_pos, grid.distance_cap);

    StepResult out;
    if (d <= scenario.distance_threshold) {
        out.pedestrian = pedestrian_action(state, scenario, model, grid, rng);
        out.car = interaction_car_choice(state, scenario, model, grid, params);
    } else {
        out.car = state.car_pos == state.car_goal
                      ? CarAction::Stop
                      : car_goal_move(state.car_pos, state.car_goal);
        out.pedestrian = state.ped_pos == state.ped_goal
                             ? PedestrianAction::Wait
                             : pedestrian_goal_move(state.ped_pos, state.ped_goal);
    }

    JointState next = state;
    next.car_pos = apply_move(grid, state.car_pos, out.car);
    switch (out.pedestrian) {
        case PedestrianAction::GetInCar:
            next.ped_pos = next.car_pos;
            next.ped_in_car = true;
            break;
        case PedestrianAction::DontNoticeCar:
            next.ped_pos = apply_move(grid, state.ped_pos,
                                      pedestrian_goal_move(state.ped_pos, state.ped_goal));
            break;
        default:
            next.ped_pos = apply_move(grid, state.ped_pos, out.pedestrian);
            break;
    }
    out.next = next;
    return out;
}

} // namespace crosswalk
