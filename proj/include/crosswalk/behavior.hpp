#ifndef CROSSWALK_BEHAVIOR_HPP
#define CROSSWALK_BEHAVIOR_HPP

#include <array>
#include <random>

#include "crosswalk/actions.hpp"
#include "crosswalk/scenario.hpp"
#include "crosswalk/survey.hpp"
#include "crosswalk/trust.hpp"

namespace crosswalk {

// Pedestrian behavior for one scenario: the category distribution in
// effect (trust-reweighted when the vehicle communicates intent, the raw
// survey baseline otherwise).
struct PedestrianModel {
    ActionDistribution effective;

    static PedestrianModel for_scenario(const Scenario& scenario,
                                        const ActionDistribution& baseline);
};

// Expands the category distribution onto the eight concrete actions for a
// given proximity: Cross splits uniformly over the four moves, and
// GetInCar is only available within one unit space (its mass renormalizes
// over the rest when out of reach).
std::array<double, kPedestrianActionCount>
pedestrian_action_probabilities(const ActionDistribution& dist, int distance);

// Probability that the vehicle's transition model assigns to a car action
// at the current state: the stop profile for Stop, the complement for the
// goal-seeking move, zero for everything else.
double car_action_probability(const JointState& state, CarAction a,
                              const Scenario& scenario, const GridWorld& grid);

// Vehicle policy as a sampling rule: within the interaction threshold the
// car stops with the profiled probability, otherwise it steps toward its
// goal deterministically. At the goal it stops.
CarAction car_action(const JointState& state, const Scenario& scenario,
                     const GridWorld& grid, std::mt19937_64& rng);

// Pedestrian policy: goal-seeking outside the threshold, a draw from the
// proximity-gated action distribution inside it.
PedestrianAction pedestrian_action(const JointState& state, const Scenario& scenario,
                                   const PedestrianModel& model, const GridWorld& grid,
                                   std::mt19937_64& rng);

// Interaction-mode planner for the vehicle: enumerates all 4x8 joint
// actions, scores them with the interaction reward, and takes the car
// component of the best pair (declaration-order tie-breaking). A winning
// action the transition model rules out is not an executable plan; the
// controller realizes it as Stop. Co-location also holds the car.
CarAction interaction_car_choice(const JointState& state, const Scenario& scenario,
                                 const PedestrianModel& model, const GridWorld& grid,
                                 const RewardParams& params);

struct StepResult {
    CarAction car = CarAction::Stop;
    PedestrianAction pedestrian = PedestrianAction::Wait;
    JointState next;
};

// Advances the joint state one iteration. Within the threshold the car
// follows the planner and the pedestrian is sampled (it is not
// controllable); outside it both agents use their goal-seeking rules.
// Boundary moves clamp to the current cell. GetInCar co-locates the
// pedestrian with the vehicle and sets ped_in_car; DontNoticeCar walks
// toward the pedestrian goal ignoring the vehicle.
StepResult joint_policy_step(const JointState& state, const Scenario& scenario,
                             const PedestrianModel& model, const GridWorld& grid,
                             const RewardParams& params, std::mt19937_64& rng);

} // namespace crosswalk

#endif
