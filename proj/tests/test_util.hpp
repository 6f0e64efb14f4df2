#ifndef CROSSWALK_TESTS_TEST_UTIL_HPP
#define CROSSWALK_TESTS_TEST_UTIL_HPP

#include <vector>

#include "crosswalk/actions.hpp"
#include "crosswalk/engine.hpp"
#include "crosswalk/trust.hpp"

namespace crosswalk::testutil {

// Mirrors the state update of joint_policy_step so tests can reconstruct
// the visited states of an episode from its recorded action sequences.
inline JointState replay_step(const GridWorld& grid, const JointState& state,
                              CarAction car, PedestrianAction ped) {
    JointState next = state;
    next.car_pos = apply_move(grid, state.car_pos, car);
    switch (ped) {
        case PedestrianAction::GetInCar:
            next.ped_pos = next.car_pos;
            next.ped_in_car = true;
            break;
        case PedestrianAction::DontNoticeCar:
            next.ped_pos = apply_move(grid, state.ped_pos,
                                      pedestrian_goal_move(state.ped_pos, state.ped_goal));
            break;
        default:
            next.ped_pos = apply_move(grid, state.ped_pos, ped);
            break;
    }
    return next;
}

// All states an episode visited, starting with `start`; one entry more
// than the number of steps.
inline std::vector<JointState> replay_states(const GridWorld& grid,
                                             const JointState& start,
                                             const EpisodeResult& episode) {
    std::vector<JointState> states{start};
    for (std::size_t i = 0; i < episode.car_actions.size(); ++i)
        states.push_back(replay_step(grid, states.back(), episode.car_actions[i],
                                     episode.ped_actions[i]));
    return states;
}

} // namespace crosswalk::testutil

#endif
