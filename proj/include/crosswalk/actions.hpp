#ifndef CROSSWALK_ACTIONS_HPP
#define CROSSWALK_ACTIONS_HPP

#include <cstddef>

#include "crosswalk/geometry.hpp"

namespace crosswalk {

// Vehicle action set. The car has no reverse gear; Forward is +col,
// Left/Right are unit row displacements. Tie-breaking everywhere follows
// this declaration order.
enum class CarAction { Forward, Stop, Left, Right };
inline constexpr std::size_t kCarActionCount = 4;

// Pedestrian action set. Forward/Backwards/Left/Right are unit cell
// displacements; Wait and Stop both hold position (Wait is hesitation,
// Stop is a deliberate halt); GetInCar boards the vehicle; DontNoticeCar
// walks toward the goal as if the vehicle were absent.
enum class PedestrianAction {
    Forward,
    Backwards,
    Left,
    Right,
    Wait,
    GetInCar,
    DontNoticeCar,
    Stop
};
inline constexpr std::size_t kPedestrianActionCount = 8;

const char* to_string(CarAction a);
const char* to_string(PedestrianAction a);

// Displacement of a car action before boundary clamping.
inline Cell displace(const Cell& from, CarAction a) {
    switch (a) {
        case CarAction::Forward: return {from.col + 1, from.row};
        case CarAction::Left: return {from.col, from.row - 1};
        case CarAction::Right: return {from.col, from.row + 1};
        case CarAction::Stop: break;
    }
    return from;
}

// Displacement of a pedestrian action before boundary clamping. GetInCar
// and DontNoticeCar resolve against the rest of the joint state, so at
// this level they hold position.
inline Cell displace(const Cell& from, PedestrianAction a) {
    switch (a) {
        case PedestrianAction::Forward: return {from.col + 1, from.row};
        case PedestrianAction::Backwards: return {from.col - 1, from.row};
        case PedestrianAction::Left: return {from.col, from.row - 1};
        case PedestrianAction::Right: return {from.col, from.row + 1};
        default: break;
    }
    return from;
}

// Moves attempting to exit the grid clamp to the current cell.
inline Cell apply_move(const GridWorld& grid, const Cell& from, CarAction a) {
    Cell to = displace(from, a);
    return grid.contains(to) ? to : from;
}

inline Cell apply_move(const GridWorld& grid, const Cell& from, PedestrianAction a) {
    Cell to = displace(from, a);
    return grid.contains(to) ? to : from;
}

// First action in declaration order whose unit move reduces Manhattan
// distance to the goal. The car cannot reduce a westward gap; with no
// reducing move available it stops.
CarAction car_goal_move(const Cell& pos, const Cell& goal);

// Pedestrian counterpart; with no reducing move available (already at the
// goal) the pedestrian waits.
PedestrianAction pedestrian_goal_move(const Cell& pos, const Cell& goal);

} // namespace crosswalk

#endif
