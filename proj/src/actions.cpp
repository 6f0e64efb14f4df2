#include "crosswalk/actions.hpp"

#include <array>

namespace crosswalk {

const char* to_string(CarAction a) {
    switch (a) {
        case CarAction::Forward: return "Forward";
        case CarAction::Stop: return "Stop";
        case CarAction::Left: return "Left";
        case CarAction::Right: return "Right";
    }
    return "?";
}

const char* to_string(PedestrianAction a) {
    switch (a) {
        case PedestrianAction::Forward: return "Forward";
        case PedestrianAction::Backwards: return "Backwards";
        case PedestrianAction::Left: return "Left";
        case PedestrianAction::Right: return "Right";
        case PedestrianAction::Wait: return "Wait";
        case PedestrianAction::GetInCar: return "GetInCar";
        case PedestrianAction::DontNoticeCar: return "DontNoticeCar";
        case PedestrianAction::Stop: return "Stop";
    }
    return "?";
}

CarAction car_goal_move(const Cell& pos, const Cell& goal) {
    static constexpr std::array<CarAction, 3> moves = {
        CarAction::Forward, CarAction::Left, CarAction::Right};
    int current = manhattan(pos, goal);
    for (CarAction a : moves) {
        if (manhattan(displace(pos, a), goal) < current) return a;
    }
    return CarAction::Stop;
}

PedestrianAction pedestrian_goal_move(const Cell& pos, const Cell& goal) {
    static constexpr std::array<PedestrianAction, 4> moves = {
        PedestrianAction::Forward, PedestrianAction::Backwards,
        PedestrianAction::Left, PedestrianAction::Right};
    int current = manhattan(pos, goal);
    for (PedestrianAction a : moves) {
        if (manhattan(displace(pos, a), goal) < current) return a;
    }
    return PedestrianAction::Wait;
}

} // namespace crosswalk
