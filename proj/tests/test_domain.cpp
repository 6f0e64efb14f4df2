#include <string>

#include "doctest.h"

#include "crosswalk/actions.hpp"
#include "crosswalk/geometry.hpp"

using namespace crosswalk;

TEST_CASE("manhattan distance is symmetric and zero on identical cells") {
    CHECK(manhattan({0, 0}, {2, 3}) == 5);
    CHECK(manhattan({2, 3}, {0, 0}) == 5);
    CHECK(manhattan({4, 4}, {4, 4}) == 0);
}

TEST_CASE("proximity clamps the manhattan distance to the cap") {
    CHECK(proximity({0, 0}, {2, 3}, 6) == 5);
    CHECK(proximity({0, 0}, {5, 5}, 6) == 6);
    CHECK(proximity({0, 0}, {6, 6}, 6) == 6);
    CHECK(proximity({1, 1}, {1, 1}, 6) == 0);
    CHECK(proximity({0, 0}, {2, 3}, 2) == 2);
}

TEST_CASE("gridworld rejects degenerate dimensions") {
    CHECK_THROWS_AS(GridWorld(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(GridWorld(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(GridWorld(5, 5, 0), std::invalid_argument);
    CHECK_NOTHROW(GridWorld(2, 2, 1));
}

TEST_CASE("gridworld containment and clamping") {
    GridWorld grid(7, 7);
    CHECK(grid.contains({0, 0}));
    CHECK(grid.contains({6, 6}));
    CHECK_FALSE(grid.contains({-1, 3}));
    CHECK_FALSE(grid.contains({3, 7}));
    CHECK(grid.clamp({-1, 9}) == Cell{0, 6});
    CHECK(grid.clamp({3, 3}) == Cell{3, 3});
}

TEST_CASE("car displacement covers the three moves and stop") {
    Cell from{3, 3};
    CHECK(displace(from, CarAction::Forward) == Cell{4, 3});
    CHECK(displace(from, CarAction::Left) == Cell{3, 2});
    CHECK(displace(from, CarAction::Right) == Cell{3, 4});
    CHECK(displace(from, CarAction::Stop) == from);
}

TEST_CASE("pedestrian displacement moves one cell; special actions hold") {
    Cell from{3, 3};
    CHECK(displace(from, PedestrianAction::Forward) == Cell{4, 3});
    CHECK(displace(from, PedestrianAction::Backwards) == Cell{2, 3});
    CHECK(displace(from, PedestrianAction::Left) == Cell{3, 2});
    CHECK(displace(from, PedestrianAction::Right) == Cell{3, 4});
    CHECK(displace(from, PedestrianAction::Wait) == from);
    CHECK(displace(from, PedestrianAction::GetInCar) == from);
    CHECK(displace(from, PedestrianAction::DontNoticeCar) == from);
    CHECK(displace(from, PedestrianAction::Stop) == from);
}

TEST_CASE("moves that would exit the grid clamp to the current cell") {
    GridWorld grid(7, 7);
    CHECK(apply_move(grid, {6, 3}, CarAction::Forward) == Cell{6, 3});
    CHECK(apply_move(grid, {3, 0}, CarAction::Left) == Cell{3, 0});
    CHECK(apply_move(grid, {3, 6}, CarAction::Right) == Cell{3, 6});
    CHECK(apply_move(grid, {0, 3}, PedestrianAction::Backwards) == Cell{0, 3});
    CHECK(apply_move(grid, {5, 3}, CarAction::Forward) == Cell{6, 3});
}

TEST_CASE("car goal move picks the first distance-reducing action") {
    CHECK(car_goal_move({0, 3}, {6, 3}) == CarAction::Forward);
    CHECK(car_goal_move({3, 4}, {3, 0}) == CarAction::Left);
    CHECK(car_goal_move({3, 0}, {3, 4}) == CarAction::Right);
    // Forward wins over a row move when both reduce the distance.
    CHECK(car_goal_move({0, 0}, {3, 3}) == CarAction::Forward);
}

TEST_CASE("car stops when no move reduces the distance") {
    CHECK(car_goal_move({3, 3}, {3, 3}) == CarAction::Stop);
    // No reverse gear: a goal straight to the west is unreachable.
    CHECK(car_goal_move({4, 3}, {0, 3}) == CarAction::Stop);
    // A westward goal on another row still allows lateral progress.
    CHECK(car_goal_move({4, 3}, {0, 5}) == CarAction::Right);
}

TEST_CASE("pedestrian goal move can walk all four directions") {
    CHECK(pedestrian_goal_move({6, 2}, {0, 2}) == PedestrianAction::Backwards);
    CHECK(pedestrian_goal_move({0, 2}, {6, 2}) == PedestrianAction::Forward);
    CHECK(pedestrian_goal_move({3, 4}, {3, 1}) == PedestrianAction::Left);
    CHECK(pedestrian_goal_move({3, 1}, {3, 4}) == PedestrianAction::Right);
    CHECK(pedestrian_goal_move({3, 3}, {3, 3}) == PedestrianAction::Wait);
}

TEST_CASE("action names round-trip to readable strings") {
    CHECK(std::string(to_string(CarAction::Forward)) == "Forward");
    CHECK(std::string(to_string(CarAction::Stop)) == "Stop");
    CHECK(std::string(to_string(PedestrianAction::GetInCar)) == "GetInCar");
    CHECK(std::string(to_string(PedestrianAction::DontNoticeCar)) == "DontNoticeCar");
}
