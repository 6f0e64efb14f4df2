#ifndef CROSSWALK_ENGINE_HPP
#define CROSSWALK_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "crosswalk/behavior.hpp"
#include "crosswalk/trust.hpp"

namespace crosswalk {

enum class Terminal { CarGoal, PedGoal, PedInCar, HorizonExhausted };

const char* to_string(Terminal t);

struct EngineParams {
    int horizon = 10;
    DiscountParams discount;
    RewardParams rewards;
};

// Start configuration. The base layout puts the agents on opposite edge
// columns in adjacent lanes with swapped goal sides, which forces the
// paths to cross mid-grid. With jitter enabled the rows are drawn
// uniformly per run (columns stay on the first/last edge).
struct StartSampler {
    JointState base;
    bool jitter = false;

    static StartSampler fixed(const GridWorld& grid);
    JointState sample(const GridWorld& grid, std::uint64_t episode_seed) const;
};

// Default crossing layout for a grid.
JointState default_start(const GridWorld& grid);

struct EpisodeResult {
    int scenario_id = 0;
    std::uint64_t seed = 0;
    int steps_taken = 0;
    Terminal terminal = Terminal::HorizonExhausted;
    TrustTrace trace;
    std::vector<CarAction> car_actions;
    std::vector<PedestrianAction> ped_actions;

    double final_trust() const { return trace.cumulative; }
};

struct BatchResult {
    int scenario_id = 0;
    int runs = 0;
    // Per-iteration mean and variance of the cumulative trust across runs,
    // horizon entries, short episodes padded by carrying their final value.
    std::vector<double> mean_trace;
    std::vector<double> trace_variance;
    double mean_steps = 0.0;
    std::vector<EpisodeResult> episodes;
};

// Runs one episode from `start` with a dedicated RNG stream seeded by
// `seed`. Throws std::invalid_argument on an invalid start state.
EpisodeResult run_episode(const Scenario& scenario, const GridWorld& grid,
                          const JointState& start, std::uint64_t seed,
                          const EngineParams& params, const PedestrianModel& model);

// Monte-Carlo batch: `runs` episodes with per-episode seeds derived from
// (master_seed, scenario id, run index). `jobs` threads may execute
// episodes concurrently; aggregation always happens in run order, so the
// result is identical for any job count.
BatchResult run_batch(const Scenario& scenario, const GridWorld& grid,
                      const StartSampler& starts, int runs, std::uint64_t master_seed,
                      const EngineParams& params, const PedestrianModel& model,
                      int jobs = 1);

} // namespace crosswalk

#endif
