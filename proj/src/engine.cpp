#include "crosswalk/engine.hpp"

#include <stdexcept>
#include <thread>

#include "crosswalk/rng.hpp"

namespace crosswalk {

const char* to_string(Terminal t) {
    switch (t) {
        case Terminal::CarGoal: return "CarGoal";
        case Terminal::PedGoal: return "PedGoal";
        case Terminal::PedInCar: return "PedInCar";
        case Terminal::HorizonExhausted: return "HorizonExhausted";
    }
    return "?";
}

JointState default_start(const GridWorld& grid) {
    // Opposite edge columns, adjacent lanes, destinations swapped side to
    // side: the trajectories must cross near the middle of the grid.
    JointState s;
    int car_row = grid.height / 2;
    int ped_row = car_row - 1;
    s.car_pos = {0, car_row};
    s.car_goal = {grid.width - 1, car_row};
    s.ped_pos = {grid.width - 1, ped_row};
    s.ped_goal = {0, ped_row};
    return s;
}

StartSampler StartSampler::fixed(const GridWorld& grid) {
    return StartSampler{default_start(grid), false};
}

JointState StartSampler::sample(const GridWorld& grid, std::uint64_t episode_seed) const {
    if (!jitter) return base;
    // Jitter only the rows; the agents keep their edge columns and their
    // goals stay on the far side of the same lane.
    std::mt19937_64 rng(mix64(episode_seed ^ 0x5157a54515a57e11ULL));
    JointState s = base;
    s.car_pos.row = static_cast<int>(rng() % static_cast<std::uint64_t>(grid.height));
    s.car_goal.row = s.car_pos.row;
    s.ped_pos.row = static_cast<int>(rng() % static_cast<std::uint64_t>(grid.height));
    s.ped_goal.row = s.ped_pos.row;
    return s;
}

EpisodeResult run_episode(const Scenario& scenario, const GridWorld& grid,
                          const JointState& start, std::uint64_t seed,
                          const EngineParams& params, const PedestrianModel& model) {
    start.validate(grid);
    if (params.horizon < 1)
        throw std::invalid_argument("run_episode: horizon must be >= 1");

    EpisodeResult result;
    result.scenario_id = scenario.id;
    result.seed = seed;

    std::mt19937_64 rng(seed);
    JointState state = start;
    std::vector<double> rewards;
    rewards.reserve(static_cast<std::size_t>(params.horizon));

    Terminal terminal = Terminal::HorizonExhausted;
    int steps = 0;
    for (;;) {
        if (state.car_pos == state.car_goal) { terminal = Terminal::CarGoal; break; }
        if (state.ped_pos == state.ped_goal) { terminal = Terminal::PedGoal; break; }
        if (state.ped_in_car) { terminal = Terminal::PedInCar; break; }
        if (steps == params.horizon) { terminal = Terminal::HorizonExhausted; break; }

        StepResult step = joint_policy_step(state, scenario, model, grid,
                                            params.rewards, rng);
        TransitionProbs probs{
            car_action_probability(state, step.car, scenario, grid),
            pedestrian_action_probabilities(
                model.effective, proximity(state.car_pos, state.ped_pos,
                                           grid.distance_cap))[static_cast<int>(step.pedestrian)]};
        rewards.push_back(interaction_reward(state, step.car, step.pedestrian, scenario,
                                             probs, grid, params.rewards));
        result.car_actions.push_back(step.car);
        result.ped_actions.push_back(step.pedestrian);
        state = step.next;
        ++steps;
    }

    result.steps_taken = steps;
    result.terminal = terminal;
    result.trace = accumulate_trust(rewards, params.discount.phi);
    return result;
}

BatchResult run_batch(const Scenario& scenario, const GridWorld& grid,
                      const StartSampler& starts, int runs, std::uint64_t master_seed,
                      const EngineParams& params, const PedestrianModel& model,
                      int jobs) {
    if (runs < 0) throw std::invalid_argument("run_batch: negative run count");
    if (jobs < 1) jobs = 1;

    BatchResult batch;
    batch.scenario_id = scenario.id;
    batch.runs = runs;
    batch.episodes.resize(static_cast<std::size_t>(runs));

    auto worker = [&](int worker_index) {
        for (int run = worker_index; run < runs; run += jobs) {
            std::uint64_t seed =
                derive_seed(master_seed, static_cast<std::uint64_t>(scenario.id),
                            static_cast<std::uint64_t>(run));
            JointState start = starts.sample(grid, seed);
            batch.episodes[static_cast<std::size_t>(run)] =
                run_episode(scenario, grid, start, seed, params, model);
        }
    };

    if (jobs == 1 || runs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
        for (auto& t : pool) t.join();
    }

    // Aggregate strictly in run order so the result does not depend on the
    // thread schedule. Short episodes carry their final cumulative value.
    int horizon = params.horizon;
    batch.mean_trace.assign(static_cast<std::size_t>(horizon), 0.0);
    batch.trace_variance.assign(static_cast<std::size_t>(horizon), 0.0);

    std::vector<double> padded(static_cast<std::size_t>(horizon));
    std::vector<std::vector<double>> cumulative;
    cumulative.reserve(batch.episodes.size());
    double steps_total = 0.0;
    for (const auto& ep : batch.episodes) {
        double acc = 0.0;
        std::size_t i = 0;
        for (; i < ep.trace.values.size() && i < padded.size(); ++i) {
            acc += ep.trace.values[i];
            padded[i] = acc;
        }
        for (; i < padded.size(); ++i) padded[i] = acc;
        cumulative.push_back(padded);
        steps_total += ep.steps_taken;
    }

    if (runs > 0) {
        for (int i = 0; i < horizon; ++i) {
            double sum = 0.0;
            for (const auto& row : cumulative) sum += row[static_cast<std::size_t>(i)];
            double mean = sum / runs;
            batch.mean_trace[static_cast<std::size_t>(i)] = mean;

            double ss = 0.0;
            for (const auto& row : cumulative) {
                double dev = row[static_cast<std::size_t>(i)] - mean;
                ss += dev * dev;
            }
            batch.trace_variance[static_cast<std::size_t>(i)] =
                runs > 1 ? ss / (runs - 1) : 0.0;
        }
        batch.mean_steps = steps_total / runs;
    }
    return batch;
}

} // namespace crosswalk
