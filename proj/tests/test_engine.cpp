#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "crosswalk/config.hpp"
#include "crosswalk/csv.hpp"
#include "crosswalk/engine.hpp"
#include "crosswalk/rng.hpp"
#include "test_util.hpp"

using namespace crosswalk;

namespace {

struct Fixture {
    RunConfig cfg;
    GridWorld grid;
    ActionDistribution baseline;

    Fixture() : baseline(baseline_distribution(cfg.survey_counts)) {}

    PedestrianModel model(int scenario_id) const {
        return PedestrianModel::for_scenario(
            cfg.scenarios[static_cast<std::size_t>(scenario_id - 1)], baseline);
    }

    const Scenario& scenario(int id) const {
        return cfg.scenarios[static_cast<std::size_t>(id - 1)];
    }
};

bool state_is_terminal(const JointState& s) {
    return s.car_pos == s.car_goal || s.ped_pos == s.ped_goal || s.ped_in_car;
}

} // namespace

TEST_CASE("default start puts the agents on opposite edges of adjacent lanes") {
    GridWorld grid(7, 7);
    JointState s = default_start(grid);
    CHECK(s.car_pos == Cell{0, 3});
    CHECK(s.car_goal == Cell{6, 3});
    CHECK(s.ped_pos == Cell{6, 2});
    CHECK(s.ped_goal == Cell{0, 2});
    CHECK_FALSE(s.ped_in_car);

    GridWorld small(4, 5);
    JointState t = default_start(small);
    CHECK(t.car_pos == Cell{0, 2});
    CHECK(t.car_goal == Cell{3, 2});
    CHECK(t.ped_pos == Cell{3, 1});
    CHECK(t.ped_goal == Cell{0, 1});
}

TEST_CASE("a fixed start sampler ignores the episode seed") {
    GridWorld grid(7, 7);
    StartSampler sampler = StartSampler::fixed(grid);
    JointState a = sampler.sample(grid, 1);
    JointState b = sampler.sample(grid, 999);
    CHECK(a.car_pos == b.car_pos);
    CHECK(a.ped_pos == b.ped_pos);
    CHECK(a.car_pos == default_start(grid).car_pos);
}

TEST_CASE("jittered starts stay on the edge columns with lane-aligned goals") {
    GridWorld grid(7, 7);
    StartSampler sampler{default_start(grid), true};

    bool any_difference = false;
    JointState first = sampler.sample(grid, 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        JointState s = sampler.sample(grid, seed);
        CHECK(s.car_pos.col == 0);
        CHECK(s.car_goal.col == 6);
        CHECK(s.ped_pos.col == 6);
        CHECK(s.ped_goal.col == 0);
        CHECK(s.car_goal.row == s.car_pos.row);
        CHECK(s.ped_goal.row == s.ped_pos.row);
        CHECK(grid.contains(s.car_pos));
        CHECK(grid.contains(s.ped_pos));
        // Same seed, same draw.
        JointState again = sampler.sample(grid, seed);
        CHECK(again.car_pos == s.car_pos);
        CHECK(again.ped_pos == s.ped_pos);
        if (!(s.car_pos == first.car_pos) || !(s.ped_pos == first.ped_pos))
            any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("an episode records one reward, action pair and trace entry per step") {
    Fixture f;
    JointState start = default_start(f.grid);
    EpisodeResult ep = run_episode(f.scenario(1), f.grid, start, 42, f.cfg.engine,
                                   f.model(1));

    CHECK(ep.scenario_id == 1);
    CHECK(ep.seed == 42);
    CHECK(ep.steps_taken >= 1);
    CHECK(ep.steps_taken <= f.cfg.engine.horizon);
    CHECK(ep.trace.values.size() == static_cast<std::size_t>(ep.steps_taken));
    CHECK(ep.car_actions.size() == static_cast<std::size_t>(ep.steps_taken));
    CHECK(ep.ped_actions.size() == static_cast<std::size_t>(ep.steps_taken));

    double sum = 0.0;
    for (double v : ep.trace.values) sum += v;
    CHECK(ep.final_trust() == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("terminal labels match the replayed end state across scenarios and seeds") {
    Fixture f;
    JointState start = default_start(f.grid);

    for (int id = 1; id <= 4; ++id) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            EpisodeResult ep = run_episode(f.scenario(id), f.grid, start, seed,
                                           f.cfg.engine, f.model(id));
            auto states = testutil::replay_states(f.grid, start, ep);

            // Termination is checked before stepping, so no intermediate
            // state may already satisfy a terminal condition.
            for (std::size_t i = 0; i + 1 < states.size(); ++i)
                CHECK_FALSE(state_is_terminal(states[i]));

            const JointState& last = states.back();
            switch (ep.terminal) {
                case Terminal::CarGoal:
                    CHECK(last.car_pos == last.car_goal);
                    break;
                case Terminal::PedGoal:
                    CHECK(last.ped_pos == last.ped_goal);
                    break;
                case Terminal::PedInCar:
                    CHECK(last.ped_in_car);
                    break;
                case Terminal::HorizonExhausted:
                    CHECK(ep.steps_taken == f.cfg.engine.horizon);
                    CHECK_FALSE(state_is_terminal(last));
                    break;
            }
        }
    }
}

TEST_CASE("starts that already satisfy a terminal condition end in zero steps") {
    Fixture f;

    JointState at_goal = default_start(f.grid);
    at_goal.car_pos = at_goal.car_goal;
    EpisodeResult car_done = run_episode(f.scenario(1), f.grid, at_goal, 1,
                                         f.cfg.engine, f.model(1));
    CHECK(car_done.terminal == Terminal::CarGoal);
    CHECK(car_done.steps_taken == 0);
    CHECK(car_done.trace.values.empty());
    CHECK(car_done.final_trust() == 0.0);

    JointState ped_done = default_start(f.grid);
    ped_done.ped_pos = ped_done.ped_goal;
    EpisodeResult r = run_episode(f.scenario(1), f.grid, ped_done, 1,
                                  f.cfg.engine, f.model(1));
    CHECK(r.terminal == Terminal::PedGoal);
    CHECK(r.steps_taken == 0);

    JointState boarding = default_start(f.grid);
    boarding.ped_pos = boarding.car_pos;
    boarding.ped_in_car = true;
    EpisodeResult b = run_episode(f.scenario(1), f.grid, boarding, 1,
                                  f.cfg.engine, f.model(1));
    CHECK(b.terminal == Terminal::PedInCar);
    CHECK(b.steps_taken == 0);
}

TEST_CASE("invalid starts and horizons are rejected") {
    Fixture f;
    JointState bad = default_start(f.grid);
    bad.ped_goal = {7, 2};
    CHECK_THROWS_AS(run_episode(f.scenario(1), f.grid, bad, 1, f.cfg.engine,
                                f.model(1)),
                    std::invalid_argument);

    EngineParams no_time = f.cfg.engine;
    no_time.horizon = 0;
    CHECK_THROWS_AS(run_episode(f.scenario(1), f.grid, default_start(f.grid), 1,
                                no_time, f.model(1)),
                    std::invalid_argument);
}

TEST_CASE("batch seeds derive from the master seed, scenario and run index") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    BatchResult batch = run_batch(f.scenario(2), f.grid, starts, 16, 77,
                                  f.cfg.engine, f.model(2));
    REQUIRE(batch.episodes.size() == 16);
    for (int run = 0; run < 16; ++run)
        CHECK(batch.episodes[static_cast<std::size_t>(run)].seed ==
              derive_seed(77, 2, static_cast<std::uint64_t>(run)));
}

TEST_CASE("batch statistics equal a direct recomputation with padding") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    BatchResult batch = run_batch(f.scenario(1), f.grid, starts, 64, 5,
                                  f.cfg.engine, f.model(1));
    const int horizon = f.cfg.engine.horizon;
    REQUIRE(batch.mean_trace.size() == static_cast<std::size_t>(horizon));
    REQUIRE(batch.trace_variance.size() == static_cast<std::size_t>(horizon));

    // At least one episode must terminate early for padding to matter.
    bool any_short = false;
    for (const auto& ep : batch.episodes)
        if (ep.steps_taken < horizon) any_short = true;
    CHECK(any_short);

    std::vector<std::vector<double>> padded;
    double steps = 0.0;
    for (const auto& ep : batch.episodes) {
        std::vector<double> row(static_cast<std::size_t>(horizon));
        double acc = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i < ep.trace.values.size()) acc += ep.trace.values[i];
            row[i] = acc;
        }
        padded.push_back(std::move(row));
        steps += ep.steps_taken;
    }
    for (int i = 0; i < horizon; ++i) {
        double sum = 0.0;
        for (const auto& row : padded) sum += row[static_cast<std::size_t>(i)];
        double mean = sum / 64.0;
        double ss = 0.0;
        for (const auto& row : padded) {
            double dev = row[static_cast<std::size_t>(i)] - mean;
            ss += dev * dev;
        }
        CHECK(batch.mean_trace[static_cast<std::size_t>(i)] == mean);
        CHECK(batch.trace_variance[static_cast<std::size_t>(i)] == ss / 63.0);
    }
    CHECK(batch.mean_steps == doctest::Approx(steps / 64.0).epsilon(1e-12));
}

TEST_CASE("worker count does not change any batch byte") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    for (int id : {1, 4}) {
        BatchResult serial = run_batch(f.scenario(id), f.grid, starts, 64, 9,
                                       f.cfg.engine, f.model(id), 1);
        BatchResult threaded = run_batch(f.scenario(id), f.grid, starts, 64, 9,
                                         f.cfg.engine, f.model(id), 4);
        REQUIRE(serial.episodes.size() == threaded.episodes.size());
        for (std::size_t i = 0; i < serial.episodes.size(); ++i) {
            CHECK(serial.episodes[i].seed == threaded.episodes[i].seed);
            CHECK(serial.episodes[i].steps_taken == threaded.episodes[i].steps_taken);
            CHECK(serial.episodes[i].terminal == threaded.episodes[i].terminal);
            CHECK(serial.episodes[i].final_trust() == threaded.episodes[i].final_trust());
        }
        for (std::size_t i = 0; i < serial.mean_trace.size(); ++i) {
            CHECK(serial.mean_trace[i] == threaded.mean_trace[i]);
            CHECK(serial.trace_variance[i] == threaded.trace_variance[i]);
        }
        CHECK(serial.mean_steps == threaded.mean_steps);
    }
}

TEST_CASE("batches reject negative run counts and allow empty ones") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    CHECK_THROWS_AS(run_batch(f.scenario(1), f.grid, starts, -1, 1, f.cfg.engine,
                              f.model(1)),
                    std::invalid_argument);

    BatchResult empty = run_batch(f.scenario(1), f.grid, starts, 0, 1,
                                  f.cfg.engine, f.model(1));
    CHECK(empty.episodes.empty());
    CHECK(empty.runs == 0);
    CHECK(empty.mean_steps == 0.0);
}

TEST_CASE("numbers format with nine significant digits") {
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(-0.123456789123) == "-0.123456789");
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("episode CSV has one header and one row per episode") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    std::vector<BatchResult> batches;
    batches.push_back(run_batch(f.scenario(1), f.grid, starts, 3, 1,
                                f.cfg.engine, f.model(1)));

    std::istringstream in(episodes_csv(batches));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "scenario,run,seed,steps,terminal,final_trust");
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.rfind("1,", 0) == 0);
        ++rows;
    }
    CHECK(rows == 3);

    CHECK(episodes_csv({}) == "scenario,run,seed,steps,terminal,final_trust\n");
}

TEST_CASE("trace CSV emits horizon rows per scenario with 1-based iterations") {
    Fixture f;
    StartSampler starts = StartSampler::fixed(f.grid);
    std::vector<BatchResult> batches;
    batches.push_back(run_batch(f.scenario(1), f.grid, starts, 2, 1,
                                f.cfg.engine, f.model(1)));

    std::istringstream in(mean_trace_csv(batches));
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "scenario,iteration,mean_trust,variance");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front().rfind("1,1,", 0) == 0);
    CHECK(rows.back().rfind("1,10,", 0) == 0);
}

TEST_CASE("file writing lands in the directory and reports failure honestly") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "crosswalk_write_test";
    fs::create_directories(dir);
    CHECK(write_file(dir.string(), "out.csv", "a,b\n1,2\n"));
    std::ifstream in(dir / "out.csv", std::ios::binary);
    std::ostringstream read;
    read << in.rdbuf();
    CHECK(read.str() == "a,b\n1,2\n");
    fs::remove_all(dir);

    CHECK_FALSE(write_file("/nonexistent_dir_for_sure/xyz", "out.csv", "x"));
}
