#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"

#include "crosswalk/analysis.hpp"
#include "crosswalk/config.hpp"
#include "crosswalk/csv.hpp"
#include "crosswalk/engine.hpp"

namespace {

bool parse_grid(const std::string& text, int& width, int& height) {
    std::size_t x = text.find_first_of("xX");
    if (x == std::string::npos) return false;
    try {
        std::size_t used = 0;
        width = std::stoi(text.substr(0, x), &used);
        if (used != x) return false;
        std::string rest = text.substr(x + 1);
        height = std::stoi(rest, &used);
        if (used != rest.size()) return false;
    } catch (const std::exception&) {
        return false;
    }
    return width >= 2 && height >= 2;
}

int usage_error(const CLI::App& app, const std::string& message) {
    std::fprintf(stderr, "error: %s\n\n%s", message.c_str(), app.help().c_str());
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gridworld crossing simulator: scenario batches, trust traces, "
                 "regression report"};

    std::string scenario_arg = "all";
    int runs = 2000;
    int horizon = 10;
    std::string grid_arg = "7x7";
    std::uint64_t seed = 1;
    std::string out_dir;
    std::vector<double> levels = {0.2, 0.4, 0.6, 0.8, 0.99};
    std::string config_path;
    int jobs = 1;
    bool t_quantile = false;

    app.add_option("--scenario", scenario_arg, "Scenario to run: 1|2|3|4|all")
        ->capture_default_str();
    app.add_option("--runs", runs, "Episodes per scenario")->capture_default_str();
    app.add_option("--horizon", horizon, "Maximum iterations per episode")
        ->capture_default_str();
    app.add_option("--grid", grid_arg, "Grid dimensions WxH")->capture_default_str();
    app.add_option("--seed", seed, "Master seed; all randomness derives from it")
        ->capture_default_str();
    app.add_option("--out", out_dir,
                   "Output directory (default: $CROSSWALK_OUT, else current dir)");
    app.add_option("--levels", levels, "Confidence levels for the report bands")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--config", config_path, "Config file with parameter overrides");
    app.add_option("--jobs", jobs, "Worker threads per batch")->capture_default_str();
    app.add_flag("--t-quantile", t_quantile,
                 "Interpret levels as confidence for Student-t multipliers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n\n%s", e.what(), app.help().c_str());
        return 2;
    }

    if (runs < 1) return usage_error(app, "--runs must be at least 1");
    if (horizon < 1) return usage_error(app, "--horizon must be at least 1");
    if (jobs < 1) return usage_error(app, "--jobs must be at least 1");
    int width = 0, height = 0;
    if (!parse_grid(grid_arg, width, height))
        return usage_error(app, "--grid expects WxH with both dimensions >= 2");
    for (double level : levels)
        if (!(level > 0.0 && level <= 1.0))
            return usage_error(app, "--levels entries must lie in (0, 1]");
    if (t_quantile)
        for (double level : levels)
            if (level >= 1.0)
                return usage_error(app, "--t-quantile needs levels strictly below 1");

    std::vector<int> scenario_ids;
    if (scenario_arg == "all") {
        scenario_ids = {1, 2, 3, 4};
    } else if (scenario_arg == "1" || scenario_arg == "2" || scenario_arg == "3" ||
               scenario_arg == "4") {
        scenario_ids = {scenario_arg[0] - '0'};
    } else {
        return usage_error(app, "--scenario must be 1, 2, 3, 4 or all");
    }

    if (out_dir.empty()) {
        const char* env = std::getenv("CROSSWALK_OUT");
        out_dir = env && *env ? env : ".";
    }

    try {
        crosswalk::RunConfig cfg;
        if (!config_path.empty()) cfg = crosswalk::load_config(config_path, cfg);
        cfg.engine.horizon = horizon;

        crosswalk::GridWorld grid{width, height, 6};
        crosswalk::ActionDistribution baseline =
            crosswalk::baseline_distribution(cfg.survey_counts);

        std::vector<crosswalk::BatchResult> batches;
        for (int id : scenario_ids) {
            const crosswalk::Scenario& scenario =
                cfg.scenarios[static_cast<std::size_t>(id - 1)];
            crosswalk::PedestrianModel model =
                crosswalk::PedestrianModel::for_scenario(scenario, baseline);
            crosswalk::StartSampler starts{crosswalk::default_start(grid),
                                           cfg.jitter_starts};
            batches.push_back(crosswalk::run_batch(scenario, grid, starts, runs, seed,
                                                   cfg.engine, model, jobs));
        }

        bool full_set = scenario_ids.size() == 4;
        crosswalk::ScenarioReport report;
        if (full_set)
            report = crosswalk::scenario_report(batches, levels, t_quantile);

        std::error_code dir_ec;
        std::filesystem::create_directories(out_dir, dir_ec);

        if (!crosswalk::write_file(out_dir, "episodes.csv",
                                   crosswalk::episodes_csv(batches)) ||
            !crosswalk::write_file(out_dir, "mean_trace.csv",
                                   crosswalk::mean_trace_csv(batches))) {
            std::fprintf(stderr, "error: cannot write output files under %s\n",
                         out_dir.c_str());
            return 1;
        }
        if (full_set) {
            bool ok = crosswalk::write_file(out_dir, "report.csv",
                                            crosswalk::report_csv(report));
            for (double level : levels) {
                std::string name =
                    "bands_" + crosswalk::format_number(level) + ".csv";
                ok = ok && crosswalk::write_file(out_dir, name,
                                                 crosswalk::bands_csv(report, level));
            }
            if (!ok) {
                std::fprintf(stderr, "error: cannot write output files under %s\n",
                             out_dir.c_str());
                return 1;
            }
        }

        std::printf("scenario  final_trust      mean_steps  variance_rank\n");
        for (std::size_t i = 0; i < batches.size(); ++i) {
            const crosswalk::BatchResult& b = batches[i];
            double final_trust = b.mean_trace.empty() ? 0.0 : b.mean_trace.back();
            std::string rank = "-";
            if (full_set)
                rank = std::to_string(report.scenarios[i].variance_rank);
            std::printf("%8d  %-15s  %-10s  %s\n", b.scenario_id,
                        crosswalk::format_number(final_trust).c_str(),
                        crosswalk::format_number(b.mean_steps).c_str(), rank.c_str());
        }
        if (full_set)
            std::printf("s1_s4_relative_gap %s\n",
                        crosswalk::format_number(report.s1_s4_relative_gap).c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
