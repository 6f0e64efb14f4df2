#ifndef CROSSWALK_CONFIG_HPP
#define CROSSWALK_CONFIG_HPP

#include <array>
#include <string>

#include "crosswalk/engine.hpp"
#include "crosswalk/scenario.hpp"
#include "crosswalk/survey.hpp"

namespace crosswalk {

// Everything a simulation run needs, pre-filled with the committed
// defaults and overridable from a plain-text config file.
struct RunConfig {
    std::array<Scenario, 4> scenarios;
    SurveyCounts survey_counts;
    SurveyTable survey_table;
    EngineParams engine;
    bool jitter_starts = false;

    RunConfig();

    // Re-derives trust levels and dependent defaults after table or count
    // overrides.
    void refresh_derived();
};

// Parses `key = value` assignments grouped under [section] headers:
// [scenario.N] for per-scenario fields, [survey] for raw category counts,
// [table1] for per-question group scores, [params] for engine knobs.
// Unknown keys or malformed lines throw std::runtime_error with the line
// number. See config/defaults.cfg for the full schema.
RunConfig load_config(const std::string& path, RunConfig base = RunConfig());

// Parses from an in-memory string (used by tests and the loader).
RunConfig parse_config(const std::string& text, RunConfig base = RunConfig());

} // namespace crosswalk

#endif
