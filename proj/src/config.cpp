#include "crosswalk/config.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace crosswalk {

RunConfig::RunConfig()
    : scenarios(canonical_scenarios()),
      survey_counts(),
      survey_table(default_survey_table()),
      engine(),
      jitter_starts(false) {}

void RunConfig::refresh_derived() {
    const auto& row = survey_table.scores[SurveyTable::kTrustRow];
    for (std::size_t i = 0; i < scenarios.size(); ++i)
        scenarios[i].trust_level = trust_level(row[i], survey_table.max_score);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::runtime_error("config line " + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) fail(line, "trailing characters after number '" + value + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + value + "'");
    }
}

int parse_int(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) fail(line, "trailing characters after integer '" + value + "'");
        return v;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "off" || value == "no" || value == "0") return false;
    fail(line, "expected a boolean, got '" + value + "'");
}

std::vector<std::string> split(const std::string& value, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

// "1:0.9, 3:0.7, far:0.1"
StopProfile parse_stop_profile(const std::string& value, int line) {
    StopProfile profile;
    bool far_seen = false;
    for (const std::string& item : split(value, ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            fail(line, "stop_profile entries look like 'distance:probability', got '" + item + "'");
        std::string key = trim(item.substr(0, colon));
        double p = parse_double(trim(item.substr(colon + 1)), line);
        if (key == "far") {
            profile.far = p;
            far_seen = true;
        } else {
            profile.breakpoints.emplace_back(parse_int(key, line), p);
        }
    }
    if (profile.breakpoints.empty())
        fail(line, "stop_profile needs at least one distance breakpoint");
    if (!far_seen) profile.far = profile.breakpoints.back().second;
    try {
        profile.validate();
    } catch (const std::exception& e) {
        fail(line, e.what());
    }
    return profile;
}

std::array<double, 4> parse_row(const std::string& value, int line) {
    auto items = split(value, ',');
    if (items.size() != 4) fail(line, "expected four comma-separated scores");
    std::array<double, 4> row{};
    for (std::size_t i = 0; i < 4; ++i) row[i] = parse_double(items[i], line);
    return row;
}

} // namespace

RunConfig parse_config(const std::string& text, RunConfig base) {
    RunConfig cfg = std::move(base);
    std::array<std::optional<double>, 4> trust_override;
    bool table_touched = false;

    enum class Section { None, Scenario, Survey, Table, Params };
    Section section = Section::None;
    int scenario_index = 0;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw.substr(0, raw.find('#'));
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            std::string name = trim(s.substr(1, s.size() - 2));
            if (name == "survey") {
                section = Section::Survey;
            } else if (name == "table1") {
                section = Section::Table;
            } else if (name == "params") {
                section = Section::Params;
            } else if (name.rfind("scenario.", 0) == 0) {
                int id = parse_int(name.substr(9), line);
                if (id < 1 || id > 4) fail(line, "scenario id must be 1 through 4");
                section = Section::Scenario;
                scenario_index = id - 1;
            } else {
                fail(line, "unknown section [" + name + "]");
            }
            continue;
        }

        std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");

        switch (section) {
            case Section::None:
                fail(line, "assignment outside any section");
            case Section::Scenario: {
                Scenario& sc = cfg.scenarios[static_cast<std::size_t>(scenario_index)];
                if (key == "name") sc.name = value;
                else if (key == "ics_enabled") sc.ics_enabled = parse_bool(value, line);
                else if (key == "prior_knowledge") sc.prior_knowledge = parse_bool(value, line);
                else if (key == "distance_threshold") sc.distance_threshold = parse_int(value, line);
                else if (key == "trust_level")
                    trust_override[static_cast<std::size_t>(scenario_index)] =
                        parse_double(value, line);
                else if (key == "interaction_reward_base")
                    sc.interaction_reward_base = parse_double(value, line);
                else if (key == "stop_profile") sc.stop_profile = parse_stop_profile(value, line);
                else fail(line, "unknown key '" + key + "' in [scenario." +
                                std::to_string(scenario_index + 1) + "]");
                break;
            }
            case Section::Survey: {
                if (key == "stop") cfg.survey_counts.stop = parse_double(value, line);
                else if (key == "wait") cfg.survey_counts.wait = parse_double(value, line);
                else if (key == "cross") cfg.survey_counts.cross = parse_double(value, line);
                else if (key == "dont_notice") cfg.survey_counts.dont_notice = parse_double(value, line);
                else if (key == "get_in") cfg.survey_counts.get_in = parse_double(value, line);
                else fail(line, "unknown key '" + key + "' in [survey]");
                break;
            }
            case Section::Table: {
                if (key == "max_score") {
                    cfg.survey_table.max_score = parse_double(value, line);
                    table_touched = true;
                } else if (key.size() == 2 && key[0] == 'q' && key[1] >= '1' && key[1] <= '8') {
                    cfg.survey_table.scores[static_cast<std::size_t>(key[1] - '1')] =
                        parse_row(value, line);
                    table_touched = true;
                } else {
                    fail(line, "unknown key '" + key + "' in [table1]");
                }
                break;
            }
            case Section::Params: {
                if (key == "horizon") cfg.engine.horizon = parse_int(value, line);
                else if (key == "gamma") cfg.engine.discount.gamma = parse_double(value, line);
                else if (key == "phi") cfg.engine.discount.phi = parse_double(value, line);
                else if (key == "goal_reward") cfg.engine.rewards.goal_reward = parse_double(value, line);
                else if (key == "step_cost") cfg.engine.rewards.step_cost = parse_double(value, line);
                else if (key == "jitter_starts") cfg.jitter_starts = parse_bool(value, line);
                else fail(line, "unknown key '" + key + "' in [params]");
                break;
            }
        }
    }

    if (table_touched) cfg.refresh_derived();
    for (std::size_t i = 0; i < 4; ++i)
        if (trust_override[i]) cfg.scenarios[i].trust_level = *trust_override[i];

    for (const Scenario& sc : cfg.scenarios) sc.validate();
    baseline_distribution(cfg.survey_counts);  // rejects bad counts early
    if (cfg.engine.horizon < 1)
        throw std::runtime_error("config: horizon must be >= 1");
    if (cfg.engine.discount.gamma < 0.0 || cfg.engine.discount.gamma > 1.0)
        throw std::runtime_error("config: gamma must be in [0,1]");
    if (cfg.engine.discount.phi < 0.0 || cfg.engine.discount.phi > 1.0)
        throw std::runtime_error("config: phi must be in [0,1]");
    return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

} // namespace crosswalk
