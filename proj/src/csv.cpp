#include "crosswalk/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace crosswalk {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::string episodes_csv(const std::vector<BatchResult>& batches) {
    std::ostringstream out;
    out << "scenario,run,seed,steps,terminal,final_trust\n";
    for (const auto& batch : batches) {
        for (std::size_t run = 0; run < batch.episodes.size(); ++run) {
            const EpisodeResult& ep = batch.episodes[run];
            out << batch.scenario_id << ',' << run << ',' << ep.seed << ','
                << ep.steps_taken << ',' << to_string(ep.terminal) << ','
                << format_number(ep.final_trust()) << '\n';
        }
    }
    return out.str();
}

std::string mean_trace_csv(const std::vector<BatchResult>& batches) {
    std::ostringstream out;
    out << "scenario,iteration,mean_trust,variance\n";
    for (const auto& batch : batches) {
        for (std::size_t i = 0; i < batch.mean_trace.size(); ++i) {
            out << batch.scenario_id << ',' << (i + 1) << ','
                << format_number(batch.mean_trace[i]) << ','
                << format_number(batch.trace_variance[i]) << '\n';
        }
    }
    return out.str();
}

std::string report_csv(const ScenarioReport& report) {
    std::ostringstream out;
    out << "scenario,intercept,slope,residual_mse,var_intercept,var_slope,"
           "final_trust,mean_steps,variance_score,variance_rank,s1_s4_relative_gap\n";
    for (const ScenarioSummary& s : report.scenarios) {
        out << s.scenario_id << ',' << format_number(s.fit.intercept) << ','
            << format_number(s.fit.slope) << ',' << format_number(s.fit.residual_mse)
            << ',' << format_number(s.fit.var_intercept) << ','
            << format_number(s.fit.var_slope) << ',' << format_number(s.final_trust)
            << ',' << format_number(s.mean_steps) << ','
            << format_number(s.variance_score) << ',' << s.variance_rank << ','
            << format_number(report.s1_s4_relative_gap) << '\n';
    }
    return out.str();
}

std::string bands_csv(const ScenarioReport& report, double level) {
    std::ostringstream out;
    out << "scenario,level,coefficient,estimate,lower,upper\n";
    for (const ScenarioSummary& s : report.scenarios) {
        for (const ConfidenceBand& band : s.bands) {
            if (band.level != level) continue;
            out << s.scenario_id << ',' << format_number(band.level) << ",intercept,"
                << format_number(s.fit.intercept) << ','
                << format_number(band.intercept_lower) << ','
                << format_number(band.intercept_upper) << '\n';
            out << s.scenario_id << ',' << format_number(band.level) << ",slope,"
                << format_number(s.fit.slope) << ','
                << format_number(band.slope_lower) << ','
                << format_number(band.slope_upper) << '\n';
        }
    }
    return out.str();
}

bool write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
    std::filesystem::path path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    return static_cast<bool>(out);
}

} // namespace crosswalk
