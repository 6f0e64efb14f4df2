#ifndef CROSSWALK_CSV_HPP
#define CROSSWALK_CSV_HPP

#include <string>
#include <vector>

#include "crosswalk/analysis.hpp"
#include "crosswalk/engine.hpp"

namespace crosswalk {

// Formats a double as decimal text with nine significant digits. All CSV
// numbers go through this so identical runs emit identical bytes.
std::string format_number(double value);

// episodes.csv: scenario,run,seed,steps,terminal,final_trust
std::string episodes_csv(const std::vector<BatchResult>& batches);

// mean_trace.csv: scenario,iteration,mean_trust,variance (iterations 1..H)
std::string mean_trace_csv(const std::vector<BatchResult>& batches);

// report.csv: per-scenario fit and aggregate columns.
std::string report_csv(const ScenarioReport& report);

// bands_<level>.csv rows: scenario,level,coefficient,estimate,lower,upper
std::string bands_csv(const ScenarioReport& report, double level);

// Writes `content` to dir/name. Returns false (and reports no exception)
// when the directory is not writable.
bool write_file(const std::string& dir, const std::string& name,
                const std::string& content);

} // namespace crosswalk

#endif
