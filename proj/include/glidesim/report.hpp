#pragma once

#include "glidesim/mission.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace glidesim {

/// Shortest round-trip text with at most 9 significant digits, `.` decimal
/// separator, independent of the locale.
std::string format_number(double value);

/// `value` rounded to 9 significant digits.
double round_sig9(double value);

/// Quote a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& text);

void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log);

/// Columns of the trajectory CSV as read back.
struct CsvTrajectoryRow {
    double t = 0;
    double depth = 0;
    double x = 0;
    std::string mode;
    double bladder_fill = 0;
    double cartridge_mol = 0;
    double p_hydro_kpa = 0;
    std::string event;
};

/// Parses the output of write_trajectory_csv. Throws std::runtime_error on
/// a malformed header or row.
std::vector<CsvTrajectoryRow> read_trajectory_csv(std::istream& in);

struct SummaryReport {
    long cycles = 0;
    double range_m = 0;
    double time_s = 0;
    double max_depth_m = 0;
    double energy_j = 0;
    double power_w = 0;
    double efficiency_mw_per_m = 0;
};

/// Power and efficiency are zero when time or range is zero.
SummaryReport make_summary_report(const MissionSummary& summary);

/// Summary values as re-derived from a trajectory CSV. The cartridge's
/// initial moles and rated energy are needed to prorate energy.
SummaryReport summary_from_csv(const std::vector<CsvTrajectoryRow>& rows, double initial_moles,
                               double rated_energy);

void write_summary_json(std::ostream& out, const SummaryReport& report);

}  // namespace glidesim
