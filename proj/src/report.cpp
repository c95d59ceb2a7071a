#include "glidesim/report.hpp"

#include "glidesim/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace glidesim {

namespace {

const char* const kHeader = "t_s,depth_m,x_m,mode,bladder_fill_m3,cartridge_mol,p_hydro_kpa,event";

double parse_double(const std::string& text, std::size_t line) {
    double value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::runtime_error("trajectory CSV line " + std::to_string(line) +
                                 ": bad number '" + text + "'");
    }
    return value;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    // shortest exact form of the rounded value ("0.1" not "0.100000000")
    const double rounded = round_sig9(value);
    const double mag = std::fabs(rounded);
    // fixed notation for everyday magnitudes, so 3e-4 prints as 0.0003
    const auto fmt = mag >= 1e-6 && mag < 1e15 ? std::chars_format::fixed : std::chars_format::scientific;
    char buf[400];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rounded, fmt);
    if (ec != std::errc{}) throw std::runtime_error("format_number failed");
    return std::string(buf, ptr);
}

double round_sig9(double value) {
    if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    double out = 0;
    std::from_chars(buf, ptr, out);
    return out;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log) {
    out << kHeader << '\n';
    for (const auto& row : log) {
        out << format_number(row.t) << ',' << format_number(row.depth) << ','
            << format_number(row.x) << ',' << to_string(row.mode) << ','
            << format_number(row.bladder_fill) << ',' << format_number(row.cartridge_mol) << ','
            << format_number(row.p_hydro / 1000.0) << ','
            << (row.event ? std::string(to_string(*row.event)) : std::string()) << '\n';
    }
}

std::vector<CsvTrajectoryRow> read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw std::runtime_error("trajectory CSV: missing or unexpected header");
    }
    std::vector<CsvTrajectoryRow> rows;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        const auto f = split_row(line);
        if (f.size() != 8) {
            throw std::runtime_error("trajectory CSV line " + std::to_string(number) +
                                     ": expected 8 fields");
        }
        CsvTrajectoryRow row;
        row.t = parse_double(f[0], number);
        row.depth = parse_double(f[1], number);
        row.x = parse_double(f[2], number);
        row.mode = f[3];
        row.bladder_fill = parse_double(f[4], number);
        row.cartridge_mol = parse_double(f[5], number);
        row.p_hydro_kpa = parse_double(f[6], number);
        row.event = f[7];
        rows.push_back(std::move(row));
    }
    return rows;
}

SummaryReport make_summary_report(const MissionSummary& summary) {
    SummaryReport r;
    r.cycles = summary.cycles_completed;
    r.range_m = summary.total_range;
    r.time_s = summary.total_time;
    r.max_depth_m = summary.max_depth;
    r.energy_j = summary.energy_used;
    if (summary.total_time > 0.0 && summary.total_range > 0.0) {
        const auto pe = power_and_efficiency(summary.energy_used, summary.total_time,
                                             summary.total_range);
        r.power_w = pe.power_w;
        r.efficiency_mw_per_m = pe.efficiency_mw_per_m;
    }
    return r;
}

SummaryReport summary_from_csv(const std::vector<CsvTrajectoryRow>& rows, double initial_moles,
                               double rated_energy) {
    MissionSummary s;
    if (rows.empty()) return make_summary_report(s);
    long transitions = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].mode != rows[i - 1].mode) ++transitions;
    }
    s.transitions = transitions;
    s.cycles_completed = transitions / 2;
    s.total_range = rows.back().x;
    s.total_time = rows.back().t;
    for (const auto& row : rows) s.max_depth = std::max(s.max_depth, row.depth);
    if (initial_moles > 0.0) {
        s.energy_used =
            rated_energy * (rows.front().cartridge_mol - rows.back().cartridge_mol) / initial_moles;
    }
    return make_summary_report(s);
}

void write_summary_json(std::ostream& out, const SummaryReport& r) {
    out << "{\n"
        << "  \"cycles\": " << r.cycles << ",\n"
        << "  \"range_m\": " << format_number(r.range_m) << ",\n"
        << "  \"time_s\": " << format_number(r.time_s) << ",\n"
        << "  \"max_depth_m\": " << format_number(r.max_depth_m) << ",\n"
        << "  \"energy_j\": " << format_number(r.energy_j) << ",\n"
        << "  \"power_w\": " << format_number(r.power_w) << ",\n"
        << "  \"efficiency_mw_per_m\": " << format_number(r.efficiency_mw_per_m) << "\n"
        << "}\n";
}

}  // namespace glidesim
