#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trispin/concurrence.hpp"

namespace trispin {

struct SweepRow {
    double param = 0.0;
    double max_c12 = 0.0, max_c23 = 0.0, max_c13 = 0.0;
    double tpeak12 = 0.0, tpeak23 = 0.0, tpeak13 = 0.0;  // NaN when no peak
};

// 9-significant-digit rendering shared by every emitter; the decimal
// separator is always '.'.
std::string format_number(double x);

// Header `t,C12,C23,C13`, one row per grid point, '\n' terminated lines,
// no trailing field separator. Byte-identical output for identical input.
std::string series_csv(const ConcurrenceSeries& series);

// Schema {times, c12, c23, c13, meta}. Numbers are passed through the same
// 9-significant-digit rendering as the CSV so both formats carry the same
// values after parsing.
std::string series_json(const ConcurrenceSeries& series, const nlohmann::ordered_json& meta);

// Header `param,maxC12,maxC23,maxC13,tpeak12,tpeak23,tpeak13`.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Writes text to a file, or to stdout when path == "-". Throws SinkError.
void write_text(const std::string& text, const std::string& path);

}  // namespace trispin
