#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specmeter/drift.hpp"
#include "specmeter/measures.hpp"
#include "specmeter/miner.hpp"

namespace specmeter {

// One measured value. subject = rule or specification name; scope = "log" or
// "t<k>" (unique-trace ordinal, first-appearance order).
struct measure_row {
  std::string subject;
  std::string scope;
  std::string measure;
  double value = 0;
  double normalized = 0;
};

struct measure_report {
  std::string log_path;
  std::string spec_name;
  std::string mode;  // "table" | "formal"
  std::vector<measure_row> rows;
};

// CSV: fixed 6-decimal floats, NaN printed as the bare token NaN.
// JSON: full-precision numbers; NaN encoded as the string "NaN" to keep the
// document valid. Field order is fixed, so identical inputs give identical
// bytes.
void write_report_csv(const measure_report& report, std::ostream& out);
void write_report_json(const measure_report& report, std::ostream& out);

struct series_report {
  std::string log_path;
  std::string spec_name;
  std::string mode;
  std::uint64_t window_size = 0;
  std::uint64_t slide = 0;
  std::uint64_t dropped_traces = 0;
  window_series series;
  std::vector<series_stat> stats;  // already sorted
};

// Long format: window_index,window_start,measure,value.
void write_series_csv(const series_report& report, std::ostream& out);
// measure,mean,std_dev,cv,excluded_nan.
void write_stats_csv(const series_report& report, std::ostream& out);
void write_series_json(const series_report& report, std::ostream& out);

void write_sweep_csv(const std::vector<sweep_row>& rows, std::ostream& out);

// "0.123456" / "NaN"; shared by every CSV writer.
std::string format_value(double v);

}  // namespace specmeter
