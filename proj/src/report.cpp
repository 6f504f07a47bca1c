#include "specmeter/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "specmeter/version.hpp"

namespace specmeter {

std::string format_value(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

namespace {

// CSV field quoting per RFC 4180; subject/measure names may hold commas.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// NaN and infinities have no JSON literal; encode them as strings.
nlohmann::ordered_json json_value(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

void write_report_csv(const measure_report& report, std::ostream& out) {
  out << "subject,scope,measure,value,normalized\n";
  for (const auto& row : report.rows) {
    out << csv_field(row.subject) << ',' << csv_field(row.scope) << ','
        << csv_field(row.measure) << ',' << format_value(row.value) << ','
        << format_value(row.normalized) << '\n';
  }
}

void write_report_json(const measure_report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["tool"] = tool_name;
  doc["version"] = tool_version;
  doc["log"] = report.log_path;
  doc["specification"] = report.spec_name;
  doc["mode"] = report.mode;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["subject"] = row.subject;
    r["scope"] = row.scope;
    r["measure"] = row.measure;
    r["value"] = json_value(row.value);
    r["normalized"] = json_value(row.normalized);
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

void write_series_csv(const series_report& report, std::ostream& out) {
  out << "window_index,window_start,measure,value\n";
  const auto& s = report.series;
  for (std::size_t w = 0; w < s.window_index.size(); ++w) {
    for (std::size_t m = 0; m < s.measures.size(); ++m) {
      out << s.window_index[w] << ',' << csv_field(s.window_start[w]) << ','
          << csv_field(s.measures[m]) << ',' << format_value(s.values[m][w])
          << '\n';
    }
  }
}

void write_stats_csv(const series_report& report, std::ostream& out) {
  out << "measure,mean,std_dev,cv,excluded_nan\n";
  for (const auto& st : report.stats) {
    out << csv_field(st.measure) << ',' << format_value(st.mean) << ','
        << format_value(st.std_dev) << ',' << format_value(st.cv) << ','
        << st.excluded_nan << '\n';
  }
}

void write_series_json(const series_report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["tool"] = tool_name;
  doc["version"] = tool_version;
  doc["log"] = report.log_path;
  doc["specification"] = report.spec_name;
  doc["mode"] = report.mode;
  doc["window_size"] = report.window_size;
  doc["slide"] = report.slide;
  doc["dropped_traces"] = report.dropped_traces;
  doc["normalized"] = report.series.normalized;

  doc["windows"] = nlohmann::ordered_json::array();
  const auto& s = report.series;
  for (std::size_t w = 0; w < s.window_index.size(); ++w) {
    nlohmann::ordered_json win;
    win["index"] = s.window_index[w];
    win["start"] = s.window_start[w];
    win["values"] = nlohmann::ordered_json::object();
    for (std::size_t m = 0; m < s.measures.size(); ++m)
      win["values"][s.measures[m]] = json_value(s.values[m][w]);
    doc["windows"].push_back(std::move(win));
  }

  doc["stats"] = nlohmann::ordered_json::array();
  for (const auto& st : report.stats) {
    nlohmann::ordered_json j;
    j["measure"] = st.measure;
    j["mean"] = json_value(st.mean);
    j["std_dev"] = json_value(st.std_dev);
    j["cv"] = json_value(st.cv);
    j["excluded_nan"] = st.excluded_nan;
    doc["stats"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

void write_sweep_csv(const std::vector<sweep_row>& rows, std::ostream& out) {
  out << "threshold,rule_count,spec_confidence\n";
  for (const auto& row : rows) {
    out << format_value(row.threshold) << ',' << row.rule_count << ','
        << format_value(row.spec_confidence) << '\n';
  }
}

}  // namespace specmeter
