#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace specmeter {

// One activity symbol per event (Declare assumption). Attributes are carried
// verbatim for reporting (e.g. time:timestamp) and ignored by the semantics.
struct event {
  std::string activity;
  std::map<std::string, std::string> attributes;
};

struct trace {
  std::vector<event> events;

  std::size_t size() const { return events.size(); }
  const event& at(std::size_t instant) const {  // 1-based
    if (instant < 1 || instant > events.size())
      throw std::out_of_range("instant out of range");
    return events[instant - 1];
  }
};

// "a,b,c" -> 3-event trace. Tokens may be double-quoted to carry commas.
trace parse_trace_string(std::string_view text);

struct log_entry {
  trace t;
  std::uint64_t multiplicity = 1;
};

class event_log;

// Accumulates traces, merging structurally identical ones (activity sequences
// only). Entry order is first-appearance order; the ordered view keeps one
// slot per occurrence for windowing.
class log_builder {
 public:
  void add(trace t, std::uint64_t multiplicity = 1);
  event_log build() &&;

 private:
  std::vector<log_entry> entries_;
  std::vector<std::uint32_t> order_;
  std::map<std::string, std::size_t> index_;
};

class event_log {
 public:
  const std::vector<log_entry>& entries() const { return entries_; }
  // Entry index per trace occurrence, original order, length == cardinality().
  const std::vector<std::uint32_t>& ordered_view() const { return order_; }
  std::uint64_t cardinality() const { return cardinality_; }
  bool empty() const { return entries_.empty(); }

 private:
  friend class log_builder;
  std::vector<log_entry> entries_;
  std::vector<std::uint32_t> order_;
  std::uint64_t cardinality_ = 0;
};

struct log_summary_info {
  std::size_t unique_traces = 0;
  std::uint64_t cardinality = 0;
  std::size_t alphabet_size = 0;
  std::uint64_t event_count = 0;  // multiplicity-weighted
};

log_summary_info log_summary(const event_log& log);

// Activity alphabet in lexicographic order.
std::vector<std::string> log_alphabet(const event_log& log);

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct load_stats {
  std::size_t skipped_empty_traces = 0;
};

struct csv_columns {
  std::string case_id = "case_id";
  std::string activity = "activity";
  std::string timestamp = "timestamp";  // optional: absent column is fine
};

// CSV with a header row; events grouped by case id, ordered by timestamp when
// the column exists (stable, so ties keep file order). RFC-4180 quoting.
event_log load_csv(const std::string& path, const csv_columns& columns = {},
                   load_stats* stats = nullptr);

// IEEE 1849 subset: <log><trace><event><string key="concept:name" .../>.
event_log load_xes(const std::string& path, load_stats* stats = nullptr);

// One trace per line: "multiplicity;a,b,c" (multiplicity optional, default 1).
// Blank lines and lines starting with '#' are skipped.
event_log load_text(const std::string& path, load_stats* stats = nullptr);

// Dispatch on fmt in {"xes","csv","txt"} or, for "auto", the file extension.
event_log load_log(const std::string& path, const std::string& fmt = "auto",
                   const csv_columns& columns = {}, load_stats* stats = nullptr);

}  // namespace specmeter
