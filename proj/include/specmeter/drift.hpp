#pragma once

#include <string>
#include <vector>

#include "specmeter/measures.hpp"

namespace specmeter {

struct sliced_log {
  std::vector<event_log> windows;
  std::uint64_t dropped_traces = 0;  // trailing occurrences no window covers
};

// Windows of `size` consecutive trace occurrences (ordered view) starting at
// offsets 0, slide, 2*slide, ...; a trailing partial window is dropped.
// Throws std::invalid_argument when the log holds fewer traces than one
// window or size/slide is 0.
sliced_log slice_log(const event_log& log, std::uint64_t size, std::uint64_t slide);

struct window_series {
  std::vector<std::uint64_t> window_index;       // 0-based
  std::vector<std::string> window_start;         // first event timestamp, may be ""
  std::vector<std::string> measures;             // selected measure names
  std::vector<std::vector<double>> values;       // [measure][window]
  bool normalized = false;
};

// Log-scope measure values per window. `measures` uses catalog names
// ("all" handled by the caller via measure_catalog()).
window_series measure_series(const specification& s,
                             const std::vector<event_log>& windows,
                             const std::vector<std::string>& measures,
                             spec_mode mode = spec_mode::table,
                             bool normalized = false, unsigned threads = 1);

struct series_stat {
  std::string measure;
  double mean = 0;
  double std_dev = 0;  // population
  double cv = 0;       // std_dev / mean, NaN when mean == 0
  std::size_t excluded_nan = 0;
};

// NaN windows are excluded from the statistics (their count is reported).
std::vector<series_stat> series_stats(const window_series& series);

// Descending by (cv, std_dev, mean), NaN last, measure name as final
// tie-break: a total, deterministic order.
void sort_stats(std::vector<series_stat>& stats);

}  // namespace specmeter
