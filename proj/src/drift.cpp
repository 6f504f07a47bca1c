#include "specmeter/drift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace specmeter {

namespace {
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
}

sliced_log slice_log(const event_log& log, std::uint64_t size, std::uint64_t slide) {
  if (size == 0 || slide == 0)
    throw std::invalid_argument("window size and slide must be >= 1");
  const auto& view = log.ordered_view();
  if (view.size() < size)
    throw std::invalid_argument("log holds fewer traces (" +
                                std::to_string(view.size()) +
                                ") than one window (" + std::to_string(size) + ")");
  sliced_log out;
  std::uint64_t covered_end = 0;
  for (std::uint64_t offset = 0; offset + size <= view.size(); offset += slide) {
    log_builder builder;
    for (std::uint64_t k = offset; k < offset + size; ++k) {
      const auto& entry = log.entries()[view[k]];
      trace t = entry.t;  // one occurrence per view slot
      builder.add(std::move(t), 1);
    }
    out.windows.push_back(std::move(builder).build());
    covered_end = offset + size;
  }
  out.dropped_traces = view.size() - covered_end;
  return out;
}

window_series measure_series(const specification& s,
                             const std::vector<event_log>& windows,
                             const std::vector<std::string>& measures,
                             spec_mode mode, bool normalized, unsigned threads) {
  if (windows.empty()) throw std::invalid_argument("no windows");
  std::vector<const measure_def*> defs;
  defs.reserve(measures.size());
  for (const auto& name : measures) {
    const measure_def* def = find_measure(name);
    if (!def) throw std::invalid_argument("unknown measure: " + name);
    defs.push_back(def);
  }

  window_series series;
  series.normalized = normalized;
  for (const auto* def : defs) series.measures.push_back(def->name);
  series.values.assign(defs.size(), std::vector<double>(windows.size(), 0));

  for (std::size_t w = 0; w < windows.size(); ++w) {
    series.window_index.push_back(w);
    const auto& first_trace = windows[w].entries()[windows[w].ordered_view()[0]].t;
    auto ts = first_trace.events.front().attributes.find("time:timestamp");
    series.window_start.push_back(
        ts == first_trace.events.front().attributes.end() ? "" : ts->second);
    probability_bundle b = bundle(s, windows[w], mode, threads);
    for (std::size_t m = 0; m < defs.size(); ++m) {
      double v = compute_measure(*defs[m], b);
      series.values[m][w] = normalized ? normalize(v, defs[m]->range) : v;
    }
  }
  return series;
}

std::vector<series_stat> series_stats(const window_series& series) {
  std::vector<series_stat> stats;
  stats.reserve(series.measures.size());
  for (std::size_t m = 0; m < series.measures.size(); ++m) {
    series_stat st;
    st.measure = series.measures[m];
    double sum = 0;
    std::size_t k = 0;
    for (double v : series.values[m]) {
      if (std::isnan(v)) {
        ++st.excluded_nan;
        continue;
      }
      sum += v;
      ++k;
    }
    if (k == 0) {
      st.mean = st.std_dev = st.cv = nan_value;
    } else {
      st.mean = sum / static_cast<double>(k);
      double sq = 0;
      for (double v : series.values[m]) {
        if (std::isnan(v)) continue;
        sq += (v - st.mean) * (v - st.mean);
      }
      st.std_dev = std::sqrt(sq / static_cast<double>(k));  // population
      st.cv = st.mean == 0.0 ? nan_value : st.std_dev / st.mean;
    }
    stats.push_back(std::move(st));
  }
  return stats;
}

void sort_stats(std::vector<series_stat>& stats) {
  // Descending (cv, std, mean); NaN sorts after every number; name breaks
  // remaining ties so the order is total.
  auto cmp = [](double a, double b) -> int {  // <0: a first, >0: b first
    bool na = std::isnan(a), nb = std::isnan(b);
    if (na || nb) return na == nb ? 0 : (na ? 1 : -1);
    if (a != b) return a > b ? -1 : 1;
    return 0;
  };
  std::sort(stats.begin(), stats.end(),
            [&](const series_stat& x, const series_stat& y) {
              if (int c = cmp(x.cv, y.cv)) return c < 0;
              if (int c = cmp(x.std_dev, y.std_dev)) return c < 0;
              if (int c = cmp(x.mean, y.mean)) return c < 0;
              return x.measure < y.measure;
            });
}

}  // namespace specmeter
