#include "specmeter/estimators.hpp"

#include <limits>

#include "specmeter/parallel.hpp"

namespace specmeter {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

double safe_div(double num, double den) {
  return den == 0.0 ? nan_value : num / den;
}

std::size_t count_ones(const label_seq& bits) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) c += bits[i];
  return c;
}

std::size_t count_both(const label_seq& a, const label_seq& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i] && b[i];
  return c;
}

// Multiplicity-weighted sum of per-trace fractions, one count per entry. The
// per-entry pass may run on several threads (slot-per-entry writes); the
// reduction is a fixed-order sequential sum so results never depend on the
// schedule.
template <typename CountFn>
double weighted_fraction_sum(const event_log& log, unsigned threads, CountFn&& count) {
  const auto& entries = log.entries();
  std::vector<double> fraction(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    const auto& e = entries[i];
    fraction[i] = static_cast<double>(count(e.t)) / static_cast<double>(e.t.size());
  });
  double acc = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    acc += static_cast<double>(entries[i].multiplicity) * fraction[i];
  return acc;
}

}  // namespace

double p_trace(const formula& f, const trace& t) {
  return static_cast<double>(count_ones(label_formula(f, t))) /
         static_cast<double>(t.size());
}

double p_joint_trace(const formula& f1, const formula& f2, const trace& t) {
  return static_cast<double>(
             count_both(label_formula(f1, t), label_formula(f2, t))) /
         static_cast<double>(t.size());
}

double p_cond_trace(const formula& f1, const formula& f2, const trace& t) {
  label_seq l1 = label_formula(f1, t);
  label_seq l2 = label_formula(f2, t);
  return safe_div(static_cast<double>(count_both(l1, l2)),
                  static_cast<double>(count_ones(l2)));
}

double p_log(const formula& f, const event_log& log, unsigned threads) {
  double sum = weighted_fraction_sum(log, threads, [&](const trace& t) {
    return count_ones(label_formula(f, t));
  });
  return sum / static_cast<double>(log.cardinality());
}

double p_joint_log(const formula& f1, const formula& f2, const event_log& log,
                   unsigned threads) {
  double sum = weighted_fraction_sum(log, threads, [&](const trace& t) {
    return count_both(label_formula(f1, t), label_formula(f2, t));
  });
  return sum / static_cast<double>(log.cardinality());
}

double p_cond_log(const formula& f1, const formula& f2, const event_log& log,
                  unsigned threads) {
  return safe_div(p_joint_log(f1, f2, log, threads), p_log(f2, log, threads));
}

double p_rf_trace(const reactive_form& rf, const trace& t) {
  return p_cond_trace(*rf.target, *rf.activator, t);
}

double p_rf_log(const reactive_form& rf, const event_log& log, unsigned threads) {
  return p_cond_log(*rf.target, *rf.activator, log, threads);
}

double p_spec_trace(const specification& s, const trace& t, spec_mode mode) {
  return p_rf_trace(spec_as_rf(s, mode), t);
}

double p_spec_log(const specification& s, const event_log& log, spec_mode mode,
                  unsigned threads) {
  return p_rf_log(spec_as_rf(s, mode), log, threads);
}

}  // namespace specmeter
