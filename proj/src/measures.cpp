#include "specmeter/measures.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "specmeter/parallel.hpp"

namespace specmeter {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

double safe_div(double num, double den) {
  return den == 0.0 ? nan_value : num / den;
}

// Natural / base-2 logarithm with the undefined-input -> NaN policy.
double checked_log(double x) { return x > 0.0 ? std::log(x) : nan_value; }
double checked_log2(double x) { return x > 0.0 ? std::log2(x) : nan_value; }

// std::fmax drops NaN; measures need it to propagate.
double strict_max(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return nan_value;
  return a > b ? a : b;
}

struct tally {
  std::uint64_t a = 0, t = 0, at = 0, not_a_not_t = 0, n = 0;
};

tally count_pair(const formula& act, const formula& tgt, const trace& tr) {
  label_seq la = label_formula(act, tr);
  label_seq lt = label_formula(tgt, tr);
  tally c;
  c.n = tr.size();
  for (std::size_t i = 0; i < la.size(); ++i) {
    c.a += la[i];
    c.t += lt[i];
    c.at += la[i] && lt[i];
    c.not_a_not_t += !la[i] && !lt[i];
  }
  return c;
}

probability_bundle bundle_from_counts(const tally& c) {
  probability_bundle b;
  const double n = static_cast<double>(c.n);
  b.p_a = static_cast<double>(c.a) / n;
  b.p_t = static_cast<double>(c.t) / n;
  b.p_at = static_cast<double>(c.at) / n;
  b.p_a_not_t = static_cast<double>(c.a - c.at) / n;
  b.p_not_a_not_t = static_cast<double>(c.not_a_not_t) / n;
  return b;
}

probability_bundle bundle_pair(const formula& act, const formula& tgt,
                               const event_log& log, unsigned threads) {
  const auto& entries = log.entries();
  std::vector<tally> tallies(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    tallies[i] = count_pair(act, tgt, entries[i].t);
  });
  // One fixed-order reduction per field; per-trace fractions are exact
  // integer counts divided once.
  double sa = 0, st = 0, sat = 0, sanot = 0, snn = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double w = static_cast<double>(entries[i].multiplicity);
    const double n = static_cast<double>(tallies[i].n);
    sa += w * (static_cast<double>(tallies[i].a) / n);
    st += w * (static_cast<double>(tallies[i].t) / n);
    sat += w * (static_cast<double>(tallies[i].at) / n);
    sanot += w * (static_cast<double>(tallies[i].a - tallies[i].at) / n);
    snn += w * (static_cast<double>(tallies[i].not_a_not_t) / n);
  }
  const double total = static_cast<double>(log.cardinality());
  probability_bundle b;
  b.p_a = sa / total;
  b.p_t = st / total;
  b.p_at = sat / total;
  b.p_a_not_t = sanot / total;
  b.p_not_a_not_t = snn / total;
  return b;
}

}  // namespace

double probability_bundle::confidence() const { return safe_div(p_at, p_a); }
double probability_bundle::recall() const { return safe_div(p_at, p_t); }

probability_bundle bundle(const reactive_form& rf, const trace& t) {
  return bundle_from_counts(count_pair(*rf.activator, *rf.target, t));
}

probability_bundle bundle(const reactive_form& rf, const event_log& log,
                          unsigned threads) {
  return bundle_pair(*rf.activator, *rf.target, log, threads);
}

probability_bundle bundle(const specification& s, const trace& t, spec_mode mode) {
  return bundle(spec_as_rf(s, mode), t);
}

probability_bundle bundle(const specification& s, const event_log& log,
                          spec_mode mode, unsigned threads) {
  return bundle(spec_as_rf(s, mode), log, threads);
}

namespace {

using B = probability_bundle;

double m_support(const B& b) { return b.p_at; }
double m_confidence(const B& b) { return b.confidence(); }
double m_recall(const B& b) { return b.recall(); }
double m_specificity(const B& b) { return safe_div(b.p_not_a_not_t, b.p_not_a()); }
double m_accuracy(const B& b) { return b.p_at + b.p_not_a_not_t; }
double m_lift(const B& b) { return safe_div(b.p_at, b.p_a * b.p_t); }
double m_leverage(const B& b) { return b.confidence() - b.p_a * b.p_t; }
double m_added_value(const B& b) { return b.confidence() - b.p_t; }
double m_jaccard(const B& b) { return safe_div(b.p_at, b.p_a + b.p_t - b.p_at); }
double m_certainty_factor(const B& b) {
  return safe_div(b.confidence() - b.p_t, 1.0 - b.p_t);
}
double m_klosgen(const B& b) {
  return std::sqrt(b.p_at) *
         strict_max(b.confidence() - b.p_t, b.recall() - b.p_a);
}
double m_conviction(const B& b) {
  return safe_div(b.p_a * b.p_not_t(), b.p_a_not_t);
}
// coef * log(arg) with the limit convention coef == 0 -> 0 (the measure's
// standard reading of 0*log 0); NaN coefficients still propagate.
double log_term(double coef, double arg) {
  if (std::isnan(coef)) return nan_value;
  if (coef == 0.0) return 0.0;
  return coef * checked_log(arg);
}
double log2_term(double coef, double arg) {
  if (std::isnan(coef)) return nan_value;
  if (coef == 0.0) return 0.0;
  return coef * checked_log2(arg);
}
double m_j_measure(const B& b) {
  double conf = b.confidence();
  if (std::isnan(conf)) return nan_value;
  return log_term(b.p_at, safe_div(conf, b.p_t)) +
         log_term(b.p_a_not_t, safe_div(1.0 - conf, b.p_not_t()));
}
double m_one_way_support(const B& b) {
  return log2_term(b.confidence(), safe_div(b.p_at, b.p_a * b.p_t));
}
double m_two_way_support(const B& b) {
  return log2_term(b.p_at, safe_div(b.p_at, b.p_a * b.p_t));
}
double m_piatetsky_shapiro(const B& b) { return b.p_at - b.p_a * b.p_t; }
double m_cosine(const B& b) { return safe_div(b.p_at, std::sqrt(b.p_a * b.p_t)); }
double m_loevinger(const B& b) {
  return 1.0 - safe_div(b.p_a * b.p_not_t(), b.p_a_not_t);
}
double m_information_gain(const B& b) {
  return checked_log(safe_div(b.p_at, b.p_a * b.p_t));
}
double m_sebag_schoenauer(const B& b) { return safe_div(b.p_at, b.p_a_not_t); }
double m_least_contradiction(const B& b) {
  return safe_div(b.p_at - b.p_a_not_t, b.p_t);
}
double m_odd_multiplier(const B& b) {
  return safe_div(b.p_at * b.p_not_t(), b.p_t * b.p_a_not_t);
}
double m_example_counterexample_rate(const B& b) {
  return 1.0 - safe_div(b.p_a_not_t, b.p_at);
}
double m_zhang(const B& b) {
  return safe_div(b.p_at - b.p_a * b.p_t,
                  strict_max(b.p_at * b.p_not_t(), b.p_t * b.p_a_not_t));
}

std::string fold_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

const std::vector<measure_def>& measure_catalog() {
  static const std::vector<measure_def> catalog = {
      {"support", value_range::unit, m_support},
      {"confidence", value_range::unit, m_confidence},
      {"recall", value_range::unit, m_recall},
      {"specificity", value_range::unit, m_specificity},
      {"accuracy", value_range::unit, m_accuracy},
      {"lift", value_range::nonneg, m_lift},
      {"leverage", value_range::signed_unit, m_leverage},
      {"added-value", value_range::signed_unit, m_added_value},
      {"jaccard", value_range::unit, m_jaccard},
      {"certainty-factor", value_range::signed_unit, m_certainty_factor},
      {"klosgen", value_range::signed_unit, m_klosgen},
      {"conviction", value_range::nonneg, m_conviction},
      {"j-measure", value_range::real, m_j_measure},
      {"one-way-support", value_range::real, m_one_way_support},
      {"two-way-support", value_range::real, m_two_way_support},
      {"piatetsky-shapiro", value_range::signed_unit, m_piatetsky_shapiro},
      {"cosine", value_range::nonneg, m_cosine},
      {"loevinger", value_range::le_one, m_loevinger},
      {"information-gain", value_range::real, m_information_gain},
      {"sebag-schoenauer", value_range::nonneg, m_sebag_schoenauer},
      {"least-contradiction", value_range::real, m_least_contradiction},
      {"odd-multiplier", value_range::nonneg, m_odd_multiplier},
      {"example-counterexample-rate", value_range::le_one, m_example_counterexample_rate},
      {"zhang", value_range::real, m_zhang},
  };
  return catalog;
}

const measure_def* find_measure(std::string_view name) {
  std::string folded = fold_name(name);
  if (folded == "precision") folded = "confidence";
  if (folded == "interest") folded = "lift";
  for (const auto& def : measure_catalog())
    if (fold_name(def.name) == folded) return &def;
  return nullptr;
}

double compute_measure(const measure_def& def, const probability_bundle& b) {
  return def.fn(b);
}

double normalize(double value, value_range range) {
  if (std::isnan(value)) return value;
  switch (range) {
    case value_range::unit:
      return value;
    case value_range::signed_unit:
      return (value + 1.0) / 2.0;
    case value_range::nonneg:
      return std::isinf(value) ? 1.0 : value / (1.0 + value);
    case value_range::le_one:
      return std::isinf(value) ? 0.0 : 1.0 / (2.0 - value);
    case value_range::real:
      if (std::isinf(value)) return value > 0 ? 1.0 : 0.0;
      return (1.0 + value / (1.0 + std::fabs(value))) / 2.0;
  }
  return value;
}

}  // namespace specmeter
