#pragma once

#include <string>
#include <vector>

#include "specmeter/estimators.hpp"

namespace specmeter {

// Joint satisfaction statistics of an (activator, target) pair in one scope.
// Derived fields keep the base identities exact: p_a = p_at + p_a_not_t.
struct probability_bundle {
  double p_a = 0;          // P(activator)
  double p_t = 0;          // P(target)
  double p_at = 0;         // P(activator and target)
  double p_a_not_t = 0;    // P(activator and not target)
  double p_not_a_not_t = 0;

  double p_not_a() const { return 1.0 - p_a; }
  double p_not_t() const { return 1.0 - p_t; }
  double confidence() const;  // P(target | activator), NaN on 0 denominator
  double recall() const;      // P(activator | target)
};

probability_bundle bundle(const reactive_form& rf, const trace& t);
probability_bundle bundle(const reactive_form& rf, const event_log& log,
                          unsigned threads = 1);
probability_bundle bundle(const specification& s, const trace& t,
                          spec_mode mode = spec_mode::table);
probability_bundle bundle(const specification& s, const event_log& log,
                          spec_mode mode = spec_mode::table, unsigned threads = 1);

// Declared output range of a measure; drives the [0,1] normalization.
enum class value_range {
  unit,         // [0,1]        -> identity
  signed_unit,  // [-1,1]       -> (x+1)/2
  nonneg,       // [0,inf)      -> x/(1+x)
  le_one,       // (-inf,1]     -> 1/(2-x)
  real,         // (-inf,inf)   -> (1 + x/(1+|x|))/2
};

struct measure_def {
  std::string name;  // canonical CLI spelling, e.g. "certainty-factor"
  value_range range;
  double (*fn)(const probability_bundle&);
};

// 24 measures: Support, Confidence, Recall, Specificity, Accuracy, Lift,
// Leverage, Added Value, Jaccard, Certainty Factor, Klosgen, Conviction,
// J-Measure, One-/Two-Way Support, Piatetsky-Shapiro, Cosine, Loevinger,
// Information Gain, Sebag-Schoenauer, Least Contradiction, Odd Multiplier,
// Example&Counterexample Rate, Zhang.
const std::vector<measure_def>& measure_catalog();

// Case-insensitive; '-', '_' and spaces are interchangeable; aliases
// "precision" -> confidence, "interest" -> lift. nullptr when unknown.
const measure_def* find_measure(std::string_view name);

// Undefined arithmetic (x/0, log of non-positive) yields NaN.
double compute_measure(const measure_def& def, const probability_bundle& b);

// Monotone map of the declared range onto [0,1]; NaN passes through.
double normalize(double value, value_range range);

}  // namespace specmeter
