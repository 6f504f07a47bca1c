#pragma once

#include "specmeter/logmodel.hpp"
#include "specmeter/specification.hpp"

namespace specmeter {

// All estimators return a value in [0,1], or quiet NaN for an ill-defined
// conditional (0 denominator). NaN is a value here, never an error.

// Fraction of instants satisfying f.
double p_trace(const formula& f, const trace& t);
// Fraction of instants satisfying both.
double p_joint_trace(const formula& f1, const formula& f2, const trace& t);
// P(f1 | f2) on one trace: |f1 and f2| / |f2|.
double p_cond_trace(const formula& f1, const formula& f2, const trace& t);

// Multiplicity-weighted mean of per-trace fractions:
//   (1/|L|) * sum_i j_i * (count_i / n_i).
// Per-trace counts are exact integers divided once; the outer reduction runs
// sequentially in entry order so reports are bit-reproducible.
double p_log(const formula& f, const event_log& log, unsigned threads = 1);
double p_joint_log(const formula& f1, const formula& f2, const event_log& log,
                   unsigned threads = 1);
// Ratio of the two weighted sums (not a mean of per-trace conditionals).
double p_cond_log(const formula& f1, const formula& f2, const event_log& log,
                  unsigned threads = 1);

// Satisfaction probability of a rule: P(target | activator). NaN when the
// rule is never activated in scope.
double p_rf_trace(const reactive_form& rf, const trace& t);
double p_rf_log(const reactive_form& rf, const event_log& log, unsigned threads = 1);

// Same, for a whole specification via (S_a, S_t); identical across modes
// because the modes only differ off-activation.
double p_spec_trace(const specification& s, const trace& t,
                    spec_mode mode = spec_mode::table);
double p_spec_log(const specification& s, const event_log& log,
                  spec_mode mode = spec_mode::table, unsigned threads = 1);

}  // namespace specmeter
