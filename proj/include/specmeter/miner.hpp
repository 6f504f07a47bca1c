#pragma once

#include <string>
#include <vector>

#include "specmeter/measures.hpp"

namespace specmeter {

struct miner_config {
  std::vector<std::string> templates;  // catalog names; "all" = every
                                       // non-composite template
  double threshold = 0.0;              // minimum log-scope Confidence, in [0,1]
};

struct mined_rule {
  reactive_form rf;
  double confidence = 0;
};

// May be empty (an empty specification is not representable, so the result
// stays a plain rule list until someone asks for a specification).
struct mining_result {
  std::vector<mined_rule> rules;

  bool empty() const { return rules.empty(); }
  specification to_specification(std::string name) const;  // throws if empty
};

// Instantiate every selected template over the log alphabet (unary: each
// activity; binary: ordered distinct pairs), keep rules with >= 1 activation
// and log Confidence >= threshold, order by descending Confidence then name.
mining_result discover(const event_log& log, const miner_config& cfg,
                       unsigned threads = 1);

struct sweep_row {
  double threshold = 0;
  std::size_t rule_count = 0;
  double spec_confidence = 0;  // NaN when no rule was kept
};

std::vector<sweep_row> threshold_sweep(const event_log& log, const miner_config& cfg,
                                       const std::vector<double>& thresholds,
                                       unsigned threads = 1);

}  // namespace specmeter
