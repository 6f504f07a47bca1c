#include "specmeter/miner.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "specmeter/parallel.hpp"

namespace specmeter {

specification mining_result::to_specification(std::string name) const {
  if (rules.empty())
    throw std::invalid_argument("cannot build a specification from zero rules");
  specification s;
  s.name = std::move(name);
  for (const auto& r : rules) s.rfs.push_back(r.rf);
  return s;
}

namespace {

std::vector<reactive_form> candidates(const event_log& log,
                                      const std::vector<std::string>& templates) {
  std::vector<std::string> alphabet = log_alphabet(log);
  std::vector<const template_info*> selected;
  bool all = templates.empty();
  for (const auto& name : templates) {
    if (name == "all") {
      all = true;
      continue;
    }
    const template_info* info = find_template(name);
    if (!info) throw std::invalid_argument("unknown template: " + name);
    selected.push_back(info);
  }
  if (all)  // every non-composite template, catalog order
    for (const auto& info : template_catalog())
      if (!info.composite) selected.push_back(&info);

  std::vector<reactive_form> rules;
  std::set<std::string> seen;  // composite templates may duplicate rules
  auto add = [&](std::vector<reactive_form> batch) {
    for (auto& rf : batch)
      if (seen.insert(rf.name).second) rules.push_back(std::move(rf));
  };
  for (const auto* info : selected) {
    if (info->arity == 1) {
      for (const auto& a : alphabet) add(instantiate_template(info->name, {a}));
    } else {
      for (const auto& a : alphabet)
        for (const auto& b : alphabet)
          if (a != b) add(instantiate_template(info->name, {a, b}));
    }
  }
  return rules;
}

}  // namespace

mining_result discover(const event_log& log, const miner_config& cfg,
                       unsigned threads) {
  if (cfg.threshold < 0.0 || cfg.threshold > 1.0)
    throw std::invalid_argument("threshold must lie in [0,1]");
  std::vector<reactive_form> rules = candidates(log, cfg.templates);

  std::vector<double> confidence(rules.size());
  parallel_for(rules.size(), threads, [&](std::size_t i) {
    confidence[i] = p_rf_log(rules[i], log);  // NaN when never activated
  });

  mining_result result;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (std::isnan(confidence[i])) continue;  // vacuous rule
    if (confidence[i] < cfg.threshold) continue;
    result.rules.push_back({std::move(rules[i]), confidence[i]});
  }
  std::sort(result.rules.begin(), result.rules.end(),
            [](const mined_rule& a, const mined_rule& b) {
              if (a.confidence != b.confidence) return a.confidence > b.confidence;
              return a.rf.name < b.rf.name;
            });
  return result;
}

std::vector<sweep_row> threshold_sweep(const event_log& log, const miner_config& cfg,
                                       const std::vector<double>& thresholds,
                                       unsigned threads) {
  std::vector<sweep_row> table;
  table.reserve(thresholds.size());
  for (double th : thresholds) {
    miner_config step = cfg;
    step.threshold = th;
    mining_result mined = discover(log, step, threads);
    sweep_row row;
    row.threshold = th;
    row.rule_count = mined.rules.size();
    row.spec_confidence = std::numeric_limits<double>::quiet_NaN();
    if (!mined.empty()) {
      specification s = mined.to_specification("mined");
      row.spec_confidence = p_spec_log(s, log, spec_mode::table, threads);
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace specmeter
