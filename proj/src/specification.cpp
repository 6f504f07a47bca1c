#include "specmeter/specification.hpp"

#include <stdexcept>

namespace specmeter {

spec_mode parse_spec_mode(std::string_view text) {
  if (text == "formal") return spec_mode::formal;
  if (text == "table") return spec_mode::table;
  throw std::invalid_argument("unknown mode: " + std::string(text) +
                              " (expected 'table' or 'formal')");
}

std::string_view to_string(spec_mode mode) {
  return mode == spec_mode::formal ? "formal" : "table";
}

namespace {

void require_rules(const specification& s) {
  if (s.rfs.empty()) throw std::invalid_argument("specification has no rules");
}

formula_ptr fold_or(const specification& s, formula_ptr (*proj)(const reactive_form&)) {
  formula_ptr acc = proj(s.rfs.front());
  for (std::size_t j = 1; j < s.rfs.size(); ++j)
    acc = make_binary(op::lor, std::move(acc), proj(s.rfs[j]));
  return acc;
}

// AND_j (!a_j | t_j): no rule is triggered-and-broken.
formula_ptr no_violation(const specification& s) {
  auto clause = [](const reactive_form& rf) {
    return make_binary(op::lor, make_unary(op::lnot, rf.activator), rf.target);
  };
  formula_ptr acc = clause(s.rfs.front());
  for (std::size_t j = 1; j < s.rfs.size(); ++j)
    acc = make_binary(op::land, std::move(acc), clause(s.rfs[j]));
  return acc;
}

formula_ptr raw_targets(const specification& s) {
  formula_ptr acc = s.rfs.front().target;
  for (std::size_t j = 1; j < s.rfs.size(); ++j)
    acc = make_binary(op::land, std::move(acc), s.rfs[j].target);
  return acc;
}

}  // namespace

formula_ptr spec_activator(const specification& s) {
  require_rules(s);
  return fold_or(s, [](const reactive_form& rf) { return rf.activator; });
}

formula_ptr spec_target(const specification& s, spec_mode mode) {
  require_rules(s);
  if (mode == spec_mode::formal) return no_violation(s);
  // (S_a & no_violation) | (!S_a & raw targets)
  formula_ptr act = spec_activator(s);
  return make_binary(
      op::lor, make_binary(op::land, act, no_violation(s)),
      make_binary(op::land, make_unary(op::lnot, act), raw_targets(s)));
}

rf_label_seq label_spec(const specification& s, const trace& t, spec_mode mode) {
  return label_rf(spec_as_rf(s, mode), t);
}

reactive_form spec_as_rf(const specification& s, spec_mode mode) {
  reactive_form rf;
  rf.name = s.name;
  rf.activator = spec_activator(s);
  rf.target = spec_target(s, mode);
  return rf;
}

}  // namespace specmeter
