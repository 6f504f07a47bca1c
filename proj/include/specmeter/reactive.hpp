#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specmeter/evaluator.hpp"
#include "specmeter/formula.hpp"
#include "specmeter/logmodel.hpp"

namespace specmeter {

// Tri-valued event outcome of a reactive form: the rule is violated /
// satisfied at an instant only if its activator holds there; everywhere else
// it is unaffected.
enum class rf_label : std::uint8_t { violated = 0, satisfied = 1, unaffected = 2 };

char to_char(rf_label l);  // '0', '1', 'x'

struct reactive_form {
  std::string name;
  formula_ptr activator;
  formula_ptr target;
  // Set when the rule was instantiated from a catalog template; lets
  // specification files round-trip in template form.
  std::string template_name;
  std::vector<std::string> args;
};

using rf_label_seq = std::vector<rf_label>;

rf_label_seq label_rf(const reactive_form& rf, const trace& t);
bool is_activated(const reactive_form& rf, const trace& t);

struct template_info {
  std::string name;      // canonical spelling, e.g. "Response"
  int arity;             // 1 or 2
  bool composite;        // expands to more than one rule (CoExistence)
  std::string activator_pattern;  // surface syntax with placeholders a, b
  std::string target_pattern;
};

const std::vector<template_info>& template_catalog();

// Case-insensitive lookup; nullptr when unknown.
const template_info* find_template(std::string_view name);

// One rule for every template except CoExistence(a,b), which yields the
// RespondedExistence pair in both directions. Throws std::invalid_argument on
// unknown template, wrong arity, or repeated arguments.
std::vector<reactive_form> instantiate_template(std::string_view name,
                                                const std::vector<std::string>& args);

}  // namespace specmeter
