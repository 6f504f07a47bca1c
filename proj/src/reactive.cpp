#include "specmeter/reactive.hpp"

#include <cctype>
#include <stdexcept>

namespace specmeter {

char to_char(rf_label l) {
  switch (l) {
    case rf_label::violated: return '0';
    case rf_label::satisfied: return '1';
    case rf_label::unaffected: return 'x';
  }
  return '?';
}

rf_label_seq label_rf(const reactive_form& rf, const trace& t) {
  label_seq a = label_formula(rf.activator, t);
  label_seq tau = label_formula(rf.target, t);
  rf_label_seq out(t.size(), rf_label::unaffected);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!a[i]) continue;
    out[i] = tau[i] ? rf_label::satisfied : rf_label::violated;
  }
  return out;
}

bool is_activated(const reactive_form& rf, const trace& t) {
  if (t.size() == 0) return false;
  label_seq a = label_formula(rf.activator, t);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) return true;
  return false;
}

const std::vector<template_info>& template_catalog() {
  static const std::vector<template_info> catalog = {
      {"Participation", 1, false, "Start", "F a"},
      {"AtMostOne", 1, false, "a", "!X F a"},
      {"Init", 1, false, "Start", "a"},
      {"End", 1, false, "Start", "F (a & End)"},
      {"RespondedExistence", 2, false, "a", "(O b) | (F b)"},
      {"Response", 2, false, "a", "F b"},
      {"AlternateResponse", 2, false, "a", "X (!a U b)"},
      {"ChainResponse", 2, false, "a", "X b"},
      {"Precedence", 2, false, "b", "O a"},
      {"AlternatePrecedence", 2, false, "b", "Y (!b S a)"},
      {"ChainPrecedence", 2, false, "b", "Y a"},
      {"CoExistence", 2, true, "", ""},  // RespondedExistence both ways
      {"NotResponse", 2, false, "a", "!F b"},
      {"NotChainResponse", 2, false, "a", "!X b"},
      {"NotPrecedence", 2, false, "b", "!O a"},
  };
  return catalog;
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

std::string display_name(const template_info& info, const std::vector<std::string>& args) {
  std::string name = info.name + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) name += ",";
    name += args[i];
  }
  return name + ")";
}

// Substitute the placeholder atoms a/b of a catalog pattern.
formula_ptr substitute(const formula_ptr& pattern, const std::vector<std::string>& args) {
  if (pattern->kind == op::atom) {
    if (pattern->symbol == "a") return make_atom(args[0]);
    if (pattern->symbol == "b") return make_atom(args[1]);
    return pattern;
  }
  switch (arity(pattern->kind)) {
    case 0: return pattern;
    case 1: return make_unary(pattern->kind, substitute(pattern->lhs, args));
    default:
      return make_binary(pattern->kind, substitute(pattern->lhs, args),
                         substitute(pattern->rhs, args));
  }
}

reactive_form build_rule(const template_info& info, const std::vector<std::string>& args) {
  reactive_form rf;
  rf.name = display_name(info, args);
  rf.template_name = info.name;
  rf.args = args;
  rf.activator = substitute(parse_formula(info.activator_pattern), args);
  rf.target = substitute(parse_formula(info.target_pattern), args);
  return rf;
}

}  // namespace

const template_info* find_template(std::string_view name) {
  for (const auto& info : template_catalog())
    if (iequals(info.name, name)) return &info;
  return nullptr;
}

std::vector<reactive_form> instantiate_template(std::string_view name,
                                                const std::vector<std::string>& args) {
  const template_info* info = find_template(name);
  if (!info) throw std::invalid_argument("unknown template: " + std::string(name));
  if (static_cast<int>(args.size()) != info->arity)
    throw std::invalid_argument(info->name + " expects " +
                                std::to_string(info->arity) + " argument(s), got " +
                                std::to_string(args.size()));
  for (const auto& a : args)
    if (a.empty()) throw std::invalid_argument(info->name + ": empty activity name");
  if (info->arity == 2 && args[0] == args[1])
    throw std::invalid_argument(info->name + ": arguments must be distinct");

  if (info->composite) {  // CoExistence
    auto fwd = instantiate_template("RespondedExistence", {args[0], args[1]});
    auto bwd = instantiate_template("RespondedExistence", {args[1], args[0]});
    fwd.insert(fwd.end(), bwd.begin(), bwd.end());
    return fwd;
  }
  return {build_rule(*info, args)};
}

}  // namespace specmeter
