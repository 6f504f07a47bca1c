#include "specmeter/specfile.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "specmeter/logmodel.hpp"

namespace specmeter {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.rfind('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

reactive_form raw_rule(const std::string& activator, const std::string& target,
                       std::string name) {
  reactive_form rf;
  rf.activator = parse_formula(activator);
  rf.target = parse_formula(target);
  rf.name = name.empty()
                ? to_string(*rf.activator) + " |> " + to_string(*rf.target)
                : std::move(name);
  return rf;
}

// Template(arg1,arg2) with optionally quoted arguments.
std::vector<reactive_form> template_rule(const std::string& line) {
  std::size_t open = line.find('(');
  if (open == std::string::npos || line.back() != ')')
    throw parse_error("malformed template rule: " + line);
  std::string name = trim(line.substr(0, open));
  std::string args_text = line.substr(open + 1, line.size() - open - 2);
  std::vector<std::string> args;
  if (!trim(args_text).empty()) {
    trace arg_trace = parse_trace_string(args_text);  // same comma syntax
    for (const auto& ev : arg_trace.events) args.push_back(ev.activity);
  }
  try {
    return instantiate_template(name, args);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

}  // namespace

specification parse_spec_text(const std::string& text, const std::string& fallback_name) {
  specification s;
  s.name = fallback_name;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    if (body.rfind("name:", 0) == 0) {
      std::string name = trim(body.substr(5));
      if (!name.empty()) s.name = name;
      continue;
    }
    try {
      std::size_t sep = body.find("|>");
      if (sep != std::string::npos) {
        std::string act = trim(body.substr(0, sep));
        std::string tgt = trim(body.substr(sep + 2));
        if (act.empty() || tgt.empty())
          throw parse_error("rule needs both an activator and a target");
        s.rfs.push_back(raw_rule(act, tgt, ""));
      } else {
        for (auto& rf : template_rule(body)) s.rfs.push_back(std::move(rf));
      }
    } catch (const syntax_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (s.rfs.empty()) throw parse_error("specification file contains no rules");
  return s;
}

specification parse_spec_json(const std::string& text, const std::string& fallback_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rules") || !doc["rules"].is_array())
    throw parse_error("specification JSON needs a top-level 'rules' array");

  specification s;
  s.name = doc.value("name", fallback_name);
  if (s.name.empty()) s.name = fallback_name;
  std::size_t index = 0;
  for (const auto& rule : doc["rules"]) {
    ++index;
    try {
      if (rule.contains("template")) {
        std::vector<std::string> args;
        for (const auto& a : rule.value("args", nlohmann::json::array()))
          args.push_back(a.get<std::string>());
        for (auto& rf : instantiate_template(rule["template"].get<std::string>(), args))
          s.rfs.push_back(std::move(rf));
      } else if (rule.contains("activator") && rule.contains("target")) {
        s.rfs.push_back(raw_rule(rule["activator"].get<std::string>(),
                                 rule["target"].get<std::string>(),
                                 rule.value("name", "")));
      } else {
        throw parse_error("rule needs 'template' or 'activator'+'target'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("rule " + std::to_string(index) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw parse_error("rule " + std::to_string(index) + ": " + e.what());
    } catch (const syntax_error& e) {
      throw parse_error("rule " + std::to_string(index) + ": " + e.what());
    } catch (const parse_error& e) {
      throw parse_error("rule " + std::to_string(index) + ": " + e.what());
    }
  }
  if (s.rfs.empty()) throw parse_error("specification JSON contains no rules");
  return s;
}

specification load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = std::move(buf).str();
  std::string stem = file_stem(path);
  std::size_t dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  try {
    if (ext == "json") return parse_spec_json(text, stem);
    return parse_spec_text(text, stem);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

namespace {

nlohmann::ordered_json rule_to_json(const reactive_form& rf) {
  nlohmann::ordered_json rule;
  if (!rf.template_name.empty()) {
    rule["template"] = rf.template_name;
    rule["args"] = rf.args;
  } else {
    rule["name"] = rf.name;
    rule["activator"] = to_string(*rf.activator);
    rule["target"] = to_string(*rf.target);
  }
  return rule;
}

}  // namespace

void write_spec_json(const specification& s, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["name"] = s.name;
  doc["rules"] = nlohmann::ordered_json::array();
  for (const auto& rf : s.rfs) doc["rules"].push_back(rule_to_json(rf));
  out << doc.dump(2) << '\n';
}

void write_spec_json(const mining_result& mined, const std::string& name,
                     std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["rules"] = nlohmann::ordered_json::array();
  for (const auto& rule : mined.rules) {
    auto entry = rule_to_json(rule.rf);
    entry["confidence"] = rule.confidence;
    doc["rules"].push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace specmeter
