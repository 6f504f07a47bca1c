#pragma once

#include <iosfwd>
#include <string>

#include "specmeter/miner.hpp"
#include "specmeter/specification.hpp"

namespace specmeter {

// Specification files.
//
// JSON: {"name": "...", "rules": [
//          {"template": "Response", "args": ["d", "e"]},
//          {"activator": "d", "target": "F e", "name": "optional"} ]}
//
// Text: one rule per line, either Template(arg1,arg2) or
//       "activator |> target" in formula surface syntax; '#' comments and
//       blank lines are skipped; an optional "name: ..." line names the
//       specification (default: file stem).
//
// Dispatch: *.json parses as JSON, anything else as text. Both throw
// parse_error with a message naming the offending line/field.
specification load_spec_file(const std::string& path);
specification parse_spec_json(const std::string& text, const std::string& fallback_name);
specification parse_spec_text(const std::string& text, const std::string& fallback_name);

// Written form is accepted unchanged by load_spec_file: template rules keep
// template/args, raw rules carry activator/target in surface syntax.
void write_spec_json(const specification& s, std::ostream& out);
void write_spec_json(const mining_result& mined, const std::string& name,
                     std::ostream& out);

}  // namespace specmeter
