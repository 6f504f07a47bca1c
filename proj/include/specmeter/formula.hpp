#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specmeter {

// Node kinds of the LTLf syntax tree. Future/past modalities come in pairs
// (next/yesterday, until/since, eventually/once, always/historically) so the
// mirror transform is a simple swap.
enum class op : std::uint8_t {
  const_true,
  const_false,
  atom,
  trace_start,  // holds only at the first instant
  trace_end,    // holds only at the last instant
  lnot,
  land,
  lor,
  implies,
  next,
  yesterday,
  until,
  since,
  eventually,
  once,
  always,
  historically,
};

int arity(op k);
std::string_view op_name(op k);

struct formula;
using formula_ptr = std::shared_ptr<const formula>;

// Immutable tree; safe to share across threads. Subtrees may be shared
// (expand_derived reuses nodes), so evaluation caches key on node identity.
struct formula {
  op kind;
  std::string symbol;  // atom only
  formula_ptr lhs;     // unary operand / left operand
  formula_ptr rhs;     // right operand
};

formula_ptr make_const(bool value);
formula_ptr make_atom(std::string name);
formula_ptr make_start();
formula_ptr make_end();
formula_ptr make_unary(op k, formula_ptr f);
formula_ptr make_binary(op k, formula_ptr l, formula_ptr r);

// Count of atoms, constants, and connectives; parentheses excluded.
std::size_t formula_size(const formula& f);

// Structural equality.
bool equal(const formula& a, const formula& b);

// Equivalent formula using only atoms, constants, boolean connectives, next,
// yesterday, until and since. Derived temporal operators and the Start/End
// constants are rewritten; double negations introduced by the rewrite are
// simplified away.
formula_ptr expand_derived(const formula_ptr& f);

// Swap each future modality with its past twin (and Start with End). Used by
// the reverse-trace duality property.
formula_ptr mirror(const formula_ptr& f);

// Fully parenthesized canonical form; parses back to a structurally equal
// tree. Atoms that collide with keywords or leave the identifier alphabet are
// quoted.
std::string to_string(const formula& f);

struct syntax_error : std::runtime_error {
  std::size_t position;  // 0-based offset into the input text
  syntax_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Surface syntax:
//   identifiers  [a-zA-Z_][a-zA-Z0-9_]*   (or any text in double quotes)
//   constants    true false Start End
//   unary        ! X Y F O G H
//   binary       U S & | ->
//   precedence   unary > U/S > & > | > ->, binaries right-associative
formula_ptr parse_formula(std::string_view text);

}  // namespace specmeter
