#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "specmeter/estimators.hpp"
#include "specmeter/evaluator.hpp"
#include "specmeter/formula.hpp"
#include "specmeter/logmodel.hpp"
#include "specmeter/measures.hpp"
#include "specmeter/specification.hpp"

namespace smtest {

using namespace specmeter;

// ---- golden fixture: the five-trace benchmark log --------------------------

inline trace make_trace(const std::string& csv) { return parse_trace_string(csv); }

// 17, 6, 5, 12, 5 occurrences; |L| = 45.
inline event_log table1_log() {
  log_builder b;
  b.add(make_trace("a,b,c,d,b,c,e,c,b"), 17);
  b.add(make_trace("b,d,a,b,b,d,e,d,c"), 6);
  b.add(make_trace("c,d,a,b,c,e,b,c,b,c"), 5);
  b.add(make_trace("b,c,a,c,e,a"), 12);
  b.add(make_trace("b,b,b"), 5);
  return std::move(b).build();
}

inline reactive_form table1_r1() {
  reactive_form rf;
  rf.name = "R1";
  rf.activator = parse_formula("c");
  rf.target = parse_formula("O a");
  return rf;
}

inline reactive_form table1_r2() {
  reactive_form rf;
  rf.name = "R2";
  rf.activator = parse_formula("d");
  rf.target = parse_formula("F e");
  return rf;
}

inline specification table1_spec() {
  specification s;
  s.name = "S";
  s.rfs = {table1_r1(), table1_r2()};
  return s;
}

// Six always-activated prohibition rules over {a..f}.
inline specification table3_spec() {
  specification s;
  s.name = "S3";
  for (char z = 'a'; z <= 'f'; ++z) {
    reactive_form rf;
    rf.name = std::string("No_") + z;
    rf.activator = parse_formula("true");
    rf.target = parse_formula(std::string("!") + z);
    s.rfs.push_back(std::move(rf));
  }
  return s;
}

inline event_log table3_log() {
  log_builder b;
  b.add(make_trace("a,b,c,d,e,f"), 5);
  b.add(make_trace("a,y,y,y,e,f"), 10);
  return std::move(b).build();
}

// ---- tolerant comparison ----------------------------------------------------

// Two-decimal published cells: |v - expected| <= 0.005, NaN matches NaN only.
// The 1e-9 guard keeps midpoint cells (e.g. 0.375 vs printed 0.38) from
// failing on the binary representation of the decimal constant.
inline bool cell(double v, double expected, double tol = 0.005) {
  if (std::isnan(expected)) return std::isnan(v);
  return std::isfinite(v) && std::fabs(v - expected) <= tol + 1e-9;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- random generators (fixed seeds; deterministic) ------------------------

struct formula_gen {
  std::mt19937 rng;
  std::vector<std::string> atoms;

  explicit formula_gen(std::uint32_t seed,
                       std::vector<std::string> alphabet = {"a", "b", "c"})
      : rng(seed), atoms(std::move(alphabet)) {}

  formula_ptr leaf() {
    switch (rng() % 5) {
      case 0: return make_const(true);
      case 1: return make_const(false);
      case 2: return make_start();
      case 3: return make_end();
      default: return make_atom(atoms[rng() % atoms.size()]);
    }
  }

  formula_ptr gen(int depth) {
    if (depth <= 0 || rng() % 4 == 0) return leaf();
    static const op unary[] = {op::lnot, op::next, op::yesterday, op::eventually,
                               op::once, op::always, op::historically};
    static const op binary[] = {op::land, op::lor, op::implies, op::until, op::since};
    if (rng() % 2 == 0)
      return make_unary(unary[rng() % 7], gen(depth - 1));
    return make_binary(binary[rng() % 5], gen(depth - 1), gen(depth - 1));
  }
};

inline trace random_trace(std::mt19937& rng, std::size_t max_len,
                          const std::vector<std::string>& atoms = {"a", "b", "c"}) {
  trace t;
  std::size_t len = 1 + rng() % max_len;
  for (std::size_t i = 0; i < len; ++i)
    t.events.push_back({atoms[rng() % atoms.size()], {}});
  return t;
}

inline event_log random_log(std::mt19937& rng, std::size_t max_traces,
                            std::size_t max_len, std::uint64_t max_mult = 4) {
  log_builder b;
  std::size_t n = 1 + rng() % max_traces;
  for (std::size_t i = 0; i < n; ++i)
    b.add(random_trace(rng, max_len), 1 + rng() % max_mult);
  return std::move(b).build();
}

inline trace reverse_trace(const trace& t) {
  trace r;
  r.events.assign(t.events.rbegin(), t.events.rend());
  return r;
}

inline label_seq reverse_labels(label_seq v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace smtest
