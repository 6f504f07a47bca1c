#pragma once

#include <string>
#include <vector>

#include "specmeter/reactive.hpp"

namespace specmeter {

// How unactivated instants evaluate the composed target S_t.
//
// formal: S_t = AND_j (!a_j | t_j). An instant that activates no rule
//   satisfies S_t vacuously.
// table:  S_t = (S_a & AND_j (!a_j | t_j)) | (!S_a & AND_j t_j). At activated
//   instants identical to formal; at unactivated instants the conjunction of
//   the raw targets. This variant reproduces published reference figures that
//   the formal reading does not; measures conditioned on activation
//   (Confidence, Support, the satisfaction probability) agree across modes.
enum class spec_mode { formal, table };

spec_mode parse_spec_mode(std::string_view text);  // "formal" | "table"
std::string_view to_string(spec_mode mode);

struct specification {
  std::string name;
  std::vector<reactive_form> rfs;  // non-empty
};

// Disjunction of the member activators, left-folded in list order.
formula_ptr spec_activator(const specification& s);
formula_ptr spec_target(const specification& s, spec_mode mode);

// Tri-valued labels of the whole specification. Equivalent to folding the
// member rule labels: violated iff some member is violated, satisfied iff
// none is violated and some is satisfied, unaffected iff all are unaffected.
rf_label_seq label_spec(const specification& s, const trace& t, spec_mode mode);

// The specification seen as one reactive form (S_a, S_t).
reactive_form spec_as_rf(const specification& s, spec_mode mode);

}  // namespace specmeter
