#pragma once

#include <vector>

#include "specmeter/formula.hpp"
#include "specmeter/logmodel.hpp"

namespace specmeter {

// Label of every instant, index 0 == instant 1. vector<bool> keeps the table
// packed; logs with 1e5 traces make the layout matter.
using label_seq = std::vector<bool>;

// One linear sweep per subformula: backward recurrences for the future
// operators, forward for the past ones, pointwise for boolean nodes. Shared
// subtrees are labeled once per call.
label_seq label_formula(const formula& f, const trace& t);
label_seq label_formula(const formula_ptr& f, const trace& t);

// Direct recursive reading of the semantics, one instant at a time; the
// independent oracle for label_formula. instant is 1-based.
bool eval_at(const formula& f, const trace& t, std::size_t instant);

}  // namespace specmeter
