#include <doctest.h>

#include "helpers.hpp"

using namespace specmeter;
using smtest::make_trace;

namespace {

label_seq labels(const char* f, const char* t) {
  return label_formula(parse_formula(f), make_trace(t));
}

label_seq bits(std::initializer_list<int> v) {
  label_seq out;
  for (int b : v) out.push_back(b != 0);
  return out;
}

}  // namespace

TEST_SUITE("evaluator") {

TEST_CASE("atomic and boolean labels") {
  CHECK(labels("a", "a,b,a") == bits({1, 0, 1}));
  CHECK(labels("true", "a,b") == bits({1, 1}));
  CHECK(labels("false", "a,b") == bits({0, 0}));
  CHECK(labels("!a", "a,b,a") == bits({0, 1, 0}));
  CHECK(labels("a | b", "a,b,c") == bits({1, 1, 0}));
  CHECK(labels("a -> b", "a,b,c") == bits({0, 1, 1}));
}

TEST_CASE("next is false at the last instant, yesterday at the first") {
  CHECK(labels("X b", "a,b,c") == bits({1, 0, 0}));
  CHECK(labels("Y a", "a,b,c") == bits({0, 1, 0}));
  CHECK(labels("X true", "a") == bits({0}));
  CHECK(labels("Y true", "a") == bits({0}));
}

TEST_CASE("Start and End mark the trace boundary instants") {
  CHECK(labels("Start", "a,b,c") == bits({1, 0, 0}));
  CHECK(labels("End", "a,b,c") == bits({0, 0, 1}));
  CHECK(labels("Start", "a") == bits({1}));
  CHECK(labels("End", "a") == bits({1}));
}

TEST_CASE("until is non-strict") {
  // a U c: c itself counts at the instant where it holds
  CHECK(labels("a U c", "a,b,c") == bits({0, 0, 1}));
  CHECK(labels("a U c", "a,a,c") == bits({1, 1, 1}));
  CHECK(labels("a U c", "c,b,a") == bits({1, 0, 0}));
  // lhs need not hold at the witnessing instant
  CHECK(labels("a U b", "a,b") == bits({1, 1}));
}

TEST_CASE("since mirrors until") {
  CHECK(labels("a S c", "c,a,a") == bits({1, 1, 1}));
  CHECK(labels("a S c", "c,b,a") == bits({1, 0, 0}));
  CHECK(labels("b S a", "a,b,c") == bits({1, 1, 0}));
}

TEST_CASE("derived temporal operators") {
  CHECK(labels("F c", "a,b,c,d") == bits({1, 1, 1, 0}));
  CHECK(labels("O a", "b,a,c") == bits({0, 1, 1}));
  CHECK(labels("G a", "a,a,b") == bits({0, 0, 0}));
  CHECK(labels("G a", "b,a,a") == bits({0, 1, 1}));
  CHECK(labels("H a", "a,a,b") == bits({1, 1, 0}));
  CHECK(labels("F (a & End)", "a,b,a") == bits({1, 1, 1}));
  CHECK(labels("F (a & End)", "a,b,b") == bits({0, 0, 0}));
}

TEST_CASE("labeling a benchmark response rule") {
  // d -> eventually e on the first benchmark trace
  CHECK(labels("d -> F e", "a,b,c,d,b,c,e,c,b") ==
        bits({1, 1, 1, 1, 1, 1, 1, 1, 1}));
  // and where the last d has no e after it
  CHECK(labels("d -> F e", "b,d,a,b,b,d,e,d,c") ==
        bits({1, 1, 1, 1, 1, 1, 1, 0, 1}));
}

TEST_CASE("eval_at agrees with label_formula pointwise") {
  smtest::formula_gen gen(23);
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.gen(5);
    trace t = smtest::random_trace(rng, 12);
    label_seq dp = label_formula(f, t);
    for (std::size_t k = 1; k <= t.size(); ++k)
      REQUIRE(dp[k - 1] == eval_at(*f, t, k));
  }
}

TEST_CASE("expanded derived operators label identically") {
  smtest::formula_gen gen(31);
  std::mt19937 rng(37);
  for (int i = 0; i < 300; ++i) {
    auto f = gen.gen(5);
    trace t = smtest::random_trace(rng, 12);
    REQUIRE(label_formula(f, t) == label_formula(expand_derived(f), t));
  }
}

TEST_CASE("mirror duality on fixed examples") {
  auto f = parse_formula("a U (X b)");
  trace t = make_trace("a,a,b,c");
  CHECK(smtest::reverse_labels(label_formula(f, t)) ==
        label_formula(mirror(f), smtest::reverse_trace(t)));
}

}  // TEST_SUITE
