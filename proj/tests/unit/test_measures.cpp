#include <doctest.h>

#include "helpers.hpp"

using namespace specmeter;
using smtest::cell;

namespace {

double get(const probability_bundle& b, const char* name) {
  const measure_def* d = find_measure(name);
  REQUIRE(d != nullptr);
  return compute_measure(*d, b);
}

probability_bundle make_bundle(double p_a, double p_t, double p_at,
                               double p_nn) {
  probability_bundle b;
  b.p_a = p_a;
  b.p_t = p_t;
  b.p_at = p_at;
  b.p_a_not_t = p_a - p_at;
  b.p_not_a_not_t = p_nn;
  return b;
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("catalog holds the full set") {
  CHECK(measure_catalog().size() == 24);
  for (const char* name :
       {"support", "confidence", "recall", "specificity", "accuracy", "lift",
        "leverage", "added-value", "jaccard", "certainty-factor", "klosgen",
        "conviction", "j-measure", "one-way-support", "two-way-support",
        "piatetsky-shapiro", "cosine", "loevinger", "information-gain",
        "sebag-schoenauer", "least-contradiction", "odd-multiplier",
        "example-counterexample-rate", "zhang"})
    CHECK_MESSAGE(find_measure(name) != nullptr, name);
}

TEST_CASE("lookup is forgiving about case and separators") {
  CHECK(find_measure("Added Value") == find_measure("added-value"));
  CHECK(find_measure("ADDED_VALUE") == find_measure("added-value"));
  CHECK(find_measure("JMeasure") == find_measure("j-measure"));
  CHECK(find_measure("precision") == find_measure("confidence"));
  CHECK(find_measure("interest") == find_measure("lift"));
  CHECK(find_measure("no-such-measure") == nullptr);
}

TEST_CASE("formulas agree with their definitions on random bundles") {
  std::mt19937 rng(89);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    // draw a consistent joint distribution over (activator, target)
    double raw[4] = {u(rng), u(rng), u(rng), u(rng)};
    double sum = raw[0] + raw[1] + raw[2] + raw[3];
    double p11 = raw[0] / sum, p10 = raw[1] / sum, p01 = raw[2] / sum,
           p00 = raw[3] / sum;
    probability_bundle b = make_bundle(p11 + p10, p11 + p01, p11, p00);
    double pa = b.p_a, pt = b.p_t, pat = b.p_at, pant = b.p_a_not_t;
    if (pa < 1e-6 || pt < 1e-6 || pat < 1e-6 || pant < 1e-6 ||
        pa > 1 - 1e-6 || pt > 1 - 1e-6)
      continue;  // keep to the interior so every formula is defined
    ++checked;

    CHECK(get(b, "support") == doctest::Approx(pat));
    CHECK(get(b, "confidence") == doctest::Approx(pat / pa));
    CHECK(get(b, "recall") == doctest::Approx(pat / pt));
    CHECK(get(b, "specificity") == doctest::Approx(p00 / (1 - pa)));
    CHECK(get(b, "accuracy") == doctest::Approx(pat + p00));
    CHECK(get(b, "lift") == doctest::Approx(pat / (pa * pt)));
    CHECK(get(b, "leverage") == doctest::Approx(pat / pa - pa * pt));
    CHECK(get(b, "added-value") == doctest::Approx(pat / pa - pt));
    CHECK(get(b, "jaccard") == doctest::Approx(pat / (pa + pt - pat)));
    CHECK(get(b, "certainty-factor") ==
          doctest::Approx((pat / pa - pt) / (1 - pt)));
    CHECK(get(b, "klosgen") ==
          doctest::Approx(std::sqrt(pat) *
                          std::max(pat / pa - pt, pat / pt - pa)));
    CHECK(get(b, "conviction") == doctest::Approx(pa * (1 - pt) / pant));
    CHECK(get(b, "j-measure") ==
          doctest::Approx(pat * std::log((pat / pa) / pt) +
                          pant * std::log((pant / pa) / (1 - pt))));
    CHECK(get(b, "one-way-support") ==
          doctest::Approx(pat / pa * std::log2(pat / (pa * pt))));
    CHECK(get(b, "two-way-support") ==
          doctest::Approx(pat * std::log2(pat / (pa * pt))));
    CHECK(get(b, "piatetsky-shapiro") == doctest::Approx(pat - pa * pt));
    CHECK(get(b, "cosine") == doctest::Approx(pat / std::sqrt(pa * pt)));
    CHECK(get(b, "loevinger") == doctest::Approx(1 - pa * (1 - pt) / pant));
    CHECK(get(b, "information-gain") == doctest::Approx(std::log(pat / (pa * pt))));
    CHECK(get(b, "sebag-schoenauer") == doctest::Approx(pat / pant));
    CHECK(get(b, "least-contradiction") == doctest::Approx((pat - pant) / pt));
    CHECK(get(b, "odd-multiplier") ==
          doctest::Approx(pat * (1 - pt) / (pt * pant)));
    CHECK(get(b, "example-counterexample-rate") ==
          doctest::Approx(1 - pant / pat));
    CHECK(get(b, "zhang") ==
          doctest::Approx((pat - pa * pt) /
                          std::max(pat * (1 - pt), pt * pant)));
  }
}

TEST_CASE("division by zero yields NaN") {
  // never-activated rule: p_a == 0
  probability_bundle never = make_bundle(0.0, 0.5, 0.0, 0.5);
  for (const char* m : {"confidence", "lift", "cosine", "sebag-schoenauer"})
    CHECK_MESSAGE(std::isnan(get(never, m)), m);
  CHECK(get(never, "support") == 0.0);
  // target never holds: recall denominator 0
  probability_bundle no_target = make_bundle(0.5, 0.0, 0.0, 0.5);
  CHECK(std::isnan(get(no_target, "recall")));
  CHECK(std::isnan(get(no_target, "least-contradiction")));
  // no counterexamples: conviction denominator 0
  probability_bundle perfect = make_bundle(0.5, 0.5, 0.5, 0.5);
  CHECK(std::isnan(get(perfect, "conviction")));
  CHECK(std::isnan(get(perfect, "loevinger")));
  CHECK(std::isnan(get(perfect, "sebag-schoenauer")));
  // everything activated and satisfied: specificity denominator 0
  probability_bundle all = make_bundle(1.0, 1.0, 1.0, 0.0);
  CHECK(std::isnan(get(all, "specificity")));
  CHECK(std::isnan(get(all, "certainty-factor")));
}

TEST_CASE("vanishing terms take their limits, not NaN") {
  // fully satisfied rule: p(a and not t) == 0, so the second J term vanishes
  probability_bundle sat = make_bundle(0.5, 0.75, 0.5, 0.25);
  CHECK(get(sat, "j-measure") ==
        doctest::Approx(0.5 * std::log((0.5 / 0.5) / 0.75)));
  // support 0 with activations: one/two-way support collapse to 0
  probability_bundle zero = make_bundle(0.5, 0.25, 0.0, 0.25);
  CHECK(get(zero, "two-way-support") == 0.0);
  CHECK(get(zero, "one-way-support") == 0.0);
  // but an undefined confidence still propagates
  probability_bundle undef = make_bundle(0.0, 0.5, 0.0, 0.5);
  CHECK(std::isnan(get(undef, "j-measure")));
  CHECK(std::isnan(get(undef, "one-way-support")));
}

TEST_CASE("normalization maps declared ranges onto the unit interval") {
  CHECK(normalize(0.3, value_range::unit) == 0.3);
  CHECK(normalize(-1.0, value_range::signed_unit) == 0.0);
  CHECK(normalize(0.0, value_range::signed_unit) == 0.5);
  CHECK(normalize(1.0, value_range::signed_unit) == 1.0);
  CHECK(normalize(0.0, value_range::nonneg) == 0.0);
  CHECK(normalize(1.0, value_range::nonneg) == 0.5);
  CHECK(normalize(1.0, value_range::le_one) == 1.0);
  CHECK(normalize(0.0, value_range::le_one) == 0.5);
  CHECK(normalize(0.0, value_range::real) == 0.5);
  CHECK(std::isnan(normalize(smtest::kNaN, value_range::real)));

  std::mt19937 rng(97);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    double x = wide(rng);
    for (value_range r : {value_range::unit, value_range::signed_unit,
                          value_range::nonneg, value_range::le_one,
                          value_range::real}) {
      double y = normalize(x, r);
      // outside-of-range inputs never occur from the catalog; the map is
      // still total and ordered on the declared domain
      if (r == value_range::real) {
        CHECK(y >= 0.0);
        CHECK(y <= 1.0);
        CHECK(normalize(x + 1.0, r) > y);
      }
    }
  }
}

TEST_CASE("normalized measures from real logs stay in the unit interval") {
  event_log log = smtest::table1_log();
  specification s = smtest::table1_spec();
  for (const auto& rf : s.rfs) {
    for (const auto& e : log.entries()) {
      probability_bundle b = bundle(rf, e.t);
      for (const auto& def : measure_catalog()) {
        double v = normalize(compute_measure(def, b), def.range);
        if (!std::isnan(v)) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("bundle fields are consistent") {
  event_log log = smtest::table1_log();
  reactive_form r1 = smtest::table1_r1();
  std::mt19937 rng(101);
  for (const auto& e : log.entries()) {
    probability_bundle b = bundle(r1, e.t);
    CHECK(b.p_a == doctest::Approx(b.p_at + b.p_a_not_t).epsilon(1e-12));
    CHECK(b.p_a >= 0.0);
    CHECK(b.p_t <= 1.0);
    CHECK(b.p_at <= b.p_a);
    CHECK(b.p_at <= b.p_t);
    CHECK(b.p_not_a_not_t <= b.p_not_a() + 1e-12);
  }
  probability_bundle lb = bundle(r1, log);
  CHECK(lb.p_a == doctest::Approx(lb.p_at + lb.p_a_not_t).epsilon(1e-12));
  CHECK(lb.confidence() == doctest::Approx(p_rf_log(r1, log)).epsilon(1e-12));
}

}  // TEST_SUITE
