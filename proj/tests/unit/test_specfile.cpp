#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "specmeter/report.hpp"
#include "specmeter/specfile.hpp"

using namespace specmeter;

TEST_SUITE("specfile") {

TEST_CASE("json specifications parse templates and raw rules") {
  const char* text = R"json({
    "name": "S",
    "rules": [
      {"template": "Response", "args": ["d", "e"]},
      {"activator": "c", "target": "O a", "name": "R1"},
      {"activator": "a & b", "target": "F (c | d)"}
    ]
  })json";
  specification s = parse_spec_json(text, "fallback");
  CHECK(s.name == "S");
  REQUIRE(s.rfs.size() == 3);
  CHECK(s.rfs[0].template_name == "Response");
  CHECK(equal(*s.rfs[0].target, *parse_formula("F e")));
  CHECK(s.rfs[1].name == "R1");
  CHECK(equal(*s.rfs[2].activator, *parse_formula("a & b")));
  CHECK(s.rfs[2].name == "(a) & (b) |> F ((c) | (d))");
}

TEST_CASE("json errors name the offending rule") {
  CHECK_THROWS_AS(parse_spec_json("{", "x"), parse_error);
  CHECK_THROWS_AS(parse_spec_json(R"({"rules": []})", "x"), parse_error);
  CHECK_THROWS_AS(parse_spec_json(R"({"rules": [{}]})", "x"), parse_error);
  CHECK_THROWS_AS(
      parse_spec_json(R"({"rules": [{"template": "Nope", "args": ["a"]}]})", "x"),
      parse_error);
  CHECK_THROWS_AS(
      parse_spec_json(R"({"rules": [{"activator": "(", "target": "a"}]})", "x"),
      parse_error);
}

TEST_CASE("text specifications accept templates and arrow rules") {
  const char* text =
      "# comment\n"
      "name: demo\n"
      "Response(d, e)\n"
      "\n"
      "c |> O a\n"
      "CoExistence(a, b)\n";
  specification s = parse_spec_text(text, "fallback");
  CHECK(s.name == "demo");
  REQUIRE(s.rfs.size() == 4);  // CoExistence expands to two rules
  CHECK(s.rfs[0].template_name == "Response");
  CHECK(equal(*s.rfs[1].activator, *parse_formula("c")));
  CHECK(s.rfs[2].template_name == "RespondedExistence");
  CHECK(s.rfs[3].args == std::vector<std::string>{"b", "a"});
}

TEST_CASE("text errors carry line numbers") {
  try {
    parse_spec_text("Response(d, e)\nResponse(d)\n", "x");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spec_text("", "x"), parse_error);
  CHECK_THROWS_AS(parse_spec_text("a |>\n", "x"), parse_error);
}

TEST_CASE("written specifications are accepted unchanged") {
  specification s = smtest::table1_spec();
  s.rfs.push_back(instantiate_template("Response", {"d", "e"})[0]);
  std::ostringstream out;
  write_spec_json(s, out);
  specification back = parse_spec_json(out.str(), "x");
  CHECK(back.name == s.name);
  REQUIRE(back.rfs.size() == s.rfs.size());
  for (std::size_t i = 0; i < s.rfs.size(); ++i) {
    CHECK(back.rfs[i].name == s.rfs[i].name);
    CHECK(equal(*back.rfs[i].activator, *s.rfs[i].activator));
    CHECK(equal(*back.rfs[i].target, *s.rfs[i].target));
    CHECK(back.rfs[i].template_name == s.rfs[i].template_name);
  }
}

TEST_CASE("mined results write template rules with confidences") {
  mining_result r;
  mined_rule m;
  m.rf = instantiate_template("Response", {"d", "e"})[0];
  m.confidence = 0.85;
  r.rules.push_back(m);
  std::ostringstream out;
  write_spec_json(r, "mined", out);
  std::string text = out.str();
  CHECK(text.find("\"template\": \"Response\"") != std::string::npos);
  CHECK(text.find("\"confidence\": 0.85") != std::string::npos);
  specification back = parse_spec_json(text, "x");
  CHECK(back.name == "mined");
  REQUIRE(back.rfs.size() == 1);

  mining_result empty;
  std::ostringstream out2;
  write_spec_json(empty, "none", out2);
  CHECK(out2.str().find("\"rules\": []") != std::string::npos);
}

TEST_CASE("report writers format values stably") {
  CHECK(format_value(0.5) == "0.500000");
  CHECK(format_value(1.0 / 3) == "0.333333");
  CHECK(format_value(smtest::kNaN) == "NaN");
  CHECK(format_value(-0.25) == "-0.250000");

  measure_report rep;
  rep.log_path = "log.txt";
  rep.spec_name = "S";
  rep.mode = "table";
  rep.rows.push_back({"R1", "log", "confidence", 0.8106, 0.8106});
  rep.rows.push_back({"R,2", "t1", "lift", smtest::kNaN, smtest::kNaN});
  std::ostringstream csv;
  write_report_csv(rep, csv);
  CHECK(csv.str() ==
        "subject,scope,measure,value,normalized\n"
        "R1,log,confidence,0.810600,0.810600\n"
        "\"R,2\",t1,lift,NaN,NaN\n");

  std::ostringstream json;
  write_report_json(rep, json);
  CHECK(json.str().find("\"value\": \"NaN\"") != std::string::npos);
  CHECK(json.str().find("\"value\": 0.8106") != std::string::npos);
}

TEST_CASE("sweep and series tables have fixed headers") {
  std::ostringstream sweep;
  write_sweep_csv({{0.5, 3, 0.9}, {1.0, 0, smtest::kNaN}}, sweep);
  CHECK(sweep.str() ==
        "threshold,rule_count,spec_confidence\n"
        "0.500000,3,0.900000\n"
        "1.000000,0,NaN\n");

  series_report rep;
  rep.series.window_index = {0, 1};
  rep.series.window_start = {"", ""};
  rep.series.measures = {"confidence"};
  rep.series.values = {{1.0, 0.25}};
  rep.stats.push_back({"confidence", 0.625, 0.375, 0.6, 0});
  std::ostringstream series;
  write_series_csv(rep, series);
  CHECK(series.str() ==
        "window_index,window_start,measure,value\n"
        "0,,confidence,1.000000\n"
        "1,,confidence,0.250000\n");
  std::ostringstream stats;
  write_stats_csv(rep, stats);
  CHECK(stats.str() ==
        "measure,mean,std_dev,cv,excluded_nan\n"
        "confidence,0.625000,0.375000,0.600000,0\n");
}

}  // TEST_SUITE
