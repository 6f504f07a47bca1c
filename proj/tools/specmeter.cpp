#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specmeter/drift.hpp"
#include "specmeter/estimators.hpp"
#include "specmeter/evaluator.hpp"
#include "specmeter/formula.hpp"
#include "specmeter/logmodel.hpp"
#include "specmeter/measures.hpp"
#include "specmeter/miner.hpp"
#include "specmeter/parallel.hpp"
#include "specmeter/reactive.hpp"
#include "specmeter/report.hpp"
#include "specmeter/specfile.hpp"
#include "specmeter/specification.hpp"
#include "specmeter/version.hpp"

namespace sm = specmeter;

namespace {

struct log_opts {
  std::string path;
  std::string format = "auto";
  sm::csv_columns columns;
  unsigned threads = 0;  // 0 = SPECMETER_THREADS or 1
};

void add_log_flags(CLI::App* cmd, log_opts& o) {
  cmd->add_option("--log", o.path, "event log file (xes, csv, or txt)")->required();
  cmd->add_option("--log-format", o.format, "log format, default: by extension")
      ->check(CLI::IsMember({"auto", "xes", "csv", "txt"}));
  cmd->add_option("--csv-case", o.columns.case_id, "CSV case-id column name");
  cmd->add_option("--csv-activity", o.columns.activity, "CSV activity column name");
  cmd->add_option("--csv-time", o.columns.timestamp, "CSV timestamp column name");
  cmd->add_option("--threads", o.threads,
                  "worker threads (default: SPECMETER_THREADS or 1)");
}

unsigned effective_threads(const log_opts& o) {
  return o.threads > 0 ? o.threads : sm::default_thread_count();
}

// "all" (or an empty selection) expands to the whole catalog, otherwise each
// name is resolved individually.
std::vector<const sm::measure_def*> resolve_measures(
    const std::vector<std::string>& names) {
  std::vector<const sm::measure_def*> defs;
  bool all = names.empty();
  for (const auto& n : names)
    if (n == "all") all = true;
  if (all) {
    for (const auto& d : sm::measure_catalog()) defs.push_back(&d);
    return defs;
  }
  for (const auto& n : names) {
    const auto* d = sm::find_measure(n);
    if (!d) throw sm::parse_error("unknown measure: " + n);
    defs.push_back(d);
  }
  return defs;
}

void with_sink(const std::string& path,
               const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sm::parse_error("cannot open output file: " + path);
  fn(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

struct measure_opts {
  log_opts log;
  std::string spec_path;
  std::string scope = "log";  // log | trace | both
  std::string mode = "table";
  std::string format = "csv";
  std::string out;
  std::vector<std::string> measures;
};

int run_measure(const measure_opts& o) {
  unsigned threads = effective_threads(o.log);
  sm::event_log log = sm::load_log(o.log.path, o.log.format, o.log.columns);
  sm::specification spec = sm::load_spec_file(o.spec_path);
  sm::spec_mode mode = sm::parse_spec_mode(o.mode);
  auto defs = resolve_measures(o.measures);

  bool want_log = o.scope == "log" || o.scope == "both";
  bool want_trace = o.scope == "trace" || o.scope == "both";

  sm::measure_report report;
  report.log_path = o.log.path;
  report.spec_name = spec.name;
  report.mode = std::string(sm::to_string(mode));

  auto add_rows = [&](const std::string& subject, const std::string& scope_id,
                      const sm::probability_bundle& b) {
    for (const auto* d : defs) {
      double v = sm::compute_measure(*d, b);
      report.rows.push_back(
          {subject, scope_id, d->name, v, sm::normalize(v, d->range)});
    }
  };

  for (const auto& rf : spec.rfs) {
    if (want_log) add_rows(rf.name, "log", sm::bundle(rf, log, threads));
    if (want_trace)
      for (std::size_t k = 0; k < log.entries().size(); ++k)
        add_rows(rf.name, "t" + std::to_string(k + 1),
                 sm::bundle(rf, log.entries()[k].t));
  }
  if (want_log) add_rows(spec.name, "log", sm::bundle(spec, log, mode, threads));
  if (want_trace)
    for (std::size_t k = 0; k < log.entries().size(); ++k)
      add_rows(spec.name, "t" + std::to_string(k + 1),
               sm::bundle(spec, log.entries()[k].t, mode));

  with_sink(o.out, [&](std::ostream& s) {
    if (o.format == "json")
      sm::write_report_json(report, s);
    else
      sm::write_report_csv(report, s);
  });
  return 0;
}

struct windows_opts {
  log_opts log;
  std::string spec_path;
  std::uint64_t size = 0;
  std::uint64_t slide = 0;
  std::string mode = "table";
  std::string format = "csv";
  std::string out;
  std::string stats_out;
  std::vector<std::string> measures;
  bool normalized = false;
};

int run_windows(const windows_opts& o) {
  unsigned threads = effective_threads(o.log);
  sm::event_log log = sm::load_log(o.log.path, o.log.format, o.log.columns);
  sm::specification spec = sm::load_spec_file(o.spec_path);
  sm::spec_mode mode = sm::parse_spec_mode(o.mode);
  auto defs = resolve_measures(o.measures);
  std::vector<std::string> names;
  for (const auto* d : defs) names.push_back(d->name);

  std::uint64_t slide = o.slide > 0 ? o.slide : o.size;  // default: tumbling
  sm::sliced_log sliced = sm::slice_log(log, o.size, slide);
  sm::window_series series =
      sm::measure_series(spec, sliced.windows, names, mode, o.normalized, threads);
  std::vector<sm::series_stat> stats = sm::series_stats(series);
  sm::sort_stats(stats);

  sm::series_report report;
  report.log_path = o.log.path;
  report.spec_name = spec.name;
  report.mode = std::string(sm::to_string(mode));
  report.window_size = o.size;
  report.slide = slide;
  report.dropped_traces = sliced.dropped_traces;
  report.series = std::move(series);
  report.stats = std::move(stats);

  with_sink(o.out, [&](std::ostream& s) {
    if (o.format == "json") {
      sm::write_series_json(report, s);
    } else {
      sm::write_series_csv(report, s);
      // Keep both tables visible when no separate stats sink was asked for.
      if (o.stats_out.empty()) {
        s << '\n';
        sm::write_stats_csv(report, s);
      }
    }
  });
  if (!o.stats_out.empty())
    with_sink(o.stats_out, [&](std::ostream& s) { sm::write_stats_csv(report, s); });
  return 0;
}

struct mine_opts {
  log_opts log;
  std::string name = "mined";
  std::string out;
  std::string sweep;  // "a:b:step"
  std::string sweep_out;
  std::vector<std::string> templates;
  double confidence = 0.8;
};

std::vector<double> parse_sweep(const std::string& text) {
  double a = 0, b = 0, step = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &a, &b, &step, &tail) != 3)
    throw sm::parse_error("--sweep expects a:b:step, got: " + text);
  if (step <= 0 || a > b || a < 0 || b > 1)
    throw sm::parse_error("--sweep needs 0 <= a <= b <= 1 and step > 0");
  std::vector<double> thresholds;
  auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) thresholds.push_back(a + static_cast<double>(i) * step);
  return thresholds;
}

int run_mine(const mine_opts& o) {
  unsigned threads = effective_threads(o.log);
  sm::event_log log = sm::load_log(o.log.path, o.log.format, o.log.columns);
  sm::miner_config cfg;
  cfg.templates = o.templates;
  cfg.threshold = o.confidence;

  if (!o.sweep.empty()) {
    std::vector<double> thresholds = parse_sweep(o.sweep);
    std::vector<sm::sweep_row> rows = sm::threshold_sweep(log, cfg, thresholds, threads);
    with_sink(o.sweep_out, [&](std::ostream& s) { sm::write_sweep_csv(rows, s); });
    if (o.out.empty()) return 0;  // sweep only, unless a spec sink was named
  }

  sm::mining_result mined = sm::discover(log, cfg, threads);
  if (mined.empty())
    std::cerr << "warning: no rule reached confidence "
              << sm::format_value(o.confidence) << "; writing an empty rule list\n";
  with_sink(o.out, [&](std::ostream& s) { sm::write_spec_json(mined, o.name, s); });
  return 0;
}

int run_templates() {
  for (const auto& t : sm::template_catalog()) {
    std::string args = t.arity == 1 ? "a" : "a,b";
    std::cout << t.name << '(' << args << ")";
    if (t.composite)
      std::cout << " = RespondedExistence(a,b) + RespondedExistence(b,a)";
    else
      std::cout << ": " << t.activator_pattern << " |> " << t.target_pattern;
    std::cout << '\n';
  }
  std::cout.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic interestingness measures for reactive temporal rules over event logs"};
  app.set_version_flag("--version", std::string(sm::tool_version));
  app.require_subcommand(1);

  measure_opts mo;
  CLI::App* measure = app.add_subcommand("measure", "evaluate a specification against a log");
  add_log_flags(measure, mo.log);
  measure->add_option("--spec", mo.spec_path, "specification file (json or text)")->required();
  measure->add_option("--scope", mo.scope, "log | trace | both")
      ->check(CLI::IsMember({"log", "trace", "both"}));
  measure->add_option("--measures", mo.measures, "measure names or 'all'")
      ->delimiter(',');
  measure->add_option("--mode", mo.mode, "specification target composition")
      ->check(CLI::IsMember({"table", "formal"}));
  measure->add_option("--format", mo.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  measure->add_option("--out", mo.out, "output file (default: stdout)");

  windows_opts wo;
  CLI::App* windows = app.add_subcommand("windows", "windowed measure series over the log");
  add_log_flags(windows, wo.log);
  windows->add_option("--spec", wo.spec_path, "specification file")->required();
  windows->add_option("--size", wo.size, "traces per window")->required()
      ->check(CLI::PositiveNumber);
  windows->add_option("--slide", wo.slide, "window offset step (default: --size)")
      ->check(CLI::PositiveNumber);
  windows->add_option("--measures", wo.measures, "measure names or 'all'")
      ->delimiter(',');
  windows->add_flag("--normalized", wo.normalized, "map values onto [0,1]");
  windows->add_option("--mode", wo.mode, "specification target composition")
      ->check(CLI::IsMember({"table", "formal"}));
  windows->add_option("--format", wo.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  windows->add_option("--out", wo.out, "series output file (default: stdout)");
  windows->add_option("--stats-out", wo.stats_out, "stats table output file");

  mine_opts no;
  CLI::App* mine = app.add_subcommand("mine", "discover rules above a confidence threshold");
  add_log_flags(mine, no.log);
  mine->add_option("--templates", no.templates, "template names or 'all'")
      ->delimiter(',');
  mine->add_option("--confidence", no.confidence, "minimum log confidence, in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  mine->add_option("--name", no.name, "name of the mined specification");
  mine->add_option("--out", no.out, "specification output file (default: stdout)");
  mine->add_option("--sweep", no.sweep, "threshold sweep a:b:step");
  mine->add_option("--sweep-out", no.sweep_out, "sweep table output file");

  CLI::App* templates = app.add_subcommand("templates", "list the rule template catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad usage is an input error
  }

  try {
    if (*measure) return run_measure(mo);
    if (*windows) return run_windows(wo);
    if (*mine) return run_mine(no);
    if (*templates) return run_templates();
  } catch (const sm::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const sm::syntax_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
