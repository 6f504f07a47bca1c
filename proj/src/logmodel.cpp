#include "specmeter/logmodel.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace specmeter {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Dedup key: activity sequence only; attributes do not affect identity.
std::string trace_key(const trace& t) {
  std::string key;
  for (const auto& ev : t.events) {
    key += ev.activity;
    key += '\x1f';
  }
  return key;
}

}  // namespace

trace parse_trace_string(std::string_view text) {
  trace t;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool expect_token = true;
  while (i < n || expect_token) {
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::string activity;
    if (i < n && text[i] == '"') {
      ++i;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) ++i;
        activity += text[i++];
      }
      if (i >= n) throw parse_error("unterminated quote in trace string");
      ++i;
      while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    } else {
      std::size_t start = i;
      while (i < n && text[i] != ',') ++i;
      activity = trim(text.substr(start, i - start));
    }
    if (activity.empty()) throw parse_error("empty activity token in trace string");
    t.events.push_back({std::move(activity), {}});
    expect_token = false;
    if (i < n) {
      if (text[i] != ',')
        throw parse_error("expected ',' in trace string");
      ++i;
      expect_token = true;  // trailing comma means a missing token
    }
  }
  if (t.events.empty()) throw parse_error("empty trace string");
  return t;
}

void log_builder::add(trace t, std::uint64_t multiplicity) {
  if (multiplicity == 0) throw parse_error("multiplicity must be >= 1");
  if (t.events.empty()) throw parse_error("empty trace");
  std::string key = trace_key(t);
  auto [it, inserted] = index_.try_emplace(std::move(key), entries_.size());
  if (inserted)
    entries_.push_back({std::move(t), 0});
  auto idx = static_cast<std::uint32_t>(it->second);
  entries_[idx].multiplicity += multiplicity;
  for (std::uint64_t k = 0; k < multiplicity; ++k) order_.push_back(idx);
}

event_log log_builder::build() && {
  event_log log;
  log.entries_ = std::move(entries_);
  log.order_ = std::move(order_);
  log.cardinality_ = log.order_.size();
  // add() pre-set multiplicity via increments; entries start at 0 and every
  // occurrence bumped the count, so the sum matches the ordered view.
  return log;
}

log_summary_info log_summary(const event_log& log) {
  log_summary_info info;
  info.unique_traces = log.entries().size();
  info.cardinality = log.cardinality();
  std::set<std::string> alphabet;
  for (const auto& e : log.entries()) {
    info.event_count += e.multiplicity * e.t.size();
    for (const auto& ev : e.t.events) alphabet.insert(ev.activity);
  }
  info.alphabet_size = alphabet.size();
  return info;
}

std::vector<std::string> log_alphabet(const event_log& log) {
  std::set<std::string> alphabet;
  for (const auto& e : log.entries())
    for (const auto& ev : e.t.events) alphabet.insert(ev.activity);
  return {alphabet.begin(), alphabet.end()};
}

// ---------------------------------------------------------------- text logs

event_log load_text(const std::string& path, load_stats* stats) {
  std::string content = read_file(path);
  log_builder builder;
  std::size_t skipped = 0;
  std::size_t line_no = 0;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::uint64_t multiplicity = 1;
    std::size_t semi = body.find(';');
    std::string trace_part = body;
    if (semi != std::string::npos) {
      std::string head = trim(body.substr(0, semi));
      trace_part = trim(body.substr(semi + 1));
      try {
        std::size_t used = 0;
        long long m = std::stoll(head, &used);
        if (used != head.size() || m < 1) throw std::invalid_argument(head);
        multiplicity = static_cast<std::uint64_t>(m);
      } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line_no) +
                          ": bad multiplicity '" + head + "'");
      }
    }
    if (trace_part.empty()) {
      ++skipped;
      continue;
    }
    try {
      builder.add(parse_trace_string(trace_part), multiplicity);
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (stats) stats->skipped_empty_traces = skipped;
  event_log log = std::move(builder).build();
  if (log.empty()) throw parse_error(path + ": no traces");
  return log;
}

// ----------------------------------------------------------------- CSV logs

namespace {

// RFC-4180: quoted fields may contain commas, newlines, and doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"': in_quotes = true; row_started = true; break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r': break;
      case '\n':
        if (row_started || !field.empty() || !row.empty()) {
          row.push_back(std::move(field));
          field.clear();
          rows.push_back(std::move(row));
          row.clear();
          row_started = false;
        }
        break;
      default:
        field += c;
        row_started = true;
        break;
    }
  }
  if (in_quotes) throw parse_error("unterminated quoted CSV field");
  if (row_started || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Days since 1970-01-01 for a civil date (valid far beyond any event log).
long long days_from_civil(long long y, unsigned m, unsigned d) {
  y -= m <= 2;
  const long long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long long>(doe) - 719468;
}

// ISO-8601 (date, optional time, optional fraction and zone) or plain epoch
// number -> sortable seconds. nullopt when the text matches neither.
std::optional<double> parse_timestamp(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) return std::nullopt;

  {  // plain (possibly fractional, possibly negative) number
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end && *end == '\0') return v;
  }

  const char* p = s.c_str();
  auto read_digits = [&p](int count, int& out) {
    out = 0;
    for (int i = 0; i < count; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(*p))) return false;
      out = out * 10 + (*p++ - '0');
    }
    return true;
  };
  int year, month, day;
  if (!read_digits(4, year)) return std::nullopt;
  if (*p++ != '-') return std::nullopt;
  if (!read_digits(2, month)) return std::nullopt;
  if (*p++ != '-') return std::nullopt;
  if (!read_digits(2, day)) return std::nullopt;
  if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
  double seconds = 86400.0 * days_from_civil(year, month, day);
  if (*p == '\0') return seconds;
  if (*p != 'T' && *p != ' ') return std::nullopt;
  ++p;
  int hh, mm, ss;
  if (!read_digits(2, hh)) return std::nullopt;
  if (*p++ != ':') return std::nullopt;
  if (!read_digits(2, mm)) return std::nullopt;
  if (*p++ != ':') return std::nullopt;
  if (!read_digits(2, ss)) return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  seconds += hh * 3600 + mm * 60 + ss;
  if (*p == '.') {
    ++p;
    double scale = 0.1;
    if (!std::isdigit(static_cast<unsigned char>(*p))) return std::nullopt;
    while (std::isdigit(static_cast<unsigned char>(*p))) {
      seconds += (*p++ - '0') * scale;
      scale *= 0.1;
    }
  }
  if (*p == '\0') return seconds;
  if (*p == 'Z') return ++p, *p == '\0' ? std::optional<double>(seconds) : std::nullopt;
  if (*p == '+' || *p == '-') {
    int sign = *p == '+' ? -1 : 1;  // +02:00 means 2h earlier in UTC
    ++p;
    int oh, om = 0;
    if (!read_digits(2, oh)) return std::nullopt;
    if (*p == ':') {
      ++p;
      if (!read_digits(2, om)) return std::nullopt;
    }
    seconds += sign * (oh * 3600 + om * 60);
    return *p == '\0' ? std::optional<double>(seconds) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

event_log load_csv(const std::string& path, const csv_columns& columns,
                   load_stats* stats) {
  auto rows = parse_csv(read_file(path));
  if (rows.empty()) throw parse_error(path + ": empty CSV file");

  const auto& header = rows.front();
  auto column_of = [&header](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == name) return i;
    return std::nullopt;
  };
  auto case_col = column_of(columns.case_id);
  auto act_col = column_of(columns.activity);
  if (!case_col) throw parse_error(path + ": missing column '" + columns.case_id + "'");
  if (!act_col) throw parse_error(path + ": missing column '" + columns.activity + "'");
  auto ts_col = column_of(columns.timestamp);  // optional

  struct pending_event {
    event ev;
    double ts = 0;
    bool has_ts = false;
  };
  std::vector<std::string> case_order;
  std::map<std::string, std::vector<pending_event>> cases;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && trim(row[0]).empty()) continue;
    std::size_t needed = std::max(*case_col, *act_col);
    if (ts_col) needed = std::max(needed, *ts_col);
    if (row.size() <= needed)
      throw parse_error(path + ": row " + std::to_string(r + 1) + " has too few fields");
    std::string case_id = row[*case_col];
    pending_event pe;
    pe.ev.activity = row[*act_col];
    if (pe.ev.activity.empty())
      throw parse_error(path + ": row " + std::to_string(r + 1) + " has an empty activity");
    if (ts_col) {
      const std::string& raw = row[*ts_col];
      if (!trim(raw).empty()) {
        auto ts = parse_timestamp(raw);
        if (!ts)
          throw parse_error(path + ": row " + std::to_string(r + 1) +
                            ": unparsable timestamp '" + raw + "'");
        pe.ts = *ts;
        pe.has_ts = true;
        pe.ev.attributes["time:timestamp"] = trim(raw);
      }
    }
    auto [it, inserted] = cases.try_emplace(case_id);
    if (inserted) case_order.push_back(case_id);
    it->second.push_back(std::move(pe));
  }
  if (cases.empty()) throw parse_error(path + ": no complete cases");

  log_builder builder;
  for (const auto& case_id : case_order) {
    auto& events = cases[case_id];
    std::stable_sort(events.begin(), events.end(),
                     [](const pending_event& a, const pending_event& b) {
                       if (a.has_ts && b.has_ts) return a.ts < b.ts;
                       return false;  // untimed rows keep file order
                     });
    trace t;
    t.events.reserve(events.size());
    for (auto& pe : events) t.events.push_back(std::move(pe.ev));
    builder.add(std::move(t), 1);
  }
  if (stats) stats->skipped_empty_traces = 0;
  return std::move(builder).build();
}

// ----------------------------------------------------------------- XES logs

namespace {

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    auto rest = s.substr(i);
    auto take = [&](std::string_view entity, char c) {
      if (rest.substr(0, entity.size()) == entity) {
        out += c;
        i += entity.size() - 1;
        return true;
      }
      return false;
    };
    if (take("&amp;", '&') || take("&lt;", '<') || take("&gt;", '>') ||
        take("&quot;", '"') || take("&apos;", '\''))
      continue;
    out += '&';
  }
  return out;
}

struct xml_tag {
  std::string name;
  std::map<std::string, std::string> attrs;
  bool closing = false;      // </name>
  bool self_closing = false; // <name ... />
};

// Minimal tag scanner: enough for XES structure, not a general XML parser.
class xml_scanner {
 public:
  explicit xml_scanner(const std::string& text) : text_(text) {}

  std::optional<xml_tag> next() {
    while (true) {
      std::size_t lt = text_.find('<', pos_);
      if (lt == std::string::npos) return std::nullopt;
      if (text_.compare(lt, 4, "<!--") == 0) {
        std::size_t end = text_.find("-->", lt);
        if (end == std::string::npos) throw parse_error("unterminated XML comment");
        pos_ = end + 3;
        continue;
      }
      if (text_.compare(lt, 2, "<?") == 0 || text_.compare(lt, 2, "<!") == 0) {
        std::size_t end = text_.find('>', lt);
        if (end == std::string::npos) throw parse_error("unterminated XML declaration");
        pos_ = end + 1;
        continue;
      }
      std::size_t gt = text_.find('>', lt);
      if (gt == std::string::npos) throw parse_error("unterminated XML tag");
      pos_ = gt + 1;
      return parse_tag(text_.substr(lt + 1, gt - lt - 1));
    }
  }

 private:
  static xml_tag parse_tag(std::string body) {
    xml_tag tag;
    if (!body.empty() && body.front() == '/') {
      tag.closing = true;
      body.erase(0, 1);
    }
    if (!body.empty() && body.back() == '/') {
      tag.self_closing = true;
      body.pop_back();
    }
    std::size_t i = 0;
    while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    tag.name = body.substr(0, i);
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      std::size_t eq = body.find('=', i);
      if (eq == std::string::npos) break;
      std::string key = trim(body.substr(i, eq - i));
      std::size_t q1 = body.find_first_of("\"'", eq + 1);
      if (q1 == std::string::npos) throw parse_error("malformed XML attribute");
      char quote = body[q1];
      std::size_t q2 = body.find(quote, q1 + 1);
      if (q2 == std::string::npos) throw parse_error("malformed XML attribute");
      tag.attrs[key] = decode_entities(body.substr(q1 + 1, q2 - q1 - 1));
      i = q2 + 1;
    }
    return tag;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

event_log load_xes(const std::string& path, load_stats* stats) {
  std::string content = read_file(path);
  xml_scanner scanner(content);
  log_builder builder;
  std::size_t skipped = 0;
  std::size_t trace_index = 0;

  bool in_trace = false;
  bool in_event = false;
  trace current;
  event current_event;
  bool event_has_name = false;

  while (auto tag = scanner.next()) {
    if (tag->name == "trace") {
      if (tag->closing) {
        if (!in_trace) throw parse_error(path + ": stray </trace>");
        ++trace_index;
        if (current.events.empty())
          ++skipped;
        else
          builder.add(std::move(current), 1);
        current = {};
        in_trace = false;
      } else if (!tag->self_closing) {
        in_trace = true;
      } else {
        ++trace_index;
        ++skipped;  // <trace/> carries no events
      }
      continue;
    }
    if (tag->name == "event" && in_trace) {
      if (tag->closing) {
        if (!event_has_name)
          throw parse_error(path + ": event without concept:name in trace " +
                            std::to_string(trace_index + 1));
        current.events.push_back(std::move(current_event));
        current_event = {};
        event_has_name = false;
        in_event = false;
      } else if (tag->self_closing) {
        throw parse_error(path + ": event without concept:name in trace " +
                          std::to_string(trace_index + 1));
      } else {
        in_event = true;
      }
      continue;
    }
    if (in_event && !tag->closing) {
      auto key = tag->attrs.find("key");
      auto value = tag->attrs.find("value");
      if (key == tag->attrs.end() || value == tag->attrs.end()) continue;
      if (key->second == "concept:name") {
        current_event.activity = value->second;
        event_has_name = true;
      } else {
        current_event.attributes[key->second] = value->second;
      }
    }
  }
  if (in_trace || in_event) throw parse_error(path + ": truncated XES document");
  if (stats) stats->skipped_empty_traces = skipped;
  event_log log = std::move(builder).build();
  if (log.empty()) throw parse_error(path + ": no traces");
  return log;
}

event_log load_log(const std::string& path, const std::string& fmt,
                   const csv_columns& columns, load_stats* stats) {
  std::string kind = fmt;
  if (kind == "auto") {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == "xes") kind = "xes";
    else if (ext == "csv") kind = "csv";
    else kind = "txt";
  }
  if (kind == "xes") return load_xes(path, stats);
  if (kind == "csv") return load_csv(path, columns, stats);
  if (kind == "txt") return load_text(path, stats);
  throw parse_error("unknown log format: " + fmt);
}

}  // namespace specmeter
