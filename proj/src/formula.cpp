#include "specmeter/formula.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace specmeter {

int arity(op k) {
  switch (k) {
    case op::const_true:
    case op::const_false:
    case op::atom:
    case op::trace_start:
    case op::trace_end:
      return 0;
    case op::lnot:
    case op::next:
    case op::yesterday:
    case op::eventually:
    case op::once:
    case op::always:
    case op::historically:
      return 1;
    case op::land:
    case op::lor:
    case op::implies:
    case op::until:
    case op::since:
      return 2;
  }
  return 0;
}

std::string_view op_name(op k) {
  switch (k) {
    case op::const_true: return "true";
    case op::const_false: return "false";
    case op::atom: return "atom";
    case op::trace_start: return "Start";
    case op::trace_end: return "End";
    case op::lnot: return "!";
    case op::land: return "&";
    case op::lor: return "|";
    case op::implies: return "->";
    case op::next: return "X";
    case op::yesterday: return "Y";
    case op::until: return "U";
    case op::since: return "S";
    case op::eventually: return "F";
    case op::once: return "O";
    case op::always: return "G";
    case op::historically: return "H";
  }
  return "?";
}

formula_ptr make_const(bool value) {
  static const auto t = std::make_shared<const formula>(formula{op::const_true, {}, nullptr, nullptr});
  static const auto f = std::make_shared<const formula>(formula{op::const_false, {}, nullptr, nullptr});
  return value ? t : f;
}

formula_ptr make_atom(std::string name) {
  return std::make_shared<const formula>(formula{op::atom, std::move(name), nullptr, nullptr});
}

formula_ptr make_start() {
  static const auto s = std::make_shared<const formula>(formula{op::trace_start, {}, nullptr, nullptr});
  return s;
}

formula_ptr make_end() {
  static const auto e = std::make_shared<const formula>(formula{op::trace_end, {}, nullptr, nullptr});
  return e;
}

formula_ptr make_unary(op k, formula_ptr f) {
  return std::make_shared<const formula>(formula{k, {}, std::move(f), nullptr});
}

formula_ptr make_binary(op k, formula_ptr l, formula_ptr r) {
  return std::make_shared<const formula>(formula{k, {}, std::move(l), std::move(r)});
}

std::size_t formula_size(const formula& f) {
  std::size_t n = 1;
  if (f.lhs) n += formula_size(*f.lhs);
  if (f.rhs) n += formula_size(*f.rhs);
  return n;
}

bool equal(const formula& a, const formula& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == op::atom) return a.symbol == b.symbol;
  if (bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs)) return false;
  if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

formula_ptr negate(formula_ptr f) {
  if (f->kind == op::lnot) return f->lhs;  // !!f -> f
  return make_unary(op::lnot, std::move(f));
}

}  // namespace

formula_ptr expand_derived(const formula_ptr& f) {
  switch (f->kind) {
    case op::const_true:
    case op::const_false:
    case op::atom:
      return f;
    case op::trace_start:  // Start == !Y true
      return negate(make_unary(op::yesterday, make_const(true)));
    case op::trace_end:    // End == !X true
      return negate(make_unary(op::next, make_const(true)));
    case op::eventually:   // F f == true U f
      return make_binary(op::until, make_const(true), expand_derived(f->lhs));
    case op::once:         // O f == true S f
      return make_binary(op::since, make_const(true), expand_derived(f->lhs));
    case op::always:       // G f == !(true U !f)
      return negate(make_binary(op::until, make_const(true),
                                negate(expand_derived(f->lhs))));
    case op::historically: // H f == !(true S !f)
      return negate(make_binary(op::since, make_const(true),
                                negate(expand_derived(f->lhs))));
    case op::lnot:
      return negate(expand_derived(f->lhs));
    case op::land:
    case op::lor:
    case op::implies:
    case op::until:
    case op::since: {
      auto l = expand_derived(f->lhs);
      auto r = expand_derived(f->rhs);
      if (l == f->lhs && r == f->rhs) return f;
      return make_binary(f->kind, std::move(l), std::move(r));
    }
    case op::next:
    case op::yesterday: {
      auto sub = expand_derived(f->lhs);
      if (sub == f->lhs) return f;
      return make_unary(f->kind, std::move(sub));
    }
  }
  return f;
}

formula_ptr mirror(const formula_ptr& f) {
  auto swap_kind = [](op k) {
    switch (k) {
      case op::next: return op::yesterday;
      case op::yesterday: return op::next;
      case op::until: return op::since;
      case op::since: return op::until;
      case op::eventually: return op::once;
      case op::once: return op::eventually;
      case op::always: return op::historically;
      case op::historically: return op::always;
      case op::trace_start: return op::trace_end;
      case op::trace_end: return op::trace_start;
      default: return k;
    }
  };
  op k = swap_kind(f->kind);
  switch (arity(f->kind)) {
    case 0:
      if (k == f->kind) return f;
      return std::make_shared<const formula>(formula{k, f->symbol, nullptr, nullptr});
    case 1:
      return make_unary(k, mirror(f->lhs));
    default:
      return make_binary(k, mirror(f->lhs), mirror(f->rhs));
  }
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

// Keywords of the surface syntax; atoms spelled like one must be quoted.
bool is_reserved_word(std::string_view s) {
  static constexpr std::array<std::string_view, 12> words = {
      "true", "false", "Start", "End", "U", "S", "X", "Y", "F", "O", "G", "H"};
  for (auto w : words)
    if (w == s) return true;
  return false;
}

void print_atom(const std::string& name, std::string& out) {
  bool plain = !name.empty() && is_ident_start(name[0]) && !is_reserved_word(name);
  if (plain)
    for (char c : name)
      if (!is_ident_char(c)) { plain = false; break; }
  if (plain) {
    out += name;
    return;
  }
  out += '"';
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void print(const formula& f, std::string& out) {
  switch (arity(f.kind)) {
    case 0:
      if (f.kind == op::atom)
        print_atom(f.symbol, out);
      else
        out += op_name(f.kind);
      return;
    case 1:
      out += op_name(f.kind);
      if (f.kind != op::lnot) out += ' ';
      if (arity(f.lhs->kind) == 0) {
        print(*f.lhs, out);
      } else {
        out += '(';
        print(*f.lhs, out);
        out += ')';
      }
      return;
    default:
      out += '(';
      print(*f.lhs, out);
      out += ") ";
      out += op_name(f.kind);
      out += " (";
      print(*f.rhs, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const formula& f) {
  std::string out;
  print(f, out);
  return out;
}

namespace {

struct token {
  enum kind_t { ident, quoted, lparen, rparen, bang, amp, pipe, arrow, end } kind;
  std::string text;
  std::size_t pos;
};

class lexer {
 public:
  explicit lexer(std::string_view text) : text_(text) { advance(); }

  const token& peek() const { return current_; }

  token next() {
    token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {token::end, "", start};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; current_ = {token::lparen, "(", start}; return;
      case ')': ++pos_; current_ = {token::rparen, ")", start}; return;
      case '!': ++pos_; current_ = {token::bang, "!", start}; return;
      case '&': ++pos_; current_ = {token::amp, "&", start}; return;
      case '|': ++pos_; current_ = {token::pipe, "|", start}; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {token::arrow, "->", start};
          return;
        }
        throw syntax_error("stray '-'", start);
      case '"': {
        ++pos_;
        std::string value;
        while (pos_ < text_.size() && text_[pos_] != '"') {
          if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
          value += text_[pos_++];
        }
        if (pos_ >= text_.size())
          throw syntax_error("unterminated quoted atom", start);
        ++pos_;  // closing quote
        current_ = {token::quoted, std::move(value), start};
        return;
      }
      default:
        if (is_ident_start(c)) {
          while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
          current_ = {token::ident, std::string(text_.substr(start, pos_ - start)), start};
          return;
        }
        throw syntax_error(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  token current_{token::end, "", 0};
};

// implies := or ('->' implies)?        right-assoc, lowest precedence
// or      := and ('|' or)?
// and     := temporal ('&' and)?
// temporal:= unary (('U'|'S') temporal)?
// unary   := ('!'|'X'|'Y'|'F'|'O'|'G'|'H') unary | primary
// primary := '(' implies ')' | constant | atom
class parser {
 public:
  explicit parser(std::string_view text) : lex_(text) {}

  formula_ptr parse() {
    auto f = parse_implies();
    const token& t = lex_.peek();
    if (t.kind != token::end)
      throw syntax_error("trailing input after formula", t.pos);
    return f;
  }

 private:
  formula_ptr parse_implies() {
    auto lhs = parse_or();
    if (lex_.peek().kind == token::arrow) {
      lex_.next();
      return make_binary(op::implies, std::move(lhs), parse_implies());
    }
    return lhs;
  }

  formula_ptr parse_or() {
    auto lhs = parse_and();
    if (lex_.peek().kind == token::pipe) {
      lex_.next();
      return make_binary(op::lor, std::move(lhs), parse_or());
    }
    return lhs;
  }

  formula_ptr parse_and() {
    auto lhs = parse_temporal();
    if (lex_.peek().kind == token::amp) {
      lex_.next();
      return make_binary(op::land, std::move(lhs), parse_and());
    }
    return lhs;
  }

  formula_ptr parse_temporal() {
    auto lhs = parse_unary();
    const token& t = lex_.peek();
    if (t.kind == token::ident && (t.text == "U" || t.text == "S")) {
      op k = t.text == "U" ? op::until : op::since;
      lex_.next();
      return make_binary(k, std::move(lhs), parse_temporal());
    }
    return lhs;
  }

  formula_ptr parse_unary() {
    const token& t = lex_.peek();
    if (t.kind == token::bang) {
      lex_.next();
      return make_unary(op::lnot, parse_unary());
    }
    if (t.kind == token::ident && t.text.size() == 1) {
      op k;
      switch (t.text[0]) {
        case 'X': k = op::next; break;
        case 'Y': k = op::yesterday; break;
        case 'F': k = op::eventually; break;
        case 'O': k = op::once; break;
        case 'G': k = op::always; break;
        case 'H': k = op::historically; break;
        default: return parse_primary();
      }
      lex_.next();
      return make_unary(k, parse_unary());
    }
    return parse_primary();
  }

  formula_ptr parse_primary() {
    token t = lex_.next();
    switch (t.kind) {
      case token::lparen: {
        auto f = parse_implies();
        token close = lex_.next();
        if (close.kind != token::rparen)
          throw syntax_error("expected ')'", close.pos);
        return f;
      }
      case token::quoted:
        if (t.text.empty()) throw syntax_error("empty atom name", t.pos);
        return make_atom(std::move(t.text));
      case token::ident:
        if (t.text == "true") return make_const(true);
        if (t.text == "false") return make_const(false);
        if (t.text == "Start") return make_start();
        if (t.text == "End") return make_end();
        if (t.text == "U" || t.text == "S")
          throw syntax_error("operator '" + t.text + "' needs a left operand", t.pos);
        return make_atom(std::move(t.text));
      case token::end:
        throw syntax_error("unexpected end of input", t.pos);
      default:
        throw syntax_error("unexpected token '" + t.text + "'", t.pos);
    }
  }

  lexer lex_;
};

}  // namespace

formula_ptr parse_formula(std::string_view text) {
  if (text.empty()) throw syntax_error("empty formula", 0);
  return parser(text).parse();
}

}  // namespace specmeter
