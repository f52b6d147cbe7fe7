#include "tgl/gff.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace tgl {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr int kEof = -1;

/// Buffered character source with line/column tracking.
class CharSource {
 public:
  explicit CharSource(std::istream& in) : in_(in) {}

  int peek() {
    if (pos_ == len_ && !refill()) return kEof;
    return static_cast<unsigned char>(buf_[pos_]);
  }

  int get() {
    int c = peek();
    if (c == kEof) return c;
    ++pos_;
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  bool refill() {
    if (!in_) return false;
    len_ = static_cast<std::size_t>(in_.rdbuf()->sgetn(buf_.data(), buf_.size()));
    pos_ = 0;
    if (len_ == 0) {
      in_.setstate(std::ios::eofbit);
      return false;
    }
    return true;
  }

  std::istream& in_;
  std::array<char, 1 << 16> buf_{};
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

enum class Tok { atom, integer, lparen, rparen, lbracket, rbracket, comma, end, eof };

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  std::int64_t value = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::atom: return "atom";
    case Tok::integer: return "integer";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::end: return "end of clause";
    case Tok::eof: return "end of input";
  }
  return "token";
}

bool is_lower(int c) { return c >= 'a' && c <= 'z'; }
bool is_digit(int c) { return c >= '0' && c <= '9'; }
bool is_alnum(int c) {
  return is_lower(c) || is_digit(c) || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_space(int c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool ends_clause(int c) { return c == kEof || is_space(c) || c == '%'; }

class Lexer {
 public:
  explicit Lexer(std::istream& in) : src_(in) {}

  Token next() {
    if (pushed_) {
      pushed_ = false;
      return std::move(pending_);
    }
    return lex();
  }

  const Token& peek() {
    if (!pushed_) {
      pending_ = lex();
      pushed_ = true;
    }
    return pending_;
  }

  /// First raw character of the next token; only valid with no token pending.
  int peek_char() {
    skip_layout();
    return src_.peek();
  }

  /// Skips whitespace/comments and reports whether input remains.
  bool at_eof() {
    if (pushed_) return pending_.kind == Tok::eof;
    skip_layout();
    return src_.peek() == kEof;
  }

  /// Discards raw text up to and including the next clause terminator.
  void skip_clause() {
    if (pushed_) {
      pushed_ = false;
      if (pending_.kind == Tok::end) return;
      if (pending_.kind == Tok::eof) return;
    }
    const std::size_t line = src_.line(), column = src_.column();
    for (;;) {
      int c = src_.get();
      if (c == kEof) throw SyntaxError(line, column, "unterminated clause");
      if (c == '%') {
        while (c != kEof && c != '\n') c = src_.get();
      } else if (c == '\'' || c == '"' || c == '`') {
        const int quote = c;
        for (;;) {
          int d = src_.get();
          if (d == kEof) throw SyntaxError(line, column, "unterminated quoted text");
          if (d == quote) {
            if (src_.peek() == quote) {
              src_.get();
              continue;
            }
            break;
          }
        }
      } else if (c == '.' && ends_clause(src_.peek())) {
        return;
      }
    }
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw SyntaxError(at.line, at.column, message);
  }

 private:
  void skip_layout() {
    for (;;) {
      int c = src_.peek();
      if (is_space(c)) {
        src_.get();
      } else if (c == '%') {
        while (c != kEof && c != '\n') c = src_.get();
      } else {
        return;
      }
    }
  }

  Token lex() {
    skip_layout();
    Token t;
    t.line = src_.line();
    t.column = src_.column();
    int c = src_.peek();
    if (c == kEof) {
      t.kind = Tok::eof;
      return t;
    }
    if (is_lower(c)) {
      t.kind = Tok::atom;
      while (is_alnum(src_.peek())) t.text.push_back(static_cast<char>(src_.get()));
      return t;
    }
    if (c == '\'') {
      src_.get();
      t.kind = Tok::atom;
      for (;;) {
        int d = src_.get();
        if (d == kEof) throw SyntaxError(t.line, t.column, "unterminated quoted atom");
        if (d == '\'') {
          if (src_.peek() != '\'') break;
          src_.get();
        }
        t.text.push_back(static_cast<char>(d));
      }
      return t;
    }
    if (is_digit(c) || c == '-') {
      if (c == '-') t.text.push_back(static_cast<char>(src_.get()));
      if (!is_digit(src_.peek())) throw SyntaxError(t.line, t.column, "unexpected character '-'");
      while (is_digit(src_.peek())) t.text.push_back(static_cast<char>(src_.get()));
      if (is_alnum(src_.peek())) {
        throw SyntaxError(t.line, t.column, "malformed integer");
      }
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc{}) throw SyntaxError(t.line, t.column, "integer out of range: " + t.text);
      t.kind = Tok::integer;
      return t;
    }
    src_.get();
    switch (c) {
      case '(': t.kind = Tok::lparen; return t;
      case ')': t.kind = Tok::rparen; return t;
      case '[': t.kind = Tok::lbracket; return t;
      case ']': t.kind = Tok::rbracket; return t;
      case ',': t.kind = Tok::comma; return t;
      case '.':
        if (!ends_clause(src_.peek())) throw SyntaxError(t.line, t.column, "unexpected '.'");
        t.kind = Tok::end;
        return t;
      default:
        break;
    }
    std::string msg = "unexpected character '";
    msg.push_back(static_cast<char>(c));
    msg += "'";
    throw SyntaxError(t.line, t.column, msg);
  }

  CharSource src_;
  Token pending_;
  bool pushed_ = false;
};

Token expect(Lexer& lx, Tok kind) {
  Token t = lx.next();
  if (t.kind != kind) {
    lx.fail(t, std::string("expected ") + describe(kind) + ", found " + describe(t.kind));
  }
  return t;
}

GroundTerm parse_term_at(Lexer& lx) {
  Token t = lx.next();
  if (t.kind == Tok::integer) return GroundTerm::integer(t.value);
  if (t.kind != Tok::atom) lx.fail(t, std::string("expected term, found ") + describe(t.kind));
  if (lx.peek().kind != Tok::lparen) return GroundTerm::atom(std::move(t.text));
  lx.next();
  std::vector<GroundTerm> args;
  for (;;) {
    args.push_back(parse_term_at(lx));
    Token sep = lx.next();
    if (sep.kind == Tok::rparen) break;
    if (sep.kind != Tok::comma) {
      lx.fail(sep, std::string("expected ',' or ')', found ") + describe(sep.kind));
    }
  }
  return GroundTerm::compound(std::move(t.text), std::move(args));
}

std::int64_t parse_non_negative(Lexer& lx, const char* what) {
  Token t = expect(lx, Tok::integer);
  if (t.value < 0) {
    throw ValidationError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": negative " +
                          what);
  }
  return t.value;
}

NodeRecord parse_at_body(Lexer& lx) {
  NodeRecord r;
  r.id = static_cast<NodeId>(parse_non_negative(lx, "node id"));
  expect(lx, Tok::comma);
  Token split = expect(lx, Tok::atom);
  auto s = parse_split(split.text);
  if (!s) {
    throw ValidationError(std::to_string(split.line) + ":" + std::to_string(split.column) +
                          ": unknown split marker '" + split.text + "'");
  }
  r.split = *s;
  expect(lx, Tok::comma);
  const auto label = parse_non_negative(lx, "label");
  if (label > std::numeric_limits<Label>::max()) {
    throw ValidationError("label out of range: " + std::to_string(label));
  }
  r.label = static_cast<Label>(label);
  expect(lx, Tok::comma);
  r.content = parse_term_at(lx);
  expect(lx, Tok::comma);
  expect(lx, Tok::lbracket);
  if (lx.peek().kind == Tok::rbracket) {
    lx.next();
  } else {
    for (;;) {
      r.neighbors.push_back(static_cast<NodeId>(parse_non_negative(lx, "neighbor id")));
      Token sep = lx.next();
      if (sep.kind == Tok::rbracket) break;
      if (sep.kind != Tok::comma) {
        lx.fail(sep, std::string("expected ',' or ']', found ") + describe(sep.kind));
      }
    }
  }
  expect(lx, Tok::rparen);
  return r;
}

}  // namespace

Dataset parse_fact_file(std::istream& in, const ParseOptions& options, ParseStats* stats) {
  Lexer lx(in);
  std::vector<NodeRecord> records;
  ParseStats local;
  while (!lx.at_eof()) {
    const int first = lx.peek_char();
    Token head;
    if (is_lower(first) || first == '\'') head = lx.peek();
    bool is_at = false;
    if (head.kind == Tok::atom && head.text == "at") {
      lx.next();
      if (lx.peek().kind == Tok::lparen) {
        lx.next();
        is_at = true;
      }
    }
    if (!is_at) {
      if (options.strict) throw ValidationError("clause is not at/5 (strict mode)");
      lx.skip_clause();
      ++local.skipped;
      continue;
    }
    records.push_back(parse_at_body(lx));
    expect(lx, Tok::end);
    ++local.clauses;
  }
  if (stats) *stats = local;
  return Dataset::from_records(std::move(records), options.num_labels);
}

Dataset parse_fact_text(std::string_view text, const ParseOptions& options, ParseStats* stats) {
  std::istringstream in{std::string(text)};
  return parse_fact_file(in, options, stats);
}

Dataset load_fact_file(const std::filesystem::path& path, const ParseOptions& options,
                       ParseStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_fact_file(in, options, stats);
}

GroundTerm parse_term(std::string_view text) {
  std::istringstream in{std::string(text)};
  Lexer lx(in);
  GroundTerm t = parse_term_at(lx);
  Token rest = lx.next();
  if (rest.kind != Tok::eof) {
    lx.fail(rest, std::string("trailing input: ") + describe(rest.kind));
  }
  return t;
}

bool atom_needs_quotes(std::string_view name) {
  if (name.empty() || !is_lower(static_cast<unsigned char>(name.front()))) return true;
  for (char c : name) {
    if (!is_alnum(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::string quote_atom(std::string_view name) {
  if (!atom_needs_quotes(name)) return std::string(name);
  std::string out;
  out.reserve(name.size() + 2);
  out.push_back('\'');
  for (char c : name) {
    if (c == '\'') out.push_back('\'');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

void append_term(std::string& out, const GroundTerm& t) {
  if (t.kind() == GroundTerm::Kind::integer) {
    out += t.symbol();
    return;
  }
  out += quote_atom(t.symbol());
  if (t.is_atomic()) return;
  out.push_back('(');
  bool first = true;
  for (const auto& a : t.args()) {
    if (!first) out.push_back(',');
    first = false;
    append_term(out, a);
  }
  out.push_back(')');
}

std::string serialize_term(const GroundTerm& t) {
  std::string out;
  append_term(out, t);
  return out;
}

std::string serialize_record(const NodeRecord& r) {
  std::string out = "at(";
  out += std::to_string(r.id);
  out.push_back(',');
  out += split_name(r.split);
  out.push_back(',');
  out += std::to_string(r.label);
  out.push_back(',');
  append_term(out, r.content);
  out += ",[";
  for (std::size_t i = 0; i < r.neighbors.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(r.neighbors[i]);
  }
  out += "]).\n";
  return out;
}

void write_fact_file(std::ostream& out, const Dataset& d) {
  for (const auto& r : d.records()) out << serialize_record(r);
}

}  // namespace tgl
