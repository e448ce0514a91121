#include "sepsub/sexpr.hpp"

#include <cctype>

#include "sepsub/errors.hpp"

namespace sepsub {

Sexpr Sexpr::make_atom(std::string text, int line, int col) {
  Sexpr e;
  e.is_atom = true;
  e.atom = std::move(text);
  e.line = line;
  e.col = col;
  return e;
}

Sexpr Sexpr::make_list(std::vector<Sexpr> items, int line, int col) {
  Sexpr e;
  e.items = std::move(items);
  e.line = line;
  e.col = col;
  return e;
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& src) : src_(src) {}

  std::vector<Sexpr> read_all() {
    std::vector<Sexpr> out;
    skip_ws();
    while (!eof()) {
      out.push_back(read_expr());
      skip_ws();
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Sexpr read_expr() {
    int line = line_, col = col_;
    char c = peek();
    if (c == '(') {
      advance();
      std::vector<Sexpr> items;
      skip_ws();
      while (!eof() && peek() != ')') {
        items.push_back(read_expr());
        skip_ws();
      }
      if (eof()) throw ParseError("unterminated list", line, col);
      advance();  // ')'
      return Sexpr::make_list(std::move(items), line, col);
    }
    if (c == ')') throw ParseError("unexpected ')'", line, col);
    std::string text;
    while (!eof()) {
      c = peek();
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      text.push_back(c);
      advance();
    }
    return Sexpr::make_atom(std::move(text), line, col);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Sexpr> parse_sexprs(const std::string& src) {
  return Reader(src).read_all();
}

Sexpr parse_sexpr(const std::string& src) {
  auto all = parse_sexprs(src);
  if (all.empty()) throw ParseError("empty input", 1, 1);
  if (all.size() > 1)
    throw ParseError("expected a single expression", all[1].line, all[1].col);
  return std::move(all[0]);
}

std::string sexpr_to_string(const Sexpr& e) {
  if (e.is_atom) return e.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out += ' ';
    out += sexpr_to_string(e.items[i]);
  }
  out += ')';
  return out;
}

}  // namespace sepsub
