#include "sepsub/tptp.hpp"

#include <cctype>

#include "sepsub/errors.hpp"

namespace sepsub {

namespace {

bool is_lower_word(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string tptp_symbol(const std::string& name) {
  if (is_lower_word(name)) return name;
  std::string quoted = "'";
  for (char c : name) {
    if (c == '\\' || c == '\'') quoted += '\\';
    quoted += c;
  }
  return quoted + "'";
}

std::string tptp_variable(const std::string& name) {
  std::string out = name;
  if (!out.empty() && std::islower(static_cast<unsigned char>(out[0])))
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  else if (out.empty() || !std::isupper(static_cast<unsigned char>(out[0])))
    out = "V" + out;
  return out;
}

std::string term_to_tptp(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return tptp_variable(t.name());
    case Term::Kind::Const:
      return tptp_symbol(t.name());
    case Term::Kind::App: {
      std::string out = tptp_symbol(t.name()) + "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ",";
        out += term_to_tptp(t.args()[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string fof(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Verum:
      return "$true";
    case K::Falsum:
      return "$false";
    case K::Rel: {
      std::string out = tptp_symbol(f.rel_name());
      if (f.terms().empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ",";
        out += term_to_tptp(f.terms()[i]);
      }
      return out + ")";
    }
    case K::Eq:
      return "(" + term_to_tptp(f.terms()[0]) + " = " +
             term_to_tptp(f.terms()[1]) + ")";
    case K::Mon:
      throw ValidationError("monadic atoms have no TPTP rendering");
    case K::Not:
      return "(~ " + fof(f.child(0)) + ")";
    case K::And:
    case K::Or: {
      const char* op = f.kind() == K::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += op;
        out += fof(f.children()[i]);
      }
      return out + ")";
    }
    case K::Implies:
      return "(" + fof(f.child(0)) + " => " + fof(f.child(1)) + ")";
    case K::Forall:
    case K::Exists: {
      std::string out = f.kind() == K::Forall ? "(! [" : "(? [";
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (i) out += ",";
        out += tptp_variable(f.vars()[i]);
      }
      return out + "] : " + fof(f.body()) + ")";
    }
  }
  return {};
}

// ---- reader -------------------------------------------------------------

struct Token {
  enum class Kind { Word, Variable, Punct, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  void expect(const std::string& punct) {
    if (tok_.kind != Token::Kind::Punct || tok_.text != punct)
      throw ParseError("expected '" + punct + "'", tok_.line, tok_.col);
    next();
  }

 private:
  void next() {
    skip();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::Kind::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (c == '\'') {
      advance();
      std::string word;
      while (pos_ < src_.size() && src_[pos_] != '\'') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
        word += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size())
        throw ParseError("unterminated quoted symbol", line_, col_);
      advance();
      tok_ = {Token::Kind::Word, word, tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::string word;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_' || src_[pos_] == '$')) {
        word += src_[pos_];
        advance();
      }
      bool variable = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      tok_ = {variable ? Token::Kind::Variable : Token::Kind::Word, word,
              tok_.line, tok_.col};
      return;
    }
    static const char* two[] = {"=>", "!=", "<=>"};
    for (const char* op : two) {
      std::size_t len = std::string(op).size();
      if (src_.compare(pos_, len, op) == 0) {
        for (std::size_t i = 0; i < len; ++i) advance();
        tok_ = {Token::Kind::Punct, op, tok_.line, tok_.col};
        return;
      }
    }
    advance();
    tok_ = {Token::Kind::Punct, std::string(1, c), tok_.line, tok_.col};
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{Token::Kind::End, "", 1, 1};
};

std::string demangle_variable(const std::string& name) {
  std::string out = name;
  if (!out.empty() && std::isupper(static_cast<unsigned char>(out[0])))
    out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  return out;
}

class FofParser {
 public:
  explicit FofParser(Lexer& lex) : lex_(lex) {}

  // binary ops at one precedence level, right-folded; enough for the
  // parenthesised output of to_tptp and hand-written chains.
  Formula formula() {
    Formula lhs = unitary();
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Punct &&
        (t.text == "&" || t.text == "|" || t.text == "=>" || t.text == "<=>")) {
      std::string op = lex_.take().text;
      std::vector<Formula> parts{lhs};
      while (true) {
        parts.push_back(unitary());
        const Token& nx = lex_.peek();
        if (nx.kind == Token::Kind::Punct && nx.text == op)
          lex_.take();
        else
          break;
      }
      if (op == "&") return Formula::conj(std::move(parts));
      if (op == "|") return Formula::disj(std::move(parts));
      if (parts.size() != 2)
        throw ParseError("'" + op + "' is binary", t.line, t.col);
      if (op == "=>") return Formula::implies(parts[0], parts[1]);
      // a <=> b as (a => b) & (b => a)
      return Formula::conj({Formula::implies(parts[0], parts[1]),
                            Formula::implies(parts[1], parts[0])});
    }
    return lhs;
  }

 private:
  Formula unitary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      lex_.take();
      Formula f = formula();
      lex_.expect(")");
      return f;
    }
    if (t.kind == Token::Kind::Punct && t.text == "~") {
      lex_.take();
      return Formula::negation(unitary());
    }
    if (t.kind == Token::Kind::Punct && (t.text == "!" || t.text == "?")) {
      bool universal = t.text == "!";
      lex_.take();
      lex_.expect("[");
      std::vector<std::string> vars;
      while (true) {
        Token v = lex_.take();
        if (v.kind != Token::Kind::Variable)
          throw ParseError("expected a variable", v.line, v.col);
        vars.push_back(demangle_variable(v.text));
        if (lex_.peek().kind == Token::Kind::Punct &&
            lex_.peek().text == ",") {
          lex_.take();
          continue;
        }
        break;
      }
      lex_.expect("]");
      lex_.expect(":");
      Formula body = unitary();
      return universal ? Formula::forall(std::move(vars), std::move(body))
                       : Formula::exists(std::move(vars), std::move(body));
    }
    if (t.kind == Token::Kind::Word && t.text == "$true") {
      lex_.take();
      return Formula::verum();
    }
    if (t.kind == Token::Kind::Word && t.text == "$false") {
      lex_.take();
      return Formula::falsum();
    }
    // an atom or the left side of an equality
    Term lhs = term();
    const Token& nx = lex_.peek();
    if (nx.kind == Token::Kind::Punct && (nx.text == "=" || nx.text == "!=")) {
      std::string op = lex_.take().text;
      Term rhs = term();
      Formula eq = Formula::eq(lhs, rhs);
      return op == "=" ? eq : Formula::negation(eq);
    }
    // plain predicate: reinterpret the term as a relational atom
    if (lhs.kind() == Term::Kind::Var)
      throw ParseError("unexpected variable in formula position", nx.line,
                       nx.col);
    return Formula::rel(lhs.name(), lhs.args());
  }

  Term term() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Variable)
      return Term::var(demangle_variable(t.text));
    if (t.kind != Token::Kind::Word)
      throw ParseError("expected a term", t.line, t.col);
    if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "(") {
      lex_.take();
      std::vector<Term> args;
      while (true) {
        args.push_back(term());
        if (lex_.peek().kind == Token::Kind::Punct &&
            lex_.peek().text == ",") {
          lex_.take();
          continue;
        }
        break;
      }
      lex_.expect(")");
      return Term::app(t.text, std::move(args));
    }
    return Term::constant(t.text);
  }

  Lexer& lex_;
};

}  // namespace

std::string to_tptp(const Formula& f) { return fof(f); }

std::vector<TptpUnit> parse_tptp(const std::string& text) {
  Lexer lex(text);
  std::vector<TptpUnit> units;
  while (lex.peek().kind != Token::Kind::End) {
    Token head = lex.take();
    if (head.kind != Token::Kind::Word || head.text != "fof")
      throw ParseError("expected 'fof'", head.line, head.col);
    lex.expect("(");
    Token name = lex.take();
    if (name.kind != Token::Kind::Word)
      throw ParseError("expected a unit name", name.line, name.col);
    lex.expect(",");
    Token role = lex.take();
    if (role.kind != Token::Kind::Word)
      throw ParseError("expected a role", role.line, role.col);
    lex.expect(",");
    FofParser parser(lex);
    Formula f = parser.formula();
    lex.expect(")");
    lex.expect(".");
    units.push_back({name.text, role.text, std::move(f)});
  }
  return units;
}

}  // namespace sepsub
