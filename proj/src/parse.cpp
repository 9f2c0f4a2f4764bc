#include "kch/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "kch/ratfunc.hpp"

namespace kch {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        id += take();
      return {Tok::Ident, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        num += take();
      return {Tok::Int, num, line, col};
    }
    take();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      case '=': return {Tok::Eq, "=", line, col};
      default:
        throw ParseError(std::string("unknown token '") + c + "'", line, col);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < s_.size() && s_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }
  char take() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

/// Recursive-descent expression parser over an abstract coefficient algebra.
/// Value must support: add, sub, neg, mul, pow(long) and construction from
/// integers and identifiers.
template <typename Alg>
class ExprParser {
 public:
  ExprParser(Lexer& lex, Alg& alg) : lex_(lex), alg_(alg) { advance(); }

  typename Alg::Value parse_expr() {
    bool neg = false;
    if (cur_.kind == Tok::Minus) {
      neg = true;
      advance();
    }
    auto v = parse_term();
    if (neg) v = alg_.neg(v);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      auto rhs = parse_term();
      v = minus ? alg_.sub(v, rhs) : alg_.add(v, rhs);
    }
    return v;
  }

  Token current() const { return cur_; }

 private:
  typename Alg::Value parse_term() {
    auto v = parse_power();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool div = cur_.kind == Tok::Slash;
      Token op = cur_;
      advance();
      auto rhs = parse_power();
      v = div ? alg_.div(v, rhs, op) : alg_.mul(v, rhs);
    }
    return v;
  }

  typename Alg::Value parse_power() {
    auto v = parse_atom();
    if (cur_.kind == Tok::Caret) {
      advance();
      long sign = 1;
      if (cur_.kind == Tok::Minus) {
        sign = -1;
        advance();
      }
      if (cur_.kind != Tok::Int)
        throw ParseError("expected integer exponent after '^'", cur_.line, cur_.col);
      long e = 0;
      try {
        e = std::stol(cur_.text);
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", cur_.line, cur_.col);
      }
      Token at = cur_;
      advance();
      v = alg_.pow(v, sign * e, at);
    }
    return v;
  }

  typename Alg::Value parse_atom() {
    if (cur_.kind == Tok::Int) {
      auto v = alg_.from_int(cur_.text);
      advance();
      return v;
    }
    if (cur_.kind == Tok::Ident) {
      auto v = alg_.from_ident(cur_.text, cur_);
      advance();
      return v;
    }
    if (cur_.kind == Tok::LParen) {
      advance();
      auto v = parse_expr();
      if (cur_.kind != Tok::RParen)
        throw ParseError("expected ')'", cur_.line, cur_.col);
      advance();
      return v;
    }
    throw ParseError("expected a value, found '" + cur_.text + "'", cur_.line, cur_.col);
  }

  void advance() { cur_ = lex_.next(); }

  Lexer& lex_;
  Alg& alg_;
  Token cur_;
};

// --- evaluator: noncommutative algebra elements --------------------------

struct NCAlg {
  using Value = NCElement;
  const DGAlgebra* algebra;
  const std::function<bool(const std::string&)> is_generator;

  Value from_int(const std::string& text) {
    return NCElement::scalar(LaurentPoly::constant(dga_vars(), Rat(text)));
  }
  Value from_ident(const std::string& id, const Token& tok) {
    if (dga_vars().contains(id))
      return NCElement::scalar(LaurentPoly::variable(dga_vars(), id));
    if (is_generator(id)) return NCElement::generator(dga_vars(), id);
    throw ParseError("undeclared generator '" + id + "'", tok.line, tok.col);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return nc_mul_free(a, b); }
  Value div(const Value&, const Value&, const Token& tok) {
    throw ParseError("'/' is not available in algebra expressions", tok.line, tok.col);
  }
  Value pow(const Value& v, long e, const Token& tok) {
    if (e >= 0) {
      Value acc = NCElement::scalar(LaurentPoly::constant(dga_vars(), 1));
      for (long i = 0; i < e; ++i) acc = nc_mul_free(acc, v);
      return acc;
    }
    // negative powers only for invertible scalars (unit monomials)
    auto& terms = v.terms();
    if (terms.size() == 1 && terms.begin()->first.letters.empty() &&
        terms.begin()->second.is_unit_monomial())
      return NCElement::scalar(terms.begin()->second.pow(e));
    throw ParseError("negative power of a non-invertible element", tok.line, tok.col);
  }

  static Value nc_mul_free(const Value& a, const Value& b);
};

NCElement NCAlg::nc_mul_free(const NCElement& a, const NCElement& b) {
  // concatenation product without an algebra context; letters were already
  // validated when the identifiers were read
  NCElement r(dga_vars());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      NCWord w = wa;
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      r += NCElement::word(dga_vars(), std::move(w), ca * cb);
    }
  return r;
}

// --- evaluator: quantum torus --------------------------------------------

struct QTAlg {
  using Value = QTElement;

  Value from_int(const std::string& text) {
    return QTElement::monomial(0, 0, RatFunc::constant(qt_vars(), Rat(text)));
  }
  Value from_ident(const std::string& id, const Token& tok) {
    if (id == "Ex") return QTElement::monomial(1, 0);
    if (id == "Ep") return QTElement::monomial(0, 1);
    if (qt_vars().contains(id))
      return QTElement::monomial(0, 0, RatFunc::variable(qt_vars(), id));
    throw ParseError("unknown operator symbol '" + id + "'", tok.line, tok.col);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return qt_mul(a, b); }
  Value div(const Value& a, const Value& b, const Token& tok) {
    if (b.term_count() == 1) {
      try {
        return qt_mul(a, b.pow(-1));
      } catch (const std::exception&) {
      }
    }
    throw ParseError("'/' needs an invertible operator monomial", tok.line, tok.col);
  }
  Value pow(const Value& v, long e, const Token& tok) {
    try {
      return v.pow(e);
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), tok.line, tok.col);
    }
  }
};

// --- evaluator: commutative rational functions ----------------------------

struct RFAlg {
  using Value = RatFunc;
  VarSet vars;

  Value from_int(const std::string& text) { return RatFunc::constant(vars, Rat(text)); }
  Value from_ident(const std::string& id, const Token& tok) {
    if (vars.contains(id)) return RatFunc::variable(vars, id);
    throw ParseError("unknown variable '" + id + "'", tok.line, tok.col);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value neg(const Value& a) { return -a; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b, const Token& tok) {
    if (b.is_zero()) throw ParseError("division by zero", tok.line, tok.col);
    return a / b;
  }
  Value pow(const Value& v, long e, const Token& tok) {
    if (e < 0 && v.is_zero())
      throw ParseError("negative power of zero", tok.line, tok.col);
    return v.pow(e);
  }
};

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

DGAlgebra parse_algebra_file(const std::string& text) {
  auto lines = split_lines(text);
  std::string name = "algebra";
  std::vector<ChordGen> gens;
  std::map<std::string, int> degree;
  std::map<std::string, NCElement> diffs;

  for (size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = strip_comment(lines[ln]);
    if (blank(line)) continue;
    int lineno = static_cast<int>(ln + 1);
    std::istringstream is(line);
    std::string head;
    is >> head;
    if (head == "algebra") {
      if (!(is >> name))
        throw ParseError("expected a name after 'algebra'", lineno, 1);
    } else if (head == "generator") {
      std::string gname, kw;
      long deg;
      if (!(is >> gname >> kw >> deg) || kw != "degree")
        throw ParseError("expected 'generator <name> degree <int>'", lineno, 1);
      if (deg < 0)
        throw ParseError("negative degree for generator '" + gname + "'", lineno, 1);
      if (degree.count(gname))
        throw ParseError("duplicate generator '" + gname + "'", lineno, 1);
      if (dga_vars().contains(gname))
        throw ParseError("generator name '" + gname + "' collides with a coefficient variable",
                         lineno, 1);
      degree[gname] = static_cast<int>(deg);
      gens.push_back({gname, static_cast<int>(deg)});
    } else if (head == "d") {
      std::string gname;
      if (!(is >> gname))
        throw ParseError("expected 'd <name> = <expr>'", lineno, 1);
      if (!degree.count(gname))
        throw ParseError("differential for undeclared generator '" + gname + "'", lineno, 1);
      if (diffs.count(gname))
        throw ParseError("duplicate differential for '" + gname + "'", lineno, 1);
      std::string rest;
      std::getline(is, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected '=' in differential assignment", lineno, 1);
      std::string expr = rest.substr(eq + 1);
      Lexer lex(expr);
      NCAlg alg{nullptr, [&](const std::string& id) { return degree.count(id) > 0; }};
      ExprParser<NCAlg> p(lex, alg);
      NCElement value;
      try {
        value = p.parse_expr();
        if (p.current().kind != Tok::End)
          throw ParseError("trailing input '" + p.current().text + "'",
                           p.current().line, p.current().col);
      } catch (ParseError& e) {
        throw ParseError(std::string(e.what()) + " (in differential of '" + gname + "')",
                         lineno, e.col);
      }
      diffs[gname] = std::move(value);
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, 1);
    }
  }
  if (gens.empty()) throw ParseError("no generators declared", 1, 1);
  return DGAlgebra(name, std::move(gens), std::move(diffs));
}

QTElement parse_operator_file(const std::string& text) {
  std::string body;
  for (const auto& line : split_lines(text)) {
    std::string s = strip_comment(line);
    if (blank(s)) {
      body += "\n";
      continue;
    }
    std::istringstream is(s);
    std::string head;
    is >> head;
    if (head == "operator") continue;  // optional header line
    body += s;
    body += "\n";
  }
  Lexer lex(body);
  QTAlg alg;
  ExprParser<QTAlg> p(lex, alg);
  QTElement v = p.parse_expr();
  if (p.current().kind != Tok::End)
    throw ParseError("trailing input '" + p.current().text + "'", p.current().line,
                     p.current().col);
  return v;
}

LaurentPoly parse_poly_file(const std::string& text) {
  Lexer lex(text);
  RFAlg alg{dga_vars()};
  ExprParser<RFAlg> p(lex, alg);
  RatFunc v = p.parse_expr();
  if (p.current().kind != Tok::End)
    throw ParseError("trailing input '" + p.current().text + "'", p.current().line,
                     p.current().col);
  if (!v.is_polynomial())
    throw ParseError("expression is not a Laurent polynomial", 1, 1);
  return v.num();
}

Wavefunction parse_wavefunction_file(const std::string& text) {
  Wavefunction psi;
  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = strip_comment(lines[ln]);
    if (blank(line)) continue;
    Lexer lex(line);
    RFAlg alg{qt_vars()};
    ExprParser<RFAlg> p(lex, alg);
    try {
      psi.H.push_back(p.parse_expr());
      if (p.current().kind != Tok::End)
        throw ParseError("trailing input '" + p.current().text + "'",
                         p.current().line, p.current().col);
    } catch (ParseError& e) {
      throw ParseError(std::string(e.what()) + " (mode " + std::to_string(psi.H.size()) + ")",
                       static_cast<int>(ln + 1), e.col);
    }
  }
  if (psi.H.empty()) throw ParseError("empty wavefunction", 1, 1);
  return psi;
}

std::string algebra_file_string(const DGAlgebra& A) {
  std::ostringstream os;
  os << "algebra " << A.name() << "\n";
  for (const auto& g : A.generators())
    os << "generator " << g.name << " degree " << g.degree << "\n";
  for (const auto& g : A.generators()) {
    const NCElement& d = A.differential(g.name);
    if (!d.is_zero() || g.degree >= 1)
      os << "d " << g.name << " = " << d.str() << "\n";
  }
  return os.str();
}

CurveCatalog parse_catalog_file(const std::string& text) {
  CurveCatalog cat;
  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = strip_comment(lines[ln]);
    if (blank(line)) continue;
    int lineno = static_cast<int>(ln + 1);
    std::istringstream is(line);
    std::string head;
    is >> head;
    if (head == "curve") {
      std::string id;
      if (!(is >> id)) throw ParseError("expected curve id", lineno, 1);
      Curve c;
      c.id = id;
      c.weight = Rat(1);
      std::string kv;
      while (is >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw ParseError("expected key=value, got '" + kv + "'", lineno, 1);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        try {
          if (key == "w") {
            c.weight = Rat(val);
            c.weight.canonicalize();
          } else if (key == "chi")
            c.chi = std::stoi(val);
          else if (key == "m")
            c.m = std::stoi(val);
          else if (key == "k")
            c.k = std::stoi(val);
          else if (key == "slk")
            c.slk = std::stoi(val);
          else
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        } catch (const std::invalid_argument&) {
          throw ParseError("bad value '" + val + "' for key '" + key + "'", lineno, 1);
        } catch (const std::out_of_range&) {
          throw ParseError("value out of range for key '" + key + "'", lineno, 1);
        }
      }
      try {
        cat.add_curve(std::move(c));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else if (head == "link") {
      std::string a, b;
      int lk;
      if (!(is >> a >> b >> lk))
        throw ParseError("expected 'link <id> <id> <int>'", lineno, 1);
      try {
        cat.set_linking(a, b, lk);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, 1);
    }
  }
  return cat;
}

}  // namespace kch
