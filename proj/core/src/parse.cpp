#include "rsl/parse.hpp"

#include <cctype>

#include "rsl/errors.hpp"

namespace rsl {

namespace {

enum class Tok {
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  Slash,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Comma,
  Semi,
  Colon,
  End
};

struct Token {
  Tok kind;
  std::string text;
  size_t col;  // 1-based
};

std::vector<Token> lex_tokens(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    size_t col = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case ':': k = Tok::Colon; break;
      default:
        throw Error(Err::SyntaxError, std::string("unexpected character '") + c +
                                          "' at column " + std::to_string(col));
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr unary(Expr::Kind k, ExprPtr a) {
  Expr e;
  e.kind = k;
  e.children = {std::move(a)};
  return node(std::move(e));
}

ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = k;
  e.children = {std::move(a), std::move(b)};
  return node(std::move(e));
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (!at(Tok::End)) fail("end of input");
    return e;
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool eat(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& wanted) const {
    throw Error(Err::SyntaxError,
                "expected " + wanted + " at column " + std::to_string(peek().col));
  }
  void expect(Tok k, const std::string& wanted) {
    if (!eat(k)) fail(wanted);
  }

  Rational rational_lit() {
    if (!at(Tok::Int)) fail("a number");
    Int num(take().text);
    if (eat(Tok::Slash)) {
      if (!at(Tok::Int)) fail("a denominator");
      Token d = take();
      Int den(d.text);
      if (den == 0)
        throw Error(Err::SyntaxError,
                    "zero denominator at column " + std::to_string(d.col));
      return Rational(num, den);
    }
    return Rational(num);
  }

  Rational signed_rational() {
    bool neg = eat(Tok::Minus);
    Rational r = rational_lit();
    return neg ? Rational(-r) : r;
  }

  ExprPtr expr() {
    bool neg = eat(Tok::Minus);
    ExprPtr e = term();
    if (neg) e = unary(Expr::Kind::Neg, std::move(e));
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool add = take().kind == Tok::Plus;
      e = binary(add ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (eat(Tok::Star)) e = binary(Expr::Kind::Mul, std::move(e), factor());
    return e;
  }

  ExprPtr factor() {
    bool neg = eat(Tok::Minus);
    ExprPtr e = base();
    if (eat(Tok::Caret)) {
      if (!at(Tok::Int)) fail("an exponent");
      Token x = take();
      if (x.text.size() > 4)
        throw Error(Err::SyntaxError,
                    "exponent too large at column " + std::to_string(x.col));
      Expr p;
      p.kind = Expr::Kind::Pow;
      p.exponent = std::stoi(x.text);
      p.children = {std::move(e)};
      e = node(std::move(p));
    }
    if (neg) e = unary(Expr::Kind::Neg, std::move(e));
    return e;
  }

  ExprPtr base() {
    if (at(Tok::Int)) {
      Expr e;
      e.kind = Expr::Kind::Const;
      e.value = rational_lit();
      return node(std::move(e));
    }
    if (at(Tok::Ident)) {
      Token id = take();
      if (id.text == "t") {
        Expr e;
        e.kind = Expr::Kind::Var;
        return node(std::move(e));
      }
      if (id.text == "abs" || id.text == "pos" || id.text == "neg") {
        expect(Tok::LParen, "'('");
        ExprPtr a = expr();
        expect(Tok::RParen, "')'");
        Expr::Kind k = id.text == "abs"   ? Expr::Kind::Abs
                       : id.text == "pos" ? Expr::Kind::PosPart
                                          : Expr::Kind::NegPart;
        return unary(k, std::move(a));
      }
      if (id.text == "max" || id.text == "min") {
        expect(Tok::LParen, "'('");
        ExprPtr a = expr();
        expect(Tok::Comma, "','");
        ExprPtr b = expr();
        expect(Tok::RParen, "')'");
        return binary(id.text == "max" ? Expr::Kind::Max : Expr::Kind::Min,
                      std::move(a), std::move(b));
      }
      if (id.text == "piecewise") return piecewise_block();
      throw Error(Err::SyntaxError, "unknown name '" + id.text + "' at column " +
                                        std::to_string(id.col));
    }
    if (eat(Tok::LParen)) {
      ExprPtr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    fail("a value");
  }

  ExprPtr piecewise_block() {
    expect(Tok::LBrace, "'{'");
    Expr e;
    e.kind = Expr::Kind::Piecewise;
    while (true) {
      size_t range_col = peek().col;
      expect(Tok::LBracket, "'['");
      Rational lo = signed_rational();
      expect(Tok::Comma, "','");
      Rational hi = signed_rational();
      if (!eat(Tok::RBracket) && !eat(Tok::RParen)) fail("']' or ')'");
      expect(Tok::Colon, "':'");
      if (e.bounds.empty()) {
        e.bounds.push_back(lo);
      } else if (e.bounds.back() != lo) {
        throw Error(Err::SyntaxError, "ranges must chain at column " +
                                          std::to_string(range_col));
      }
      e.bounds.push_back(hi);
      e.children.push_back(expr());
      if (eat(Tok::Semi)) continue;
      expect(Tok::RBrace, "'}'");
      break;
    }
    return node(std::move(e));
  }
};

// precedence levels: 0 = expr, 1 = term, 2 = factor, 3 = base
int level_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 0;
    case Expr::Kind::Mul:
      return 1;
    case Expr::Kind::Neg:
    case Expr::Kind::Pow:
      return 2;
    case Expr::Kind::Const:
      return e.value < 0 ? 2 : 3;
    default:
      return 3;
  }
}

void print_node(const Expr& e, std::string& out);

void print_child(const Expr& c, int need, std::string& out) {
  if (level_of(c) < need) {
    out += '(';
    print_node(c, out);
    out += ')';
  } else {
    print_node(c, out);
  }
}

void print_node(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Const:
      if (e.value < 0) {
        out += '-';
        out += str(Rational(-e.value));
      } else {
        out += str(e.value);
      }
      break;
    case Expr::Kind::Var:
      out += 't';
      break;
    case Expr::Kind::Add:
      print_child(*e.children[0], 0, out);
      out += " + ";
      print_child(*e.children[1], 1, out);
      break;
    case Expr::Kind::Sub:
      print_child(*e.children[0], 0, out);
      out += " - ";
      print_child(*e.children[1], 1, out);
      break;
    case Expr::Kind::Mul:
      print_child(*e.children[0], 1, out);
      out += " * ";
      print_child(*e.children[1], 2, out);
      break;
    case Expr::Kind::Neg:
      out += '-';
      // the minus of a factor reads up to one base^exp; anything looser
      // needs parentheses to survive a reparse in argument position
      if (e.children[0]->kind == Expr::Kind::Pow || level_of(*e.children[0]) >= 3) {
        print_node(*e.children[0], out);
      } else {
        out += '(';
        print_node(*e.children[0], out);
        out += ')';
      }
      break;
    case Expr::Kind::Pow:
      print_child(*e.children[0], 3, out);
      out += '^';
      out += std::to_string(e.exponent);
      break;
    case Expr::Kind::Abs:
    case Expr::Kind::PosPart:
    case Expr::Kind::NegPart:
      out += e.kind == Expr::Kind::Abs       ? "abs("
             : e.kind == Expr::Kind::PosPart ? "pos("
                                             : "neg(";
      print_node(*e.children[0], out);
      out += ')';
      break;
    case Expr::Kind::Max:
    case Expr::Kind::Min:
      out += e.kind == Expr::Kind::Max ? "max(" : "min(";
      print_node(*e.children[0], out);
      out += ", ";
      print_node(*e.children[1], out);
      out += ')';
      break;
    case Expr::Kind::Piecewise:
      out += "piecewise{";
      for (size_t i = 0; i < e.children.size(); ++i) {
        bool last = i + 1 == e.children.size();
        out += '[';
        out += str(e.bounds[i]);
        out += ", ";
        out += str(e.bounds[i + 1]);
        out += last ? "]: " : "): ";
        print_node(*e.children[i], out);
        if (!last) out += "; ";
      }
      out += '}';
      break;
  }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  return Parser(lex_tokens(text)).run();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::Const:
      return a->value == b->value;
    case Expr::Kind::Var:
      return true;
    case Expr::Kind::Pow:
      if (a->exponent != b->exponent) return false;
      break;
    case Expr::Kind::Piecewise:
      if (a->bounds != b->bounds) return false;
      break;
    default:
      break;
  }
  if (a->children.size() != b->children.size()) return false;
  for (size_t i = 0; i < a->children.size(); ++i)
    if (!expr_equal(a->children[i], b->children[i])) return false;
  return true;
}

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_node(*e, out);
  return out;
}

Rational eval_expr(const ExprPtr& e, const Rational& t) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return e->value;
    case Expr::Kind::Var:
      return t;
    case Expr::Kind::Add:
      return eval_expr(e->children[0], t) + eval_expr(e->children[1], t);
    case Expr::Kind::Sub:
      return eval_expr(e->children[0], t) - eval_expr(e->children[1], t);
    case Expr::Kind::Mul:
      return eval_expr(e->children[0], t) * eval_expr(e->children[1], t);
    case Expr::Kind::Neg:
      return -eval_expr(e->children[0], t);
    case Expr::Kind::Pow: {
      Rational b = eval_expr(e->children[0], t), r(1);
      for (int i = 0; i < e->exponent; ++i) r *= b;
      return r;
    }
    case Expr::Kind::Abs: {
      Rational v = eval_expr(e->children[0], t);
      return v < 0 ? Rational(-v) : v;
    }
    case Expr::Kind::Max:
      return std::max(eval_expr(e->children[0], t), eval_expr(e->children[1], t));
    case Expr::Kind::Min:
      return std::min(eval_expr(e->children[0], t), eval_expr(e->children[1], t));
    case Expr::Kind::PosPart: {
      Rational v = eval_expr(e->children[0], t);
      return v > 0 ? v : Rational(0);
    }
    case Expr::Kind::NegPart: {
      Rational v = eval_expr(e->children[0], t);
      return v < 0 ? Rational(-v) : Rational(0);
    }
    case Expr::Kind::Piecewise: {
      for (size_t i = 0; i < e->children.size(); ++i) {
        bool last = i + 1 == e->children.size();
        if (t >= e->bounds[i] && (t < e->bounds[i + 1] || (last && t == e->bounds[i + 1])))
          return eval_expr(e->children[i], t);
      }
      throw Error(Err::OutOfDomain, str(t) + " misses every piecewise range");
    }
  }
  throw std::logic_error("eval_expr: bad node");
}

PiecewisePoly elaborate(const ExprPtr& e, const Domain& dom) {
  switch (e->kind) {
    case Expr::Kind::Const:
      return pw_const(e->value, dom);
    case Expr::Kind::Var:
      return pw_poly(Polynomial::variable(), dom);
    case Expr::Kind::Add:
      return pw_add(elaborate(e->children[0], dom), elaborate(e->children[1], dom));
    case Expr::Kind::Sub:
      return pw_sub(elaborate(e->children[0], dom), elaborate(e->children[1], dom));
    case Expr::Kind::Mul:
      return pw_mul(elaborate(e->children[0], dom), elaborate(e->children[1], dom));
    case Expr::Kind::Neg:
      return pw_scale(Rational(-1), elaborate(e->children[0], dom));
    case Expr::Kind::Pow: {
      PiecewisePoly b = elaborate(e->children[0], dom);
      PiecewisePoly r = pw_const(Rational(1), dom);
      for (int i = 0; i < e->exponent; ++i) r = pw_mul(r, b);
      return r;
    }
    case Expr::Kind::Abs:
      return pw_abs(elaborate(e->children[0], dom));
    case Expr::Kind::Max:
      return pw_sup(elaborate(e->children[0], dom), elaborate(e->children[1], dom));
    case Expr::Kind::Min:
      return pw_inf(elaborate(e->children[0], dom), elaborate(e->children[1], dom));
    case Expr::Kind::PosPart:
      return pw_pos(elaborate(e->children[0], dom));
    case Expr::Kind::NegPart:
      return pw_neg(elaborate(e->children[0], dom));
    case Expr::Kind::Piecewise: {
      if (e->bounds.front() != dom.a || e->bounds.back() != dom.b)
        throw Error(Err::SchemaError, "piecewise ranges must tile the domain exactly");
      std::vector<PiecewisePoly> parts;
      parts.reserve(e->children.size());
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (!(e->bounds[i] < e->bounds[i + 1]))
          throw Error(Err::SchemaError, "range bounds must ascend");
        Domain sub = make_domain(e->bounds[i], e->bounds[i + 1], dom.degree_cap);
        parts.push_back(elaborate(e->children[i], sub));
      }
      return pw_concat(dom, parts);
    }
  }
  throw std::logic_error("elaborate: bad node");
}

}  // namespace rsl
