#include "binconv/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "binconv/convolve.hpp"

namespace binconv {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found)
    : Error("parse error at offset " + std::to_string(position) + ": expected " + join(expected) + ", found " +
            found),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { kNumber, kIdent, kSymbol, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const unsigned char ch = in[i];
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      const std::size_t start = i;
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      out.push_back({Tok::kNumber, std::string(in.substr(start, i - start)), start});
    } else if (std::isalpha(ch) || ch == '_') {
      const std::size_t start = i;
      while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(in.substr(start, i - start)), start});
    } else if (in.substr(i, 3) == "⊙") {
      out.push_back({Tok::kIdent, "obprod", i});
      i += 3;
    } else if (in.substr(i, 3) == "∗") {
      out.push_back({Tok::kIdent, "hprod", i});
      i += 3;
    } else if (std::string_view("+-*/^(),").find(static_cast<char>(ch)) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, static_cast<char>(ch)), i});
      ++i;
    } else {
      throw ParseError(i, {"a token"}, "'" + std::string(1, static_cast<char>(ch)) + "'");
    }
  }
  out.push_back({Tok::kEnd, "", in.size()});
  return out;
}

Expr node(Expr::Kind kind, std::vector<Expr> args) {
  Expr e;
  e.kind = kind;
  e.args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view in) : toks_(lex(in)) {}

  Expr run() {
    Expr e = product();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }

  void advance() {
    ++i_;
    expected_.clear();
  }

  bool accept(Tok kind, std::string_view text, std::string label) {
    expected_.insert(std::move(label));
    if (peek().kind == kind && peek().text == text) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_symbol(std::string_view s) { return accept(Tok::kSymbol, s, "'" + std::string(s) + "'"); }
  bool accept_keyword(std::string_view k) { return accept(Tok::kIdent, k, std::string(k)); }

  [[noreturn]] void fail() const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, std::vector<std::string>(expected_.begin(), expected_.end()), found);
  }

  void expect_end() {
    expected_.insert("end of input");
    if (peek().kind != Tok::kEnd) fail();
  }

  static bool is_keyword(const Token& t) {
    return t.kind == Tok::kIdent && (t.text == "obprod" || t.text == "hprod");
  }

  bool starts_atom() {
    expected_.insert("an operand");
    const Token& t = peek();
    return t.kind == Tok::kNumber || (t.kind == Tok::kIdent && !is_keyword(t)) ||
           (t.kind == Tok::kSymbol && t.text == "(");
  }

  Expr product() {
    Expr lhs = sum();
    for (;;) {
      if (accept_keyword("obprod")) {
        lhs = node(Expr::Kind::kBprod, {std::move(lhs), sum()});
      } else if (accept_keyword("hprod")) {
        lhs = node(Expr::Kind::kHprod, {std::move(lhs), sum()});
      } else {
        return lhs;
      }
    }
  }

  Expr sum() {
    Expr lhs = term();
    for (;;) {
      if (accept_symbol("+")) {
        lhs = node(Expr::Kind::kAdd, {std::move(lhs), term()});
      } else if (accept_symbol("-")) {
        lhs = node(Expr::Kind::kSub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept_symbol("*")) {
        lhs = node(Expr::Kind::kMul, {std::move(lhs), unary()});
      } else if (accept_symbol("/")) {
        lhs = node(Expr::Kind::kDiv, {std::move(lhs), unary()});
      } else if (starts_atom()) {
        lhs = node(Expr::Kind::kMul, {std::move(lhs), unary()});
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept_symbol("-")) return node(Expr::Kind::kNegate, {unary()});
    return power();
  }

  Expr power() {
    Expr base = atom();
    while (accept_symbol("^")) {
      const bool negative = accept_symbol("-");
      expected_.insert("an integer exponent");
      if (peek().kind != Tok::kNumber) fail();
      const Integer mag(peek().text);
      if (!mag.fits_slong_p()) fail();
      advance();
      Expr e = node(Expr::Kind::kPow, {std::move(base)});
      e.exponent = negative ? -mag.get_si() : mag.get_si();
      base = std::move(e);
    }
    return base;
  }

  Expr atom() {
    expected_.insert("a number");
    expected_.insert("x");
    expected_.insert("a sequence name");
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      Expr e;
      e.kind = Expr::Kind::kNumber;
      e.value = Rational(Integer(t.text));
      advance();
      return e;
    }
    if (t.kind == Tok::kIdent && !is_keyword(t)) {
      Expr e;
      if (t.text == "x") {
        e.kind = Expr::Kind::kVariable;
        advance();
        return e;
      }
      e.kind = Expr::Kind::kSequence;
      e.name = t.text;
      advance();
      // A parenthesis right after a name opens its parameter list.
      if (accept_symbol("(")) {
        do {
          e.args.push_back(product());
        } while (accept_symbol(","));
        if (!accept_symbol(")")) fail();
      }
      return e;
    }
    if (accept_symbol("(")) {
      Expr e = product();
      if (!accept_symbol(")")) fail();
      return e;
    }
    fail();
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::set<std::string> expected_;
};

int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBprod:
    case Expr::Kind::kHprod:
      return 1;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 2;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 3;
    case Expr::Kind::kNegate:
      return 4;
    case Expr::Kind::kPow:
      return 5;
    default:
      return 6;
  }
}

std::string print_at(const Expr& e, int min_level);

std::string binary(const Expr& e, std::string_view op) {
  const int l = level(e);
  return print_at(e.args[0], l) + std::string(op) + print_at(e.args[1], l + 1);
}

std::string print_at(const Expr& e, int min_level) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::kNumber:
      s = e.value.get_str();
      break;
    case Expr::Kind::kVariable:
      s = "x";
      break;
    case Expr::Kind::kSequence:
      s = e.name;
      if (!e.args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print_at(e.args[i], 0);
        s += ")";
      }
      break;
    case Expr::Kind::kNegate:
      s = "-" + print_at(e.args[0], 4);
      break;
    case Expr::Kind::kAdd:
      s = binary(e, " + ");
      break;
    case Expr::Kind::kSub:
      s = binary(e, " - ");
      break;
    case Expr::Kind::kMul:
      s = binary(e, "*");
      break;
    case Expr::Kind::kDiv:
      s = binary(e, "/");
      break;
    case Expr::Kind::kPow:
      s = print_at(e.args[0], 6) + "^" + std::to_string(e.exponent);
      break;
    case Expr::Kind::kBprod:
      s = binary(e, " obprod ");
      break;
    case Expr::Kind::kHprod:
      s = binary(e, " hprod ");
      break;
  }
  return level(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

Expr parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Expr& e) { return print_at(e, 0); }

RatFun eval(const Expr& e, const Registry& registry) {
  const auto arg = [&](std::size_t i) { return eval(e.args[i], registry); };
  switch (e.kind) {
    case Expr::Kind::kNumber:
      return Poly(e.value);
    case Expr::Kind::kVariable:
      return Poly::x();
    case Expr::Kind::kSequence: {
      std::vector<Rational> params;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        const RatFun p = arg(i);
        if (p.num().degree() > 0 || !p.is_polynomial()) {
          throw InvalidInput("parameter " + std::to_string(i + 1) + " of " + e.name + " is not a constant");
        }
        params.push_back(p.num().constant_term());
      }
      return registry.gf(e.name, std::move(params));
    }
    case Expr::Kind::kNegate:
      return -arg(0);
    case Expr::Kind::kAdd:
      return arg(0) + arg(1);
    case Expr::Kind::kSub:
      return arg(0) - arg(1);
    case Expr::Kind::kMul:
      return arg(0) * arg(1);
    case Expr::Kind::kDiv:
      return arg(0) / arg(1);
    case Expr::Kind::kPow:
      return pow(arg(0), e.exponent);
    case Expr::Kind::kBprod:
      return binomial_product(arg(0), arg(1));
    case Expr::Kind::kHprod:
      return hadamard_product(arg(0), arg(1));
  }
  throw InvalidInput("malformed expression");
}

}  // namespace binconv
