#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "binconv/errors.hpp"
#include "binconv/ratfun.hpp"
#include "binconv/seqlib.hpp"

namespace binconv {

/// Syntax error at a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

struct Expr {
  enum class Kind { kNumber, kVariable, kSequence, kNegate, kAdd, kSub, kMul, kDiv, kPow, kBprod, kHprod };

  Kind kind = Kind::kNumber;
  Rational value;            // kNumber
  std::string name;          // kSequence
  long exponent = 0;         // kPow
  std::vector<Expr> args;    // operands, or sequence parameters

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Grammar, loosest first:
///   product := sum (("obprod" | "hprod") sum)*
///   sum     := term (("+" | "-") term)*
///   term    := unary (("*" | "/")? unary)*     juxtaposition multiplies: 2x
///   unary   := "-" unary | power
///   power   := atom ("^" "-"? integer)*
///   atom    := integer | "x" | name ("(" product ("," product)* ")")? | "(" product ")"
/// The symbols ⊙ and ∗ are accepted for obprod and hprod.
Expr parse(std::string_view input);

/// Canonical text; parse(print(e)) == e for every parsed e.
std::string print(const Expr& e);

/// Exact value. Sequence names are resolved in `registry`; their
/// parameters must evaluate to constants.
RatFun eval(const Expr& e, const Registry& registry = Registry::standard());

}  // namespace binconv
