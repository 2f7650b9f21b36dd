#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

struct ClassSymbol {
  enum class Kind { Chern, Pontryagin, Euler, Omega, OmegaTilde };

  Kind kind = Kind::Omega;
  unsigned index = 0;  // Chern and Pontryagin only

  // Cohomological degree on a 2n-dimensional fiber.
  unsigned degree(unsigned n) const;
  std::string name() const;

  friend bool operator==(const ClassSymbol&, const ClassSymbol&) = default;
};

// Expression tree of the class language:
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" UINT)?
//   atom   := RATIONAL | SYMBOL | "I" "[" expr "]" | "(" expr ")"
struct ClassExpr {
  enum class Op { Literal, Symbol, Integral, Sum, Product, Power };

  Op op = Op::Literal;
  Rat value;                       // Literal
  ClassSymbol symbol;              // Symbol
  std::vector<ClassExpr> children; // Integral: 1, Sum/Product: >= 1, Power: 1
  std::vector<int> signs;          // Sum: +1 / -1 per child
  unsigned exponent = 1;           // Power

  static ClassExpr literal(Rat v);
  static ClassExpr sym(ClassSymbol s);
  static ClassExpr integral(ClassExpr inner);
  static ClassExpr power(ClassExpr base, unsigned e);
  static ClassExpr product(std::vector<ClassExpr> factors);
  static ClassExpr sum(std::vector<ClassExpr> terms, std::vector<int> signs);

  bool contains_integral() const;
  // Every symbol occurring, integral interiors included.
  std::vector<ClassSymbol> symbols() const;
};

// Throws SyntaxError (with position and expected set) or Error(NestedIntegral).
ClassExpr parse_class_expr(std::string_view src);

// Canonical textual form; parse_class_expr(to_string(e)) reproduces e.
std::string to_string(const ClassExpr& e);

// Structural cohomological degree on a 2n-dimensional fiber, where an
// integral atom lowers its interior's degree by 2n. nullopt when some sum
// mixes degrees. The zero literal is compatible with every degree.
std::optional<int> homogeneous_degree(const ClassExpr& e, unsigned n);

}  // namespace toric
