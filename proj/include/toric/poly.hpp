#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// A polynomial variable. Base variables T_i generate H*(B_T), face variables
// F_i the face ring, Param is the formal y of the chi_y genus. Chern c_i are
// abstract Chern-class variables used only to display multiplicative
// sequences in the Chern basis.
struct VarId {
  enum class Kind : std::uint8_t { Base = 0, Face = 1, Chern = 2, Param = 3 };

  Kind kind = Kind::Param;
  std::uint16_t index = 0;

  static constexpr VarId T(unsigned i) { return {Kind::Base, static_cast<std::uint16_t>(i)}; }
  static constexpr VarId F(unsigned i) { return {Kind::Face, static_cast<std::uint16_t>(i)}; }
  static constexpr VarId C(unsigned i) { return {Kind::Chern, static_cast<std::uint16_t>(i)}; }
  static constexpr VarId y() { return {Kind::Param, 0}; }

  // Cohomological degree of the generator.
  constexpr unsigned degree() const {
    switch (kind) {
      case Kind::Base:
      case Kind::Face: return 2;
      case Kind::Chern: return 2u * index;
      case Kind::Param: return 0;
    }
    return 0;
  }

  std::string name() const;

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

// Power product with canonical (sorted, zero-free) exponent list.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t e = 1);
  // Factors in any order; repeated variables are merged, zero exponents dropped.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  unsigned total_degree() const;
  unsigned cohomological_degree() const;

  bool divides(const Monomial& other) const;
  // Requires divides(other) == true for *this / divisor.
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order, larger monomials first. Within one total
// degree the variable with the smallest VarId is most significant.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexDescending>;

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT: constants convert implicitly
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT
  MPoly(const Monomial& m, const Rat& c);

  static MPoly var(VarId v) { return MPoly(Monomial(v), Rat(1)); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  // Requires !is_zero().
  const std::pair<const Monomial, Rat>& leading_term() const { return *terms_.begin(); }

  // Largest cohomological degree among the terms, 0 for the zero polynomial.
  unsigned cohomological_degree() const;
  bool is_homogeneous() const;
  std::set<VarId> variables() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= Rat(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= Rat(c); }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Adds c*m in place.
  void add_term(const Monomial& m, const Rat& c);

 private:
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned e);

// Ring homomorphism fixing every variable not in the assignment.
MPoly substitute(const MPoly& p, const std::map<VarId, MPoly>& assignment);

// Sum of the terms of the given cohomological degree.
MPoly homogeneous_component(const MPoly& p, unsigned degree);

// Terms of cohomological degree <= max_degree.
MPoly truncate_degree(const MPoly& p, unsigned max_degree);

// q with q * den == num, or Error(NotDivisible).
MPoly exact_divide(const MPoly& num, const MPoly& den);

// Elementary symmetric polynomial e_i in the given variables (e_0 = 1).
MPoly elementary_symmetric(const std::vector<VarId>& vars, unsigned i);

// Canonical text: "6*T1^2 - 4*T1*T2 + 4*T2^2", "0", "1/2*T1*y".
std::string render(const MPoly& p);

// Fraction of polynomials, never auto-reduced.
struct RatFun {
  MPoly num;
  MPoly den{1};

  RatFun() = default;
  RatFun(MPoly n, MPoly d);

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  // Cross-multiplication equality.
  friend bool operator==(const RatFun& a, const RatFun& b);
};

}  // namespace toric
