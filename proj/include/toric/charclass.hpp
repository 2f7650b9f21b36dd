#pragma once

#include <vector>

#include "toric/expr.hpp"
#include "toric/localization.hpp"
#include "toric/poly.hpp"

namespace toric {

// Characteristic classes of the vertical tangent bundle of the universal
// torus fibration, as face-ring polynomials, plus the symplectic data.
// Everything is computed at construction; instances are immutable.
class ToricFibration {
 public:
  explicit ToricFibration(DelzantPolytope p);

  const Localizer& localizer() const { return loc_; }
  const DelzantPolytope& polytope() const { return loc_.polytope(); }
  unsigned dim() const { return loc_.dim(); }

  // c_i = e_i(F_1..F_k); c_0 = 1. IndexOutOfRange unless 0 <= i <= n.
  const MPoly& chern(unsigned i) const;
  // p_j = (-1)^j sum_{a+b=2j} (-1)^a c_a c_b. IndexOutOfRange unless 1 <= j <= n.
  MPoly pontryagin(unsigned j) const;
  const MPoly& euler() const { return chern_.back(); }
  // -sum lambda_i F_i
  const MPoly& omega_tilde() const { return omega_tilde_; }
  const Rat& symplectic_volume() const { return volume_; }
  const MPoly& coupling() const { return coupling_; }

  MPoly symbol(const ClassSymbol& s) const;

  // Ring evaluation of a class expression. Integral atoms are rejected with
  // MalformedExpression; symbol indices out of range with IndexOutOfRange.
  MPoly evaluate(const ClassExpr& e) const;

  MPoly integrate(const MPoly& a) const { return loc_.integrate(a); }

 private:
  Localizer loc_;
  std::vector<MPoly> chern_;  // c_0 .. c_n
  MPoly omega_tilde_;
  Rat volume_;
  MPoly coupling_;
};

MPoly chern_class(const DelzantPolytope& p, unsigned i);
MPoly pontryagin_class(const DelzantPolytope& p, unsigned j);
MPoly euler_class(const DelzantPolytope& p);
MPoly omega_tilde(const DelzantPolytope& p);
// pi_*(omegatilde^n) / n!
Rat symplectic_volume(const DelzantPolytope& p);
// omegatilde - pi*(pi_*(omegatilde^{n+1})) / ((n+1)! Vol)
MPoly coupling_class(const DelzantPolytope& p);
MPoly evaluate_class_expr(const DelzantPolytope& p, const ClassExpr& e);

}  // namespace toric
