#pragma once

#include <string>
#include <vector>

#include "toric/charclass.hpp"
#include "toric/expr.hpp"
#include "toric/matrix.hpp"

namespace toric {

// A Q-polynomial in integral atoms I[...] of class expressions.
// Throws MalformedExpression if a class symbol appears outside an integral,
// InhomogeneousClass if the expression mixes degrees.
void check_detection_class(const ClassExpr& d, unsigned n);

// Replaces each I[a] by pi_*(a) and evaluates; result lies in H*(B_T).
MPoly evaluate_detection_class(const ToricFibration& f, const ClassExpr& d);
MPoly evaluate_detection_class(const DelzantPolytope& p, const ClassExpr& d);

// All monomials in T_1..T_n of the given cohomological degree, in render order.
std::vector<Monomial> base_monomials(unsigned n, unsigned degree);

struct DetectionVectorSet {
  std::vector<std::string> actions;
  std::vector<ClassExpr> classes;
  unsigned degree = 0;
  std::vector<Monomial> columns;  // per action; the matrix repeats them
  // rows = classes; columns = concatenated coefficient vectors per action
  QMatrix matrix;
};

// Throws DimensionMismatch (fibers of different dimension, odd or empty input)
// or MixedDegrees (a class whose degree differs from `degree`).
DetectionVectorSet detection_matrix(const std::vector<ToricFibration>& actions,
                                    const std::vector<ClassExpr>& classes, unsigned degree);
DetectionVectorSet detection_matrix(const std::vector<DelzantPolytope>& actions,
                                    const std::vector<ClassExpr>& classes, unsigned degree);

enum class GroupKind { Ham, Symp, Diff };
std::string to_string(GroupKind g);

// Ham if a coupling or symplectic form class appears, Symp if Chern classes
// appear, Diff for Pontryagin/Euler only.
GroupKind group_of(const std::vector<ClassExpr>& classes);

struct BettiReport {
  std::size_t rank = 0;
  GroupKind group = GroupKind::Diff;
  unsigned degree = 0;
  RowBasis certificate;
};

BettiReport betti_lower_bound(const DetectionVectorSet& v);

}  // namespace toric
