#pragma once

#include <set>
#include <span>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/poly.hpp"
#include "toric/polytope.hpp"

namespace toric {

// Localization data at one fixed point (vertex) of the torus action.
struct FixedPointData {
  Vertex vertex;
  // n x k. Column j is i*_P(F_{j+1}) in the T basis; zero off the active set.
  QMatrix restriction;
  // Tangent weights i*_P(F_j), j active, in ascending facet order.
  std::vector<MPoly> weights;
  // Equivariant Euler class of the normal space: product of the weights.
  MPoly euler;
};

// pi*: T_j -> sum_i u_{ij} F_i. Throws IndexOutOfRange for T_j with j > n.
MPoly pullback_base(const DelzantPolytope& p, const MPoly& b);

// One record per vertex, vertex order as in enumerate_vertices.
// Throws InvalidPolytope if p fails validation.
std::vector<FixedPointData> fixed_point_data(const DelzantPolytope& p);

// i*_P: F_j -> column j of the restriction matrix; T and y are fixed.
MPoly restrict_at(const FixedPointData& fp, const MPoly& a);

// The localized polytope: validated once, fixed points computed once.
class Localizer {
 public:
  explicit Localizer(DelzantPolytope p);

  const DelzantPolytope& polytope() const { return polytope_; }
  unsigned dim() const { return polytope_.dim; }
  std::size_t facet_count() const { return polytope_.facets.size(); }
  std::span<const FixedPointData> fixed_points() const { return fixed_points_; }

  MPoly pullback(const MPoly& b) const { return pullback_base(polytope_, b); }

  // Sum over vertices of i*_P(a)/E_P over the common denominator prod E_P,
  // finished with one exact division. Throws NotPolynomial if the division
  // fails, IndexOutOfRange for unknown F_j or T_j.
  MPoly integrate(const MPoly& a) const;

 private:
  DelzantPolytope polytope_;
  std::vector<FixedPointData> fixed_points_;
  MPoly common_denominator_;
  std::vector<MPoly> cofactors_;  // prod of the other Euler classes
};

MPoly fiber_integrate(const DelzantPolytope& p, const MPoly& a);

// pi_*(pi*(b) a) == b pi_*(a).
bool module_property_check(const DelzantPolytope& p, const MPoly& b, const MPoly& a);

// True iff no vertex lies on every facet in the support (zero-based indices).
bool face_monomial_vanishes(const DelzantPolytope& p, const std::set<std::size_t>& support);

}  // namespace toric
