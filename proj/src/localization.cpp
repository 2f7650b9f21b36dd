#include "toric/localization.hpp"

#include <algorithm>
#include <map>

#include "toric/error.hpp"

namespace toric {

namespace {

void check_indices(const MPoly& a, unsigned n, std::size_t k) {
  for (VarId v : a.variables()) {
    if (v.kind == VarId::Kind::Base && (v.index < 1 || v.index > n))
      throw Error(ErrorKind::IndexOutOfRange, v.name() + " but the torus has rank " + std::to_string(n));
    if (v.kind == VarId::Kind::Face && (v.index < 1 || v.index > k))
      throw Error(ErrorKind::IndexOutOfRange, v.name() + " but there are " + std::to_string(k) + " facets");
    if (v.kind == VarId::Kind::Chern)
      throw Error(ErrorKind::IndexOutOfRange, "abstract Chern variable " + v.name() + " in a face-ring class");
  }
}

MPoly linear_form(const QMatrix& m, std::size_t col) {
  MPoly out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.add_term(Monomial(VarId::T(static_cast<unsigned>(i + 1))), m(i, col));
  return out;
}

}  // namespace

MPoly pullback_base(const DelzantPolytope& p, const MPoly& b) {
  std::map<VarId, MPoly> image;
  for (VarId v : b.variables()) {
    if (v.kind != VarId::Kind::Base) continue;
    if (v.index < 1 || v.index > p.dim)
      throw Error(ErrorKind::IndexOutOfRange, v.name() + " but the torus has rank " + std::to_string(p.dim));
    MPoly form;
    for (std::size_t i = 0; i < p.facets.size(); ++i)
      form.add_term(Monomial(VarId::F(static_cast<unsigned>(i + 1))),
                    Rat(static_cast<long>(p.facets[i].u[v.index - 1])));
    image.emplace(v, std::move(form));
  }
  return substitute(b, image);
}

std::vector<FixedPointData> fixed_point_data(const DelzantPolytope& p) {
  require_valid(p);
  const std::size_t n = p.dim, k = p.facets.size();
  std::vector<FixedPointData> out;
  for (auto& v : enumerate_vertices(p)) {
    QMatrix inv;
    try {
      inv = inverse(normal_matrix(p, v.active));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidPolytope, e.what());
    }
    FixedPointData fp;
    fp.restriction = QMatrix(n, k);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < n; ++r) fp.restriction(r, v.active[a]) = inv(r, a);
    fp.euler = MPoly(1);
    for (std::size_t j : v.active) {
      fp.weights.push_back(linear_form(fp.restriction, j));
      fp.euler *= fp.weights.back();
    }
    fp.vertex = std::move(v);
    out.push_back(std::move(fp));
  }
  return out;
}

MPoly restrict_at(const FixedPointData& fp, const MPoly& a) {
  std::map<VarId, MPoly> image;
  for (VarId v : a.variables()) {
    if (v.kind != VarId::Kind::Face) continue;
    if (v.index < 1 || v.index > fp.restriction.cols())
      throw Error(ErrorKind::IndexOutOfRange, v.name() + " but there are " +
                                                  std::to_string(fp.restriction.cols()) + " facets");
    image.emplace(v, linear_form(fp.restriction, v.index - 1));
  }
  return substitute(a, image);
}

Localizer::Localizer(DelzantPolytope p)
    : polytope_(std::move(p)), fixed_points_(fixed_point_data(polytope_)), common_denominator_(1) {
  for (const auto& fp : fixed_points_) common_denominator_ *= fp.euler;
  for (std::size_t i = 0; i < fixed_points_.size(); ++i) {
    MPoly others(1);
    for (std::size_t j = 0; j < fixed_points_.size(); ++j)
      if (j != i) others *= fixed_points_[j].euler;
    cofactors_.push_back(std::move(others));
  }
}

MPoly Localizer::integrate(const MPoly& a) const {
  check_indices(a, polytope_.dim, polytope_.facets.size());
  if (a.is_zero()) return {};
  // Terms below degree 2n integrate to zero; dropping them keeps the
  // numerator small. The exact division below still checks the rest.
  MPoly top;
  for (const auto& [m, c] : a.terms())
    if (m.cohomological_degree() >= 2 * polytope_.dim) top.add_term(m, c);
  if (top.is_zero()) return {};

  MPoly numerator;
  for (std::size_t i = 0; i < fixed_points_.size(); ++i) {
    MPoly term = restrict_at(fixed_points_[i], top);
    if (!term.is_zero()) numerator += term * cofactors_[i];
  }
  try {
    return exact_divide(numerator, common_denominator_);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotPolynomial,
                "localization sum is not a polynomial on " + polytope_.name + " (" + e.what() + ")");
  }
}

MPoly fiber_integrate(const DelzantPolytope& p, const MPoly& a) { return Localizer(p).integrate(a); }

bool module_property_check(const DelzantPolytope& p, const MPoly& b, const MPoly& a) {
  Localizer loc(p);
  return loc.integrate(loc.pullback(b) * a) == b * loc.integrate(a);
}

bool face_monomial_vanishes(const DelzantPolytope& p, const std::set<std::size_t>& support) {
  for (std::size_t f : support)
    if (f >= p.facets.size())
      throw Error(ErrorKind::IndexOutOfRange, "facet " + std::to_string(f + 1) + " does not exist");
  for (const auto& v : enumerate_vertices(p))
    if (std::includes(v.active.begin(), v.active.end(), support.begin(), support.end())) return false;
  return true;
}

}  // namespace toric
