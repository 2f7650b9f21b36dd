#include "toric/genera.hpp"

#include <algorithm>
#include <map>

#include "toric/error.hpp"

namespace toric {

namespace {

MPoly y_var() { return MPoly::var(VarId::y()); }

// Product keeping only terms of cohomological degree <= max_degree.
MPoly truncated_product(const MPoly& a, const MPoly& b, unsigned max_degree) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    unsigned da = ma.cohomological_degree();
    if (da > max_degree) continue;
    for (const auto& [mb, cb] : b.terms())
      if (da + mb.cohomological_degree() <= max_degree) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

void check_truncation(const MultiplicativeSequence& s, unsigned r) {
  if (r > s.truncation())
    throw Error(ErrorKind::TruncationTooLow, s.name + " is truncated at order " +
                                                 std::to_string(s.truncation()) + ", need " +
                                                 std::to_string(r));
}

}  // namespace

MultiplicativeSequence chi_y_series(unsigned truncation) {
  // b_m: coefficients of z/(1 - e^{-z}), the inverse of
  // (1 - e^{-z})/z = sum (-1)^m z^m/(m+1)!.
  std::vector<Rat> d(truncation + 1), b(truncation + 1);
  for (unsigned m = 0; m <= truncation; ++m) d[m] = Rat(m % 2 == 0 ? 1 : -1) / factorial(m + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= truncation; ++m) {
    Rat acc = 0;
    for (unsigned i = 1; i <= m; ++i) acc += d[i] * b[m - i];
    b[m] = -acc;
  }

  MultiplicativeSequence s{"chi-y", {}};
  const MPoly one_plus_y = MPoly(1) + y_var();
  for (unsigned m = 0; m <= truncation; ++m) {
    MPoly q = pow(one_plus_y, m) * b[m];
    if (m == 1) q -= y_var();
    s.coefficients.push_back(std::move(q));
  }
  return s;
}

MultiplicativeSequence specialize(const MultiplicativeSequence& s, const Rat& y, std::string name) {
  MultiplicativeSequence out{std::move(name), {}};
  const std::map<VarId, MPoly> at{{VarId::y(), MPoly(y)}};
  for (const auto& q : s.coefficients) out.coefficients.push_back(substitute(q, at));
  return out;
}

MultiplicativeSequence total_chern_series(unsigned truncation) {
  MultiplicativeSequence s{"total-chern", std::vector<MPoly>(truncation + 1)};
  s.coefficients[0] = MPoly(1);
  if (truncation >= 1) s.coefficients[1] = MPoly(1);
  return s;
}

MultiplicativeSequence exponential_series(unsigned truncation) {
  MultiplicativeSequence s{"exp", std::vector<MPoly>(truncation + 1)};
  for (unsigned m = 0; m <= truncation; ++m) s.coefficients[m] = MPoly(1 / factorial(m));
  return s;
}

MultiplicativeSequence named_series(std::string_view name, unsigned truncation) {
  auto base = chi_y_series(truncation);
  if (name == "chi-y") return base;
  if (name == "todd") return specialize(base, 0, "todd");
  if (name == "signature") return specialize(base, 1, "signature");
  if (name == "euler") return specialize(base, -1, "euler");
  throw Error(ErrorKind::MalformedExpression,
              "unknown series '" + std::string(name) + "' (todd, signature, chi-y, euler)");
}

MPoly sequence_class(std::size_t facet_count, const MultiplicativeSequence& s, unsigned r) {
  check_truncation(s, r);
  const unsigned max_degree = 2 * r;
  MPoly acc(1);
  for (std::size_t i = 1; i <= facet_count; ++i) {
    const MPoly x = MPoly::var(VarId::F(static_cast<unsigned>(i)));
    MPoly factor;
    MPoly x_pow(1);
    for (unsigned m = 0; m <= r; ++m) {
      factor += s.coefficients[m] * x_pow;
      x_pow *= x;
    }
    acc = truncated_product(acc, factor, max_degree);
  }
  return homogeneous_component(acc, max_degree);
}

MPoly sequence_class(const DelzantPolytope& p, const MultiplicativeSequence& s, unsigned r) {
  return sequence_class(p.facets.size(), s, r);
}

MPoly genus_value(const ToricFibration& f, const MultiplicativeSequence& s) {
  MPoly g = f.integrate(sequence_class(f.polytope(), s, f.dim()));
  for (VarId v : g.variables())
    if (v.kind != VarId::Kind::Param)
      throw Error(ErrorKind::NotPolynomial, "genus is not a constant in Q[y]: " + render(g));
  return g;
}

MPoly genus_value(const DelzantPolytope& p, const MultiplicativeSequence& s) {
  return genus_value(ToricFibration(p), s);
}

MPoly chi_y_fixed_points(const DelzantPolytope& p, const std::vector<long>& xi) {
  if (xi.size() != p.dim)
    throw Error(ErrorKind::DimensionMismatch, "direction has " + std::to_string(xi.size()) +
                                                  " entries, torus rank is " + std::to_string(p.dim));
  const MPoly minus_y = -y_var();
  MPoly total;
  for (const auto& fp : fixed_point_data(p)) {
    unsigned positive = 0;
    for (const auto& w : fp.weights) {
      Rat pairing = 0;
      for (const auto& [m, c] : w.terms()) pairing += c * Rat(xi[m.factors().front().first.index - 1]);
      if (pairing == 0)
        throw Error(ErrorKind::NonGenericDirection, "weight " + render(w) + " vanishes on the direction");
      if (pairing > 0) ++positive;
    }
    total += pow(minus_y, positive);
  }
  return total;
}

std::vector<long> generic_direction(const DelzantPolytope& p) {
  const auto fps = fixed_point_data(p);
  for (long base = 2;; ++base) {
    std::vector<long> xi(p.dim);
    long v = 1;
    for (auto& x : xi) {
      x = v;
      v *= base;
    }
    bool generic = true;
    for (const auto& fp : fps)
      for (const auto& w : fp.weights) {
        Rat pairing = 0;
        for (const auto& [m, c] : w.terms()) pairing += c * Rat(xi[m.factors().front().first.index - 1]);
        generic = generic && pairing != 0;
      }
    if (generic) return xi;
  }
}

std::vector<std::pair<unsigned, MPoly>> strict_mult_check(const ToricFibration& f,
                                                          const MultiplicativeSequence& s,
                                                          unsigned r_max) {
  check_truncation(s, r_max);
  std::vector<std::pair<unsigned, MPoly>> out;
  for (unsigned r = f.dim() + 1; r <= r_max; ++r)
    out.emplace_back(r, f.integrate(sequence_class(f.polytope(), s, r)));
  return out;
}

std::vector<std::pair<unsigned, MPoly>> strict_mult_check(const DelzantPolytope& p,
                                                          const MultiplicativeSequence& s,
                                                          unsigned r_max) {
  return strict_mult_check(ToricFibration(p), s, r_max);
}

MPoly k_poly_in_chern(const MultiplicativeSequence& s, unsigned r) {
  check_truncation(s, r);
  if (r == 0) return MPoly(1);
  // Formal roots x_i = F_i; K_r is symmetric in them.
  MPoly rest = sequence_class(r, s, r);
  std::vector<VarId> roots;
  for (unsigned i = 1; i <= r; ++i) roots.push_back(VarId::F(i));
  std::vector<MPoly> e(r + 1);
  for (unsigned i = 0; i <= r; ++i) e[i] = elementary_symmetric(roots, i);

  auto root_exponents = [&](const Monomial& m) {
    std::vector<std::uint32_t> a(r + 1, 0);
    for (const auto& [v, x] : m.factors())
      if (v.kind == VarId::Kind::Face) a[v.index - 1] = x;
    return a;
  };

  MPoly out;
  while (!rest.is_zero()) {
    // Lex-leading root monomial; its coefficient is a polynomial in y.
    std::vector<std::uint32_t> lead;
    for (const auto& [m, c] : rest.terms()) lead = std::max(lead, root_exponents(m));
    MPoly coeff;
    for (const auto& [m, c] : rest.terms()) {
      if (root_exponents(m) != lead) continue;
      std::vector<Monomial::Factor> y_part;
      for (const auto& f : m.factors())
        if (f.first.kind == VarId::Kind::Param) y_part.push_back(f);
      coeff.add_term(Monomial(std::move(y_part)), c);
    }
    MPoly e_product(1);
    std::vector<Monomial::Factor> chern;
    for (unsigned i = 1; i <= r; ++i) {
      std::uint32_t mult = lead[i - 1] - lead[i];
      if (mult == 0) continue;
      e_product *= pow(e[i], mult);
      chern.emplace_back(VarId::C(i), mult);
    }
    rest -= coeff * e_product;
    out += coeff * MPoly(Monomial(std::move(chern)), 1);
  }
  return out;
}

bool genus_product_check(const DelzantPolytope& fiber, const DelzantPolytope& base,
                         const DelzantPolytope& total, const MultiplicativeSequence& s) {
  return genus_value(total, s) == genus_value(fiber, s) * genus_value(base, s);
}

}  // namespace toric
