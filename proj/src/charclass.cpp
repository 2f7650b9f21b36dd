#include "toric/charclass.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

std::vector<VarId> face_vars(std::size_t k) {
  std::vector<VarId> v;
  for (std::size_t i = 1; i <= k; ++i) v.push_back(VarId::F(static_cast<unsigned>(i)));
  return v;
}

}  // namespace

ToricFibration::ToricFibration(DelzantPolytope p) : loc_(std::move(p)) {
  const unsigned n = loc_.dim();
  const auto faces = face_vars(loc_.facet_count());
  for (unsigned i = 0; i <= n; ++i) chern_.push_back(elementary_symmetric(faces, i));

  for (std::size_t i = 0; i < loc_.facet_count(); ++i)
    omega_tilde_.add_term(Monomial(faces[i]), -polytope().facets[i].lambda);

  MPoly top = loc_.integrate(pow(omega_tilde_, n));
  if (!top.is_constant())
    throw Error(ErrorKind::NotPolynomial, "volume integral is not a constant: " + render(top));
  volume_ = top.constant_term() / factorial(n);
  if (volume_ <= 0) throw Error(ErrorKind::InvalidPolytope, "non-positive symplectic volume");

  MPoly shift = loc_.pullback(loc_.integrate(pow(omega_tilde_, n + 1)));
  coupling_ = omega_tilde_ - shift * (1 / (factorial(n + 1) * volume_));
}

const MPoly& ToricFibration::chern(unsigned i) const {
  if (i > dim())
    throw Error(ErrorKind::IndexOutOfRange,
                "c" + std::to_string(i) + " on a fiber of complex dimension " + std::to_string(dim()));
  return chern_[i];
}

MPoly ToricFibration::pontryagin(unsigned j) const {
  if (j < 1 || j > dim())
    throw Error(ErrorKind::IndexOutOfRange,
                "p" + std::to_string(j) + " on a fiber of complex dimension " + std::to_string(dim()));
  MPoly out;
  for (unsigned a = 0; a <= 2 * j; ++a) {
    unsigned b = 2 * j - a;
    if (a > dim() || b > dim()) continue;
    MPoly term = chern_[a] * chern_[b];
    out += (a % 2 == 0) ? term : -term;
  }
  return (j % 2 == 0) ? out : -out;
}

MPoly ToricFibration::symbol(const ClassSymbol& s) const {
  using K = ClassSymbol::Kind;
  switch (s.kind) {
    case K::Chern:
      if (s.index == 0) throw Error(ErrorKind::IndexOutOfRange, "c0 is not a class symbol");
      return chern(s.index);
    case K::Pontryagin: return pontryagin(s.index);
    case K::Euler: return euler();
    case K::Omega: return coupling_;
    case K::OmegaTilde: return omega_tilde_;
  }
  return {};
}

MPoly ToricFibration::evaluate(const ClassExpr& e) const {
  using Op = ClassExpr::Op;
  switch (e.op) {
    case Op::Literal: return MPoly(e.value);
    case Op::Symbol: return symbol(e.symbol);
    case Op::Integral:
      throw Error(ErrorKind::MalformedExpression, "integral atom " + to_string(e) + " in a class expression");
    case Op::Power: return pow(evaluate(e.children.front()), e.exponent);
    case Op::Product: {
      MPoly out(1);
      for (const auto& c : e.children) out *= evaluate(c);
      return out;
    }
    case Op::Sum: {
      MPoly out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (e.signs[i] < 0)
          out -= evaluate(e.children[i]);
        else
          out += evaluate(e.children[i]);
      }
      return out;
    }
  }
  return {};
}

MPoly chern_class(const DelzantPolytope& p, unsigned i) { return ToricFibration(p).chern(i); }
MPoly pontryagin_class(const DelzantPolytope& p, unsigned j) { return ToricFibration(p).pontryagin(j); }
MPoly euler_class(const DelzantPolytope& p) { return ToricFibration(p).euler(); }
MPoly omega_tilde(const DelzantPolytope& p) { return ToricFibration(p).omega_tilde(); }
Rat symplectic_volume(const DelzantPolytope& p) { return ToricFibration(p).symplectic_volume(); }
MPoly coupling_class(const DelzantPolytope& p) { return ToricFibration(p).coupling(); }

MPoly evaluate_class_expr(const DelzantPolytope& p, const ClassExpr& e) {
  return ToricFibration(p).evaluate(e);
}

}  // namespace toric
