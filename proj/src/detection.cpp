#include "toric/detection.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

void check_atoms(const ClassExpr& d) {
  using Op = ClassExpr::Op;
  if (d.op == Op::Symbol)
    throw Error(ErrorKind::MalformedExpression,
                "class symbol " + d.symbol.name() + " outside an integral I[...]");
  if (d.op == Op::Integral) return;
  for (const auto& c : d.children) check_atoms(c);
}

MPoly eval(const ToricFibration& f, const ClassExpr& d) {
  using Op = ClassExpr::Op;
  switch (d.op) {
    case Op::Literal: return MPoly(d.value);
    case Op::Symbol:
      throw Error(ErrorKind::MalformedExpression, "class symbol " + d.symbol.name() + " outside an integral");
    case Op::Integral: return f.integrate(f.evaluate(d.children.front()));
    case Op::Power: return pow(eval(f, d.children.front()), d.exponent);
    case Op::Product: {
      MPoly out(1);
      for (const auto& c : d.children) out *= eval(f, c);
      return out;
    }
    case Op::Sum: {
      MPoly out;
      for (std::size_t i = 0; i < d.children.size(); ++i) {
        if (d.signs[i] < 0)
          out -= eval(f, d.children[i]);
        else
          out += eval(f, d.children[i]);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

void check_detection_class(const ClassExpr& d, unsigned n) {
  check_atoms(d);
  if (!homogeneous_degree(d, n))
    throw Error(ErrorKind::InhomogeneousClass, to_string(d) + " mixes cohomological degrees");
}

MPoly evaluate_detection_class(const ToricFibration& f, const ClassExpr& d) {
  check_detection_class(d, f.dim());
  return eval(f, d);
}

MPoly evaluate_detection_class(const DelzantPolytope& p, const ClassExpr& d) {
  return evaluate_detection_class(ToricFibration(p), d);
}

std::vector<Monomial> base_monomials(unsigned n, unsigned degree) {
  std::vector<Monomial> out;
  if (degree % 2 != 0) return out;
  const unsigned total = degree / 2;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      std::vector<Monomial::Factor> f;
      for (unsigned j = 0; j < n; ++j) f.emplace_back(VarId::T(j + 1), e[j]);
      out.emplace_back(std::move(f));
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (n > 0) rec(rec, 0, total);
  std::sort(out.begin(), out.end(), GrlexDescending{});
  return out;
}

DetectionVectorSet detection_matrix(const std::vector<ToricFibration>& actions,
                                    const std::vector<ClassExpr>& classes, unsigned degree) {
  if (actions.empty()) throw Error(ErrorKind::DimensionMismatch, "no torus actions given");
  if (degree % 2 != 0) throw Error(ErrorKind::MixedDegrees, "target degree must be even");
  const unsigned n = actions.front().dim();
  for (const auto& a : actions)
    if (a.dim() != n)
      throw Error(ErrorKind::DimensionMismatch,
                  a.polytope().name + " has dimension " + std::to_string(a.dim()) + ", expected " +
                      std::to_string(n));
  for (const auto& c : classes) {
    check_detection_class(c, n);
    int d = *homogeneous_degree(c, n);
    if (d != static_cast<int>(degree))
      throw Error(ErrorKind::MixedDegrees,
                  to_string(c) + " has degree " + std::to_string(d) + ", target is " + std::to_string(degree));
  }

  DetectionVectorSet v;
  v.classes = classes;
  v.degree = degree;
  v.columns = base_monomials(n, degree);
  for (const auto& a : actions) v.actions.push_back(a.polytope().name);
  const std::size_t width = v.columns.size();
  v.matrix = QMatrix(classes.size(), width * actions.size());
  for (std::size_t r = 0; r < classes.size(); ++r)
    for (std::size_t a = 0; a < actions.size(); ++a) {
      MPoly value = eval(actions[a], classes[r]);
      for (std::size_t c = 0; c < width; ++c) v.matrix(r, a * width + c) = value.coefficient(v.columns[c]);
    }
  return v;
}

DetectionVectorSet detection_matrix(const std::vector<DelzantPolytope>& actions,
                                    const std::vector<ClassExpr>& classes, unsigned degree) {
  std::vector<ToricFibration> fibrations;
  for (const auto& p : actions) fibrations.emplace_back(p);
  return detection_matrix(fibrations, classes, degree);
}

std::string to_string(GroupKind g) {
  switch (g) {
    case GroupKind::Ham: return "Ham";
    case GroupKind::Symp: return "Symp";
    case GroupKind::Diff: return "Diff";
  }
  return "?";
}

GroupKind group_of(const std::vector<ClassExpr>& classes) {
  bool ham = false, symp = false;
  for (const auto& c : classes)
    for (const auto& s : c.symbols()) {
      ham = ham || s.kind == ClassSymbol::Kind::Omega || s.kind == ClassSymbol::Kind::OmegaTilde;
      symp = symp || s.kind == ClassSymbol::Kind::Chern;
    }
  return ham ? GroupKind::Ham : symp ? GroupKind::Symp : GroupKind::Diff;
}

BettiReport betti_lower_bound(const DetectionVectorSet& v) {
  BettiReport rep;
  rep.certificate = row_basis(v.matrix);
  rep.rank = rep.certificate.basis.size();
  rep.group = group_of(v.classes);
  rep.degree = v.degree;
  return rep;
}

}  // namespace toric
