#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace th;

TEST_SUITE("exactalg") {

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("6/4") == q(3, 2));
  CHECK(parse_rat("-5") == -5);
  CHECK(to_string(parse_rat("-10/4")) == "-5/2");
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(factorial(5) == 120);
  CHECK(toric::ceil(q(3, 2)) == 2);
  CHECK(toric::floor(q(-3, 2)) == -2);
}

TEST_CASE("ring operations") {
  CHECK((T(1) + T(2)) * (T(1) - T(2)) == pow(T(1), 2) - pow(T(2), 2));
  CHECK(pow(F(1) + F(2), 0) == MPoly(1));
  auto x = T(1), y = T(2);
  MPoly s = pow(x + y, 2) + pow(x - y, 2) + pow(y, 2) + pow(2 * x - y, 2);
  CHECK(s == 6 * pow(x, 2) - 4 * x * y + 4 * pow(y, 2));
  CHECK(render(s) == "6*T1^2 - 4*T1*T2 + 4*T2^2");
  CHECK((x - x).is_zero());
}

TEST_CASE("exact division") {
  CHECK(exact_divide(pow(T(1), 2) - pow(T(2), 2), T(1) - T(2)) == T(1) + T(2));
  try {
    exact_divide(pow(T(1), 2) + pow(T(2), 2), T(1) - T(2));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  CHECK(exact_divide(MPoly(), T(1) * T(2)).is_zero());
  CHECK_THROWS_AS(exact_divide(T(1), MPoly()), Error);
}

TEST_CASE("substitution") {
  CHECK(substitute(F(1) * F(2), {{VarId::F(1), T(1)}, {VarId::F(2), T(2)}}) == T(1) * T(2));
  CHECK(substitute(pow(F(3), 2), {{VarId::F(3), MPoly()}}).is_zero());
  CHECK(substitute(T(1), {{VarId::T(1), F(1) - F(3)}}) == F(1) - F(3));
  // unassigned variables stay put
  CHECK(substitute(T(1) * F(2), {{VarId::T(1), 3}}) == 3 * F(2));
}

TEST_CASE("homogeneous components") {
  CHECK(homogeneous_component(1 + T(1) + pow(T(1), 2), 2) == T(1));
  CHECK(homogeneous_component(Y() * T(1) + pow(Y(), 2), 2) == Y() * T(1));
  CHECK(homogeneous_component(MPoly(), 4).is_zero());
  CHECK(truncate_degree(1 + T(1) + pow(T(1), 2), 2) == 1 + T(1));
  CHECK((T(1) * T(2) + pow(T(1), 2)).is_homogeneous());
  CHECK_FALSE((1 + T(1)).is_homogeneous());
  CHECK(MPoly::var(VarId::C(3)).cohomological_degree() == 6);
}

TEST_CASE("elementary symmetric polynomials") {
  std::vector<VarId> v{VarId::F(1), VarId::F(2), VarId::F(3)};
  CHECK(elementary_symmetric(v, 0) == MPoly(1));
  CHECK(elementary_symmetric(v, 2) == F(1) * F(2) + F(1) * F(3) + F(2) * F(3));
  CHECK(elementary_symmetric(v, 3) == F(1) * F(2) * F(3));
  CHECK(elementary_symmetric(v, 4).is_zero());
}

TEST_CASE("rendering") {
  CHECK(render(MPoly()) == "0");
  CHECK(render(q(1, 2) * Y() * T(1)) == "1/2*T1*y");
  CHECK(render(-T(1) + 1) == "-T1 + 1");
  CHECK(render(F(2) - 2 * T(1)) == "-2*T1 + F2");
}

TEST_CASE("rational functions compare by cross multiplication") {
  RatFun a(T(1), T(1) - T(2));
  RatFun b(T(1) * T(2), T(1) * T(2) - pow(T(2), 2));
  CHECK(a == b);
  RatFun c(-T(2), T(1) - T(2));
  CHECK(a + c == RatFun(1, 1));
  CHECK(a * RatFun(T(1) - T(2), 1) == RatFun(T(1), 1));
}

TEST_CASE("matrices") {
  QMatrix id{{1, 0}, {0, 1}};
  CHECK(inverse(id) == id);
  QMatrix m{{0, 1}, {-1, -1}};
  CHECK(inverse(m) == QMatrix{{-1, -1}, {1, 0}});
  CHECK(m * inverse(m) == id);
  CHECK_THROWS_AS(inverse(QMatrix{{1, 1}, {2, 2}}), Error);
  CHECK(rank(QMatrix{{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK(rank(QMatrix(3, 4)) == 0);
  CHECK(rank(QMatrix{{2, 4}, {1, 2}}) == 1);
  CHECK(determinant(QMatrix{{2, 1}, {5, 3}}) == 1);
}

TEST_CASE("row basis certificates reproduce dependent rows") {
  QMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}, {1, 3, 4}};
  auto rb = row_basis(m);
  CHECK(rb.basis == std::vector<std::size_t>{0, 2});
  REQUIRE(rb.dependencies.size() == 2);
  for (const auto& d : rb.dependencies)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rat s = 0;
      for (std::size_t j = 0; j < rb.basis.size(); ++j) s += d.coefficients[j] * m(rb.basis[j], c);
      CHECK(s == m(d.row, c));
    }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2);
  auto random_poly = [&] {
    MPoly p;
    for (int t = 0; t < 4; ++t)
      p += coef(rng) * pow(T(1), ex(rng)) * pow(T(2), ex(rng)) * pow(F(1), ex(rng));
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    MPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK(exact_divide(a * b, b) == a);
  }
}

}
