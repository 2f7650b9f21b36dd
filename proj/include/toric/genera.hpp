#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/charclass.hpp"
#include "toric/poly.hpp"

namespace toric {

// Truncated characteristic power series Q(x) = sum q_m x^m with
// coefficients in Q[y]; it generates the genus through K(E) = prod Q(x_i).
struct MultiplicativeSequence {
  std::string name;
  std::vector<MPoly> coefficients;  // q_0 = 1, q_1, ..., q_R

  unsigned truncation() const { return static_cast<unsigned>(coefficients.size()) - 1; }
};

// Q_y(x) = x(1+y)/(1 - e^{-x(1+y)}) - xy up to x^R.
MultiplicativeSequence chi_y_series(unsigned truncation);

// Substitutes a rational value for y in every coefficient.
MultiplicativeSequence specialize(const MultiplicativeSequence& s, const Rat& y, std::string name);

// Q(x) = 1 + x: the total Chern class. K_r = c_r, which vanishes in the face
// ring above the fiber dimension.
MultiplicativeSequence total_chern_series(unsigned truncation);
// Q(x) = e^x, so K_r = c_1^r / r!. Not strictly multiplicative.
MultiplicativeSequence exponential_series(unsigned truncation);

// "todd" (y=0), "signature" (y=1), "euler" (y=-1) or "chi-y".
// Throws Error(MalformedExpression) for other names.
MultiplicativeSequence named_series(std::string_view name, unsigned truncation);

// Degree-2r part of prod_{i=1}^{k} Q(F_i). Throws TruncationTooLow if r
// exceeds the series truncation.
MPoly sequence_class(std::size_t facet_count, const MultiplicativeSequence& s, unsigned r);
MPoly sequence_class(const DelzantPolytope& p, const MultiplicativeSequence& s, unsigned r);

// pi_*(K_n): an element of Q[y].
MPoly genus_value(const ToricFibration& f, const MultiplicativeSequence& s);
MPoly genus_value(const DelzantPolytope& p, const MultiplicativeSequence& s);

// sum over vertices of (-y)^{#weights pairing positively with xi}.
// Throws NonGenericDirection if some weight pairs to zero.
MPoly chi_y_fixed_points(const DelzantPolytope& p, const std::vector<long>& xi);

// First xi = (1, N, N^2, ...), N = 2, 3, ..., that is generic.
std::vector<long> generic_direction(const DelzantPolytope& p);

// (r, pi_*(K_r)) for r = n+1 .. r_max.
std::vector<std::pair<unsigned, MPoly>> strict_mult_check(const ToricFibration& f,
                                                          const MultiplicativeSequence& s,
                                                          unsigned r_max);
std::vector<std::pair<unsigned, MPoly>> strict_mult_check(const DelzantPolytope& p,
                                                          const MultiplicativeSequence& s,
                                                          unsigned r_max);

// K_r written in the abstract Chern variables c_1..c_r.
MPoly k_poly_in_chern(const MultiplicativeSequence& s, unsigned r);

// genus(total) == genus(fiber) * genus(base)
bool genus_product_check(const DelzantPolytope& fiber, const DelzantPolytope& base,
                         const DelzantPolytope& total, const MultiplicativeSequence& s);

}  // namespace toric
