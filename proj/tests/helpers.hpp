#pragma once

#include <toric/toric.hpp>

#include <vector>

namespace th {

using namespace toric;

inline MPoly T(unsigned i) { return MPoly::var(VarId::T(i)); }
inline MPoly F(unsigned i) { return MPoly::var(VarId::F(i)); }
inline MPoly Y() { return MPoly::var(VarId::y()); }
inline Rat q(long a, long b = 1) { return make_rat(a, b); }

inline DelzantPolytope simplex2() { return build_simplex(2, 1); }

// Every builder instance that appears in the acceptance suite.
inline std::vector<DelzantPolytope> builder_instances() {
  return {
      build_ruled(1, q(1, 2)),  build_ruled(2, q(3, 2)),  build_ruled(0, 1),
      build_ruled(1, q(3, 2)),  build_ruled(3, q(3, 2)),  build_blowup(3, 0),
      build_blowup(3, 1),       build_projbundle(3, 0, 0), build_projbundle(4, 1, 2),
  };
}

}  // namespace th
