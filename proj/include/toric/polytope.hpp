#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/rational.hpp"

namespace toric {

// Half-space <x, u> >= lambda with inward primitive normal u.
struct Facet {
  std::vector<std::int64_t> u;
  Rat lambda;
};

// Polytope {x : <x, u_i> >= lambda_i}. Facet order fixes the F_i labels
// (facet 0 is F_1).
struct DelzantPolytope {
  unsigned dim = 0;
  std::vector<Facet> facets;
  std::string name;

  std::size_t facet_count() const { return facets.size(); }
};

struct Vertex {
  std::vector<Rat> point;
  std::vector<std::size_t> active;  // zero-based facet indices, ascending
};

// Brute force over n-subsets of facets. Vertices are returned in
// lexicographic order of their coordinates. Throws NonSimpleVertex,
// Unbounded or EmptyOrLowerDimensional.
std::vector<Vertex> enumerate_vertices(const DelzantPolytope& p);

struct ValidationReport {
  enum class Status {
    Ok,
    DimensionMismatch,
    ZeroNormal,
    NonPrimitiveNormal,
    TooFewFacets,
    NonSimpleVertex,
    Unbounded,
    EmptyOrLowerDimensional,
    NonSmoothVertex,
    RedundantFacet,
  };

  Status status = Status::Ok;
  std::optional<std::size_t> facet;         // zero-based
  std::optional<std::vector<Rat>> vertex;
  std::optional<Rat> determinant;
  std::string message;

  bool ok() const { return status == Status::Ok; }
};

std::string to_string(ValidationReport::Status s);

ValidationReport validate_delzant(const DelzantPolytope& p);

// Throws Error(InvalidPolytope) carrying the report message unless valid.
void require_valid(const DelzantPolytope& p);

// Divides each normal by the gcd of its entries and rescales lambda.
DelzantPolytope normalize(const DelzantPolytope& p);

// Translate by a lattice vector t: lambda_i -> lambda_i + <t, u_i>.
DelzantPolytope translate(const DelzantPolytope& p, const std::vector<Rat>& t);

// n x n matrix whose rows are the normals of the given facets.
QMatrix normal_matrix(const DelzantPolytope& p, const std::vector<std::size_t>& facets);

// Exact Euclidean volume by recursive fan triangulation of the face lattice.
// Does not touch the localization engine.
Rat euclidean_volume(const DelzantPolytope& p);

DelzantPolytope build_ruled(long k, const Rat& lambda);
DelzantPolytope build_blowup(const Rat& nu, long k);
DelzantPolytope build_projbundle(const Rat& mu, long k, long l);
DelzantPolytope build_simplex(unsigned n, const Rat& size);

struct ProjbundleInvariants {
  int residue;   // (k + l) mod 3, in {0, 1, 2}
  Rat coupling;  // 3 mu - (k + l)
  friend bool operator==(const ProjbundleInvariants&, const ProjbundleInvariants&) = default;
};

ProjbundleInvariants projbundle_invariants(const Rat& mu, long k, long l);

}  // namespace toric
