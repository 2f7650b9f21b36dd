#include "toric/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

Rat pairing(const std::vector<std::int64_t>& u, const std::vector<Rat>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += Rat(static_cast<long>(u[i])) * x[i];
  return s;
}

std::string point_str(const std::vector<Rat>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += to_string(x[i]);
  }
  return s + ")";
}

// Calls f(subset) for every size-r subset of {0..n-1}, ascending.
template <typename F>
void for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_shape(const DelzantPolytope& p) {
  if (p.dim == 0) throw Error(ErrorKind::InvalidPolytope, "dimension must be positive");
  for (std::size_t i = 0; i < p.facets.size(); ++i)
    if (p.facets[i].u.size() != p.dim)
      throw Error(ErrorKind::InvalidPolytope,
                  "facet " + std::to_string(i + 1) + " normal has wrong length");
}

std::string describe(long k, const Rat& a) { return std::to_string(k) + "," + to_string(a); }

}  // namespace

QMatrix normal_matrix(const DelzantPolytope& p, const std::vector<std::size_t>& facets) {
  QMatrix m(facets.size(), p.dim);
  for (std::size_t r = 0; r < facets.size(); ++r)
    for (std::size_t c = 0; c < p.dim; ++c)
      m(r, c) = Rat(static_cast<long>(p.facets.at(facets[r]).u[c]));
  return m;
}

std::vector<Vertex> enumerate_vertices(const DelzantPolytope& p) {
  check_shape(p);
  const std::size_t n = p.dim, k = p.facets.size();
  std::vector<Vertex> out;

  for_each_subset(k, n, [&](const std::vector<std::size_t>& subset) {
    QMatrix u = normal_matrix(p, subset);
    if (determinant(u) == 0) return;
    QMatrix inv = inverse(u);
    std::vector<Rat> point(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) point[i] += inv(i, j) * p.facets[subset[j]].lambda;

    std::vector<std::size_t> active;
    for (std::size_t f = 0; f < k; ++f) {
      Rat v = pairing(p.facets[f].u, point);
      if (v < p.facets[f].lambda) return;
      if (v == p.facets[f].lambda) active.push_back(f);
    }
    if (active.size() > n)
      throw Error(ErrorKind::NonSimpleVertex,
                  "point " + point_str(point) + " lies on " + std::to_string(active.size()) +
                      " facets");
    out.push_back({std::move(point), std::move(active)});
  });

  if (out.empty()) {
    QMatrix all(k, n);
    for (std::size_t f = 0; f < k; ++f)
      for (std::size_t c = 0; c < n; ++c) all(f, c) = Rat(static_cast<long>(p.facets[f].u[c]));
    if (rank(all) < n) throw Error(ErrorKind::Unbounded, "normals do not span the space");
    throw Error(ErrorKind::EmptyOrLowerDimensional, "no vertices");
  }

  // A pointed polyhedron is bounded iff no vertex has an unbounded edge.
  for (const auto& v : out) {
    QMatrix edges = inverse(normal_matrix(p, v.active));
    for (std::size_t e = 0; e < n; ++e) {
      bool blocked = false;
      for (std::size_t f = 0; f < k && !blocked; ++f) {
        if (std::binary_search(v.active.begin(), v.active.end(), f)) continue;
        Rat slope = 0;
        for (std::size_t c = 0; c < n; ++c)
          slope += Rat(static_cast<long>(p.facets[f].u[c])) * edges(c, e);
        blocked = slope < 0;
      }
      if (!blocked)
        throw Error(ErrorKind::Unbounded, "unbounded edge at " + point_str(v.point));
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  return out;
}

std::string to_string(ValidationReport::Status s) {
  using S = ValidationReport::Status;
  switch (s) {
    case S::Ok: return "Ok";
    case S::DimensionMismatch: return "DimensionMismatch";
    case S::ZeroNormal: return "ZeroNormal";
    case S::NonPrimitiveNormal: return "NonPrimitiveNormal";
    case S::TooFewFacets: return "TooFewFacets";
    case S::NonSimpleVertex: return "NonSimpleVertex";
    case S::Unbounded: return "Unbounded";
    case S::EmptyOrLowerDimensional: return "EmptyOrLowerDimensional";
    case S::NonSmoothVertex: return "NonSmoothVertex";
    case S::RedundantFacet: return "RedundantFacet";
  }
  return "Unknown";
}

ValidationReport validate_delzant(const DelzantPolytope& p) {
  using S = ValidationReport::Status;
  ValidationReport rep;
  auto fail = [&](S s, std::string msg) {
    rep.status = s;
    rep.message = std::move(msg);
    return rep;
  };

  if (p.dim == 0) return fail(S::DimensionMismatch, "dimension must be positive");
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    const auto& u = p.facets[i].u;
    rep.facet = i;
    if (u.size() != p.dim)
      return fail(S::DimensionMismatch, "facet " + std::to_string(i + 1) + " normal has length " +
                                            std::to_string(u.size()));
    std::int64_t g = 0;
    for (auto x : u) g = std::gcd(g, x);
    if (g == 0) return fail(S::ZeroNormal, "facet " + std::to_string(i + 1) + " has zero normal");
    if (g != 1)
      return fail(S::NonPrimitiveNormal, "facet " + std::to_string(i + 1) +
                                             " normal is not primitive (gcd " + std::to_string(g) +
                                             ")");
  }
  rep.facet.reset();
  if (p.facets.size() < p.dim + 1)
    return fail(S::TooFewFacets, "need at least " + std::to_string(p.dim + 1) + " facets");

  std::vector<Vertex> verts;
  try {
    verts = enumerate_vertices(p);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NonSimpleVertex: return fail(S::NonSimpleVertex, e.what());
      case ErrorKind::Unbounded: return fail(S::Unbounded, e.what());
      default: return fail(S::EmptyOrLowerDimensional, e.what());
    }
  }

  for (const auto& v : verts) {
    Rat det = determinant(normal_matrix(p, v.active));
    if (abs(det) != 1) {
      rep.vertex = v.point;
      rep.determinant = det;
      return fail(S::NonSmoothVertex, "active normals at " + point_str(v.point) +
                                          " have determinant " + to_string(det));
    }
  }

  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    std::size_t touching = 0;
    for (const auto& v : verts)
      touching += std::binary_search(v.active.begin(), v.active.end(), f) ? 1 : 0;
    if (touching < p.dim) {
      rep.facet = f;
      return fail(S::RedundantFacet,
                  "facet " + std::to_string(f + 1) + " does not support an (n-1)-face");
    }
  }
  return rep;
}

void require_valid(const DelzantPolytope& p) {
  auto rep = validate_delzant(p);
  if (!rep.ok())
    throw Error(ErrorKind::InvalidPolytope,
                (p.name.empty() ? std::string("polytope") : p.name) + ": " + rep.message);
}

DelzantPolytope normalize(const DelzantPolytope& p) {
  DelzantPolytope out = p;
  for (auto& f : out.facets) {
    std::int64_t g = 0;
    for (auto x : f.u) g = std::gcd(g, x);
    if (g <= 1) continue;
    for (auto& x : f.u) x /= g;
    f.lambda /= Rat(static_cast<long>(g));
  }
  return out;
}

DelzantPolytope translate(const DelzantPolytope& p, const std::vector<Rat>& t) {
  if (t.size() != p.dim) throw Error(ErrorKind::DimensionMismatch, "translation vector length");
  DelzantPolytope out = p;
  for (auto& f : out.facets) f.lambda += pairing(f.u, t);
  return out;
}

Rat euclidean_volume(const DelzantPolytope& p) {
  const auto verts = enumerate_vertices(p);
  const std::size_t n = p.dim;

  auto face_vertices = [&](const std::vector<std::size_t>& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (std::includes(verts[i].active.begin(), verts[i].active.end(), s.begin(), s.end()))
        out.push_back(i);
    return out;
  };

  // Cone each proper face not containing the base vertex over that vertex.
  std::vector<std::vector<std::size_t>> simplices;
  auto fan = [&](auto&& self, const std::vector<std::size_t>& s, std::size_t d,
                 std::vector<std::size_t> apex) -> void {
    auto vs = face_vertices(s);
    const std::size_t base = vs.front();
    apex.push_back(base);
    if (d == 0) {
      simplices.push_back(std::move(apex));
      return;
    }
    for (std::size_t j = 0; j < p.facets.size(); ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      if (std::binary_search(verts[base].active.begin(), verts[base].active.end(), j)) continue;
      std::vector<std::size_t> sub = s;
      sub.insert(std::upper_bound(sub.begin(), sub.end(), j), j);
      if (face_vertices(sub).empty()) continue;
      self(self, sub, d - 1, apex);
    }
  };
  fan(fan, {}, n, {});

  Rat total = 0;
  for (const auto& simplex : simplices) {
    QMatrix m(n, n);
    const auto& v0 = verts[simplex[0]].point;
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r - 1, c) = verts[simplex[r]].point[c] - v0[c];
    total += abs(determinant(m));
  }
  return total / factorial(static_cast<unsigned>(n));
}

DelzantPolytope build_ruled(long k, const Rat& lambda) {
  if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "ruled: k must be nonnegative");
  Rat b;
  if (k % 2 != 0) {
    if (!(lambda > -1 && 2 * (1 + lambda) > k - 1))
      throw Error(ErrorKind::ParameterOutOfRange,
                  "ruled(" + describe(k, lambda) + "): odd k needs lambda > -1, 2(1+lambda) > k-1");
    b = 2 + lambda + make_rat(k - 1, 2);
  } else {
    if (!(lambda >= 0 && 2 * (1 + lambda) > k))
      throw Error(ErrorKind::ParameterOutOfRange,
                  "ruled(" + describe(k, lambda) + "): even k needs lambda >= 0, 2(1+lambda) > k");
    b = 1 + lambda + make_rat(k, 2);
  }
  DelzantPolytope p;
  p.dim = 2;
  p.name = "ruled(k=" + std::to_string(k) + ",lambda=" + to_string(lambda) + ")";
  p.facets = {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, -1}, {{-1, -k}, -b}};
  return p;
}

DelzantPolytope build_blowup(const Rat& nu, long k) {
  if (!(nu > 0) || k < 0 || Int(k) >= ceil(nu / 2))
    throw Error(ErrorKind::ParameterOutOfRange,
                "blowup(nu=" + to_string(nu) + ",k=" + std::to_string(k) +
                    "): need nu > 0 and 0 <= k < ceil(nu/2)");
  DelzantPolytope p;
  p.dim = 2;
  p.name = "blowup(nu=" + to_string(nu) + ",k=" + std::to_string(k) + ")";
  p.facets = {{{1, 0}, 0},
              {{1, -1}, -1},
              {{0, -1}, -2},
              {{-1, -(2 * k + 1)}, -(nu + 3 + 2 * k)},
              {{0, 1}, 0}};
  return p;
}

DelzantPolytope build_projbundle(const Rat& mu, long k, long l) {
  if (!(mu > std::max({k, l, 0L})))
    throw Error(ErrorKind::ParameterOutOfRange,
                "projbundle(mu=" + to_string(mu) + ",k=" + std::to_string(k) +
                    ",l=" + std::to_string(l) + "): need mu > max(k, l, 0)");
  DelzantPolytope p;
  p.dim = 3;
  p.name = "projbundle(mu=" + to_string(mu) + ",k=" + std::to_string(k) +
           ",l=" + std::to_string(l) + ")";
  p.facets = {{{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{0, -1, -1}, -1}, {{1, 0, 0}, 0}, {{-1, -k, -l}, -mu}};
  return p;
}

DelzantPolytope build_simplex(unsigned n, const Rat& size) {
  if (n == 0 || !(size > 0))
    throw Error(ErrorKind::ParameterOutOfRange, "simplex: need n >= 1 and size > 0");
  DelzantPolytope p;
  p.dim = n;
  p.name = "simplex(n=" + std::to_string(n) + ",size=" + to_string(size) + ")";
  for (unsigned i = 0; i < n; ++i) {
    Facet f{std::vector<std::int64_t>(n, 0), 0};
    f.u[i] = 1;
    p.facets.push_back(std::move(f));
  }
  p.facets.push_back({std::vector<std::int64_t>(n, -1), -size});
  return p;
}

ProjbundleInvariants projbundle_invariants(const Rat& mu, long k, long l) {
  if (!(mu > std::max({k, l, 0L})))
    throw Error(ErrorKind::ParameterOutOfRange, "projbundle: need mu > max(k, l, 0)");
  long r = (k + l) % 3;
  if (r < 0) r += 3;
  return {static_cast<int>(r), 3 * mu - (k + l)};
}

}  // namespace toric
