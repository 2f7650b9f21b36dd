#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "toric/poly.hpp"
#include "toric/polytope.hpp"

namespace toric {

// { "name": ..., "dim": n, "facets": [ { "u": [...], "lambda": "p/q" }, ... ] }
nlohmann::ordered_json polytope_to_json(const DelzantPolytope& p);
// Throws Error(FileFormat) on schema violations. Lambda may be a "p/q"
// string or a JSON integer; floating point values are rejected.
DelzantPolytope polytope_from_json(const nlohmann::json& j);

DelzantPolytope read_polytope(const std::filesystem::path& path);
void write_polytope(const std::filesystem::path& path, const DelzantPolytope& p);

// { "degree": d, "terms": [ { "coeff": "p/q", "exponents": { "T1": 2 } } ] }
nlohmann::ordered_json polynomial_to_json(const MPoly& p);

}  // namespace toric
