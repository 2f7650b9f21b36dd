#include "toric/io.hpp"

#include <fstream>
#include <limits>

#include "toric/error.hpp"

namespace toric {

nlohmann::ordered_json polytope_to_json(const DelzantPolytope& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["dim"] = p.dim;
  auto facets = nlohmann::ordered_json::array();
  for (const auto& f : p.facets) {
    nlohmann::ordered_json jf;
    jf["u"] = f.u;
    jf["lambda"] = to_string(f.lambda);
    facets.push_back(std::move(jf));
  }
  j["facets"] = std::move(facets);
  return j;
}

DelzantPolytope polytope_from_json(const nlohmann::json& j) {
  auto bad = [](const std::string& what) { return Error(ErrorKind::FileFormat, what); };
  if (!j.is_object()) throw bad("polytope file must hold a JSON object");
  DelzantPolytope p;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw bad("'name' must be a string");
    p.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<unsigned>() == 0)
    throw bad("'dim' must be a positive integer");
  p.dim = j["dim"].get<unsigned>();
  if (!j.contains("facets") || !j["facets"].is_array()) throw bad("'facets' must be an array");

  for (std::size_t i = 0; i < j["facets"].size(); ++i) {
    const auto& jf = j["facets"][i];
    const std::string where = "facet " + std::to_string(i + 1);
    if (!jf.is_object() || !jf.contains("u") || !jf.contains("lambda"))
      throw bad(where + " needs 'u' and 'lambda'");
    if (!jf["u"].is_array()) throw bad(where + ": 'u' must be an array of integers");
    Facet f;
    for (const auto& x : jf["u"]) {
      if (!x.is_number_integer()) throw bad(where + ": 'u' must be an array of integers");
      f.u.push_back(x.get<std::int64_t>());
    }
    if (f.u.size() != p.dim) throw bad(where + ": 'u' must have " + std::to_string(p.dim) + " entries");
    const auto& jl = jf["lambda"];
    if (jl.is_string()) {
      f.lambda = parse_rat(jl.get<std::string>());
    } else if (jl.is_number_integer()) {
      f.lambda = Rat(Int(std::to_string(jl.get<std::int64_t>())));
    } else {
      throw bad(where + ": 'lambda' must be a \"p/q\" string or an integer");
    }
    p.facets.push_back(std::move(f));
  }
  return p;
}

DelzantPolytope read_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileFormat, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::FileFormat, path.string() + ": " + e.what());
  }
  DelzantPolytope p = polytope_from_json(j);
  if (p.name.empty()) p.name = path.stem().string();
  return p;
}

void write_polytope(const std::filesystem::path& path, const DelzantPolytope& p) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::FileFormat, "cannot write " + path.string());
  out << polytope_to_json(p).dump(2) << '\n';
}

nlohmann::ordered_json polynomial_to_json(const MPoly& p) {
  nlohmann::ordered_json j;
  j["degree"] = p.cohomological_degree();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = to_string(c);
    auto exps = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    t["exponents"] = std::move(exps);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace toric
