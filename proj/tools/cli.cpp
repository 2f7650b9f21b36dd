#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/toric.hpp"

namespace toric::cli {

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NestedIntegral:
    case ErrorKind::MalformedExpression:
    case ErrorKind::InhomogeneousClass:
    case ErrorKind::FileFormat:
      return kParseFailure;
    case ErrorKind::NotPolynomial:
    case ErrorKind::NotDivisible:
    case ErrorKind::Singular:
      return kInternalFailure;
    default:
      return kValidationFailure;
  }
}

std::string point_str(const std::vector<Rat>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
  return s + ")";
}

std::string facet_list(const std::vector<std::size_t>& active) {
  std::string s = "{";
  for (std::size_t i = 0; i < active.size(); ++i) s += (i ? "," : "") + ("F" + std::to_string(active[i] + 1));
  return s + "}";
}

DelzantPolytope load_valid(const std::string& file) {
  DelzantPolytope p = read_polytope(file);
  require_valid(p);
  return p;
}

int cmd_validate(const std::string& file, bool normalize_first, std::ostream& out) {
  DelzantPolytope p = read_polytope(file);
  if (normalize_first) p = normalize(p);
  auto rep = validate_delzant(p);
  if (!rep.ok()) {
    out << to_string(rep.status) << ": " << rep.message << '\n';
    return kValidationFailure;
  }
  out << "ok: " << p.name << " is a Delzant polytope (" << p.facets.size() << " facets, "
      << enumerate_vertices(p).size() << " vertices)\n";
  if (normalize_first) out << polytope_to_json(p).dump(2) << '\n';
  return kOk;
}

int cmd_info(const std::string& file, std::ostream& out) {
  ToricFibration f(load_valid(file));
  const auto& p = f.polytope();
  out << "polytope " << p.name << ", dim " << p.dim << ", " << p.facets.size() << " facets\n";
  out << "vertices:\n";
  for (const auto& fp : f.localizer().fixed_points()) {
    out << "  " << point_str(fp.vertex.point) << " on " << facet_list(fp.vertex.active) << "  weights [";
    for (std::size_t i = 0; i < fp.weights.size(); ++i) out << (i ? ", " : "") << render(fp.weights[i]);
    out << "]  euler " << render(fp.euler) << '\n';
  }
  out << "euclidean volume: " << to_string(euclidean_volume(p)) << '\n';
  out << "symplectic volume: " << to_string(f.symplectic_volume()) << '\n';
  out << "omegatilde = " << render(f.omega_tilde()) << '\n';
  out << "Omega = " << render(f.coupling()) << '\n';
  const unsigned trunc = p.dim + 3;
  MPoly chi = genus_value(f, chi_y_series(trunc));
  out << "chi_y genus: " << render(chi) << '\n';
  for (const char* name : {"todd", "signature", "euler"})
    out << "  " << name << ": " << render(genus_value(f, named_series(name, trunc))) << '\n';
  auto xi = generic_direction(p);
  out << "chi_y by fixed points: " << render(chi_y_fixed_points(p, xi)) << '\n';
  return kOk;
}

int cmd_integrate(const std::string& file, const std::string& expr, bool json, std::ostream& out) {
  ClassExpr e = parse_class_expr(expr);
  if (e.contains_integral())
    throw Error(ErrorKind::MalformedExpression, "integrate takes a class expression without I[...]");
  ToricFibration f(load_valid(file));
  MPoly value = f.integrate(f.evaluate(e));
  if (json)
    out << polynomial_to_json(value).dump() << '\n';
  else
    out << render(value) << '\n';
  return kOk;
}

int cmd_genus(const std::string& file, const std::string& series, bool check, unsigned max_order,
              std::ostream& out) {
  ToricFibration f(load_valid(file));
  const unsigned trunc = std::max(f.dim() + 3, max_order);
  auto s = named_series(series, trunc);
  out << series << " genus: " << render(genus_value(f, s)) << '\n';
  if (check) {
    if (max_order <= f.dim())
      throw Error(ErrorKind::TruncationTooLow, "--max-order must exceed the fiber dimension " +
                                                   std::to_string(f.dim()));
    bool all_zero = true;
    for (const auto& [r, v] : strict_mult_check(f, s, max_order)) {
      out << "  pi_*(K_" << r << ") = " << render(v) << '\n';
      all_zero = all_zero && v.is_zero();
    }
    out << "strict multiplicativity through order " << max_order << ": " << (all_zero ? "holds" : "FAILS")
        << '\n';
  }
  return kOk;
}

std::vector<ClassExpr> read_classes(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::FileFormat, "cannot open " + file);
  std::vector<ClassExpr> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_class_expr(line));
  }
  return out;
}

int cmd_detect(const std::string& classes_file, unsigned degree, const std::vector<std::string>& files,
               std::ostream& out) {
  auto classes = read_classes(classes_file);
  std::vector<ToricFibration> actions;
  for (const auto& file : files) actions.emplace_back(load_valid(file));

  out << "warning: the actions are assumed to act on one symplectic manifold; this is not checked.\n"
         "  ruled(k,lambda) ~ ruled(K,Lambda) when k = K mod 2 and lambda = Lambda;\n"
         "  blowup(nu,k) ~ blowup(nu,k') for 0 <= k, k' < ceil(nu/2);\n"
         "  projbundle(mu,k,l) ~ projbundle(mu',k',l') when their invariants\n"
         "  ((k+l) mod 3, 3mu-(k+l)) agree.\n";

  auto v = detection_matrix(actions, classes, degree);
  auto rep = betti_lower_bound(v);
  out << "columns per action:";
  for (const auto& m : v.columns) out << ' ' << m.str();
  out << '\n';
  for (std::size_t r = 0; r < v.classes.size(); ++r) {
    out << "  [" << r + 1 << "] " << to_string(v.classes[r]) << " :";
    for (std::size_t c = 0; c < v.matrix.cols(); ++c) out << ' ' << to_string(v.matrix(r, c));
    out << '\n';
  }
  out << "rank " << rep.rank << ": dim H^" << degree << "(B_" << to_string(rep.group) << ") >= " << rep.rank
      << '\n';
  out << "basis:";
  for (auto b : rep.certificate.basis) out << " [" << b + 1 << ']';
  out << '\n';
  for (const auto& d : rep.certificate.dependencies) {
    out << "  [" << d.row + 1 << "] =";
    bool any = false;
    for (std::size_t j = 0; j < d.coefficients.size(); ++j) {
      if (d.coefficients[j] == 0) continue;
      out << (any ? " + " : " ") << to_string(d.coefficients[j]) << "*[" << rep.certificate.basis[j] + 1 << ']';
      any = true;
    }
    if (!any) out << " 0";
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fiber integrals of characteristic classes over toric fibrations"};
  app.name("toric");
  app.require_subcommand(1);

  std::string file, expr, series = "chi-y", classes_file, output;
  bool normalize_flag = false, json = false, check_strict = false;
  unsigned max_order = 0, degree = 0;
  std::vector<std::string> polytope_files;

  auto* validate = app.add_subcommand("validate", "check the Delzant conditions");
  validate->add_option("file", file, "polytope JSON")->required();
  validate->add_flag("--normalize", normalize_flag, "divide normals by their gcd first");

  auto* info = app.add_subcommand("info", "vertices, Euler classes, volume and genera");
  info->add_option("file", file, "polytope JSON")->required();

  auto* build = app.add_subcommand("build", "write a polytope from one of the families");
  build->require_subcommand(1);
  build->add_option("-o,--output", output, "output file (default: stdout)");
  std::string k_text, l_text, rat_text, n_text;
  auto* ruled = build->add_subcommand("ruled", "Hirzebruch trapezoid");
  ruled->add_option("--k", k_text)->required();
  ruled->add_option("--lambda", rat_text)->required();
  auto* blowup = build->add_subcommand("blowup", "pentagon of CP2 # 2 CP2bar");
  blowup->add_option("--nu", rat_text)->required();
  blowup->add_option("--k", k_text)->required();
  auto* projbundle = build->add_subcommand("projbundle", "P(L_k + L_l + L_0) over CP1");
  projbundle->add_option("--mu", rat_text)->required();
  projbundle->add_option("--k", k_text)->required();
  projbundle->add_option("--l", l_text)->required();
  auto* simplex = build->add_subcommand("simplex", "CP^n simplex");
  simplex->add_option("--n", n_text)->required();
  simplex->add_option("--size", rat_text)->required();
  for (auto* sub : {ruled, blowup, projbundle, simplex})
    sub->add_option("-o,--output", output, "output file (default: stdout)");

  auto* integrate = app.add_subcommand("integrate", "fiber integral of a class expression");
  integrate->add_option("file", file, "polytope JSON")->required();
  integrate->add_option("--expr", expr, "class expression, e.g. c1^2*Omega")->required();
  integrate->add_flag("--json", json, "structured output");

  auto* genus = app.add_subcommand("genus", "genus value and strict multiplicativity");
  genus->add_option("file", file, "polytope JSON")->required();
  genus->add_option("--series", series, "todd | signature | chi-y | euler")
      ->check(CLI::IsMember({"todd", "signature", "chi-y", "euler"}));
  auto* strict_flag = genus->add_flag("--check-strict", check_strict, "report pi_*(K_r) for r > n");
  genus->add_option("--max-order", max_order, "largest r for --check-strict")->needs(strict_flag);

  auto* detect = app.add_subcommand("detect", "rank of the detection function");
  detect->add_option("--classes", classes_file, "one detection class per line")->required();
  detect->add_option("--degree", degree, "cohomological degree in H*(B_T)")->required();
  detect->add_option("polytopes", polytope_files, "polytope JSON files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "toric: " << e.what() << '\n';
    return kParseFailure;
  }

  auto parse_long = [](const std::string& text, const char* what) {
    Rat r = parse_rat(text);
    if (!is_integer(r) || !r.get_num().fits_slong_p())
      throw Error(ErrorKind::ParameterOutOfRange, std::string(what) + " must be an integer");
    return r.get_num().get_si();
  };

  try {
    if (*validate) return cmd_validate(file, normalize_flag, out);
    if (*info) return cmd_info(file, out);
    if (*integrate) return cmd_integrate(file, expr, json, out);
    if (*genus) {
      if (check_strict && max_order == 0) max_order = read_polytope(file).dim + 3;
      return cmd_genus(file, series, check_strict, max_order, out);
    }
    if (*detect) return cmd_detect(classes_file, degree, polytope_files, out);
    if (*build) {
      DelzantPolytope p;
      if (*ruled) p = build_ruled(parse_long(k_text, "--k"), parse_rat(rat_text));
      if (*blowup) p = build_blowup(parse_rat(rat_text), parse_long(k_text, "--k"));
      if (*projbundle)
        p = build_projbundle(parse_rat(rat_text), parse_long(k_text, "--k"), parse_long(l_text, "--l"));
      if (*simplex) {
        long n = parse_long(n_text, "--n");
        if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "--n must be positive");
        p = build_simplex(static_cast<unsigned>(n), parse_rat(rat_text));
      }
      require_valid(p);
      if (output.empty())
        out << polytope_to_json(p).dump(2) << '\n';
      else
        write_polytope(output, p);
      return kOk;
    }
  } catch (const Error& e) {
    err << "toric: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kOk;
}

}  // namespace toric::cli
