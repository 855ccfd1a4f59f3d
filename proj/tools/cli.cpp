#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "tqft/catalan.hpp"
#include "tqft/eco.hpp"
#include "tqft/errors.hpp"

namespace tqft::cli {

namespace {

using json_io::json;


int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != std::string(v).size() || x < 1) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InputError(std::string(name) + " must be a positive integer, got \"" + v + "\"");
  }
}

int default_truncation() { return env_int("TQFT_TRUNCATION", 24); }
EnumerationLimits enumeration_limits() { return {env_int("TQFT_MAX_DEGREE_SUM", EnumerationLimits{}.max_degree_sum)}; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

// A file path when one exists, otherwise inline JSON text.
json read_json_argument(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_json_file(arg);
  try {
    return json::parse(arg);
  } catch (const json::parse_error& e) {
    throw InputError("\"" + arg + "\" is neither a file nor valid JSON: " + e.what());
  }
}

FrobeniusAlgebra load_algebra(const std::string& arg) {
  if (arg.rfind("zoo:", 0) == 0) return preset_algebra(arg.substr(4));
  return json_io::algebra_from_json(read_json_file(arg));
}

std::vector<Vector> vectors_from(const json& j, int dim) {
  if (!j.is_array()) throw InputError("vectors must be a JSON array of vectors");
  std::vector<Vector> vs;
  for (const auto& v : j) {
    vs.push_back(json_io::vector_from_json(v));
    if (static_cast<int>(vs.back().size()) != dim) {
      throw InputError("each vector needs " + std::to_string(dim) + " coordinates");
    }
  }
  return vs;
}

void require_valid(const FrobeniusAlgebra& alg) {
  if (!alg.report().ok()) throw InputError("algebra is not a Frobenius algebra: " + alg.report().failures.front());
}

std::string format_poly(const MPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Scalar a = abs(c);
    if (mono.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Options {
  std::string format = "table";
  std::string file, file2, vectors, algebra, colors, curve, preset, method = "recursion";
  int genus = 0, n = 0, max_complexity = 3, order = 2;
  std::vector<int> degrees;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::string& table) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << table;
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  FrobeniusAlgebra alg = load_algebra(o.file);
  const auto& r = alg.report();
  std::ostringstream t;
  t << (r.ok() ? "valid Frobenius algebra" : "invalid") << " (dim " << alg.dim() << ")\n";
  t << "associative: " << std::boolalpha << r.associative << "\nunit: " << r.has_unit
    << "\nnondegenerate: " << r.nondegenerate << "\ncommutative: " << r.commutative << "\n";
  for (const auto& f : r.failures) t << "failure: " << f << "\n";
  emit(out, o, json_io::report_to_json(r), t.str());
  return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_tqft(const Options& o, std::ostream& out) {
  FrobeniusAlgebra alg = load_algebra(o.file);
  require_valid(alg);
  if (o.genus < 0) throw InputError("--genus must be non-negative");
  std::vector<Vector> vs;
  if (!o.vectors.empty()) vs = vectors_from(read_json_argument(o.vectors), alg.dim());
  Scalar value;
  if (vs.empty()) {
    value = surface_invariant(alg, o.genus);
  } else {
    value = omega(alg, o.genus, vs);
  }
  json j{{"genus", o.genus}, {"n", vs.size()}, {"value", to_string(value)}};
  emit(out, o, j, to_string(value) + "\n");
  return kExitOk;
}

int cmd_zoo(const Options& o, std::ostream& out) {
  std::string name = o.file.rfind("zoo:", 0) == 0 ? o.file.substr(4) : o.file;
  FrobeniusAlgebra alg = [&] {
    try {
      return preset_algebra(name);
    } catch (const InputError& e) {
      std::string names;
      for (const auto& n : preset_algebra_names()) names += " " + n;
      throw InputError(std::string(e.what()) + "; presets:" + names);
    }
  }();
  out << json_io::algebra_to_json(alg).dump(2) << "\n";
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.degrees.empty()) throw InputError("--degrees needs at least one entry");
  for (int d : o.degrees)
    if (d < 0) throw InputError("--degrees entries must be non-negative");
  if (o.genus < 0) throw InputError("--genus must be non-negative");
  json j{{"g", o.genus}, {"n", o.degrees.size()}, {"mu", o.degrees}};
  std::ostringstream t;
  std::optional<Integer> rec, brute;
  if (o.method != "brute") {
    rec = count(o.genus, o.degrees);
    j["recursion"] = to_string(*rec);
    t << "recursion: " << to_string(*rec) << "\n";
  }
  if (o.method != "recursion") {
    brute = count_brute(o.genus, o.degrees, enumeration_limits());
    j["brute"] = to_string(*brute);
    t << "brute: " << to_string(*brute) << "\n";
  }
  const Integer& value = rec ? *rec : *brute;
  j["count"] = to_string(value);
  const bool agree = !rec || !brute || *rec == *brute;
  j["agree"] = agree;
  if (!agree) t << "methods disagree\n";
  emit(out, o, j, t.str());
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_hom(const Options& o, std::ostream& out) {
  CellGraph a = json_io::graph_from_json(read_json_file(o.file));
  CellGraph b = json_io::graph_from_json(read_json_file(o.file2));
  auto homs = hom_set(a, b);
  json list = json::array();
  std::ostringstream t;
  t << homs.size() << " morphism(s)\n";
  for (const auto& m : homs) {
    json edges = json::array();
    std::string es;
    for (auto [x, y] : m.contracted) {
      edges.push_back({x, y});
      es += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
    list.push_back({{"contracted", edges}, {"automorphism", m.automorphism}});
    t << (m.contracted.empty() ? "automorphism " + std::to_string(m.automorphism) : "contract" + es) << "\n";
  }
  emit(out, o, json{{"count", homs.size()}, {"morphisms", list}}, t.str());
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  CellGraph g = json_io::graph_from_json(read_json_file(o.file));
  FrobeniusAlgebra alg = load_algebra(o.algebra);
  require_valid(alg);
  if (!alg.commutative_flag()) throw InputError("graph evaluation needs a commutative algebra");
  auto colors = vectors_from(read_json_argument(o.colors), alg.dim());
  if (static_cast<int>(colors.size()) != g.num_vertices()) throw InputError("--colors needs one vector per vertex");
  Scalar value = evaluate_graph(alg, g, colors);
  Scalar expected = omega(alg, g.genus(), colors);
  const bool agree = value == expected;
  json j{{"genus", g.genus()}, {"value", to_string(value)}, {"omega", to_string(expected)}, {"agree", agree}};
  emit(out, o, j, to_string(value) + "\n");
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_toprec(const Options& o, std::ostream& out) {
  if (o.curve.empty() == o.preset.empty()) throw InputError("give exactly one of --curve and --curve-preset");
  if (o.max_complexity < 1) throw InputError("--max-complexity must be at least 1");
  const int n = default_truncation();
  LocalSpectralCurve curve = [&] {
    if (!o.curve.empty()) return json_io::curve_from_json(read_json_file(o.curve), n);
    if (o.preset == "airy") return airy_curve(n);
    if (o.preset == "catalan") return catalan_local_curve(n);
    throw InputError("unknown --curve-preset \"" + o.preset + "\"; use airy or catalan");
  }();
  CorrelatorTable table;
  if (o.algebra.empty()) {
    table = toprec_run(curve, o.max_complexity);
  } else {
    FrobeniusAlgebra alg = load_algebra(o.algebra);
    require_valid(alg);
    table = twisted_toprec_run(curve, alg, o.max_complexity);
  }
  json j = json::array();
  std::ostringstream t;
  for (const auto& [gn, corr] : table) {
    j.push_back(json_io::correlator_to_json(corr));
    for (const auto& [key, p] : corr.entries()) {
      t << "W_{" << gn.first << "," << gn.second << "} discs [" << join(key.first) << "]";
      if (!key.second.empty()) t << " slots [" << join(key.second) << "]";
      t << " = " << format_poly(p, "u") << "\n";
    }
  }
  emit(out, o, j, t.str());
  return kExitOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const int g = o.genus, n = o.n;
  IntersectionTable counts = intersection_numbers(g, n);
  auto table = toprec_run(catalan_local_curve(default_truncation()), 2 * g - 2 + n);
  IntersectionTable rec = intersection_numbers_toprec(table, g, n);
  const bool agree = counts == rec;
  std::ostringstream t;
  for (const auto& [k, v] : counts) {
    t << "<";
    for (size_t i = 0; i < k.d.size(); ++i) t << (i ? " " : "") << "tau_" << k.d[i];
    t << ">_" << g << " = " << to_string(v) << "\n";
  }
  if (!agree) t << "recursion on the local curve disagrees\n";
  json j = json_io::intersections_to_json(counts);
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << t.str();
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_wkb(const Options& o, std::ostream& out) {
  WkbReport r = wkb_residual(o.order);
  std::ostringstream t;
  for (const auto& ord : r.orders) {
    t << "order h^" << ord.order << ": vanishes: " << (ord.vanishes() ? "true" : "false");
    if (!ord.vanishes()) t << "  residual = " << ord.residual.to_string();
    t << "\n";
  }
  t << "unstable terms match counts: " << (r.unstable_pins_match ? "true" : "false") << "\n";
  emit(out, o, json_io::wkb_to_json(r), t.str());
  return r.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius algebras, cell graph counts, topological recursion and the Catalan quantum curve"};
  app.name("tqft");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* algebra = app.add_subcommand("algebra", "Frobenius algebra tools");
  algebra->require_subcommand(1);
  auto* validate = algebra->add_subcommand("validate", "Check the Frobenius axioms");
  validate->add_option("file", o.file, "Algebra JSON file or zoo:<name>")->required();
  auto* tqft = algebra->add_subcommand("tqft", "Evaluate the 2D TQFT");
  tqft->add_option("file", o.file, "Algebra JSON file or zoo:<name>")->required();
  tqft->add_option("--genus", o.genus, "Genus")->required();
  tqft->add_option("--vectors", o.vectors, "JSON array of input vectors, inline or as a file");
  auto* zoo = algebra->add_subcommand("zoo", "Print a preset algebra as JSON");
  zoo->add_option("name", o.file, "Preset name")->required();

  auto* graphs = app.add_subcommand("graphs", "Cell graph tools");
  graphs->require_subcommand(1);
  auto* cnt = graphs->add_subcommand("count", "Count arrowed cell graphs C_{g,n}(mu)");
  cnt->add_option("--genus", o.genus, "Genus")->required();
  cnt->add_option("--degrees", o.degrees, "Vertex degrees mu_1,mu_2,...")->required()->delimiter(',');
  cnt->add_option("--method", o.method, "Counting method")->check(CLI::IsMember({"recursion", "brute", "both"}));
  auto* hom = graphs->add_subcommand("hom", "List edge-contraction morphisms");
  hom->add_option("source", o.file, "Source graph JSON")->required();
  hom->add_option("target", o.file2, "Target graph JSON")->required();
  auto* eval = graphs->add_subcommand("eval", "Evaluate a colored graph through edge contraction");
  eval->add_option("graph", o.file, "Graph JSON")->required();
  eval->add_option("--algebra", o.algebra, "Algebra JSON file or zoo:<name>")->required();
  eval->add_option("--colors", o.colors, "JSON array of vertex colors, inline or as a file")->required();

  auto* toprec = app.add_subcommand("toprec", "Topological recursion");
  toprec->require_subcommand(1);
  auto* trun = toprec->add_subcommand("run", "Compute W_{g,n} up to a given 2g - 2 + n");
  trun->add_option("--curve", o.curve, "Curve JSON file");
  trun->add_option("--curve-preset", o.preset, "airy or catalan");
  trun->add_option("--max-complexity", o.max_complexity, "Largest 2g - 2 + n")->required();
  trun->add_option("--algebra", o.algebra, "Twist by a commutative Frobenius algebra (file or zoo:<name>)");

  auto* intersect = app.add_subcommand("intersect", "psi-class intersection numbers from the Catalan counts");
  intersect->add_option("--g", o.genus, "Genus")->required();
  intersect->add_option("--n", o.n, "Number of marked points")->required();

  auto* wkb = app.add_subcommand("wkb", "Quantum curve checks");
  wkb->require_subcommand(1);
  auto* verify = wkb->add_subcommand("verify", "Verify the WKB residual order by order");
  verify->add_option("--order", o.order, "Highest order of h")->required();

  std::vector<std::string> storage{"tqft"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (tqft->parsed()) return cmd_tqft(o, out);
    if (zoo->parsed()) return cmd_zoo(o, out);
    if (cnt->parsed()) return cmd_count(o, out);
    if (hom->parsed()) return cmd_hom(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (trun->parsed()) return cmd_toprec(o, out);
    if (intersect->parsed()) return cmd_intersect(o, out);
    if (verify->parsed()) return cmd_wkb(o, out);
  } catch (const PolynomialityError& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (set TQFT_TRUNCATION or the curve's \"truncation\")\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace tqft::cli
