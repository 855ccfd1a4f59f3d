#include "json_io.hpp"

#include "tqft/errors.hpp"

namespace tqft::json_io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("\"") + what + "\" must be an integer");
  return j.get<int>();
}

std::vector<int> ints_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("\"") + what + "\" must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError("expected a scalar as a \"p/q\" string or an integer, got " + j.dump());
}

json scalar_to_json(const Scalar& s) { return to_string(s); }

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("expected a vector as an array of scalars, got " + j.dump());
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_to_json(x));
  return a;
}

FrobeniusAlgebra algebra_from_json(const json& j) {
  const int dim = int_from_json(field(j, "dim"), "dim");
  if (dim < 1) throw InputError("\"dim\" must be positive");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    for (const auto& b : j.at("basis")) {
      if (!b.is_string()) throw InputError("\"basis\" must list names as strings");
      basis.push_back(b.get<std::string>());
    }
  } else {
    for (int i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(basis.size()) != dim) throw InputError("\"basis\" must have dim entries");
  const json& m = field(j, "mult");
  if (!m.is_array() || static_cast<int>(m.size()) != dim) throw InputError("\"mult\" must be a dim x dim x dim array");
  std::vector<Scalar> mult;
  for (const auto& row : m) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) throw InputError("\"mult\" must be a dim x dim x dim array");
    for (const auto& cell : row) {
      Vector v = vector_from_json(cell);
      if (static_cast<int>(v.size()) != dim) throw InputError("\"mult\" must be a dim x dim x dim array");
      mult.insert(mult.end(), v.begin(), v.end());
    }
  }
  Vector counit = vector_from_json(field(j, "counit"));
  if (static_cast<int>(counit.size()) != dim) throw InputError("\"counit\" must have dim entries");
  bool commutative = false;
  if (j.contains("commutative")) {
    if (!j.at("commutative").is_boolean()) throw InputError("\"commutative\" must be a boolean");
    commutative = j.at("commutative").get<bool>();
  }
  return FrobeniusAlgebra(std::move(basis), std::move(mult), std::move(counit), commutative);
}

json algebra_to_json(const FrobeniusAlgebra& alg) {
  const int r = alg.dim();
  json mult = json::array();
  for (int i = 0; i < r; ++i) {
    json row = json::array();
    for (int k = 0; k < r; ++k) {
      Vector cell;
      for (int l = 0; l < r; ++l) cell.push_back(alg.c(i, k, l));
      row.push_back(vector_to_json(cell));
    }
    mult.push_back(row);
  }
  return {{"dim", r},
          {"basis", alg.basis()},
          {"mult", mult},
          {"counit", vector_to_json(alg.counit_values())},
          {"commutative", alg.commutative_flag()}};
}

json report_to_json(const ValidationReport& r) {
  json j{{"ok", r.ok()},
         {"associative", r.associative},
         {"has_unit", r.has_unit},
         {"commutativity_asserted", r.commutativity_asserted},
         {"commutative", r.commutative},
         {"nondegenerate", r.nondegenerate},
         {"failures", r.failures}};
  if (r.has_unit) j["unit"] = vector_to_json(r.unit);
  return j;
}

GroupTable group_from_json(const json& j) {
  const int order = int_from_json(field(j, "order"), "order");
  const json& t = field(j, "table");
  if (!t.is_array() || static_cast<int>(t.size()) != order) throw InputError("\"table\" must have order rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : t) table.push_back(ints_from_json(row, "table"));
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "G";
  GroupTable g(name, std::move(table));
  if (j.contains("identity") && int_from_json(j.at("identity"), "identity") != g.identity()) {
    throw InputError("\"identity\" does not match the table");
  }
  return g;
}

json group_to_json(const GroupTable& g) {
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(row);
  }
  return {{"name", g.name()}, {"order", g.order()}, {"identity", g.identity()}, {"table", table}};
}

CellGraph graph_from_json(const json& j) {
  const json& rot = field(j, "rotation");
  if (!rot.is_array()) throw InputError("\"rotation\" must be an array of half-edge lists");
  std::vector<std::vector<int>> rotation;
  for (const auto& v : rot) rotation.push_back(ints_from_json(v, "rotation"));
  if (j.contains("n") && int_from_json(j.at("n"), "n") != static_cast<int>(rotation.size())) {
    throw InputError("\"n\" must equal the number of rotation lists");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : field(j, "edges")) {
    auto p = ints_from_json(e, "edges");
    if (p.size() != 2) throw InputError("each edge must be a pair of half-edges");
    edges.emplace_back(p[0], p[1]);
  }
  std::vector<int> labels, arrows;
  if (j.contains("labels")) labels = ints_from_json(j.at("labels"), "labels");
  if (j.contains("arrows")) arrows = ints_from_json(j.at("arrows"), "arrows");
  return CellGraph(std::move(rotation), edges, std::move(labels), std::move(arrows));
}

json graph_to_json(const CellGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.num_vertices()},
          {"rotation", g.rotation()},
          {"edges", edges},
          {"arrows", g.arrows()},
          {"labels", g.labels()}};
}

namespace {

std::map<int, Scalar> coeffs_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("\"") + what + "\" must be a list of [exponent, coefficient] pairs");
  std::map<int, Scalar> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw InputError(std::string("\"") + what + "\" must be a list of [exponent, coefficient] pairs");
    }
    out[int_from_json(p[0], what)] += scalar_from_json(p[1]);
  }
  return out;
}

json coeffs_to_json(const std::map<int, Scalar>& m) {
  json a = json::array();
  for (const auto& [e, c] : m)
    if (c != 0) a.push_back({e, to_string(c)});
  return a;
}

}  // namespace

LocalSpectralCurve curve_from_json(const json& j, int default_truncation) {
  const json& discs = field(j, "discs");
  if (!discs.is_array()) throw InputError("\"discs\" must be an array");
  std::vector<CurveDisc> out;
  for (const auto& d : discs) out.push_back({coeffs_from_json(field(d, "x"), "x"), coeffs_from_json(field(d, "y"), "y")});
  int n = default_truncation;
  if (j.contains("truncation")) n = int_from_json(j.at("truncation"), "truncation");
  return LocalSpectralCurve(std::move(out), n);
}

json curve_to_json(const LocalSpectralCurve& c) {
  json discs = json::array();
  for (const auto& d : c.discs()) discs.push_back({{"x", coeffs_to_json(d.x)}, {"y", coeffs_to_json(d.y)}});
  return {{"discs", discs}, {"truncation", c.truncation()}};
}

json mpoly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", to_string(c)}});
  return terms;
}

MPoly mpoly_from_json(const json& j, int nvars) {
  if (!j.is_array()) throw InputError("polynomial terms must be an array");
  MPoly p(nvars);
  for (const auto& t : j) {
    auto e = ints_from_json(field(t, "exponents"), "exponents");
    if (static_cast<int>(e.size()) != nvars) throw InputError("exponent tuple has the wrong length");
    p.add_term(e, scalar_from_json(field(t, "coefficient")));
  }
  return p;
}

json correlator_to_json(const Correlator& c) {
  json entries = json::array();
  for (const auto& [key, p] : c.entries()) {
    entries.push_back({{"discs", key.first}, {"slots", key.second}, {"terms", mpoly_to_json(p)}});
  }
  return {{"g", c.genus()}, {"n", c.n()}, {"entries", entries}};
}

Correlator correlator_from_json(const json& j) {
  Correlator c(int_from_json(field(j, "g"), "g"), int_from_json(field(j, "n"), "n"));
  for (const auto& e : field(j, "entries")) {
    c.set({ints_from_json(field(e, "discs"), "discs"), ints_from_json(field(e, "slots"), "slots")},
          mpoly_from_json(field(e, "terms"), c.n()));
  }
  return c;
}

json intersections_to_json(const IntersectionTable& t) {
  json a = json::array();
  for (const auto& [k, v] : t) a.push_back({{"g", k.genus}, {"n", k.n}, {"d", k.d}, {"value", to_string(v)}});
  return a;
}

IntersectionTable intersections_from_json(const json& j) {
  if (!j.is_array()) throw InputError("intersection table must be an array");
  IntersectionTable t;
  for (const auto& e : j) {
    t[IntersectionKey{int_from_json(field(e, "g"), "g"), int_from_json(field(e, "n"), "n"),
                      ints_from_json(field(e, "d"), "d")}] = scalar_from_json(field(e, "value"));
  }
  return t;
}

json wkb_to_json(const WkbReport& r) {
  json orders = json::array();
  for (const auto& o : r.orders) {
    orders.push_back({{"order", o.order}, {"vanishes", o.vanishes()}, {"residual", o.residual.to_string()}});
  }
  return {{"orders", orders}, {"unstable_pins_match", r.unstable_pins_match}, {"ok", r.ok()}};
}

}  // namespace tqft::json_io
