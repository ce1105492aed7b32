#include "walker/io.hpp"

#include "walker/errors.hpp"

#include <fstream>
#include <sstream>

namespace walker {

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset -> line:column
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SpecError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json(os.str(), path);
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SpecError(where + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw SpecError(where + ": missing field \"" + key + "\"");
  return *it;
}

Polynomial poly_from_json(const Json& j, std::size_t n, const std::string& field) {
  if (j.is_number_integer()) return Polynomial(n, Scalar(j.get<long>()));
  if (!j.is_string()) throw SpecError(field + ": expected a polynomial string");
  try {
    return Polynomial::parse(j.get<std::string>(), n);
  } catch (const std::invalid_argument& e) {
    throw SpecError(field + ": " + e.what());
  }
}

PolyMatrix poly_matrix_from_json(const Json& j, std::size_t n, const std::string& field) {
  if (!j.is_array() || j.size() != n) throw SpecError(field + ": expected " + std::to_string(n) + " rows");
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != n) throw SpecError(row + ": expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m[i].push_back(poly_from_json(j[i][k], n, row + "[" + std::to_string(k) + "]"));
  }
  return m;
}

Json poly_matrix_to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(p.to_string());
    out.push_back(r);
  }
  return out;
}

std::size_t size_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long>() < 0) throw SpecError(field + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

WalkerMetric metric_from_json(const Json& j, std::vector<std::string>* warnings) {
  WalkerMetric w;
  w.n = size_from_json(require(j, "n", "metric spec"), "n");
  if (w.n < 1) throw SpecError("n: must be at least 1");
  if (w.n + 2 > kMaxVars) throw SpecError("n: at most " + std::to_string(kMaxVars - 2));

  std::string convention = "component";
  if (const auto it = j.find("convention"); it != j.end()) {
    if (!it->is_string()) throw SpecError("convention: expected a string");
    convention = it->get<std::string>();
    if (convention != "component" && convention != "walker-half")
      throw SpecError("convention: expected \"component\" or \"walker-half\", got \"" + convention + "\"");
  } else if (warnings) {
    warnings->push_back("no convention field; reading u as the components h(d_yi, d_z)");
  }

  w.f = poly_from_json(require(j, "f", "metric spec"), w.n, "f");
  const Json& u = require(j, "u", "metric spec");
  if (!u.is_array()) throw SpecError("u: expected an array of " + std::to_string(w.n) + " polynomial strings");
  if (u.size() != w.n)
    throw SpecError("u: expected " + std::to_string(w.n) + " entries, got " + std::to_string(u.size()));
  const Scalar half = Scalar(make_rational(1, 2));
  for (std::size_t i = 0; i < w.n; ++i) {
    Polynomial p = poly_from_json(u[i], w.n, "u[" + std::to_string(i) + "]");
    w.u.push_back(convention == "walker-half" ? half * p : p);
  }
  if (const auto it = j.find("g"); it != j.end() && !it->is_null()) w.g = poly_matrix_from_json(*it, w.n, "g");
  if (const auto it = j.find("g_inverse"); it != j.end() && !it->is_null())
    w.g_inverse = poly_matrix_from_json(*it, w.n, "g_inverse");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "f" && key != "u" && key != "g" && key != "g_inverse" && key != "convention" &&
        key != "name" && warnings)
      warnings->push_back("ignoring unknown field \"" + key + "\"");
  w.validate();
  return w;
}

Json metric_to_json(const WalkerMetric& w) {
  Json j;
  j["n"] = w.n;
  j["convention"] = "component";
  j["f"] = w.f.to_string();
  Json u = Json::array();
  for (const auto& p : w.u) u.push_back(p.to_string());
  j["u"] = u;
  if (!w.g.empty()) j["g"] = poly_matrix_to_json(w.g);
  if (w.g_inverse) j["g_inverse"] = poly_matrix_to_json(*w.g_inverse);
  return j;
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw SpecError(field + ": expected an integer or an exact number string");
  const Polynomial p = poly_from_json(j, 1, field);
  if (!p.is_constant()) throw SpecError(field + ": expected a constant");
  return p.constant_term();
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw SpecError(field + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw SpecError(field + "[0]: expected an array");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw SpecError(row + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], row + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

namespace {

std::vector<Matrix> matrices_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SpecError(field + ": expected an array of matrices");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(matrix_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

std::string builtin_key(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw SpecError("builtin: expected a name");
    return j["builtin"].get<std::string>();
  }
  return {};
}

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& x : names) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

LieAlgebraRep algebra_from_json(const Json& j) {
  if (const std::string name = builtin_key(j); !name.empty()) {
    try {
      return builtin_algebra(name);
    } catch (const std::out_of_range&) {
      throw SpecError("unknown algebra \"" + name + "\" (built-in: " + join(builtin_algebra_names()) + ")");
    }
  }
  LieAlgebraRep g;
  g.n = size_from_json(require(j, "n", "algebra spec"), "n");
  if (const auto it = j.find("name"); it != j.end() && it->is_string()) g.name = it->get<std::string>();
  g.basis = matrices_from_json(require(j, "basis", "algebra spec"), "basis");
  for (std::size_t k = 0; k < g.basis.size(); ++k)
    if (g.basis[k].rows() != g.n || g.basis[k].cols() != g.n)
      throw SpecError("basis[" + std::to_string(k) + "]: expected a " + std::to_string(g.n) + "x" + std::to_string(g.n) +
                      " matrix");
  g.validate();
  return g;
}

Json algebra_to_json(const LieAlgebraRep& g) {
  Json j;
  j["name"] = g.name;
  j["n"] = g.n;
  Json b = Json::array();
  for (const auto& m : g.basis) b.push_back(matrix_to_json(m));
  j["basis"] = b;
  return j;
}

SymmetricPair pair_from_json(const Json& j) {
  if (const std::string name = builtin_key(j); !name.empty()) {
    try {
      return builtin_pair(name);
    } catch (const std::out_of_range&) {
      throw SpecError("unknown symmetric pair \"" + name + "\" (built-in: " + join(builtin_pair_names()) + ")");
    }
  }
  SymmetricPair p;
  if (const auto it = j.find("name"); it != j.end() && it->is_string()) p.name = it->get<std::string>();
  p.k_basis = matrices_from_json(require(j, "k_basis", "pair spec"), "k_basis");
  p.m_basis = matrices_from_json(require(j, "m_basis", "pair spec"), "m_basis");
  if (p.m_basis.empty()) throw SpecError("m_basis: must not be empty");
  p.validate();
  return p;
}

std::vector<std::vector<Matrix>> galaev_input_from_json(const Json& j, std::size_t& n) {
  if (j.contains("algebra")) {
    const LieAlgebraRep g = algebra_from_json(j["algebra"]);
    n = g.n;
    std::string space = "rspace";
    if (const auto it = j.find("space"); it != j.end()) {
      if (!it->is_string()) throw SpecError("space: expected \"rspace\" or \"bspace\"");
      space = it->get<std::string>();
    }
    std::vector<WeakCurvature> maps;
    if (space == "rspace") maps = rspace(g, kspace(g));
    else if (space == "bspace") maps = bspace(g);
    else throw SpecError("space: expected \"rspace\" or \"bspace\", got \"" + space + "\"");
    std::size_t count = maps.size();
    if (const auto it = j.find("count"); it != j.end()) count = size_from_json(*it, "count");
    if (count > maps.size())
      throw SpecError("count: " + space + " has only " + std::to_string(maps.size()) + " basis maps");
    std::vector<std::vector<Matrix>> Q;
    for (std::size_t a = 0; a < count; ++a) {
      Q.emplace_back();
      for (std::size_t i = 0; i < n; ++i) Q.back().push_back(weak_value(g, maps[a], i));
    }
    return Q;
  }
  n = size_from_json(require(j, "n", "galaev spec"), "n");
  std::vector<std::vector<Matrix>> Q;
  const Json& q = require(j, "Q", "galaev spec");
  if (!q.is_array()) throw SpecError("Q: expected an array of maps");
  for (std::size_t a = 0; a < q.size(); ++a) {
    const std::string field = "Q[" + std::to_string(a) + "]";
    Q.push_back(matrices_from_json(q[a], field));
    if (Q.back().size() != n) throw SpecError(field + ": expected " + std::to_string(n) + " matrices Q(e_1)..Q(e_n)");
    for (std::size_t i = 0; i < n; ++i)
      if (Q.back()[i].rows() != n || Q.back()[i].cols() != n)
        throw SpecError(field + "[" + std::to_string(i) + "]: expected an " + std::to_string(n) + "x" + std::to_string(n) +
                        " matrix");
  }
  return Q;
}

namespace {

constexpr const char* kFlags[] = {"brinkmann", "parallel_in_chart", "pr_wave",      "pp_wave",
                                  "llhc",      "plane_wave",        "cahen_wallach", "ricci_isotropic"};

bool* flag_ptr(ClassificationReport& r, const std::string& name) {
  if (name == "brinkmann") return &r.brinkmann;
  if (name == "parallel_in_chart") return &r.parallel_in_chart;
  if (name == "pr_wave") return &r.pr_wave;
  if (name == "pp_wave") return &r.pp_wave;
  if (name == "llhc") return &r.llhc;
  if (name == "plane_wave") return &r.plane_wave;
  if (name == "cahen_wallach") return &r.cahen_wallach;
  if (name == "ricci_isotropic") return &r.ricci_isotropic;
  return nullptr;
}

}  // namespace

Json classification_to_json(const ClassificationReport& r) {
  Json j;
  ClassificationReport copy = r;
  for (const char* name : kFlags) j[name] = *flag_ptr(copy, name);
  Json theta = Json::array();
  for (const auto& p : r.recurrence_form.theta) theta.push_back(p.to_string());
  j["recurrence_form"] = theta;
  j["witness"] = r.witness;
  return j;
}

ClassificationReport classification_from_json(const Json& j, std::size_t n) {
  ClassificationReport r;
  for (const char* name : kFlags) {
    const Json& v = require(j, name, "classification");
    if (!v.is_boolean()) throw SpecError(std::string("classification.") + name + ": expected a boolean");
    *flag_ptr(r, name) = v.get<bool>();
  }
  const Json& theta = require(j, "recurrence_form", "classification");
  if (!theta.is_array()) throw SpecError("classification.recurrence_form: expected an array");
  for (std::size_t k = 0; k < theta.size(); ++k)
    r.recurrence_form.theta.push_back(poly_from_json(theta[k], n, "recurrence_form[" + std::to_string(k) + "]"));
  if (const auto it = j.find("witness"); it != j.end()) r.witness = it->get<std::map<std::string, std::string>>();
  return r;
}

Json parabolic_to_json(const ParabolicElement& p) {
  Json j;
  j["a"] = scalar_to_json(p.a);
  j["A"] = p.n() ? matrix_to_json(p.A) : Json::array();
  Json v = Json::array();
  for (const auto& x : p.v) v.push_back(scalar_to_json(x));
  j["v"] = v;
  return j;
}

ParabolicElement parabolic_from_json(const Json& j, std::size_t n) {
  ParabolicElement p = ParabolicElement::zero(n);
  p.a = scalar_from_json(require(j, "a", "parabolic element"), "a");
  if (n) p.A = matrix_from_json(require(j, "A", "parabolic element"), "A");
  const Json& v = require(j, "v", "parabolic element");
  if (!v.is_array() || v.size() != n) throw SpecError("v: expected " + std::to_string(n) + " entries");
  for (std::size_t i = 0; i < n; ++i) p.v[i] = scalar_from_json(v[i], "v[" + std::to_string(i) + "]");
  if (p.A.rows() != n || p.A.cols() != n || !p.A.is_antisymmetric())
    throw SpecError("A: expected an antisymmetric " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return p;
}

Json props_to_json(const AlgebraProps& p) {
  Json j;
  j["dim"] = p.dim;
  j["bracket_closed"] = p.bracket_closed;
  j["abelian"] = p.abelian;
  j["solvable"] = p.solvable;
  j["two_step_solvable"] = p.two_step_solvable;
  j["derived_dims"] = p.derived_dims;
  if (p.commutant_dim) j["commutant_dim"] = *p.commutant_dim;
  if (p.irreducible) j["irreducible"] = *p.irreducible;
  j["killing_inertia"] = {{"positive", p.killing_inertia.positive},
                          {"negative", p.killing_inertia.negative},
                          {"zero", p.killing_inertia.zero}};
  j["killing_negative_definite"] = p.dim > 0 && p.killing_inertia.negative == p.dim;
  return j;
}

Json screen_algebra_json(const HolonomyResult& h) {
  Json j = props_to_json(algebra_props(h.screen, h.n));
  Json gens = Json::array();
  for (const auto& m : h.screen) gens.push_back(matrix_to_json(m));
  j["generators"] = gens;
  j["closure_dim"] = h.screen_closure.size();
  j["dims_by_order"] = h.screen_dims;
  return j;
}

Json full_holonomy_json(const HolonomyResult& h) {
  const AlgebraProps p = algebra_props(h.full);
  Json j = props_to_json(p);
  Json elems = Json::array();
  for (const auto& e : h.full) elems.push_back(parabolic_to_json(e));
  j["elements"] = elems;
  j["closure_dim"] = h.full_closure.size();
  j["dims_by_order"] = h.full_dims;
  j["max_order"] = h.max_order;
  j["stabilized"] = h.stabilized;
  // inside R x| R^n: no so(n) part anywhere
  bool translations_only = true;
  for (const auto& e : h.full_closure) translations_only = translations_only && e.A.is_zero();
  j["inside_r_ltimes_rn"] = translations_only;
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  j["version"] = r.version;
  if (r.n) j["n"] = *r.n;
  if (r.classification) j["classification"] = classification_to_json(*r.classification);
  if (!r.screen_algebra.is_null()) j["screen_algebra"] = r.screen_algebra;
  if (!r.full_holonomy.is_null()) j["full_holonomy"] = r.full_holonomy;
  if (!r.checks.empty()) j["checks"] = r.checks;
  if (!r.check_details.empty()) j["check_details"] = r.check_details;
  if (!r.numeric.is_null()) j["numeric"] = r.numeric;
  j["warnings"] = r.warnings;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.version = require(j, "version", "report").get<std::string>();
  if (const auto it = j.find("n"); it != j.end()) r.n = size_from_json(*it, "n");
  if (const auto it = j.find("classification"); it != j.end()) {
    if (!r.n) throw SpecError("report: classification needs \"n\"");
    r.classification = classification_from_json(*it, *r.n);
  }
  if (const auto it = j.find("screen_algebra"); it != j.end()) r.screen_algebra = *it;
  if (const auto it = j.find("full_holonomy"); it != j.end()) r.full_holonomy = *it;
  if (const auto it = j.find("checks"); it != j.end()) r.checks = it->get<std::map<std::string, bool>>();
  if (const auto it = j.find("check_details"); it != j.end())
    r.check_details = it->get<std::map<std::string, std::string>>();
  if (const auto it = j.find("numeric"); it != j.end()) r.numeric = *it;
  if (const auto it = j.find("warnings"); it != j.end()) r.warnings = it->get<std::vector<std::string>>();
  return r;
}

}  // namespace walker
