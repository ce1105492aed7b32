// walker: command-line front end.
#include "walker/classify.hpp"
#include "walker/construct.hpp"
#include "walker/curvature.hpp"
#include "walker/errors.hpp"
#include "walker/holonomy.hpp"
#include "walker/io.hpp"
#include "walker/liealg.hpp"
#include "walker/numeric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace walker;

namespace {

enum Exit { kOk = 0, kSpec = 2, kPrecondition = 3, kNumeric = 4 };

struct Output {
  std::string path;
  bool text = false;
};

void emit(const Json& j, const Output& out) {
  const std::string s = j.dump(2) + "\n";
  if (out.path.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw SpecError(out.path + ": cannot write");
  f << s;
}

WalkerMetric load_metric(const std::string& path, std::vector<std::string>& warnings) {
  return metric_from_json(read_json_file(path), &warnings);
}

// A file path, or else a built-in name.
Json spec_or_name(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_json_file(arg);
  return Json(arg);
}

void print_flags(const Report& r) {
  if (r.classification) {
    const Json c = classification_to_json(*r.classification);
    for (const auto& [k, v] : c.items())
      if (v.is_boolean()) std::cout << k << ": " << (v.get<bool>() ? "yes" : "no") << "\n";
  }
  for (const auto& [k, v] : r.checks) {
    std::cout << "check " << k << ": " << (v ? "ok" : "FAILED");
    if (const auto it = r.check_details.find(k); it != r.check_details.end()) std::cout << " (" << it->second << ")";
    std::cout << "\n";
  }
  if (!r.screen_algebra.is_null())
    std::cout << "screen algebra dim " << r.screen_algebra["dim"] << ", closure dim " << r.screen_algebra["closure_dim"]
              << ", irreducible " << (r.screen_algebra.value("irreducible", false) ? "yes" : "no") << "\n";
  if (!r.full_holonomy.is_null())
    std::cout << "full holonomy dim " << r.full_holonomy["dim"] << ", dims by order " << r.full_holonomy["dims_by_order"]
              << "\n";
  if (!r.numeric.is_null()) std::cout << "numeric " << r.numeric.dump() << "\n";
  for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

void finish(const Report& r, const Output& out) {
  if (out.text) {
    print_flags(r);
    return;
  }
  emit(report_to_json(r), out);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_classify(const std::string& path, const Output& out) {
  Report r;
  const WalkerMetric w = load_metric(path, r.warnings);
  r.n = w.n;
  const Connection c(w);
  const Tensor R = riemann(c);
  r.classification = classify(c, R);
  const ClassificationReport& cl = *r.classification;

  auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    r.checks[name] = ok;
    if (!detail.empty()) r.check_details[name] = detail;
  };
  const auto sym = riemann_symmetry_violation(R);
  check("riemann_symmetries", !sym, sym.value_or(""));
  const auto b1 = first_bianchi_violation(R);
  check("first_bianchi", !b1, b1.value_or(""));
  const std::string chain = implication_violation(cl);
  check("implication_chain", chain.empty(), chain);

  const bool flat_screen = restricted_screen_flatness(c, R);
  check("restricted_screen_flatness", flat_screen);
  if (cl.brinkmann) {
    check("norm_squared_zero", norm_squared(R, c.hinv).is_zero());
    const PPEquivalences pp = check_pp_equivalences(c, R);
    // each characterization must agree with the pp flag; the values go in the detail
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string detail = std::string("pp_wave=") + yn(cl.pp_wave) + " antisymmetric=" + yn(pp.antisymmetric) +
                         " reconstructs=" + yn(pp.reconstructs) + " trace_quartic=" + yn(pp.trace_quartic);
    for (const auto& [k, v] : pp.witness) detail += "; " + k + ": " + v;
    check("pp_equivalences_agree",
          pp.antisymmetric == cl.pp_wave && pp.reconstructs == cl.pp_wave && pp.trace_quartic == cl.pp_wave, detail);
    // the trace condition vanishes on pp-waves
    check("pp_trace_condition", !cl.pp_wave || pp_trace(R, c.hinv).is_zero());
    if (w.identity_fiber() && cl.llhc) {
      const auto cod = codifferential_check(w.u);
      const Tensor Ric = ricci(c, R);
      bool same = true;
      for (std::size_t i = 0; i < w.n; ++i) same = same && cod[i] == Ric.at({z_index(w.n), y_index(i)});
      check("codifferential_matches_ricci", same);
    }
  } else {
    r.warnings.push_back("not Brinkmann: pp-wave equivalences and norm test skipped");
  }
  finish(r, out);
  return kOk;
}

std::vector<Scalar> parse_point(const std::vector<std::string>& parts, std::size_t dim) {
  std::vector<std::string> items;
  for (const auto& p : parts) {
    std::size_t start = 0;
    while (start <= p.size()) {
      const std::size_t comma = p.find(',', start);
      const std::string item = p.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!item.empty()) items.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (items.empty()) return std::vector<Scalar>(dim);
  if (items.size() != dim)
    throw SpecError("--point: expected " + std::to_string(dim) + " coordinates (x, y1..yn, z), got " +
                    std::to_string(items.size()));
  std::vector<Scalar> pt;
  for (std::size_t k = 0; k < dim; ++k) pt.push_back(scalar_from_json(Json(items[k]), "--point[" + std::to_string(k) + "]"));
  return pt;
}

std::size_t resolve_max_order(const WalkerMetric& w, int flag) {
  if (flag >= 0) return static_cast<std::size_t>(flag);
  if (const char* env = std::getenv("WALKER_MAX_ORDER"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw SpecError("WALKER_MAX_ORDER: expected a non-negative integer, got \"" + std::string(env) + "\"");
    return static_cast<std::size_t>(v);
  }
  return default_max_order(w);
}

struct NumericOptions {
  bool enabled = false;
  double radius = 0.25;
  std::size_t steps = 512;
  double tolerance = 1e-8;
  double residual_tolerance = 1e-4;
};

Json numeric_check(const WalkerMetric& w, const std::vector<Scalar>& point, const HolonomyResult& h,
                   const NumericOptions& opt, std::vector<std::string>& warnings) {
  std::vector<double> center;
  for (const auto& s : point) center.push_back(s.to_double());
  Json loops = Json::array();
  double worst_residual = 0, worst_isometry = 0;
  for (std::size_t i = 0; i < w.n; ++i) {
    LoopSpec loop;
    loop.plane = {y_index(i), z_index(w.n)};
    loop.center = center;
    loop.radius = opt.radius;
    loop.steps = opt.steps;
    loop.tolerance = opt.tolerance;
    const LoopResult res = loop_transport(w, loop);
    const double residual = span_residual(res.screen_generator, h.screen_closure);
    worst_residual = std::max(worst_residual, residual);
    worst_isometry = std::max(worst_isometry, res.isometry_defect);
    loops.push_back({{"plane", "y" + std::to_string(i + 1) + ",z"},
                     {"screen_generator_norm", res.screen_generator.norm()},
                     {"screen_residual", residual},
                     {"isometry_defect", res.isometry_defect},
                     {"halving_defect", res.halving_defect}});
  }
  if (worst_residual > opt.residual_tolerance)
    warnings.push_back("loop screen holonomy leaves the symbolic screen algebra (residual " +
                       std::to_string(worst_residual) + ")");
  return {{"loops", loops},
          {"max_screen_residual", worst_residual},
          {"max_isometry_defect", worst_isometry},
          {"radius", opt.radius},
          {"steps", opt.steps}};
}

int cmd_holonomy(const std::string& path, const std::vector<std::string>& point_text, int max_order,
                 const NumericOptions& num, const Output& out) {
  Report r;
  const WalkerMetric w = load_metric(path, r.warnings);
  r.n = w.n;
  const std::vector<Scalar> point = parse_point(point_text, w.dim());
  const HolonomyResult h = infinitesimal_holonomy(w, point, resolve_max_order(w, max_order));
  r.screen_algebra = screen_algebra_json(h);
  r.full_holonomy = full_holonomy_json(h);
  r.warnings.insert(r.warnings.end(), h.warnings.begin(), h.warnings.end());
  if (num.enabled) r.numeric = numeric_check(w, point, h, num, r.warnings);
  finish(r, out);
  return kOk;
}

int cmd_construct(const std::string& kind, const std::string& arg, std::size_t n_flag, const std::string& f_text,
                  bool verify, const Output& out) {
  WalkerMetric w;
  if (kind == "example") {
    if (arg.empty()) throw SpecError("construct example: missing NAME");
    const auto names = builtin_example_names();
    if (std::find(names.begin(), names.end(), arg) == names.end())
      throw SpecError("unknown example \"" + arg + "\"");
    w = builtin_example(arg);
    if (!f_text.empty()) w = builtin_example(arg, Polynomial::parse(f_text, w.n));
  } else if (kind == "symmetric") {
    if (arg.empty()) throw SpecError("construct symmetric: missing PAIR (name or JSON file)");
    const SymmetricPair p = pair_from_json(spec_or_name(arg));
    const std::size_t n = p.m_basis.size();
    w = symmetric_metric(p, f_text.empty() ? Polynomial(n) : Polynomial::parse(f_text, n));
  } else if (kind == "galaev") {
    std::size_t n = n_flag;
    std::vector<std::vector<Matrix>> Q;
    if (!arg.empty()) Q = galaev_input_from_json(spec_or_name(arg), n);
    if (n == 0) throw SpecError("construct galaev: give a Q spec or --n");
    w = galaev_metric(n, Q, f_text.empty() ? Polynomial(n) : Polynomial::parse(f_text, n));
  } else {
    throw SpecError("construct: unknown kind \"" + kind + "\" (galaev, symmetric, example)");
  }
  emit(metric_to_json(w), {out.path, false});
  if (verify) {
    const HolonomyResult h = infinitesimal_holonomy(w, default_max_order(w));
    std::cerr << "screen holonomy dim " << h.screen.size() << ", full dim " << h.full.size() << "\n";
    for (const auto& x : h.warnings) std::cerr << "warning: " << x << "\n";
  }
  return kOk;
}

Json weak_json(const LieAlgebraRep& g, const std::vector<WeakCurvature>& maps) {
  Json basis = Json::array();
  for (const auto& q : maps) {
    Json vals = Json::array();
    for (std::size_t i = 0; i < g.n; ++i) vals.push_back(matrix_to_json(weak_value(g, q, i)));
    basis.push_back(vals);
  }
  return basis;
}

int cmd_liealg(const std::string& kind, const std::string& arg, const Output& out) {
  const LieAlgebraRep g = algebra_from_json(spec_or_name(arg));
  Json j;
  j["algebra"] = g.name;
  j["n"] = g.n;
  j["dim"] = g.dim();
  j["kind"] = kind;
  if (kind == "bspace") {
    const auto B = bspace(g);
    j["space_dim"] = B.size();
    j["basis"] = weak_json(g, B);
  } else if (kind == "kspace") {
    const auto K = kspace(g);
    j["space_dim"] = K.size();
    Json basis = Json::array();
    for (const auto& r : K) {
      Json vals = Json::object();
      for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
          vals["e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1)] = matrix_to_json(curvature_value(g, r, a, b));
      basis.push_back(vals);
    }
    j["basis"] = basis;
  } else if (kind == "rspace") {
    const auto R = rspace(g, kspace(g));
    j["space_dim"] = R.size();
    j["contained_in_bspace"] = contained_in(R, bspace(g));
    j["basis"] = weak_json(g, R);
  } else if (kind == "weakberger") {
    j["weak_berger"] = is_weak_berger(g);
    j["berger"] = is_berger(g);
  } else if (kind == "killing") {
    const auto c = structure_constants(g.basis);
    if (!c) throw PreconditionError("basis not bracket-closed");
    const Matrix B = killing_form(*c);
    const Inertia in = inertia(B);
    j["killing"] = matrix_to_json(B);
    j["killing_inertia"] = {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
  } else {
    throw SpecError("liealg: unknown kind \"" + kind + "\"");
  }
  emit(j, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walker metrics: classification, holonomy and constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Output out;

  auto* classify_cmd = app.add_subcommand("classify", "classify a metric spec");
  std::string spec;
  classify_cmd->add_option("SPEC", spec, "metric spec (JSON)")->required();

  auto* hol = app.add_subcommand("holonomy", "infinitesimal holonomy at a point");
  hol->add_option("SPEC", spec, "metric spec (JSON)")->required();
  std::vector<std::string> point;
  int max_order = -1;
  NumericOptions num;
  hol->add_option("--point", point, "x,y1,..,yn,z (exact numbers; default origin)")->expected(1, -1);
  hol->add_option("--max-order", max_order, "derivative order cap (default: WALKER_MAX_ORDER or degree + 1)");
  hol->add_flag("--numeric-check", num.enabled, "cross-check with loop parallel transport");
  hol->add_option("--loop-radius", num.radius, "half side of the coordinate loops")->check(CLI::PositiveNumber);
  hol->add_option("--loop-steps", num.steps, "RK4 steps per loop")->check(CLI::Range(16, 1 << 22));
  hol->add_option("--loop-tolerance", num.tolerance, "step-halving tolerance")->check(CLI::PositiveNumber);
  hol->add_option("--residual-tolerance", num.residual_tolerance, "screen membership tolerance");

  auto* con = app.add_subcommand("construct", "write a metric spec");
  std::string kind, arg, f_text;
  std::size_t n_flag = 0;
  bool verify = false;
  con->add_option("KIND", kind, "galaev | symmetric | example")->required();
  con->add_option("ARG", arg, "example name, pair name or file, or Q spec");
  con->add_option("--f", f_text, "the function f (polynomial)");
  con->add_option("--n", n_flag, "fiber dimension for galaev without a Q spec");
  con->add_flag("--verify", verify, "run holonomy on the result");

  auto* lie = app.add_subcommand("liealg", "curvature spaces of a subalgebra of so(n)");
  std::string lie_kind, alg;
  lie->add_option("KIND", lie_kind, "bspace | kspace | rspace | weakberger | killing")
      ->required()
      ->check(CLI::IsMember({"bspace", "kspace", "rspace", "weakberger", "killing"}));
  lie->add_option("ALGSPEC", alg, "algebra spec (JSON) or built-in name")->required();

  for (auto* sub : {classify_cmd, hol, con, lie}) sub->add_option("-o,--output", out.path, "write JSON here");
  for (auto* sub : {classify_cmd, hol}) sub->add_flag("--text", out.text, "human-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSpec;
  }

  try {
    if (*classify_cmd) return cmd_classify(spec, out);
    if (*hol) return cmd_holonomy(spec, point, max_order, num, out);
    if (*con) return cmd_construct(kind, arg, n_flag, f_text, verify, out);
    if (*lie) return cmd_liealg(lie_kind, alg, out);
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpec;
  } catch (const std::invalid_argument& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpec;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ConvergenceError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
