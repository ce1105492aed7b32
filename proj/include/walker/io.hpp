#pragma once

#include "walker/classify.hpp"
#include "walker/holonomy.hpp"
#include "walker/liealg.hpp"
#include "walker/metric.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace walker {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "walker 1.0.0";

/// Parses JSON text; syntax errors become SpecError with line and column.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

/// MetricSpec: {"n", "f", "u", "g"?, "g_inverse"?, "convention"?}.
/// "walker-half" halves u on ingest. A missing convention field is read as
/// "component" with a warning appended to `warnings`. Every field error is
/// a SpecError naming the field; the result is validated.
WalkerMetric metric_from_json(const Json& j, std::vector<std::string>* warnings = nullptr);
/// Always written with convention "component".
Json metric_to_json(const WalkerMetric& w);

/// Exact scalar from a JSON number (integers only) or a constant
/// polynomial string such as "-2/3" or "sqrt(3)/2".
Scalar scalar_from_json(const Json& j, const std::string& field);
Json scalar_to_json(const Scalar& s);
Matrix matrix_from_json(const Json& j, const std::string& field);
Json matrix_to_json(const Matrix& m);

/// Algebra spec: a built-in name, {"builtin": NAME}, or
/// {"name"?, "n", "basis": [matrix, ...]}. The result is validated.
LieAlgebraRep algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebraRep& g);

/// Symmetric pair: a built-in name, {"builtin": NAME} or
/// {"name"?, "k_basis": [...], "m_basis": [...]}.
SymmetricPair pair_from_json(const Json& j);

/// Galaev input: {"n", "Q": [[Q_A(e_1) .. Q_A(e_n)], ...]} or
/// {"algebra": ALGSPEC, "space": "rspace" | "bspace", "count": N}, the
/// latter taking the first N basis maps of that space.
std::vector<std::vector<Matrix>> galaev_input_from_json(const Json& j, std::size_t& n);

Json classification_to_json(const ClassificationReport& r);
ClassificationReport classification_from_json(const Json& j, std::size_t n);

Json parabolic_to_json(const ParabolicElement& p);
ParabolicElement parabolic_from_json(const Json& j, std::size_t n);

Json props_to_json(const AlgebraProps& p);

/// Everything a command can report. Sections left empty are omitted.
struct Report {
  std::string version = kVersion;
  std::optional<ClassificationReport> classification;
  std::optional<std::size_t> n;
  /// screen_algebra and full_holonomy blocks, including flags.
  Json screen_algebra;
  Json full_holonomy;
  std::map<std::string, bool> checks;
  std::map<std::string, std::string> check_details;
  Json numeric;
  std::vector<std::string> warnings;
};

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

/// screen_algebra and full_holonomy blocks of a holonomy result.
Json screen_algebra_json(const HolonomyResult& h);
Json full_holonomy_json(const HolonomyResult& h);

}  // namespace walker
