#pragma once

#include "walker/polynomial.hpp"
#include "walker/tensor.hpp"

#include <optional>
#include <vector>

namespace walker {

/// Coordinate index helpers for the chart (x, y1..yn, z).
inline constexpr std::size_t kX = 0;
inline std::size_t y_index(std::size_t i) { return i + 1; }  // 0-based fiber index i
inline std::size_t z_index(std::size_t n) { return n + 1; }

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// h = 2 dx dz + f dz^2 + 2 sum u_i dy_i dz + sum g_ij dy_i dy_j.
///
/// u_i is stored as the component h(dy_i, dz). An empty g means the
/// identity; a non-identity g needs g_inverse for any symbolic work.
struct WalkerMetric {
  std::size_t n = 1;
  Polynomial f;
  std::vector<Polynomial> u;
  PolyMatrix g;
  std::optional<PolyMatrix> g_inverse;

  /// Flat metric with f = u = 0 and g = identity.
  static WalkerMetric flat(std::size_t n);
  /// Identity fiber metric with the given f and u.
  static WalkerMetric with(std::size_t n, Polynomial f, std::vector<Polynomial> u);

  std::size_t dim() const { return n + 2; }
  bool identity_fiber() const;
  /// g_ij (identity when g is empty).
  Polynomial g_entry(std::size_t i, std::size_t j) const;

  /// Checks arities, x-independence of u and g, symmetry of g and, when
  /// supplied, g * g_inverse == identity. Throws SpecError / PreconditionError.
  void validate() const;

  /// Same metric re-centered so that `point` becomes the origin.
  WalkerMetric translated(std::span<const Scalar> point) const;

  friend bool operator==(const WalkerMetric&, const WalkerMetric&) = default;
};

/// Rank-2 tensor h_ab.
Tensor metric_matrix(const WalkerMetric& w);

/// Rank-2 tensor h^ab. Throws PreconditionError when g is not the identity
/// and no inverse was supplied.
Tensor inverse_metric(const WalkerMetric& w);

/// Gamma^k_ij stored at index (k, i, j).
Tensor christoffel(const WalkerMetric& w, const Tensor& h, const Tensor& hinv);
Tensor christoffel(const WalkerMetric& w);

/// Metric, inverse and connection computed once and shared by the
/// curvature, classification and holonomy code.
struct Connection {
  WalkerMetric metric;
  Tensor h;
  Tensor hinv;
  Tensor gamma;

  explicit Connection(WalkerMetric w);
  std::size_t dim() const { return metric.dim(); }
  std::size_t n() const { return metric.n; }
};

/// Coordinate vector field with polynomial coefficients.
using VectorField = std::vector<Polynomial>;

/// X = dx, Z = dz - (f/2) dx, E_i = dy_i - u_i dx.
struct AdaptedFrame {
  VectorField X;
  VectorField Z;
  std::vector<VectorField> E;
};

/// Throws PreconditionError unless g is the identity.
AdaptedFrame adapted_frame(const WalkerMetric& w);

/// h(U, V) as a polynomial.
Polynomial inner(const Tensor& h, const VectorField& a, const VectorField& b);

/// Theta with nabla_U dx = Theta(U) dx; only the dz slot can be nonzero.
struct RecurrenceForm {
  std::vector<Polynomial> theta;

  /// Theta == 0: dx itself is parallel.
  bool is_zero() const;
  /// d Theta == 0: dx rescales to a parallel null field.
  bool is_closed() const;
};

RecurrenceForm recurrence_form(const WalkerMetric& w);

}  // namespace walker
