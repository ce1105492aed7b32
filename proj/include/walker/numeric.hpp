#pragma once

#include "walker/matrix.hpp"
#include "walker/metric.hpp"

#include <Eigen/Dense>

#include <array>
#include <span>
#include <vector>

namespace walker {

/// Floating-point snapshot of the metric at one point. The inverse is
/// numeric, so this also works when no symbolic g_inverse is known.
struct EvaluatedMetric {
  std::vector<double> point;
  Eigen::MatrixXd matrix;
  Eigen::MatrixXd inverse;
  /// Gamma^k_ij at (k * d + i) * d + j.
  std::vector<double> christoffel;
};

/// Precomputed h and its exact first derivatives, evaluated on demand.
class MetricEvaluator {
 public:
  explicit MetricEvaluator(const WalkerMetric& w);
  std::size_t dim() const { return d_; }
  Eigen::MatrixXd matrix(std::span<const double> point) const;
  EvaluatedMetric evaluate(std::span<const double> point) const;

 private:
  std::size_t d_;
  Tensor h_;
  std::vector<Tensor> dh_;
};

EvaluatedMetric evaluate_metric(const WalkerMetric& w, std::span<const double> point);

/// Flat rank-4 array indexed like Tensor: ((a * d + b) * d + c) * d + e.
using FloatTensor = std::vector<double>;

/// Central-difference R(a,b,c,d) from second derivatives of h and
/// products of Christoffel symbols. Throws std::invalid_argument if step <= 0.
FloatTensor fd_curvature(const WalkerMetric& w, std::span<const double> point, double step = 1e-4);

/// The exact curvature tensor evaluated in doubles.
FloatTensor evaluate_tensor(const Tensor& t, std::span<const double> point);

/// max |a - b| / max(1, max |b|).
double relative_error(const FloatTensor& a, const FloatTensor& b);

/// Coordinate rectangle [c_a - r, c_a + r] x [c_b - r, c_b + r] traversed
/// counterclockwise in the (a, b) plane, starting at the corner (-r, -r).
struct LoopSpec {
  std::array<std::size_t, 2> plane{};
  std::vector<double> center;
  double radius = 0.1;
  /// RK4 steps over the whole loop.
  std::size_t steps = 256;
  /// Allowed max-entry disagreement between steps and 2 * steps.
  double tolerance = 1e-8;

  /// Throws std::invalid_argument (steps < 16, radius <= 0, bad plane).
  void validate(std::size_t dim) const;
};

struct LoopResult {
  /// Coordinate transport matrix: column j is the transport of d_j.
  Eigen::MatrixXd transport;
  /// Same map in the adapted frame (X, E_1..E_n, Z) at the base corner.
  Eigen::MatrixXd frame_transport;
  /// so(n) part of log(frame_transport) restricted to the screen block.
  Eigen::MatrixXd screen_generator;
  /// Base corner of the loop.
  std::vector<double> base;
  /// max |P^T h P - h| at the base point.
  double isometry_defect = 0;
  /// max entry difference between the step and half-step solutions.
  double halving_defect = 0;
};

/// Parallel transport around the rectangle with classical RK4 on
/// dP/dt = -Gamma(gamma') P. Throws ConvergenceError when step halving
/// disagrees by more than the tolerance; the screen block needs g = identity.
LoopResult loop_transport(const WalkerMetric& w, const LoopSpec& loop);

/// Distance of an antisymmetric matrix from the span of exact so(n)
/// matrices, in the Frobenius norm.
double span_residual(const Eigen::MatrixXd& m, const std::vector<Matrix>& span);

Eigen::MatrixXd to_eigen(const Matrix& m);

/// Screen generators divided by the loop area (4 r^2) at radii r, r/2, r/4
/// and their Richardson limit assuming an even expansion in r.
struct ShrinkingLoops {
  std::array<Eigen::MatrixXd, 3> scaled;
  Eigen::MatrixXd limit;
};
ShrinkingLoops shrinking_loops(const WalkerMetric& w, LoopSpec loop);

}  // namespace walker
