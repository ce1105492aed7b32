#pragma once

#include "walker/liealg.hpp"
#include "walker/matrix.hpp"
#include "walker/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walker {

/// Element (a, A, v) of the parabolic algebra (R + so(n)) x| R^n, i.e. the
/// matrix (a, v^T, 0; 0, A, v; 0, 0, -a) in the basis (X, E_1..E_n, -Z).
struct ParabolicElement {
  Scalar a;
  Matrix A;
  Vector v;

  static ParabolicElement zero(std::size_t n);
  std::size_t n() const { return v.size(); }
  /// (a, upper triangle of A, v) as one coordinate vector.
  Vector coordinates() const;
  static ParabolicElement from_coordinates(std::size_t n, const Vector& c);
  /// The (n+2)x(n+2) block matrix.
  Matrix to_matrix() const;
  bool is_zero() const;
  friend bool operator==(const ParabolicElement&, const ParabolicElement&) = default;
};

/// [(a,A,x), (b,B,y)] = (0, [A,B], (A + a)y - (B + b)x).
ParabolicElement bracket(const ParabolicElement& p, const ParabolicElement& q);

/// The adapted frame evaluated at a point.
struct FrameAt {
  Vector X, Z;
  std::vector<Vector> E;
};
FrameAt evaluate_frame(const AdaptedFrame& frame, std::span<const Scalar> point);

/// so(n) part of a curvature endomorphism given as the matrix
/// M(c, d) = R(U, V, d_c, d_d) at a point: A(j, i) = R(U, V, E_i, E_j).
Matrix screen_projection(const Matrix& M, const FrameAt& frame);
/// Full projection into the parabolic algebra: a = R(U,V,X,Z),
/// A as above, v_i = R(U,V,E_i,Z).
ParabolicElement parabolic_projection(const Matrix& M, const FrameAt& frame);

/// Lie-algebraic data of a matrix algebra given by a spanning set.
struct AlgebraProps {
  std::size_t dim = 0;
  bool bracket_closed = true;
  bool abelian = true;
  bool solvable = true;
  /// g' != 0 and g'' == 0.
  bool two_step_solvable = false;
  std::vector<std::size_t> derived_dims;
  /// Screen algebras only: commutant in gl(n) and irreducibility
  /// (commutant_dim == 1, absolutely irreducible).
  std::optional<std::size_t> commutant_dim;
  std::optional<bool> irreducible;
  /// Killing form of the algebra (of its Lie closure when not closed).
  Matrix killing;
  Inertia killing_inertia;
};

AlgebraProps algebra_props(const std::vector<Matrix>& span, std::optional<std::size_t> screen_n = std::nullopt);
AlgebraProps algebra_props(const std::vector<ParabolicElement>& elems);

struct HolonomyResult {
  std::size_t n = 0;
  /// Basis of the span of all projected curvature derivatives.
  std::vector<ParabolicElement> full;
  /// Basis of the so(n) parts.
  std::vector<Matrix> screen;
  /// Lie closures of the two spans (equal to the spans when closed).
  std::vector<ParabolicElement> full_closure;
  std::vector<Matrix> screen_closure;
  /// Span dimensions after each order m = 0 .. orders_used.
  std::vector<std::size_t> full_dims;
  std::vector<std::size_t> screen_dims;
  std::size_t max_order = 0;
  bool stabilized = false;
  std::vector<std::string> warnings;
};

/// max(total degree of f, total degrees of u_i) + 1.
std::size_t default_max_order(const WalkerMetric& w);

/// Spans of nabla^m R(U, V) at `point` for m <= max_order over coordinate
/// fields and derivative directions, projected through the adapted frame.
/// Stops once the span has not grown for two consecutive orders.
/// Throws PreconditionError unless g is the identity.
HolonomyResult infinitesimal_holonomy(const WalkerMetric& w, std::span<const Scalar> point, std::size_t max_order);
HolonomyResult infinitesimal_holonomy(const WalkerMetric& w, std::size_t max_order);

/// so(n) projections at the origin of (nabla_z)^{A-1} R(d_yi, d_z), for
/// A = 1..orders; result[A-1][i] with the endomorphism convention above.
std::vector<std::vector<Matrix>> z_derivative_projections(const WalkerMetric& w, std::size_t orders);

}  // namespace walker
