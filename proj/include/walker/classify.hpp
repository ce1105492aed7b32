#pragma once

#include "walker/curvature.hpp"
#include "walker/metric.hpp"

#include <map>
#include <string>

namespace walker {

/// Membership in the curvature classes of Walker metrics. Conditions that
/// quantify over all tangent vectors are checked on coordinate pairs, which
/// suffices by tensoriality.
struct ClassificationReport {
  /// d Theta == 0, so d_x rescales to a parallel null field.
  bool brinkmann = false;
  /// Theta == 0 in the given chart (d_x f == 0).
  bool parallel_in_chart = false;
  bool pr_wave = false;
  bool pp_wave = false;
  bool llhc = false;
  bool plane_wave = false;
  bool cahen_wallach = false;
  bool ricci_isotropic = false;
  RecurrenceForm recurrence_form;
  /// Flag name -> first violated condition, for every false flag.
  std::map<std::string, std::string> witness;
};

ClassificationReport classify(const Connection& c, const Tensor& R);
ClassificationReport classify(const WalkerMetric& w);

/// Empty string when the report's implication chain holds, else the first
/// broken implication.
std::string implication_violation(const ClassificationReport& r);

/// The three equivalent pp-wave conditions for a Brinkmann wave.
struct PPEquivalences {
  /// Lambda_{(1,2,3)}(xi (x) R) == 0.
  bool antisymmetric = false;
  /// R == Lambda_{(1,2)(3,4)}(xi (x) rho (x) xi) for the extracted rho.
  bool reconstructs = false;
  /// tr_{(1,5)(4,8)}(R (x) R) == phi xi^4.
  bool trace_quartic = false;
  /// rho(a,b) = R(d_z, d_a, d_b, d_z).
  Tensor rho;
  Polynomial phi;
  std::map<std::string, std::string> witness;

  bool all() const { return antisymmetric && reconstructs && trace_quartic; }
};

/// Throws PreconditionError unless w is a Brinkmann wave.
PPEquivalences check_pp_equivalences(const Connection& c, const Tensor& R);
PPEquivalences check_pp_equivalences(const WalkerMetric& w);

/// beta with d beta / d y_k = u_k. Throws PreconditionError naming the first
/// 1-based pair (i,j) with d_i u_j != d_j u_i.
Polynomial closed_phi_potential(const WalkerMetric& w);

/// Coordinate change x -> x - beta removing a closed u:
/// u~ = 0, f~ = f(x - beta, y, z) - 2 d beta / d z.
WalkerMetric flatten_closed_phi(const WalkerMetric& w);

/// Screen curvature along the hypersurfaces z = const vanishes:
/// R(U, V, W, E_j) == 0 for U, V, W in {X, E_i}. For a non-identity g the
/// screen is spanned by the d_yi instead of the frame.
bool restricted_screen_flatness(const Connection& c, const Tensor& R);
bool restricted_screen_flatness(const WalkerMetric& w);

}  // namespace walker
