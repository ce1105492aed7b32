#pragma once

#include "walker/liealg.hpp"
#include "walker/metric.hpp"

#include <string>
#include <vector>

namespace walker {

/// Walker metric with prescribed screen holonomy from maps Q_1..Q_N,
/// each given by its values Q_A(e_1)..Q_A(e_n) (antisymmetric n x n):
///   u_i = sum_A sum_{k,l} <Q_A(e_k)e_l + Q_A(e_l)e_k, e_i> y_k y_l z^(A-1) / (3 (A-1)!)
/// so that the so(n) part of (nabla_z)^(A-1) R(d_yi, d_z) at the origin is
/// Q_A(e_i). Throws PreconditionError when some Q_A fails the Bianchi-type
/// identity of B(g).
WalkerMetric galaev_metric(std::size_t n, const std::vector<std::vector<Matrix>>& Q, const Polynomial& f);

/// The maps Q_j = [X_j, .] of a symmetric pair, written as endomorphisms of
/// m in its basis. The inner product is B / B(X_1, X_1).
std::vector<std::vector<Matrix>> symmetric_pair_maps(const SymmetricPair& p);

/// galaev_metric of symmetric_pair_maps, after checking that the m basis is
/// orthogonal with equal norms for the Killing form; throws
/// PreconditionError naming the offending pair.
WalkerMetric symmetric_metric(const SymmetricPair& p, const Polynomial& f);

/// Catalog: "ike96", "thesis", "galaev05" (n = 5), "pp_quadratic",
/// "pr_basic" (n = 2). f overrides the default when given (must have the
/// right arity). Throws std::out_of_range for an unknown name.
WalkerMetric builtin_example(const std::string& name);
WalkerMetric builtin_example(const std::string& name, const Polynomial& f);
std::vector<std::string> builtin_example_names();

}  // namespace walker
