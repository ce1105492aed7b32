#pragma once

#include "walker/metric.hpp"
#include "walker/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walker {

/// R(a,b,c,d) = h(R(d_a, d_b) d_c, d_d) with
/// R(U,V)W = nabla_U nabla_V W - nabla_V nabla_U W - nabla_[U,V] W.
Tensor riemann(const Connection& c);
Tensor riemann(const WalkerMetric& w);

/// Ric(b,c) = h^{ad} R(a,b,c,d), i.e. the trace over slots (1,4).
Tensor ricci(const Connection& c, const Tensor& R);
Tensor ricci(const WalkerMetric& w);

/// Covariant derivative of a covariant tensor; the new slot comes first:
/// (nabla T)(k, i1..ir) = (nabla_k T)(i1..ir).
Tensor cov_deriv(const Tensor& t, const Connection& c);

/// The 1-form xi = dz (metric dual of the null field d_x).
Tensor xi_form(std::size_t n);

/// tr_{(3,5)(4,6)}(R (x) R), rank 4.
Tensor pp_trace(const Tensor& R, const Tensor& hinv);
/// ||R||^2 = tr_{(1,5)(2,6)(3,7)(4,8)}(R (x) R).
Polynomial norm_squared(const Tensor& R, const Tensor& hinv);
/// tr_{(1,5)(4,8)}(R (x) R), rank 4; the scalar-multiple-of-xi^4 test reads
/// this. The slot reading is convention sensitive.
Tensor quartic_trace(const Tensor& R, const Tensor& hinv);

/// Lambda_{(1,2,3)}(xi (x) R), unnormalized.
Tensor lambda_123(const Tensor& xi, const Tensor& R);
/// Lambda_{(1,2)(3,4)}(xi (x) rho (x) xi), unnormalized.
Tensor lambda_12_34(const Tensor& xi, const Tensor& rho);

/// d*d phi on flat R^n for phi = sum u_k dy_k:
/// component i = -1/2 sum_k (d_k d_k u_i - d_k d_i u_k). The normalization
/// matches Ric(d_z, d_yi) of the Walker metric with those u.
std::vector<Polynomial> codifferential_check(const std::vector<Polynomial>& phi);

/// Name of the first violated pair/block symmetry, or nullopt.
std::optional<std::string> riemann_symmetry_violation(const Tensor& R);
/// R_abcd + R_bcad + R_cabd == 0.
std::optional<std::string> first_bianchi_violation(const Tensor& R);
/// (nabla_e R)_abcd + (nabla_a R)_becd + (nabla_b R)_eacd == 0 for dR = cov_deriv(R).
std::optional<std::string> second_bianchi_violation(const Tensor& dR);

/// Human-readable component name such as "R(y1,z,y1,z)".
std::string component_name(const char* symbol, std::size_t n, std::span<const std::size_t> idx);

}  // namespace walker
