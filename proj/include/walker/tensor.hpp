#pragma once

#include "walker/polynomial.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace walker {

/// Dense covariant tensor with Polynomial components over an index range
/// 0..dim-1 in every slot. Components are stored in row-major slot order.
class Tensor {
 public:
  Tensor() = default;
  /// Zero tensor; fiber_n fixes the arity of the component polynomials.
  Tensor(std::size_t dim, std::size_t rank, std::size_t fiber_n);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t fiber_dim() const { return fiber_n_; }
  std::size_t size() const { return comps_.size(); }

  Polynomial& at(std::span<const std::size_t> idx) { return comps_[offset(idx)]; }
  const Polynomial& at(std::span<const std::size_t> idx) const { return comps_[offset(idx)]; }
  Polynomial& at(std::initializer_list<std::size_t> idx) {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }
  const Polynomial& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  Polynomial& flat(std::size_t k) { return comps_[k]; }
  const Polynomial& flat(std::size_t k) const { return comps_[k]; }
  /// Decodes a flat offset into slot indices.
  std::vector<std::size_t> unflatten(std::size_t k) const;
  std::size_t offset(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  friend bool operator==(const Tensor& a, const Tensor& b) = default;

  Tensor operator-() const;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);

  /// Applies fn to every component.
  template <class Fn>
  Tensor map(Fn fn) const {
    Tensor t = *this;
    for (auto& c : t.comps_) c = fn(c);
    return t;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::size_t fiber_n_ = 0;
  std::vector<Polynomial> comps_;
};

/// Outer product; slots of a come first.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// One contraction pair, 1-based slots of the (possibly product) tensor.
struct SlotPair {
  std::size_t first;
  std::size_t second;
};

/// Contracts the listed slot pairs of a (or of a (x) b when b is given)
/// with the inverse metric; free slots keep their relative order. Returns a
/// rank-0 tensor when every slot is contracted. Throws std::invalid_argument
/// for out-of-range or repeated slots.
Tensor contract(const Tensor& a, const Tensor* b, const std::vector<SlotPair>& pairs,
                const Tensor& inverse_metric);

/// Unnormalized antisymmetrization over the given 1-based slot groups: for
/// each group, sum over its permutations with sign.
Tensor antisymmetrize(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups);

}  // namespace walker
