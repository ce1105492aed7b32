#include "walker/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace walker {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t rank, std::size_t fiber_n)
    : dim_(dim), rank_(rank), fiber_n_(fiber_n), comps_(ipow(dim, rank), Polynomial(fiber_n)) {}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
  if (idx.size() != rank_) throw std::invalid_argument("tensor index rank mismatch");
  std::size_t k = 0;
  for (auto i : idx) {
    if (i >= dim_) throw std::out_of_range("tensor index out of range");
    k = k * dim_ + i;
  }
  return k;
}

std::vector<std::size_t> Tensor::unflatten(std::size_t k) const {
  std::vector<std::size_t> idx(rank_);
  for (std::size_t s = rank_; s-- > 0;) {
    idx[s] = k % dim_;
    k /= dim_;
  }
  return idx;
}

bool Tensor::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Tensor Tensor::operator-() const {
  return map([](const Polynomial& p) { return -p; });
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.rank_ != b.rank_) throw std::invalid_argument("tensor shape mismatch");
  Tensor t = a;
  for (std::size_t k = 0; k < t.comps_.size(); ++k) t.comps_[k] += b.comps_[k];
  return t;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor product dimension mismatch");
  Tensor t(a.dim(), a.rank() + b.rank(), a.fiber_dim());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j)
      if (!b.flat(j).is_zero()) t.flat(i * nb + j) = a.flat(i) * b.flat(j);
  }
  return t;
}

Tensor contract(const Tensor& a, const Tensor* b, const std::vector<SlotPair>& pairs,
                const Tensor& inverse_metric) {
  const std::size_t dim = a.dim();
  const std::size_t ra = a.rank();
  const std::size_t total = ra + (b ? b->rank() : 0);
  if (b && b->dim() != dim) throw std::invalid_argument("contract: dimension mismatch");
  if (inverse_metric.dim() != dim || inverse_metric.rank() != 2)
    throw std::invalid_argument("contract: inverse metric shape mismatch");

  std::vector<int> role(total, -1);  // -1 free, otherwise pair number
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t s : {pairs[p].first, pairs[p].second}) {
      if (s < 1 || s > total)
        throw std::invalid_argument("contract: slot " + std::to_string(s) + " out of range 1.." +
                                    std::to_string(total));
      if (role[s - 1] != -1) throw std::invalid_argument("contract: slot " + std::to_string(s) + " repeated");
      role[s - 1] = static_cast<int>(p);
    }
    if (pairs[p].first == pairs[p].second) throw std::invalid_argument("contract: degenerate pair");
  }
  std::vector<std::size_t> free_slots;
  for (std::size_t s = 0; s < total; ++s)
    if (role[s] == -1) free_slots.push_back(s);

  struct Entry {
    std::size_t i, j;
    const Polynomial* value;
  };
  std::vector<Entry> nonzero;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!inverse_metric.at({i, j}).is_zero()) nonzero.push_back({i, j, &inverse_metric.at({i, j})});

  Tensor out(dim, free_slots.size(), a.fiber_dim());
  std::vector<std::size_t> idx(total);
  std::vector<std::size_t> choice(pairs.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto free_idx = out.unflatten(k);
    for (std::size_t f = 0; f < free_slots.size(); ++f) idx[free_slots[f]] = free_idx[f];
    Polynomial sum(a.fiber_dim());
    std::fill(choice.begin(), choice.end(), 0);
    if (pairs.empty() || !nonzero.empty()) {
      while (true) {
        Polynomial weight(a.fiber_dim(), Scalar(1));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          const auto& e = nonzero[choice[p]];
          idx[pairs[p].first - 1] = e.i;
          idx[pairs[p].second - 1] = e.j;
        }
        const Polynomial& ca = a.at(std::span<const std::size_t>(idx.data(), ra));
        if (!ca.is_zero()) {
          const Polynomial* cb = nullptr;
          if (b) cb = &b->at(std::span<const std::size_t>(idx.data() + ra, total - ra));
          if (!cb || !cb->is_zero()) {
            for (std::size_t p = 0; p < pairs.size(); ++p) weight = weight * *nonzero[choice[p]].value;
            Polynomial term = weight * ca;
            if (cb) term = term * *cb;
            sum += term;
          }
        }
        // Advance the odometer over pair choices.
        std::size_t p = 0;
        while (p < pairs.size() && ++choice[p] == nonzero.size()) choice[p++] = 0;
        if (p == pairs.size()) break;
      }
    }
    out.flat(k) = std::move(sum);
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Tensor antisymmetrize(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups) {
  // All (signed) permutations per group.
  struct Perm {
    std::vector<std::size_t> p;
    int sign;
  };
  std::vector<std::vector<Perm>> perms;
  for (const auto& g : groups) {
    for (auto s : g)
      if (s < 1 || s > t.rank()) throw std::invalid_argument("antisymmetrize: slot out of range");
    std::vector<std::size_t> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> list;
    do {
      list.push_back({p, permutation_sign(p)});
    } while (std::next_permutation(p.begin(), p.end()));
    perms.push_back(std::move(list));
  }

  Tensor out(t.dim(), t.rank(), t.fiber_dim());
  std::vector<std::size_t> choice(groups.size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto idx = out.unflatten(k);
    Polynomial sum(t.fiber_dim());
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      auto src = idx;
      int sign = 1;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& perm = perms[g][choice[g]];
        sign *= perm.sign;
        for (std::size_t m = 0; m < groups[g].size(); ++m)
          src[groups[g][m] - 1] = idx[groups[g][perm.p[m]] - 1];
      }
      const Polynomial& c = t.at(src);
      if (!c.is_zero()) sum += sign > 0 ? c : -c;
      std::size_t g = 0;
      while (g < groups.size() && ++choice[g] == perms[g].size()) choice[g++] = 0;
      if (g == groups.size()) break;
    }
    out.flat(k) = std::move(sum);
  }
  return out;
}

}  // namespace walker
