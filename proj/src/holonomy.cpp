#include "walker/holonomy.hpp"

#include "walker/curvature.hpp"
#include "walker/errors.hpp"

#include <algorithm>
#include <limits>

namespace walker {

ParabolicElement ParabolicElement::zero(std::size_t n) { return {Scalar(0), Matrix(n, n), Vector(n)}; }

Vector ParabolicElement::coordinates() const {
  Vector c{a};
  const Vector so = so_coordinates(A);
  c.insert(c.end(), so.begin(), so.end());
  c.insert(c.end(), v.begin(), v.end());
  return c;
}

ParabolicElement ParabolicElement::from_coordinates(std::size_t n, const Vector& c) {
  const std::size_t so = n * (n - 1) / 2;
  ParabolicElement p;
  p.a = c.at(0);
  p.A = so_from_coordinates(n, std::span<const Scalar>(c.data() + 1, so));
  p.v.assign(c.begin() + 1 + so, c.begin() + 1 + so + n);
  return p;
}

Matrix ParabolicElement::to_matrix() const {
  const std::size_t n = this->n();
  Matrix m(n + 2, n + 2);
  m(0, 0) = a;
  m(n + 1, n + 1) = -a;
  for (std::size_t i = 0; i < n; ++i) {
    m(0, i + 1) = v[i];
    m(i + 1, n + 1) = v[i];
    for (std::size_t j = 0; j < n; ++j) m(i + 1, j + 1) = A(i, j);
  }
  return m;
}

bool ParabolicElement::is_zero() const {
  if (!a.is_zero() || !A.is_zero()) return false;
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

ParabolicElement bracket(const ParabolicElement& p, const ParabolicElement& q) {
  const std::size_t n = p.n();
  ParabolicElement r = ParabolicElement::zero(n);
  r.A = commutator(p.A, q.A);
  const Vector Ay = p.A * q.v, Bx = q.A * p.v;
  for (std::size_t i = 0; i < n; ++i) r.v[i] = Ay[i] + p.a * q.v[i] - Bx[i] - q.a * p.v[i];
  return r;
}

FrameAt evaluate_frame(const AdaptedFrame& frame, std::span<const Scalar> point) {
  auto eval = [&](const VectorField& f) {
    Vector v;
    for (const auto& p : f) v.push_back(p.evaluate(point));
    return v;
  };
  FrameAt out{eval(frame.X), eval(frame.Z), {}};
  for (const auto& e : frame.E) out.E.push_back(eval(e));
  return out;
}

namespace {

Scalar bilinear(const Matrix& M, const Vector& w, const Vector& s) {
  Scalar r;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c].is_zero()) continue;
    for (std::size_t d = 0; d < s.size(); ++d)
      if (!s[d].is_zero() && !M(c, d).is_zero()) r += w[c] * s[d] * M(c, d);
  }
  return r;
}

}  // namespace

Matrix screen_projection(const Matrix& M, const FrameAt& frame) {
  const std::size_t n = frame.E.size();
  Matrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(j, i) = bilinear(M, frame.E[i], frame.E[j]);
  return A;
}

ParabolicElement parabolic_projection(const Matrix& M, const FrameAt& frame) {
  const std::size_t n = frame.E.size();
  ParabolicElement p = ParabolicElement::zero(n);
  p.a = bilinear(M, frame.X, frame.Z);
  p.A = screen_projection(M, frame);
  for (std::size_t i = 0; i < n; ++i) p.v[i] = bilinear(M, frame.E[i], frame.Z);
  return p;
}

AlgebraProps algebra_props(const std::vector<Matrix>& span, std::optional<std::size_t> screen_n) {
  AlgebraProps out;
  const std::vector<Matrix> basis = independent_subset(span);
  out.dim = basis.size();
  out.bracket_closed = is_bracket_closed(basis);
  const std::vector<Matrix> closure = out.bracket_closed ? basis : lie_closure(basis);
  out.derived_dims = derived_series_dims(closure);
  const auto& dd = out.derived_dims;
  out.abelian = closure.empty() || (dd.size() > 1 && dd[1] == 0);
  out.solvable = dd.back() == 0;
  out.two_step_solvable = dd.size() >= 3 && dd[1] > 0 && dd[2] == 0;
  const auto c = structure_constants(closure);
  out.killing = c ? killing_form(*c) : Matrix();
  out.killing_inertia = inertia(out.killing);
  if (screen_n) {
    out.commutant_dim = commutant_dim(closure, *screen_n);
    out.irreducible = *out.commutant_dim == 1;
  }
  return out;
}

AlgebraProps algebra_props(const std::vector<ParabolicElement>& elems) {
  std::vector<Matrix> mats;
  for (const auto& e : elems) mats.push_back(e.to_matrix());
  return algebra_props(mats);
}

std::size_t default_max_order(const WalkerMetric& w) {
  std::size_t deg = w.f.total_degree();
  for (const auto& u : w.u) deg = std::max(deg, u.total_degree());
  return deg + 1;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Jets of nabla^m R at the origin, stored pair-reduced:
/// entry ((dirs * P + p1) * P + p2) with dirs a base-d number, first slot
/// most significant, and p1, p2 indices of pairs a < b. Polynomials at order
/// m are truncated to degree max_order - m, which is all later orders need.
class CurvatureJets {
 public:
  CurvatureJets(const Connection& c, std::size_t max_order) : d_(c.dim()), n_(c.n()), max_order_(max_order) {
    pair_of_.assign(d_ * d_, kNone);
    for (std::size_t a = 0; a < d_; ++a)
      for (std::size_t b = a + 1; b < d_; ++b) {
        pair_of_[a * d_ + b] = pairs_.size();
        pairs_.push_back({a, b});
      }
    gamma_.assign(d_ * d_, {});
    for (std::size_t k = 0; k < d_; ++k)
      for (std::size_t s = 0; s < d_; ++s)
        for (std::size_t l = 0; l < d_; ++l) {
          Polynomial g = c.gamma.at({l, k, s}).truncated(max_order);
          if (!g.is_zero()) gamma_[k * d_ + s].push_back({l, std::move(g)});
        }
    const Tensor R = riemann(c);
    const std::size_t P = pairs_.size();
    data_.assign(P * P, Polynomial(n_));
    for (std::size_t p1 = 0; p1 < P; ++p1)
      for (std::size_t p2 = 0; p2 < P; ++p2)
        data_[p1 * P + p2] =
            R.at({pairs_[p1].first, pairs_[p1].second, pairs_[p2].first, pairs_[p2].second}).truncated(max_order);
  }

  std::size_t order() const { return order_; }
  std::size_t dim() const { return d_; }
  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t dir_count() const { return data_.size() / (pairs_.size() * pairs_.size()); }

  /// Value at the origin of (nabla^m R)(dirs; U, V, ., .) as a d x d matrix
  /// with U, V the pair p1.
  Matrix value(std::size_t dirs, std::size_t p1) const {
    const std::size_t P = pairs_.size();
    Matrix M(d_, d_);
    for (std::size_t p2 = 0; p2 < P; ++p2) {
      const Scalar v = data_[(dirs * P + p1) * P + p2].constant_term();
      if (v.is_zero()) continue;
      M(pairs_[p2].first, pairs_[p2].second) = v;
      M(pairs_[p2].second, pairs_[p2].first) = -v;
    }
    return M;
  }

  /// Digits of a direction index, first slot first.
  std::vector<std::size_t> digits(std::size_t dirs) const {
    std::vector<std::size_t> out(order_);
    for (std::size_t s = order_; s-- > 0;) {
      out[s] = dirs % d_;
      dirs /= d_;
    }
    return out;
  }

  void advance() {
    const std::size_t P = pairs_.size(), D = dir_count();
    const std::size_t deg = max_order_ > order_ ? max_order_ - order_ - 1 : 0;
    std::vector<Polynomial> next(d_ * D * P * P, Polynomial(n_));
    std::vector<std::size_t> place(order_);  // d^(order-1-s)
    for (std::size_t s = 0, w = 1; s < order_; ++s) {
      place[order_ - 1 - s] = w;
      w *= d_;
    }
    for (std::size_t k = 0; k < d_; ++k)
      for (std::size_t dirs = 0; dirs < D; ++dirs) {
        const auto dig = digits(dirs);
        for (std::size_t p1 = 0; p1 < P; ++p1)
          for (std::size_t p2 = 0; p2 < P; ++p2) {
            Polynomial val = at(dirs, p1, p2).diff(k).truncated(deg);
            // Direction slots.
            for (std::size_t s = 0; s < order_; ++s)
              for (const auto& [l, g] : gamma_[k * d_ + dig[s]]) {
                const std::size_t moved = dirs + (l - dig[s]) * place[s];
                const Polynomial& t = at(moved, p1, p2);
                if (!t.is_zero()) val -= Polynomial::mul_truncated(g, t, deg);
              }
            // Pair slots.
            subtract_pair(val, k, dirs, p1, p2, true, deg);
            subtract_pair(val, k, dirs, p1, p2, false, deg);
            next[((k * D + dirs) * P + p1) * P + p2] = std::move(val);
          }
      }
    data_ = std::move(next);
    ++order_;
  }

 private:
  const Polynomial& at(std::size_t dirs, std::size_t p1, std::size_t p2) const {
    const std::size_t P = pairs_.size();
    return data_[(dirs * P + p1) * P + p2];
  }

  /// Looks up the pair (a, b) in either order; sign -1 when swapped, 0 when a == b.
  std::pair<std::size_t, int> pair_lookup(std::size_t a, std::size_t b) const {
    if (a == b) return {kNone, 0};
    if (a < b) return {pair_of_[a * d_ + b], 1};
    return {pair_of_[b * d_ + a], -1};
  }

  void subtract_pair(Polynomial& val, std::size_t k, std::size_t dirs, std::size_t p1, std::size_t p2, bool first,
                     std::size_t deg) const {
    const auto [a, b] = pairs_[first ? p1 : p2];
    for (int slot = 0; slot < 2; ++slot) {
      const std::size_t moving = slot == 0 ? a : b;
      for (const auto& [l, g] : gamma_[k * d_ + moving]) {
        const auto [p, sign] = slot == 0 ? pair_lookup(l, b) : pair_lookup(a, l);
        if (sign == 0) continue;
        const Polynomial& t = first ? at(dirs, p, p2) : at(dirs, p1, p);
        if (t.is_zero()) continue;
        const Polynomial prod = Polynomial::mul_truncated(g, t, deg);
        if (sign > 0) val -= prod;
        else val += prod;
      }
    }
  }

  std::size_t d_, n_, max_order_;
  std::size_t order_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> pair_of_;
  std::vector<std::vector<std::pair<std::size_t, Polynomial>>> gamma_;
  std::vector<Polynomial> data_;
};

std::vector<ParabolicElement> parabolic_closure(const std::vector<ParabolicElement>& gens, std::size_t n) {
  std::vector<ParabolicElement> basis;
  const std::size_t dim = 1 + n * (n - 1) / 2 + n;
  SpanBasis span(dim);
  for (const auto& g : gens)
    if (span.add(g.coordinates())) basis.push_back(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ParabolicElement c = bracket(basis[i], basis[j]);
      if (span.add(c.coordinates())) basis.push_back(std::move(c));
    }
  return basis;
}

}  // namespace

HolonomyResult infinitesimal_holonomy(const WalkerMetric& w, std::span<const Scalar> point, std::size_t max_order) {
  if (!w.identity_fiber()) throw PreconditionError("holonomy needs the identity fiber metric g");
  if (point.size() != w.dim())
    throw SpecError("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(w.dim()));
  const std::size_t n = w.n;
  const WalkerMetric local = w.translated(point);
  const Connection c(local);
  const std::vector<Scalar> origin(local.dim());
  const FrameAt frame = evaluate_frame(adapted_frame(local), origin);

  HolonomyResult out;
  out.n = n;
  out.max_order = max_order;
  const std::size_t full_dim = 1 + n * (n - 1) / 2 + n;
  SpanBasis full(full_dim), screen(n * n);
  CurvatureJets jets(c, max_order);
  for (std::size_t m = 0;; ++m) {
    for (std::size_t dirs = 0; dirs < jets.dir_count(); ++dirs)
      for (std::size_t p = 0; p < jets.pair_count(); ++p) {
        const ParabolicElement e = parabolic_projection(jets.value(dirs, p), frame);
        if (e.is_zero()) continue;
        if (full.add(e.coordinates())) out.full.push_back(e);
        if (screen.add(flatten(e.A))) out.screen.push_back(e.A);
      }
    out.full_dims.push_back(full.dim());
    out.screen_dims.push_back(screen.dim());
    const auto& fd = out.full_dims;
    if (full.dim() == full_dim) {
      out.stabilized = true;
      break;
    }
    if (m >= 2 && fd[m] > 0 && fd[m] == fd[m - 1] && fd[m] == fd[m - 2]) {
      out.stabilized = true;
      break;
    }
    if (m == max_order) {
      out.stabilized = m > 0 && fd[m] == fd[m - 1];
      break;
    }
    jets.advance();
  }
  if (!out.stabilized)
    out.warnings.push_back("span still growing at max order " + std::to_string(max_order) +
                           "; raise --max-order or WALKER_MAX_ORDER");
  out.full_closure = parabolic_closure(out.full, n);
  out.screen_closure = lie_closure(out.screen);
  if (out.full_closure.size() != out.full.size())
    out.warnings.push_back("full span not bracket-closed at this order; closure has dim " +
                           std::to_string(out.full_closure.size()));
  if (out.screen_closure.size() != out.screen.size())
    out.warnings.push_back("screen span not bracket-closed at this order; closure has dim " +
                           std::to_string(out.screen_closure.size()));
  return out;
}

HolonomyResult infinitesimal_holonomy(const WalkerMetric& w, std::size_t max_order) {
  const std::vector<Scalar> origin(w.dim());
  return infinitesimal_holonomy(w, origin, max_order);
}

std::vector<std::vector<Matrix>> z_derivative_projections(const WalkerMetric& w, std::size_t orders) {
  if (orders == 0) return {};
  const Connection c(w);
  const std::vector<Scalar> origin(w.dim());
  const FrameAt frame = evaluate_frame(adapted_frame(w), origin);
  const std::size_t n = w.n, z = z_index(n), d = w.dim();
  CurvatureJets jets(c, orders - 1);
  std::vector<std::vector<Matrix>> out;
  for (std::size_t A = 1; A <= orders; ++A) {
    if (A > 1) jets.advance();
    std::size_t dirs = 0;
    for (std::size_t s = 0; s + 1 < A; ++s) dirs = dirs * d + z;
    std::vector<Matrix> row;
    for (std::size_t i = 0; i < n; ++i) {
      // pair (y_i, z) has y_i < z
      std::size_t p = 0;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b, ++p)
          if (a == y_index(i) && b == z) row.push_back(screen_projection(jets.value(dirs, p), frame));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace walker
