#include "walker/metric.hpp"

#include "walker/errors.hpp"

#include <string>

namespace walker {

WalkerMetric WalkerMetric::flat(std::size_t n) {
  return with(n, Polynomial(n), std::vector<Polynomial>(n, Polynomial(n)));
}

WalkerMetric WalkerMetric::with(std::size_t n, Polynomial f, std::vector<Polynomial> u) {
  WalkerMetric w;
  w.n = n;
  w.f = std::move(f);
  w.u = std::move(u);
  return w;
}

bool WalkerMetric::identity_fiber() const {
  if (g.empty()) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g[i][j] != Polynomial(n, Scalar(i == j ? 1 : 0))) return false;
  return true;
}

Polynomial WalkerMetric::g_entry(std::size_t i, std::size_t j) const {
  if (g.empty()) return Polynomial(n, Scalar(i == j ? 1 : 0));
  return g[i][j];
}

namespace {

void check_arity(const Polynomial& p, std::size_t n, const std::string& field) {
  if (p.fiber_dim() != n) throw SpecError(field + ": polynomial arity does not match n = " + std::to_string(n));
}

void check_square(const PolyMatrix& m, std::size_t n, const std::string& field) {
  if (m.size() != n) throw SpecError(field + ": expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw SpecError(field + ": row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      check_arity(m[i][j], n, field + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
  }
}

}  // namespace

void WalkerMetric::validate() const {
  if (n < 1) throw SpecError("n must be at least 1");
  if (n + 2 > kMaxVars) throw SpecError("n too large (at most " + std::to_string(kMaxVars - 2) + ")");
  check_arity(f, n, "f");
  if (u.size() != n) throw SpecError("u: expected " + std::to_string(n) + " entries, got " + std::to_string(u.size()));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string field = "u[" + std::to_string(i + 1) + "]";
    check_arity(u[i], n, field);
    if (u[i].depends_on(kX)) throw SpecError(field + " depends on x");
  }
  if (g.empty()) {
    if (g_inverse) throw SpecError("g_inverse given without g");
    return;
  }
  check_square(g, n, "g");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g[i][j].depends_on(kX))
        throw SpecError("g[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] depends on x");
      if (g[i][j] != g[j][i])
        throw SpecError("g is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  if (!g_inverse) return;
  check_square(*g_inverse, n, "g_inverse");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial s(n);
      for (std::size_t k = 0; k < n; ++k) s += g[i][k] * (*g_inverse)[k][j];
      if (s != Polynomial(n, Scalar(i == j ? 1 : 0)))
        throw PreconditionError("g_inverse is not the inverse of g at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
    }
}

WalkerMetric WalkerMetric::translated(std::span<const Scalar> point) const {
  WalkerMetric w = *this;
  w.f = f.translated(point);
  for (auto& p : w.u) p = p.translated(point);
  for (auto& row : w.g)
    for (auto& p : row) p = p.translated(point);
  if (w.g_inverse)
    for (auto& row : *w.g_inverse)
      for (auto& p : row) p = p.translated(point);
  return w;
}

Tensor metric_matrix(const WalkerMetric& w) {
  const std::size_t n = w.n, z = z_index(n);
  Tensor h(w.dim(), 2, n);
  h.at({kX, z}) = h.at({z, kX}) = Polynomial(n, Scalar(1));
  h.at({z, z}) = w.f;
  for (std::size_t i = 0; i < n; ++i) {
    h.at({y_index(i), z}) = h.at({z, y_index(i)}) = w.u[i];
    for (std::size_t j = 0; j < n; ++j) h.at({y_index(i), y_index(j)}) = w.g_entry(i, j);
  }
  return h;
}

Tensor inverse_metric(const WalkerMetric& w) {
  const std::size_t n = w.n, z = z_index(n);
  PolyMatrix ginv;
  if (w.identity_fiber()) {
    ginv.assign(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (std::size_t i = 0; i < n; ++i) ginv[i][i] = Polynomial(n, Scalar(1));
  } else if (w.g_inverse) {
    ginv = *w.g_inverse;
  } else {
    throw PreconditionError("symbolic inversion unsupported; use numeric-oracle");
  }
  // ginv_u = g^{-1} u
  std::vector<Polynomial> ginv_u(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ginv_u[i] += ginv[i][j] * w.u[j];

  Tensor hi(w.dim(), 2, n);
  Polynomial xx = -w.f;
  for (std::size_t i = 0; i < n; ++i) xx += w.u[i] * ginv_u[i];
  hi.at({kX, kX}) = xx;
  hi.at({kX, z}) = hi.at({z, kX}) = Polynomial(n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    hi.at({kX, y_index(i)}) = hi.at({y_index(i), kX}) = -ginv_u[i];
    for (std::size_t j = 0; j < n; ++j) hi.at({y_index(i), y_index(j)}) = ginv[i][j];
  }
  return hi;
}

Tensor christoffel(const WalkerMetric& w, const Tensor& h, const Tensor& hinv) {
  const std::size_t d = w.dim(), n = w.n;
  // First kind: G_{l,ij} = 1/2 (d_i h_lj + d_j h_li - d_l h_ij)
  std::vector<Polynomial> dmetric(d * d * d, Polynomial(n));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Polynomial p = h.at({i, j}).diff(k);
        dmetric[(k * d + i) * d + j] = p;
        dmetric[(k * d + j) * d + i] = std::move(p);
      }
  auto dm = [&](std::size_t k, std::size_t i, std::size_t j) -> const Polynomial& {
    return dmetric[(k * d + i) * d + j];
  };
  const Scalar half = Scalar(make_rational(1, 2));
  Tensor first(d, 3, n);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Polynomial p = half * (dm(i, l, j) + dm(j, l, i) - dm(l, i, j));
        first.at({l, j, i}) = p;
        first.at({l, i, j}) = std::move(p);
      }
  Tensor gamma(d, 3, n);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const Polynomial& hk = hinv.at({k, l});
      if (hk.is_zero()) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          const Polynomial& c = first.at({l, i, j});
          if (!c.is_zero()) gamma.at({k, i, j}) += hk * c;
        }
    }
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) gamma.at({k, i, j}) = gamma.at({k, j, i});
  return gamma;
}

Tensor christoffel(const WalkerMetric& w) {
  const Tensor h = metric_matrix(w);
  return christoffel(w, h, inverse_metric(w));
}

Connection::Connection(WalkerMetric w)
    : metric(std::move(w)), h(metric_matrix(metric)), hinv(inverse_metric(metric)),
      gamma(christoffel(metric, h, hinv)) {}

AdaptedFrame adapted_frame(const WalkerMetric& w) {
  if (!w.identity_fiber()) throw PreconditionError("adapted frame requires the identity fiber metric g");
  const std::size_t n = w.n, d = w.dim(), z = z_index(n);
  const Polynomial one(n, Scalar(1));
  AdaptedFrame fr;
  fr.X.assign(d, Polynomial(n));
  fr.X[kX] = one;
  fr.Z.assign(d, Polynomial(n));
  fr.Z[z] = one;
  fr.Z[kX] = Scalar(make_rational(-1, 2)) * w.f;
  for (std::size_t i = 0; i < n; ++i) {
    VectorField e(d, Polynomial(n));
    e[y_index(i)] = one;
    e[kX] = -w.u[i];
    fr.E.push_back(std::move(e));
  }
  return fr;
}

Polynomial inner(const Tensor& h, const VectorField& a, const VectorField& b) {
  Polynomial s(h.fiber_dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (b[j].is_zero() || h.at({i, j}).is_zero()) continue;
      s += a[i] * h.at({i, j}) * b[j];
    }
  }
  return s;
}

bool RecurrenceForm::is_zero() const {
  for (const auto& p : theta)
    if (!p.is_zero()) return false;
  return true;
}

bool RecurrenceForm::is_closed() const {
  // Theta = t dz; d Theta = 0 iff t depends on z alone.
  const std::size_t d = theta.size();
  const Polynomial& t = theta[d - 1];
  for (std::size_t v = 0; v + 1 < d; ++v)
    if (t.depends_on(v)) return false;
  for (std::size_t v = 0; v + 1 < d; ++v)
    if (!theta[v].is_zero()) return false;
  return true;
}

RecurrenceForm recurrence_form(const WalkerMetric& w) {
  RecurrenceForm r;
  r.theta.assign(w.dim(), Polynomial(w.n));
  r.theta[z_index(w.n)] = Scalar(make_rational(1, 2)) * w.f.diff(kX);
  return r;
}

}  // namespace walker
