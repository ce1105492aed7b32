#include "walker/curvature.hpp"

#include <array>

namespace walker {

Tensor riemann(const Connection& c) {
  const std::size_t d = c.dim(), n = c.n();
  const Tensor& G = c.gamma;
  Tensor R(d, 4, n);
  std::vector<Polynomial> up(d, Polynomial(n));  // R^e_{abc} for fixed a<b, c
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t cc = 0; cc < d; ++cc) {
        for (std::size_t e = 0; e < d; ++e) {
          Polynomial p = G.at({e, b, cc}).diff(a) - G.at({e, a, cc}).diff(b);
          for (std::size_t m = 0; m < d; ++m) {
            const Polynomial& g1 = G.at({e, a, m});
            const Polynomial& g2 = G.at({m, b, cc});
            if (!g1.is_zero() && !g2.is_zero()) p += g1 * g2;
            const Polynomial& g3 = G.at({e, b, m});
            const Polynomial& g4 = G.at({m, a, cc});
            if (!g3.is_zero() && !g4.is_zero()) p -= g3 * g4;
          }
          up[e] = std::move(p);
        }
        for (std::size_t dd = 0; dd < d; ++dd) {
          Polynomial s(n);
          for (std::size_t e = 0; e < d; ++e) {
            const Polynomial& h = c.h.at({e, dd});
            if (!h.is_zero() && !up[e].is_zero()) s += h * up[e];
          }
          R.at({b, a, cc, dd}) = -s;
          R.at({a, b, cc, dd}) = std::move(s);
        }
      }
  return R;
}

Tensor riemann(const WalkerMetric& w) { return riemann(Connection(w)); }

Tensor ricci(const Connection& c, const Tensor& R) { return contract(R, nullptr, {{1, 4}}, c.hinv); }

Tensor ricci(const WalkerMetric& w) {
  const Connection c(w);
  return ricci(c, riemann(c));
}

Tensor cov_deriv(const Tensor& t, const Connection& c) {
  const std::size_t d = c.dim(), r = t.rank();
  Tensor out(d, r + 1, c.n());
  std::vector<std::size_t> src(r);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto idx = out.unflatten(k);
    const std::size_t dir = idx[0];
    std::copy(idx.begin() + 1, idx.end(), src.begin());
    Polynomial p = t.at(src).diff(dir);
    for (std::size_t s = 0; s < r; ++s) {
      const std::size_t keep = src[s];
      for (std::size_t l = 0; l < d; ++l) {
        const Polynomial& g = c.gamma.at({l, dir, keep});
        if (g.is_zero()) continue;
        src[s] = l;
        const Polynomial& v = t.at(src);
        if (!v.is_zero()) p -= g * v;
      }
      src[s] = keep;
    }
    out.flat(k) = std::move(p);
  }
  return out;
}

Tensor xi_form(std::size_t n) {
  Tensor xi(n + 2, 1, n);
  xi.at({z_index(n)}) = Polynomial(n, Scalar(1));
  return xi;
}

Tensor pp_trace(const Tensor& R, const Tensor& hinv) { return contract(R, &R, {{3, 5}, {4, 6}}, hinv); }

Polynomial norm_squared(const Tensor& R, const Tensor& hinv) {
  return contract(R, &R, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}, hinv).flat(0);
}

Tensor quartic_trace(const Tensor& R, const Tensor& hinv) { return contract(R, &R, {{1, 5}, {4, 8}}, hinv); }

Tensor lambda_123(const Tensor& xi, const Tensor& R) { return antisymmetrize(tensor_product(xi, R), {{1, 2, 3}}); }

Tensor lambda_12_34(const Tensor& xi, const Tensor& rho) {
  return antisymmetrize(tensor_product(tensor_product(xi, rho), xi), {{1, 2}, {3, 4}});
}

std::vector<Polynomial> codifferential_check(const std::vector<Polynomial>& phi) {
  const std::size_t n = phi.size();
  std::vector<Polynomial> out;
  const Scalar minus_half(make_rational(-1, 2));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial s(phi[i].fiber_dim());
    for (std::size_t k = 0; k < n; ++k)
      s += phi[i].diff(y_index(k)).diff(y_index(k)) - phi[k].diff(y_index(i)).diff(y_index(k));
    out.push_back(minus_half * s);
  }
  return out;
}

std::string component_name(const char* symbol, std::size_t n, std::span<const std::size_t> idx) {
  const Polynomial probe(n);
  std::string s = std::string(symbol) + "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += probe.variable_name(idx[k]);
  }
  return s + ")";
}

std::optional<std::string> riemann_symmetry_violation(const Tensor& R) {
  const std::size_t n = R.fiber_dim();
  for (std::size_t k = 0; k < R.size(); ++k) {
    const auto i = R.unflatten(k);
    const Polynomial& v = R.flat(k);
    if (R.at({i[1], i[0], i[2], i[3]}) != -v) return "antisymmetry in slots 1,2 fails at " + component_name("R", n, i);
    if (R.at({i[0], i[1], i[3], i[2]}) != -v) return "antisymmetry in slots 3,4 fails at " + component_name("R", n, i);
    if (R.at({i[2], i[3], i[0], i[1]}) != v) return "pair symmetry fails at " + component_name("R", n, i);
  }
  return std::nullopt;
}

std::optional<std::string> first_bianchi_violation(const Tensor& R) {
  const std::size_t n = R.fiber_dim();
  for (std::size_t k = 0; k < R.size(); ++k) {
    const auto i = R.unflatten(k);
    const Polynomial s = R.flat(k) + R.at({i[1], i[2], i[0], i[3]}) + R.at({i[2], i[0], i[1], i[3]});
    if (!s.is_zero()) return "first Bianchi fails at " + component_name("R", n, i);
  }
  return std::nullopt;
}

std::optional<std::string> second_bianchi_violation(const Tensor& dR) {
  const std::size_t n = dR.fiber_dim();
  for (std::size_t k = 0; k < dR.size(); ++k) {
    const auto i = dR.unflatten(k);  // (e, a, b, c, d)
    const Polynomial s = dR.flat(k) + dR.at({i[1], i[2], i[0], i[3], i[4]}) + dR.at({i[2], i[0], i[1], i[3], i[4]});
    if (!s.is_zero()) return "second Bianchi fails at " + component_name("nablaR", n, i);
  }
  return std::nullopt;
}

}  // namespace walker
