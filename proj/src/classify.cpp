#include "walker/classify.hpp"

#include "walker/errors.hpp"

#include <array>

namespace walker {

namespace {

std::string nonzero(const char* symbol, std::size_t n, std::span<const std::size_t> idx) {
  return component_name(symbol, n, idx) + " != 0";
}

/// First nonzero R(a,b,c,d) with every index passing the predicate of its slot.
template <class Pred>
std::string first_nonzero(const Tensor& R, Pred pred) {
  for (std::size_t k = 0; k < R.size(); ++k) {
    if (R.flat(k).is_zero()) continue;
    const auto i = R.unflatten(k);
    if (pred(i)) return nonzero("R", R.fiber_dim(), i);
  }
  return {};
}

}  // namespace

ClassificationReport classify(const Connection& c, const Tensor& R) {
  const std::size_t n = c.n(), z = z_index(n);
  ClassificationReport r;
  r.recurrence_form = recurrence_form(c.metric);
  r.parallel_in_chart = r.recurrence_form.is_zero();
  r.brinkmann = r.recurrence_form.is_closed();
  if (!r.parallel_in_chart) r.witness["parallel_in_chart"] = "d_x f != 0";
  if (!r.brinkmann) r.witness["brinkmann"] = "d_x f depends on x or y";

  // Xi-perp is spanned by d_x and the d_yi: every index except z.
  auto perp = [z](std::size_t a) { return a != z; };
  std::string w = first_nonzero(R, [&](const auto& i) { return perp(i[0]) && perp(i[1]) && perp(i[2]) && perp(i[3]); });
  r.llhc = w.empty();
  if (!r.llhc) r.witness["llhc"] = w;

  w = first_nonzero(R, [&](const auto& i) { return perp(i[2]) && perp(i[3]); });
  r.pr_wave = w.empty();
  if (!r.pr_wave) r.witness["pr_wave"] = w;

  r.pp_wave = r.pr_wave && r.brinkmann;
  if (!r.pp_wave) r.witness["pp_wave"] = !r.pr_wave ? "not a pr-wave: " + r.witness["pr_wave"] : "not Brinkmann";

  if (r.pp_wave) {
    const Tensor dR = cov_deriv(R, c);
    std::string plane, cw;
    for (std::size_t k = 0; k < dR.size() && plane.empty(); ++k) {
      if (dR.flat(k).is_zero()) continue;
      const auto i = dR.unflatten(k);
      if (cw.empty()) cw = nonzero("nablaR", n, i);
      if (i[0] != z) plane = nonzero("nablaR", n, i);
    }
    r.plane_wave = plane.empty();
    r.cahen_wallach = cw.empty();
    if (!r.plane_wave) r.witness["plane_wave"] = plane;
    if (!r.cahen_wallach) r.witness["cahen_wallach"] = cw;
  } else {
    r.witness["plane_wave"] = r.witness["cahen_wallach"] = "not a pp-wave";
  }

  const Tensor Ric = ricci(c, R);
  w.clear();
  for (std::size_t a = 0; a < z && w.empty(); ++a)
    for (std::size_t b = 0; b < c.dim() && w.empty(); ++b)
      if (!Ric.at({a, b}).is_zero()) {
        const std::array<std::size_t, 2> idx{a, b};
        w = nonzero("Ric", n, idx);
      }
  r.ricci_isotropic = w.empty();
  if (!r.ricci_isotropic) r.witness["ricci_isotropic"] = w;
  return r;
}

ClassificationReport classify(const WalkerMetric& w) {
  const Connection c(w);
  return classify(c, riemann(c));
}

std::string implication_violation(const ClassificationReport& r) {
  if (r.pp_wave && !r.pr_wave) return "pp_wave => pr_wave";
  if (r.pr_wave && !r.llhc) return "pr_wave => llhc";
  if (r.cahen_wallach && !r.plane_wave) return "cahen_wallach => plane_wave";
  if (r.plane_wave && !r.pp_wave) return "plane_wave => pp_wave";
  if (r.pp_wave && !r.brinkmann) return "pp_wave => brinkmann";
  if (r.parallel_in_chart && !r.brinkmann) return "parallel_in_chart => brinkmann";
  if ((r.pr_wave && r.ricci_isotropic) != (r.pr_wave && r.pp_wave))
    return "pr_wave and ricci_isotropic <=> pr_wave and pp_wave";
  return {};
}

PPEquivalences check_pp_equivalences(const Connection& c, const Tensor& R) {
  if (!recurrence_form(c.metric).is_closed())
    throw PreconditionError("pp-wave equivalences need a Brinkmann wave (d_x f must depend on z only)");
  const std::size_t n = c.n(), d = c.dim(), z = z_index(n);
  PPEquivalences out;
  const Tensor xi = xi_form(n);

  const Tensor L = lambda_123(xi, R);
  out.antisymmetric = true;
  for (std::size_t k = 0; k < L.size(); ++k)
    if (!L.flat(k).is_zero()) {
      out.antisymmetric = false;
      out.witness["antisymmetric"] = nonzero("Lambda(xi R)", n, L.unflatten(k));
      break;
    }

  out.rho = Tensor(d, 2, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out.rho.at({a, b}) = R.at({z, a, b, z});
  std::string why;
  for (std::size_t a = 0; a < d && why.empty(); ++a)
    for (std::size_t b = 0; b < d && why.empty(); ++b) {
      const std::array<std::size_t, 2> idx{a, b};
      if (out.rho.at({a, b}) != out.rho.at({b, a})) why = "rho not symmetric at " + component_name("rho", n, idx);
      else if (a == kX && !out.rho.at({a, b}).is_zero()) why = nonzero("rho", n, idx);
    }
  if (why.empty()) {
    const Tensor rec = lambda_12_34(xi, out.rho);
    for (std::size_t k = 0; k < R.size() && why.empty(); ++k)
      if (rec.flat(k) != R.flat(k)) why = "reconstruction differs at " + component_name("R", n, R.unflatten(k));
  }
  out.reconstructs = why.empty();
  if (!out.reconstructs) out.witness["reconstructs"] = why;

  const Tensor T = quartic_trace(R, c.hinv);
  out.phi = T.at({z, z, z, z});
  why.clear();
  for (std::size_t k = 0; k < T.size() && why.empty(); ++k) {
    const auto i = T.unflatten(k);
    const bool all_z = i[0] == z && i[1] == z && i[2] == z && i[3] == z;
    if (!all_z && !T.flat(k).is_zero()) why = nonzero("tr(R R)", n, i);
  }
  out.trace_quartic = why.empty();
  if (!out.trace_quartic) out.witness["trace_quartic"] = why;
  return out;
}

PPEquivalences check_pp_equivalences(const WalkerMetric& w) {
  const Connection c(w);
  return check_pp_equivalences(c, riemann(c));
}

Polynomial closed_phi_potential(const WalkerMetric& w) {
  const std::size_t n = w.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w.u[j].diff(y_index(i)) != w.u[i].diff(y_index(j)))
        throw PreconditionError("phi is not closed: d_y" + std::to_string(i + 1) + " u" + std::to_string(j + 1) +
                                " != d_y" + std::to_string(j + 1) + " u" + std::to_string(i + 1) + " at pair (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  Polynomial beta(n);
  for (std::size_t k = 0; k < n; ++k) beta += (w.u[k] - beta.diff(y_index(k))).antideriv(y_index(k));
  return beta;
}

WalkerMetric flatten_closed_phi(const WalkerMetric& w) {
  const Polynomial beta = closed_phi_potential(w);
  WalkerMetric out = w;
  const Polynomial shifted_x = Polynomial::variable(w.n, kX) - beta;
  out.f = w.f.substitute(kX, shifted_x) - Scalar(2) * beta.diff(z_index(w.n));
  for (auto& u : out.u) u = Polynomial(w.n);
  return out;
}

bool restricted_screen_flatness(const Connection& c, const Tensor& R) {
  const WalkerMetric& w = c.metric;
  const std::size_t n = w.n, d = w.dim();
  std::vector<VectorField> tangent;
  if (w.identity_fiber()) {
    const AdaptedFrame fr = adapted_frame(w);
    tangent.push_back(fr.X);
    for (const auto& e : fr.E) tangent.push_back(e);
  } else {
    for (std::size_t a = 0; a <= n; ++a) {
      VectorField v(d, Polynomial(n));
      v[a] = Polynomial(n, Scalar(1));
      tangent.push_back(std::move(v));
    }
  }
  // R(U, V, W, S) for frame fields, expanded over coordinate components.
  auto value = [&](const VectorField& U, const VectorField& V, const VectorField& W, const VectorField& S) {
    Polynomial s(n);
    for (std::size_t a = 0; a < d; ++a) {
      if (U[a].is_zero()) continue;
      for (std::size_t b = 0; b < d; ++b) {
        if (V[b].is_zero()) continue;
        for (std::size_t cc = 0; cc < d; ++cc) {
          if (W[cc].is_zero()) continue;
          for (std::size_t e = 0; e < d; ++e) {
            if (S[e].is_zero()) continue;
            const Polynomial& r = R.at({a, b, cc, e});
            if (!r.is_zero()) s += U[a] * V[b] * W[cc] * S[e] * r;
          }
        }
      }
    }
    return s;
  };
  for (std::size_t i = 0; i < tangent.size(); ++i)
    for (std::size_t j = i + 1; j < tangent.size(); ++j)
      for (std::size_t k = 0; k < tangent.size(); ++k)
        for (std::size_t l = 1; l < tangent.size(); ++l)
          if (!value(tangent[i], tangent[j], tangent[k], tangent[l]).is_zero()) return false;
  return true;
}

bool restricted_screen_flatness(const WalkerMetric& w) {
  const Connection c(w);
  return restricted_screen_flatness(c, riemann(c));
}

}  // namespace walker
