#include "walker/numeric.hpp"

#include "walker/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace walker {

MetricEvaluator::MetricEvaluator(const WalkerMetric& w) : d_(w.dim()), h_(metric_matrix(w)) {
  for (std::size_t v = 0; v < d_; ++v) dh_.push_back(h_.map([v](const Polynomial& p) { return p.diff(v); }));
}

Eigen::MatrixXd MetricEvaluator::matrix(std::span<const double> point) const {
  Eigen::MatrixXd m(d_, d_);
  for (std::size_t a = 0; a < d_; ++a)
    for (std::size_t b = a; b < d_; ++b) m(a, b) = m(b, a) = h_.at({a, b}).evaluate(point);
  return m;
}

EvaluatedMetric MetricEvaluator::evaluate(std::span<const double> point) const {
  EvaluatedMetric e;
  e.point.assign(point.begin(), point.end());
  e.matrix = matrix(point);
  e.inverse = e.matrix.inverse();
  const std::size_t d = d_;
  // first-kind symbols [ij, l] = (d_i h_lj + d_j h_li - d_l h_ij) / 2
  std::vector<double> dh(d * d * d);
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) dh[(v * d + a) * d + b] = dh[(v * d + b) * d + a] = dh_[v].at({a, b}).evaluate(point);
  e.christoffel.assign(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        const double first = 0.5 * (dh[(i * d + l) * d + j] + dh[(j * d + l) * d + i] - dh[(l * d + i) * d + j]);
        if (first == 0.0) continue;
        for (std::size_t k = 0; k < d; ++k) e.christoffel[(k * d + i) * d + j] += e.inverse(k, l) * first;
      }
  return e;
}

EvaluatedMetric evaluate_metric(const WalkerMetric& w, std::span<const double> point) {
  return MetricEvaluator(w).evaluate(point);
}

FloatTensor fd_curvature(const WalkerMetric& w, std::span<const double> point, double step) {
  if (!(step > 0)) throw std::invalid_argument("fd_curvature: step must be positive");
  const MetricEvaluator ev(w);
  const std::size_t d = ev.dim();
  if (point.size() != d) throw std::invalid_argument("fd_curvature: point has wrong dimension");
  std::vector<double> p(point.begin(), point.end());

  auto h_at = [&](std::size_t a, double sa, std::size_t b, double sb) {
    std::vector<double> q = p;
    q[a] += sa;
    q[b] += sb;
    return ev.matrix(q);
  };
  const Eigen::MatrixXd h0 = ev.matrix(p);
  const Eigen::MatrixXd hinv = h0.inverse();

  // dh[v] and ddh[v][w] by central differences
  std::vector<Eigen::MatrixXd> dh(d);
  std::vector<Eigen::MatrixXd> ddh(d * d);
  for (std::size_t v = 0; v < d; ++v) {
    const Eigen::MatrixXd plus = h_at(v, step, v, 0), minus = h_at(v, -step, v, 0);
    dh[v] = (plus - minus) / (2 * step);
    ddh[v * d + v] = (plus - 2 * h0 + minus) / (step * step);
    for (std::size_t u = 0; u < v; ++u) {
      ddh[v * d + u] = (h_at(u, step, v, step) - h_at(u, step, v, -step) - h_at(u, -step, v, step) +
                        h_at(u, -step, v, -step)) / (4 * step * step);
      ddh[u * d + v] = ddh[v * d + u];
    }
  }
  std::vector<double> gamma(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        const double first = 0.5 * (dh[i](l, j) + dh[j](l, i) - dh[l](i, j));
        for (std::size_t k = 0; k < d; ++k) gamma[(k * d + i) * d + j] += hinv(k, l) * first;
      }
  auto G = [&](std::size_t k, std::size_t i, std::size_t j) { return gamma[(k * d + i) * d + j]; };

  // R(a,b,c,e) = 1/2 (h_eb,ac + h_ca,be - h_cb,ae - h_ea,bc)
  //            + h_st (G^s_ac G^t_be - G^s_bc G^t_ae)
  FloatTensor R(d * d * d * d, 0.0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          double v = 0.5 * (ddh[a * d + c](e, b) + ddh[b * d + e](c, a) - ddh[a * d + e](c, b) - ddh[b * d + c](e, a));
          for (std::size_t s = 0; s < d; ++s)
            for (std::size_t t = 0; t < d; ++t)
              v -= h0(s, t) * (G(s, b, c) * G(t, a, e) - G(s, a, c) * G(t, b, e));
          R[((a * d + b) * d + c) * d + e] = v;
        }
  return R;
}

FloatTensor evaluate_tensor(const Tensor& t, std::span<const double> point) {
  FloatTensor out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = t.flat(k).evaluate(point);
  return out;
}

double relative_error(const FloatTensor& a, const FloatTensor& b) {
  if (a.size() != b.size()) throw std::invalid_argument("relative_error: size mismatch");
  double diff = 0, scale = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, std::abs(a[k] - b[k]));
    scale = std::max(scale, std::abs(b[k]));
  }
  return diff / scale;
}

void LoopSpec::validate(std::size_t dim) const {
  if (steps < 16) throw std::invalid_argument("loop: steps must be >= 16");
  if (!(radius > 0)) throw std::invalid_argument("loop: radius must be positive");
  if (plane[0] == plane[1] || plane[0] >= dim || plane[1] >= dim)
    throw std::invalid_argument("loop: plane needs two distinct coordinate indices below " + std::to_string(dim));
  if (center.size() != dim) throw std::invalid_argument("loop: center has wrong dimension");
}

namespace {

// Transport matrix around the rectangle with `steps` RK4 steps.
Eigen::MatrixXd transport(const MetricEvaluator& ev, const LoopSpec& loop, const std::vector<double>& base,
                          std::size_t steps) {
  const std::size_t d = ev.dim();
  const std::size_t per_edge = std::max<std::size_t>(1, steps / 4);
  const double len = 2 * loop.radius, h = len / static_cast<double>(per_edge);
  static constexpr double dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(d, d);
  std::vector<double> start = base;
  for (const auto& dir : dirs) {
    // dP/ds = -A(s) P with A^k_j = Gamma^k_{ij} gamma'^i
    auto A = [&](double s) {
      std::vector<double> q = start;
      q[loop.plane[0]] += dir[0] * s;
      q[loop.plane[1]] += dir[1] * s;
      const EvaluatedMetric e = ev.evaluate(q);
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j)
          m(k, j) = dir[0] * e.christoffel[(k * d + loop.plane[0]) * d + j] +
                    dir[1] * e.christoffel[(k * d + loop.plane[1]) * d + j];
      return m;
    };
    Eigen::MatrixXd a0 = A(0);
    for (std::size_t s = 0; s < per_edge; ++s) {
      const double t = static_cast<double>(s) * h;
      const Eigen::MatrixXd am = A(t + h / 2), a1 = A(t + h);
      const Eigen::MatrixXd k1 = -a0 * P;
      const Eigen::MatrixXd k2 = -am * (P + h / 2 * k1);
      const Eigen::MatrixXd k3 = -am * (P + h / 2 * k2);
      const Eigen::MatrixXd k4 = -a1 * (P + h * k3);
      P += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      a0 = a1;
    }
    start[loop.plane[0]] += dir[0] * len;
    start[loop.plane[1]] += dir[1] * len;
  }
  return P;
}

}  // namespace

LoopResult loop_transport(const WalkerMetric& w, const LoopSpec& loop) {
  loop.validate(w.dim());
  const MetricEvaluator ev(w);
  const std::size_t d = w.dim(), n = w.n;
  LoopResult r;
  r.base = loop.center;
  r.base[loop.plane[0]] -= loop.radius;
  r.base[loop.plane[1]] -= loop.radius;

  // the two resolutions are independent
  auto coarse = std::async(std::launch::async, [&] { return transport(ev, loop, r.base, loop.steps); });
  const Eigen::MatrixXd fine = transport(ev, loop, r.base, 2 * loop.steps);
  const Eigen::MatrixXd rough = coarse.get();
  r.halving_defect = (fine - rough).cwiseAbs().maxCoeff();
  if (!(r.halving_defect <= loop.tolerance)) {
    std::ostringstream os;
    os << "loop transport did not converge: step halving changes the result by " << r.halving_defect
       << " > " << loop.tolerance << " at " << loop.steps << " steps";
    throw ConvergenceError(os.str());
  }
  r.transport = fine;
  const Eigen::MatrixXd h = ev.matrix(r.base);
  r.isometry_defect = (fine.transpose() * h * fine - h).cwiseAbs().maxCoeff();

  if (w.identity_fiber()) {
    // columns X, E_1..E_n, Z of the adapted frame
    Eigen::MatrixXd F = Eigen::MatrixXd::Identity(d, d);
    F(kX, z_index(n)) = -0.5 * w.f.evaluate(std::span<const double>(r.base));
    for (std::size_t i = 0; i < n; ++i) F(kX, y_index(i)) = -w.u[i].evaluate(std::span<const double>(r.base));
    r.frame_transport = F.inverse() * fine * F;
    const Eigen::MatrixXd S = r.frame_transport.block(1, 1, n, n);
    const Eigen::MatrixXd L = S.log();
    r.screen_generator = 0.5 * (L - L.transpose());
  }
  return r;
}

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_double();
  return e;
}

double span_residual(const Eigen::MatrixXd& m, const std::vector<Matrix>& span) {
  const Eigen::Index len = m.size();
  const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(m.data(), len);
  if (span.empty()) return target.norm();
  Eigen::MatrixXd B(len, static_cast<Eigen::Index>(span.size()));
  for (std::size_t k = 0; k < span.size(); ++k) {
    const Eigen::MatrixXd e = to_eigen(span[k]);
    if (e.size() != len) throw std::invalid_argument("span_residual: shape mismatch");
    B.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXd>(e.data(), len);
  }
  const Eigen::VectorXd coeff = B.colPivHouseholderQr().solve(target);
  return (target - B * coeff).norm();
}

ShrinkingLoops shrinking_loops(const WalkerMetric& w, LoopSpec loop) {
  if (!w.identity_fiber()) throw PreconditionError("shrinking loops need g = identity");
  ShrinkingLoops out;
  std::array<std::future<Eigen::MatrixXd>, 3> jobs;
  for (std::size_t k = 0; k < 3; ++k) {
    LoopSpec l = loop;
    l.radius = loop.radius / static_cast<double>(1u << k);
    jobs[k] = std::async(std::launch::async, [&w, l] {
      return Eigen::MatrixXd(loop_transport(w, l).screen_generator / (4 * l.radius * l.radius));
    });
  }
  for (std::size_t k = 0; k < 3; ++k) out.scaled[k] = jobs[k].get();
  // G(r) = L + a r + b r^2 + ...
  const Eigen::MatrixXd r1 = 2 * out.scaled[1] - out.scaled[0];
  const Eigen::MatrixXd r2 = 2 * out.scaled[2] - out.scaled[1];
  out.limit = (4 * r2 - r1) / 3;
  return out;
}

}  // namespace walker
