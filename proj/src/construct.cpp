#include "walker/construct.hpp"

#include "walker/errors.hpp"

#include <stdexcept>

namespace walker {

WalkerMetric galaev_metric(std::size_t n, const std::vector<std::vector<Matrix>>& Q, const Polynomial& f) {
  if (f.fiber_dim() != n) throw SpecError("f: polynomial arity does not match n = " + std::to_string(n));
  std::vector<Polynomial> u(n, Polynomial(n));
  Rational factorial = 1;
  for (std::size_t A = 1; A <= Q.size(); ++A) {
    if (A > 1) factorial *= static_cast<long>(A - 1);
    const auto& q = Q[A - 1];
    if (q.size() != n) throw SpecError("Q_" + std::to_string(A) + ": expected " + std::to_string(n) + " values");
    for (std::size_t i = 0; i < n; ++i)
      if (q[i].rows() != n || q[i].cols() != n || !q[i].is_antisymmetric())
        throw PreconditionError("Q_" + std::to_string(A) + "(e" + std::to_string(i + 1) +
                                ") is not an antisymmetric " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (const std::string bad = weak_bianchi_violation(q); !bad.empty())
      throw PreconditionError("Q_" + std::to_string(A) + " violates the Bianchi identity on basis triple " + bad);

    const Scalar scale(Rational(1) / (3 * factorial));
    std::vector<std::uint16_t> exp(n + 2, 0);
    exp[z_index(n)] = static_cast<std::uint16_t>(A - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // <Q(e_k) e_l + Q(e_l) e_k, e_i>
          const Scalar c = q[k](i, l) + q[l](i, k);
          if (c.is_zero()) continue;
          ++exp[y_index(k)];
          ++exp[y_index(l)];
          u[i] += Polynomial::monomial(n, scale * c, exp);
          --exp[y_index(k)];
          --exp[y_index(l)];
        }
  }
  return WalkerMetric::with(n, f, std::move(u));
}

namespace {

void check_orthonormal(const SymmetricPair& p) {
  const Matrix B = p.killing();
  const std::size_t dk = p.k_basis.size(), n = p.m_basis.size();
  const Scalar c = B(dk, dk);
  if (c.is_zero()) throw PreconditionError("symmetric pair " + p.name + ": B(X1, X1) = 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar b = B(dk + i, dk + j);
      if (i != j && !b.is_zero())
        throw PreconditionError("m basis not orthogonal w.r.t. the Killing form at pair (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
      if (i == j && b != c)
        throw PreconditionError("m basis norms differ: B(X" + std::to_string(i + 1) + ", X" + std::to_string(i + 1) +
                                ") != B(X1, X1)");
    }
}

}  // namespace

std::vector<std::vector<Matrix>> symmetric_pair_maps(const SymmetricPair& p) {
  p.validate();
  check_orthonormal(p);
  const std::size_t n = p.m_basis.size();
  SpanBasis span(p.m_basis.front().rows() * p.m_basis.front().cols());
  for (const auto& x : p.m_basis) span.add(flatten(x));
  std::vector<std::vector<Matrix>> Q(n, std::vector<Matrix>(n, Matrix(n, n)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Matrix jk = commutator(p.m_basis[j], p.m_basis[k]);
      for (std::size_t l = 0; l < n; ++l) {
        const auto coords = span.coordinates(flatten(commutator(jk, p.m_basis[l])));
        if (!coords) throw PreconditionError("symmetric pair " + p.name + ": [[m,m],m] not in m");
        for (std::size_t m = 0; m < n; ++m) Q[j][k](m, l) = (*coords)[m];
      }
    }
  return Q;
}

WalkerMetric symmetric_metric(const SymmetricPair& p, const Polynomial& f) {
  return galaev_metric(p.m_basis.size(), symmetric_pair_maps(p), f);
}

namespace {

struct Example {
  const char* name;
  std::size_t n;
  const char* f;
  std::vector<const char*> u;
};

const std::vector<Example>& catalog() {
  static const std::vector<Example> examples{
      {"ike96",
       5,
       "0",
       {"-y3^2 - 4*y4^2 - y5^2", "0", "-2*sqrt(3)*y2*y3 - 2*y4*y5", "0", "2*sqrt(3)*y2*y5 + 2*y3*y4"}},
      {"thesis",
       5,
       "0",
       {"-4*y1*y2", "4*y1*y2", "-y1*y4 - y2*y4 + y1*y3 - y2*y3 + sqrt(3)*(y4*y5 - y3*y5)",
        "y1*y4 - y2*y4 + y1*y3 + y2*y3 + sqrt(3)*(y4*y5 + y3*y5)", "0"}},
      {"galaev05",
       5,
       "0",
       {"-2/3*(y3^2 + 4*y4^2 + y5^2)", "2*sqrt(3)/3*(y3^2 - y5^2)", "2/3*(y1*y3 - sqrt(3)*y2*y3 - 3*y4*y5 - y5^2)",
        "8/3*y1*y4", "2/3*(y1*y5 + sqrt(3)*y2*y5 + 3*y3*y4 + y3*y5)"}},
      {"pp_quadratic", 2, "y1^2", {"0", "0"}},
      {"pr_basic", 2, "x*y1^2", {"0", "0"}},
  };
  return examples;
}

}  // namespace

WalkerMetric builtin_example(const std::string& name) {
  for (const auto& e : catalog())
    if (name == e.name) return builtin_example(name, Polynomial::parse(e.f, e.n));
  throw std::out_of_range("unknown example '" + name + "'");
}

WalkerMetric builtin_example(const std::string& name, const Polynomial& f) {
  for (const auto& e : catalog()) {
    if (name != e.name) continue;
    if (f.fiber_dim() != e.n) throw SpecError("f: example " + name + " has n = " + std::to_string(e.n));
    std::vector<Polynomial> u;
    for (const char* t : e.u) u.push_back(Polynomial::parse(t, e.n));
    return WalkerMetric::with(e.n, f, std::move(u));
  }
  throw std::out_of_range("unknown example '" + name + "'");
}

std::vector<std::string> builtin_example_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.emplace_back(e.name);
  return names;
}

}  // namespace walker
