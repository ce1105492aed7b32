#include "doctest.h"
#include "test_util.hpp"

#include "walker/construct.hpp"
#include "walker/errors.hpp"
#include "walker/holonomy.hpp"
#include "walker/liealg.hpp"

using namespace walker;
using walker::test::P;

TEST_CASE("killing forms") {
  // abelian
  const auto c0 = structure_constants({Matrix::elementary_so(4, 0, 1), Matrix::elementary_so(4, 2, 3)});
  REQUIRE(c0);
  CHECK(killing_form(*c0).is_zero());

  const LieAlgebraRep so3 = builtin_algebra("so3");
  const Matrix B = killing_form(*structure_constants(so3.basis));
  // so(3): B(X, Y) = (n - 2) tr(XY) = tr(XY)
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(B(i, j) == (so3.basis[i] * so3.basis[j]).trace());
  CHECK(inertia(B).negative == 3);

  // sl(3): B(X, Y) = 6 tr(XY)
  const SymmetricPair sl3 = builtin_pair("sl3-so3");
  const std::vector<Matrix> basis = sl3.basis();
  const Matrix K = sl3.killing();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) CHECK(K(i, j) == Scalar(6) * (basis[i] * basis[j]).trace());
}

TEST_CASE("curvature spaces of small algebras") {
  const LieAlgebraRep trivial = builtin_algebra("trivial2");
  CHECK(bspace(trivial).empty());
  CHECK(kspace(trivial).empty());
  CHECK(is_weak_berger(trivial));
  CHECK(is_berger(trivial));

  const LieAlgebraRep so2 = builtin_algebra("so2");
  const auto B = bspace(so2);
  const auto K = kspace(so2);
  CHECK(B.size() == 2);
  CHECK(K.size() == 1);
  const auto R = rspace(so2, K);
  CHECK(R.size() <= 2);
  CHECK(contained_in(R, B));

  const LieAlgebraRep e = builtin_algebra("e12+e34");
  CHECK_FALSE(is_weak_berger(e));
  CHECK_FALSE(is_berger(e));
}

TEST_CASE("so(3) on R^5") {
  const LieAlgebraRep g = builtin_algebra("so3-5dim");
  CHECK(g.n == 5);
  CHECK(g.dim() == 3);
  const auto K = kspace(g);
  CHECK(K.size() == 1);
  const auto R = rspace(g, K);
  CHECK(R.size() == 5);
  CHECK(contained_in(R, bspace(g)));
  CHECK(is_weak_berger(g));
  CHECK(is_berger(g));

  // K is spanned by the bracket of sl(3): R(X_a, X_b) = ad([X_a, X_b]) on m
  const SymmetricPair p = builtin_pair("sl3-so3");
  const auto Q = symmetric_pair_maps(p);
  bool proportional = true;
  Scalar ratio;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      const Matrix want = Q[a][b];  // [[X_a, X_b], .]
      const Matrix got = curvature_value(g, K[0], a, b);
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) {
          if (want(r, c).is_zero()) {
            proportional = proportional && got(r, c).is_zero();
          } else if (ratio.is_zero()) {
            ratio = got(r, c) / want(r, c);
          } else {
            proportional = proportional && got(r, c) == ratio * want(r, c);
          }
        }
    }
  CHECK(proportional);
  CHECK_FALSE(ratio.is_zero());
}

TEST_CASE("Berger implies weak Berger on the built-in algebras") {
  for (const auto& name : builtin_algebra_names()) {
    if (name == "g2") continue;  // covered by the acceptance run
    const LieAlgebraRep g = builtin_algebra(name);
    CAPTURE(name);
    if (is_berger(g)) CHECK(is_weak_berger(g));
    CHECK(contained_in(rspace(g, kspace(g)), bspace(g)));
  }
}

TEST_CASE("representation validation") {
  LieAlgebraRep g{"bad", 3, {Matrix::elementary_so(3, 0, 1), Matrix::elementary_so(3, 1, 2)}};
  CHECK_THROWS_AS(g.validate(), PreconditionError);
  g.basis.push_back(Matrix::elementary_so(3, 0, 2));
  CHECK_NOTHROW(g.validate());
  g.basis.push_back(Matrix::elementary_so(3, 0, 2));
  CHECK_THROWS_AS(g.validate(), PreconditionError);
}

TEST_CASE("symmetric pairs") {
  for (const auto& name : builtin_pair_names()) CHECK_NOTHROW(builtin_pair(name).validate());
  CHECK(isotropy_representation(builtin_pair("su2-u1")).dim() == 1);
  CHECK_THROWS_AS(builtin_pair("nope"), std::out_of_range);
}

TEST_CASE("galaev construction") {
  // N = 0: flat screen
  const WalkerMetric flat = galaev_metric(3, {}, P("y1^2", 3));
  for (const auto& u : flat.u) CHECK(u.is_zero());

  // one Q for so(2) on R^2: u quadratic in y, no z
  const LieAlgebraRep so2 = builtin_algebra("so2");
  const auto B = bspace(so2);
  std::vector<Matrix> q{weak_value(so2, B[0], 0), weak_value(so2, B[0], 1)};
  const WalkerMetric w = galaev_metric(2, {q}, Polynomial(2));
  for (const auto& u : w.u) {
    CHECK(u.degree_in(z_index(2)) == 0);
    if (!u.is_zero()) CHECK(u.total_degree() == 2);
  }
  CHECK(infinitesimal_holonomy(w, default_max_order(w)).screen.size() == 1);

  // the z-derivatives reproduce the Q_A exactly
  const LieAlgebraRep g = builtin_algebra("so3-5dim");
  const auto R = rspace(g, kspace(g));
  std::vector<std::vector<Matrix>> Qs;
  for (std::size_t a = 0; a < 2; ++a) {
    Qs.emplace_back();
    for (std::size_t i = 0; i < 5; ++i) Qs.back().push_back(weak_value(g, R[a], i));
  }
  const WalkerMetric w5 = galaev_metric(5, Qs, Polynomial(5));
  const auto proj = z_derivative_projections(w5, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t i = 0; i < 5; ++i) CHECK(proj[a][i] == Qs[a][i]);
}

TEST_CASE("galaev construction rejects bad input") {
  // Q(e1) = E12, Q(e2) = 0, Q(e3) = 0 on R^3 violates the identity
  std::vector<Matrix> q{Matrix::elementary_so(3, 1, 2), Matrix(3, 3), Matrix(3, 3)};
  CHECK_THROWS_AS(galaev_metric(3, {q}, Polynomial(3)), PreconditionError);
  std::vector<Matrix> sym{Matrix::identity(2), Matrix(2, 2)};
  CHECK_THROWS_AS(galaev_metric(2, {sym}, Polynomial(2)), PreconditionError);
  CHECK_THROWS_AS(galaev_metric(2, {}, Polynomial(3)), SpecError);
}

TEST_CASE("symmetric metrics") {
  for (const auto& name : builtin_pair_names()) {
    const SymmetricPair p = builtin_pair(name);
    const Polynomial f = P("y1^2", p.m_basis.size());
    CHECK(symmetric_metric(p, f) == galaev_metric(p.m_basis.size(), symmetric_pair_maps(p), f));
  }
  const WalkerMetric sphere = symmetric_metric(builtin_pair("su2-u1"), Polynomial(2));
  CHECK(infinitesimal_holonomy(sphere, default_max_order(sphere)).screen.size() == 1);

  // abelian m: every bracket vanishes
  SymmetricPair flat{"abelian", {}, {Matrix::elementary_so(4, 0, 1), Matrix::elementary_so(4, 2, 3)}};
  // the Killing form of an abelian algebra vanishes, so no normalization exists
  CHECK_THROWS_AS(symmetric_metric(flat, Polynomial(2)), PreconditionError);

  // non-orthogonal m basis
  SymmetricPair skew = builtin_pair("sl3-so3");
  skew.m_basis[1] = skew.m_basis[1] + skew.m_basis[0];
  CHECK_THROWS_WITH_AS(symmetric_metric(skew, Polynomial(5)), doctest::Contains("pair (1,2)"), PreconditionError);
}

TEST_CASE("example catalog") {
  const WalkerMetric ike = builtin_example("ike96");
  CHECK(ike.u[0] == P("-y3^2 - 4*y4^2 - y5^2", 5));
  CHECK(ike.u[2] == P("-2*sqrt(3)*y2*y3 - 2*y4*y5", 5));
  CHECK(builtin_example("galaev05").u[3] == P("8/3*y1*y4", 5));
  CHECK(builtin_example("thesis").u[0] == P("-4*y1*y2", 5));
  CHECK(builtin_example("pp_quadratic").f == P("y1^2", 2));
  CHECK(builtin_example("ike96", P("x*y1^2", 5)).f == P("x*y1^2", 5));
  CHECK_THROWS_AS(builtin_example("nope"), std::out_of_range);
  CHECK_THROWS_AS(builtin_example("ike96", P("y1", 2)), SpecError);
}
