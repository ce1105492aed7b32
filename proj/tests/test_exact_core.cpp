#include "doctest.h"
#include "test_util.hpp"

#include "walker/matrix.hpp"
#include "walker/polynomial.hpp"
#include "walker/scalar.hpp"

#include <random>

using namespace walker;
using walker::test::P;

TEST_CASE("rational canonical form") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(parse_rational("-4/3") == make_rational(-4, 3));
}

TEST_CASE("scalar field Q(sqrt3)") {
  const Scalar s3 = Scalar::sqrt3();
  CHECK(s3 * s3 == Scalar(3));
  CHECK((Scalar(1) + s3) * (Scalar(1) - s3) == Scalar(-2));
  CHECK((Scalar(2) + s3).inverse() == Scalar(2) - s3);
  CHECK((Scalar(1) - s3).sign() < 0);
  CHECK(Scalar(make_rational(7, 4)) > s3);
  CHECK(parse_scalar((Scalar(make_rational(1, 2)) - Scalar(3) * s3).to_string()) ==
        Scalar(make_rational(1, 2)) - Scalar(3) * s3);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("poly_arith examples") {
  CHECK(P("y1+z", 2) * P("y1-z", 2) == P("y1^2-z^2", 2));
  CHECK(P("3*y1*z-x", 2) + Polynomial(2) == P("3*y1*z-x", 2));
  CHECK(P("1/2*y1", 1) * P("1/3*y1", 1) == P("1/6*y1^2", 1));
  CHECK((P("y1", 1) - P("y1", 1)).is_zero());
  CHECK_THROWS_AS(P("y1", 1) + P("y1", 2), std::invalid_argument);
}

TEST_CASE("poly_diff examples") {
  CHECK(P("y1^2*z", 1).diff(1) == P("2*y1*z", 1));
  CHECK(P("y1^2", 1).diff(0).is_zero());
  CHECK(P("z^5", 1).diff(2) == P("5*z^4", 1));
  CHECK_THROWS_AS(P("y1", 1).diff(3), std::out_of_range);
}

TEST_CASE("poly_antideriv examples") {
  CHECK(P("2*y1", 2).antideriv(1) == P("y1^2", 2));
  CHECK(Polynomial(2).antideriv(1).is_zero());
  CHECK(P("y2*z", 2).antideriv(1) == P("y1*y2*z", 2));
}

TEST_CASE("parser grammar and errors") {
  CHECK(P("(y1+1)^2", 1) == P("y1^2+2*y1+1", 1));
  CHECK(P("-2*sqrt(3)*y2*y3", 3).terms().front().coeff == Scalar(-2) * Scalar::sqrt3());
  CHECK(P("y1/2", 1) == P("1/2*y1", 1));
  CHECK(P("-(x-z)", 1) == P("z-x", 1));
  CHECK_THROWS_AS(P("y3", 2), std::invalid_argument);
  CHECK_THROWS_AS(P("y1*", 2), std::invalid_argument);
  CHECK_THROWS_AS(P("1/y1", 2), std::invalid_argument);
  CHECK_THROWS_AS(P("w", 2), std::invalid_argument);
}

TEST_CASE("polynomial properties on random input") {
  std::mt19937 rng(7);
  const std::size_t n = 3;
  std::vector<std::size_t> all{0, 1, 2, 3, 4};
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = test::random_poly(rng, n, all, 4, 5);
    const Polynomial q = test::random_poly(rng, n, all, 3, 4);
    for (std::size_t v = 0; v < n + 2; ++v) {
      CHECK((p * q).diff(v) == p.diff(v) * q + p * q.diff(v));
      CHECK(p.antideriv(v).diff(v) == p);
    }
    CHECK(Polynomial::parse(p.to_string(), n) == p);
    CHECK(Polynomial::mul_truncated(p, q, 3) == (p * q).truncated(3));
  }
}

TEST_CASE("substitute, translate, evaluate") {
  const Polynomial p = P("x*y1^2 + z", 1);
  CHECK(p.substitute(0, P("x - y1", 1)) == P("x*y1^2 - y1^3 + z", 1));
  const std::vector<Scalar> shift{Scalar(1), Scalar(2), Scalar(3)};
  CHECK(p.translated(shift) == P("(x+1)*(y1+2)^2 + z + 3", 1));
  CHECK(p.evaluate(std::span<const Scalar>(shift)) == Scalar(7));
  const std::vector<double> pt{0.5, 2.0, 1.0};
  CHECK(p.evaluate(std::span<const double>(pt)) == doctest::Approx(3.0));
}

TEST_CASE("kernel_basis examples") {
  const auto k1 = kernel_basis(Matrix::from_rows({{Scalar(1), Scalar(1)}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0] == -k1[0][1]);
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  CHECK(kernel_basis(Matrix(2, 2)).size() == 2);
}

TEST_CASE("kernel and rank agree") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = Scalar(c(rng)) + (j == 2 ? Scalar::sqrt3() : Scalar(0));
    m(3, 0) = m(0, 0) + m(1, 0);
    const auto ker = kernel_basis(m);
    for (const auto& v : ker) {
      const Vector mv = m * v;
      for (const auto& e : mv) CHECK(e.is_zero());
    }
    CHECK(ker.size() + rank(m) == 6);
  }
}

TEST_CASE("span_dim examples") {
  CHECK(span_dim(std::vector<Vector>{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}}) == 2);
  CHECK(span_dim(std::vector<Vector>{}) == 0);
  const Matrix e12 = Matrix::elementary_so(3, 0, 1), e13 = Matrix::elementary_so(3, 0, 2);
  CHECK(span_dim(std::vector<Matrix>{e12, e13, commutator(e12, e13)}) == 3);
  CHECK_THROWS_AS(span_dim(std::vector<Vector>{{Scalar(1)}, {Scalar(1), Scalar(2)}}), std::invalid_argument);
}

TEST_CASE("span basis coordinates") {
  SpanBasis s(3);
  CHECK(s.add({Scalar(1), Scalar(1), Scalar(0)}));
  CHECK(s.add({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK_FALSE(s.add({Scalar(1), Scalar(2), Scalar(1)}));
  const auto c = s.coordinates({Scalar(2), Scalar(3), Scalar(1)});
  REQUIRE(c);
  CHECK((*c)[0] == Scalar(2));
  CHECK((*c)[1] == Scalar(1));
  CHECK_FALSE(s.coordinates({Scalar(0), Scalar(0), Scalar(1)}));
}

TEST_CASE("inertia") {
  Matrix m(3, 3);
  m(0, 1) = m(1, 0) = Scalar(1);
  m(2, 2) = -Scalar::sqrt3();
  const Inertia in = inertia(m);
  CHECK(in.positive == 1);
  CHECK(in.negative == 2);
  CHECK(in.zero == 0);
}
