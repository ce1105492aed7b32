#pragma once

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <iosfwd>
#include <string>

namespace walker {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "a" or "a/b" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
///
/// The example metrics carry sqrt(3) coefficients and the sl(3)/so(3)
/// orthonormal m-basis needs 1/sqrt(3), so this is the scalar field of every
/// exact computation. Values with b == 0 are ordinary rationals and take the
/// cheap path in every operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar sqrt3() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return sgn(b_) == 0 && a_ == 1; }

  /// Exact sign in the ordered field (sqrt 3 taken positive).
  int sign() const;

  double to_double() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar inverse() const;

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

  /// Total order by value.
  friend std::strong_ordering operator<=>(const Scalar& l, const Scalar& r) {
    const int s = (l - r).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Text form accepted back by the polynomial parser: "a", "a/b",
  /// "b*sqrt(3)", "a + b*sqrt(3)".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses the output of Scalar::to_string (a rational, optionally followed
/// by "+/- c*sqrt(3)"). Throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);

}  // namespace walker
