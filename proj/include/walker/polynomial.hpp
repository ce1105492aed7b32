#pragma once

#include "walker/scalar.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace walker {

/// Maximum number of variables x, y1..yn, z a polynomial may carry.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

/// Graded-lexicographic order with x > y1 > ... > yn > z.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Scalar coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Exact sparse multivariate polynomial in the Walker chart variables
/// x, y1..yn, z (indices 0, 1..n, n+1) over Q(sqrt 3).
///
/// Terms are kept sorted in decreasing grlex order with no zero
/// coefficients, so structural equality is mathematical equality. Values
/// are immutable once built; every operation returns a fresh polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  /// Zero polynomial for fiber dimension n (arity n + 2).
  explicit Polynomial(std::size_t n);
  Polynomial(std::size_t n, const Scalar& constant);

  static Polynomial variable(std::size_t n, std::size_t var);
  static Polynomial monomial(std::size_t n, const Scalar& c,
                             std::span<const std::uint16_t> exponents);

  /// Parses the text grammar documented in FORMATS.md. Throws
  /// std::invalid_argument with the offending position.
  static Polynomial parse(const std::string& text, std::size_t n);

  std::size_t fiber_dim() const { return n_; }
  std::size_t arity() const { return n_ + 2; }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  std::size_t total_degree() const;
  std::size_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }
  std::size_t size() const { return terms_.size(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }

  /// Product keeping only terms of total degree <= max_degree.
  static Polynomial mul_truncated(const Polynomial& p, const Polynomial& q,
                                  std::size_t max_degree);
  Polynomial truncated(std::size_t max_degree) const;

  Polynomial pow(unsigned e) const;

  /// Partial derivative. Throws std::out_of_range for an unknown variable.
  Polynomial diff(std::size_t var) const;
  /// Antiderivative with no var-free terms: diff(antideriv(p, v), v) == p.
  Polynomial antideriv(std::size_t var) const;

  /// Replaces variable var by q.
  Polynomial substitute(std::size_t var, const Polynomial& q) const;
  /// p(v + shift_v) for every variable.
  Polynomial translated(std::span<const Scalar> shift) const;
  /// Same polynomial re-expressed with fiber dimension m (variables are
  /// matched by role: x, y_i for i <= min(n,m), z). Throws if a dropped
  /// y variable occurs.
  Polynomial with_fiber_dim(std::size_t m) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  double evaluate(std::span<const double> point) const;

  /// Canonical text form (grlex, x > y1 > ... > z); parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.n_ == q.n_ && p.terms_ == q.terms_;
  }

  std::string variable_name(std::size_t var) const;

 private:
  void check_compatible(const Polynomial& q) const;
  void check_var(std::size_t var) const;
  static Polynomial from_unsorted(std::size_t n, std::vector<Term> terms);

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace walker
