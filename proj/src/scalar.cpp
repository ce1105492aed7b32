#include "walker/scalar.hpp"

#include "walker/polynomial.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace walker {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  const auto slash = text.find('/');
  auto all_digits = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i)
      if (text[i] < '0' || text[i] > '9') return false;
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? text.size() : slash;
  if (!all_digits(start, num_end) ||
      (slash != std::string::npos && !all_digits(slash + 1, text.size())))
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  Rational q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against 3 b^2.
  const Rational a2 = a_ * a_;
  const Rational b2 = 3 * b_ * b_;
  const int c = cmp(a2, b2);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Scalar::to_double() const {
  if (sgn(b_) == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(3.0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 3 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(b_) == 0) return Scalar(Rational(1) / a_);
  const Rational norm = a_ * a_ - 3 * b_ * b_;  // nonzero: sqrt3 is irrational
  return Scalar(Rational(a_ / norm), Rational(-b_ / norm));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (sgn(o.b_) == 0) {
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string b_text;
  if (b_ == 1) {
    b_text = "sqrt(3)";
  } else if (b_ == -1) {
    b_text = "-sqrt(3)";
  } else {
    b_text = b_.get_str() + "*sqrt(3)";
  }
  if (sgn(a_) == 0) return b_text;
  if (b_text[0] == '-') return a_.get_str() + " - " + b_text.substr(1);
  return a_.get_str() + " + " + b_text;
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(a_.get_str()) ^ (h(b_.get_str()) * 31u);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar parse_scalar(const std::string& text) {
  // Reuse the polynomial grammar: a constant expression in zero variables.
  const Polynomial p = Polynomial::parse(text, 0);
  if (p.total_degree() > 0) throw std::invalid_argument("expected a constant, got '" + text + "'");
  return p.constant_term();
}

}  // namespace walker
