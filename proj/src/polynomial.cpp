#include "walker/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace walker {

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const std::uint32_t e = std::uint32_t(a.exp[i]) + b.exp[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("polynomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = a.degree + b.degree;
  return m;
}

}  // namespace

Polynomial::Polynomial(std::size_t n) : n_(n) {
  if (n + 2 > kMaxVars) throw std::invalid_argument("fiber dimension too large for polynomial arity");
}

Polynomial::Polynomial(std::size_t n, const Scalar& constant) : Polynomial(n) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, constant});
}

Polynomial Polynomial::variable(std::size_t n, std::size_t var) {
  Polynomial p(n);
  p.check_var(var);
  Monomial m;
  m.exp[var] = 1;
  m.degree = 1;
  p.terms_.push_back(Term{m, Scalar(1)});
  return p;
}

Polynomial Polynomial::monomial(std::size_t n, const Scalar& c,
                                std::span<const std::uint16_t> exponents) {
  Polynomial p(n);
  if (exponents.size() > p.arity()) throw std::invalid_argument("monomial arity mismatch");
  if (c.is_zero()) return p;
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exp[i] = exponents[i];
    m.degree += exponents[i];
  }
  p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_unsorted(std::size_t n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  Polynomial p(n);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

void Polynomial::check_compatible(const Polynomial& q) const {
  if (n_ != q.n_) {
    throw std::invalid_argument("polynomial arity mismatch: " + std::to_string(arity()) +
                                " vs " + std::to_string(q.arity()));
  }
}

void Polynomial::check_var(std::size_t var) const {
  if (var >= arity()) throw std::out_of_range("unknown variable index " + std::to_string(var));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0);
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree == 0) return terms_.back().coeff;
  return Scalar();
}

std::size_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree;
}

std::size_t Polynomial::degree_in(std::size_t var) const {
  check_var(var);
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, t.mono.exp[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  p.check_compatible(q);
  if (q.is_zero()) return p;
  if (p.is_zero()) return q;
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end() || (i != p.terms_.end() && grlex_greater(i->mono, j->mono))) {
      out.push_back(*i++);
    } else if (i == p.terms_.end() || grlex_greater(j->mono, i->mono)) {
      out.push_back(*j++);
    } else {
      Scalar c = i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back(Term{i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  Polynomial r(p.n_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.n_);
  Polynomial r = p;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_compatible(q);
  if (p.is_zero() || q.is_zero()) return Polynomial(p.n_);
  if (p.is_constant()) return p.terms_[0].coeff * q;
  if (q.is_constant()) return q.terms_[0].coeff * p;
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) out.push_back(Term{multiply(a.mono, b.mono), a.coeff * b.coeff});
  return Polynomial::from_unsorted(p.n_, std::move(out));
}

Polynomial Polynomial::mul_truncated(const Polynomial& p, const Polynomial& q,
                                     std::size_t max_degree) {
  p.check_compatible(q);
  std::vector<Term> out;
  for (const auto& a : p.terms_) {
    if (a.mono.degree > max_degree) continue;
    for (const auto& b : q.terms_) {
      if (a.mono.degree + b.mono.degree > max_degree) continue;
      out.push_back(Term{multiply(a.mono, b.mono), a.coeff * b.coeff});
    }
  }
  return from_unsorted(p.n_, std::move(out));
}

Polynomial Polynomial::truncated(std::size_t max_degree) const {
  Polynomial r(n_);
  for (const auto& t : terms_)
    if (t.mono.degree <= max_degree) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(n_, Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::diff(std::size_t var) const {
  check_var(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exp[var];
    if (e == 0) continue;
    Term d{t.mono, t.coeff * Scalar(long(e))};
    d.mono.exp[var] = static_cast<std::uint16_t>(e - 1);
    d.mono.degree -= 1;
    out.push_back(std::move(d));
  }
  // Distinct monomials stay distinct after lowering one exponent.
  return from_unsorted(n_, std::move(out));
}

Polynomial Polynomial::antideriv(std::size_t var) const {
  check_var(var);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exp[var];
    if (e == std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("polynomial exponent overflow");
    Term a{t.mono, t.coeff / Scalar(long(e) + 1)};
    a.mono.exp[var] = static_cast<std::uint16_t>(e + 1);
    a.mono.degree += 1;
    out.push_back(std::move(a));
  }
  return from_unsorted(n_, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& q) const {
  check_var(var);
  check_compatible(q);
  std::vector<Polynomial> powers{Polynomial(n_, Scalar(1))};
  Polynomial result(n_);
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    const auto e = t.mono.exp[var];
    if (e == 0) {
      untouched.push_back(t);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * q);
    Term rest = t;
    rest.mono.exp[var] = 0;
    rest.mono.degree -= e;
    Polynomial r(n_);
    r.terms_.push_back(rest);
    result += r * powers[e];
  }
  return result + from_unsorted(n_, std::move(untouched));
}

Polynomial Polynomial::translated(std::span<const Scalar> shift) const {
  if (shift.size() != arity()) throw std::invalid_argument("translation arity mismatch");
  Polynomial r = *this;
  for (std::size_t v = 0; v < arity(); ++v) {
    if (shift[v].is_zero() || !r.depends_on(v)) continue;
    r = r.substitute(v, variable(n_, v) + Polynomial(n_, shift[v]));
  }
  return r;
}

Polynomial Polynomial::with_fiber_dim(std::size_t m) const {
  Polynomial r(m);
  for (const auto& t : terms_) {
    Monomial mono;
    mono.degree = t.mono.degree;
    mono.exp[0] = t.mono.exp[0];
    mono.exp[m + 1] = t.mono.exp[n_ + 1];
    for (std::size_t i = 1; i <= n_; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (i > m) throw std::invalid_argument("variable y" + std::to_string(i) + " has no counterpart");
      mono.exp[i] = t.mono.exp[i];
    }
    r.terms_.push_back(Term{mono, t.coeff});
  }
  return from_unsorted(m, std::move(r.terms_));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity()) throw std::invalid_argument("evaluation arity mismatch");
  Scalar sum;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < arity(); ++i)
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != arity()) throw std::invalid_argument("evaluation arity mismatch");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.to_double();
    for (std::size_t i = 0; i < arity(); ++i)
      if (t.mono.exp[i] != 0) v *= std::pow(point[i], double(t.mono.exp[i]));
    sum += v;
  }
  return sum;
}

std::string Polynomial::variable_name(std::size_t var) const {
  check_var(var);
  if (var == 0) return "x";
  if (var == n_ + 1) return "z";
  return "y" + std::to_string(var);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, bool with_sqrt3, const Monomial& m) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || (!with_sqrt3 && m.degree == 0)) factors.push_back(mag.get_str());
    if (with_sqrt3) factors.push_back("sqrt(3)");
    for (std::size_t v = 0; v < arity(); ++v) {
      if (m.exp[v] == 0) continue;
      std::string f = variable_name(v);
      if (m.exp[v] > 1) f += "^" + std::to_string(m.exp[v]);
      factors.push_back(f);
    }
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  };
  for (const auto& t : terms_) {
    emit(t.coeff.rational_part(), false, t.mono);
    emit(t.coeff.sqrt3_part(), true, t.mono);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' integer]
//   primary:= integer | 'x' | 'z' | 'y'<k> | 'sqrt(3)' | '(' expr ')' | '-' factor

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) +
                                ": " + what + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(n_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division by a non-constant or zero expression");
        }
        acc = d.constant_term().inverse() * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      if (e > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational q;
      q.set_str(s_.substr(start, pos_ - start), 10);
      return Polynomial(n_, Scalar(q));
    }
    if (s_.compare(pos_, 7, "sqrt(3)") == 0) {
      pos_ += 7;
      return Polynomial(n_, Scalar::sqrt3());
    }
    if (c == 'x') {
      ++pos_;
      return Polynomial::variable(n_, 0);
    }
    if (c == 'z') {
      ++pos_;
      return Polynomial::variable(n_, n_ + 1);
    }
    if (c == 'y') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected index after 'y'");
      const unsigned long i = std::stoul(s_.substr(start, pos_ - start));
      if (i < 1 || i > n_) {
        pos_ = start;
        fail("variable y" + std::to_string(i) + " outside y1..y" + std::to_string(n_));
      }
      return Polynomial::variable(n_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, std::size_t n) {
  return Parser(text, n).run();
}

}  // namespace walker
