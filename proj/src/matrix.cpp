#include "walker/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace walker {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::elementary_so(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  m(j, i) = -1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_antisymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (!((*this)(r, c) + (*this)(c, r)).is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = -s;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& e : m.data_) e *= s;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector so_coordinates(const Matrix& a) {
  Vector v;
  v.reserve(a.rows() * (a.rows() - 1) / 2);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

Matrix so_from_coordinates(std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != n * (n - 1) / 2) throw std::invalid_argument("so(n) coordinate count mismatch");
  Matrix m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = coords[k];
      m(j, i) = -coords[k];
      ++k;
    }
  return m;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  SpanBasis span(vectors[0].size());
  for (const auto& v : vectors) {
    if (v.size() != span.ambient_dim()) throw std::invalid_argument("span_dim: vector length mismatch");
    span.add(v);
  }
  return span.dim();
}

Vector flatten(const Matrix& m) { return m.entries(); }

std::size_t span_dim(const std::vector<Matrix>& matrices) {
  if (matrices.empty()) return 0;
  std::vector<Vector> vs;
  for (const auto& m : matrices) {
    if (m.rows() != matrices[0].rows() || m.cols() != matrices[0].cols())
      throw std::invalid_argument("span_dim: matrix shape mismatch");
    vs.push_back(flatten(m));
  }
  return span_dim(vs);
}

Vector SpanBasis::reduce(Vector v, Vector* combo) const {
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    const Vector& row = reduced_[k];
    for (std::size_t c = p; c < dim_; ++c)
      if (!row[c].is_zero()) v[c] -= factor * row[c];
    if (combo) {
      for (std::size_t j = 0; j < combos_[k].size(); ++j)
        if (!combos_[k][j].is_zero()) (*combo)[j] += factor * combos_[k][j];
    }
  }
  return v;
}

bool SpanBasis::add(const Vector& v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: vector length mismatch");
  Vector combo(generators_.size() + 1);
  Vector r = reduce(v, &combo);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = r[p].inverse();
  for (std::size_t c = p; c < dim_; ++c)
    if (!r[c].is_zero()) r[c] *= inv;
  // r_raw = v - sum factor_k * reduced_k  =>  normalized row in generator terms.
  Vector row_combo(generators_.size() + 1);
  for (std::size_t j = 0; j < generators_.size(); ++j) row_combo[j] = -combo[j] * inv;
  row_combo[generators_.size()] = inv;
  for (auto& c : combos_) c.emplace_back();
  combos_.push_back(std::move(row_combo));
  reduced_.push_back(std::move(r));
  pivots_.push_back(p);
  generators_.push_back(v);
  return true;
}

bool SpanBasis::contains(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: vector length mismatch");
  const Vector r = reduce(v, nullptr);
  for (const auto& s : r)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<Vector> SpanBasis::coordinates(const Vector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: vector length mismatch");
  Vector combo(generators_.size());
  const Vector r = reduce(v, &combo);
  for (const auto& s : r)
    if (!s.is_zero()) return std::nullopt;
  return combo;
}

Inertia inertia(Matrix s) {
  if (!s.is_symmetric()) throw std::invalid_argument("inertia of a non-symmetric matrix");
  Inertia result;
  std::size_t n = s.rows();
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !s(i, i).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) {
      // No nonzero diagonal: find an off-diagonal entry and fold row j into row i.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !s(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        result.zero += remaining;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) s(pi, c) += s(pj, c);
      for (std::size_t r = 0; r < n; ++r) s(r, pi) += s(r, pj);
      piv = pi;
    }
    const Scalar d = s(piv, piv);
    (d.sign() > 0 ? result.positive : result.negative) += 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || r == piv || s(r, piv).is_zero()) continue;
      const Scalar factor = s(r, piv) / d;
      for (std::size_t c = 0; c < n; ++c) s(r, c) -= factor * s(piv, c);
      for (std::size_t c = 0; c < n; ++c) s(c, r) = s(r, c);
    }
    done[piv] = true;
    --remaining;
  }
  return result;
}

}  // namespace walker
