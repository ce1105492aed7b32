#include "walker/liealg.hpp"

#include "walker/errors.hpp"

#include <array>
#include <stdexcept>

namespace walker {

namespace {

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

Matrix combination(const std::vector<Matrix>& basis, const Vector& coords, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (!coords[a].is_zero()) m = m + coords[a] * basis[a];
  return m;
}

std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  // a < b, lexicographic
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace

std::vector<Matrix> independent_subset(const std::vector<Matrix>& mats) {
  if (mats.empty()) return {};
  SpanBasis span(mats.front().rows() * mats.front().cols());
  std::vector<Matrix> out;
  for (const auto& m : mats)
    if (span.add(flatten(m))) out.push_back(m);
  return out;
}

std::vector<Matrix> lie_closure(const std::vector<Matrix>& gens) {
  std::vector<Matrix> basis = independent_subset(gens);
  if (basis.empty()) return basis;
  SpanBasis span(basis.front().rows() * basis.front().cols());
  for (const auto& b : basis) span.add(flatten(b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Matrix c = commutator(basis[i], basis[j]);
      if (span.add(flatten(c))) basis.push_back(std::move(c));
    }
  return basis;
}

bool is_bracket_closed(const std::vector<Matrix>& basis) {
  if (basis.empty()) return true;
  SpanBasis span(basis.front().rows() * basis.front().cols());
  for (const auto& b : basis) span.add(flatten(b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!span.contains(flatten(commutator(basis[i], basis[j])))) return false;
  return true;
}

std::optional<StructureConstants> structure_constants(const std::vector<Matrix>& basis) {
  const std::size_t d = basis.size();
  StructureConstants c(d, std::vector<Vector>(d, Vector(d)));
  if (d == 0) return c;
  SpanBasis span(basis.front().rows() * basis.front().cols());
  for (const auto& b : basis)
    if (!span.add(flatten(b))) return std::nullopt;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = span.coordinates(flatten(commutator(basis[i], basis[j])));
      if (!coords) return std::nullopt;
      c[i][j] = *coords;
      for (std::size_t k = 0; k < d; ++k) c[j][i][k] = -(*coords)[k];
    }
  return c;
}

Matrix killing_form(const StructureConstants& c) {
  const std::size_t d = c.size();
  Matrix B(d, d);
  // (ad X_i)^k_l = c[i][l][k];  B_ij = sum_{k,l} c[i][l][k] c[j][k][l]
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Scalar s;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Scalar& a = c[i][l][k];
          const Scalar& b = c[j][k][l];
          if (!a.is_zero() && !b.is_zero()) s += a * b;
        }
      B(i, j) = s;
      B(j, i) = s;
    }
  return B;
}

std::size_t commutant_dim(const std::vector<Matrix>& basis, std::size_t n) {
  Matrix eq(basis.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& b : basis)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row)
        for (std::size_t k = 0; k < n; ++k) {
          eq(row, r * n + k) += b(k, c);  // (M b)_{rc}
          eq(row, k * n + c) -= b(r, k);  // (b M)_{rc}
        }
  return n * n - rank(eq);
}

std::vector<std::size_t> derived_series_dims(const std::vector<Matrix>& basis) {
  std::vector<Matrix> cur = independent_subset(basis);
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    std::vector<Matrix> br;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) br.push_back(commutator(cur[i], cur[j]));
    std::vector<Matrix> next = independent_subset(br);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

void LieAlgebraRep::validate() const {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].rows() != n || basis[a].cols() != n)
      throw PreconditionError("basis element " + std::to_string(a + 1) + " is not " + std::to_string(n) + "x" +
                              std::to_string(n));
    if (!basis[a].is_antisymmetric())
      throw PreconditionError("basis element " + std::to_string(a + 1) + " is not antisymmetric");
  }
  if (independent_subset(basis).size() != basis.size()) throw PreconditionError("basis is linearly dependent");
  if (!is_bracket_closed(basis)) throw PreconditionError("basis not bracket-closed");
}

std::vector<WeakCurvature> bspace(const LieAlgebraRep& g) {
  const std::size_t n = g.n, d = g.dim();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  Matrix eq(triples.size(), n * d);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [i, j, k] = triples[t];
    for (std::size_t a = 0; a < d; ++a) {
      const Matrix& b = g.basis[a];
      // <Q(e_i) e_j, e_k> + <Q(e_j) e_k, e_i> + <Q(e_k) e_i, e_j>
      eq(t, i * d + a) += b(k, j);
      eq(t, j * d + a) += b(i, k);
      eq(t, k * d + a) += b(j, i);
    }
  }
  std::vector<WeakCurvature> out;
  for (const Vector& v : kernel_basis(eq)) {
    WeakCurvature q;
    for (std::size_t i = 0; i < n; ++i) q.values.emplace_back(v.begin() + i * d, v.begin() + (i + 1) * d);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<CurvatureMap> kspace(const LieAlgebraRep& g) {
  const std::size_t n = g.n, d = g.dim(), pairs = n * (n - 1) / 2;
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  Matrix eq(triples.size() * n, pairs * d);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [i, j, k] = triples[t];
    // R(e_i,e_j) e_k + R(e_j,e_k) e_i - R(e_i,e_k) e_j
    const std::array<std::tuple<std::size_t, std::size_t, Scalar>, 3> terms{
        std::tuple{pair_index(n, i, j), k, Scalar(1)}, std::tuple{pair_index(n, j, k), i, Scalar(1)},
        std::tuple{pair_index(n, i, k), j, Scalar(-1)}};
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [p, col, sign] : terms)
        for (std::size_t a = 0; a < d; ++a) eq(t * n + m, p * d + a) += sign * g.basis[a](m, col);
  }
  std::vector<CurvatureMap> out;
  for (const Vector& v : kernel_basis(eq)) {
    CurvatureMap r;
    for (std::size_t p = 0; p < pairs; ++p) r.values.emplace_back(v.begin() + p * d, v.begin() + (p + 1) * d);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<WeakCurvature> rspace(const LieAlgebraRep& g, const std::vector<CurvatureMap>& K) {
  const std::size_t n = g.n, d = g.dim();
  SpanBasis span(n * d);
  std::vector<WeakCurvature> out;
  for (const auto& r : K)
    for (std::size_t a = 0; a < n; ++a) {
      WeakCurvature q;
      Vector flat;
      for (std::size_t b = 0; b < n; ++b) {
        Vector v(d);
        if (a < b) v = r.values[pair_index(n, a, b)];
        if (a > b)
          for (std::size_t k = 0; k < d; ++k) v[k] = -r.values[pair_index(n, b, a)][k];
        flat.insert(flat.end(), v.begin(), v.end());
        q.values.push_back(std::move(v));
      }
      if (span.add(flat)) out.push_back(std::move(q));
    }
  return out;
}

Matrix weak_value(const LieAlgebraRep& g, const WeakCurvature& q, std::size_t i) {
  return combination(g.basis, q.values.at(i), g.n);
}

Matrix curvature_value(const LieAlgebraRep& g, const CurvatureMap& r, std::size_t a, std::size_t b) {
  if (a == b) return Matrix(g.n, g.n);
  if (a > b) return -curvature_value(g, r, b, a);
  return combination(g.basis, r.values.at(pair_index(g.n, a, b)), g.n);
}

std::string weak_bianchi_violation(const std::vector<Matrix>& q) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!(q[i](k, j) + q[j](i, k) + q[k](j, i)).is_zero()) return triple_text(i, j, k);
  return {};
}

bool contained_in(const std::vector<WeakCurvature>& sub, const std::vector<WeakCurvature>& space) {
  auto flat = [](const WeakCurvature& q) {
    Vector v;
    for (const auto& x : q.values) v.insert(v.end(), x.begin(), x.end());
    return v;
  };
  if (sub.empty()) return true;
  SpanBasis span(flat(sub.front()).size());
  for (const auto& q : space) span.add(flat(q));
  for (const auto& q : sub)
    if (!span.contains(flat(q))) return false;
  return true;
}

bool is_weak_berger(const LieAlgebraRep& g) {
  SpanBasis span(g.dim());
  for (const auto& q : bspace(g))
    for (const auto& v : q.values) span.add(v);
  return span.dim() == g.dim();
}

bool is_berger(const LieAlgebraRep& g) {
  SpanBasis span(g.dim());
  for (const auto& r : kspace(g))
    for (const auto& v : r.values) span.add(v);
  return span.dim() == g.dim();
}

std::vector<Matrix> SymmetricPair::basis() const {
  std::vector<Matrix> b = k_basis;
  b.insert(b.end(), m_basis.begin(), m_basis.end());
  return b;
}

StructureConstants SymmetricPair::structure() const {
  auto c = structure_constants(basis());
  if (!c) throw PreconditionError("symmetric pair " + name + ": basis is dependent or not bracket-closed");
  return *c;
}

Matrix SymmetricPair::killing() const { return killing_form(structure()); }

void SymmetricPair::validate() const {
  const StructureConstants c = structure();
  const std::size_t dk = k_basis.size(), d = c.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const bool i_k = i < dk, j_k = j < dk;
      // [k,k] and [m,m] land in k; [k,m] lands in m.
      const bool want_k = i_k == j_k;
      for (std::size_t t = 0; t < d; ++t) {
        const bool t_k = t < dk;
        if (t_k != want_k && !c[i][j][t].is_zero())
          throw PreconditionError("symmetric pair " + name + ": bracket of basis elements " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1) + " leaves its component");
      }
    }
}

LieAlgebraRep isotropy_representation(const SymmetricPair& p) {
  const std::size_t n = p.m_basis.size();
  SpanBasis span(p.m_basis.front().rows() * p.m_basis.front().cols());
  for (const auto& x : p.m_basis) span.add(flatten(x));
  LieAlgebraRep g;
  g.name = p.name + " isotropy";
  g.n = n;
  for (const auto& k : p.k_basis) {
    Matrix a(n, n);
    for (std::size_t l = 0; l < n; ++l) {
      const auto coords = span.coordinates(flatten(commutator(k, p.m_basis[l])));
      if (!coords) throw PreconditionError("symmetric pair " + p.name + ": [k,m] not in m");
      for (std::size_t m = 0; m < n; ++m) a(m, l) = (*coords)[m];
    }
    g.basis.push_back(std::move(a));
  }
  return g;
}

namespace {

Matrix from_ints(std::size_t n, std::initializer_list<int> entries) {
  std::vector<Scalar> v;
  for (int e : entries) v.emplace_back(e);
  return Matrix(n, n, std::move(v));
}

LieAlgebraRep so_n(std::size_t n, const std::string& name) {
  LieAlgebraRep g{name, n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.basis.push_back(Matrix::elementary_so(n, i, j));
  return g;
}

/// Derivations of R^7 annihilating the G2 3-form.
LieAlgebraRep g2() {
  constexpr std::size_t n = 7;
  int phi[n][n][n] = {};
  const std::array<std::array<int, 4>, 7> terms{{{1, 2, 3, 1},
                                                 {1, 4, 5, 1},
                                                 {1, 6, 7, 1},
                                                 {2, 4, 6, 1},
                                                 {2, 5, 7, -1},
                                                 {3, 4, 7, -1},
                                                 {3, 5, 6, -1}}};
  for (const auto& t : terms) {
    const std::array<int, 3> idx{t[0] - 1, t[1] - 1, t[2] - 1};
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    for (std::size_t p = 0; p < 6; ++p) {
      const int sign = p < 3 ? 1 : -1;
      phi[idx[perms[p][0]]][idx[perms[p][1]]][idx[perms[p][2]]] = sign * t[3];
    }
  }
  const LieAlgebraRep so7 = so_n(n, "so7");
  // (D phi)(a,b,c) = -phi(De_a, e_b, e_c) - phi(e_a, De_b, e_c) - phi(e_a, e_b, De_c)
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  Matrix eq(triples.size(), so7.dim());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [a, b, c] = triples[t];
    for (std::size_t k = 0; k < so7.dim(); ++k) {
      const Matrix& D = so7.basis[k];
      int s = 0;
      for (std::size_t m = 0; m < n; ++m) {
        const int dma = static_cast<int>(D(m, a).rational_part().get_num().get_si());
        const int dmb = static_cast<int>(D(m, b).rational_part().get_num().get_si());
        const int dmc = static_cast<int>(D(m, c).rational_part().get_num().get_si());
        s -= dma * phi[m][b][c] + dmb * phi[a][m][c] + dmc * phi[a][b][m];
      }
      eq(t, k) = Scalar(s);
    }
  }
  LieAlgebraRep g{"g2", n, {}};
  for (const Vector& v : kernel_basis(eq)) g.basis.push_back(combination(so7.basis, v, n));
  return g;
}

}  // namespace

SymmetricPair builtin_pair(const std::string& name) {
  SymmetricPair p;
  p.name = name;
  if (name == "sl3-so3") {
    p.k_basis = {Matrix::elementary_so(3, 0, 1), Matrix::elementary_so(3, 0, 2), Matrix::elementary_so(3, 1, 2)};
    const Scalar inv_sqrt3 = Scalar::sqrt3().inverse();
    p.m_basis.push_back(from_ints(3, {1, 0, 0, 0, -1, 0, 0, 0, 0}));
    p.m_basis.push_back(inv_sqrt3 * from_ints(3, {1, 0, 0, 0, 1, 0, 0, 0, -2}));
    p.m_basis.push_back(from_ints(3, {0, 1, 0, 1, 0, 0, 0, 0, 0}));
    p.m_basis.push_back(from_ints(3, {0, 0, 1, 0, 0, 0, 1, 0, 0}));
    p.m_basis.push_back(from_ints(3, {0, 0, 0, 0, 0, 1, 0, 1, 0}));
    return p;
  }
  if (name == "su2-u1") {
    // so(3) ~ su(2): L1, L2, L3 with [L1, L2] = L3 (cyclic); k = span{L3}.
    const Matrix L1 = Matrix::elementary_so(3, 2, 1);
    const Matrix L2 = Matrix::elementary_so(3, 0, 2);
    const Matrix L3 = Matrix::elementary_so(3, 1, 0);
    p.k_basis = {L3};
    p.m_basis = {L1, L2};
    return p;
  }
  throw std::out_of_range("unknown symmetric pair '" + name + "'");
}

std::vector<std::string> builtin_pair_names() { return {"sl3-so3", "su2-u1"}; }

LieAlgebraRep builtin_algebra(const std::string& name) {
  if (name == "trivial2") return LieAlgebraRep{name, 2, {}};
  if (name == "so2") return so_n(2, name);
  if (name == "so3") return so_n(3, name);
  if (name == "so3-5dim") {
    LieAlgebraRep g = isotropy_representation(builtin_pair("sl3-so3"));
    g.name = name;
    return g;
  }
  if (name == "g2") return g2();
  if (name == "e12+e34") return LieAlgebraRep{name, 4, {Matrix::elementary_so(4, 0, 1) + Matrix::elementary_so(4, 2, 3)}};
  throw std::out_of_range("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() { return {"trivial2", "so2", "so3", "so3-5dim", "g2", "e12+e34"}; }

}  // namespace walker
