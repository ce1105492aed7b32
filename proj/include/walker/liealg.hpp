#pragma once

#include "walker/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace walker {

/// Structure constants in a fixed basis: c[i][j] are the coordinates of
/// [b_i, b_j].
using StructureConstants = std::vector<std::vector<Vector>>;

/// Linearly independent subset of the input spanning the same space.
std::vector<Matrix> independent_subset(const std::vector<Matrix>& mats);

/// Basis of the Lie algebra generated by gens (closure under brackets).
std::vector<Matrix> lie_closure(const std::vector<Matrix>& gens);

/// True iff every bracket of basis elements lies in their span.
bool is_bracket_closed(const std::vector<Matrix>& basis);

/// Structure constants of a linearly independent, bracket-closed basis;
/// nullopt when some bracket leaves the span.
std::optional<StructureConstants> structure_constants(const std::vector<Matrix>& basis);

/// B(X, Y) = tr(ad X ad Y) in the basis of the structure constants.
Matrix killing_form(const StructureConstants& c);

/// dim { M in gl(n) : [M, b] = 0 for every b }.
std::size_t commutant_dim(const std::vector<Matrix>& basis, std::size_t n);

/// Dimensions of the derived series g, [g,g], [[g,g],[g,g]], ... down to
/// the first repeat (the last entry is 0 exactly for solvable algebras).
std::vector<std::size_t> derived_series_dims(const std::vector<Matrix>& basis);

/// Subalgebra of so(n) given by basis matrices.
struct LieAlgebraRep {
  std::string name;
  std::size_t n = 0;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
  /// Throws PreconditionError unless the basis is antisymmetric, linearly
  /// independent and bracket-closed.
  void validate() const;
};

/// A linear map Q: R^n -> g, stored as g-coordinates of Q(e_1) .. Q(e_n).
struct WeakCurvature {
  std::vector<Vector> values;
};

/// Basis of B(g): maps with <Q(x)y,z> + <Q(y)z,x> + <Q(z)x,y> = 0.
std::vector<WeakCurvature> bspace(const LieAlgebraRep& g);

/// A map R: Lambda^2 R^n -> g, stored as g-coordinates of R(e_a, e_b), a < b,
/// in lexicographic pair order.
struct CurvatureMap {
  std::vector<Vector> values;
};

/// Basis of K(g): maps satisfying the first Bianchi identity.
std::vector<CurvatureMap> kspace(const LieAlgebraRep& g);

/// Basis of span { R(x, .) : R in K, x in R^n } inside Hom(R^n, g).
std::vector<WeakCurvature> rspace(const LieAlgebraRep& g, const std::vector<CurvatureMap>& K);

/// Q(e_i) as a matrix.
Matrix weak_value(const LieAlgebraRep& g, const WeakCurvature& q, std::size_t i);
/// R(e_a, e_b) as a matrix.
Matrix curvature_value(const LieAlgebraRep& g, const CurvatureMap& r, std::size_t a, std::size_t b);

/// The Bianchi-type identity of B(g) on basis triples; returns the first
/// violating 1-based triple as text, or empty.
std::string weak_bianchi_violation(const std::vector<Matrix>& q_values);

/// Every element of `sub` lies in span(`space`).
bool contained_in(const std::vector<WeakCurvature>& sub, const std::vector<WeakCurvature>& space);

/// g == span { Q(x) : Q in B(g) }.
bool is_weak_berger(const LieAlgebraRep& g);
/// g == span { R(x, y) : R in K(g) }.
bool is_berger(const LieAlgebraRep& g);

/// Symmetric decomposition g = k + m given by matrices of a faithful
/// representation (for example sl(3) by 3x3 matrices).
struct SymmetricPair {
  std::string name;
  std::vector<Matrix> k_basis;
  std::vector<Matrix> m_basis;

  /// k basis followed by m basis.
  std::vector<Matrix> basis() const;
  StructureConstants structure() const;
  Matrix killing() const;
  /// Checks [k,k] in k, [k,m] in m, [m,m] in k; throws PreconditionError.
  void validate() const;
};

/// "sl3-so3" (m = trace-free symmetric matrices, orthonormal for tr(XY)/2)
/// or "su2-u1" (k spanned by L3). Throws std::out_of_range.
SymmetricPair builtin_pair(const std::string& name);
std::vector<std::string> builtin_pair_names();

/// ad(k) acting on m, written in the m basis of the pair.
LieAlgebraRep isotropy_representation(const SymmetricPair& p);

/// Built-in representations: "trivial2", "so2", "so3", "so3-5dim", "g2",
/// "e12+e34". Throws std::out_of_range for an unknown name.
LieAlgebraRep builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();

}  // namespace walker
