// algebra.hpp — unital *-closed matrix algebras stored as Hilbert-Schmidt
// orthonormal bases, with commutants, inclusions, and closure of generators.

#pragma once

#include "ossa/linalg.hpp"

#include <optional>
#include <vector>

namespace ossa {

/// Marks an algebra built as B(combined factors) ⊗ identity inside a tensor
/// product; lets downstream constructions use closed-form Gram matrices.
struct FactorStructure {
  std::vector<Index> dims;  // all tensor factor dimensions
  std::vector<int> factors; // positions the algebra acts on (0-based, ascending)
};

class MatrixAlgebra {
 public:
  /// Takes ownership of an HS-orthonormal basis of d x d matrices whose span
  /// contains the identity. Orthonormality and identity membership are
  /// enforced; closure under products/adjoints is the caller's contract.
  MatrixAlgebra(Index ambient_dim, std::vector<Matrix> basis,
                std::optional<FactorStructure> structure = std::nullopt);

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& basis_element(Index k) const { return basis_.at(static_cast<size_t>(k)); }

  /// d^2 x dim matrix whose columns are the column-major vectorized basis.
  const Matrix& basis_mat() const { return basis_mat_; }

  const std::optional<FactorStructure>& structure() const { return structure_; }

  /// HS coefficients <b_i, x> of an ambient matrix against the basis.
  Vector coefficients(const Matrix& x) const;
  Matrix from_coefficients(const Vector& u) const;

  /// Frobenius distance from x to its projection onto the span.
  double span_residual(const Matrix& x) const;
  bool contains(const Matrix& x, double tol = 1e-9) const;

  /// d^2 x d^2 orthogonal projector onto the span (as vectorized matrices).
  Matrix hs_projector() const;

 private:
  Index ambient_dim_;
  std::vector<Matrix> basis_;
  Matrix basis_mat_;
  std::optional<FactorStructure> structure_;
};

/// Operators acting as the full matrix algebra on the selected tensor factors
/// and as the identity elsewhere. Basis: matrix units on the combined factor
/// space (row-major pair order) padded with normalized identities.
MatrixAlgebra factor_algebra(const std::vector<Index>& dims,
                             const std::vector<int>& factors);

/// Full matrix algebra on C^d.
MatrixAlgebra full_algebra(Index d);

/// Scalars C * I on C^d.
MatrixAlgebra scalar_algebra(Index d);

/// Smallest unital *-closed algebra containing the generators, built by
/// alternating pairwise products with Gram-Schmidt re-orthonormalization
/// until the span dimension stabilizes.
MatrixAlgebra close_generators(const std::vector<Matrix>& gens, Index ambient_dim);

/// Commutant computed as the null space of the stacked maps x -> b_i x - x b_i
/// over the d^2-dimensional matrix space.
MatrixAlgebra commutant(const MatrixAlgebra& a);

/// dim of the commutant via the spectral identity tr((sum_i b_i b_i^dagger)^-1),
/// valid for any unital *-closed algebra; O(dim * d^3) instead of a nullspace.
Index commutant_dim(const MatrixAlgebra& a);

/// Every basis element of b lies in span(a) within tolerance.
bool is_subalgebra(const MatrixAlgebra& b, const MatrixAlgebra& a,
                   const Tolerance& tol = {});

/// Conjugate every basis element by the unitary u.
MatrixAlgebra conjugate_algebra(const MatrixAlgebra& a, const Matrix& u);

/// Max residual of products b_i b_j and adjoints b_i^dagger against the span;
/// the numerical closure defect of the basis.
double closure_residual(const MatrixAlgebra& a);

}  // namespace ossa
