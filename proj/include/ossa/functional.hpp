// functional.hpp — positive linear functionals on matrix algebras (the
// finite-dimensional stand-ins for normal semifinite weights) and
// purifications of full-rank densities.

#pragma once

#include "ossa/algebra.hpp"

namespace ossa {

/// omega(x) = tr(D x) with D a PSD ambient representative. Restriction to a
/// subalgebra keeps the representative and rebinds the algebra.
class PositiveFunctional {
 public:
  PositiveFunctional(MatrixAlgebra algebra, Matrix representative,
                     const Tolerance& tol = {});

  const MatrixAlgebra& algebra() const { return algebra_; }
  const Matrix& representative() const { return rep_; }
  bool normalized() const { return normalized_; }

  Complex value(const Matrix& x) const;
  double real_value(const Matrix& x) const;

  /// Gram matrix G_ij = omega(b_i^dagger b_j) over the algebra basis.
  Matrix gram() const;

 private:
  MatrixAlgebra algebra_;
  Matrix rep_;
  bool normalized_;
};

PositiveFunctional functional_from_density(const MatrixAlgebra& a, const Matrix& d,
                                           const Tolerance& tol = {});

PositiveFunctional restrict_functional(const PositiveFunctional& w,
                                       const MatrixAlgebra& b,
                                       const Tolerance& tol = {});

/// Gram matrix positive definite: min eig > tol * max eig.
bool is_faithful(const PositiveFunctional& w, double tol = 1e-9);

/// sigma on H_X, the unnormalized maximally entangled vector on H_X (x) H_X,
/// and the purifying vector (sigma^{1/2} (x) I) Omega.
struct PurificationPair {
  Matrix sigma;
  Vector omega;
  Vector omega_sigma;
};

/// Requires sigma PSD, full rank, trace 1.
PurificationPair purify(const Matrix& sigma, const Tolerance& tol = {});

/// sum_i e_i (x) e_i; squared norm d.
Vector max_entangled(Index d);

}  // namespace ossa
