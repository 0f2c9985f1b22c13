// gns.hpp — GNS construction L^2(A, omega) for a positive functional on a
// matrix algebra, with the bounded-vector operators R(xi), the commutant
// elements theta(xi1, xi2), and inclusions of GNS spaces for subalgebras.

#pragma once

#include "ossa/functional.hpp"

namespace ossa {

/// Concrete chart for L^2(A, omega): coordinates are eta = E u where u is the
/// coefficient vector of an algebra element and E is a full-row-rank factor of
/// the Gram matrix G = E^dagger E. For faithful omega, E is the symmetric
/// square root G^{1/2}; otherwise the rank-truncated spectral factor (the
/// quotient by the null ideal, flagged via faithful()).
class GnsSpace {
 public:
  GnsSpace(MatrixAlgebra algebra, PositiveFunctional functional, Matrix gram,
           Matrix eta, Matrix eta_pinv, bool faithful, Tolerance tol);

  const MatrixAlgebra& algebra() const { return algebra_; }
  const PositiveFunctional& functional() const { return functional_; }
  const Matrix& gram() const { return gram_; }
  Index l2_dim() const { return eta_.rows(); }
  const Matrix& eta() const { return eta_; }
  const Matrix& eta_pinv() const { return eta_pinv_; }
  bool faithful() const { return faithful_; }
  const Tolerance& tolerance() const { return tol_; }

  /// eta(x) for x in span(A).
  Vector eta_of(const Matrix& x) const;

  /// Left-multiplication representation pi(x) on L^2, for x in span(A).
  Matrix pi_of(const Matrix& x) const;
  Matrix pi_basis(Index k) const;

 private:
  MatrixAlgebra algebra_;
  PositiveFunctional functional_;
  Matrix gram_;      // dim(A) x dim(A)
  Matrix eta_;       // l2_dim x dim(A)
  Matrix eta_pinv_;  // dim(A) x l2_dim
  bool faithful_;
  Tolerance tol_;

  Vector checked_coefficients(const Matrix& x) const;
};

/// Builds the GNS space. Uses a closed-form Gram factorization when the
/// algebra carries factor structure (Gram = I (x) reduced-density transpose),
/// and the generic symmetric square root otherwise.
GnsSpace gns(const MatrixAlgebra& a, const PositiveFunctional& w,
             const Tolerance& tol = {});

/// GNS space of the restricted functional together with the isometry
/// V : L^2(B, omega|_B) -> L^2(A, omega) and the projection P = V V^dagger
/// onto the image subspace.
struct GnsInclusion {
  GnsSpace sub;
  Matrix isometry;    // l2(A) x l2(B)
  Matrix projection;  // l2(A) x l2(A)
};

GnsInclusion gns_inclusion(const GnsSpace& g, const MatrixAlgebra& b,
                           const Tolerance& tol = {});

/// Orthogonal projection of L^2(A, omega) onto L^2(B, omega|_B).
Matrix gns_subspace_projection(const GnsSpace& g, const MatrixAlgebra& b,
                               const Tolerance& tol = {});

/// The map L^2 -> H determined by R eta(a) = a xi. Requires a faithful
/// functional; at finite dimension every vector is then omega-bounded.
Matrix r_op(const GnsSpace& g, const Vector& xi);

/// theta(xi1, xi2) = R(xi1) R(xi2)^dagger, an element of the commutant of A.
Matrix theta(const GnsSpace& g, const Vector& xi1, const Vector& xi2);

/// Frobenius residual of a a' R(xi) - R(a' xi) pi(a) for a in A, a' in A'.
double check_intertwining(const GnsSpace& g, const Matrix& a, const Matrix& aprime,
                          const Vector& xi);

}  // namespace ossa
