// standard_form.hpp — the finite-dimensional tracial standard form of a
// matrix algebra and relative modular operators of full factors.

#pragma once

#include "ossa/gns.hpp"

namespace ossa {

/// GNS space of (A, normalized ambient trace) together with the modular
/// conjugation J. J is antilinear; it is stored through the matrix K with
/// J x = K conj(x) on L^2 coordinates.
class StandardForm {
 public:
  StandardForm(MatrixAlgebra algebra, GnsSpace l2, Matrix conj_mat);

  const MatrixAlgebra& algebra() const { return algebra_; }
  const GnsSpace& l2() const { return l2_; }
  const Matrix& conj_mat() const { return conj_mat_; }

  Vector apply_conj(const Vector& x) const;

  /// a -> J pi(a) J, the commutant (right) representation on L^2.
  Matrix right_rep(const Matrix& a) const;

 private:
  MatrixAlgebra algebra_;
  GnsSpace l2_;
  Matrix conj_mat_;
};

StandardForm standard_form(const MatrixAlgebra& a, const Tolerance& tol = {});

/// The relative modular operator x -> D_psi x D_omega^{-1} of a full matrix
/// factor, expressed on the standard form's L^2 coordinates. Requires
/// omega_dens full rank and sf built on the full algebra B(H).
Matrix relative_modular(const Matrix& psi_dens, const Matrix& omega_dens,
                        const StandardForm& sf, const Tolerance& tol = {});

}  // namespace ossa
