#include "ossa/standard_form.hpp"

#include <stdexcept>
#include <utility>

namespace ossa {

namespace {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

}  // namespace

StandardForm::StandardForm(MatrixAlgebra algebra, GnsSpace l2, Matrix conj_mat)
    : algebra_(std::move(algebra)), l2_(std::move(l2)), conj_mat_(std::move(conj_mat)) {}

Vector StandardForm::apply_conj(const Vector& x) const {
  return conj_mat_ * x.conjugate();
}

Matrix StandardForm::right_rep(const Matrix& a) const {
  return conj_mat_ * l2_.pi_of(a).conjugate() * conj_mat_.conjugate();
}

StandardForm standard_form(const MatrixAlgebra& a, const Tolerance& tol) {
  const Index d = a.ambient_dim();
  Matrix trace_density = Matrix::Identity(d, d) / static_cast<double>(d);
  PositiveFunctional trace_state = functional_from_density(a, trace_density, tol);
  GnsSpace l2 = gns(a, trace_state, tol);

  // J eta(x) = eta(x^dagger): in coefficients, adjoint is u -> A_adj conj(u).
  const Index n = a.dim();
  Matrix adj_cols(d * d, n);
  for (Index k = 0; k < n; ++k) {
    adj_cols.col(k) = vec(a.basis_element(k).adjoint());
  }
  Matrix adj_coeff = a.basis_mat().adjoint() * adj_cols;
  Matrix conj_mat = l2.eta() * adj_coeff * l2.eta_pinv().conjugate();
  return StandardForm(a, std::move(l2), std::move(conj_mat));
}

Matrix relative_modular(const Matrix& psi_dens, const Matrix& omega_dens,
                        const StandardForm& sf, const Tolerance& tol) {
  const Index d = sf.algebra().ambient_dim();
  if (sf.algebra().dim() != d * d) {
    throw std::domain_error(
        "relative_modular: only full matrix factors are supported");
  }
  if (psi_dens.rows() != d || psi_dens.cols() != d || omega_dens.rows() != d ||
      omega_dens.cols() != d) {
    throw std::invalid_argument("relative_modular: density shape mismatch");
  }
  herm_power(psi_dens, 1.0, tol);  // PSD validation
  Matrix omega_inv = herm_power(omega_dens, -1.0, tol);

  // coefficients of x -> D_psi x D_omega^{-1} over the algebra basis
  const Index n = sf.algebra().dim();
  Matrix cols(d * d, n);
  for (Index k = 0; k < n; ++k) {
    cols.col(k) = vec(psi_dens * sf.algebra().basis_element(k) * omega_inv);
  }
  Matrix action = sf.algebra().basis_mat().adjoint() * cols;
  Matrix delta = sf.l2().eta() * action * sf.l2().eta_pinv();
  return 0.5 * (delta + delta.adjoint());
}

}  // namespace ossa
