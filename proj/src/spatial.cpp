#include "ossa/spatial.hpp"

#include <sstream>
#include <stdexcept>

namespace ossa {

namespace {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

// max commutator norm between the two bases
double commutation_defect(const MatrixAlgebra& a, const MatrixAlgebra& b) {
  double worst = 0.0;
  for (const Matrix& x : a.basis()) {
    for (const Matrix& y : b.basis()) {
      worst = std::max(worst, (x * y - y * x).norm());
    }
  }
  return worst;
}

}  // namespace

SpatialDerivative spatial_derivative(const PositiveFunctional& psi,
                                     const GnsSpace& g_phi, const Tolerance& tol) {
  if (!g_phi.faithful()) {
    throw std::domain_error("spatial_derivative: phi is not faithful");
  }
  const Index d = g_phi.algebra().ambient_dim();
  if (psi.algebra().ambient_dim() != d) {
    throw std::invalid_argument("spatial_derivative: ambient dimension mismatch");
  }
  // psi's algebra must be the commutant of phi's: mutual commutation plus a
  // dimension match pin it down (double commutant at finite dimension).
  const double defect = commutation_defect(psi.algebra(), g_phi.algebra());
  if (defect > 1e-8) {
    std::ostringstream msg;
    msg << "spatial_derivative: algebras do not commute, defect " << defect;
    throw std::invalid_argument(msg.str());
  }
  if (psi.algebra().dim() != commutant_dim(g_phi.algebra())) {
    throw std::invalid_argument(
        "spatial_derivative: psi's algebra is not the commutant of phi's");
  }

  // R_k = R^phi(e_k); D_kl = psi(R_l R_k^dagger) contracted in one pass.
  const Index l2 = g_phi.l2_dim();
  Matrix r_stack(d * l2, d);
  Matrix weighted_stack(d * l2, d);
  const Matrix& w_psi = psi.representative();
  for (Index k = 0; k < d; ++k) {
    Vector basis_vec = Vector::Zero(d);
    basis_vec(k) = 1.0;
    Matrix rk = r_op(g_phi, basis_vec);
    r_stack.col(k) = vec(rk);
    weighted_stack.col(k) = vec(w_psi * rk);
  }
  Matrix derivative = r_stack.adjoint() * weighted_stack;
  derivative = 0.5 * (derivative + derivative.adjoint());

  HermEig eig = herm_eig(derivative);
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  if (eig.values.minCoeff() < -(tol.atol + tol.rtol * lmax)) {
    std::ostringstream msg;
    msg << "spatial_derivative: assembled operator not PSD, eigenvalue "
        << eig.values.minCoeff();
    throw std::domain_error(msg.str());
  }
  return SpatialDerivative{std::move(derivative), psi, g_phi.functional()};
}

Matrix closed_form_tripartite(const Matrix& rho_ab, const Matrix& sigma_bc,
                              const std::array<Index, 3>& dims, TripartiteSide side,
                              const Tolerance& tol) {
  const Index da = dims[0], db = dims[1], dc = dims[2];
  if (rho_ab.rows() != da * db || rho_ab.cols() != da * db) {
    throw std::invalid_argument("closed_form_tripartite: rho_AB shape mismatch");
  }
  if (sigma_bc.rows() != db * dc || sigma_bc.cols() != db * dc) {
    throw std::invalid_argument("closed_form_tripartite: sigma_BC shape mismatch");
  }
  if (side == TripartiteSide::Coarse) {
    Matrix sigma_c = partial_trace(sigma_bc, {db, dc}, {1});
    return kron(rho_ab, herm_power(sigma_c, -1.0, tol));
  }
  Matrix rho_a = partial_trace(rho_ab, {da, db}, {0});
  return kron(rho_a, herm_power(sigma_bc, -1.0, tol));
}

}  // namespace ossa
