#include "ossa/functional.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ossa {

PositiveFunctional::PositiveFunctional(MatrixAlgebra algebra, Matrix representative,
                                       const Tolerance& tol)
    : algebra_(std::move(algebra)), rep_(std::move(representative)) {
  if (rep_.rows() != algebra_.ambient_dim() || rep_.cols() != algebra_.ambient_dim()) {
    throw std::invalid_argument("PositiveFunctional: representative has wrong shape");
  }
  HermEig eig = herm_eig(rep_, tol);
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  if (eig.values.minCoeff() < -(tol.atol + tol.rtol * lmax)) {
    std::ostringstream msg;
    msg << "PositiveFunctional: representative not PSD, eigenvalue "
        << eig.values.minCoeff();
    throw std::domain_error(msg.str());
  }
  normalized_ = std::abs(rep_.trace().real() - 1.0) <= 1e-9 &&
                std::abs(rep_.trace().imag()) <= 1e-9;
}

Complex PositiveFunctional::value(const Matrix& x) const {
  if (x.rows() != rep_.rows() || x.cols() != rep_.cols()) {
    throw std::invalid_argument("PositiveFunctional::value: shape mismatch");
  }
  return (rep_ * x).trace();
}

double PositiveFunctional::real_value(const Matrix& x) const {
  return value(x).real();
}

Matrix PositiveFunctional::gram() const {
  const Index n = algebra_.dim();
  const Index d = algebra_.ambient_dim();
  // G_ij = tr(D b_i^dagger b_j) = <b_i, b_j D>_HS
  Matrix weighted(d * d, n);
  for (Index j = 0; j < n; ++j) {
    Matrix bd = algebra_.basis_element(j) * rep_;
    weighted.col(j) = Eigen::Map<const Vector>(bd.data(), bd.size());
  }
  Matrix g = algebra_.basis_mat().adjoint() * weighted;
  return 0.5 * (g + g.adjoint());
}

PositiveFunctional functional_from_density(const MatrixAlgebra& a, const Matrix& d,
                                           const Tolerance& tol) {
  return PositiveFunctional(a, d, tol);
}

PositiveFunctional restrict_functional(const PositiveFunctional& w,
                                       const MatrixAlgebra& b, const Tolerance& tol) {
  if (!is_subalgebra(b, w.algebra(), tol)) {
    throw std::invalid_argument("restrict_functional: target is not a subalgebra");
  }
  return PositiveFunctional(b, w.representative(), tol);
}

bool is_faithful(const PositiveFunctional& w, double tol) {
  HermEig eig = herm_eig(w.gram());
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  return eig.values.minCoeff() > tol * lmax;
}

PurificationPair purify(const Matrix& sigma, const Tolerance& tol) {
  if (sigma.rows() != sigma.cols()) {
    throw std::invalid_argument("purify: sigma must be square");
  }
  const Index d = sigma.rows();
  HermEig eig = herm_eig(sigma, tol);
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  if (eig.values.minCoeff() <= tol.atol * lmax) {
    std::ostringstream msg;
    msg << "purify: sigma rank-deficient, eigenvalue " << eig.values.minCoeff();
    throw std::domain_error(msg.str());
  }
  if (std::abs(sigma.trace().real() - 1.0) > 1e-9) {
    throw std::domain_error("purify: sigma must have trace 1");
  }
  Matrix root = herm_power(sigma, 0.5, tol);
  Vector omega = max_entangled(d);
  Vector omega_sigma = kron(root, Matrix::Identity(d, d)) * omega;
  return PurificationPair{sigma, std::move(omega), std::move(omega_sigma)};
}

Vector max_entangled(Index d) {
  if (d < 1) throw std::invalid_argument("max_entangled: dimension must be >= 1");
  Vector v = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0;
  return v;
}

}  // namespace ossa
