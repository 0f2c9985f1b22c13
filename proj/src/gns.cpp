#include "ossa/gns.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ossa {

namespace {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

struct GramFactor {
  Matrix eta;
  Matrix eta_pinv;
  bool faithful;
};

GramFactor factor_gram(const Matrix& gram, const Tolerance& tol) {
  HermEig eig = herm_eig(gram);
  const Index n = gram.rows();
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  const double cut = tol.atol + tol.rtol * lmax;
  if (eig.values.minCoeff() < -cut) {
    std::ostringstream msg;
    msg << "gns: Gram matrix not PSD, eigenvalue " << eig.values.minCoeff();
    throw std::domain_error(msg.str());
  }
  Index rank = 0;
  for (Index i = 0; i < n; ++i) {
    if (eig.values[i] > cut) ++rank;
  }
  if (rank == n) {
    RealVector root = eig.values.cwiseMax(0.0).cwiseSqrt();
    Matrix eta = eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
    Matrix pinv = eig.vectors * root.cwiseInverse().asDiagonal() * eig.vectors.adjoint();
    return GramFactor{0.5 * (eta + eta.adjoint()), 0.5 * (pinv + pinv.adjoint()), true};
  }
  // quotient chart: keep the non-null spectral directions
  Matrix eta(rank, n);
  Matrix pinv(n, rank);
  Index r = 0;
  for (Index i = 0; i < n; ++i) {
    if (eig.values[i] > cut) {
      const double s = std::sqrt(eig.values[i]);
      eta.row(r) = s * eig.vectors.col(i).adjoint();
      pinv.col(r) = eig.vectors.col(i) / s;
      ++r;
    }
  }
  return GramFactor{std::move(eta), std::move(pinv), false};
}

}  // namespace

GnsSpace::GnsSpace(MatrixAlgebra algebra, PositiveFunctional functional, Matrix gram,
                   Matrix eta, Matrix eta_pinv, bool faithful, Tolerance tol)
    : algebra_(std::move(algebra)), functional_(std::move(functional)),
      gram_(std::move(gram)), eta_(std::move(eta)), eta_pinv_(std::move(eta_pinv)),
      faithful_(faithful), tol_(tol) {}

Vector GnsSpace::checked_coefficients(const Matrix& x) const {
  Vector u = algebra_.coefficients(x);
  const double residual = (x - algebra_.from_coefficients(u)).norm();
  if (residual > 1e-8 * (1.0 + x.norm())) {
    throw std::invalid_argument("GnsSpace: matrix does not lie in the algebra");
  }
  return u;
}

Vector GnsSpace::eta_of(const Matrix& x) const {
  return eta_ * checked_coefficients(x);
}

Matrix GnsSpace::pi_of(const Matrix& x) const {
  Vector u = checked_coefficients(x);
  const Matrix a = algebra_.from_coefficients(u);
  const Index n = algebra_.dim();
  const Index d = algebra_.ambient_dim();
  Matrix products(d * d, n);
  for (Index j = 0; j < n; ++j) {
    products.col(j) = vec(a * algebra_.basis_element(j));
  }
  Matrix structure = algebra_.basis_mat().adjoint() * products;  // n x n
  return eta_ * structure * eta_pinv_;
}

Matrix GnsSpace::pi_basis(Index k) const {
  return pi_of(algebra_.basis_element(k));
}

GnsSpace gns(const MatrixAlgebra& a, const PositiveFunctional& w, const Tolerance& tol) {
  if (w.algebra().ambient_dim() != a.ambient_dim()) {
    throw std::invalid_argument("gns: functional ambient dimension mismatch");
  }
  PositiveFunctional functional(a, w.representative(), tol);

  if (a.structure()) {
    // Embedded factor: Gram = I_{df} (x) (W_F^T / d_rest) in matrix-unit order.
    const FactorStructure& fs = *a.structure();
    Matrix reduced = partial_trace(functional.representative(), fs.dims, fs.factors);
    const Index df = reduced.rows();
    const Index drest = a.ambient_dim() / df;
    Matrix block = reduced.transpose() / static_cast<double>(drest);
    GramFactor bf = factor_gram(0.5 * (block + block.adjoint()), tol);
    const Matrix id = Matrix::Identity(df, df);
    return GnsSpace(a, std::move(functional), kron(id, 0.5 * (block + block.adjoint())),
                    kron(id, bf.eta), kron(id, bf.eta_pinv), bf.faithful, tol);
  }

  Matrix gram = functional.gram();
  GramFactor gf = factor_gram(gram, tol);
  return GnsSpace(a, std::move(functional), std::move(gram), std::move(gf.eta),
                  std::move(gf.eta_pinv), gf.faithful, tol);
}

GnsInclusion gns_inclusion(const GnsSpace& g, const MatrixAlgebra& b, const Tolerance& tol) {
  if (!is_subalgebra(b, g.algebra(), tol)) {
    throw std::invalid_argument("gns_inclusion: not a subalgebra");
  }
  GnsSpace sub = gns(b, restrict_functional(g.functional(), b, tol), tol);
  // coefficients of B's basis inside A's basis
  Matrix coeffs = g.algebra().basis_mat().adjoint() * b.basis_mat();  // n_A x n_B
  Matrix isometry = g.eta() * coeffs * sub.eta_pinv();
  Matrix projection = isometry * isometry.adjoint();
  return GnsInclusion{std::move(sub), std::move(isometry),
                      0.5 * (projection + projection.adjoint())};
}

Matrix gns_subspace_projection(const GnsSpace& g, const MatrixAlgebra& b,
                               const Tolerance& tol) {
  return gns_inclusion(g, b, tol).projection;
}

Matrix r_op(const GnsSpace& g, const Vector& xi) {
  if (!g.faithful()) {
    throw std::domain_error(
        "r_op: functional not faithful; the map eta is not injective");
  }
  const Index d = g.algebra().ambient_dim();
  if (xi.size() != d) {
    throw std::invalid_argument("r_op: vector dimension mismatch");
  }
  const Index n = g.algebra().dim();
  Matrix action(d, n);
  for (Index j = 0; j < n; ++j) {
    action.col(j) = g.algebra().basis_element(j) * xi;
  }
  return action * g.eta_pinv();
}

Matrix theta(const GnsSpace& g, const Vector& xi1, const Vector& xi2) {
  Matrix r1 = r_op(g, xi1);
  Matrix r2 = r_op(g, xi2);
  return r1 * r2.adjoint();
}

double check_intertwining(const GnsSpace& g, const Matrix& a, const Matrix& aprime,
                          const Vector& xi) {
  Matrix lhs = a * aprime * r_op(g, xi);
  Matrix rhs = r_op(g, aprime * xi) * g.pi_of(a);
  return (lhs - rhs).norm();
}

}  // namespace ossa
