#include "ossa/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ossa {

namespace {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace

MatrixAlgebra::MatrixAlgebra(Index ambient_dim, std::vector<Matrix> basis,
                             std::optional<FactorStructure> structure)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)),
      structure_(std::move(structure)) {
  if (ambient_dim_ < 1) {
    throw std::invalid_argument("MatrixAlgebra: ambient dimension must be >= 1");
  }
  if (basis_.empty()) {
    throw std::invalid_argument("MatrixAlgebra: basis must be nonempty");
  }
  if (dim() > ambient_dim_ * ambient_dim_) {
    throw std::invalid_argument("MatrixAlgebra: basis larger than the matrix space");
  }
  basis_mat_.resize(ambient_dim_ * ambient_dim_, dim());
  for (Index k = 0; k < dim(); ++k) {
    const Matrix& b = basis_[static_cast<size_t>(k)];
    if (b.rows() != ambient_dim_ || b.cols() != ambient_dim_) {
      throw std::invalid_argument("MatrixAlgebra: basis element has wrong shape");
    }
    basis_mat_.col(k) = vec(b);
  }
  Matrix gram = basis_mat_.adjoint() * basis_mat_;
  const double ortho = max_abs(gram - Matrix::Identity(dim(), dim()));
  if (ortho > 1e-10) {
    std::ostringstream msg;
    msg << "MatrixAlgebra: basis not HS-orthonormal, defect " << ortho;
    throw std::invalid_argument(msg.str());
  }
  const Matrix id = Matrix::Identity(ambient_dim_, ambient_dim_);
  if (span_residual(id) > 1e-8 * std::sqrt(static_cast<double>(ambient_dim_))) {
    throw std::invalid_argument("MatrixAlgebra: span does not contain the identity");
  }
}

Vector MatrixAlgebra::coefficients(const Matrix& x) const {
  if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_) {
    throw std::invalid_argument("MatrixAlgebra::coefficients: shape mismatch");
  }
  return basis_mat_.adjoint() * vec(x);
}

Matrix MatrixAlgebra::from_coefficients(const Vector& u) const {
  if (u.size() != dim()) {
    throw std::invalid_argument("MatrixAlgebra::from_coefficients: size mismatch");
  }
  return unvec(basis_mat_ * u, ambient_dim_, ambient_dim_);
}

double MatrixAlgebra::span_residual(const Matrix& x) const {
  return (x - from_coefficients(coefficients(x))).norm();
}

bool MatrixAlgebra::contains(const Matrix& x, double tol) const {
  return span_residual(x) <= tol * (1.0 + x.norm());
}

Matrix MatrixAlgebra::hs_projector() const {
  return basis_mat_ * basis_mat_.adjoint();
}

MatrixAlgebra factor_algebra(const std::vector<Index>& dims,
                             const std::vector<int>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("factor_algebra: factor subset must be nonempty");
  }
  for (Index d : dims) {
    if (d < 1) throw std::invalid_argument("factor_algebra: dims entries must be >= 1");
  }
  std::vector<int> fac = factors;
  std::sort(fac.begin(), fac.end());
  fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
  const int nfac = static_cast<int>(dims.size());
  for (int f : fac) {
    if (f < 0 || f >= nfac) {
      throw std::invalid_argument("factor_algebra: factor index out of range");
    }
  }

  Index ambient = 1;
  for (Index d : dims) ambient *= d;
  Index df = 1;  // combined dimension of the selected factors
  for (int f : fac) df *= dims[static_cast<size_t>(f)];
  Index drest = ambient / df;
  const double pad_scale = 1.0 / std::sqrt(static_cast<double>(drest));

  // digits of a combined-factor index, most significant factor first
  auto digits = [&](Index flat) {
    std::vector<Index> dg(fac.size());
    for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
      const size_t pos = static_cast<size_t>(it - fac.rbegin());
      const Index d = dims[static_cast<size_t>(*it)];
      dg[fac.size() - 1 - pos] = flat % d;
      flat /= d;
    }
    return dg;
  };

  std::vector<Matrix> basis;
  basis.reserve(static_cast<size_t>(df * df));
  for (Index bi = 0; bi < df; ++bi) {
    const std::vector<Index> rowd = digits(bi);
    for (Index bj = 0; bj < df; ++bj) {
      const std::vector<Index> cold = digits(bj);
      Matrix elem = Matrix::Identity(1, 1);
      size_t sel = 0;
      for (int f = 0; f < nfac; ++f) {
        const Index d = dims[static_cast<size_t>(f)];
        if (sel < fac.size() && fac[sel] == f) {
          Matrix unit = Matrix::Zero(d, d);
          unit(rowd[sel], cold[sel]) = 1.0;
          elem = kron(elem, unit);
          ++sel;
        } else {
          elem = kron(elem, Matrix::Identity(d, d));
        }
      }
      basis.push_back(pad_scale * elem);
    }
  }
  return MatrixAlgebra(ambient, std::move(basis), FactorStructure{dims, fac});
}

MatrixAlgebra full_algebra(Index d) {
  return factor_algebra({d}, {0});
}

MatrixAlgebra scalar_algebra(Index d) {
  std::vector<Matrix> basis;
  basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  return MatrixAlgebra(d, std::move(basis));
}

namespace {

// Appends v (vectorized candidate) to the orthonormal column set if its
// residual exceeds the rank tolerance. Re-orthogonalizes twice.
bool gram_schmidt_append(std::vector<Vector>& cols, const Vector& v, double rank_tol) {
  const double scale = v.norm();
  if (scale <= rank_tol) return false;
  Vector r = v;
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& q : cols) r -= q * (q.dot(r));
  }
  if (r.norm() <= rank_tol * scale) return false;
  cols.push_back(r / r.norm());
  return true;
}

}  // namespace

MatrixAlgebra close_generators(const std::vector<Matrix>& gens, Index ambient_dim) {
  const Index d = ambient_dim;
  const double rank_tol = 1e-9;
  for (const Matrix& g : gens) {
    if (g.rows() != d || g.cols() != d) {
      throw std::invalid_argument("close_generators: generator has wrong shape");
    }
  }

  std::vector<Vector> cols;
  gram_schmidt_append(cols, vec(Matrix::Identity(d, d)), rank_tol);
  for (const Matrix& g : gens) {
    gram_schmidt_append(cols, vec(g), rank_tol);
    gram_schmidt_append(cols, vec(Matrix(g.adjoint())), rank_tol);
  }

  // Alternate adjoining adjoints and pairwise products until stable.
  while (true) {
    const size_t before = cols.size();
    const size_t snapshot = cols.size();
    for (size_t i = 0; i < snapshot && cols.size() < static_cast<size_t>(d * d); ++i) {
      const Matrix bi = unvec(cols[i], d, d);
      gram_schmidt_append(cols, vec(Matrix(bi.adjoint())), rank_tol);
      for (size_t j = 0; j < snapshot && cols.size() < static_cast<size_t>(d * d); ++j) {
        const Matrix bj = unvec(cols[j], d, d);
        gram_schmidt_append(cols, vec(Matrix(bi * bj)), rank_tol);
      }
    }
    if (cols.size() == before || cols.size() >= static_cast<size_t>(d * d)) break;
  }

  std::vector<Matrix> basis;
  basis.reserve(cols.size());
  for (const Vector& c : cols) basis.push_back(unvec(c, d, d));
  return MatrixAlgebra(d, std::move(basis));
}

MatrixAlgebra commutant(const MatrixAlgebra& a) {
  const Index d = a.ambient_dim();
  const Index dd = d * d;
  const Matrix id = Matrix::Identity(d, d);

  // x commutes with every b_i iff vec(x) lies in the kernel of
  // K = sum_i L_i^dagger L_i with L_i = I (x) b_i - b_i^T (x) I.
  Matrix k_op = Matrix::Zero(dd, dd);
  for (const Matrix& b : a.basis()) {
    Matrix l = kron(id, b) - kron(b.transpose(), id);
    k_op.noalias() += l.adjoint() * l;
  }
  HermEig eig = herm_eig(0.5 * (k_op + k_op.adjoint()));
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  const double cut = 1e-12 + 1e-9 * lmax;

  std::vector<Matrix> basis;
  for (Index i = 0; i < dd; ++i) {
    if (eig.values[i] <= cut) {
      basis.push_back(unvec(eig.vectors.col(i), d, d));
    }
  }
  return MatrixAlgebra(d, std::move(basis));
}

Index commutant_dim(const MatrixAlgebra& a) {
  const Index d = a.ambient_dim();
  Matrix phi = Matrix::Zero(d, d);
  for (const Matrix& b : a.basis()) phi.noalias() += b * b.adjoint();
  // phi = sum b b^dagger is basis-independent and positive definite for a
  // unital algebra; its inverse trace counts the commutant dimension.
  HermEig eig = herm_eig(0.5 * (phi + phi.adjoint()));
  if (eig.values.minCoeff() <= 1e-10 * eig.values.maxCoeff()) {
    throw std::domain_error("commutant_dim: basis does not span a unital algebra");
  }
  double total = 0.0;
  for (Index i = 0; i < d; ++i) total += 1.0 / eig.values[i];
  const double rounded = std::round(total);
  if (std::abs(total - rounded) > 1e-6 * (1.0 + std::abs(total))) {
    throw std::domain_error("commutant_dim: non-integer dimension, input is not an algebra");
  }
  return static_cast<Index>(rounded);
}

bool is_subalgebra(const MatrixAlgebra& b, const MatrixAlgebra& a, const Tolerance& tol) {
  if (b.ambient_dim() != a.ambient_dim()) {
    throw std::invalid_argument("is_subalgebra: ambient dimension mismatch");
  }
  const double allowed = tol.atol + tol.rtol;
  for (const Matrix& elem : b.basis()) {
    if (a.span_residual(elem) > allowed) return false;
  }
  return true;
}

MatrixAlgebra conjugate_algebra(const MatrixAlgebra& a, const Matrix& u) {
  if (u.rows() != a.ambient_dim() || u.cols() != a.ambient_dim()) {
    throw std::invalid_argument("conjugate_algebra: unitary has wrong shape");
  }
  std::vector<Matrix> basis;
  basis.reserve(static_cast<size_t>(a.dim()));
  for (const Matrix& b : a.basis()) basis.push_back(u * b * u.adjoint());
  return MatrixAlgebra(a.ambient_dim(), std::move(basis));
}

double closure_residual(const MatrixAlgebra& a) {
  double worst = 0.0;
  for (const Matrix& bi : a.basis()) {
    worst = std::max(worst, a.span_residual(bi.adjoint()));
    for (const Matrix& bj : a.basis()) {
      worst = std::max(worst, a.span_residual(bi * bj));
    }
  }
  return worst;
}

}  // namespace ossa
