#include "ossa/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ossa {

Matrix HermEig::reconstruct() const {
  return vectors * values.asDiagonal() * vectors.adjoint();
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double frobenius(const Matrix& m) { return m.norm(); }

double hermiticity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_residual: matrix must be square");
  }
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_residual(m) <= 1e-12 * (1.0 + max_abs(m));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out = Eigen::kroneckerProduct(a, b);
  return out;
}

Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) {
  return kron(kron(a, b), c);
}

Matrix partial_trace(const Matrix& x, const std::vector<Index>& dims,
                     const std::vector<int>& keep) {
  if (x.rows() != x.cols()) {
    throw std::invalid_argument("partial_trace: matrix must be square");
  }
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: factor dims must be >= 1");
    total *= d;
  }
  if (total != x.rows()) {
    std::ostringstream msg;
    msg << "partial_trace: dims product " << total << " does not match matrix size "
        << x.rows();
    throw std::invalid_argument(msg.str());
  }

  const int nfac = static_cast<int>(dims.size());
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (int f : kept) {
    if (f < 0 || f >= nfac) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
  }
  std::vector<int> traced;
  for (int f = 0; f < nfac; ++f) {
    if (!std::binary_search(kept.begin(), kept.end(), f)) traced.push_back(f);
  }

  // stride of factor f inside the composite index (factor 0 most significant)
  std::vector<Index> stride(nfac, 1);
  for (int f = nfac - 2; f >= 0; --f) stride[f] = stride[f + 1] * dims[f + 1];

  Index dim_keep = 1;
  for (int f : kept) dim_keep *= dims[f];
  Index dim_trace = 1;
  for (int f : traced) dim_trace *= dims[f];

  // base offset of a composite multi-index restricted to a factor subset
  auto offset = [&](const std::vector<int>& subset, Index flat) {
    Index off = 0;
    for (auto it = subset.rbegin(); it != subset.rend(); ++it) {
      const Index d = dims[*it];
      off += (flat % d) * stride[*it];
      flat /= d;
    }
    return off;
  };

  std::vector<Index> keep_off(dim_keep), trace_off(dim_trace);
  for (Index i = 0; i < dim_keep; ++i) keep_off[i] = offset(kept, i);
  for (Index t = 0; t < dim_trace; ++t) trace_off[t] = offset(traced, t);

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Index i = 0; i < dim_keep; ++i) {
    for (Index j = 0; j < dim_keep; ++j) {
      Complex acc = 0.0;
      for (Index t = 0; t < dim_trace; ++t) {
        acc += x(keep_off[i] + trace_off[t], keep_off[j] + trace_off[t]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

HermEig herm_eig(const Matrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("herm_eig: matrix must be square");
  }
  const double asym = hermiticity_residual(m);
  const double allowed = tol.atol + tol.rtol * (1.0 + max_abs(m));
  if (asym > allowed) {
    std::ostringstream msg;
    msg << "herm_eig: input not Hermitian, asymmetry " << asym << " exceeds " << allowed;
    throw std::domain_error(msg.str());
  }
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eig: eigensolver failed to converge");
  }
  return HermEig{solver.eigenvalues(), solver.eigenvectors()};
}

LoewnerResult loewner_leq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("loewner_leq: shape mismatch");
  }
  HermEig eig = herm_eig(b - a, tol);
  const double margin = eig.values.size() ? eig.values.minCoeff() : 0.0;
  const double scale = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  return LoewnerResult{margin >= -(tol.atol + tol.rtol * scale), margin, scale};
}

Matrix herm_power(const Matrix& m, double p, const Tolerance& tol) {
  HermEig eig = herm_eig(m, tol);
  const Index n = eig.values.size();
  const double lmax = n ? std::max(eig.values.maxCoeff(), 0.0) : 0.0;
  const double psd_slack = tol.atol + tol.rtol * lmax;
  const double lmin = n ? eig.values.minCoeff() : 0.0;
  if (lmin < -psd_slack) {
    std::ostringstream msg;
    msg << "herm_power: input not PSD, eigenvalue " << lmin << " below -" << psd_slack;
    throw std::domain_error(msg.str());
  }
  if (p < 0.0 && lmin <= tol.atol * lmax) {
    std::ostringstream msg;
    msg << "herm_power: negative power on rank-deficient input, eigenvalue " << lmin
        << " vs max " << lmax;
    throw std::domain_error(msg.str());
  }

  RealVector powered(n);
  for (Index i = 0; i < n; ++i) {
    const double v = (p < 0.0) ? eig.values[i] : std::max(eig.values[i], 0.0);
    powered[i] = (p == 0.0) ? 1.0 : std::pow(v, p);
  }
  Matrix out = eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

double opnorm_hermitian(const Matrix& m) {
  HermEig eig = herm_eig(m);
  return eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace ossa
