// linalg.hpp — dense complex primitives: Kronecker products, partial traces,
// Hermitian eigendecompositions, matrix powers on supports, Loewner-order tests.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ossa {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Absolute/relative slack used by every PSD check and Loewner comparison.
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermEig {
  RealVector values;
  Matrix vectors;  // unitary; columns are eigenvectors

  Matrix reconstruct() const;
};

struct LoewnerResult {
  bool leq;       // a <= b up to tolerance
  double margin;  // minimum eigenvalue of b - a
  double scale;   // operator norm of b - a
};

double max_abs(const Matrix& m);
double frobenius(const Matrix& m);

// max entry of |m - m^dagger|; square input required
double hermiticity_residual(const Matrix& m);

// residual <= 1e-12 * (1 + max|m|)
bool is_hermitian(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c);

/// Trace out the factors not listed in `keep` (0-based, ascending output order).
/// `dims` are the tensor factor dimensions; their product must match the size
/// of the square matrix x. keep == all factors is the identity, keep == {}
/// yields the 1x1 matrix holding tr(x).
Matrix partial_trace(const Matrix& x, const std::vector<Index>& dims,
                     const std::vector<int>& keep);

HermEig herm_eig(const Matrix& m, const Tolerance& tol = {});

/// margin = min eig(b - a); leq iff margin >= -(atol + rtol * opnorm(b - a)).
LoewnerResult loewner_leq(const Matrix& a, const Matrix& b,
                          const Tolerance& tol = {});

/// U diag(values^p) U^dagger. Requires m PSD within tol; negative powers
/// additionally require full numerical rank (min eig > atol * max eig).
Matrix herm_power(const Matrix& m, double p, const Tolerance& tol = {});

double opnorm_hermitian(const Matrix& m);

}  // namespace ossa
