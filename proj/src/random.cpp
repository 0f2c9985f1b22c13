#include "ossa/random.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ossa {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kForkSalt = 0xD1B54A32D192ED03ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : key_(mix64(seed + kGamma)) {}

RandomStream RandomStream::fork(std::uint64_t tag) const {
  RandomStream child;
  child.key_ = mix64((key_ ^ kForkSalt) + mix64(tag + kGamma));
  return child;
}

std::uint64_t RandomStream::next_u64() {
  ++counter_;
  return mix64(key_ + kGamma * counter_);
}

double RandomStream::uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::gauss() {
  const double u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex RandomStream::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return Complex(re, im);
}

Vector random_vector(Index d, RandomStream& rng) {
  if (d < 1) throw std::invalid_argument("random_vector: dimension must be >= 1");
  Vector v(d);
  for (Index i = 0; i < d; ++i) v(i) = rng.cgauss();
  return v;
}

Vector random_pure(Index d, RandomStream& rng) {
  Vector v = random_vector(d, rng);
  return v / v.norm();
}

Matrix random_matrix(Index rows, Index cols, RandomStream& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.cgauss();
  }
  return m;
}

Matrix random_hermitian(Index d, RandomStream& rng) {
  Matrix m = random_matrix(d, d, rng);
  return 0.5 * (m + m.adjoint());
}

Matrix random_density(Index d, Index rank, RandomStream& rng) {
  if (rank < 1 || rank > d) {
    throw std::invalid_argument("random_density: rank must be in [1, d]");
  }
  Matrix g = random_matrix(d, rank, rng);
  Matrix dens = g * g.adjoint();
  dens /= dens.trace().real();
  dens = 0.5 * (dens + dens.adjoint());
  // generated states must enter suites PSD with unit trace
  HermEig eig = herm_eig(dens);
  if (eig.values.minCoeff() < -1e-12 || std::abs(dens.trace().real() - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "random_density: generated state failed validation (stream key "
        << rng.key() << ")";
    throw std::runtime_error(msg.str());
  }
  return dens;
}

Matrix random_full_rank_density(Index d, RandomStream& rng, double min_eig_ratio,
                                int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Matrix dens = random_density(d, d, rng);
    HermEig eig = herm_eig(dens);
    if (eig.values.minCoeff() > min_eig_ratio * eig.values.maxCoeff()) return dens;
  }
  std::ostringstream msg;
  msg << "random_full_rank_density: no well-conditioned draw after " << max_tries
      << " attempts (stream key " << rng.key() << ")";
  throw std::runtime_error(msg.str());
}

Matrix random_density_ridged(Index d, RandomStream& rng, double ridge) {
  Matrix dens = random_density(d, d, rng);
  Matrix out = (dens + (ridge / static_cast<double>(d)) * Matrix::Identity(d, d)) /
               (1.0 + ridge);
  return 0.5 * (out + out.adjoint());
}

Matrix random_unitary(Index d, RandomStream& rng) {
  Matrix g = random_matrix(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  Vector phases(d);
  for (Index i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    phases(i) = (std::abs(rii) > 1e-300) ? rii / std::abs(rii) : Complex(1.0, 0.0);
  }
  return q * phases.asDiagonal();
}

MatrixAlgebra pattern_algebra(Index d, SubalgebraPattern pattern, Index block_size) {
  switch (pattern) {
    case SubalgebraPattern::Diagonal: {
      std::vector<Matrix> basis;
      for (Index i = 0; i < d; ++i) {
        Matrix e = Matrix::Zero(d, d);
        e(i, i) = 1.0;
        basis.push_back(std::move(e));
      }
      return MatrixAlgebra(d, std::move(basis));
    }
    case SubalgebraPattern::Block: {
      if (block_size < 1 || d % block_size != 0) {
        throw std::invalid_argument("pattern_algebra: block size must divide d");
      }
      std::vector<Matrix> basis;
      const Index blocks = d / block_size;
      for (Index b = 0; b < blocks; ++b) {
        for (Index i = 0; i < block_size; ++i) {
          for (Index j = 0; j < block_size; ++j) {
            Matrix e = Matrix::Zero(d, d);
            e(b * block_size + i, b * block_size + j) = 1.0;
            basis.push_back(std::move(e));
          }
        }
      }
      return MatrixAlgebra(d, std::move(basis));
    }
    case SubalgebraPattern::FactorSplit: {
      Index p = 0;
      for (Index k = 2; k * k <= d; ++k) {
        if (d % k == 0) {
          p = k;
          break;
        }
      }
      if (p == 0) {
        throw std::invalid_argument(
            "pattern_algebra: factor split needs a composite ambient dimension");
      }
      const Index q = d / p;
      std::vector<Matrix> basis;
      const Matrix pad = Matrix::Identity(q, q) / std::sqrt(static_cast<double>(q));
      for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < p; ++j) {
          Matrix unit = Matrix::Zero(p, p);
          unit(i, j) = 1.0;
          basis.push_back(kron(unit, pad));
        }
      }
      return MatrixAlgebra(d, std::move(basis));
    }
  }
  throw std::invalid_argument("pattern_algebra: unknown pattern");
}

MatrixAlgebra pattern_commutant(Index d, SubalgebraPattern pattern, Index block_size) {
  switch (pattern) {
    case SubalgebraPattern::Diagonal:
      return pattern_algebra(d, SubalgebraPattern::Diagonal);
    case SubalgebraPattern::Block: {
      if (block_size < 1 || d % block_size != 0) {
        throw std::invalid_argument("pattern_commutant: block size must divide d");
      }
      std::vector<Matrix> basis;
      const Index blocks = d / block_size;
      const double scale = 1.0 / std::sqrt(static_cast<double>(block_size));
      for (Index b = 0; b < blocks; ++b) {
        Matrix e = Matrix::Zero(d, d);
        for (Index i = 0; i < block_size; ++i) e(b * block_size + i, b * block_size + i) = scale;
        basis.push_back(std::move(e));
      }
      return MatrixAlgebra(d, std::move(basis));
    }
    case SubalgebraPattern::FactorSplit: {
      Index p = 0;
      for (Index k = 2; k * k <= d; ++k) {
        if (d % k == 0) {
          p = k;
          break;
        }
      }
      if (p == 0) {
        throw std::invalid_argument(
            "pattern_commutant: factor split needs a composite ambient dimension");
      }
      const Index q = d / p;
      std::vector<Matrix> basis;
      const Matrix pad = Matrix::Identity(p, p) / std::sqrt(static_cast<double>(p));
      for (Index i = 0; i < q; ++i) {
        for (Index j = 0; j < q; ++j) {
          Matrix unit = Matrix::Zero(q, q);
          unit(i, j) = 1.0;
          basis.push_back(kron(pad, unit));
        }
      }
      return MatrixAlgebra(d, std::move(basis));
    }
  }
  throw std::invalid_argument("pattern_commutant: unknown pattern");
}

MatrixAlgebra random_subalgebra(Index ambient_dim, SubalgebraPattern pattern,
                                Index block_size, RandomStream& rng) {
  MatrixAlgebra base = pattern_algebra(ambient_dim, pattern, block_size);
  Matrix u = random_unitary(ambient_dim, rng);
  return conjugate_algebra(base, u);
}

}  // namespace ossa
