#include "ossa/verify.hpp"

#include "ossa/random.hpp"
#include "ossa/serialize.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ossa {

namespace {

void validate_tripartite(const Matrix& rho_ab, const Matrix& sigma_bc, const Dims3& dims) {
  const Index dab = dims[0] * dims[1];
  const Index dbc = dims[1] * dims[2];
  if (rho_ab.rows() != dab || rho_ab.cols() != dab) {
    std::ostringstream msg;
    msg << "tripartite check: rho_AB is " << rho_ab.rows() << "x" << rho_ab.cols()
        << ", expected " << dab << "x" << dab;
    throw std::invalid_argument(msg.str());
  }
  if (sigma_bc.rows() != dbc || sigma_bc.cols() != dbc) {
    std::ostringstream msg;
    msg << "tripartite check: sigma_BC is " << sigma_bc.rows() << "x" << sigma_bc.cols()
        << ", expected " << dbc << "x" << dbc;
    throw std::invalid_argument(msg.str());
  }
}

VerificationReport from_loewner(const std::string& name, const LoewnerResult& lo,
                                const Tolerance& tol) {
  VerificationReport rep;
  rep.check_name = name;
  rep.passed = lo.leq;
  rep.margin = lo.margin;
  rep.scale = lo.scale;
  rep.tolerance = tol;
  return rep;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{{"check", check_name}, {"passed", passed}, {"margin", margin},
                   {"scale", scale},      {"trials", trials}, {"seed", seed},
                   {"tolerance", {{"atol", tolerance.atol}, {"rtol", tolerance.rtol}}}};
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

double von_neumann_entropy(const Matrix& rho) {
  HermEig eig = herm_eig(rho);
  double s = 0.0;
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda > 1e-14) s -= lambda * std::log(lambda);
  }
  return s;
}

VerificationReport check_operator_ssa(const Matrix& rho_ab, const Matrix& sigma_bc,
                                      const Dims3& dims, const Tolerance& tol) {
  validate_tripartite(rho_ab, sigma_bc, dims);
  Matrix coarse = closed_form_tripartite(rho_ab, sigma_bc, dims, TripartiteSide::Coarse, tol);
  Matrix fine = closed_form_tripartite(rho_ab, sigma_bc, dims, TripartiteSide::Fine, tol);
  VerificationReport rep = from_loewner("operator_ssa", loewner_leq(coarse, fine, tol), tol);
  if (!rep.passed) {
    rep.witness = {{"rho_ab", matrix_to_json(rho_ab)}, {"sigma_bc", matrix_to_json(sigma_bc)}};
  }
  return rep;
}

VerificationReport check_trace_form(const Matrix& x, const Matrix& sigma_bc,
                                    const Dims3& dims, const Tolerance& tol) {
  const Index da = dims[0], db = dims[1], dc = dims[2];
  const Index d = da * db * dc;
  if (x.rows() != d || x.cols() != d) {
    std::ostringstream msg;
    msg << "check_trace_form: X is " << x.rows() << "x" << x.cols() << ", expected "
        << d << "x" << d;
    throw std::invalid_argument(msg.str());
  }
  if (sigma_bc.rows() != db * dc || sigma_bc.cols() != db * dc) {
    throw std::invalid_argument("check_trace_form: sigma_BC shape mismatch");
  }

  Matrix sigma_c = partial_trace(sigma_bc, {db, dc}, {1});
  Matrix sc_half_inv = kron(Matrix::Identity(da * db, da * db),
                            herm_power(sigma_c, -0.5, tol));
  Matrix sbc_half_inv = kron(Matrix::Identity(da, da),
                             herm_power(sigma_bc, -0.5, tol));

  Matrix lhs_ab = partial_trace(sc_half_inv * x * sc_half_inv, {da * db, dc}, {0});
  Matrix rhs_a = partial_trace(sbc_half_inv * x * sbc_half_inv, {da, db * dc}, {0});
  Matrix rhs_padded = kron(rhs_a, Matrix::Identity(db, db));

  VerificationReport rep = from_loewner("trace_form", loewner_leq(lhs_ab, rhs_padded, tol), tol);
  if (!rep.passed) {
    rep.witness = {{"x", matrix_to_json(x)}, {"sigma_bc", matrix_to_json(sigma_bc)}};
  }
  return rep;
}

VerificationReport equivalence_bridge(const Vector& xi, const Matrix& rho_ab,
                                      const Matrix& sigma_bc, const Dims3& dims,
                                      const Tolerance& tol) {
  validate_tripartite(rho_ab, sigma_bc, dims);
  const Index da = dims[0], db = dims[1], dc = dims[2];
  const Index d = da * db * dc;
  if (xi.size() != d) {
    throw std::invalid_argument("equivalence_bridge: xi dimension mismatch");
  }

  Matrix projector = xi * xi.adjoint();
  Matrix sigma_c = partial_trace(sigma_bc, {db, dc}, {1});
  Matrix sc_half_inv = kron(Matrix::Identity(da * db, da * db),
                            herm_power(sigma_c, -0.5, tol));
  Matrix sbc_half_inv = kron(Matrix::Identity(da, da),
                             herm_power(sigma_bc, -0.5, tol));
  Matrix rho_a = partial_trace(rho_ab, {da, db}, {0});

  const double q1 = (rho_ab * partial_trace(sc_half_inv * projector * sc_half_inv,
                                            {da * db, dc}, {0}))
                        .trace()
                        .real();
  const double q2 = (rho_a * partial_trace(sbc_half_inv * projector * sbc_half_inv,
                                           {da, db * dc}, {0}))
                        .trace()
                        .real();
  Matrix coarse = closed_form_tripartite(rho_ab, sigma_bc, dims, TripartiteSide::Coarse, tol);
  Matrix fine = closed_form_tripartite(rho_ab, sigma_bc, dims, TripartiteSide::Fine, tol);
  const double q3 = (xi.adjoint() * coarse * xi).value().real();
  const double q4 = (xi.adjoint() * fine * xi).value().real();

  const double vert1 = std::abs(q1 - q3);
  const double vert2 = std::abs(q2 - q4);
  const double vert1_allowed = 1e-10 * std::max(std::abs(q1), std::abs(q3)) + tol.atol;
  const double vert2_allowed = 1e-10 * std::max(std::abs(q2), std::abs(q4)) + tol.atol;

  VerificationReport rep;
  rep.check_name = "equivalence_bridge";
  rep.margin = q4 - q3;
  rep.scale = std::max(std::abs(q3), std::abs(q4));
  rep.tolerance = tol;
  const bool horizontal = rep.margin >= -(tol.atol + tol.rtol * rep.scale);
  rep.passed = horizontal && vert1 <= vert1_allowed && vert2 <= vert2_allowed;
  if (!rep.passed) {
    rep.witness = {{"xi", matrix_to_json(xi)},
                   {"rho_ab", matrix_to_json(rho_ab)},
                   {"sigma_bc", matrix_to_json(sigma_bc)},
                   {"values", {q1, q2, q3, q4}}};
  }
  return rep;
}

VerificationReport check_theta_monotonicity(const MatrixAlgebra& a, const MatrixAlgebra& b,
                                            const PositiveFunctional& w, const Vector& xi,
                                            const Tolerance& tol) {
  if (!is_subalgebra(b, a, tol)) {
    throw std::invalid_argument("check_theta_monotonicity: b is not a subalgebra of a");
  }
  GnsSpace g_a = gns(a, w, tol);
  if (!g_a.faithful()) {
    throw std::domain_error("check_theta_monotonicity: functional not faithful on a");
  }
  GnsSpace g_b = gns(b, restrict_functional(w, b, tol), tol);
  Matrix theta_a = theta(g_a, xi, xi);
  Matrix theta_b = theta(g_b, xi, xi);
  VerificationReport rep = from_loewner("theta_monotonicity",
                                        loewner_leq(theta_b, theta_a, tol), tol);
  rep.scale = std::max(rep.scale, opnorm_hermitian(theta_a));
  rep.passed = rep.margin >= -(tol.atol + tol.rtol * rep.scale);
  if (!rep.passed) {
    rep.witness = {{"xi", matrix_to_json(xi)},
                   {"omega", matrix_to_json(w.representative())}};
  }
  return rep;
}

VerificationReport check_spatial_monotonicity(const MatrixAlgebra& n, const MatrixAlgebra& m,
                                              const PositiveFunctional& psi,
                                              const PositiveFunctional& phi,
                                              const Tolerance& tol) {
  return check_spatial_monotonicity(n, m, commutant(m), psi, phi, tol);
}

VerificationReport check_spatial_monotonicity(const MatrixAlgebra& n, const MatrixAlgebra& m,
                                              const MatrixAlgebra& m_comm,
                                              const PositiveFunctional& psi,
                                              const PositiveFunctional& phi,
                                              const Tolerance& tol) {
  if (!is_subalgebra(n, m, tol)) {
    throw std::invalid_argument("check_spatial_monotonicity: n is not a subalgebra of m");
  }
  if (m_comm.dim() != commutant_dim(m)) {
    throw std::invalid_argument("check_spatial_monotonicity: m_comm is not the commutant of m");
  }

  // fine side: d(psi|_N) / d(phi) with phi living on N'
  GnsSpace g_phi = gns(phi.algebra(), phi, tol);
  SpatialDerivative fine = spatial_derivative(restrict_functional(psi, n, tol), g_phi, tol);

  // coarse side: d(psi) / d(phi|_{M'})
  GnsSpace g_phi_restricted = gns(m_comm, restrict_functional(phi, m_comm, tol), tol);
  SpatialDerivative coarse = spatial_derivative(psi, g_phi_restricted, tol);

  VerificationReport rep = from_loewner("spatial_monotonicity",
                                        loewner_leq(coarse.matrix, fine.matrix, tol), tol);
  rep.scale = std::max({rep.scale, opnorm_hermitian(fine.matrix),
                        opnorm_hermitian(coarse.matrix)});
  rep.passed = rep.margin >= -(tol.atol + tol.rtol * rep.scale);
  if (!rep.passed) {
    rep.witness = {{"psi", matrix_to_json(psi.representative())},
                   {"phi", matrix_to_json(phi.representative())}};
  }
  return rep;
}

VerificationReport check_reverse_derivation(const MatrixAlgebra& a, const MatrixAlgebra& b,
                                            const PositiveFunctional& w, const Vector& xi,
                                            const Vector& chi, const Tolerance& tol) {
  return check_reverse_derivation(a, b, commutant(a), commutant(b), w, xi, chi, tol);
}

VerificationReport check_reverse_derivation(const MatrixAlgebra& a, const MatrixAlgebra& b,
                                            const MatrixAlgebra& a_comm,
                                            const MatrixAlgebra& b_comm,
                                            const PositiveFunctional& w, const Vector& xi,
                                            const Vector& chi, const Tolerance& tol) {
  if (!is_subalgebra(b, a, tol)) {
    throw std::invalid_argument("check_reverse_derivation: b is not a subalgebra of a");
  }
  Matrix chi_proj = chi * chi.adjoint();

  GnsSpace g_a = gns(a, w, tol);
  if (!g_a.faithful()) {
    throw std::domain_error("check_reverse_derivation: functional not faithful on a");
  }
  GnsSpace g_b = gns(b, restrict_functional(w, b, tol), tol);

  const double theta_b_val = (chi.adjoint() * theta(g_b, xi, xi) * chi).value().real();
  const double theta_a_val = (chi.adjoint() * theta(g_a, xi, xi) * chi).value().real();

  // d(<chi, . chi>|_{B'}) / d(omega|_B), evaluated at xi; likewise for A
  PositiveFunctional chi_on_bcomm(b_comm, chi_proj, tol);
  PositiveFunctional chi_on_acomm(a_comm, chi_proj, tol);
  SpatialDerivative sd_b = spatial_derivative(chi_on_bcomm, g_b, tol);
  SpatialDerivative sd_a = spatial_derivative(chi_on_acomm, g_a, tol);
  const double form_b = (xi.adjoint() * sd_b.matrix * xi).value().real();
  const double form_a = (xi.adjoint() * sd_a.matrix * xi).value().real();

  const double scale_b = std::max(std::abs(theta_b_val), std::abs(form_b));
  const double scale_a = std::max(std::abs(theta_a_val), std::abs(form_a));
  const bool eq_b = std::abs(theta_b_val - form_b) <= 1e-8 * scale_b + tol.atol;
  const bool eq_a = std::abs(theta_a_val - form_a) <= 1e-8 * scale_a + tol.atol;

  VerificationReport rep;
  rep.check_name = "reverse_derivation";
  rep.margin = form_a - form_b;
  rep.scale = std::max(scale_a, scale_b);
  rep.tolerance = tol;
  rep.passed = eq_b && eq_a && rep.margin >= -(tol.atol + tol.rtol * rep.scale);
  if (!rep.passed) {
    rep.witness = {{"xi", matrix_to_json(xi)},
                   {"chi", matrix_to_json(chi)},
                   {"omega", matrix_to_json(w.representative())},
                   {"pairings", {theta_b_val, form_b, theta_a_val, form_a}}};
  }
  return rep;
}

VerificationReport entropy_ssa(const Matrix& rho_abc, const Dims3& dims,
                               const Tolerance& tol) {
  const Index d = dims[0] * dims[1] * dims[2];
  if (rho_abc.rows() != d || rho_abc.cols() != d) {
    throw std::invalid_argument("entropy_ssa: rho_ABC shape mismatch");
  }
  HermEig eig = herm_eig(rho_abc, tol);
  const double lmax = std::max(eig.values.maxCoeff(), 0.0);
  if (eig.values.minCoeff() < -(tol.atol + tol.rtol * lmax) ||
      std::abs(rho_abc.trace().real() - 1.0) > 1e-9) {
    throw std::domain_error("entropy_ssa: input is not a density matrix");
  }
  const std::vector<Index> facs{dims[0], dims[1], dims[2]};
  const double s_ab = von_neumann_entropy(partial_trace(rho_abc, facs, {0, 1}));
  const double s_bc = von_neumann_entropy(partial_trace(rho_abc, facs, {1, 2}));
  const double s_b = von_neumann_entropy(partial_trace(rho_abc, facs, {1}));
  const double s_abc = von_neumann_entropy(rho_abc);

  VerificationReport rep;
  rep.check_name = "entropy_ssa";
  rep.margin = s_ab + s_bc - s_b - s_abc;
  rep.scale = 0.0;  // absolute threshold in nats
  rep.tolerance = tol;
  rep.passed = rep.margin >= -tol.atol;
  if (!rep.passed) rep.witness = {{"rho_abc", matrix_to_json(rho_abc)}};
  return rep;
}

VerificationReport falsification_power(const Dims3& dims, long trials, std::uint64_t seed,
                                       const Tolerance& tol) {
  VerificationReport rep;
  rep.check_name = "falsification_power";
  rep.tolerance = tol;
  rep.trials = trials;
  rep.seed = seed;
  rep.margin = 0.0;
  rep.scale = 0.0;

  RandomStream root(seed);
  const Index dab = dims[0] * dims[1];
  const Index dbc = dims[1] * dims[2];
  double worst = std::numeric_limits<double>::infinity();
  for (long t = 0; t < trials; ++t) {
    RandomStream rng = root.fork(static_cast<std::uint64_t>(t));
    Matrix rho = random_density(dab, dab, rng);
    Matrix sigma = random_full_rank_density(dbc, rng);
    Matrix coarse = closed_form_tripartite(rho, sigma, dims, TripartiteSide::Coarse, tol);
    Matrix fine = closed_form_tripartite(rho, sigma, dims, TripartiteSide::Fine, tol);
    // deliberately reversed: demand fine <= coarse and hunt for the violation
    LoewnerResult lo = loewner_leq(fine, coarse, tol);
    if (lo.margin < worst) {
      worst = lo.margin;
      rep.scale = lo.scale;
    }
    if (lo.margin < -1e-6) {
      rep.margin = worst;
      rep.passed = true;
      rep.trials = t + 1;
      rep.witness = {{"trial", t},
                     {"rho_ab", matrix_to_json(rho)},
                     {"sigma_bc", matrix_to_json(sigma)}};
      return rep;
    }
  }
  rep.margin = trials > 0 ? worst : 0.0;
  rep.passed = false;
  rep.witness = {{"note", "no violation of the reversed inequality found"}};
  return rep;
}

}  // namespace ossa
