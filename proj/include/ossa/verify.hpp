// verify.hpp — every inequality and identity of the operator-extended strong
// subadditivity circle as a checkable predicate with margins and witnesses.

#pragma once

#include "ossa/gns.hpp"
#include "ossa/spatial.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>

namespace ossa {

/// Pass/fail record. margin is the minimum eigenvalue of the certified
/// difference operator (or the minimum over trials); scale is the operator
/// norm the relative slack refers to. passed follows
/// margin >= -(atol + rtol * scale) for all checks except falsification_power,
/// which passes when a reversed-inequality violation below -1e-6 is found.
struct VerificationReport {
  std::string check_name;
  bool passed = false;
  double margin = 0.0;
  double scale = 0.0;
  long trials = 1;
  std::uint64_t seed = 0;
  Tolerance tolerance;
  nlohmann::json witness;  // serialized worst inputs; null when passed

  nlohmann::json to_json() const;
};

using Dims3 = std::array<Index, 3>;

double von_neumann_entropy(const Matrix& rho);  // nats, eigenvalues > 1e-14

/// Eq-style operator check rho_AB (x) sigma_C^{-1} <= rho_A (x) sigma_BC^{-1},
/// all embeddings ordered A (x) B (x) C.
VerificationReport check_operator_ssa(const Matrix& rho_ab, const Matrix& sigma_bc,
                                      const Dims3& dims, const Tolerance& tol = {});

/// tr_C(sigma_C^{-1/2} X sigma_C^{-1/2}) <= tr_BC(sigma_BC^{-1/2} X sigma_BC^{-1/2}) (x) I_B
/// for PSD X on H_ABC.
VerificationReport check_trace_form(const Matrix& x, const Matrix& sigma_bc,
                                    const Dims3& dims, const Tolerance& tol = {});

/// The 2x2 chain linking the two inequalities on a rank-one projection:
/// two vertical equalities within 1e-10 relative, horizontal inequality with
/// the usual slack. margin is the horizontal gap.
VerificationReport equivalence_bridge(const Vector& xi, const Matrix& rho_ab,
                                      const Matrix& sigma_bc, const Dims3& dims,
                                      const Tolerance& tol = {});

/// theta monotonicity for a subalgebra B of A under a faithful functional,
/// both sides built from independent GNS constructions.
VerificationReport check_theta_monotonicity(const MatrixAlgebra& a,
                                            const MatrixAlgebra& b,
                                            const PositiveFunctional& w,
                                            const Vector& xi,
                                            const Tolerance& tol = {});

/// Monotonicity of spatial derivatives for an inclusion N of M:
/// d(psi)/d(phi|_M') <= d(psi|_N)/d(phi). The commutant of M is computed
/// internally; the overload taking m_comm skips that (it is validated).
VerificationReport check_spatial_monotonicity(const MatrixAlgebra& n,
                                              const MatrixAlgebra& m,
                                              const PositiveFunctional& psi,
                                              const PositiveFunctional& phi,
                                              const Tolerance& tol = {});
VerificationReport check_spatial_monotonicity(const MatrixAlgebra& n,
                                              const MatrixAlgebra& m,
                                              const MatrixAlgebra& m_comm,
                                              const PositiveFunctional& psi,
                                              const PositiveFunctional& phi,
                                              const Tolerance& tol = {});

/// Recovery of the theta inequality from spatial-derivative monotonicity:
/// <chi, theta^{omega|B}(xi,xi) chi> equals the quadratic form of
/// d(<chi,.chi>|_{B'})/d(omega|_B) at xi, and likewise for A. margin is the
/// spatial-side gap. Commutants of a and b are computed internally unless
/// provided.
VerificationReport check_reverse_derivation(const MatrixAlgebra& a,
                                            const MatrixAlgebra& b,
                                            const PositiveFunctional& w,
                                            const Vector& xi, const Vector& chi,
                                            const Tolerance& tol = {});
VerificationReport check_reverse_derivation(const MatrixAlgebra& a,
                                            const MatrixAlgebra& b,
                                            const MatrixAlgebra& a_comm,
                                            const MatrixAlgebra& b_comm,
                                            const PositiveFunctional& w,
                                            const Vector& xi, const Vector& chi,
                                            const Tolerance& tol = {});

/// Direct entropy SSA sanity margin S_AB + S_BC - S_B - S_ABC in nats.
VerificationReport entropy_ssa(const Matrix& rho_abc, const Dims3& dims,
                               const Tolerance& tol = {});

/// Runs the reversed operator inequality on random instances; passes when at
/// least one violation with margin < -1e-6 is found, proving the certifier
/// rejects false inequalities.
VerificationReport falsification_power(const Dims3& dims, long trials,
                                       std::uint64_t seed, const Tolerance& tol = {});

}  // namespace ossa
