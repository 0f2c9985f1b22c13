// spatial.hpp — spatial derivatives d(psi)/d(phi) assembled from the GNS
// machinery, plus the tripartite closed forms they must reproduce.

#pragma once

#include "ossa/gns.hpp"

#include <array>

namespace ossa {

/// Positive operator on the ambient space representing the quadratic form
/// xi -> psi(theta^phi(xi, xi)); psi lives on M, phi (faithful) on M'.
struct SpatialDerivative {
  Matrix matrix;
  PositiveFunctional psi;
  PositiveFunctional phi;
};

/// Assembles <e_k, D e_l> = psi(theta^phi(e_l, e_k)) over the computational
/// basis. Requires g_phi faithful and psi's algebra equal to the commutant of
/// g_phi's algebra (verified via pairwise commutation plus the commutant
/// dimension identity).
SpatialDerivative spatial_derivative(const PositiveFunctional& psi,
                                     const GnsSpace& g_phi,
                                     const Tolerance& tol = {});

enum class TripartiteSide {
  Coarse,  // rho_AB (x) sigma_C^{-1}
  Fine,    // rho_A (x) sigma_BC^{-1}
};

/// The closed-form spatial derivatives of the tripartite factor setting, all
/// operators ordered A (x) B (x) C.
Matrix closed_form_tripartite(const Matrix& rho_ab, const Matrix& sigma_bc,
                              const std::array<Index, 3>& dims, TripartiteSide side,
                              const Tolerance& tol = {});

}  // namespace ossa
