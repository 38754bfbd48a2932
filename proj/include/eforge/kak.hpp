#pragma once

#include "eforge/types.hpp"

#include <utility>

namespace eforge {

/// Canonical (Cartan) form of a two-qubit unitary:
///   u = e^{i global_phase} (k1a ⊗ k1b) exp(i(ax XX + ay YY + az ZZ)) (k2a ⊗ k2b)
/// with interaction angles normalized into the Weyl chamber
/// pi/4 >= ax >= ay >= |az|. `lambdas` are the magic-basis eigenphases of the
/// interaction core, tied to the alphas by a fixed linear map.
struct CanonicalForm {
  Mat2 k1a, k1b;                    // outer local pair
  std::array<double, 3> alphas{};   // (ax, ay, az)
  Mat2 k2a, k2b;                    // inner local pair
  double global_phase = 0.0;
  std::array<double, 4> lambdas{};  // eigenphase on each magic column
};

/// lambda_1 =  ax - ay + az      lambda_2 = -ax + ay + az
/// lambda_3 = -ax - ay - az      lambda_4 =  ax + ay - az
/// (the eigenvalue pattern of XX, YY, ZZ on the magic columns; sums to 0).
std::array<double, 4> lambdas_from_alphas(const std::array<double, 3>& alphas);
std::array<double, 3> alphas_from_lambdas(const std::array<double, 4>& lambdas);

/// exp(i(ax XX + ay YY + az ZZ)), evaluated in closed form via the magic basis.
Mat4 canonical_gate(double ax, double ay, double az);

/// Decompose a unitary into canonical form. Throws NotUnitaryError.
CanonicalForm kak_decompose(const Mat4& u);

/// Rebuild the unitary from a canonical form (including global phase).
Mat4 reconstruct(const CanonicalForm& c);

/// The interaction core U_d = sum_k e^{i lambda_k} |Mk><Mk|.
Mat4 interaction_core(const CanonicalForm& c);

/// Split a matrix that is a tensor product of one-qubit unitaries into its
/// factors, (a ⊗ b) equal to the input exactly (phase folded into `a`).
/// Throws std::invalid_argument when the input is not a product within `tol`.
std::pair<Mat2, Mat2> factor_local_pair(const Mat4& product, double tol = 1e-8);

}  // namespace eforge
