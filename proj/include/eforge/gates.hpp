#pragma once

#include "eforge/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eforge {

const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();
const Mat2& identity2();
const Mat2& hadamard();

Mat4 gate_identity();
Mat4 gate_cnot();
Mat4 gate_cz();
Mat4 gate_swap();
Mat4 gate_sqrt_swap();
Mat4 gate_cp(double theta);                          // diag(1, 1, 1, e^{i theta})
Mat4 gate_canonical(double ax, double ay, double az);
Mat4 gate_xx(double t);                              // exp(i t XX)

/// A gate given either by catalog name + params or as an explicit matrix.
/// Catalog: identity, cnot, cz, swap, sqrt_swap, cp(theta),
/// canonical(ax, ay, az), xx(t). Angles in radians.
struct GateSpec {
  std::string name;            // empty when an explicit matrix is given
  std::vector<double> params;
  std::optional<Mat4> matrix;
};

/// Resolve to a matrix. Throws ParseError for unknown names or wrong
/// parameter counts, NotUnitaryError when an explicit matrix fails the
/// unitarity check at `unitary_tol`.
Mat4 resolve_gate(const GateSpec& spec, double unitary_tol = tol::unitary_api);

}  // namespace eforge
