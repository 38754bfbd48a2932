#pragma once

#include "eforge/types.hpp"

namespace eforge {

/// Max-norm test of m^dag m - I against `tol`.
bool check_unitary(const Mat4& m, double tol);
bool check_unitary(const Mat2& m, double tol);

/// Throws NotUnitaryError when the check fails.
void require_unitary(const Mat4& m, double tol);
void require_unitary(const Mat2& m, double tol);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Kronecker product in computational-basis ordering, (a ⊗ b).
Mat4 tensor(const Mat2& a, const Mat2& b);

/// Eigenvalue arguments of a unitary matrix. Precondition: unitary at 1e-8.
EigenPhases eigenphases(const Mat4& u);

struct SchmidtForm {
  double c0 = 0.0;  // c0 >= c1 >= 0, c0^2 + c1^2 = 1
  double c1 = 0.0;
  Mat2 local_a;
  Mat2 local_b;
};

/// Schmidt decomposition: (local_a ⊗ local_b)(c0|00> + c1|11>) equals the
/// input state exactly, coefficients real and non-negative. Any valid basis
/// is returned for degenerate coefficients.
SchmidtForm schmidt(const TwoQubitState& s);

/// m * s, renormalized against floating-point drift.
TwoQubitState apply_gate(const Mat4& m, const TwoQubitState& s);

/// arg tr(candidate^dag reference): the phase aligning candidate onto
/// reference with maximal overlap.
double phase_align(const Mat4& reference, const Mat4& candidate);

/// Max-norm distance between a and e^{i phi} b at the best-overlap phi.
double distance_up_to_phase(const Mat4& a, const Mat4& b);

}  // namespace eforge
