#pragma once

#include "eforge/types.hpp"

namespace eforge {

/// Unitary whose columns are the magic-basis states
///   |M1> = (|00> + |11>)/sqrt2
///   |M2> = i(|00> - |11>)/sqrt2
///   |M3> = (|01> - |10>)/sqrt2
///   |M4> = -i(|01> + |10>)/sqrt2
const Mat4& magic_basis_matrix();

/// Magic-basis coefficients mu of a state: s = sum_k mu_k |Mk>.
Vec4 to_magic_basis(const TwoQubitState& s);

TwoQubitState from_magic_basis(const Vec4& mu);

/// Concurrence |sum_k mu_k^2|, clamped into [0, 1].
/// 1 iff maximally entangled, 0 iff a product state.
double concurrence(const TwoQubitState& s);

/// Same, on raw unit-norm amplitudes (hot-path form, no state wrapper).
double concurrence_amplitudes(const Vec4& amps);

}  // namespace eforge
