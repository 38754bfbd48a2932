#pragma once

#include "eforge/arc.hpp"
#include "eforge/types.hpp"

#include <vector>

namespace eforge {

/// One free layer a ⊗ b of an interleaving.
struct LocalLayer {
  Mat2 a;
  Mat2 b;
  Mat4 matrix() const;
};

/// Witness circuit locals[N] * gate * locals[N-1] * ... * gate * locals[0]
/// (locals[0] applied first) taking `product_input` to a maximally entangled
/// state with uses = n_runs(gate).
struct SynthesizedCircuit {
  std::vector<LocalLayer> locals;  // uses + 1 layers
  Mat4 gate;
  std::int64_t uses = 0;
  TwoQubitState product_input;
  double certified_output_concurrence = 0.0;

  Mat4 total() const;
};

struct TrajectoryStep {
  int index = 0;
  TwoQubitState state;
  double concurrence = 0.0;
};

/// Eigenphases of a matrix that is diagonal in the magic basis, plus the
/// circular extreme pair of the doubled spectrum: the covering arc of
/// {e^{2 i lambda_k}} runs from 2*lambda[idx_lo] to 2*lambda[idx_hi] and has
/// length omega. Throws std::invalid_argument when off-diagonal mass exceeds
/// the tolerance.
struct CorePhases {
  std::array<double, 4> lambdas{};
  int idx_hi = 0;
  int idx_lo = 0;
  double omega = 0.0;
};
CorePhases core_phases(const Mat4& core, double diag_tol = 1e-8);

/// Product seed (|M_a> + i |M_b>)/sqrt2 on the extreme-phase magic columns.
/// Throws DegenerateCoreError when omega(core) <= tol::zero_omega.
TwoQubitState seed_product_state(const Mat4& core);

/// Steps m = 0..steps of core^m applied to seed, with concurrences. For the
/// canonical seed the concurrence at step m is sin(m * Omega / 2).
std::vector<TrajectoryStep> trajectory(const Mat4& core, const TwoQubitState& seed, int steps);

/// A state psi with C(psi) = target and core * psi maximally entangled,
/// built as core^dag (cos t |M_a> + sin t |M_b>). Requires omega(core) < pi
/// and target in the reachable band [cos(omega/2), 1]
/// (TargetOutOfRangeError below the band edge).
TwoQubitState max_entangled_preimage(const Mat4& core, double target_concurrence);

/// Local pair (wa, wb) with (wa ⊗ wb) from = to, exact including global
/// phase; requires equal concurrences within 1e-8 (ConcurrenceMismatchError).
LocalLayer equal_concurrence_connector(const TwoQubitState& from, const TwoQubitState& to);

/// The constructive interleaving: N = n_runs(u) uses of u with free local
/// layers mapping a computational product input to a maximally entangled
/// output. Throws NotEntanglingError.
SynthesizedCircuit synthesize_perfect_entangler(const Mat4& u);

struct CircuitCheck {
  double output_concurrence = 0.0;
  ArcLength omega_of_total;
  bool ok = false;
};

/// Multiplies the circuit out and checks both certificates: output
/// concurrence >= 1 - 1e-8 and omega(total) >= pi - 1e-6. Failures are
/// reported in the result, never thrown.
CircuitCheck verify_circuit(const SynthesizedCircuit& c);

}  // namespace eforge
