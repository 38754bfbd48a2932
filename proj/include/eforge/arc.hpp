#pragma once

#include "eforge/kak.hpp"
#include "eforge/types.hpp"

#include <cstdint>
#include <optional>

namespace eforge {

/// Length of an arc on the unit circle, in [0, 2*pi).
class ArcLength {
 public:
  ArcLength() = default;
  explicit ArcLength(double radians);
  double radians() const noexcept { return radians_; }

 private:
  double radians_ = 0.0;
};

/// Theta(u): length of the smallest arc containing all eigenvalues of u on
/// the unit circle (2*pi minus the largest circular gap between eigenphases).
ArcLength theta(const Mat4& u);

/// Omega(u) = Theta(u (sy⊗sy) u^T (sy⊗sy)), transpose in the computational
/// basis. Zero iff u is local or locally equivalent to SWAP; >= pi iff u is
/// a perfect entangler.
ArcLength omega(const Mat4& u);

bool is_perfect_entangler(const Mat4& u);

/// ceil(x) with a snap: ratios within tol::snap_ratio of an integer round to
/// it, so gates sitting exactly on a boundary do not report one extra run.
std::int64_t ceil_with_snap(double x);

/// Optimal number of runs to simulate a perfect entangler: ceil(pi / Omega).
/// Throws NotEntanglingError when omega(u) <= tol::zero_omega.
std::int64_t n_runs(const Mat4& u);

/// Runs needed starting from a partially entangled input with C = sin(theta):
/// ceil((pi - 2 theta) / Omega). Throws AlreadyMaximalError when C(tau) is
/// already maximal.
std::int64_t n_runs_from_state(const Mat4& u, const TwoQubitState& tau);

/// Best concurrence reachable by one use of u from tau:
/// 1 when one run suffices, otherwise sin(asin(C(tau)) + Omega/2).
double single_use_max_concurrence(const Mat4& u, const TwoQubitState& tau);

/// Lower bound ceil(Omega(v) / Omega(u)) on the uses of u needed to simulate
/// v, valid when neither gate is a perfect entangler (OutOfRegimeError
/// otherwise; NotEntanglingError when either omega vanishes).
std::int64_t simulation_lower_bound(const Mat4& u, const Mat4& v);

struct ToleranceRecord {
  double unitary = tol::unitary_api;
  double zero_omega = tol::zero_omega;
  double arc = tol::arc;
  double snap_ratio = tol::snap_ratio;
};

struct AnalysisReport {
  ArcLength omega;
  std::optional<std::int64_t> n_runs;  // absent when not entangling
  bool perfect_entangler = false;
  CanonicalForm canonical;
  ToleranceRecord tolerances;
};

AnalysisReport analyze(const Mat4& u);

}  // namespace eforge
