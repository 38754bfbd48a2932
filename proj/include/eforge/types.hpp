#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace eforge {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

namespace tol {
// API-boundary unitarity check; internal assertions run at `unitary_internal`.
inline constexpr double unitary_api = 1e-8;
inline constexpr double unitary_internal = 1e-10;
// A gate with omega below this is treated as non-entangling.
inline constexpr double zero_omega = 1e-9;
// Slack for the "omega >= pi" perfect-entangler test.
inline constexpr double arc = 1e-9;
// Run-count ratios within this of an integer are snapped to it before ceil.
inline constexpr double snap_ratio = 1e-7;
inline constexpr double state_norm = 1e-12;
}  // namespace tol

/// Domain error with a machine-readable kind and the process exit code used
/// by the CLI (0 ok, 2 parse, 3 not-unitary, 4 regime/not-entangling).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message, int exit_code)
      : std::runtime_error(message), kind_(std::move(kind)), exit_code_(exit_code) {}
  const std::string& kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string kind_;
  int exit_code_;
};

struct NotUnitaryError : DomainError {
  explicit NotUnitaryError(const std::string& msg) : DomainError("not_unitary", msg, 3) {}
};
struct NotEntanglingError : DomainError {
  explicit NotEntanglingError(const std::string& msg) : DomainError("not_entangling", msg, 4) {}
};
struct OutOfRegimeError : DomainError {
  explicit OutOfRegimeError(const std::string& msg) : DomainError("out_of_regime", msg, 4) {}
};
struct AlreadyMaximalError : DomainError {
  explicit AlreadyMaximalError(const std::string& msg) : DomainError("already_maximal", msg, 4) {}
};
struct TargetOutOfRangeError : DomainError {
  explicit TargetOutOfRangeError(const std::string& msg)
      : DomainError("target_out_of_range", msg, 4) {}
};
struct ConcurrenceMismatchError : DomainError {
  explicit ConcurrenceMismatchError(const std::string& msg)
      : DomainError("concurrence_mismatch", msg, 4) {}
};
struct DegenerateCoreError : DomainError {
  explicit DegenerateCoreError(const std::string& msg) : DomainError("degenerate_core", msg, 4) {}
};
struct BadBudgetError : DomainError {
  explicit BadBudgetError(const std::string& msg) : DomainError("bad_budget", msg, 2) {}
};
struct BudgetExhaustedError : DomainError {
  explicit BudgetExhaustedError(const std::string& msg)
      : DomainError("budget_exhausted", msg, 4) {}
};
struct ParseError : DomainError {
  explicit ParseError(const std::string& msg) : DomainError("parse_error", msg, 2) {}
};

/// Pure two-qubit state, amplitudes in computational-basis order
/// |00>, |01>, |10>, |11>. Construction enforces unit norm.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Vec4& amplitudes) : amps_(amplitudes) {
    if (!amps_.allFinite()) {
      throw std::invalid_argument("TwoQubitState: non-finite amplitude");
    }
    const double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > tol::state_norm) {
      throw std::invalid_argument("TwoQubitState: amplitudes not normalized");
    }
  }

  /// Rescales to unit norm; rejects zero and non-finite input.
  static TwoQubitState normalized(const Vec4& amplitudes) {
    if (!amplitudes.allFinite()) {
      throw std::invalid_argument("TwoQubitState: non-finite amplitude");
    }
    const double n = amplitudes.norm();
    if (n < 1e-300) {
      throw std::invalid_argument("TwoQubitState: zero vector");
    }
    return TwoQubitState(Vec4(amplitudes / n));
  }

  const Vec4& amps() const noexcept { return amps_; }
  Complex amp(int i) const { return amps_(i); }

 private:
  Vec4 amps_;
};

/// Arguments of the four unit-modulus eigenvalues of a 4x4 unitary,
/// each in (-pi, pi]. Order is unspecified.
struct EigenPhases {
  std::array<double, 4> phases;
};

}  // namespace eforge
