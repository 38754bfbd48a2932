#include "eforge/arc.hpp"

#include "eforge/gates.hpp"
#include "eforge/magic.hpp"
#include "eforge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eforge {

namespace {
constexpr double kPi = std::numbers::pi;

const Mat4& sigma_yy() {
  static const Mat4 yy = tensor(pauli_y(), pauli_y());
  return yy;
}

double largest_circular_gap(std::array<double, 4> phases) {
  std::sort(phases.begin(), phases.end());
  double gap = phases[0] + 2.0 * kPi - phases[3];
  for (int i = 0; i < 3; ++i) {
    gap = std::max(gap, phases[static_cast<std::size_t>(i + 1)] - phases[static_cast<std::size_t>(i)]);
  }
  return gap;
}
}  // namespace

ArcLength::ArcLength(double radians) : radians_(radians) {
  if (radians_ < 0.0 && radians_ > -1e-12) radians_ = 0.0;
  if (radians_ < 0.0 || radians_ >= 2.0 * kPi) {
    throw std::invalid_argument("ArcLength: value outside [0, 2*pi)");
  }
}

ArcLength theta(const Mat4& u) {
  const EigenPhases p = eigenphases(u);
  return ArcLength(2.0 * kPi - largest_circular_gap(p.phases));
}

ArcLength omega(const Mat4& u) {
  require_unitary(u, tol::unitary_api);
  const Mat4 prod = u * sigma_yy() * u.transpose() * sigma_yy();
  return theta(prod);
}

bool is_perfect_entangler(const Mat4& u) { return omega(u).radians() >= kPi - tol::arc; }

std::int64_t ceil_with_snap(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < tol::snap_ratio) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

std::int64_t n_runs(const Mat4& u) {
  const double w = omega(u).radians();
  if (w <= tol::zero_omega) {
    throw NotEntanglingError("gate is not entangling (omega = 0)");
  }
  return ceil_with_snap(kPi / w);
}

std::int64_t n_runs_from_state(const Mat4& u, const TwoQubitState& tau) {
  const double w = omega(u).radians();
  if (w <= tol::zero_omega) {
    throw NotEntanglingError("gate is not entangling (omega = 0)");
  }
  const double c = concurrence(tau);
  if (c >= 1.0 - tol::zero_omega) {
    throw AlreadyMaximalError("input state is already maximally entangled");
  }
  const double angle = std::asin(c);
  const std::int64_t n = ceil_with_snap((kPi - 2.0 * angle) / w);
  return n < 1 ? 1 : n;
}

double single_use_max_concurrence(const Mat4& u, const TwoQubitState& tau) {
  const double w = omega(u).radians();
  if (w <= tol::zero_omega) {
    throw NotEntanglingError("gate is not entangling (omega = 0)");
  }
  const double c = concurrence(tau);
  if (c >= 1.0 - tol::zero_omega) return 1.0;
  const double angle = std::asin(c);
  if (angle + 0.5 * w >= kPi / 2.0 || n_runs_from_state(u, tau) <= 1) return 1.0;
  return std::sin(angle + 0.5 * w);
}

std::int64_t simulation_lower_bound(const Mat4& u, const Mat4& v) {
  const double wu = omega(u).radians();
  const double wv = omega(v).radians();
  if (wu <= tol::zero_omega || wv <= tol::zero_omega) {
    throw NotEntanglingError("both gates must be entangling");
  }
  if (wu >= kPi - tol::arc || wv >= kPi - tol::arc) {
    throw OutOfRegimeError("bound requires that neither gate is a perfect entangler");
  }
  const std::int64_t k = ceil_with_snap(wv / wu);
  return k < 1 ? 1 : k;
}

AnalysisReport analyze(const Mat4& u) {
  AnalysisReport r;
  r.canonical = kak_decompose(u);
  r.omega = omega(u);
  r.perfect_entangler = r.omega.radians() >= kPi - tol::arc;
  if (r.omega.radians() > tol::zero_omega) {
    r.n_runs = ceil_with_snap(kPi / r.omega.radians());
  }
  return r;
}

}  // namespace eforge
