#pragma once

#include "eforge/gates.hpp"
#include "eforge/kak.hpp"
#include "eforge/numeric.hpp"
#include "eforge/types.hpp"

#include <random>

namespace eforge::test {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

/// Haar-distributed one-qubit unitary from a random unit quaternion.
inline Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double x0 = n(rng), x1 = n(rng), x2 = n(rng), x3 = n(rng);
  const double norm = std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3);
  x0 /= norm;
  x1 /= norm;
  x2 /= norm;
  x3 /= norm;
  Mat2 m;
  m(0, 0) = Complex(x0, x1);
  m(0, 1) = Complex(x2, x3);
  m(1, 0) = Complex(-x2, x3);
  m(1, 1) = Complex(x0, -x1);
  return m;
}

/// Haar-ish 4x4 unitary: QR of a Gaussian matrix with phase-fixed diagonal.
inline Mat4 random_unitary4(std::mt19937_64& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = gaussian(rng);
  }
  Eigen::HouseholderQR<Mat4> qr(g);
  Mat4 q = qr.householderQ();
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

inline TwoQubitState random_state(std::mt19937_64& rng) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v(i) = gaussian(rng);
  return TwoQubitState::normalized(v);
}

inline TwoQubitState random_product_state(std::mt19937_64& rng) {
  Vec4 zero = Vec4::Zero();
  zero(0) = 1.0;
  return TwoQubitState(tensor(random_su2(rng), random_su2(rng)) * zero);
}

/// Random canonical-form gate: chamber-interior alphas dressed in random
/// locals and a random global phase.
inline Mat4 random_gate_with_alphas(std::mt19937_64& rng, double ax, double ay, double az) {
  std::uniform_real_distribution<double> ph(-3.14, 3.14);
  return std::exp(Complex(0.0, ph(rng))) * tensor(random_su2(rng), random_su2(rng)) *
         canonical_gate(ax, ay, az) * tensor(random_su2(rng), random_su2(rng));
}

/// Matrix exponential by scaled Taylor series; independent oracle for the
/// closed-form gate constructions.
inline Mat4 series_exp(const Mat4& m) {
  int scale = 0;
  double norm = m.cwiseAbs().maxCoeff();
  while (norm > 0.25) {
    norm /= 2.0;
    ++scale;
  }
  const Mat4 a = m / std::pow(2.0, scale);
  Mat4 term = Mat4::Identity();
  Mat4 sum = Mat4::Identity();
  for (int k = 1; k < 30; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
  }
  for (int s = 0; s < scale; ++s) sum = (sum * sum).eval();
  return sum;
}

inline Vec4 bell_phi_plus() {
  Vec4 v = Vec4::Zero();
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

inline Vec4 basis_state(int i) {
  Vec4 v = Vec4::Zero();
  v(i) = 1.0;
  return v;
}

}  // namespace eforge::test
