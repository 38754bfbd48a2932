#include "eforge/magic.hpp"

#include <cmath>

namespace eforge {

namespace {
Mat4 build_magic_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex I(0.0, 1.0);
  Mat4 q = Mat4::Zero();
  // columns: (|00>+|11>)/s2, i(|00>-|11>)/s2, (|01>-|10>)/s2, -i(|01>+|10>)/s2
  q(0, 0) = s;
  q(3, 0) = s;
  q(0, 1) = I * s;
  q(3, 1) = -I * s;
  q(1, 2) = s;
  q(2, 2) = -s;
  q(1, 3) = -I * s;
  q(2, 3) = -I * s;
  return q;
}
}  // namespace

const Mat4& magic_basis_matrix() {
  static const Mat4 q = build_magic_matrix();
  return q;
}

Vec4 to_magic_basis(const TwoQubitState& s) {
  return magic_basis_matrix().adjoint() * s.amps();
}

TwoQubitState from_magic_basis(const Vec4& mu) {
  return TwoQubitState::normalized(magic_basis_matrix() * mu);
}

double concurrence_amplitudes(const Vec4& amps) {
  const Vec4 mu = magic_basis_matrix().adjoint() * amps;
  Complex sum(0.0, 0.0);
  for (int k = 0; k < 4; ++k) sum += mu(k) * mu(k);
  const double c = std::abs(sum);
  return c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c);
}

double concurrence(const TwoQubitState& s) { return concurrence_amplitudes(s.amps()); }

}  // namespace eforge
