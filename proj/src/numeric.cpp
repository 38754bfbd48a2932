#include "eforge/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace eforge {

namespace {
constexpr double kPi = std::numbers::pi;

template <typename M>
bool check_unitary_impl(const M& m, double tol) {
  if (!m.allFinite()) return false;
  const M g = m.adjoint() * m - M::Identity();
  return g.cwiseAbs().maxCoeff() <= tol;
}
}  // namespace

bool check_unitary(const Mat4& m, double tol) { return check_unitary_impl(m, tol); }
bool check_unitary(const Mat2& m, double tol) { return check_unitary_impl(m, tol); }

void require_unitary(const Mat4& m, double tol) {
  if (!check_unitary(m, tol)) {
    throw NotUnitaryError("matrix is not unitary within tolerance");
  }
}

void require_unitary(const Mat2& m, double tol) {
  if (!check_unitary(m, tol)) {
    throw NotUnitaryError("matrix is not unitary within tolerance");
  }
}

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 t;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return t;
}

EigenPhases eigenphases(const Mat4& u) {
  require_unitary(u, tol::unitary_api);
  Eigen::ComplexEigenSolver<Mat4> es(u, /*computeEigenvectors=*/false);
  EigenPhases out{};
  for (int k = 0; k < 4; ++k) {
    out.phases[static_cast<std::size_t>(k)] = wrap_angle(std::arg(es.eigenvalues()(k)));
  }
  return out;
}

SchmidtForm schmidt(const TwoQubitState& s) {
  // Amplitude matrix A(i, j) = <ij|s>; s = sum_k sigma_k |u_k>|conj(v_k)>.
  Mat2 a;
  a << s.amp(0), s.amp(1), s.amp(2), s.amp(3);
  Eigen::JacobiSVD<Mat2> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtForm f;
  f.c0 = svd.singularValues()(0);
  f.c1 = svd.singularValues()(1);
  f.local_a = svd.matrixU();
  f.local_b = svd.matrixV().conjugate();
  return f;
}

TwoQubitState apply_gate(const Mat4& m, const TwoQubitState& s) {
  return TwoQubitState::normalized(m * s.amps());
}

double phase_align(const Mat4& reference, const Mat4& candidate) {
  const Complex tr = (candidate.adjoint() * reference).trace();
  return std::arg(tr);
}

double distance_up_to_phase(const Mat4& a, const Mat4& b) {
  const double phi = phase_align(a, b);
  return (a - std::exp(Complex(0.0, phi)) * b).cwiseAbs().maxCoeff();
}

}  // namespace eforge
