#include "eforge/kak.hpp"

#include "eforge/magic.hpp"
#include "eforge/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eforge {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

using RMat4 = Eigen::Matrix4d;

/// Jointly diagonalize two commuting real symmetric 4x4 matrices with one
/// orthogonal matrix (Jacobi sweeps on the pair, Cardoso-Souloumiac angles).
RMat4 joint_diagonalize(RMat4 a, RMat4 b) {
  RMat4 v = RMat4::Identity();
  const double scale = a.cwiseAbs().maxCoeff() + b.cwiseAbs().maxCoeff() + 1e-300;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        off += a(p, q) * a(p, q) + b(p, q) * b(p, q);
      }
    }
    if (off <= 1e-28 * scale * scale) break;

    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        // 2x2 subproblem: rotation angle from the dominant eigenvector of
        // G = sum_k h_k h_k^T, h_k = (m_pp - m_qq, 2 m_pq).
        const double h1x = a(p, p) - a(q, q), h1y = 2.0 * a(p, q);
        const double h2x = b(p, p) - b(q, q), h2y = 2.0 * b(p, q);
        const double gxx = h1x * h1x + h2x * h2x;
        const double gxy = h1x * h1y + h2x * h2y;
        const double gyy = h1y * h1y + h2y * h2y;
        if (gxx + gyy <= 1e-30 * scale * scale) continue;
        const double lam =
            0.5 * (gxx + gyy) + std::hypot(0.5 * (gxx - gyy), gxy);
        // Two candidate eigenvector expressions; the larger one is
        // well-conditioned whichever axis dominates.
        double x = lam - gyy, y = gxy;
        if (std::hypot(gxy, lam - gxx) > std::hypot(x, y)) {
          x = gxy;
          y = lam - gxx;
        }
        const double n = std::hypot(x, y);
        if (n < 1e-300) continue;
        x /= n;
        y /= n;
        if (x < 0.0) {
          x = -x;
          y = -y;
        }
        const double c = std::sqrt((x + 1.0) / 2.0);
        const double s = y / std::sqrt(2.0 * (x + 1.0));
        if (std::abs(s) < 1e-18) continue;

        // Givens rotation in the (p, q) plane: col_p' = c col_p + s col_q.
        for (int i = 0; i < 4; ++i) {
          const double ap = a(i, p), aq = a(i, q);
          a(i, p) = c * ap + s * aq;
          a(i, q) = -s * ap + c * aq;
          const double bp = b(i, p), bq = b(i, q);
          b(i, p) = c * bp + s * bq;
          b(i, q) = -s * bp + c * bq;
        }
        for (int j = 0; j < 4; ++j) {
          const double ap = a(p, j), aq = a(q, j);
          a(p, j) = c * ap + s * aq;
          a(q, j) = -s * ap + c * aq;
          const double bp = b(p, j), bq = b(q, j);
          b(p, j) = c * bp + s * bq;
          b(q, j) = -s * bp + c * bq;
        }
        for (int i = 0; i < 4; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp + s * vq;
          v(i, q) = -s * vp + c * vq;
        }
      }
    }
  }
  return v;
}

const Mat2& sigma(int axis) {
  switch (axis) {
    case 0: {
      static const Mat2 sx = (Mat2() << 0, 1, 1, 0).finished();
      return sx;
    }
    case 1: {
      static const Mat2 sy = (Mat2() << Complex(0, 0), Complex(0, -1), Complex(0, 1),
                              Complex(0, 0))
                                 .finished();
      return sy;
    }
    default: {
      static const Mat2 sz = (Mat2() << 1, 0, 0, -1).finished();
      return sz;
    }
  }
}

/// Working state for Weyl-chamber normalization. Every move rewrites
/// u = (k1a⊗k1b) U_d(alphas) (k2a⊗k2b) into an equal form (up to global
/// phase, fixed afterwards by overlap alignment).
struct ChamberState {
  std::array<double, 3>& al;
  Mat2& k1a;
  Mat2& k1b;
  Mat2& k2a;
  Mat2& k2b;

  // alpha_i -= n*pi/2; compensated by a Pauli pair folded into k2.
  void shift(int i, int n) {
    al[static_cast<std::size_t>(i)] -= n * (kPi / 2.0);
    if (n % 2 != 0) {
      k2a = sigma(i) * k2a;
      k2b = sigma(i) * k2b;
    }
  }

  // Exchange alpha_i and alpha_j; c = (sigma_i + sigma_j)/sqrt2 on both
  // qubits and both sides.
  void swap(int i, int j) {
    std::swap(al[static_cast<std::size_t>(i)], al[static_cast<std::size_t>(j)]);
    const Mat2 c = ((sigma(i) + sigma(j)) / std::sqrt(2.0)).eval();
    k1a = k1a * c;
    k1b = k1b * c;
    k2a = c * k2a;
    k2b = c * k2b;
  }

  // Negate alpha_i and alpha_j; conjugation by sigma_k ⊗ I, k the third axis.
  void flip(int i, int j) {
    al[static_cast<std::size_t>(i)] = -al[static_cast<std::size_t>(i)];
    al[static_cast<std::size_t>(j)] = -al[static_cast<std::size_t>(j)];
    const int k = 3 - i - j;
    k1a = k1a * sigma(k);
    k2a = sigma(k) * k2a;
  }
};

void canonicalize_chamber(std::array<double, 3>& al, Mat2& k1a, Mat2& k1b, Mat2& k2a,
                          Mat2& k2b) {
  ChamberState st{al, k1a, k1b, k2a, k2b};
  const double quarter = kPi / 4.0;

  // Wrap every coordinate into [-pi/4, pi/4].
  for (int i = 0; i < 3; ++i) {
    const int n = static_cast<int>(std::round(al[static_cast<std::size_t>(i)] / (kPi / 2.0)));
    if (n != 0) st.shift(i, n);
  }

  // Sort by magnitude, descending.
  auto mag = [&](int i) { return std::abs(al[static_cast<std::size_t>(i)]); };
  if (mag(0) < mag(1)) st.swap(0, 1);
  if (mag(1) < mag(2)) st.swap(1, 2);
  if (mag(0) < mag(1)) st.swap(0, 1);

  // Make ax, ay >= 0 with paired sign flips (the sign parity lands on az).
  if (al[0] < 0.0 && al[1] < 0.0) {
    st.flip(0, 1);
  } else if (al[0] < 0.0 && al[2] < 0.0) {
    st.flip(0, 2);
  } else if (al[1] < 0.0 && al[2] < 0.0) {
    st.flip(1, 2);
  }
  if (al[0] < 0.0) st.flip(0, 2);
  if (al[1] < 0.0) st.flip(1, 2);

  // On the ax = pi/4 face, (pi/4, ay, az) ~ (pi/4, ay, -az): fix az >= 0.
  if (al[0] >= quarter - 1e-12 && al[2] < 0.0) {
    st.flip(0, 2);
    st.shift(0, -1);
    if (al[0] > quarter) al[0] = quarter;
  }
}

}  // namespace

std::array<double, 4> lambdas_from_alphas(const std::array<double, 3>& a) {
  return {a[0] - a[1] + a[2], -a[0] + a[1] + a[2], -a[0] - a[1] - a[2], a[0] + a[1] - a[2]};
}

std::array<double, 3> alphas_from_lambdas(const std::array<double, 4>& l) {
  return {0.25 * (l[0] - l[1] - l[2] + l[3]), 0.25 * (-l[0] + l[1] - l[2] + l[3]),
          0.25 * (l[0] + l[1] - l[2] - l[3])};
}

Mat4 canonical_gate(double ax, double ay, double az) {
  const std::array<double, 4> l = lambdas_from_alphas({ax, ay, az});
  Vec4 d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(kI * l[static_cast<std::size_t>(k)]);
  const Mat4& q = magic_basis_matrix();
  return q * d.asDiagonal() * q.adjoint();
}

Mat4 interaction_core(const CanonicalForm& c) {
  Vec4 d;
  for (int k = 0; k < 4; ++k) d(k) = std::exp(kI * c.lambdas[static_cast<std::size_t>(k)]);
  const Mat4& q = magic_basis_matrix();
  return q * d.asDiagonal() * q.adjoint();
}

Mat4 reconstruct(const CanonicalForm& c) {
  return std::exp(kI * c.global_phase) * tensor(c.k1a, c.k1b) *
         canonical_gate(c.alphas[0], c.alphas[1], c.alphas[2]) * tensor(c.k2a, c.k2b);
}

std::pair<Mat2, Mat2> factor_local_pair(const Mat4& product, double tol) {
  // Blocks B_ij = a(i,j) * b; the largest block fixes b up to the phase of
  // a(i,j), which the projection onto b then restores on the a side.
  int pi = 0, pj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double n = product.block<2, 2>(2 * i, 2 * j).norm();
      if (n > best) {
        best = n;
        pi = i;
        pj = j;
      }
    }
  }
  if (best < 1e-8) {
    throw std::invalid_argument("factor_local_pair: vanishing pivot block");
  }
  const Mat2 b = (product.block<2, 2>(2 * pi, 2 * pj) * (std::sqrt(2.0) / best)).eval();
  Mat2 a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = 0.5 * (product.block<2, 2>(2 * i, 2 * j) * b.adjoint()).trace();
    }
  }
  if ((tensor(a, b) - product).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("factor_local_pair: input is not a one-qubit tensor product");
  }
  return {a, b};
}

CanonicalForm kak_decompose(const Mat4& u) {
  require_unitary(u, tol::unitary_api);

  // Normalize into SU(4) with the principal fourth root of the determinant.
  const Complex det = u.determinant();
  const double phase0 = std::arg(det) / 4.0;
  const Mat4 su = u * std::exp(-kI * phase0);

  const Mat4& q = magic_basis_matrix();
  const Mat4 m = q.adjoint() * su * q;
  const Mat4 mtm = m.transpose() * m;  // complex symmetric unitary

  RMat4 re = 0.5 * (mtm.real() + mtm.real().transpose());
  RMat4 im = 0.5 * (mtm.imag() + mtm.imag().transpose());
  RMat4 p = joint_diagonalize(re, im);
  if (p.determinant() < 0.0) p.col(3) *= -1.0;

  const Mat4 diag = p.transpose().cast<Complex>() * mtm * p.cast<Complex>();
  {
    double off = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) off = std::max(off, std::abs(diag(i, j)));
      }
    }
    if (off > 1e-9) {
      throw std::runtime_error("kak_decompose: joint diagonalization failed to converge");
    }
  }

  // Half-phases of m^T m, branch fixed so the sum is 0 mod 2*pi (det of the
  // core stays +1 and the outer orthogonal factor lands in SO(4)).
  std::array<double, 4> lam{};
  for (int k = 0; k < 4; ++k) lam[static_cast<std::size_t>(k)] = 0.5 * std::arg(diag(k, k));
  double sum = lam[0] + lam[1] + lam[2] + lam[3];
  const int parity = static_cast<int>(std::llround(sum / kPi));
  if (parity % 2 != 0) {
    int j = 0;
    for (int k = 1; k < 4; ++k) {
      if (lam[static_cast<std::size_t>(k)] > lam[static_cast<std::size_t>(j)]) j = k;
    }
    lam[static_cast<std::size_t>(j)] = wrap_angle(lam[static_cast<std::size_t>(j)] - kPi);
  }

  Vec4 dinv;
  for (int k = 0; k < 4; ++k) dinv(k) = std::exp(-kI * lam[static_cast<std::size_t>(k)]);
  const Mat4 o1 = m * p.cast<Complex>() * dinv.asDiagonal();  // real orthogonal
  if (o1.imag().cwiseAbs().maxCoeff() > 1e-7) {
    throw std::runtime_error("kak_decompose: outer factor is not real");
  }

  const Mat4 k1m = q * o1 * q.adjoint();
  const Mat4 k2m = q * p.transpose().cast<Complex>() * q.adjoint();
  auto [k1a, k1b] = factor_local_pair(k1m, 1e-7);
  auto [k2a, k2b] = factor_local_pair(k2m, 1e-7);

  CanonicalForm c;
  c.alphas = alphas_from_lambdas(lam);
  c.k1a = k1a;
  c.k1b = k1b;
  c.k2a = k2a;
  c.k2b = k2b;
  canonicalize_chamber(c.alphas, c.k1a, c.k1b, c.k2a, c.k2b);
  c.lambdas = lambdas_from_alphas(c.alphas);

  c.global_phase = 0.0;
  const Mat4 bare = reconstruct(c);
  c.global_phase = phase_align(u, bare);

  if (distance_up_to_phase(u, bare) > 1e-8) {
    throw std::runtime_error("kak_decompose: reconstruction residual too large");
  }
  return c;
}

}  // namespace eforge
