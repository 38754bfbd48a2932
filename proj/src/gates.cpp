#include "eforge/gates.hpp"

#include "eforge/kak.hpp"
#include "eforge/numeric.hpp"

#include <cmath>

namespace eforge {

namespace {
const Complex kI(0.0, 1.0);
}

const Mat2& pauli_x() {
  static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
  return m;
}

const Mat2& pauli_y() {
  static const Mat2 m =
      (Mat2() << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)).finished();
  return m;
}

const Mat2& pauli_z() {
  static const Mat2 m = (Mat2() << 1, 0, 0, -1).finished();
  return m;
}

const Mat2& identity2() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

const Mat2& hadamard() {
  static const Mat2 m = ((Mat2() << 1, 1, 1, -1).finished() / std::sqrt(2.0)).eval();
  return m;
}

Mat4 gate_identity() { return Mat4::Identity(); }

Mat4 gate_cnot() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Mat4 gate_cz() {
  Mat4 m = Mat4::Identity();
  m(3, 3) = -1;
  return m;
}

Mat4 gate_swap() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Mat4 gate_sqrt_swap() {
  Mat4 m = Mat4::Identity();
  const Complex p = Complex(1, 1) / 2.0;
  const Complex q = Complex(1, -1) / 2.0;
  m(1, 1) = p;
  m(1, 2) = q;
  m(2, 1) = q;
  m(2, 2) = p;
  return m;
}

Mat4 gate_cp(double theta) {
  Mat4 m = Mat4::Identity();
  m(3, 3) = std::exp(kI * theta);
  return m;
}

Mat4 gate_canonical(double ax, double ay, double az) { return canonical_gate(ax, ay, az); }

Mat4 gate_xx(double t) { return canonical_gate(t, 0.0, 0.0); }

Mat4 resolve_gate(const GateSpec& spec, double unitary_tol) {
  if (spec.matrix) {
    if (!check_unitary(*spec.matrix, unitary_tol)) {
      throw NotUnitaryError("gate matrix is not unitary within tolerance " +
                            std::to_string(unitary_tol));
    }
    return *spec.matrix;
  }

  auto need = [&](std::size_t n) {
    if (spec.params.size() != n) {
      throw ParseError("gate '" + spec.name + "' expects " + std::to_string(n) +
                       " parameter(s), got " + std::to_string(spec.params.size()));
    }
  };

  if (spec.name == "identity") {
    need(0);
    return gate_identity();
  }
  if (spec.name == "cnot") {
    need(0);
    return gate_cnot();
  }
  if (spec.name == "cz") {
    need(0);
    return gate_cz();
  }
  if (spec.name == "swap") {
    need(0);
    return gate_swap();
  }
  if (spec.name == "sqrt_swap") {
    need(0);
    return gate_sqrt_swap();
  }
  if (spec.name == "cp") {
    need(1);
    return gate_cp(spec.params[0]);
  }
  if (spec.name == "canonical") {
    need(3);
    return gate_canonical(spec.params[0], spec.params[1], spec.params[2]);
  }
  if (spec.name == "xx") {
    need(1);
    return gate_xx(spec.params[0]);
  }
  throw ParseError("unknown gate name '" + spec.name + "'");
}

}  // namespace eforge
