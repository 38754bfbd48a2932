#include "eforge/synthesis.hpp"

#include "eforge/gates.hpp"
#include "eforge/magic.hpp"
#include "eforge/numeric.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace eforge;
using namespace eforge::test;

namespace {
constexpr double kPi = std::numbers::pi;

Mat4 core_of(const Mat4& u) { return interaction_core(kak_decompose(u)); }

/// Random entangling gate with omega in (lo, hi), by rejection over random
/// chamber alphas dressed in random locals.
Mat4 random_entangling_gate(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(0.0, kPi / 4.0);
  for (;;) {
    double ax = d(rng), ay = d(rng), az = d(rng) * (d(rng) < kPi / 8.0 ? -1.0 : 1.0);
    if (ay > ax) std::swap(ax, ay);
    if (std::abs(az) > ay) az = (az < 0 ? -1.0 : 1.0) * ay;
    const Mat4 u = random_gate_with_alphas(rng, ax, ay, az);
    const double w = omega(u).radians();
    if (w > lo && w < hi) return u;
  }
}
}  // namespace

TEST_CASE("core_phases finds the covering arc of the doubled spectrum") {
  const CorePhases cp = core_phases(core_of(gate_cp(kPi / 2.0)));
  CHECK(cp.omega == doctest::Approx(kPi / 2.0).epsilon(1e-10));
  CHECK(cp.idx_hi != cp.idx_lo);
  // The extreme pair must realize the arc: 2(l_hi - l_lo) = omega mod 2pi.
  const double diff = 2.0 * (cp.lambdas[static_cast<std::size_t>(cp.idx_hi)] -
                             cp.lambdas[static_cast<std::size_t>(cp.idx_lo)]);
  CHECK(std::abs(wrap_angle(diff - cp.omega)) < 1e-10);

  CHECK_THROWS_AS(core_phases(gate_cnot()), std::invalid_argument);  // not diagonal in magic
}

TEST_CASE("seed_product_state is a product state that the core entangles") {
  for (double theta : {kPi / 2.0, kPi / 4.0, kPi / 3.0, 2.2}) {
    const Mat4 core = core_of(gate_cp(theta));
    const TwoQubitState seed = seed_product_state(core);
    CHECK(concurrence(seed) <= 1e-12);
    // One application moves the concurrence to sin(omega/2) exactly.
    CHECK(concurrence(apply_gate(core, seed)) ==
          doctest::Approx(std::sin(theta / 2.0)).epsilon(1e-9));
  }

  // Perfect entangler: one application reaches concurrence 1.
  const Mat4 cnot_core = core_of(gate_cnot());
  const TwoQubitState seed = seed_product_state(cnot_core);
  CHECK(concurrence(seed) <= 1e-12);
  CHECK(concurrence(apply_gate(cnot_core, seed)) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(seed_product_state(core_of(gate_swap())), DegenerateCoreError);
  CHECK_THROWS_AS(seed_product_state(Mat4::Identity()), DegenerateCoreError);
}

TEST_CASE("trajectory follows sin(m omega / 2)") {
  SUBCASE("fixed examples") {
    const Mat4 c2 = core_of(gate_cp(kPi / 2.0));
    const auto t2 = trajectory(c2, seed_product_state(c2), 1);
    CHECK(t2[0].concurrence <= 1e-12);
    CHECK(t2[1].concurrence == doctest::Approx(std::sin(kPi / 4.0)).epsilon(1e-9));

    const Mat4 c4 = core_of(gate_cp(kPi / 4.0));
    const auto t4 = trajectory(c4, seed_product_state(c4), 3);
    CHECK(t4[3].concurrence == doctest::Approx(0.92387953251128674).epsilon(1e-9));
  }
  SUBCASE("random cores, all steps up to N-1") {
    auto rng = make_rng(401);
    for (int it = 0; it < 50; ++it) {
      const Mat4 u = random_entangling_gate(rng, 0.15, kPi - 0.05);
      const Mat4 core = core_of(u);
      const CorePhases cp = core_phases(core);
      const int n = static_cast<int>(n_runs(u));
      const auto steps = trajectory(core, seed_product_state(core), n - 1);
      for (int m = 0; m < n; ++m) {
        CHECK(std::abs(steps[static_cast<std::size_t>(m)].concurrence -
                       std::sin(0.5 * m * cp.omega)) < 1e-9);
      }
    }
  }
}

TEST_CASE("max_entangled_preimage hits the target and maps to concurrence 1") {
  const Mat4 core = core_of(gate_cp(kPi / 2.0));
  SUBCASE("target 1 is already maximally entangled") {
    const TwoQubitState psi = max_entangled_preimage(core, 1.0);
    CHECK(concurrence(psi) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(apply_gate(core, psi)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("band edge cos(omega/2)") {
    const double edge = std::cos(kPi / 4.0);
    const TwoQubitState psi = max_entangled_preimage(core, edge);
    CHECK(concurrence(psi) == doctest::Approx(edge).epsilon(1e-10));
    CHECK(concurrence(apply_gate(core, psi)) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("below the band throws") {
    CHECK_THROWS_AS(max_entangled_preimage(core, 0.5), TargetOutOfRangeError);
  }
  SUBCASE("random cores and targets across the band") {
    auto rng = make_rng(409);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int it = 0; it < 100; ++it) {
      const Mat4 u = random_entangling_gate(rng, 0.1, kPi - 0.05);
      const Mat4 c = core_of(u);
      const double w = core_phases(c).omega;
      const double target = std::cos(0.5 * w) + (1.0 - std::cos(0.5 * w)) * d(rng);
      const TwoQubitState psi = max_entangled_preimage(c, target);
      CHECK(std::abs(concurrence(psi) - target) < 1e-10);
      CHECK(concurrence(apply_gate(c, psi)) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("equal_concurrence_connector maps between equal-concurrence states") {
  SUBCASE("|00> to |++>") {
    Vec4 plus;
    plus << 0.5, 0.5, 0.5, 0.5;
    const TwoQubitState from(basis_state(0)), to(plus);
    const LocalLayer w = equal_concurrence_connector(from, to);
    CHECK((w.matrix() * from.amps() - to.amps()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("Bell to Bell") {
    Vec4 psi_plus = Vec4::Zero();
    psi_plus(1) = psi_plus(2) = 1.0 / std::sqrt(2.0);
    const TwoQubitState from(bell_phi_plus()), to(psi_plus);
    const LocalLayer w = equal_concurrence_connector(from, to);
    CHECK((w.matrix() * from.amps() - to.amps()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(check_unitary(w.a, 1e-10));
    CHECK(check_unitary(w.b, 1e-10));
  }
  SUBCASE("random equal-concurrence pairs, including maximal") {
    auto rng = make_rng(419);
    for (int it = 0; it < 200; ++it) {
      const TwoQubitState from = random_state(rng);
      const TwoQubitState to =
          apply_gate(tensor(random_su2(rng), random_su2(rng)), from);
      const LocalLayer w = equal_concurrence_connector(from, to);
      CHECK((w.matrix() * from.amps() - to.amps()).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
  SUBCASE("mismatched concurrences throw") {
    const TwoQubitState from(basis_state(0)), to(bell_phi_plus());
    CHECK_THROWS_AS(equal_concurrence_connector(from, to), ConcurrenceMismatchError);
  }
}

TEST_CASE("synthesize on catalog gates") {
  SUBCASE("CNOT needs one use") {
    const SynthesizedCircuit c = synthesize_perfect_entangler(gate_cnot());
    CHECK(c.uses == 1);
    CHECK(c.locals.size() == 2);
    CHECK(concurrence(c.product_input) <= 1e-9);
    CHECK(c.certified_output_concurrence >= 1.0 - 1e-8);
    CHECK(verify_circuit(c).ok);
  }
  SUBCASE("CP(pi/2) needs two uses") {
    const SynthesizedCircuit c = synthesize_perfect_entangler(gate_cp(kPi / 2.0));
    CHECK(c.uses == 2);
    CHECK(c.locals.size() == 3);
    CHECK(c.certified_output_concurrence >= 1.0 - 1e-8);
    CHECK(verify_circuit(c).ok);
  }
  SUBCASE("CP(pi/4) needs four uses") {
    const SynthesizedCircuit c = synthesize_perfect_entangler(gate_cp(kPi / 4.0));
    CHECK(c.uses == 4);
    CHECK(verify_circuit(c).ok);
  }
  SUBCASE("non-entangling gates are rejected") {
    CHECK_THROWS_AS(synthesize_perfect_entangler(gate_identity()), NotEntanglingError);
    CHECK_THROWS_AS(synthesize_perfect_entangler(gate_swap()), NotEntanglingError);
  }
}

TEST_CASE("synthesize end-to-end on random entangling gates") {
  auto rng = make_rng(421);
  for (int it = 0; it < 50; ++it) {
    const Mat4 u = random_entangling_gate(rng, 0.05, kPi - 0.01);
    const SynthesizedCircuit c = synthesize_perfect_entangler(u);
    CHECK(c.uses == n_runs(u));
    CHECK(static_cast<std::int64_t>(c.locals.size()) == c.uses + 1);
    CHECK(concurrence(c.product_input) <= 1e-9);
    const CircuitCheck check = verify_circuit(c);
    CHECK(check.ok);
    CHECK(check.output_concurrence >= 1.0 - 1e-8);
    CHECK(check.omega_of_total.radians() >= kPi - 1e-6);
  }
}

TEST_CASE("truncated circuits fail verification within the Lemma-2 budget") {
  auto rng = make_rng(431);
  for (int it = 0; it < 20; ++it) {
    const Mat4 u = random_entangling_gate(rng, 0.6, 0.95 * kPi);
    SynthesizedCircuit c = synthesize_perfect_entangler(u);
    if (c.uses < 2) continue;
    const double w = omega(u).radians();

    // Drop one use (and one layer): the result can no longer be a perfect
    // entangler, and its arc obeys the subadditive bound.
    SynthesizedCircuit truncated = c;
    truncated.locals.erase(truncated.locals.begin() + 1);
    truncated.uses -= 1;
    const CircuitCheck check = verify_circuit(truncated);
    CHECK_FALSE(check.ok);
    CHECK(check.omega_of_total.radians() <=
          static_cast<double>(truncated.uses) * w + 1e-6);
    CHECK(check.output_concurrence <=
          std::sin(0.5 * std::min(static_cast<double>(truncated.uses) * w, kPi)) + 1e-6);
  }
}

TEST_CASE("identity-gate circuit fails verification") {
  SynthesizedCircuit c{{LocalLayer{identity2(), identity2()}, LocalLayer{identity2(), identity2()}},
                       gate_identity(),
                       1,
                       TwoQubitState(basis_state(0)),
                       0.0};
  CHECK_FALSE(verify_circuit(c).ok);
}

TEST_CASE("reversed circuits disentangle their own output") {
  auto rng = make_rng(433);
  for (int it = 0; it < 20; ++it) {
    const Mat4 u = random_entangling_gate(rng, 0.2, kPi - 0.05);
    const SynthesizedCircuit c = synthesize_perfect_entangler(u);
    const Mat4 total = c.total();
    const TwoQubitState entangled = apply_gate(total, c.product_input);
    CHECK(concurrence(entangled) >= 1.0 - 1e-8);

    // Adjoint of every layer in reverse order, same number of gate uses
    // (of u^dag): the maximally entangled output returns to a product state.
    Mat4 reversed = c.locals.back().matrix().adjoint();
    for (std::size_t i = c.locals.size() - 1; i-- > 0;) {
      reversed = c.locals[i].matrix().adjoint() * u.adjoint() * reversed;
    }
    CHECK(concurrence(apply_gate(reversed, entangled)) <= 1e-8);
  }
}
