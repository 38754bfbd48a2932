#include "eforge/oracle.hpp"

#include "eforge/arc.hpp"
#include "eforge/gates.hpp"
#include "eforge/magic.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace eforge;
using namespace eforge::test;

namespace {
constexpr double kPi = std::numbers::pi;

TwoQubitState zero_state() { return TwoQubitState(basis_state(0)); }

OracleBudget small_budget(std::uint64_t seed = 7) {
  OracleBudget b;
  b.restarts = 12;
  b.max_iterations = 1200;
  b.seed = seed;
  return b;
}
}  // namespace

TEST_CASE("k = 0 returns the input concurrence for any gate") {
  const OracleResult r =
      max_concurrence_k_uses(gate_cp(1.1), 0, zero_state(), small_budget());
  CHECK(r.best_concurrence <= 1e-9);

  const OracleResult rb =
      max_concurrence_k_uses(gate_cnot(), 0, TwoQubitState(bell_phi_plus()), small_budget());
  CHECK(rb.best_concurrence == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("CNOT entangles maximally in one use") {
  const OracleResult r = max_concurrence_k_uses(gate_cnot(), 1, zero_state(), small_budget());
  CHECK(r.best_concurrence >= 1.0 - 1e-6);
}

TEST_CASE("CP(pi/2) single-use optimum matches the analytic ceiling") {
  const OracleResult r =
      max_concurrence_k_uses(gate_cp(kPi / 2.0), 1, zero_state(), small_budget());
  CHECK(std::abs(r.best_concurrence - std::sin(kPi / 4.0)) < 1e-3);
  CHECK(r.best_concurrence < 1.0 - 1e-4);
  CHECK(r.best_concurrence <= analytic_ceiling(gate_cp(kPi / 2.0), 1) + 1e-4);

  const OracleResult r2 =
      max_concurrence_k_uses(gate_cp(kPi / 2.0), 2, zero_state(), small_budget());
  CHECK(r2.best_concurrence >= 1.0 - 1e-6);
}

TEST_CASE("best concurrence is monotone in k and below the Lemma-2 ceiling") {
  const Mat4 g = gate_cp(kPi / 3.0);
  double prev = -1.0;
  for (int k = 0; k <= 3; ++k) {
    const OracleResult r = max_concurrence_k_uses(g, k, zero_state(), small_budget());
    CHECK(r.best_concurrence >= prev - 1e-9);
    CHECK(r.best_concurrence <= analytic_ceiling(g, k) + 1e-4);
    prev = r.best_concurrence;
  }
}

TEST_CASE("identical seed and budget reproduce the result bitwise") {
  const OracleBudget b = small_budget(99);
  const OracleResult r1 = max_concurrence_k_uses(gate_cp(0.9), 2, zero_state(), b);
  const OracleResult r2 = max_concurrence_k_uses(gate_cp(0.9), 2, zero_state(), b);
  CHECK(r1.best_concurrence == r2.best_concurrence);
  CHECK(r1.best_params.angles == r2.best_params.angles);
  CHECK(r1.converged == r2.converged);
}

TEST_CASE("serial and parallel modes agree bitwise") {
  const OracleBudget b = small_budget(123);
  const OracleResult rp =
      max_concurrence_k_uses(gate_cp(1.3), 2, zero_state(), b, OracleMode::Parallel);
  const OracleResult rs =
      max_concurrence_k_uses(gate_cp(1.3), 2, zero_state(), b, OracleMode::Serial);
  CHECK(rp.best_concurrence == rs.best_concurrence);
  CHECK(rp.best_params.angles == rs.best_params.angles);

  const OracleResult mp =
      min_concurrence_k_uses(gate_cp(1.3), 1, TwoQubitState(bell_phi_plus()), b,
                             OracleMode::Parallel);
  const OracleResult ms =
      min_concurrence_k_uses(gate_cp(1.3), 1, TwoQubitState(bell_phi_plus()), b,
                             OracleMode::Serial);
  CHECK(mp.best_concurrence == ms.best_concurrence);
}

TEST_CASE("min_runs_to_one matches the analytic run counts") {
  CHECK(min_runs_to_one(gate_cnot(), zero_state(), small_budget()) == 1);
  CHECK(min_runs_to_one(gate_cp(kPi / 2.0), zero_state(), small_budget()) == 2);

  // Partially entangled input with C = sin(pi/4): one run of CP(pi/2).
  const double eta = 0.5 * (kPi / 4.0);
  Vec4 v = Vec4::Zero();
  v(0) = std::cos(eta);
  v(3) = std::sin(eta);
  CHECK(min_runs_to_one(gate_cp(kPi / 2.0), TwoQubitState(v), small_budget()) == 1);

  CHECK_THROWS_AS(min_runs_to_one(gate_swap(), zero_state(), small_budget()),
                  NotEntanglingError);
}

TEST_CASE("min_runs_to_disentangle mirrors the entangling count") {
  const TwoQubitState bell(bell_phi_plus());
  CHECK(min_runs_to_disentangle(gate_cnot(), bell, small_budget()) == 1);
  CHECK(min_runs_to_disentangle(gate_cp(kPi / 2.0), bell, small_budget()) == 2);
  CHECK_THROWS_AS(min_runs_to_disentangle(gate_cp(1.0), zero_state(), small_budget()),
                  std::invalid_argument);
}

TEST_CASE("budget validation and exhaustion") {
  OracleBudget bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(max_concurrence_k_uses(gate_cnot(), 1, zero_state(), bad), BadBudgetError);

  OracleBudget capped = small_budget();
  capped.k_cap = 1;
  CHECK_THROWS_AS(min_runs_to_one(gate_cp(kPi / 4.0), zero_state(), capped),
                  BudgetExhaustedError);
}

TEST_CASE("entangle and disentangle counts agree on test gates") {
  const TwoQubitState bell(bell_phi_plus());
  for (double theta : {kPi / 2.0, 2.0}) {
    const Mat4 g = gate_cp(theta);
    CHECK(min_runs_to_one(g, zero_state(), small_budget()) ==
          min_runs_to_disentangle(g, bell, small_budget()));
  }
}
