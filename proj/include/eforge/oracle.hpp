#pragma once

#include "eforge/types.hpp"

#include <cstdint>
#include <vector>

namespace eforge {

/// Z-Y-Z Euler angles for every one-qubit unitary of a k-use interleaving:
/// 2(k+1) one-qubit unitaries = 6(k+1) angles. Global phases are omitted
/// (concurrence is phase-invariant).
struct LocalParams {
  std::vector<double> angles;
};

struct OracleBudget {
  int restarts = 32;
  int max_iterations = 2000;  // Nelder-Mead iterations per restart
  std::uint64_t seed = 12345;
  int k_cap = 16;  // search limit for min_runs_* sweeps
};

struct OracleResult {
  double best_concurrence = 0.0;
  LocalParams best_params;
  int restarts = 0;
  std::uint64_t seed = 0;
  bool converged = false;
};

enum class OracleMode {
  Parallel,  // restarts distributed over OpenMP threads
  Serial,    // reference path, same results in the same order
};

/// Best output concurrence found over all local-unitary interleavings
/// X_k U ... U X_0 with k uses of u applied to `input`. Deterministic for a
/// fixed budget/seed regardless of mode. Throws BadBudgetError.
OracleResult max_concurrence_k_uses(const Mat4& u, int k, const TwoQubitState& input,
                                    const OracleBudget& budget,
                                    OracleMode mode = OracleMode::Parallel);

/// Same search minimizing the output concurrence (disentangling direction).
OracleResult min_concurrence_k_uses(const Mat4& u, int k, const TwoQubitState& input,
                                    const OracleBudget& budget,
                                    OracleMode mode = OracleMode::Parallel);

/// Smallest k whose maximization reaches concurrence >= 1 - 1e-6.
/// Throws NotEntanglingError / BudgetExhaustedError (k exceeds budget.k_cap).
int min_runs_to_one(const Mat4& u, const TwoQubitState& input, const OracleBudget& budget,
                    OracleMode mode = OracleMode::Parallel);

/// Smallest k whose minimization from a maximally entangled input reaches
/// concurrence <= 1e-6.
int min_runs_to_disentangle(const Mat4& u, const TwoQubitState& input,
                            const OracleBudget& budget, OracleMode mode = OracleMode::Parallel);

/// Analytic ceiling sin(min(k*Omega, pi)/2) on the concurrence reachable
/// with k uses from a product input.
double analytic_ceiling(const Mat4& u, int k);

}  // namespace eforge
