#include "eforge/oracle.hpp"

#include "eforge/arc.hpp"
#include "eforge/magic.hpp"
#include "eforge/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eforge {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Output concurrence of X_k U ... U X_0 |input> with Z-Y-Z locals.
class InterleavingObjective {
 public:
  InterleavingObjective(const Mat4& gate, const Vec4& input, int k)
      : gate_(gate), input_(input), k_(k) {}

  int dimension() const { return 6 * (k_ + 1); }

  double operator()(const std::vector<double>& params) const {
    Vec4 state = input_;
    for (int layer = 0; layer <= k_; ++layer) {
      const std::size_t base = static_cast<std::size_t>(6 * layer);
      apply_local(state, params[base], params[base + 1], params[base + 2], params[base + 3],
                  params[base + 4], params[base + 5]);
      if (layer < k_) state = gate_ * state;
    }
    return concurrence_amplitudes(state);
  }

 private:
  static Mat2 euler_zyz(double a, double b, double c) {
    const double cb = std::cos(0.5 * b), sb = std::sin(0.5 * b);
    const Complex ea = std::exp(Complex(0.0, -0.5 * a));
    const Complex ec = std::exp(Complex(0.0, -0.5 * c));
    Mat2 m;
    m(0, 0) = ea * ec * cb;
    m(0, 1) = -ea * std::conj(ec) * sb;
    m(1, 0) = std::conj(ea) * ec * sb;
    m(1, 1) = std::conj(ea) * std::conj(ec) * cb;
    return m;
  }

  static void apply_local(Vec4& state, double a0, double a1, double a2, double b0, double b1,
                          double b2) {
    const Mat2 a = euler_zyz(a0, a1, a2);
    const Mat2 b = euler_zyz(b0, b1, b2);
    // (a ⊗ b) on the 4-vector via the two 2x2 factors.
    Vec4 next;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Complex acc(0.0, 0.0);
        for (int ii = 0; ii < 2; ++ii) {
          for (int jj = 0; jj < 2; ++jj) {
            acc += a(i, ii) * b(j, jj) * state(2 * ii + jj);
          }
        }
        next(2 * i + j) = acc;
      }
    }
    state = next;
  }

  Mat4 gate_;
  Vec4 input_;
  int k_;
};

struct NelderMeadResult {
  double best = 0.0;
  std::vector<double> point;
  bool converged = false;
};

/// Standard Nelder-Mead maximizing `f`, budgeted by iteration count.
NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& x0, double step,
                                      int max_iterations) {
  const std::size_t n = x0.size();
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, shrink = 0.5;

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
  std::vector<double> value(n + 1);
  for (std::size_t i = 0; i <= n; ++i) value[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  NelderMeadResult result;
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    // Descending by value: order[0] is the best vertex.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });

    const double spread = value[order[0]] - value[order[n]];
    double diameter = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      diameter = std::max(diameter,
                          std::abs(simplex[order[0]][j] - simplex[order[n]][j]));
    }
    if (spread < 1e-13 && diameter < 1e-9) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const std::size_t worst = order[n];
    auto blend = [&](double coef) {
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) {
        p[j] = centroid[j] + coef * (centroid[j] - simplex[worst][j]);
      }
      return p;
    };

    const std::vector<double> reflected = blend(alpha);
    const double fr = f(reflected);
    if (fr > value[order[0]]) {
      const std::vector<double> expanded = blend(gamma);
      const double fe = f(expanded);
      if (fe > fr) {
        simplex[worst] = expanded;
        value[worst] = fe;
      } else {
        simplex[worst] = reflected;
        value[worst] = fr;
      }
    } else if (fr > value[order[n - 1]]) {
      simplex[worst] = reflected;
      value[worst] = fr;
    } else {
      const std::vector<double> contracted = blend(-rho);
      const double fc = f(contracted);
      if (fc > value[worst]) {
        simplex[worst] = contracted;
        value[worst] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          const std::size_t v = order[i];
          for (std::size_t j = 0; j < n; ++j) {
            simplex[v][j] = simplex[order[0]][j] + shrink * (simplex[v][j] - simplex[order[0]][j]);
          }
          value[v] = f(simplex[v]);
        }
      }
    }
  }

  std::size_t best_i = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (value[i] > value[best_i]) best_i = i;
  }
  result.best = value[best_i];
  result.point = simplex[best_i];
  return result;
}

struct RestartOutcome {
  double best = 0.0;
  std::vector<double> point;
  bool converged = false;
};

/// One seeded restart: a wide pass from a random start, then a polish pass
/// around its optimum with a small simplex.
RestartOutcome run_restart(const InterleavingObjective& objective, bool maximize,
                           std::uint64_t sub_seed, int max_iterations) {
  std::mt19937_64 rng(sub_seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<double> x0(static_cast<std::size_t>(objective.dimension()));
  for (double& v : x0) v = angle(rng);

  auto signed_objective = [&](const std::vector<double>& p) {
    const double c = objective(p);
    return maximize ? c : -c;
  };

  const int wide_iters = (max_iterations * 7) / 10;
  const int polish_iters = max_iterations - wide_iters;
  NelderMeadResult wide = nelder_mead_maximize(signed_objective, x0, 0.7, wide_iters);
  NelderMeadResult polish =
      nelder_mead_maximize(signed_objective, wide.point, 0.02, polish_iters);

  RestartOutcome out;
  const bool polish_better = polish.best >= wide.best;
  out.best = polish_better ? polish.best : wide.best;
  out.point = polish_better ? polish.point : wide.point;
  out.converged = wide.converged || polish.converged;
  if (!maximize) out.best = -out.best;
  return out;
}

OracleResult extremal_concurrence(const Mat4& u, int k, const TwoQubitState& input,
                                  const OracleBudget& budget, bool maximize, OracleMode mode) {
  if (budget.restarts < 1 || budget.max_iterations < 1) {
    throw BadBudgetError("oracle budget requires restarts >= 1 and max_iterations >= 1");
  }
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  require_unitary(u, tol::unitary_api);

  const InterleavingObjective objective(u, input.amps(), k);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(budget.restarts));

  const auto run_one = [&](int r) {
    const std::uint64_t sub_seed =
        splitmix64(budget.seed + static_cast<std::uint64_t>(r));
    outcomes[static_cast<std::size_t>(r)] =
        run_restart(objective, maximize, sub_seed, budget.max_iterations);
  };

  if (mode == OracleMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int r = 0; r < budget.restarts; ++r) run_one(r);
  } else {
    for (int r = 0; r < budget.restarts; ++r) run_one(r);
  }

  // Reduce in restart order: deterministic regardless of thread schedule,
  // ties keep the earliest sub-seed.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    const bool better =
        maximize ? outcomes[r].best > outcomes[best].best : outcomes[r].best < outcomes[best].best;
    if (better) best = r;
  }

  OracleResult result;
  result.best_concurrence = outcomes[best].best;
  result.best_params.angles = outcomes[best].point;
  result.restarts = budget.restarts;
  result.seed = budget.seed;
  result.converged = outcomes[best].converged;
  return result;
}

}  // namespace

OracleResult max_concurrence_k_uses(const Mat4& u, int k, const TwoQubitState& input,
                                    const OracleBudget& budget, OracleMode mode) {
  return extremal_concurrence(u, k, input, budget, true, mode);
}

OracleResult min_concurrence_k_uses(const Mat4& u, int k, const TwoQubitState& input,
                                    const OracleBudget& budget, OracleMode mode) {
  return extremal_concurrence(u, k, input, budget, false, mode);
}

int min_runs_to_one(const Mat4& u, const TwoQubitState& input, const OracleBudget& budget,
                    OracleMode mode) {
  if (omega(u).radians() <= tol::zero_omega) {
    throw NotEntanglingError("gate is not entangling (omega = 0)");
  }
  for (int k = 0; k <= budget.k_cap; ++k) {
    const OracleResult r = max_concurrence_k_uses(u, k, input, budget, mode);
    if (r.best_concurrence >= 1.0 - 1e-6) return k;
  }
  throw BudgetExhaustedError("no k <= k_cap reached concurrence 1");
}

int min_runs_to_disentangle(const Mat4& u, const TwoQubitState& input,
                            const OracleBudget& budget, OracleMode mode) {
  if (concurrence(input) < 1.0 - 1e-8) {
    throw std::invalid_argument("input state must be maximally entangled");
  }
  if (omega(u).radians() <= tol::zero_omega) {
    throw NotEntanglingError("gate is not entangling (omega = 0)");
  }
  for (int k = 0; k <= budget.k_cap; ++k) {
    const OracleResult r = min_concurrence_k_uses(u, k, input, budget, mode);
    if (r.best_concurrence <= 1e-6) return k;
  }
  throw BudgetExhaustedError("no k <= k_cap reached concurrence 0");
}

double analytic_ceiling(const Mat4& u, int k) {
  const double w = omega(u).radians();
  return std::sin(0.5 * std::min(static_cast<double>(k) * w, kPi));
}

}  // namespace eforge
