#pragma once

#include <vector>

#include "robustfl/common.hpp"
#include "robustfl/instance.hpp"
#include "robustfl/transport.hpp"

namespace robustfl {

/// A scenario-independent fractional assignment: y(i, j) is the share of
/// client j served by facility i whenever j is realized.
struct StaticAssignment {
  Matrix y;  // n x m

  StaticAssignment() = default;
  StaticAssignment(std::size_t n, std::size_t m) : y(n, m) {}
  explicit StaticAssignment(Matrix m) : y(std::move(m)) {}

  std::size_t num_facilities() const { return y.rows(); }
  std::size_t num_clients() const { return y.cols(); }
  double coverage(std::size_t j) const;
  /// min_j coverage(j) >= 1 - tol and no negative entry.
  bool covers_all(double tol = kEps) const;
};

/// Per-client static service cost L_j = sum_i d_ij y_ij.
std::vector<double> client_costs(const Instance& inst, const StaticAssignment& policy);

/// Indices of the k largest values, ties to the lower index, returned sorted.
std::vector<std::size_t> top_k_indices(const std::vector<double>& values, std::size_t k);

struct WorstScenario {
  Scenario scenario;
  double value = 0.0;
};

/// Worst-case scenario against a static policy: the k clients with the
/// largest L_j (ties to the lower index).
WorstScenario worst_scenario_for_policy(const Instance& inst, const StaticAssignment& policy);

/// Static objective of one explicit scenario: sum over members of L_j.
double static_scenario_cost(const Instance& inst, const StaticAssignment& policy,
                            const Scenario& scenario);

/// Same value as worst_scenario_for_policy, computed as the optimum of the
/// dual LP  min k*mu + sum_j omega_j  s.t.  mu + omega_j >= L_j, mu, omega >= 0.
double worst_value_via_dual(const Instance& inst, const StaticAssignment& policy);

/// Supply facility i needs so the policy is feasible in every scenario:
/// the sum of the k largest entries of row i.
double worst_facility_load(const Instance& inst, const StaticAssignment& policy, std::size_t i);

struct ExactEvaluationOptions {
  /// Search all scenarios of size 1..k instead of exactly k.
  bool include_smaller = false;
  /// Lift the m <= 12 guard.
  bool force = false;
};

struct ExactWorstCase {
  Scenario scenario;
  double value = 0.0;
  std::size_t scenarios_evaluated = 0;
};

inline constexpr std::size_t kExactEvaluationMaxClients = 12;

/// max over scenarios of the optimal second-stage cost for first stage x.
/// Ties keep the lexicographically smallest scenario.
/// Throws InfeasibleError when x cannot serve k clients and SizeGuardError
/// for m > 12 without `force`.
ExactWorstCase evaluate_first_stage_exact(const Instance& inst, const SupplyVector& x,
                                          const ExactEvaluationOptions& options = {});

}  // namespace robustfl
