#pragma once

#include <vector>

#include "robustfl/instance.hpp"
#include "robustfl/lp.hpp"
#include "robustfl/transport.hpp"

namespace robustfl {

inline constexpr std::size_t kFullLpMaxScenarios = 10000;
inline constexpr std::size_t kIntegralMaxCandidates = 100000;

struct FullLpOptions {
  /// Lift the C(m, k) <= 10000 guard.
  bool force = false;
  SolverOptions solver;
};

/// Optimum of the scenario-by-scenario LP relaxation.
struct ExactLpResult {
  double objective = 0.0;
  SupplyVector x;
  double first_stage_cost = 0.0;   // OPT1
  double second_stage_cost = 0.0;  // OPT2 = objective - OPT1
  std::vector<ScenarioAssignment> assignments;  // one per size-k scenario
  std::size_t scenario_count = 0;
};

/// Builds min c.x + t over x, t and one flow block y^S per size-k scenario with
///   sum_i y^S_ij >= 1, t >= sum d_ij y^S_ij,
/// and y^S_ij <= x_i (uncapacitated) or sum_{j in S} y^S_ij <= x_i (soft).
/// Smaller scenarios are dominated and omitted.
ExactLpResult solve_full_lp(const Instance& inst, const FullLpOptions& options = {});

struct IntegralOptimum {
  SupplyVector x;
  double objective = 0.0;
  double first_stage_cost = 0.0;
  double second_stage_cost = 0.0;
  Scenario worst_scenario;
  std::size_t candidates_evaluated = 0;
};

struct IntegralOptions {
  bool force = false;
};

/// Enumerates x in {0,1}^n (uncapacitated) or {0..k}^n (soft) in
/// lexicographic order and keeps the strict minimizer, so ties resolve to
/// the lexicographically smallest vector. Vectors whose supply cost alone
/// cannot beat the incumbent are skipped without evaluation.
IntegralOptimum solve_integral_optimum(const Instance& inst, const IntegralOptions& options = {});

}  // namespace robustfl
