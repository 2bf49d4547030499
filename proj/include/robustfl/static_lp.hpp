#pragma once

#include <vector>

#include "robustfl/adversary.hpp"
#include "robustfl/instance.hpp"
#include "robustfl/lp.hpp"
#include "robustfl/transport.hpp"

namespace robustfl {

/// Optimal static-assignment solution together with its duals.
///
/// mu and omega price the adversary's scenario choice; eta and lambda
/// (soft-capacitated only) price the worst-case load at each facility.
struct StaticSolveResult {
  Variant variant = Variant::Urfl;
  SupplyVector x;
  StaticAssignment y;
  double mu = 0.0;
  std::vector<double> omega;
  std::vector<double> eta;  // n, soft-capacitated only
  Matrix lambda;            // n x m, soft-capacitated only
  double objective = 0.0;
  double first_stage_cost = 0.0;
  double worst_second_stage_cost = 0.0;  // k*mu + sum(omega)
  LpSolution lp_solution;
};

/// Compact LP for the uncapacitated variant:
///
///   min  sum_i c_i x_i + k mu + sum_j omega_j
///   s.t. mu + omega_j >= sum_i d_ij y_ij      for all j
///        sum_i y_ij >= 1                       for all j
///        x_i >= y_ij                           for all i, j
///        x, y, mu, omega >= 0
///
/// Its optimum equals the full scenario LP relaxation.
StaticSolveResult solve_static_urfl(const Instance& inst, const SolverOptions& options = {});

/// Compact LP for the soft-capacitated variant with the load constraint
/// max_S sum_{j in S} y_ij <= x_i dualized through (eta_i, lambda_ij):
///
///   min  sum_i c_i x_i + k mu + sum_j omega_j
///   s.t. mu + omega_j >= sum_i d_ij y_ij      for all j
///        sum_i y_ij >= 1                       for all j
///        x_i >= k eta_i + sum_j lambda_ij      for all i
///        eta_i + lambda_ij >= y_ij             for all i, j
///        all variables >= 0
///
/// Each client column of y is scaled to unit coverage afterwards.
StaticSolveResult solve_static_scrfl(const Instance& inst, const SolverOptions& options = {});

/// Variant of the soft-capacitated LP with y eliminated (y := eta + lambda).
/// This restricts every y_ij to at least eta_i, so its optimum can exceed
/// solve_static_scrfl's; kept for comparison. The returned y is eta + lambda
/// scaled to unit coverage.
StaticSolveResult solve_static_scrfl_eliminated(const Instance& inst,
                                                const SolverOptions& options = {});

/// Dispatches on inst.variant().
StaticSolveResult solve_static(const Instance& inst, const SolverOptions& options = {});

/// Static objective of an arbitrary policy: sum_i c_i x_i plus the top-k
/// sum of client costs.
double static_objective(const Instance& inst, const SupplyVector& x,
                        const StaticAssignment& policy);

/// Serves every client from its nearest facilities first (ties to the lower
/// index) until it is covered exactly once. The per-facility cap is
/// min(x_i, 1) for the uncapacitated variant and x_i otherwise.
/// Throws InfeasibleError when the caps sum to less than 1.
StaticAssignment closest_assignment(const Instance& inst, const SupplyVector& x);

}  // namespace robustfl
