#pragma once

#include <vector>

#include "robustfl/common.hpp"
#include "robustfl/instance.hpp"

namespace robustfl {

/// First-stage supply per facility. For the uncapacitated variant entries
/// are read as (fractional) open indicators.
struct SupplyVector {
  std::vector<double> units;

  std::size_t size() const { return units.size(); }
  double operator[](std::size_t i) const { return units[i]; }
  double total() const;
  /// Every entry within `tol` of an integer.
  bool is_integral(double tol = kEps) const;
  double cost(const Instance& inst) const;
};

/// Optimal second-stage routing of one realized scenario.
struct ScenarioAssignment {
  Scenario scenario;
  /// n x |S|; column p is scenario member scenario.members[p].
  Matrix flow;
  double cost = 0.0;
};

/// Supply a scenario can draw on: sum of x for soft capacities, and the sum
/// of min(x_i, 1) for open indicators (a client needs unit coverage).
double usable_supply(const Instance& inst, const SupplyVector& x);

/// Min-cost assignment of the scenario's clients to the supply x.
///
/// Soft-capacitated: sum_p y_ip <= x_i. Uncapacitated: y_ip <= x_i per arc.
/// Throws InfeasibleError when the supply cannot cover the scenario. For
/// integral x the returned flow is 0/1 (checked; std::logic_error otherwise).
ScenarioAssignment second_stage_cost(const Instance& inst, const SupplyVector& x,
                                     const Scenario& scenario);

}  // namespace robustfl
