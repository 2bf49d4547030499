#include "robustfl/adversary.hpp"

#include <algorithm>
#include <numeric>

#include "robustfl/lp.hpp"

namespace robustfl {

double StaticAssignment::coverage(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < y.rows(); ++i) s += y(i, j);
  return s;
}

bool StaticAssignment::covers_all(double tol) const {
  for (double v : y.data()) {
    if (v < -tol) return false;
  }
  for (std::size_t j = 0; j < y.cols(); ++j) {
    if (coverage(j) < 1.0 - tol) return false;
  }
  return true;
}

std::vector<double> client_costs(const Instance& inst, const StaticAssignment& policy) {
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  if (policy.num_facilities() != n || policy.num_clients() != m) {
    throw std::invalid_argument("static assignment must be n x m");
  }
  std::vector<double> cost(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) cost[j] += inst.distance(i, j) * policy.y(i, j);
  }
  return cost;
}

std::vector<std::size_t> top_k_indices(const std::vector<double>& values, std::size_t k) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  k = std::min(k, values.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    [&](std::size_t a, std::size_t b) {
                      return values[a] > values[b] || (values[a] == values[b] && a < b);
                    });
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

WorstScenario worst_scenario_for_policy(const Instance& inst, const StaticAssignment& policy) {
  const auto cost = client_costs(inst, policy);
  WorstScenario out;
  out.scenario.members = top_k_indices(cost, inst.k());
  for (std::size_t j : out.scenario.members) out.value += cost[j];
  return out;
}

double static_scenario_cost(const Instance& inst, const StaticAssignment& policy,
                            const Scenario& scenario) {
  const auto cost = client_costs(inst, policy);
  double v = 0.0;
  for (std::size_t j : scenario.members) v += cost[j];
  return v;
}

double worst_value_via_dual(const Instance& inst, const StaticAssignment& policy) {
  const auto cost = client_costs(inst, policy);
  LinearProgram lp;
  const std::size_t mu = lp.add_variable("mu", static_cast<double>(inst.k()));
  for (std::size_t j = 0; j < cost.size(); ++j) {
    const std::size_t omega = lp.add_variable("omega_" + std::to_string(j), 1.0);
    lp.add_constraint({{mu, 1.0}, {omega, 1.0}}, Relation::GreaterEqual, cost[j]);
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("adversary dual LP is " + to_string(sol.status));
  }
  return sol.objective;
}

double worst_facility_load(const Instance& inst, const StaticAssignment& policy, std::size_t i) {
  if (i >= policy.num_facilities()) throw std::out_of_range("facility index out of range");
  std::vector<double> row(policy.num_clients());
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = policy.y(i, j);
  double load = 0.0;
  for (std::size_t j : top_k_indices(row, inst.k())) load += row[j];
  return load;
}

ExactWorstCase evaluate_first_stage_exact(const Instance& inst, const SupplyVector& x,
                                          const ExactEvaluationOptions& options) {
  const std::size_t m = inst.num_clients();
  if (m > kExactEvaluationMaxClients && !options.force) {
    throw SizeGuardError("exact worst-case evaluation limited to m <= " +
                         std::to_string(kExactEvaluationMaxClients) + " (got " +
                         std::to_string(m) + "); pass force to override");
  }
  if (inst.variant() == Variant::Scrfl && x.total() < static_cast<double>(inst.k()) - kEps) {
    throw InfeasibleError("total supply " + std::to_string(x.total()) + " below budget k=" +
                          std::to_string(inst.k()));
  }

  ExactWorstCase out;
  std::vector<std::pair<Scenario, double>> values;
  for_each_scenario(m, inst.k(), !options.include_smaller, [&](const Scenario& s) {
    values.emplace_back(s, second_stage_cost(inst, x, s).cost);
  });
  out.scenarios_evaluated = values.size();
  for (const auto& [s, v] : values) out.value = std::max(out.value, v);
  // Near-ties resolve to the lexicographically smallest scenario.
  bool found = false;
  for (const auto& [s, v] : values) {
    if (v >= out.value - kEps && (!found || s < out.scenario)) {
      out.scenario = s;
      found = true;
    }
  }
  return out;
}

}  // namespace robustfl
