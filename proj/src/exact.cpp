#include "robustfl/exact.hpp"

#include <cmath>

#include "robustfl/adversary.hpp"

namespace robustfl {

ExactLpResult solve_full_lp(const Instance& inst, const FullLpOptions& options) {
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  const std::size_t k = inst.k();
  const std::size_t count = binomial(m, k);
  if (count > kFullLpMaxScenarios && !options.force) {
    throw SizeGuardError("full LP needs C(" + std::to_string(m) + "," + std::to_string(k) +
                         ") = " + std::to_string(count) + " scenarios, limit " +
                         std::to_string(kFullLpMaxScenarios) + "; pass force to override");
  }
  const bool soft = inst.variant() == Variant::Scrfl;

  LinearProgram lp;
  std::vector<std::size_t> xv(n);
  for (std::size_t i = 0; i < n; ++i) {
    xv[i] = lp.add_variable("x_" + std::to_string(i), inst.supply_cost(i));
  }
  const std::size_t t = lp.add_variable("t", 1.0);

  const auto scenarios = enumerate_scenarios(m, k, true);
  std::vector<std::size_t> first_var(scenarios.size());
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const auto& members = scenarios[s].members;
    const std::string tag = "s" + std::to_string(s) + "_";
    first_var[s] = lp.num_variables();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j : members) {
        lp.add_variable("y_" + tag + std::to_string(i) + "_" + std::to_string(j), 0.0);
      }
    }
    const std::size_t w = members.size();
    auto var = [&](std::size_t i, std::size_t p) { return first_var[s] + i * w + p; };
    for (std::size_t p = 0; p < w; ++p) {
      std::vector<Term> cover;
      for (std::size_t i = 0; i < n; ++i) cover.push_back({var(i, p), 1.0});
      lp.add_constraint(std::move(cover), Relation::GreaterEqual, 1.0,
                        "cover_" + tag + std::to_string(members[p]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (soft) {
        std::vector<Term> load{{xv[i], 1.0}};
        for (std::size_t p = 0; p < w; ++p) load.push_back({var(i, p), -1.0});
        lp.add_constraint(std::move(load), Relation::GreaterEqual, 0.0,
                          "supply_" + tag + std::to_string(i));
      } else {
        for (std::size_t p = 0; p < w; ++p) {
          lp.add_constraint({{xv[i], 1.0}, {var(i, p), -1.0}}, Relation::GreaterEqual, 0.0,
                            "open_" + tag + std::to_string(i) + "_" + std::to_string(members[p]));
        }
      }
    }
    std::vector<Term> epi{{t, 1.0}};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < w; ++p) {
        epi.push_back({var(i, p), -inst.distance(i, members[p])});
      }
    }
    lp.add_constraint(std::move(epi), Relation::GreaterEqual, 0.0, "epigraph_" + tag);
  }

  const LpSolution sol = solve_lp(lp, options.solver);
  if (sol.status != LpStatus::Optimal) {
    throw InfeasibleError("full scenario LP is " + to_string(sol.status));
  }

  ExactLpResult out;
  out.objective = sol.objective;
  out.x.units.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x.units[i] = std::max(sol.x[xv[i]], 0.0);
  out.first_stage_cost = out.x.cost(inst);
  out.second_stage_cost = out.objective - out.first_stage_cost;
  out.scenario_count = scenarios.size();
  out.assignments.reserve(scenarios.size());
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    ScenarioAssignment a;
    a.scenario = scenarios[s];
    const std::size_t w = a.scenario.size();
    a.flow = Matrix(n, w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < w; ++p) {
        const double v = sol.x[first_var[s] + i * w + p];
        a.flow(i, p) = v;
        a.cost += inst.distance(i, a.scenario.members[p]) * v;
      }
    }
    out.assignments.push_back(std::move(a));
  }
  return out;
}

IntegralOptimum solve_integral_optimum(const Instance& inst, const IntegralOptions& options) {
  const std::size_t n = inst.num_facilities();
  const bool soft = inst.variant() == Variant::Scrfl;
  const std::size_t base = soft ? inst.k() + 1 : 2;

  std::size_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (candidates > kIntegralMaxCandidates) break;
    candidates *= base;
  }
  if (candidates > kIntegralMaxCandidates && !options.force) {
    throw SizeGuardError("integral search space " + std::to_string(base) + "^" +
                         std::to_string(n) + " exceeds " +
                         std::to_string(kIntegralMaxCandidates) + "; pass force to override");
  }

  ExactEvaluationOptions eval;
  eval.force = options.force;

  IntegralOptimum best;
  bool found = false;
  std::vector<std::size_t> digits(n, 0);
  SupplyVector x;
  x.units.assign(n, 0.0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) x.units[i] = static_cast<double>(digits[i]);
    const double first = x.cost(inst);
    const bool feasible = usable_supply(inst, x) >= (soft ? static_cast<double>(inst.k()) : 1.0) - kEps;
    if (feasible && (!found || first < best.objective - kEps)) {
      const ExactWorstCase wc = evaluate_first_stage_exact(inst, x, eval);
      ++best.candidates_evaluated;
      const double total = first + wc.value;
      if (!found || total < best.objective - kEps) {
        found = true;
        best.x = x;
        best.objective = total;
        best.first_stage_cost = first;
        best.second_stage_cost = wc.value;
        best.worst_scenario = wc.scenario;
      }
    }
    // Lexicographic successor with the last facility varying fastest.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < base) break;
      digits[pos] = 0;
      if (pos == 0) {
        pos = n;
        break;
      }
    }
    if (pos == n || n == 0) break;
  }
  if (!found) throw InfeasibleError("no integral first stage can serve k clients");
  return best;
}

}  // namespace robustfl
