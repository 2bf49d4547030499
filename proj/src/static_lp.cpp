#include "robustfl/static_lp.hpp"

#include <algorithm>
#include <numeric>

namespace robustfl {

namespace {

std::string ij(const char* prefix, std::size_t i, std::size_t j) {
  return std::string(prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string idx(const char* prefix, std::size_t i) {
  return std::string(prefix) + "_" + std::to_string(i);
}

// Variables shared by every compact formulation.
struct CompactVars {
  std::vector<std::size_t> x;
  std::size_t mu = 0;
  std::vector<std::size_t> omega;
};

CompactVars add_common(LinearProgram& lp, const Instance& inst) {
  CompactVars v;
  for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
    v.x.push_back(lp.add_variable(idx("x", i), inst.supply_cost(i)));
  }
  v.mu = lp.add_variable("mu", static_cast<double>(inst.k()));
  for (std::size_t j = 0; j < inst.num_clients(); ++j) {
    v.omega.push_back(lp.add_variable(idx("omega", j), 1.0));
  }
  return v;
}

LpSolution solve_or_throw(const LinearProgram& lp, const SolverOptions& options,
                          const char* what) {
  LpSolution sol = solve_lp(lp, options);
  if (sol.status != LpStatus::Optimal) {
    throw InfeasibleError(std::string(what) + " LP is " + to_string(sol.status));
  }
  return sol;
}

void fill_common(StaticSolveResult& res, const Instance& inst, const LinearProgram& lp,
                 const CompactVars& v) {
  const LpSolution& sol = res.lp_solution;
  res.x.units.resize(inst.num_facilities());
  for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
    res.x.units[i] = std::max(sol.x[v.x[i]], 0.0);
  }
  res.mu = sol.x[v.mu];
  res.omega.resize(inst.num_clients());
  for (std::size_t j = 0; j < inst.num_clients(); ++j) res.omega[j] = sol.x[v.omega[j]];
  res.objective = sol.objective;
  res.first_stage_cost = res.x.cost(inst);
  res.worst_second_stage_cost =
      static_cast<double>(inst.k()) * res.mu +
      std::accumulate(res.omega.begin(), res.omega.end(), 0.0);
  (void)lp;
}

void normalize_columns(StaticAssignment& policy) {
  for (std::size_t j = 0; j < policy.num_clients(); ++j) {
    const double cov = policy.coverage(j);
    if (cov <= 0.0) continue;
    for (std::size_t i = 0; i < policy.num_facilities(); ++i) policy.y(i, j) /= cov;
  }
}

void require_variant(const Instance& inst, Variant v, const char* who) {
  if (inst.variant() != v) {
    throw std::invalid_argument(std::string(who) + " needs a " + to_string(v) + " instance");
  }
}

}  // namespace

StaticSolveResult solve_static_urfl(const Instance& inst, const SolverOptions& options) {
  require_variant(inst, Variant::Urfl, "solve_static_urfl");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();

  LinearProgram lp;
  const CompactVars v = add_common(lp, inst);
  Matrix yvar(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) yvar(i, j) = lp.add_variable(ij("y", i, j), 0.0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms{{v.mu, 1.0}, {v.omega[j], 1.0}};
    for (std::size_t i = 0; i < n; ++i) {
      terms.push_back({static_cast<std::size_t>(yvar(i, j)), -inst.distance(i, j)});
    }
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0.0, idx("price", j));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({static_cast<std::size_t>(yvar(i, j)), 1.0});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 1.0, idx("cover", j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.add_constraint({{v.x[i], 1.0}, {static_cast<std::size_t>(yvar(i, j)), -1.0}},
                        Relation::GreaterEqual, 0.0, ij("open", i, j));
    }
  }

  StaticSolveResult res;
  res.variant = Variant::Urfl;
  res.lp_solution = solve_or_throw(lp, options, "static URFL");
  fill_common(res, inst, lp, v);
  res.y = StaticAssignment(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      res.y.y(i, j) = std::max(res.lp_solution.x[static_cast<std::size_t>(yvar(i, j))], 0.0);
    }
  }
  return res;
}

StaticSolveResult solve_static_scrfl(const Instance& inst, const SolverOptions& options) {
  require_variant(inst, Variant::Scrfl, "solve_static_scrfl");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  const double k = static_cast<double>(inst.k());

  LinearProgram lp;
  const CompactVars v = add_common(lp, inst);
  std::vector<std::size_t> eta(n);
  Matrix lam(n, m);
  Matrix yvar(n, m);
  for (std::size_t i = 0; i < n; ++i) eta[i] = lp.add_variable(idx("eta", i), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lam(i, j) = lp.add_variable(ij("lambda", i, j), 0.0);
      yvar(i, j) = lp.add_variable(ij("y", i, j), 0.0);
    }
  }
  auto at = [](const Matrix& mm, std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(mm(i, j));
  };
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms{{v.mu, 1.0}, {v.omega[j], 1.0}};
    for (std::size_t i = 0; i < n; ++i) terms.push_back({at(yvar, i, j), -inst.distance(i, j)});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0.0, idx("price", j));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({at(yvar, i, j), 1.0});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 1.0, idx("cover", j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms{{v.x[i], 1.0}, {eta[i], -k}};
    for (std::size_t j = 0; j < m; ++j) terms.push_back({at(lam, i, j), -1.0});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0.0, idx("load", i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lp.add_constraint({{eta[i], 1.0}, {at(lam, i, j), 1.0}, {at(yvar, i, j), -1.0}},
                        Relation::GreaterEqual, 0.0, ij("share", i, j));
    }
  }

  StaticSolveResult res;
  res.variant = Variant::Scrfl;
  res.lp_solution = solve_or_throw(lp, options, "static SCRFL");
  fill_common(res, inst, lp, v);
  const auto& sx = res.lp_solution.x;
  res.eta.resize(n);
  res.lambda = Matrix(n, m);
  res.y = StaticAssignment(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    res.eta[i] = sx[eta[i]];
    for (std::size_t j = 0; j < m; ++j) {
      res.lambda(i, j) = sx[at(lam, i, j)];
      res.y.y(i, j) = std::max(sx[at(yvar, i, j)], 0.0);
    }
  }
  normalize_columns(res.y);
  return res;
}

StaticSolveResult solve_static_scrfl_eliminated(const Instance& inst,
                                                const SolverOptions& options) {
  require_variant(inst, Variant::Scrfl, "solve_static_scrfl_eliminated");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  const double k = static_cast<double>(inst.k());

  LinearProgram lp;
  const CompactVars v = add_common(lp, inst);
  std::vector<std::size_t> eta(n);
  std::vector<std::size_t> lam(n * m);
  for (std::size_t i = 0; i < n; ++i) eta[i] = lp.add_variable(idx("eta", i), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) lam[i * m + j] = lp.add_variable(ij("lambda", i, j), 0.0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms{{v.mu, 1.0}, {v.omega[j], 1.0}};
    for (std::size_t i = 0; i < n; ++i) {
      terms.push_back({eta[i], -inst.distance(i, j)});
      terms.push_back({lam[i * m + j], -inst.distance(i, j)});
    }
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0.0, idx("price", j));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      terms.push_back({eta[i], 1.0});
      terms.push_back({lam[i * m + j], 1.0});
    }
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 1.0, idx("cover", j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> terms{{v.x[i], 1.0}, {eta[i], -k}};
    for (std::size_t j = 0; j < m; ++j) terms.push_back({lam[i * m + j], -1.0});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 0.0, idx("load", i));
  }

  StaticSolveResult res;
  res.variant = Variant::Scrfl;
  res.lp_solution = solve_or_throw(lp, options, "eliminated static SCRFL");
  fill_common(res, inst, lp, v);
  const auto& sx = res.lp_solution.x;
  res.eta.resize(n);
  res.lambda = Matrix(n, m);
  res.y = StaticAssignment(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    res.eta[i] = sx[eta[i]];
    for (std::size_t j = 0; j < m; ++j) {
      res.lambda(i, j) = sx[lam[i * m + j]];
      res.y.y(i, j) = std::max(res.eta[i] + res.lambda(i, j), 0.0);
    }
  }
  normalize_columns(res.y);
  return res;
}

StaticSolveResult solve_static(const Instance& inst, const SolverOptions& options) {
  return inst.variant() == Variant::Urfl ? solve_static_urfl(inst, options)
                                         : solve_static_scrfl(inst, options);
}

double static_objective(const Instance& inst, const SupplyVector& x,
                        const StaticAssignment& policy) {
  return x.cost(inst) + worst_scenario_for_policy(inst, policy).value;
}

StaticAssignment closest_assignment(const Instance& inst, const SupplyVector& x) {
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  if (x.size() != n) throw std::invalid_argument("supply vector length must equal facility count");
  const bool open_indicator = inst.variant() == Variant::Urfl;

  std::vector<double> cap(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cap[i] = std::max(0.0, open_indicator ? std::min(x[i], 1.0) : x[i]);
    total += cap[i];
  }
  if (total < 1.0 - kEps) {
    throw InfeasibleError("supply " + std::to_string(total) + " cannot cover a single client");
  }

  StaticAssignment out(n, m);
  std::vector<std::size_t> order(n);
  for (std::size_t j = 0; j < m; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inst.distance(a, j) < inst.distance(b, j);
    });
    double remaining = 1.0;
    for (std::size_t i : order) {
      if (remaining <= 0.0) break;
      const double take = std::min(cap[i], remaining);
      out.y(i, j) = take;
      remaining -= take;
    }
    // Absorb rounding so coverage is exactly one.
    if (remaining > 0.0) {
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (out.y(*it, j) > 0.0) {
          out.y(*it, j) += remaining;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace robustfl
