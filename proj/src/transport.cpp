#include "robustfl/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "robustfl/lp.hpp"

namespace robustfl {

double SupplyVector::total() const { return std::accumulate(units.begin(), units.end(), 0.0); }

bool SupplyVector::is_integral(double tol) const {
  return std::all_of(units.begin(), units.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

double SupplyVector::cost(const Instance& inst) const {
  double c = 0.0;
  for (std::size_t i = 0; i < units.size(); ++i) c += inst.supply_cost(i) * units[i];
  return c;
}

double usable_supply(const Instance& inst, const SupplyVector& x) {
  if (inst.variant() == Variant::Scrfl) return x.total();
  double s = 0.0;
  for (double v : x.units) s += std::min(v, 1.0);
  return s;
}

ScenarioAssignment second_stage_cost(const Instance& inst, const SupplyVector& x,
                                     const Scenario& scenario) {
  const std::size_t n = inst.num_facilities();
  if (x.size() != n) throw std::invalid_argument("supply vector length must equal facility count");
  for (double v : x.units) {
    if (!(v >= -kEps)) throw std::invalid_argument("supply must be nonnegative");
  }
  for (std::size_t j : scenario.members) {
    if (j >= inst.num_clients()) throw std::invalid_argument("scenario client out of range");
  }

  ScenarioAssignment out;
  out.scenario = scenario;
  const std::size_t s = scenario.size();
  out.flow = Matrix(n, s);
  if (s == 0) return out;

  const bool soft = inst.variant() == Variant::Scrfl;
  const double need = soft ? static_cast<double>(s) : 1.0;
  const double have = usable_supply(inst, x);
  if (have < need - kEps) {
    std::ostringstream msg;
    if (soft) {
      msg << "total supply " << have << " is below scenario demand " << s;
    } else {
      msg << "open capacity " << have << " cannot give a client unit coverage";
    }
    throw InfeasibleError(msg.str());
  }

  LinearProgram lp;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < s; ++p) {
      // A client never needs more than one unit on an arc.
      const double upper = soft ? 1.0 : std::clamp(x[i], 0.0, 1.0);
      lp.add_variable("y_" + std::to_string(i) + "_" + std::to_string(scenario.members[p]),
                      inst.distance(i, scenario.members[p]), 0.0, upper);
    }
  }
  for (std::size_t p = 0; p < s; ++p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) terms.push_back({i * s + p, 1.0});
    lp.add_constraint(std::move(terms), Relation::GreaterEqual, 1.0,
                      "cover_" + std::to_string(scenario.members[p]));
  }
  if (soft) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (std::size_t p = 0; p < s; ++p) terms.push_back({i * s + p, 1.0});
      lp.add_constraint(std::move(terms), Relation::LessEqual, std::max(x[i], 0.0),
                        "supply_" + std::to_string(i));
    }
  }

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw InfeasibleError("second-stage transportation problem is " + to_string(sol.status));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < s; ++p) out.flow(i, p) = sol.x[i * s + p];
  }
  out.cost = sol.objective;

  if (x.is_integral()) {
    for (double v : out.flow.data()) {
      if (std::abs(v - std::round(v)) > 1e-7) {
        throw std::logic_error("transportation optimum is fractional for integral supply");
      }
    }
  }
  return out;
}

}  // namespace robustfl
