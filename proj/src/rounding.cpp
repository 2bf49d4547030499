#include "robustfl/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace robustfl {

namespace {

double ceil_tol(double v) { return std::ceil(v - 1e-9); }

void finish(const Instance& inst, RoundedSolution& out, const RoundingOptions& options) {
  out.cost_first = out.x_int.cost(inst);
  out.cost_second_policy = worst_scenario_for_policy(inst, out.policy).value;
  if (options.exact && (inst.num_clients() <= kExactEvaluationMaxClients || options.force)) {
    ExactEvaluationOptions eval;
    eval.force = options.force;
    const ExactWorstCase wc = evaluate_first_stage_exact(inst, out.x_int, eval);
    out.cost_second_exact = wc.value;
    out.worst_scenario = wc.scenario;
  }
}

std::vector<std::size_t> ascending(const std::vector<double>& key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

}  // namespace

UrflRounding round_urfl(const Instance& inst, const StaticSolveResult& sol, double alpha,
                        const RoundingOptions& options) {
  if (inst.variant() != Variant::Urfl) throw std::invalid_argument("round_urfl needs a urfl instance");
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();

  UrflRounding out;
  out.radius = client_costs(inst, sol.y);
  const auto& L = out.radius;

  std::vector<bool> open(n, false);
  for (std::size_t j : ascending(L)) {
    bool disjoint = true;
    for (std::size_t s : out.centers) {
      const double d = inst.point_distance(inst.client_point(j), inst.client_point(s));
      if (d <= alpha * (L[j] + L[s])) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) continue;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (sol.x[i] > kEps && inst.distance(i, j) <= alpha * L[j] &&
          (!pick || inst.supply_cost(i) < inst.supply_cost(*pick))) {
        pick = i;
      }
    }
    if (!pick) {
      throw std::logic_error("ball around client " + std::to_string(j) +
                             " holds no fractionally open facility");
    }
    out.centers.push_back(j);
    out.opened.push_back(*pick);
    open[*pick] = true;
  }

  out.x_int.units.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out.x_int.units[i] = open[i] ? 1.0 : 0.0;
  out.policy = StaticAssignment(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (open[i] && (!best || inst.distance(i, j) < inst.distance(*best, j))) best = i;
    }
    out.policy.y(*best, j) = 1.0;
  }
  finish(inst, out, options);
  return out;
}

FilteredSolution filter_g_close(const Instance& inst, const StaticSolveResult& sol, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();

  FilteredSolution out;
  out.x_bar.units.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x_bar.units[i] = sol.x[i] / alpha;
  out.y_bar = StaticAssignment(n, m);
  out.g.assign(m, 0.0);

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < m; ++j) {
    order.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (sol.y.y(i, j) > kEps) order.push_back(i);
    }
    if (order.empty()) throw std::invalid_argument("client " + std::to_string(j) + " has no assigned facility");
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return inst.distance(a, j) < inst.distance(b, j);
    });
    double mass = 0.0;
    std::size_t cut = 0;
    while (cut < order.size()) {
      mass += sol.y.y(order[cut], j);
      ++cut;
      if (mass >= alpha - kEps) break;
    }
    out.g[j] = inst.distance(order[cut - 1], j);
    for (std::size_t p = 0; p < cut; ++p) out.y_bar.y(order[p], j) = sol.y.y(order[p], j) / mass;
  }
  return out;
}

ScrflRounding round_scrfl(const Instance& inst, const StaticSolveResult& sol, double alpha,
                          const RoundingOptions& options) {
  if (inst.variant() != Variant::Scrfl) throw std::invalid_argument("round_scrfl needs a scrfl instance");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();

  FilteredSolution f = filter_g_close(inst, sol, alpha);
  ScrflRounding out;
  out.radius = f.g;
  Matrix& y = f.y_bar.y;

  enum class Role { Idle, Rounded, Small, Hub };
  std::vector<Role> role(n, Role::Idle);
  std::vector<double> supply(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f.x_bar[i];
    if (v >= 0.5 - kEps) {
      role[i] = Role::Rounded;
      supply[i] = ceil_tol(v);
      out.rounded_up.push_back(i);
    } else if (v > kEps) {
      role[i] = Role::Small;
    }
  }

  auto small_flow = [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (role[i] == Role::Small) s += y(i, j);
    }
    return s;
  };
  std::vector<bool> pending(m, false);
  for (std::size_t j = 0; j < m; ++j) pending[j] = small_flow(j) >= 0.5 - kEps;

  for (;;) {
    std::optional<std::size_t> pivot;
    for (std::size_t j = 0; j < m; ++j) {
      if (pending[j] && (!pivot || f.g[j] < f.g[*pivot])) pivot = j;
    }
    if (!pivot) break;
    const std::size_t jp = *pivot;

    std::vector<std::size_t> V;
    for (std::size_t i = 0; i < n; ++i) {
      if (role[i] == Role::Small && y(i, jp) > 0.0) V.push_back(i);
    }
    if (V.empty()) throw std::logic_error("pending client " + std::to_string(jp) + " has no small-supply facility");
    std::size_t hub = V.front();
    double mass = 0.0;
    for (std::size_t i : V) {
      mass += f.x_bar[i];
      if (inst.supply_cost(i) < inst.supply_cost(hub)) hub = i;
    }
    supply[hub] = ceil_tol(mass);

    for (std::size_t j = 0; j < m; ++j) {
      double moved = 0.0;
      for (std::size_t i : V) {
        moved += y(i, j);
        y(i, j) = 0.0;
      }
      // Only pending clients keep the merged flow; for them the hub is
      // within 3 g_j because g_jp <= g_j.
      if (pending[j]) y(hub, j) = moved;
    }
    for (std::size_t i : V) role[i] = i == hub ? Role::Hub : Role::Idle;

    out.pivots.push_back(jp);
    out.hubs.push_back(hub);
    out.merged.push_back(std::move(V));
    for (std::size_t j = 0; j < m; ++j) {
      if (pending[j] && small_flow(j) < 0.5 - kEps) pending[j] = false;
    }
  }

  // Flow still on unmerged small facilities is dropped, and every client
  // scales what remains back to unit coverage.
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == Role::Small || role[i] == Role::Idle) {
      for (std::size_t j = 0; j < m; ++j) y(i, j) = 0.0;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double cov = f.y_bar.coverage(j);
    if (cov <= kEps) throw std::logic_error("client " + std::to_string(j) + " lost all its flow");
    for (std::size_t i = 0; i < n; ++i) y(i, j) /= cov;
  }

  out.policy = std::move(f.y_bar);
  out.x_int.units.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double need = ceil_tol(worst_facility_load(inst, out.policy, i));
    if (need > supply[i]) out.topped_up.push_back(i);
    out.x_int.units[i] = std::max(supply[i], need);
  }
  finish(inst, out, options);
  return out;
}

}  // namespace robustfl
