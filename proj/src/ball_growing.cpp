#include "robustfl/ball_growing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace robustfl {

std::string to_string(ClusterKind kind) {
  switch (kind) {
    case ClusterKind::Crowded: return "crowded";
    case ClusterKind::Undersupplied: return "undersupplied";
    case ClusterKind::Supplied: return "supplied";
  }
  return "?";
}

double auto_alpha(std::size_t k) {
  if (k < 3) return 2.0;
  const double lk = std::log(static_cast<double>(k));
  return std::max(2.0, lk / std::log(lk));
}

std::size_t level_bound(std::size_t k, double alpha) {
  if (k <= 1) return 0;
  const double v = std::log(static_cast<double>(k)) / std::log(alpha);
  return static_cast<std::size_t>(std::ceil(v - 1e-9));
}

namespace {

bool inside(double d, double radius) { return d <= radius + kEps; }

}  // namespace

Classification classify(const Instance& inst, const SupplyVector& x_star, double opt2,
                        double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
  if (!(opt2 >= -kEps)) throw std::invalid_argument("opt2 must be nonnegative");
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  if (x_star.size() != n) throw std::invalid_argument("supply vector length must equal facility count");
  const std::size_t k = inst.k();

  Classification cls;
  cls.alpha = alpha;
  cls.radius_unit = 5.0 * std::max(opt2, 0.0) / static_cast<double>(k);
  cls.level_bound = level_bound(k, alpha);
  cls.facility_removed.assign(n, false);
  const double r = cls.radius_unit;
  const double log_k = std::log(static_cast<double>(k)) / std::log(alpha);

  std::vector<bool> active(m, true);
  std::size_t remaining = m;

  auto clients_within = [&](std::size_t j, double radius) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < m; ++p) {
      if (active[p] && inside(inst.point_distance(inst.client_point(j), inst.client_point(p)), radius)) {
        out.push_back(p);
      }
    }
    return out;
  };
  auto facilities_within = [&](std::size_t j, double radius) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (!cls.facility_removed[i] && inside(inst.distance(i, j), radius)) out.push_back(i);
    }
    return out;
  };
  auto take = [&](std::vector<std::size_t> members, ClusterKind kind, std::size_t center,
                  std::size_t level, double sp) {
    auto& bucket = kind == ClusterKind::Crowded         ? cls.crowded
                   : kind == ClusterKind::Undersupplied ? cls.undersupplied
                                                        : cls.supplied;
    for (std::size_t p : members) {
      active[p] = false;
      bucket.push_back(p);
    }
    remaining -= members.size();
    Cluster c;
    c.kind = kind;
    c.center = center;
    c.level = level;
    c.members = std::move(members);
    c.medium_supply = sp;
    cls.clusters.push_back(std::move(c));
  };

  while (remaining > 0) {
    std::size_t j = 0;
    while (!active[j]) ++j;
    for (std::size_t level = 1;; ++level) {
      if (level > cls.level_bound + 1) {
        throw std::logic_error("ball level " + std::to_string(level) + " exceeds ceil(log_alpha k) + 1");
      }
      cls.max_level = std::max(cls.max_level, level);
      if (static_cast<double>(level) > log_k + 1e-9) ++cls.levels_above_log;

      const double lv = static_cast<double>(level);
      auto inner = clients_within(j, (2 * lv - 1) * r);
      auto outer = clients_within(j, (2 * lv + 1) * r);
      const auto medium = facilities_within(j, 2 * lv * r);
      double sp = 0.0;
      for (std::size_t i : medium) sp += x_star[i];

      TraceEntry entry{j, level, inner.size(), sp, outer.size(), std::nullopt, true};
      const double ni = static_cast<double>(inner.size());
      const double no = static_cast<double>(outer.size());
      if (inner.size() >= k) {
        entry.fired = ClusterKind::Crowded;
        cls.trace.push_back(entry);
        take(std::move(inner), ClusterKind::Crowded, j, level, sp);
        break;
      }
      if (sp < ni / 2.0 - kEps) {
        entry.fired = ClusterKind::Undersupplied;
        cls.trace.push_back(entry);
        take(std::move(inner), ClusterKind::Undersupplied, j, level, sp);
        break;
      }
      if (sp >= no / (2.0 * alpha) - kEps) {
        entry.fired = ClusterKind::Supplied;
        cls.trace.push_back(entry);
        take(std::move(outer), ClusterKind::Supplied, j, level, sp);
        for (std::size_t i : medium) cls.facility_removed[i] = true;
        cls.clusters.back().removed_facilities = medium;
        break;
      }
      entry.growth_holds = alpha * ni < no;
      cls.trace.push_back(entry);
      if (!entry.growth_holds) {
        throw std::logic_error("client count failed to grow geometrically at level " +
                               std::to_string(level));
      }
    }
  }
  for (auto* v : {&cls.crowded, &cls.undersupplied, &cls.supplied}) std::sort(v->begin(), v->end());
  return cls;
}

StaticAssignment assign_crowded_clients(const Instance& inst, const SupplyVector& x_star,
                                        const Classification& cls) {
  const std::size_t n = inst.num_facilities();
  const std::size_t k = inst.k();
  StaticAssignment out(n, inst.num_clients());
  for (const Cluster& c : cls.clusters) {
    if (c.kind != ClusterKind::Crowded) continue;
    if (c.members.size() < k) throw std::logic_error("crowded cluster holds fewer than k clients");
    Scenario s;
    s.members.assign(c.members.begin(), c.members.begin() + static_cast<std::ptrdiff_t>(k));
    const ScenarioAssignment a = second_stage_cost(inst, x_star, s);
    for (std::size_t i = 0; i < n; ++i) {
      double share = 0.0;
      for (std::size_t p = 0; p < k; ++p) share += a.flow(i, p);
      share /= static_cast<double>(k);
      for (std::size_t j : c.members) out.y(i, j) = share;
    }
  }
  return out;
}

StaticAssignment assign_undersupplied_clients(const Instance& inst, const SupplyVector& x_star,
                                              const Classification& cls) {
  StaticAssignment out(inst.num_facilities(), inst.num_clients());
  if (cls.undersupplied.empty()) return out;
  Scenario s{cls.undersupplied};
  const ScenarioAssignment a = second_stage_cost(inst, x_star, s);
  for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
    for (std::size_t p = 0; p < s.size(); ++p) out.y(i, s.members[p]) = a.flow(i, p);
  }
  return out;
}

SuppliedAssignment assign_supplied_clients(const Instance& inst, const SupplyVector& x_star,
                                           const Classification& cls) {
  const std::size_t n = inst.num_facilities();
  SuppliedAssignment out;
  out.extra_supply.units.assign(n, 0.0);
  out.y = StaticAssignment(n, inst.num_clients());
  for (const Cluster& c : cls.clusters) {
    if (c.kind != ClusterKind::Supplied) continue;
    if (c.removed_facilities.empty()) {
      throw std::logic_error("supplied cluster centered at client " + std::to_string(c.center) +
                             " has no facility in its medium ball");
    }
    std::size_t hub = c.removed_facilities.front();
    for (std::size_t i : c.removed_facilities) {
      if (inst.supply_cost(i) < inst.supply_cost(hub)) hub = i;
    }
    double sp = 0.0;
    for (std::size_t i : c.removed_facilities) sp += x_star[i];
    out.extra_supply.units[hub] += 2.0 * cls.alpha * sp;
    for (std::size_t j : c.members) out.y.y(hub, j) = 1.0;
    out.hub.push_back(hub);
  }
  return out;
}

AssembledPolicy assemble_static_policy(const Instance& inst, const SupplyVector& x_star,
                                       double opt2, std::optional<double> alpha) {
  const std::size_t n = inst.num_facilities();
  const std::size_t m = inst.num_clients();
  AssembledPolicy out;
  out.classification = classify(inst, x_star, opt2, alpha.value_or(auto_alpha(inst.k())));
  const Classification& cls = out.classification;

  const StaticAssignment crowded = assign_crowded_clients(inst, x_star, cls);
  const StaticAssignment under = assign_undersupplied_clients(inst, x_star, cls);
  SuppliedAssignment supplied = assign_supplied_clients(inst, x_star, cls);

  out.y = StaticAssignment(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.y.y(i, j) = crowded.y(i, j) + under.y(i, j) + supplied.y.y(i, j);
    }
  }
  out.extra_supply = std::move(supplied.extra_supply);
  out.hubs = std::move(supplied.hub);
  out.x_first.units.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.x_first.units[i] = 2.0 * x_star[i] + out.extra_supply[i];
  }
  out.first_stage_cost = out.x_first.cost(inst);
  out.extra_supply_cost = out.extra_supply.cost(inst);
  out.client_cost = client_costs(inst, out.y);
  for (std::size_t j : cls.crowded) out.crowded_cost += out.client_cost[j];
  for (std::size_t j : cls.undersupplied) out.undersupplied_cost += out.client_cost[j];
  out.worst_second_stage_cost = worst_scenario_for_policy(inst, out.y).value;
  out.objective = out.first_stage_cost + out.worst_second_stage_cost;
  out.max_load_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    out.max_load_excess =
        std::max(out.max_load_excess, worst_facility_load(inst, out.y, i) - out.x_first[i]);
  }
  return out;
}

std::vector<double> client_cost_bounds(const Instance& inst, const Classification& cls,
                                       double opt2) {
  std::vector<double> bound(inst.num_clients(), 0.0);
  const double r = cls.radius_unit;
  const double k = static_cast<double>(inst.k());
  for (const Cluster& c : cls.clusters) {
    const double l = static_cast<double>(c.level);
    double b = 0.0;
    switch (c.kind) {
      case ClusterKind::Crowded: b = opt2 / k + 2.0 * (2.0 * l - 1.0) * r; break;
      case ClusterKind::Undersupplied: b = opt2; break;
      case ClusterKind::Supplied: b = (4.0 * l + 1.0) * r; break;
    }
    for (std::size_t j : c.members) bound[j] = b;
  }
  return bound;
}

std::string trace_to_json(const Classification& cls) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const TraceEntry& e : cls.trace) {
    iterations.push_back({{"center", e.center},
                          {"level", e.level},
                          {"inner_clients", e.inner_clients},
                          {"medium_supply", e.medium_supply},
                          {"outer_clients", e.outer_clients},
                          {"fired", e.fired ? to_string(*e.fired) : "grow"}});
  }
  nlohmann::json clusters = nlohmann::json::array();
  for (const Cluster& c : cls.clusters) {
    clusters.push_back({{"kind", to_string(c.kind)},
                        {"center", c.center},
                        {"level", c.level},
                        {"members", c.members},
                        {"removed_facilities", c.removed_facilities},
                        {"medium_supply", c.medium_supply}});
  }
  nlohmann::json doc = {{"alpha", cls.alpha},
                        {"radius_unit", cls.radius_unit},
                        {"level_bound", cls.level_bound},
                        {"max_level", cls.max_level},
                        {"iterations", iterations},
                        {"clusters", clusters}};
  return doc.dump(2);
}

}  // namespace robustfl
