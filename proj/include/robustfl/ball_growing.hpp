#pragma once

#include <optional>
#include <string>
#include <vector>

#include "robustfl/adversary.hpp"
#include "robustfl/instance.hpp"
#include "robustfl/transport.hpp"

namespace robustfl {

/// Which removal rule produced a cluster.
///   Crowded:       the inner ball held at least k clients.
///   Undersupplied: the medium ball held less than half a unit per inner client.
///   Supplied:      the medium ball held at least 1/(2 alpha) units per outer client.
enum class ClusterKind { Crowded, Undersupplied, Supplied };

std::string to_string(ClusterKind kind);

/// Balls around client j at level l have radii (2l-1)r, 2l r and (2l+1)r.
struct Cluster {
  ClusterKind kind = ClusterKind::Crowded;
  std::size_t center = 0;
  std::size_t level = 1;
  std::vector<std::size_t> members;             // sorted client indices
  std::vector<std::size_t> removed_facilities;  // Supplied only, sorted
  double medium_supply = 0.0;                   // supply in the medium ball when it fired
};

struct TraceEntry {
  std::size_t center = 0;
  std::size_t level = 1;
  std::size_t inner_clients = 0;
  double medium_supply = 0.0;
  std::size_t outer_clients = 0;
  std::optional<ClusterKind> fired;  // nullopt: level grew
  bool growth_holds = true;          // alpha*inner < outer, meaningful when nothing fired
};

struct Classification {
  std::vector<std::size_t> crowded;        // C1
  std::vector<std::size_t> undersupplied;  // C2
  std::vector<std::size_t> supplied;       // C3
  std::vector<Cluster> clusters;
  double alpha = 2.0;
  double radius_unit = 0.0;  // 5 * opt2 / k
  std::size_t level_bound = 0;  // ceil(log_alpha k)
  std::size_t max_level = 0;
  /// Levels that exceeded the unrounded log_alpha k.
  std::size_t levels_above_log = 0;
  std::vector<TraceEntry> trace;
  std::vector<bool> facility_removed;
};

/// max(2, ln k / ln ln k) for k >= 3, else 2.
double auto_alpha(std::size_t k);

/// ceil(log_alpha k) with a 1e-9 guard against round-off at exact powers.
std::size_t level_bound(std::size_t k, double alpha);

/// Runs the ball-growing classification. Clients are picked lowest index
/// first, balls are closed, and the three tests run in order at each level.
/// Throws std::invalid_argument for alpha <= 1 or negative opt2, and
/// std::logic_error if the level exceeds ceil(log_alpha k) + 1 or the
/// geometric growth step fails.
Classification classify(const Instance& inst, const SupplyVector& x_star, double opt2,
                        double alpha);

/// Crowded clients: each cluster averages the min-cost transport of its k
/// lowest-index members against x_star, so every entry is at most x_star_i / k.
StaticAssignment assign_crowded_clients(const Instance& inst, const SupplyVector& x_star,
                                        const Classification& cls);

/// Undersupplied clients: one transport of the whole set against x_star.
StaticAssignment assign_undersupplied_clients(const Instance& inst, const SupplyVector& x_star,
                                              const Classification& cls);

struct SuppliedAssignment {
  SupplyVector extra_supply;  // x_hat
  StaticAssignment y;
  std::vector<std::size_t> hub;  // chosen facility per Supplied cluster, in cluster order
};

/// Supplied clients: per cluster, 2 alpha times the medium-ball supply is
/// placed at the cheapest removed facility and every member is sent there.
SuppliedAssignment assign_supplied_clients(const Instance& inst, const SupplyVector& x_star,
                                           const Classification& cls);

struct AssembledPolicy {
  Classification classification;
  SupplyVector x_first;  // 2 x_star + x_hat
  SupplyVector extra_supply;
  StaticAssignment y;
  std::vector<std::size_t> hubs;
  double first_stage_cost = 0.0;
  double extra_supply_cost = 0.0;
  double worst_second_stage_cost = 0.0;
  double objective = 0.0;
  double crowded_cost = 0.0;        // sum of crowded clients' static costs
  double undersupplied_cost = 0.0;  // sum of undersupplied clients' static costs
  /// max_i (worst_facility_load(i) - x_first_i); <= 0 when feasible.
  double max_load_excess = 0.0;
  std::vector<double> client_cost;  // L_j under y
};

/// Classification plus the three partial policies stitched into one static
/// solution. alpha = nullopt picks auto_alpha(k).
AssembledPolicy assemble_static_policy(const Instance& inst, const SupplyVector& x_star,
                                       double opt2, std::optional<double> alpha = std::nullopt);

/// Per-client cost bound the construction guarantees given its cluster.
/// Crowded: opt2/k + 2(2l-1) r; Undersupplied: opt2; Supplied: (4l+1) r.
std::vector<double> client_cost_bounds(const Instance& inst, const Classification& cls,
                                       double opt2);

/// Ordered iteration records as JSON text.
std::string trace_to_json(const Classification& cls);

}  // namespace robustfl
