#pragma once

#include <optional>
#include <vector>

#include "robustfl/adversary.hpp"
#include "robustfl/static_lp.hpp"

namespace robustfl {

struct RoundedSolution {
  SupplyVector x_int;
  /// Static routing that certifies feasibility: nearest open facility for the
  /// uncapacitated variant, the clustered reassignment otherwise.
  StaticAssignment policy;
  double cost_first = 0.0;
  /// Top-k cost of `policy`; an upper bound on the true worst second stage.
  double cost_second_policy = 0.0;
  /// Worst second stage by scenario enumeration, when it was run.
  std::optional<double> cost_second_exact;
  std::optional<Scenario> worst_scenario;
  /// L_j (uncapacitated) or g_j (soft-capacitated) per client.
  std::vector<double> radius;

  /// Best available worst-case total: exact when present, else policy bound.
  double total() const { return cost_first + cost_second_exact.value_or(cost_second_policy); }
};

struct RoundingOptions {
  /// Evaluate the worst second stage exactly when m <= 12 (or with force).
  bool exact = true;
  bool force = false;
};

struct UrflRounding : RoundedSolution {
  std::vector<std::size_t> centers;  // clients whose balls were selected, in selection order
  std::vector<std::size_t> opened;   // facility opened for each center
};

/// Greedy disjoint balls of radius alpha * L_j in ascending L_j, opening the
/// cheapest fractionally open facility in each; clients go to the nearest
/// open facility. First stage <= OPT1 / (1 - 1/alpha), each client's
/// distance <= 3 alpha L_j.
UrflRounding round_urfl(const Instance& inst, const StaticSolveResult& sol, double alpha = 4.0 / 3.0,
                        const RoundingOptions& options = {});

struct FilteredSolution {
  SupplyVector x_bar;  // x / alpha
  StaticAssignment y_bar;
  std::vector<double> g;  // d_j(alpha)
};

/// Keeps, for every client, its nearest facilities (ties to the lower index)
/// until their y mass reaches alpha, rescales that prefix to unit coverage
/// and drops the rest. Entries of y at or below 1e-9 are ignored.
FilteredSolution filter_g_close(const Instance& inst, const StaticSolveResult& sol, double alpha);

struct ScrflRounding : RoundedSolution {
  std::vector<std::size_t> rounded_up;  // facilities with x_bar >= 1/2
  std::vector<std::size_t> hubs;        // f_c of each clustering step
  std::vector<std::vector<std::size_t>> merged;  // V of each clustering step
  std::vector<std::size_t> pivots;      // j' of each clustering step
  /// Facilities whose final supply had to exceed the step supply to carry
  /// the rescaled flow.
  std::vector<std::size_t> topped_up;
};

/// Filtering, rounding up of large supplies, and clustering of the small
/// ones around the client with smallest g_j. Every routed arc has length at
/// most 3 g_j; first stage <= (4/alpha) OPT1 and the worst second stage is
/// at most (3/(alpha(1-alpha))) OPT2 for OPT1, OPT2 taken from `sol`.
ScrflRounding round_scrfl(const Instance& inst, const StaticSolveResult& sol, double alpha = 0.5,
                          const RoundingOptions& options = {});

}  // namespace robustfl
