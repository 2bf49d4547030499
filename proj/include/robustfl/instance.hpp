#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "robustfl/common.hpp"

namespace robustfl {

/// Uncapacitated (open/close with unlimited supply) or soft-capacitated
/// (integral supply units, each paid for) robust facility location.
enum class Variant { Urfl, Scrfl };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A two-stage robust facility location instance.
///
/// Facilities and clients live in one metric. Points are indexed with
/// facilities first: facility i is point i, client j is point n + j.
/// Instances are immutable after construction.
class Instance {
 public:
  /// Throws std::invalid_argument on inconsistent sizes, negative or
  /// non-finite costs/distances, or k outside [1, m].
  Instance(Variant variant, std::size_t k, std::vector<double> supply_cost, Matrix dist,
           std::size_t num_clients);

  /// Builds the metric from planar coordinates (Euclidean distances).
  static Instance from_coordinates(Variant variant, std::size_t k, std::vector<double> supply_cost,
                                   std::vector<Point> facilities, std::vector<Point> clients);

  Variant variant() const { return variant_; }
  std::size_t k() const { return k_; }
  std::size_t num_facilities() const { return supply_cost_.size(); }
  std::size_t num_clients() const { return num_clients_; }
  std::size_t num_points() const { return dist_.rows(); }

  std::span<const double> supply_costs() const { return supply_cost_; }
  double supply_cost(std::size_t i) const { return supply_cost_[i]; }

  std::size_t facility_point(std::size_t i) const { return i; }
  std::size_t client_point(std::size_t j) const { return num_facilities() + j; }

  /// Facility i to client j.
  double distance(std::size_t i, std::size_t j) const { return dist_(i, client_point(j)); }
  double client_distance(std::size_t j1, std::size_t j2) const {
    return dist_(client_point(j1), client_point(j2));
  }
  double point_distance(std::size_t p, std::size_t q) const { return dist_(p, q); }
  const Matrix& metric() const { return dist_; }

  bool has_coordinates() const { return facility_coords_.has_value(); }
  const std::optional<std::vector<Point>>& facility_coordinates() const { return facility_coords_; }
  const std::optional<std::vector<Point>>& client_coordinates() const { return client_coords_; }

  /// Same metric and costs with a different budget or variant.
  Instance with_k(std::size_t k) const;
  Instance with_variant(Variant variant) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Variant variant_;
  std::size_t k_;
  std::vector<double> supply_cost_;
  Matrix dist_;
  std::size_t num_clients_;
  std::optional<std::vector<Point>> facility_coords_;
  std::optional<std::vector<Point>> client_coords_;
};

enum class ViolationKind { Diagonal, Negative, Asymmetric, Triangle };

std::string to_string(ViolationKind kind);

/// One failed metric axiom. For Triangle, (a, b, c) means
/// d(a, c) > d(a, b) + d(b, c) and residual = d(a, c) - d(a, b) - d(b, c).
/// Pair violations leave c unused; Diagonal uses only a.
struct MetricViolation {
  ViolationKind kind;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  double residual = 0.0;
};

/// Checks symmetry, zero diagonal, nonnegativity and the triangle inequality
/// over all points, with absolute tolerance `tol`.
std::vector<MetricViolation> validate_metric(const Matrix& dist, double tol = kEps);
std::vector<MetricViolation> validate_metric(const Instance& inst, double tol = kEps);

/// A set of realized clients, sorted ascending without duplicates.
struct Scenario {
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t j) const;
  friend bool operator==(const Scenario&, const Scenario&) = default;
  friend auto operator<=>(const Scenario&, const Scenario&) = default;
};

/// Lexicographic cursor over the k-subsets of {0..m-1}.
class CombinationCursor {
 public:
  CombinationCursor(std::size_t m, std::size_t k);
  const std::vector<std::size_t>& current() const { return current_; }
  /// Moves to the next subset; false once exhausted.
  bool advance();

 private:
  std::size_t m_;
  std::vector<std::size_t> current_;
};

/// Calls `visit` for every scenario: all size-k subsets when exact_size_only,
/// otherwise every subset of size 1..k ordered by size then lexicographically.
/// Throws std::invalid_argument unless 1 <= k <= m.
void for_each_scenario(std::size_t m, std::size_t k, bool exact_size_only,
                       const std::function<void(const Scenario&)>& visit);
std::vector<Scenario> enumerate_scenarios(std::size_t m, std::size_t k, bool exact_size_only);

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t n = 3;
  std::size_t m = 6;
  std::size_t k = 3;
  Variant variant = Variant::Scrfl;
  double cost_min = 1.0;
  double cost_max = 10.0;
  double box_size = 10.0;
};

/// Facilities and clients uniform in [0, box_size]^2, costs uniform in
/// [cost_min, cost_max]. Deterministic in the seed.
Instance generate_euclidean(const GeneratorParams& params);

}  // namespace robustfl
