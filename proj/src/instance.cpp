#include "robustfl/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace robustfl {

std::size_t binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = m - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / num) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

std::string to_string(Variant v) { return v == Variant::Urfl ? "urfl" : "scrfl"; }

Variant parse_variant(const std::string& text) {
  if (text == "urfl" || text == "URFL") return Variant::Urfl;
  if (text == "scrfl" || text == "SCRFL") return Variant::Scrfl;
  throw std::invalid_argument("unknown variant '" + text + "' (expected urfl or scrfl)");
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Diagonal: return "diagonal";
    case ViolationKind::Negative: return "negative";
    case ViolationKind::Asymmetric: return "asymmetric";
    case ViolationKind::Triangle: return "triangle";
  }
  return "unknown";
}

Instance::Instance(Variant variant, std::size_t k, std::vector<double> supply_cost, Matrix dist,
                   std::size_t num_clients)
    : variant_(variant),
      k_(k),
      supply_cost_(std::move(supply_cost)),
      dist_(std::move(dist)),
      num_clients_(num_clients) {
  const std::size_t n = supply_cost_.size();
  if (n == 0) throw std::invalid_argument("instance needs at least one facility");
  if (num_clients_ == 0) throw std::invalid_argument("instance needs at least one client");
  if (dist_.rows() != n + num_clients_ || dist_.cols() != n + num_clients_) {
    throw std::invalid_argument("distance matrix must be (n+m)x(n+m) = " +
                                std::to_string(n + num_clients_) + " square, got " +
                                std::to_string(dist_.rows()) + "x" + std::to_string(dist_.cols()));
  }
  if (k_ < 1 || k_ > num_clients_) {
    throw std::invalid_argument("scenario budget k=" + std::to_string(k_) + " outside [1, " +
                                std::to_string(num_clients_) + "]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(supply_cost_[i]) || supply_cost_[i] < 0.0) {
      throw std::invalid_argument("supply cost of facility " + std::to_string(i) +
                                  " must be finite and nonnegative");
    }
  }
  for (double v : dist_.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("distance matrix has non-finite entries");
  }
}

Instance Instance::from_coordinates(Variant variant, std::size_t k, std::vector<double> supply_cost,
                                    std::vector<Point> facilities, std::vector<Point> clients) {
  if (facilities.size() != supply_cost.size()) {
    throw std::invalid_argument("one supply cost per facility coordinate required");
  }
  std::vector<Point> all = facilities;
  all.insert(all.end(), clients.begin(), clients.end());
  Matrix dist(all.size(), all.size());
  for (std::size_t p = 0; p < all.size(); ++p) {
    for (std::size_t q = 0; q < all.size(); ++q) {
      dist(p, q) = p == q ? 0.0 : std::hypot(all[p].x - all[q].x, all[p].y - all[q].y);
    }
  }
  Instance inst(variant, k, std::move(supply_cost), std::move(dist), clients.size());
  inst.facility_coords_ = std::move(facilities);
  inst.client_coords_ = std::move(clients);
  return inst;
}

Instance Instance::with_k(std::size_t k) const {
  Instance copy = *this;
  if (k < 1 || k > num_clients_) {
    throw std::invalid_argument("scenario budget k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(num_clients_) + "]");
  }
  copy.k_ = k;
  return copy;
}

Instance Instance::with_variant(Variant variant) const {
  Instance copy = *this;
  copy.variant_ = variant;
  return copy;
}

std::vector<MetricViolation> validate_metric(const Matrix& dist, double tol) {
  std::vector<MetricViolation> out;
  const std::size_t p = dist.rows();
  if (dist.cols() != p) throw std::invalid_argument("distance matrix must be square");
  for (std::size_t a = 0; a < p; ++a) {
    if (std::abs(dist(a, a)) > tol) {
      out.push_back({ViolationKind::Diagonal, a, a, 0, dist(a, a)});
    }
    for (std::size_t b = 0; b < p; ++b) {
      if (a != b && dist(a, b) < -tol) {
        out.push_back({ViolationKind::Negative, a, b, 0, -dist(a, b)});
      }
      if (a < b && std::abs(dist(a, b) - dist(b, a)) > tol) {
        out.push_back({ViolationKind::Asymmetric, a, b, 0, dist(a, b) - dist(b, a)});
      }
    }
  }
  // Ordered triples with a < c cover every inequality once when d is
  // symmetric; the asymmetric case is already reported above.
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t c = a + 1; c < p; ++c) {
      for (std::size_t b = 0; b < p; ++b) {
        if (b == a || b == c) continue;
        const double residual = dist(a, c) - dist(a, b) - dist(b, c);
        if (residual > tol) out.push_back({ViolationKind::Triangle, a, b, c, residual});
      }
    }
  }
  return out;
}

std::vector<MetricViolation> validate_metric(const Instance& inst, double tol) {
  return validate_metric(inst.metric(), tol);
}

bool Scenario::contains(std::size_t j) const {
  return std::binary_search(members.begin(), members.end(), j);
}

CombinationCursor::CombinationCursor(std::size_t m, std::size_t k) : m_(m), current_(k) {
  if (k > m) throw std::invalid_argument("subset size exceeds ground set");
  for (std::size_t i = 0; i < k; ++i) current_[i] = i;
}

bool CombinationCursor::advance() {
  const std::size_t k = current_.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (current_[i] < m_ - k + i) {
      ++current_[i];
      for (std::size_t t = i + 1; t < k; ++t) current_[t] = current_[t - 1] + 1;
      return true;
    }
  }
  return false;
}

void for_each_scenario(std::size_t m, std::size_t k, bool exact_size_only,
                       const std::function<void(const Scenario&)>& visit) {
  if (k < 1 || k > m) {
    throw std::invalid_argument("scenario budget k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(m) + "]");
  }
  const std::size_t first = exact_size_only ? k : 1;
  Scenario s;
  for (std::size_t size = first; size <= k; ++size) {
    CombinationCursor cursor(m, size);
    do {
      s.members = cursor.current();
      visit(s);
    } while (cursor.advance());
  }
}

std::vector<Scenario> enumerate_scenarios(std::size_t m, std::size_t k, bool exact_size_only) {
  std::vector<Scenario> out;
  for_each_scenario(m, k, exact_size_only, [&](const Scenario& s) { out.push_back(s); });
  return out;
}

Instance generate_euclidean(const GeneratorParams& params) {
  if (params.n < 1 || params.m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
  if (!(params.cost_min <= params.cost_max) || params.cost_min < 0.0) {
    throw std::invalid_argument("cost range must satisfy 0 <= cost_min <= cost_max");
  }
  if (!(params.box_size > 0.0)) throw std::invalid_argument("box_size must be positive");

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coord(0.0, params.box_size);
  std::uniform_real_distribution<double> cost(params.cost_min, params.cost_max);

  std::vector<Point> facilities(params.n);
  std::vector<Point> clients(params.m);
  std::vector<double> costs(params.n);
  for (auto& f : facilities) f = {coord(rng), coord(rng)};
  for (auto& c : clients) c = {coord(rng), coord(rng)};
  for (auto& c : costs) c = params.cost_min == params.cost_max ? params.cost_min : cost(rng);
  return Instance::from_coordinates(params.variant, params.k, std::move(costs),
                                    std::move(facilities), std::move(clients));
}

}  // namespace robustfl
