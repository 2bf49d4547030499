#include <doctest.h>

#include <json.hpp>

#include "../support/family.hpp"
#include "helpers.hpp"
#include "robustfl/ball_growing.hpp"
#include "robustfl/exact.hpp"

using namespace robustfl;

TEST_CASE("automatic alpha") {
  CHECK(auto_alpha(1) == 2.0);
  CHECK(auto_alpha(2) == 2.0);
  CHECK(auto_alpha(3) == doctest::Approx(std::log(3.0) / std::log(std::log(3.0))));
  CHECK(auto_alpha(1000) == doctest::Approx(std::log(1000.0) / std::log(std::log(1000.0))));
  CHECK(level_bound(1, 2.0) == 0);
  CHECK(level_bound(2, 2.0) == 1);
  CHECK(level_bound(4, 2.0) == 2);
  CHECK(level_bound(5, 2.0) == 3);
}

TEST_CASE("zero radius: co-located clients are crowded") {
  const Instance inst = th::line_instance(Variant::Scrfl, 2, {1.0}, {0.0}, {0.0, 0.0});
  const auto cls = classify(inst, SupplyVector{{2}}, 0.0, 2.0);
  CHECK(cls.crowded == std::vector<std::size_t>{0, 1});
  CHECK(cls.undersupplied.empty());
  CHECK(cls.supplied.empty());
  CHECK(cls.radius_unit == 0.0);
  const auto pol = assemble_static_policy(inst, SupplyVector{{2}}, 0.0);
  CHECK(pol.worst_second_stage_cost == 0.0);
  CHECK(pol.y.y(0, 0) == doctest::Approx(1.0));
  CHECK(pol.max_load_excess <= 1e-9);
}

TEST_CASE("isolated client without nearby supply is undersupplied") {
  // Client 0 alone at 0; all supply far away with clients 1, 2 next to it.
  const Instance inst = th::line_instance(Variant::Scrfl, 2, {1.0}, {100.0}, {0.0, 100.0, 100.0});
  const auto cls = classify(inst, SupplyVector{{2}}, 2.0, 2.0);  // r = 5
  REQUIRE(!cls.trace.empty());
  CHECK(cls.trace[0].fired == ClusterKind::Undersupplied);
  CHECK(cls.trace[0].level == 1);
  CHECK(cls.undersupplied == std::vector<std::size_t>{0});
  CHECK(cls.crowded == std::vector<std::size_t>{1, 2});
}

TEST_CASE("supplied cluster moves 2 alpha times the medium supply to the cheapest facility") {
  // Facilities at 0 (cost 3) and 1 (cost 2); one client at 0; k = 2.
  const Instance inst = th::line_instance(Variant::Scrfl, 2, {3.0, 2.0, 1.0}, {0.0, 1.0, 500.0},
                                          {0.0, 500.0});
  const SupplyVector x{{0.5, 0.5, 1.0}};
  const auto cls = classify(inst, x, 0.6, 2.0);  // r = 1.5
  REQUIRE(cls.clusters.size() >= 1);
  const Cluster& c = cls.clusters.front();
  CHECK(c.kind == ClusterKind::Supplied);
  CHECK(c.members == std::vector<std::size_t>{0});
  CHECK(c.removed_facilities == std::vector<std::size_t>{0, 1});
  const auto sup = assign_supplied_clients(inst, x, cls);
  CHECK(sup.hub.front() == 1);
  CHECK(sup.extra_supply[1] == doctest::Approx(4.0));
  CHECK(sup.y.y(1, 0) == 1.0);
}

TEST_CASE("alpha must exceed one") {
  const Instance inst = th::line_instance(Variant::Scrfl, 1, {1.0}, {0.0}, {0.0});
  CHECK_THROWS_AS(classify(inst, SupplyVector{{1}}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("classification invariants on the test family") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = testing_support::family_instance(seed, Variant::Scrfl);
    const auto lp = solve_full_lp(inst);
    const auto pol = assemble_static_policy(inst, lp.x, lp.second_stage_cost);
    const auto& cls = pol.classification;
    std::vector<int> seen(inst.num_clients(), 0);
    for (auto* part : {&cls.crowded, &cls.undersupplied, &cls.supplied}) {
      for (std::size_t j : *part) ++seen[j];
    }
    for (int s : seen) CHECK(s == 1);
    CHECK(cls.undersupplied.size() <= inst.k());
    CHECK(cls.max_level <= cls.level_bound + 1);
    for (const auto& e : cls.trace) {
      if (!e.fired) CHECK(e.growth_holds);
    }
    for (const Cluster& c : cls.clusters) {
      const double l = static_cast<double>(c.level);
      for (std::size_t i : c.removed_facilities) {
        CHECK(inst.distance(i, c.center) <= 2 * l * cls.radius_unit + 1e-9);
      }
      if (c.kind == ClusterKind::Supplied) {
        for (std::size_t j : c.members) {
          CHECK(inst.client_distance(j, c.center) <= (2 * l + 1) * cls.radius_unit + 1e-9);
        }
      }
    }
    CHECK(pol.max_load_excess <= 1e-7);
    CHECK(pol.undersupplied_cost <= lp.second_stage_cost + 1e-7);
    CHECK(pol.extra_supply_cost <= 2 * cls.alpha * lp.first_stage_cost + 1e-6);
    const auto crowded = assign_crowded_clients(inst, lp.x, cls);
    for (std::size_t j : cls.crowded) {
      for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
        CHECK(crowded.y(i, j) <= lp.x[i] / static_cast<double>(inst.k()) + 1e-9);
      }
    }
    const auto bounds = client_cost_bounds(inst, cls, lp.second_stage_cost);
    for (std::size_t j = 0; j < inst.num_clients(); ++j) CHECK(pol.client_cost[j] <= bounds[j] + 1e-6);
  }
}

TEST_CASE("trace export lists iterations in order") {
  const Instance inst = th::line_instance(Variant::Scrfl, 2, {1.0}, {100.0}, {0.0, 100.0, 100.0});
  const auto cls = classify(inst, SupplyVector{{2}}, 2.0, 2.0);
  const std::string text = trace_to_json(cls);
  CHECK(text.find("\"undersupplied\"") != std::string::npos);
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc["iterations"].size() == cls.trace.size());
  for (std::size_t t = 0; t < cls.trace.size(); ++t) {
    CHECK(doc["iterations"][t]["center"] == cls.trace[t].center);
    CHECK(doc["iterations"][t]["level"] == cls.trace[t].level);
  }
}
