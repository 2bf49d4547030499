#include <doctest.h>

#include "../support/family.hpp"
#include "helpers.hpp"
#include "robustfl/rounding.hpp"

using namespace robustfl;

TEST_CASE("single served client opens its facility") {
  const Instance inst = th::line_instance(Variant::Urfl, 1, {1.0}, {0.0}, {1.0});
  const auto sol = solve_static_urfl(inst);
  const auto r = round_urfl(inst, sol);
  CHECK(r.x_int.units == std::vector<double>{1.0});
  REQUIRE(r.cost_second_exact);
  CHECK(*r.cost_second_exact == doctest::Approx(1.0));
  CHECK(*r.cost_second_exact <= 3.0 * (4.0 / 3.0) * r.radius[0] + 1e-9);
}

TEST_CASE("far-apart pairs open both facilities") {
  const Instance inst = th::line_instance(Variant::Urfl, 1, {1.0, 1.0}, {0.0, 100.0}, {1.0, 101.0});
  const auto r = round_urfl(inst, solve_static_urfl(inst));
  CHECK(r.x_int.units == std::vector<double>{1.0, 1.0});
  CHECK(r.centers.size() == 2);
}

TEST_CASE("filtering keeps the nearest prefix reaching alpha") {
  const Instance inst = th::line_instance(Variant::Scrfl, 1, {1.0, 1.0}, {1.0, 2.0}, {0.0});
  StaticSolveResult sol;
  sol.variant = Variant::Scrfl;
  sol.x.units = {0.5, 0.5};
  sol.y = StaticAssignment(2, 1);
  sol.y.y(0, 0) = 0.5;
  sol.y.y(1, 0) = 0.5;
  const auto f = filter_g_close(inst, sol, 0.5);
  CHECK(f.g[0] == doctest::Approx(1.0));
  CHECK(f.y_bar.y(0, 0) == doctest::Approx(1.0));
  CHECK(f.y_bar.y(1, 0) == 0.0);
  CHECK(f.x_bar[0] == doctest::Approx(1.0));

  sol.y.y(0, 0) = 1.0;
  sol.y.y(1, 0) = 0.0;
  const auto g = filter_g_close(inst, sol, 0.5);
  CHECK(g.y_bar.y(0, 0) == doctest::Approx(1.0));
  CHECK(g.g[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(filter_g_close(inst, sol, 1.0), std::invalid_argument);
}

TEST_CASE("large supplies only round up") {
  const Instance inst = th::line_instance(Variant::Scrfl, 2, {1.0, 1.0}, {0.0, 10.0}, {0.0, 10.0});
  const auto sol = solve_static_scrfl(inst);
  const auto r = round_scrfl(inst, sol);
  CHECK(r.hubs.empty());
  for (std::size_t i = 0; i < 2; ++i) CHECK(r.x_int[i] == doctest::Approx(std::ceil(sol.x[i] / 0.5 - 1e-9)));
}

TEST_CASE("two small facilities merge into one unit at the cheaper one") {
  const Instance inst = th::line_instance(Variant::Scrfl, 1, {2.0, 1.0}, {0.0, 1.0}, {0.5});
  StaticSolveResult sol;
  sol.variant = Variant::Scrfl;
  sol.x.units = {0.2, 0.2};
  sol.y = StaticAssignment(2, 1);
  sol.y.y(0, 0) = 0.4;
  sol.y.y(1, 0) = 0.6;
  // The first facility alone holds less than 1/2, so both survive filtering
  // with x_bar = 0.4 each.
  const auto r = round_scrfl(inst, sol);
  REQUIRE(r.hubs.size() == 1);
  CHECK(r.hubs[0] == 1);
  CHECK(r.x_int.units == std::vector<double>{0.0, 1.0});
  CHECK(r.policy.y(1, 0) == doctest::Approx(1.0));
}

TEST_CASE("rounding bounds on the test family") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance u = testing_support::family_instance(seed, Variant::Urfl);
    const auto su = solve_static_urfl(u);
    const auto ru = round_urfl(u, su);
    CHECK(ru.x_int.is_integral());
    CHECK(ru.total() <= 4.0 * su.objective + 1e-6);
    for (std::size_t j = 0; j < u.num_clients(); ++j) {
      for (std::size_t i = 0; i < u.num_facilities(); ++i) {
        if (ru.policy.y(i, j) > 0) CHECK(u.distance(i, j) <= 4.0 * ru.radius[j] + 1e-9);
      }
    }

    const Instance s = testing_support::family_instance(seed, Variant::Scrfl);
    const auto ss = solve_static_scrfl(s);
    const auto rs = round_scrfl(s, ss);
    CHECK(rs.x_int.is_integral());
    CHECK(rs.x_int.total() >= static_cast<double>(s.k()) - 1e-9);
    CHECK(rs.policy.covers_all(1e-9));
    for (std::size_t i = 0; i < s.num_facilities(); ++i) {
      CHECK(worst_facility_load(s, rs.policy, i) <= rs.x_int[i] + 1e-7);
    }
    for (std::size_t j = 0; j < s.num_clients(); ++j) {
      CHECK(rs.radius[j] <= 2.0 * client_costs(s, ss.y)[j] + 1e-9);
      for (std::size_t i = 0; i < s.num_facilities(); ++i) {
        if (rs.policy.y(i, j) > 0) CHECK(s.distance(i, j) <= 3.0 * rs.radius[j] + 1e-9);
      }
    }
    REQUIRE(rs.cost_second_exact);
    CHECK(*rs.cost_second_exact <= rs.cost_second_policy + 1e-7);
    CHECK(rs.total() <= 8.0 * ss.first_stage_cost + 12.0 * ss.worst_second_stage_cost + 1e-6);
  }
}
