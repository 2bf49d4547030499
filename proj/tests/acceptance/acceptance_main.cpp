// Prints one PASS/FAIL line per acceptance criterion, followed by indented
// detail lines. Exit status is the number of failed criteria (capped).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/brute_force.hpp"
#include "../oracles/vertex_enumeration.hpp"
#include "../support/family.hpp"
#include "../support/random_lp.hpp"
#include "robustfl/adversary.hpp"
#include "robustfl/ball_growing.hpp"
#include "robustfl/exact.hpp"
#include "robustfl/rounding.hpp"
#include "robustfl/static_lp.hpp"
#include "robustfl/transport.hpp"

using namespace robustfl;

namespace {

constexpr std::uint64_t kFamilySize = 120;
constexpr std::uint64_t kProcedureRuns = 500;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    if (details.size() < 12) details.push_back(why);
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string tag(Variant v, std::uint64_t seed) {
  return fmt("%s seed %llu", v == Variant::Urfl ? "urfl" : "scrfl",
             static_cast<unsigned long long>(seed));
}

// Everything the criteria share for one family instance.
struct Solved {
  Instance inst;
  std::uint64_t seed = 0;
  StaticSolveResult stat;
  ExactLpResult full;
  IntegralOptimum integral;
};

std::vector<Solved> solve_family(Variant v, std::uint64_t first, std::uint64_t count) {
  std::vector<Solved> out;
  for (std::uint64_t s = first; s < first + count; ++s) {
    Instance inst = testing_support::family_instance(s, v);
    Solved r{inst, s, solve_static(inst), solve_full_lp(inst), solve_integral_optimum(inst)};
    out.push_back(std::move(r));
  }
  return out;
}

Outcome c1_static_equals_full(const std::vector<Solved>& urfl) {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : urfl) {
    const double gap = std::abs(r.stat.objective - r.full.objective);
    const double tol = 1e-6 * (1.0 + std::abs(r.full.objective));
    worst = std::max(worst, gap / (1.0 + std::abs(r.full.objective)));
    if (gap > tol) {
      o.fail(fmt("%s: static %.10g vs scenario LP %.10g", tag(Variant::Urfl, r.seed).c_str(),
                 r.stat.objective, r.full.objective));
    }
  }
  o.summary = fmt("%zu urfl instances, max relative gap %.3g", urfl.size(), worst);
  return o;
}

Outcome c2_topk_identity(const std::vector<Solved>& urfl, const std::vector<Solved>& scrfl) {
  Outcome o;
  double worst = 0.0;
  std::size_t count = 0;
  auto check = [&](const Solved& r) {
    const auto costs = client_costs(r.inst, r.stat.y);
    const double topk = oracle::brute_force_top_k(costs, r.inst.k());
    double lhs = r.inst.k() * r.stat.mu;
    for (double w : r.stat.omega) lhs += w;
    const double gap = std::abs(lhs - topk);
    worst = std::max(worst, gap);
    ++count;
    if (gap > 1e-7) {
      o.fail(fmt("%s: k mu + sum omega %.10g vs top-k %.10g", tag(r.inst.variant(), r.seed).c_str(),
                 lhs, topk));
    }
  };
  for (const auto& r : urfl) check(r);
  for (const auto& r : scrfl) check(r);
  o.summary = fmt("%zu static solves, max gap %.3g", count, worst);
  return o;
}

Outcome c3_urfl_rounding(const std::vector<Solved>& urfl) {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : urfl) {
    try {
      const UrflRounding rr = round_urfl(r.inst, r.stat);
      if (!rr.cost_second_exact) {
        o.fail(tag(Variant::Urfl, r.seed) + ": exact evaluation skipped");
        continue;
      }
      const double total = rr.total();
      if (r.stat.objective > 0.0) worst = std::max(worst, total / r.stat.objective);
      if (total > 4.0 * r.stat.objective + 1e-6) {
        o.fail(fmt("%s: rounded %.10g > 4 x %.10g", tag(Variant::Urfl, r.seed).c_str(), total,
                   r.stat.objective));
      }
    } catch (const std::exception& e) {
      o.fail(tag(Variant::Urfl, r.seed) + ": " + e.what());
    }
  }
  o.summary = fmt("%zu urfl instances, max rounded/static %.4f (bound 4)", urfl.size(), worst);
  return o;
}

Outcome c4_scrfl_rounding(const std::vector<Solved>& scrfl) {
  Outcome o;
  double worst = 0.0;
  std::size_t topped = 0;
  for (const auto& r : scrfl) {
    try {
      const ScrflRounding rr = round_scrfl(r.inst, r.stat);
      if (!rr.cost_second_exact) {
        o.fail(tag(Variant::Scrfl, r.seed) + ": exact evaluation skipped");
        continue;
      }
      if (!rr.topped_up.empty()) ++topped;
      const double bound =
          8.0 * r.stat.first_stage_cost + 12.0 * r.stat.worst_second_stage_cost;
      const double total = rr.total();
      if (r.stat.objective > 0.0) worst = std::max(worst, total / r.stat.objective);
      if (total > bound + 1e-6) {
        o.fail(fmt("%s: rounded %.10g > 8 OPT1 + 12 OPT2 = %.10g",
                   tag(Variant::Scrfl, r.seed).c_str(), total, bound));
      }
    } catch (const std::exception& e) {
      o.fail(tag(Variant::Scrfl, r.seed) + ": " + e.what());
    }
  }
  o.summary = fmt("%zu scrfl instances, max rounded/static %.4f", scrfl.size(), worst);
  o.details.insert(o.details.begin(),
                   fmt("instances whose supply was raised to carry rescaled flow: %zu", topped));
  return o;
}

struct ProcedureRun {
  Instance inst;
  std::uint64_t seed = 0;
  ExactLpResult full;
  StaticSolveResult stat;
  AssembledPolicy policy;
};

std::vector<ProcedureRun> run_procedure(std::uint64_t count, std::vector<std::string>& errors) {
  std::vector<ProcedureRun> runs;
  for (std::uint64_t s = 1; s <= count; ++s) {
    // Wider k range than the rounding family so the level bound is exercised.
    Instance inst = testing_support::family_instance(1000 + s, Variant::Scrfl, 4, 7, 6);
    try {
      ExactLpResult full = solve_full_lp(inst);
      StaticSolveResult stat = solve_static(inst);
      AssembledPolicy pol = assemble_static_policy(inst, full.x, full.second_stage_cost);
      runs.push_back({inst, 1000 + s, std::move(full), std::move(stat), std::move(pol)});
    } catch (const std::exception& e) {
      errors.push_back(tag(Variant::Scrfl, 1000 + s) + ": " + e.what());
    }
  }
  return runs;
}

Outcome c5_levels(const std::vector<ProcedureRun>& runs, const std::vector<std::string>& errors) {
  Outcome o;
  for (const auto& e : errors) o.fail(e);
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_k;  // k -> (runs, over bound)
  std::size_t over = 0, over_plus_one = 0, growth_failures = 0;
  for (const auto& r : runs) {
    const auto& cls = r.policy.classification;
    auto& cell = by_k[r.inst.k()];
    ++cell.first;
    for (const auto& t : cls.trace) {
      if (!t.fired && !t.growth_holds) {
        ++growth_failures;
        o.fail(fmt("%s: growth inequality fails at center %zu level %zu",
                   tag(Variant::Scrfl, r.seed).c_str(), t.center, t.level));
      }
    }
    if (cls.max_level > cls.level_bound) {
      ++over;
      ++cell.second;
      if (over <= 5) {
        o.fail(fmt("%s: k %zu alpha %.3f level %zu > ceil(log_alpha k) = %zu",
                   tag(Variant::Scrfl, r.seed).c_str(), r.inst.k(), cls.alpha, cls.max_level,
                   cls.level_bound));
      } else {
        o.pass = false;
      }
    }
    if (cls.max_level > cls.level_bound + 1) ++over_plus_one;
  }
  o.summary = fmt("%zu runs, %zu exceed ceil(log_alpha k), %zu exceed it by more than one, "
                  "%zu growth failures",
                  runs.size(), over, over_plus_one, growth_failures);
  std::string split = "runs over the bound by k:";
  for (const auto& [k, cell] : by_k) split += fmt(" k=%zu %zu/%zu", k, cell.second, cell.first);
  o.details.insert(o.details.begin(), split);
  return o;
}

Outcome c6_undersupplied(const std::vector<ProcedureRun>& runs) {
  Outcome o;
  std::size_t largest = 0;
  for (const auto& r : runs) {
    const std::size_t c2 = r.policy.classification.undersupplied.size();
    largest = std::max(largest, c2);
    if (c2 > r.inst.k()) {
      o.fail(fmt("%s: %zu undersupplied clients > k = %zu", tag(Variant::Scrfl, r.seed).c_str(), c2,
                 r.inst.k()));
    }
  }
  o.summary = fmt("%zu runs, largest undersupplied set %zu", runs.size(), largest);
  return o;
}

Outcome c7_policy_bounds(const std::vector<ProcedureRun>& runs) {
  Outcome o;
  std::size_t first_fail = 0, second_fail = 0, feas_fail = 0, below_static = 0, cluster_fail = 0;
  double worst_second_ratio = 0.0;
  for (const auto& r : runs) {
    const auto& p = r.policy;
    const auto& cls = p.classification;
    const double opt1 = r.full.first_stage_cost;
    const double opt2 = r.full.second_stage_cost;
    const std::string who = tag(Variant::Scrfl, r.seed);

    bool feasible = p.y.covers_all(1e-7);
    for (std::size_t i = 0; i < r.inst.num_facilities(); ++i) {
      if (worst_facility_load(r.inst, p.y, i) > p.x_first[i] + 1e-7) feasible = false;
    }
    if (!feasible) {
      ++feas_fail;
      o.fail(who + ": policy does not cover every client within supply");
    }
    if (p.first_stage_cost > (2.0 + 2.0 * cls.alpha) * opt1 + 1e-6) {
      ++first_fail;
      o.fail(fmt("%s: first stage %.8g > (2 + 2 alpha) OPT1 = %.8g", who.c_str(),
                 p.first_stage_cost, (2.0 + 2.0 * cls.alpha) * opt1));
    }
    const double second_bound = (40.0 * cls.level_bound + 2.0) * opt2;
    if (opt2 > 0.0) worst_second_ratio = std::max(worst_second_ratio, p.worst_second_stage_cost / opt2);
    if (p.worst_second_stage_cost > second_bound + 1e-6) {
      ++second_fail;
      if (second_fail <= 5) {
        o.fail(fmt("%s: k %zu worst second stage %.8g > (40 ceil(log_alpha k) + 2) OPT2 = %.8g",
                   who.c_str(), r.inst.k(), p.worst_second_stage_cost, second_bound));
      } else {
        o.pass = false;
      }
    }
    if (p.objective < r.stat.objective - 1e-7) {
      ++below_static;
      o.fail(fmt("%s: policy objective %.10g below static optimum %.10g", who.c_str(), p.objective,
                 r.stat.objective));
    }
    const auto bounds = client_cost_bounds(r.inst, cls, opt2);
    for (std::size_t j = 0; j < bounds.size(); ++j) {
      if (p.client_cost[j] > bounds[j] + 1e-6) {
        ++cluster_fail;
        o.fail(fmt("%s: client %zu cost %.8g above its cluster bound %.8g", who.c_str(), j,
                   p.client_cost[j], bounds[j]));
      }
    }
  }
  o.summary = fmt("%zu runs; infeasible %zu, first-stage %zu, second-stage %zu, below static %zu",
                  runs.size(), feas_fail, first_fail, second_fail, below_static);
  o.details.insert(o.details.begin(),
                   fmt("max second stage / OPT2 %.4f; per-client cluster bound violations %zu",
                       worst_second_ratio, cluster_fail));
  return o;
}

Outcome c8_relaxation_order(const std::vector<Solved>& urfl, const std::vector<Solved>& scrfl) {
  Outcome o;
  std::size_t count = 0;
  auto check = [&](const Solved& r) {
    ++count;
    const std::string who = tag(r.inst.variant(), r.seed);
    if (r.full.objective > r.integral.objective + 1e-7) {
      o.fail(fmt("%s: scenario LP %.10g > integral optimum %.10g", who.c_str(), r.full.objective,
                 r.integral.objective));
    }
    if (r.stat.objective < r.full.objective - 1e-7) {
      o.fail(fmt("%s: static %.10g < scenario LP %.10g", who.c_str(), r.stat.objective,
                 r.full.objective));
    }
  };
  for (const auto& r : urfl) check(r);
  for (const auto& r : scrfl) check(r);
  o.summary = fmt("%zu instances, scenario LP <= integral and static >= scenario LP", count);
  return o;
}

Outcome c9_lp_and_transport(const std::vector<Solved>& urfl, const std::vector<Solved>& scrfl) {
  Outcome o;
  std::mt19937_64 rng(20261015);
  double worst_gap = 0.0, worst_vertex = 0.0;
  std::size_t lps = 0;
  for (int t = 0; t < 220; ++t) {
    const std::size_t nv = 2 + t % 4;
    const std::size_t nr = 1 + (t / 4) % 4;
    const LinearProgram lp = testing_support::random_lp(rng, nv, nr);
    const LpSolution sol = solve_lp(lp);
    ++lps;
    if (sol.status != LpStatus::Optimal) {
      o.fail(fmt("random LP %d: simplex did not report optimal", t));
      continue;
    }
    const double gap = std::abs(sol.objective - sol.dual_objective);
    worst_gap = std::max(worst_gap, gap / (1.0 + std::abs(sol.objective)));
    if (gap > 1e-8 * (1.0 + std::abs(sol.objective))) {
      o.fail(fmt("random LP %d: duality gap %.3g", t, gap));
    }
    const auto vertex = oracle::vertex_enumeration_min(lp);
    if (!vertex) {
      o.fail(fmt("random LP %d: vertex enumeration found no vertex", t));
      continue;
    }
    const double diff = std::abs(vertex->objective - sol.objective);
    worst_vertex = std::max(worst_vertex, diff);
    if (diff > 1e-6) {
      o.fail(fmt("random LP %d: simplex %.10g vs vertex %.10g", t, sol.objective, vertex->objective));
    }
  }

  std::size_t transports = 0;
  double worst_frac = 0.0;
  auto check_transport = [&](const Instance& inst, const SupplyVector& x, std::uint64_t seed) {
    for_each_scenario(inst.num_clients(), inst.k(), true, [&](const Scenario& s) {
      const ScenarioAssignment a = second_stage_cost(inst, x, s);
      ++transports;
      for (std::size_t i = 0; i < a.flow.rows(); ++i) {
        for (std::size_t p = 0; p < a.flow.cols(); ++p) {
          const double v = a.flow(i, p);
          const double frac = std::abs(v - std::round(v));
          worst_frac = std::max(worst_frac, frac);
          if (frac > 1e-7) {
            o.fail(fmt("%s: fractional flow %.3g", tag(inst.variant(), seed).c_str(), v));
          }
        }
      }
      std::vector<int> xi(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xi[i] = static_cast<int>(std::lround(x[i]));
      const auto brute = oracle::brute_force_transport(inst, xi, s.members);
      if (!brute || std::abs(*brute - a.cost) > 1e-7) {
        o.fail(fmt("%s: transport %.10g disagrees with brute force",
                   tag(inst.variant(), seed).c_str(), a.cost));
      }
    });
  };
  for (const auto& r : urfl) check_transport(r.inst, r.integral.x, r.seed);
  for (const auto& r : scrfl) check_transport(r.inst, r.integral.x, r.seed);

  o.summary = fmt("%zu random LPs (max gap %.3g, max vertex diff %.3g); %zu integral transports "
                  "(max fractionality %.3g)",
                  lps, worst_gap, worst_vertex, transports, worst_frac);
  return o;
}

Outcome c10_exact_size(const std::vector<Solved>& urfl, const std::vector<Solved>& scrfl) {
  Outcome o;
  std::size_t count = 0;
  double worst = 0.0;
  std::mt19937_64 rng(77);
  auto check = [&](const Instance& inst, const SupplyVector& x, const std::string& who) {
    ++count;
    ExactEvaluationOptions smaller;
    smaller.include_smaller = true;
    const double exact_k = evaluate_first_stage_exact(inst, x).value;
    const double up_to_k = evaluate_first_stage_exact(inst, x, smaller).value;
    std::vector<int> xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xi[i] = static_cast<int>(std::lround(x[i]));
    const double brute = oracle::brute_force_worst_case(inst, xi);
    const double gap = std::max(std::abs(exact_k - up_to_k), std::abs(exact_k - brute));
    worst = std::max(worst, gap);
    if (gap > 1e-9) {
      o.fail(fmt("%s: size k %.12g, size <= k %.12g, brute force %.12g", who.c_str(), exact_k,
                 up_to_k, brute));
    }
  };
  for (const auto* fam : {&urfl, &scrfl}) {
    for (const auto& r : *fam) {
      const std::string who = tag(r.inst.variant(), r.seed);
      check(r.inst, r.integral.x, who);
      // A random integral supply that covers every scenario.
      const std::size_t n = r.inst.num_facilities();
      SupplyVector x;
      x.units.assign(n, 0.0);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
      std::uniform_int_distribution<int> amount(0, 2);
      for (std::size_t i = 0; i < n; ++i) x.units[i] = amount(rng);
      if (r.inst.variant() == Variant::Urfl) {
        for (auto& v : x.units) v = std::min(v, 1.0);
        if (x.total() < 1.0) x.units[pick(rng)] = 1.0;
      } else {
        while (x.total() < static_cast<double>(r.inst.k())) x.units[pick(rng)] += 1.0;
      }
      check(r.inst, x, who + " (random supply)");
    }
  }
  o.summary = fmt("%zu supply vectors, max difference %.3g", count, worst);
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto urfl = solve_family(Variant::Urfl, 1, kFamilySize);
  const auto scrfl = solve_family(Variant::Scrfl, 1, kFamilySize);
  std::vector<std::string> procedure_errors;
  const auto runs = run_procedure(kProcedureRuns, procedure_errors);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"static URFL LP matches the scenario LP", [&] { return c1_static_equals_full(urfl); }},
      {"k mu + sum omega equals the top-k client cost", [&] { return c2_topk_identity(urfl, scrfl); }},
      {"URFL rounding within 4 x static optimum", [&] { return c3_urfl_rounding(urfl); }},
      {"SCRFL rounding within 8 OPT1 + 12 OPT2", [&] { return c4_scrfl_rounding(scrfl); }},
      {"ball levels within ceil(log_alpha k), growth holds",
       [&] { return c5_levels(runs, procedure_errors); }},
      {"at most k undersupplied clients", [&] { return c6_undersupplied(runs); }},
      {"static policy feasibility and cost bounds", [&] { return c7_policy_bounds(runs); }},
      {"scenario LP <= integral optimum, static >= scenario LP",
       [&] { return c8_relaxation_order(urfl, scrfl); }},
      {"simplex optimality and integral transport", [&] { return c9_lp_and_transport(urfl, scrfl); }},
      {"size-k scenarios attain the worst case", [&] { return c10_exact_size(urfl, scrfl); }},
  };

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (c + 1) << " " << criteria[c].first << ": "
              << o.summary << "\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << failed << " of " << criteria.size() << " criteria failed (" << fmt("%.1f", secs)
            << " s)\n";
  return failed == 0 ? 0 : 1;
}
