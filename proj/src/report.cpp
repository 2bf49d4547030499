#include "robustfl/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "robustfl/adversary.hpp"
#include "robustfl/ball_growing.hpp"
#include "robustfl/exact.hpp"
#include "robustfl/rounding.hpp"
#include "robustfl/static_lp.hpp"

namespace robustfl {

namespace {

struct MethodName {
  Method method;
  const char* name;
};

constexpr MethodName kMethodNames[] = {
    {Method::StaticLp, "static-lp"},   {Method::ExactLp, "exact-lp"},
    {Method::ExactInt, "exact-int"},   {Method::Procedure1, "procedure1"},
    {Method::Round, "round"},          {Method::RoundUrfl, "round-urfl"},
    {Method::RoundScrfl, "round-scrfl"},
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check(RunReport& r, std::string name, double lhs, double rhs) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.residual = lhs - rhs;
  c.passed = lhs <= rhs;
  r.checks.push_back(std::move(c));
}

void ratio(RunReport& r, std::string num, std::string den, double a, double b) {
  r.ratios.push_back({std::move(num), std::move(den), b != 0.0 ? a / b : (a == 0.0 ? 1.0 : kInfinity)});
}

std::optional<ExactLpResult> try_full_lp(const Instance& inst, const RunOptions& options,
                                         RunReport& r) {
  FullLpOptions o;
  o.force = options.force;
  try {
    return solve_full_lp(inst, o);
  } catch (const SizeGuardError& e) {
    r.notes.push_back(std::string("exact-lp skipped: ") + e.what());
    return std::nullopt;
  }
}

std::optional<IntegralOptimum> try_integral(const Instance& inst, const RunOptions& options,
                                            RunReport& r) {
  IntegralOptions o;
  o.force = options.force;
  try {
    return solve_integral_optimum(inst, o);
  } catch (const SizeGuardError& e) {
    r.notes.push_back(std::string("exact-int skipped: ") + e.what());
    return std::nullopt;
  }
}

void static_checks(RunReport& r, const Instance& inst, const StaticSolveResult& sol) {
  check(r, "objective = first stage + k*mu + sum(omega)",
        std::abs(sol.objective - sol.first_stage_cost - sol.worst_second_stage_cost), 1e-7);
  check(r, "k*mu + sum(omega) = top-k client cost",
        std::abs(sol.worst_second_stage_cost - worst_scenario_for_policy(inst, sol.y).value), 1e-7);
}

void run_static(const Instance& inst, const RunOptions& options, RunReport& r) {
  auto t0 = Clock::now();
  const StaticSolveResult sol = solve_static(inst);
  r.methods.push_back({"static-lp", sol.first_stage_cost, sol.worst_second_stage_cost,
                       sol.objective, elapsed_ms(t0)});
  static_checks(r, inst, sol);
  if (auto full = try_full_lp(inst, options, r)) {
    ratio(r, "static-lp", "exact-lp", sol.objective, full->objective);
    if (inst.variant() == Variant::Urfl) {
      check(r, "|static-lp - exact-lp| <= 1e-6 (1 + objective)",
            std::abs(sol.objective - full->objective), 1e-6 * (1.0 + std::abs(full->objective)));
    } else {
      check(r, "exact-lp <= static-lp", full->objective, sol.objective + 1e-7);
    }
  }
}

void run_exact_lp(const Instance& inst, const RunOptions& options, RunReport& r) {
  auto t0 = Clock::now();
  FullLpOptions o;
  o.force = options.force;
  const ExactLpResult full = solve_full_lp(inst, o);
  r.methods.push_back({"exact-lp", full.first_stage_cost, full.second_stage_cost, full.objective,
                       elapsed_ms(t0)});
  const StaticSolveResult sol = solve_static(inst);
  ratio(r, "static-lp", "exact-lp", sol.objective, full.objective);
}

void run_exact_int(const Instance& inst, const RunOptions& options, RunReport& r) {
  auto t0 = Clock::now();
  IntegralOptions o;
  o.force = options.force;
  const IntegralOptimum opt = solve_integral_optimum(inst, o);
  r.methods.push_back({"exact-int", opt.first_stage_cost, opt.second_stage_cost, opt.objective,
                       elapsed_ms(t0)});
  const StaticSolveResult sol = solve_static(inst);
  ratio(r, "static-lp", "exact-int", sol.objective, opt.objective);
  if (auto full = try_full_lp(inst, options, r)) {
    ratio(r, "exact-int", "exact-lp", opt.objective, full->objective);
    check(r, "exact-lp <= exact-int", full->objective, opt.objective + 1e-7);
  }
}

void run_procedure1(const Instance& inst, const RunOptions& options, RunReport& r) {
  if (inst.variant() != Variant::Scrfl) {
    throw std::invalid_argument("procedure1 needs a scrfl instance");
  }
  const StaticSolveResult sol = solve_static(inst);
  SupplyVector x_star;
  double opt1 = 0.0;
  double opt2 = 0.0;
  double reference = 0.0;
  std::string reference_name;
  if (auto full = try_full_lp(inst, options, r)) {
    x_star = full->x;
    opt1 = full->first_stage_cost;
    opt2 = full->second_stage_cost;
    reference = full->objective;
    reference_name = "exact-lp";
  } else {
    x_star = sol.x;
    opt1 = sol.first_stage_cost;
    opt2 = sol.worst_second_stage_cost;
    reference = sol.objective;
    reference_name = "static-lp";
    r.notes.push_back("procedure1 fed by static-lp supply and second stage instead of exact-lp");
  }

  auto t0 = Clock::now();
  const AssembledPolicy pol = assemble_static_policy(inst, x_star, opt2, options.alpha);
  r.methods.push_back({"procedure1", pol.first_stage_cost, pol.worst_second_stage_cost,
                       pol.objective, elapsed_ms(t0)});
  ratio(r, "procedure1", reference_name, pol.objective, reference);

  const Classification& cls = pol.classification;
  const double alpha = cls.alpha;
  const double lb = static_cast<double>(cls.level_bound);
  check(r, "worst facility load - first stage supply", pol.max_load_excess, 1e-7);
  check(r, "first stage <= (2 + 2 alpha) OPT1", pol.first_stage_cost,
        (2.0 + 2.0 * alpha) * opt1 + 1e-6);
  check(r, "extra supply cost <= 2 alpha OPT1", pol.extra_supply_cost, 2.0 * alpha * opt1 + 1e-6);
  check(r, "worst second stage <= (40 ceil(log_alpha k) + 2) OPT2", pol.worst_second_stage_cost,
        (40.0 * lb + 2.0) * opt2 + 1e-6);
  check(r, "static-lp <= procedure1", sol.objective, pol.objective + 1e-7);
  check(r, "|undersupplied clients| <= k", static_cast<double>(cls.undersupplied.size()),
        static_cast<double>(inst.k()));
  check(r, "max ball level <= ceil(log_alpha k)", static_cast<double>(cls.max_level), lb);
  check(r, "undersupplied clients' cost <= OPT2", pol.undersupplied_cost, opt2 + 1e-7);
  const auto bounds = client_cost_bounds(inst, cls, opt2);
  double worst = -kInfinity;
  for (std::size_t j = 0; j < bounds.size(); ++j) {
    worst = std::max(worst, pol.client_cost[j] - bounds[j]);
  }
  check(r, "client cost - cluster bound", worst, 1e-6);
}

void run_round(const Instance& inst, Method method, const RunOptions& options, RunReport& r) {
  const bool urfl = inst.variant() == Variant::Urfl;
  if ((method == Method::RoundUrfl && !urfl) || (method == Method::RoundScrfl && urfl)) {
    throw std::invalid_argument(to_string(method) + " cannot run on a " + to_string(inst.variant()) +
                                " instance");
  }
  const StaticSolveResult sol = solve_static(inst);
  const double opt1 = sol.first_stage_cost;
  const double opt2 = sol.worst_second_stage_cost;
  RoundingOptions ro;
  ro.force = options.force;

  auto t0 = Clock::now();
  const std::string name = to_string(method);
  RoundedSolution rounded;
  if (urfl) {
    const double alpha = options.alpha.value_or(4.0 / 3.0);
    UrflRounding u = round_urfl(inst, sol, alpha, ro);
    const double ms = elapsed_ms(t0);
    double worst = -kInfinity;
    for (std::size_t j = 0; j < inst.num_clients(); ++j) {
      for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
        if (u.policy.y(i, j) > 0.0) worst = std::max(worst, inst.distance(i, j) - 3.0 * alpha * u.radius[j]);
      }
    }
    check(r, "client distance - 3 alpha L_j", worst, 1e-9);
    check(r, "first stage <= OPT1 / (1 - 1/alpha)", u.cost_first, opt1 / (1.0 - 1.0 / alpha) + 1e-6);
    r.methods.push_back({name, u.cost_first, u.cost_second_exact.value_or(u.cost_second_policy),
                         u.total(), ms});
    check(r, "rounded total <= (1/(1 - 1/alpha)) OPT1 + 3 alpha OPT2", u.total(),
          opt1 / (1.0 - 1.0 / alpha) + 3.0 * alpha * opt2 + 1e-6);
    rounded = std::move(u);
  } else {
    const double alpha = options.alpha.value_or(0.5);
    ScrflRounding s = round_scrfl(inst, sol, alpha, ro);
    const double ms = elapsed_ms(t0);
    double worst = -kInfinity;
    for (std::size_t j = 0; j < inst.num_clients(); ++j) {
      for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
        if (s.policy.y(i, j) > 0.0) worst = std::max(worst, inst.distance(i, j) - 3.0 * s.radius[j]);
      }
    }
    double excess = -kInfinity;
    for (std::size_t i = 0; i < inst.num_facilities(); ++i) {
      excess = std::max(excess, worst_facility_load(inst, s.policy, i) - s.x_int[i]);
    }
    check(r, "arc length - 3 g_j", worst, 1e-9);
    check(r, "worst facility load - integral supply", excess, 1e-7);
    check(r, "first stage <= (4/alpha) OPT1", s.cost_first, 4.0 / alpha * opt1 + 1e-6);
    r.methods.push_back({name, s.cost_first, s.cost_second_exact.value_or(s.cost_second_policy),
                         s.total(), ms});
    check(r, "rounded total <= (4/alpha) OPT1 + 3/(alpha(1-alpha)) OPT2", s.total(),
          4.0 / alpha * opt1 + 3.0 / (alpha * (1.0 - alpha)) * opt2 + 1e-6);
    if (!s.topped_up.empty()) {
      r.notes.push_back(std::to_string(s.topped_up.size()) +
                        " facilities needed supply above the rounding step to carry rescaled flow");
    }
    rounded = std::move(s);
  }
  if (!rounded.cost_second_exact) {
    r.notes.push_back("second stage reported as the static policy bound (exact evaluation skipped)");
  }
  ratio(r, name, "static-lp", rounded.total(), sol.objective);
  if (auto opt = try_integral(inst, options, r)) {
    ratio(r, name, "exact-int", rounded.total(), opt->objective);
    check(r, "exact-int <= rounded total", opt->objective, rounded.total() + 1e-7);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string to_string(Method method) {
  for (const auto& e : kMethodNames) {
    if (e.method == method) return e.name;
  }
  return "?";
}

Method parse_method(const std::string& text) {
  for (const auto& e : kMethodNames) {
    if (text == e.name) return e.method;
  }
  throw std::invalid_argument("unknown method '" + text + "'");
}

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kMethodNames) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool RunReport::all_passed() const { return failures() == 0; }

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.passed; }));
}

RunReport run_method(const Instance& inst, Method method, const RunOptions& options) {
  RunReport r;
  r.n = inst.num_facilities();
  r.m = inst.num_clients();
  r.k = inst.k();
  r.variant = inst.variant();
  switch (method) {
    case Method::StaticLp: run_static(inst, options, r); break;
    case Method::ExactLp: run_exact_lp(inst, options, r); break;
    case Method::ExactInt: run_exact_int(inst, options, r); break;
    case Method::Procedure1: run_procedure1(inst, options, r); break;
    case Method::Round:
      run_round(inst, inst.variant() == Variant::Urfl ? Method::RoundUrfl : Method::RoundScrfl,
                options, r);
      break;
    case Method::RoundUrfl:
    case Method::RoundScrfl: run_round(inst, method, options, r); break;
  }
  return r;
}

std::string report_to_json(const RunReport& report, bool include_timing) {
  nlohmann::json doc;
  doc["instance"] = {{"n", report.n},
                     {"m", report.m},
                     {"k", report.k},
                     {"variant", to_string(report.variant)}};
  if (report.seed) doc["instance"]["seed"] = *report.seed;
  doc["methods"] = nlohmann::json::array();
  for (const auto& row : report.methods) {
    nlohmann::json j = {{"method", row.method},
                        {"first_stage", row.first_stage},
                        {"second_stage", row.second_stage},
                        {"total", row.total}};
    if (include_timing) j["wall_ms"] = row.wall_ms;
    doc["methods"].push_back(j);
  }
  doc["ratios"] = nlohmann::json::array();
  for (const auto& row : report.ratios) {
    doc["ratios"].push_back(
        {{"numerator", row.numerator}, {"denominator", row.denominator}, {"value", row.value}});
  }
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"passed", c.passed},
                             {"residual", c.residual}});
  }
  doc["notes"] = report.notes;
  doc["passed"] = report.all_passed();
  return doc.dump(2);
}

void print_report_table(std::ostream& os, const RunReport& report, bool include_timing) {
  os << "instance: n=" << report.n << " m=" << report.m << " k=" << report.k
     << " variant=" << to_string(report.variant) << "\n\n";
  os << std::left << std::setw(14) << "method" << std::right << std::setw(14) << "first"
     << std::setw(14) << "second" << std::setw(14) << "total";
  if (include_timing) os << std::setw(12) << "ms";
  os << "\n";
  for (const auto& row : report.methods) {
    os << std::left << std::setw(14) << row.method << std::right << std::setprecision(8)
       << std::setw(14) << row.first_stage << std::setw(14) << row.second_stage << std::setw(14)
       << row.total;
    if (include_timing) os << std::setw(12) << std::setprecision(4) << row.wall_ms;
    os << "\n";
  }
  if (!report.ratios.empty()) {
    os << "\nratios\n";
    for (const auto& row : report.ratios) {
      os << "  " << row.numerator << " / " << row.denominator << " = " << std::setprecision(10)
         << row.value << "\n";
    }
  }
  if (!report.checks.empty()) {
    os << "\nchecks\n";
    for (const auto& c : report.checks) {
      os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "  (" << std::setprecision(10)
         << c.lhs << " vs " << c.rhs << ", residual " << c.residual << ")\n";
    }
  }
  for (const auto& note : report.notes) os << "note: " << note << "\n";
}

BenchResult run_bench(const BenchParams& params) {
  BenchResult out;
  std::ostringstream csv;
  csv << kBenchCsvVersion << "\n";
  csv << "seed,variant,n,m,k,method,first_stage,second_stage,total,ratio_name,ratio,checks,failed,error";
  if (params.run.include_timing) csv << ",wall_ms";
  csv << "\n";

  for (Method method : params.methods) {
    BenchSummaryRow s;
    s.method = to_string(method);
    out.summary.push_back(s);
  }
  std::vector<double> ratio_sum(params.methods.size(), 0.0);
  std::vector<std::size_t> ratio_count(params.methods.size(), 0);

  for (std::uint64_t seed = params.first_seed; seed <= params.last_seed && params.last_seed >= params.first_seed; ++seed) {
    GeneratorParams g;
    g.seed = seed;
    g.n = params.n;
    g.m = params.m;
    g.k = params.k;
    g.variant = params.variant;
    g.cost_min = params.cost_min;
    g.cost_max = params.cost_max;
    g.box_size = params.box_size;
    const Instance inst = generate_euclidean(g);

    for (std::size_t mi = 0; mi < params.methods.size(); ++mi) {
      const Method method = params.methods[mi];
      BenchSummaryRow& s = out.summary[mi];
      ++s.runs;
      csv << seed << "," << to_string(params.variant) << "," << params.n << "," << params.m << ","
          << params.k << "," << to_string(method) << ",";
      try {
        RunReport rep = run_method(inst, method, params.run);
        const MethodRow& row = rep.methods.front();
        csv << num(row.first_stage) << "," << num(row.second_stage) << "," << num(row.total) << ",";
        if (!rep.ratios.empty()) {
          const RatioRow& rr = rep.ratios.front();
          const std::string rname = rr.numerator + "/" + rr.denominator;
          csv << rname << "," << num(rr.value) << ",";
          s.ratio_name = rname;
          s.max_ratio = ratio_count[mi] == 0 ? rr.value : std::max(s.max_ratio, rr.value);
          ratio_sum[mi] += rr.value;
          ++ratio_count[mi];
        } else {
          csv << ",,";
        }
        const std::size_t failed = rep.failures();
        s.violations += failed;
        out.violations += failed;
        csv << rep.checks.size() << "," << failed << ",";
        if (params.run.include_timing) csv << "," << num(row.wall_ms);
      } catch (const std::exception& e) {
        ++s.errors;
        csv << ",,,,,,," << csv_field(e.what());
        if (params.run.include_timing) csv << ",";
      }
      csv << "\n";
    }
    if (seed == params.last_seed) break;
  }
  for (std::size_t mi = 0; mi < out.summary.size(); ++mi) {
    if (ratio_count[mi] > 0) out.summary[mi].mean_ratio = ratio_sum[mi] / static_cast<double>(ratio_count[mi]);
  }
  out.csv = csv.str();
  return out;
}

void print_bench_summary(std::ostream& os, const BenchResult& result) {
  for (const auto& s : result.summary) {
    os << s.method << ": runs=" << s.runs << " errors=" << s.errors;
    if (s.ratio_name) {
      os << " " << *s.ratio_name << " max=" << std::setprecision(10) << s.max_ratio
         << " mean=" << s.mean_ratio;
    }
    os << " violations=" << s.violations << "\n";
  }
  os << "total violations: " << result.violations << "\n";
}

}  // namespace robustfl
