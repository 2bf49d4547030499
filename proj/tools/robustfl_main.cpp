#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "robustfl/instance.hpp"
#include "robustfl/instance_io.hpp"
#include "robustfl/report.hpp"

using namespace robustfl;

namespace {

struct SeedRange {
  std::uint64_t first = 1;
  std::uint64_t last = 0;
};

SeedRange parse_seeds(const std::string& text) {
  SeedRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.first = r.last = std::stoull(text);
  } else {
    r.first = std::stoull(text.substr(0, dots));
    r.last = std::stoull(text.substr(dots + 2));
  }
  return r;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_method(item));
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage robust facility location solver"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one method on an instance file");
  std::string instance_path;
  std::string method_name = "static-lp";
  std::optional<double> alpha;
  std::optional<std::size_t> k_override;
  bool json = false;
  bool check = false;
  bool force = false;
  bool timing = false;
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_option("--method", method_name, "Method")
      ->check(CLI::IsMember(method_names()));
  solve->add_option("--alpha", alpha, "Method parameter alpha");
  solve->add_option("--k", k_override, "Override the scenario budget");
  solve->add_flag("--json", json, "Print a JSON report");
  solve->add_flag("--check", check, "Exit nonzero if a certified bound fails");
  solve->add_flag("--force", force, "Lift oracle size guards");
  solve->add_flag("--timing", timing, "Include wall times");

  // bench
  auto* bench = app.add_subcommand("bench", "Run methods over a range of generated instances");
  std::string seeds = "1..10";
  BenchParams bp;
  std::string bench_variant = "urfl";
  std::string bench_methods = "static-lp,exact-lp";
  std::string bench_out;
  std::optional<double> bench_alpha;
  bool bench_force = false;
  bool bench_timing = false;
  bench->add_option("--seeds", seeds, "Seed range a..b (empty when b < a)");
  bench->add_option("--n", bp.n, "Facilities");
  bench->add_option("--m", bp.m, "Clients");
  bench->add_option("--k", bp.k, "Scenario budget");
  bench->add_option("--variant", bench_variant, "urfl or scrfl");
  bench->add_option("--methods", bench_methods, "Comma-separated methods");
  bench->add_option("--cost-min", bp.cost_min, "Smallest supply cost");
  bench->add_option("--cost-max", bp.cost_max, "Largest supply cost");
  bench->add_option("--box", bp.box_size, "Side of the sampling square");
  bench->add_option("--alpha", bench_alpha, "Method parameter alpha");
  bench->add_option("--out", bench_out, "CSV output path (stdout when omitted)");
  bench->add_flag("--force", bench_force, "Lift oracle size guards");
  bench->add_flag("--timing", bench_timing, "Add a wall time column");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  GeneratorParams gp;
  std::string gen_variant = "scrfl";
  std::string gen_out;
  gen->add_option("--seed", gp.seed, "Seed");
  gen->add_option("--n", gp.n, "Facilities");
  gen->add_option("--m", gp.m, "Clients");
  gen->add_option("--k", gp.k, "Scenario budget");
  gen->add_option("--variant", gen_variant, "urfl or scrfl");
  gen->add_option("--cost-min", gp.cost_min, "Smallest supply cost");
  gen->add_option("--cost-max", gp.cost_max, "Largest supply cost");
  gen->add_option("--box", gp.box_size, "Side of the sampling square");
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  // validate
  auto* validate = app.add_subcommand("validate", "Check the metric axioms of an instance");
  std::string validate_path;
  validate->add_option("instance", validate_path, "Instance file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      Instance inst = read_instance(instance_path);
      if (k_override) inst = inst.with_k(*k_override);
      RunOptions opts;
      opts.alpha = alpha;
      opts.force = force;
      opts.include_timing = timing;
      const RunReport report = run_method(inst, parse_method(method_name), opts);
      if (json) {
        std::cout << report_to_json(report, timing) << "\n";
      } else {
        print_report_table(std::cout, report, timing);
      }
      return check && !report.all_passed() ? 3 : 0;
    }
    if (*bench) {
      const SeedRange range = parse_seeds(seeds);
      bp.first_seed = range.first;
      bp.last_seed = range.last;
      bp.variant = parse_variant(bench_variant);
      bp.methods = parse_methods(bench_methods);
      bp.run.alpha = bench_alpha;
      bp.run.force = bench_force;
      bp.run.include_timing = bench_timing;
      const BenchResult result = run_bench(bp);
      if (bench_out.empty()) {
        std::cout << result.csv;
        print_bench_summary(std::cerr, result);
      } else {
        write_text(bench_out, result.csv);
        print_bench_summary(std::cout, result);
      }
      return 0;
    }
    if (*gen) {
      gp.variant = parse_variant(gen_variant);
      const Instance inst = generate_euclidean(gp);
      if (gen_out.empty()) {
        std::cout << format_instance(inst) << "\n";
      } else {
        write_instance(inst, gen_out);
      }
      return 0;
    }
    if (*validate) {
      const Instance inst = read_instance(validate_path);
      const auto violations = validate_metric(inst);
      for (const auto& v : violations) {
        std::cout << to_string(v.kind) << " (" << v.a << "," << v.b;
        if (v.kind == ViolationKind::Triangle) std::cout << "," << v.c;
        std::cout << ") residual " << v.residual << "\n";
      }
      std::cout << violations.size() << " violation(s)\n";
      return violations.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
