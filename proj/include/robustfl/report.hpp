#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "robustfl/instance.hpp"

namespace robustfl {

enum class Method { StaticLp, ExactLp, ExactInt, Procedure1, Round, RoundUrfl, RoundScrfl };

std::string to_string(Method method);
Method parse_method(const std::string& text);
const std::vector<std::string>& method_names();

struct MethodRow {
  std::string method;
  double first_stage = 0.0;
  double second_stage = 0.0;
  double total = 0.0;
  double wall_ms = 0.0;
};

struct RatioRow {
  std::string numerator;
  std::string denominator;
  double value = 0.0;
};

/// One certified inequality lhs <= rhs; residual = lhs - rhs.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = true;
  double residual = 0.0;
};

struct RunReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  Variant variant = Variant::Urfl;
  std::optional<std::uint64_t> seed;
  std::vector<MethodRow> methods;
  std::vector<RatioRow> ratios;
  std::vector<BoundCheck> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
  std::size_t failures() const;
};

struct RunOptions {
  std::optional<double> alpha;
  bool force = false;
  bool include_timing = false;
};

/// Runs one method and every reference it is compared against. Reference
/// oracles that exceed their size guards are skipped with a note.
RunReport run_method(const Instance& inst, Method method, const RunOptions& options = {});

std::string report_to_json(const RunReport& report, bool include_timing = false);
void print_report_table(std::ostream& os, const RunReport& report, bool include_timing = false);

struct BenchParams {
  std::uint64_t first_seed = 1;
  std::uint64_t last_seed = 0;  // empty range when last < first
  std::size_t n = 3;
  std::size_t m = 6;
  std::size_t k = 3;
  Variant variant = Variant::Urfl;
  double cost_min = 1.0;
  double cost_max = 10.0;
  double box_size = 10.0;
  std::vector<Method> methods{Method::StaticLp, Method::ExactLp};
  RunOptions run;
};

struct BenchSummaryRow {
  std::string method;
  std::size_t runs = 0;
  std::size_t errors = 0;
  std::optional<std::string> ratio_name;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  std::size_t violations = 0;
};

struct BenchResult {
  std::string csv;
  std::vector<BenchSummaryRow> summary;
  std::size_t violations = 0;
};

inline constexpr const char* kBenchCsvVersion = "# robustfl-bench v1";

/// One CSV row per (seed, method) in seed order; failures of a seed are
/// recorded in its row and the run continues.
BenchResult run_bench(const BenchParams& params);

void print_bench_summary(std::ostream& os, const BenchResult& result);

}  // namespace robustfl
