#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "robustfl/common.hpp"

namespace robustfl {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LpStatus status);

/// The simplex lost a usable basis (singular refactorization or iteration cap).
class LpNumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  std::size_t var;
  double coef;
};

/// A minimization LP in row form with per-variable bounds.
///
/// Lower bounds must be finite; upper bounds default to +infinity.
/// Variable names are unique and used to pull values out of solutions.
class LinearProgram {
 public:
  struct Row {
    std::vector<Term> terms;
    Relation relation;
    double rhs;
    std::string name;
  };

  std::size_t add_variable(std::string name, double cost, double lower = 0.0,
                           double upper = kInfinity);
  std::size_t add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                             std::string name = {});

  std::size_t num_variables() const { return cost_.size(); }
  std::size_t num_rows() const { return rows_.size(); }

  const std::string& name(std::size_t var) const { return names_[var]; }
  double cost(std::size_t var) const { return cost_[var]; }
  double lower(std::size_t var) const { return lower_[var]; }
  double upper(std::size_t var) const { return upper_[var]; }
  const Row& row(std::size_t r) const { return rows_[r]; }

  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::size_t variable(std::string_view name) const;

  /// Throws std::invalid_argument on out-of-range indices, non-finite data
  /// or inverted bounds.
  void validate() const;

 private:
  std::vector<std::string> names_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  /// Row multipliers with the sign convention of a minimization:
  /// >= rows carry y >= 0, <= rows y <= 0, = rows are free.
  std::vector<double> row_duals;
  /// c - A^T y; positive entries price variables at their lower bound,
  /// negative ones at their (finite) upper bound.
  std::vector<double> reduced_costs;
  double objective = 0.0;
  double dual_objective = 0.0;

  /// Infeasible: multipliers y (rows) and w <= 0 (upper bounds) with
  /// A^T y + w <= 0 and y'(b - A l) + w'(u - l) > 0.
  std::vector<double> farkas_rows;
  std::vector<double> farkas_upper;
  /// Unbounded: a feasible direction with negative cost.
  std::vector<double> ray;

  std::size_t iterations = 0;

  double value(const LinearProgram& lp, std::string_view name) const {
    return x[lp.variable(name)];
  }
};

struct SolverOptions {
  /// 0 silent; 1 phase summaries; 2 adds a tableau dump after each phase.
  int verbosity = 0;
  std::ostream* log = nullptr;
  std::size_t max_iterations = 200000;
};

/// Dense two-phase primal simplex. Pricing is Dantzig with lowest-index ties,
/// falling back to Bland's rule during runs of degenerate pivots; ratio-test
/// ties go to the lowest basic variable index. The final basis is
/// refactorized so primal values and duals come from a fresh solve.
LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options = {});

struct CertificateReport {
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  double complementarity = 0.0;
};

/// Residuals of an Optimal solution recomputed from the LP data.
CertificateReport check_certificate(const LinearProgram& lp, const LpSolution& sol);

/// True when sol.farkas_* proves infeasibility up to `tol`.
bool verify_farkas(const LinearProgram& lp, const LpSolution& sol, double tol = 1e-7);

/// True when sol.ray is a recession direction with negative cost.
bool verify_ray(const LinearProgram& lp, const LpSolution& sol, double tol = 1e-7);

}  // namespace robustfl
