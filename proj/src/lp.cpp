#include "robustfl/lp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace robustfl {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

std::size_t LinearProgram::add_variable(std::string name, double cost, double lower,
                                        double upper) {
  const std::size_t id = cost_.size();
  if (std::isnan(lower) || std::isnan(upper) || lower > upper || !std::isfinite(lower)) {
    throw std::invalid_argument("LP variable bounds must satisfy finite lower <= upper");
  }
  if (name.empty()) name = "v" + std::to_string(id);
  if (!index_.emplace(name, id).second) {
    throw std::invalid_argument("duplicate LP variable name '" + name + "'");
  }
  names_.push_back(std::move(name));
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  return id;
}

std::size_t LinearProgram::add_constraint(std::vector<Term> terms, Relation relation, double rhs,
                                          std::string name) {
  for (const auto& t : terms) {
    if (t.var >= cost_.size()) {
      throw std::out_of_range("LP row refers to unknown variable " + std::to_string(t.var));
    }
  }
  rows_.push_back({std::move(terms), relation, rhs, std::move(name)});
  return rows_.size() - 1;
}

std::optional<std::size_t> LinearProgram::find_variable(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LinearProgram::variable(std::string_view name) const {
  auto id = find_variable(name);
  if (!id) throw std::out_of_range("no LP variable named '" + std::string(name) + "'");
  return *id;
}

void LinearProgram::validate() const {
  for (std::size_t j = 0; j < cost_.size(); ++j) {
    if (!std::isfinite(cost_[j])) throw std::invalid_argument("non-finite cost on " + names_[j]);
    if (!std::isfinite(lower_[j])) {
      throw std::invalid_argument("variable " + names_[j] + " needs a finite lower bound");
    }
    if (std::isnan(upper_[j]) || upper_[j] == -kInfinity) {
      throw std::invalid_argument("invalid upper bound on " + names_[j]);
    }
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (!std::isfinite(rows_[r].rhs)) {
      throw std::invalid_argument("non-finite rhs on row " + std::to_string(r));
    }
    for (const Term& t : rows_[r].terms) {
      if (t.var >= cost_.size()) {
        throw std::invalid_argument("row " + std::to_string(r) + " references variable " +
                                    std::to_string(t.var) + " of " +
                                    std::to_string(cost_.size()));
      }
      if (!std::isfinite(t.coef)) {
        throw std::invalid_argument("non-finite coefficient on row " + std::to_string(r));
      }
    }
  }
}

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kPriceTol = 1e-9;
constexpr double kPhaseOneTol = 1e-8;
constexpr std::size_t kRefactorEvery = 100;
constexpr std::size_t kDegenerateRunForBland = 50;

// Dense LU with partial pivoting for the basis matrix.
class DenseLu {
 public:
  explicit DenseLu(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      double best = std::abs(lu_(col, col));
      for (std::size_t r = col + 1; r < n; ++r) {
        if (std::abs(lu_(r, col)) > best) {
          best = std::abs(lu_(r, col));
          piv = r;
        }
      }
      if (best < 1e-12) throw LpNumericalError("singular basis during refactorization");
      if (piv != col) {
        for (std::size_t c = 0; c < n; ++c) std::swap(lu_(col, c), lu_(piv, c));
        std::swap(perm_[col], perm_[piv]);
      }
      const double d = lu_(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        const double f = lu_(r, col) / d;
        lu_(r, col) = f;
        if (f == 0.0) continue;
        for (std::size_t c = col + 1; c < n; ++c) lu_(r, c) -= f * lu_(col, c);
      }
    }
  }

  // Solves B z = rhs.
  std::vector<double> solve(const std::vector<double>& rhs) const {
    const std::size_t n = lu_.rows();
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = rhs[perm_[i]];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < i; ++c) z[i] -= lu_(i, c) * z[c];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t c = ii + 1; c < n; ++c) z[ii] -= lu_(ii, c) * z[c];
      z[ii] /= lu_(ii, ii);
    }
    return z;
  }

  // Solves B^T z = rhs.
  std::vector<double> solve_transpose(const std::vector<double>& rhs) const {
    const std::size_t n = lu_.rows();
    std::vector<double> w(rhs);
    // U^T v = rhs
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < i; ++c) w[i] -= lu_(c, i) * w[c];
      w[i] /= lu_(i, i);
    }
    // L^T u = v
    for (std::size_t ii = n; ii-- > 0;) {
      for (std::size_t c = ii + 1; c < n; ++c) w[ii] -= lu_(c, ii) * w[c];
    }
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[perm_[i]] = w[i];
    return z;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

enum class ColumnKind { Structural, Slack, Artificial };

// Standard form: A x = b, x >= 0, b >= 0 with an identity column per row.
struct StandardForm {
  std::size_t num_structural = 0;
  std::size_t num_original_rows = 0;
  Matrix a;
  std::vector<double> b;
  std::vector<double> cost;
  std::vector<ColumnKind> kind;
  std::vector<std::size_t> identity_col;  // per row
  std::vector<double> row_sign;           // +1 or -1 relative to the source row
  std::vector<std::size_t> bound_var;     // per bound row: variable index
};

StandardForm build_standard_form(const LinearProgram& lp) {
  StandardForm sf;
  const std::size_t n = lp.num_variables();
  sf.num_structural = n;
  sf.num_original_rows = lp.num_rows();

  struct RawRow {
    std::vector<double> coef;
    Relation rel;
    double rhs;
  };
  std::vector<RawRow> raw;
  raw.reserve(lp.num_rows() + n);
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    const auto& row = lp.row(r);
    RawRow rr{std::vector<double>(n, 0.0), row.relation, row.rhs};
    for (const Term& t : row.terms) rr.coef[t.var] += t.coef;
    for (std::size_t j = 0; j < n; ++j) rr.rhs -= rr.coef[j] * lp.lower(j);
    raw.push_back(std::move(rr));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(lp.upper(j))) {
      RawRow rr{std::vector<double>(n, 0.0), Relation::LessEqual, lp.upper(j) - lp.lower(j)};
      rr.coef[j] = 1.0;
      raw.push_back(std::move(rr));
      sf.bound_var.push_back(j);
    }
  }

  const std::size_t m = raw.size();
  sf.row_sign.assign(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    RawRow& rr = raw[i];
    const bool flip = (rr.rel == Relation::GreaterEqual && rr.rhs <= 0.0) ||
                      (rr.rel != Relation::GreaterEqual && rr.rhs < 0.0);
    if (flip) {
      for (double& v : rr.coef) v = -v;
      rr.rhs = -rr.rhs;
      if (rr.rel == Relation::LessEqual) {
        rr.rel = Relation::GreaterEqual;
      } else if (rr.rel == Relation::GreaterEqual) {
        rr.rel = Relation::LessEqual;
      }
      sf.row_sign[i] = -1.0;
    }
  }

  std::size_t num_slack = 0;
  std::size_t num_art = 0;
  for (const auto& rr : raw) {
    if (rr.rel != Relation::Equal) ++num_slack;
    if (rr.rel != Relation::LessEqual) ++num_art;
  }
  const std::size_t total = n + num_slack + num_art;
  sf.a = Matrix(m, total);
  sf.b.assign(m, 0.0);
  sf.cost.assign(total, 0.0);
  sf.kind.assign(total, ColumnKind::Structural);
  sf.identity_col.assign(m, 0);
  for (std::size_t j = 0; j < n; ++j) sf.cost[j] = lp.cost(j);

  std::size_t slack_col = n;
  std::size_t art_col = n + num_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& rr = raw[i];
    for (std::size_t j = 0; j < n; ++j) sf.a(i, j) = rr.coef[j];
    sf.b[i] = rr.rhs;
    if (rr.rel == Relation::LessEqual) {
      sf.a(i, slack_col) = 1.0;
      sf.kind[slack_col] = ColumnKind::Slack;
      sf.identity_col[i] = slack_col++;
    } else {
      if (rr.rel == Relation::GreaterEqual) {
        sf.a(i, slack_col) = -1.0;
        sf.kind[slack_col] = ColumnKind::Slack;
        ++slack_col;
      }
      sf.a(i, art_col) = 1.0;
      sf.kind[art_col] = ColumnKind::Artificial;
      sf.identity_col[i] = art_col++;
    }
  }
  return sf;
}

class Tableau {
 public:
  Tableau(const StandardForm& sf, const SolverOptions& opts)
      : sf_(sf), opts_(opts), t_(sf.a), beta_(sf.b), basis_(sf.identity_col) {}

  // Runs primal simplex on `cost`. Returns the entering column of an
  // unbounded ray, or nullopt at optimality.
  std::optional<std::size_t> optimize(const std::vector<double>& cost, const char* phase) {
    cost_ = cost;
    refactor();
    bool fresh = true;
    std::size_t degenerate_run = 0;
    std::size_t since_refactor = 0;
    while (true) {
      const std::optional<std::size_t> entering = price(degenerate_run >= kDegenerateRunForBland);
      if (!entering) {
        if (fresh) return std::nullopt;
        refactor();
        fresh = true;
        since_refactor = 0;
        continue;
      }
      const std::size_t q = *entering;
      std::optional<std::size_t> leave;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < t_.rows(); ++i) {
        const double piv = t_(i, q);
        if (piv <= kPivotTol) continue;
        const double ratio = std::max(beta_[i], 0.0) / piv;
        if (!leave) {
          leave = i;
          best_ratio = ratio;
          continue;
        }
        const double tie = 1e-12 * std::max(1.0, std::abs(best_ratio));
        if (ratio < best_ratio - tie ||
            (std::abs(ratio - best_ratio) <= tie && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) {
        if (fresh) return q;
        refactor();
        fresh = true;
        since_refactor = 0;
        continue;
      }
      degenerate_run = best_ratio <= 1e-12 ? degenerate_run + 1 : 0;
      pivot(*leave, q);
      ++iterations_;
      fresh = false;
      if (iterations_ > opts_.max_iterations) {
        throw LpNumericalError(std::string("simplex iteration limit reached in ") + phase);
      }
      if (++since_refactor >= kRefactorEvery) {
        refactor();
        fresh = true;
        since_refactor = 0;
      }
    }
  }

  // Rebuilds the tableau from the original columns and the current basis.
  void refactor() {
    const std::size_t m = t_.rows();
    const std::size_t ncols = t_.cols();
    Matrix bmat(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t r = 0; r < m; ++r) bmat(r, i) = sf_.a(r, basis_[i]);
    }
    lu_.emplace(std::move(bmat));
    std::vector<double> col(m);
    for (std::size_t j = 0; j < ncols; ++j) {
      for (std::size_t r = 0; r < m; ++r) col[r] = sf_.a(r, j);
      const auto z = lu_->solve(col);
      for (std::size_t r = 0; r < m; ++r) t_(r, j) = z[r];
    }
    beta_ = lu_->solve(sf_.b);
    for (std::size_t i = 0; i < m; ++i) {
      if (beta_[i] < -1e-7) {
        throw LpNumericalError("basis lost primal feasibility after refactorization");
      }
      if (beta_[i] < 0.0) beta_[i] = 0.0;
    }
    reprice();
  }

  // Removes artificials that are basic at zero where another column can
  // take their place. Rows with no such column are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (sf_.kind[basis_[i]] != ColumnKind::Artificial) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) {
        if (sf_.kind[j] == ColumnKind::Artificial) continue;
        if (std::abs(t_(i, j)) > kPivotTol && !is_basic(j)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> duals() const { return lu_->solve_transpose(basic_costs()); }

  double objective() const {
    double z = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) z += cost_[basis_[i]] * beta_[i];
    return z;
  }

  std::vector<double> primal() const {
    std::vector<double> x(t_.cols(), 0.0);
    for (std::size_t i = 0; i < basis_.size(); ++i) x[basis_[i]] = beta_[i];
    return x;
  }

  std::vector<double> ray(std::size_t q) const {
    std::vector<double> d(t_.cols(), 0.0);
    d[q] = 1.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) d[basis_[i]] = -t_(i, q);
    return d;
  }

  std::size_t iterations() const { return iterations_; }

  void dump(std::ostream& os, const char* label) const {
    os << "tableau after " << label << " (" << t_.rows() << " rows, " << t_.cols()
       << " cols)\n";
    os << std::setprecision(6);
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      os << "  basis " << std::setw(4) << basis_[i] << " | ";
      for (std::size_t j = 0; j < t_.cols(); ++j) os << std::setw(10) << t_(i, j) << ' ';
      os << "| " << beta_[i] << '\n';
    }
    os << "  reduced  | ";
    for (double v : reduced_) os << std::setw(10) << v << ' ';
    os << '\n';
  }

 private:
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  std::vector<double> basic_costs() const {
    std::vector<double> cb(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) cb[i] = cost_[basis_[i]];
    return cb;
  }

  void reprice() {
    reduced_ = cost_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) reduced_[j] -= cb * t_(i, j);
    }
    for (std::size_t b : basis_) reduced_[b] = 0.0;
  }

  std::optional<std::size_t> price(bool bland) const {
    std::optional<std::size_t> best;
    double best_val = -kPriceTol;
    for (std::size_t j = 0; j < reduced_.size(); ++j) {
      if (sf_.kind[j] == ColumnKind::Artificial) continue;
      if (reduced_[j] < best_val) {
        best = j;
        if (bland) return best;
        best_val = reduced_[j];
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t ncols = t_.cols();
    const double p = t_(row, col);
    for (std::size_t j = 0; j < ncols; ++j) t_(row, j) /= p;
    beta_[row] /= p;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < ncols; ++j) t_(i, j) -= f * t_(row, j);
      beta_[i] -= f * beta_[row];
      t_(i, col) = 0.0;
    }
    const double fr = reduced_[col];
    if (fr != 0.0) {
      for (std::size_t j = 0; j < ncols; ++j) reduced_[j] -= fr * t_(row, j);
      reduced_[col] = 0.0;
    }
    basis_[row] = col;
  }

  const StandardForm& sf_;
  const SolverOptions& opts_;
  Matrix t_;
  std::vector<double> beta_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  std::optional<DenseLu> lu_;
  std::size_t iterations_ = 0;
};

void log_phase(const SolverOptions& opts, const Tableau& tab, const char* label,
               const std::string& summary) {
  if (opts.verbosity <= 0 || opts.log == nullptr) return;
  *opts.log << "[simplex] " << label << ": " << summary << " after " << tab.iterations()
            << " pivots\n";
  if (opts.verbosity >= 2) tab.dump(*opts.log, label);
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SolverOptions& options) {
  lp.validate();
  const StandardForm sf = build_standard_form(lp);
  const std::size_t n = lp.num_variables();
  const std::size_t m = sf.b.size();
  LpSolution sol;

  // Phase one: minimize the sum of artificials.
  std::vector<double> phase_one_cost(sf.cost.size(), 0.0);
  bool any_artificial = false;
  for (std::size_t j = 0; j < sf.kind.size(); ++j) {
    if (sf.kind[j] == ColumnKind::Artificial) {
      phase_one_cost[j] = 1.0;
      any_artificial = true;
    }
  }

  Tableau tab(sf, options);
  if (any_artificial) {
    tab.optimize(phase_one_cost, "phase one");
    const double infeasibility = tab.objective();
    log_phase(options, tab, "phase one", "sum of artificials " + std::to_string(infeasibility));
    if (infeasibility > kPhaseOneTol) {
      const auto y = tab.duals();
      sol.status = LpStatus::Infeasible;
      sol.farkas_rows.assign(lp.num_rows(), 0.0);
      sol.farkas_upper.assign(n, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        const double v = sf.row_sign[i] * y[i];
        if (i < sf.num_original_rows) {
          sol.farkas_rows[i] = v;
        } else {
          sol.farkas_upper[sf.bound_var[i - sf.num_original_rows]] = v;
        }
      }
      sol.iterations = tab.iterations();
      return sol;
    }
    tab.drive_out_artificials();
  }

  const std::optional<std::size_t> unbounded = tab.optimize(sf.cost, "phase two");
  sol.iterations = tab.iterations();
  if (unbounded) {
    log_phase(options, tab, "phase two", "unbounded");
    const auto d = tab.ray(*unbounded);
    sol.status = LpStatus::Unbounded;
    sol.ray.assign(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n));
    double scale = 0.0;
    for (double v : sol.ray) scale = std::max(scale, std::abs(v));
    if (scale > 0.0) {
      for (double& v : sol.ray) v /= scale;
    }
    return sol;
  }

  const auto xs = tab.primal();
  const auto y = tab.duals();
  sol.status = LpStatus::Optimal;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.x[j] = lp.lower(j) + xs[j];
  sol.row_duals.assign(lp.num_rows(), 0.0);
  for (std::size_t r = 0; r < lp.num_rows(); ++r) sol.row_duals[r] = sf.row_sign[r] * y[r];

  sol.reduced_costs.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.reduced_costs[j] = lp.cost(j);
  sol.objective = 0.0;
  sol.dual_objective = 0.0;
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    const auto& row = lp.row(r);
    for (const Term& t : row.terms) sol.reduced_costs[t.var] -= t.coef * sol.row_duals[r];
    sol.dual_objective += row.rhs * sol.row_duals[r];
  }
  for (std::size_t j = 0; j < n; ++j) {
    sol.objective += lp.cost(j) * sol.x[j];
    const double d = sol.reduced_costs[j];
    if (d >= 0.0 || !std::isfinite(lp.upper(j))) {
      sol.dual_objective += d * lp.lower(j);
    } else {
      sol.dual_objective += d * lp.upper(j);
    }
  }
  log_phase(options, tab, "phase two", "objective " + std::to_string(sol.objective));
  return sol;
}

CertificateReport check_certificate(const LinearProgram& lp, const LpSolution& sol) {
  CertificateReport rep;
  if (sol.status != LpStatus::Optimal) return rep;
  const std::size_t n = lp.num_variables();
  for (std::size_t j = 0; j < n; ++j) {
    rep.primal_residual = std::max(rep.primal_residual, lp.lower(j) - sol.x[j]);
    if (std::isfinite(lp.upper(j))) {
      rep.primal_residual = std::max(rep.primal_residual, sol.x[j] - lp.upper(j));
    }
  }
  std::vector<double> reduced(n);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = lp.cost(j);
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    const auto& row = lp.row(r);
    double act = 0.0;
    for (const Term& t : row.terms) {
      act += t.coef * sol.x[t.var];
      reduced[t.var] -= t.coef * sol.row_duals[r];
    }
    const double slack = act - row.rhs;
    const double y = sol.row_duals[r];
    switch (row.relation) {
      case Relation::LessEqual:
        rep.primal_residual = std::max(rep.primal_residual, slack);
        rep.dual_residual = std::max(rep.dual_residual, y);
        break;
      case Relation::GreaterEqual:
        rep.primal_residual = std::max(rep.primal_residual, -slack);
        rep.dual_residual = std::max(rep.dual_residual, -y);
        break;
      case Relation::Equal:
        rep.primal_residual = std::max(rep.primal_residual, std::abs(slack));
        break;
    }
    rep.complementarity = std::max(rep.complementarity, std::abs(y * slack));
    dual_obj += row.rhs * y;
  }
  for (std::size_t j = 0; j < n; ++j) {
    primal_obj += lp.cost(j) * sol.x[j];
    const double d = reduced[j];
    if (d >= 0.0) {
      dual_obj += d * lp.lower(j);
      rep.complementarity = std::max(rep.complementarity, std::abs(d * (sol.x[j] - lp.lower(j))));
    } else if (std::isfinite(lp.upper(j))) {
      dual_obj += d * lp.upper(j);
      rep.complementarity = std::max(rep.complementarity, std::abs(d * (lp.upper(j) - sol.x[j])));
    } else {
      rep.dual_residual = std::max(rep.dual_residual, -d);
    }
  }
  rep.duality_gap = std::abs(primal_obj - dual_obj);
  return rep;
}

bool verify_farkas(const LinearProgram& lp, const LpSolution& sol, double tol) {
  if (sol.status != LpStatus::Infeasible) return false;
  const std::size_t n = lp.num_variables();
  std::vector<double> col(n, 0.0);
  double value = 0.0;
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    const auto& row = lp.row(r);
    const double y = sol.farkas_rows[r];
    if (row.relation == Relation::LessEqual && y > tol) return false;
    if (row.relation == Relation::GreaterEqual && y < -tol) return false;
    double shifted = row.rhs;
    for (const Term& t : row.terms) {
      col[t.var] += y * t.coef;
      shifted -= t.coef * lp.lower(t.var);
    }
    value += y * shifted;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double w = sol.farkas_upper[j];
    if (w > tol) return false;
    if (w != 0.0) {
      if (!std::isfinite(lp.upper(j))) return false;
      col[j] += w;
      value += w * (lp.upper(j) - lp.lower(j));
    }
    if (col[j] > tol) return false;
  }
  return value > tol;
}

bool verify_ray(const LinearProgram& lp, const LpSolution& sol, double tol) {
  if (sol.status != LpStatus::Unbounded) return false;
  const std::size_t n = lp.num_variables();
  double cost = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.ray[j] < -tol) return false;
    if (std::isfinite(lp.upper(j)) && sol.ray[j] > tol) return false;
    cost += lp.cost(j) * sol.ray[j];
  }
  if (cost >= -tol) return false;
  for (std::size_t r = 0; r < lp.num_rows(); ++r) {
    const auto& row = lp.row(r);
    double act = 0.0;
    for (const Term& t : row.terms) act += t.coef * sol.ray[t.var];
    if (row.relation == Relation::LessEqual && act > tol) return false;
    if (row.relation == Relation::GreaterEqual && act < -tol) return false;
    if (row.relation == Relation::Equal && std::abs(act) > tol) return false;
  }
  return true;
}

}  // namespace robustfl
