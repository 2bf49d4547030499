#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robustfl/adversary.hpp"
#include "robustfl/ball_growing.hpp"
#include "robustfl/exact.hpp"
#include "robustfl/instance.hpp"
#include "robustfl/instance_io.hpp"
#include "robustfl/lp.hpp"
#include "robustfl/report.hpp"
#include "robustfl/rounding.hpp"
#include "robustfl/static_lp.hpp"
#include "robustfl/transport.hpp"

namespace py = pybind11;
using namespace robustfl;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const Matrix& m) {
  Rows out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

Matrix from_rows(const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

SupplyVector supply(const std::vector<double>& x) { return SupplyVector{x}; }

py::dict static_dict(const StaticSolveResult& s) {
  py::dict d;
  d["x"] = s.x.units;
  d["y"] = to_rows(s.y.y);
  d["mu"] = s.mu;
  d["omega"] = s.omega;
  d["objective"] = s.objective;
  d["first_stage"] = s.first_stage_cost;
  d["second_stage"] = s.worst_second_stage_cost;
  return d;
}

py::dict rounded_dict(const RoundedSolution& r) {
  py::dict d;
  d["x"] = r.x_int.units;
  d["policy"] = to_rows(r.policy.y);
  d["first_stage"] = r.cost_first;
  d["second_stage_policy"] = r.cost_second_policy;
  d["second_stage_exact"] = r.cost_second_exact ? py::cast(*r.cost_second_exact) : py::none();
  d["total"] = r.total();
  d["radius"] = r.radius;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-stage robust facility location under a k-client demand budget";

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::string& variant, std::size_t k, std::vector<double> costs,
                       const Rows& metric, std::size_t num_clients) {
             return Instance(parse_variant(variant), k, std::move(costs), from_rows(metric),
                             num_clients);
           }),
           py::arg("variant"), py::arg("k"), py::arg("costs"), py::arg("metric"),
           py::arg("num_clients"))
      .def_static("from_json", &parse_instance, py::arg("text"))
      .def_static(
          "generate",
          [](std::uint64_t seed, std::size_t n, std::size_t m_, std::size_t k,
             const std::string& variant, double cost_min, double cost_max, double box) {
            GeneratorParams p;
            p.seed = seed;
            p.n = n;
            p.m = m_;
            p.k = k;
            p.variant = parse_variant(variant);
            p.cost_min = cost_min;
            p.cost_max = cost_max;
            p.box_size = box;
            return generate_euclidean(p);
          },
          py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("k"), py::arg("variant") = "scrfl",
          py::arg("cost_min") = 1.0, py::arg("cost_max") = 10.0, py::arg("box") = 10.0)
      .def("to_json", &format_instance)
      .def("with_k", &Instance::with_k)
      .def_property_readonly("variant", [](const Instance& i) { return to_string(i.variant()); })
      .def_property_readonly("k", &Instance::k)
      .def_property_readonly("n", &Instance::num_facilities)
      .def_property_readonly("m", &Instance::num_clients)
      .def_property_readonly("costs", [](const Instance& i) {
        return std::vector<double>(i.supply_costs().begin(), i.supply_costs().end());
      })
      .def_property_readonly("metric", [](const Instance& i) { return to_rows(i.metric()); })
      .def("distance", &Instance::distance, py::arg("facility"), py::arg("client"))
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + to_string(i.variant()) + " n=" + std::to_string(i.num_facilities()) +
               " m=" + std::to_string(i.num_clients()) + " k=" + std::to_string(i.k()) + ">";
      });

  m.def("validate_metric", [](const Instance& inst) {
    std::vector<std::string> out;
    for (const auto& v : validate_metric(inst)) out.push_back(to_string(v.kind));
    return out;
  });

  m.def(
      "solve_lp",
      [](const std::vector<double>& c, const Rows& a_ub, const std::vector<double>& b_ub,
         const Rows& a_eq, const std::vector<double>& b_eq, const std::vector<double>& upper) {
        LinearProgram lp;
        for (std::size_t v = 0; v < c.size(); ++v) {
          lp.add_variable("", c[v], 0.0, upper.empty() ? kInfinity : upper[v]);
        }
        auto add = [&](const Rows& a, const std::vector<double>& b, Relation rel) {
          if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
          for (std::size_t r = 0; r < a.size(); ++r) {
            std::vector<Term> terms;
            for (std::size_t v = 0; v < a[r].size(); ++v) {
              if (a[r][v] != 0.0) terms.push_back({v, a[r][v]});
            }
            lp.add_constraint(std::move(terms), rel, b[r]);
          }
        };
        add(a_ub, b_ub, Relation::LessEqual);
        add(a_eq, b_eq, Relation::Equal);
        const LpSolution sol = solve_lp(lp);
        py::dict d;
        d["status"] = to_string(sol.status);
        d["x"] = sol.x;
        d["objective"] = sol.objective;
        d["dual_objective"] = sol.dual_objective;
        d["row_duals"] = sol.row_duals;
        return d;
      },
      py::arg("c"), py::arg("a_ub") = Rows{}, py::arg("b_ub") = std::vector<double>{},
      py::arg("a_eq") = Rows{}, py::arg("b_eq") = std::vector<double>{},
      py::arg("upper") = std::vector<double>{},
      "min c.x subject to a_ub x <= b_ub, a_eq x = b_eq, 0 <= x <= upper.");

  m.def(
      "second_stage_cost",
      [](const Instance& inst, const std::vector<double>& x, std::vector<std::size_t> clients) {
        const ScenarioAssignment a = second_stage_cost(inst, supply(x), Scenario{std::move(clients)});
        py::dict d;
        d["cost"] = a.cost;
        d["flow"] = to_rows(a.flow);
        return d;
      },
      py::arg("inst"), py::arg("x"), py::arg("clients"));

  m.def(
      "worst_case",
      [](const Instance& inst, const std::vector<double>& x, bool include_smaller, bool force) {
        ExactEvaluationOptions o;
        o.include_smaller = include_smaller;
        o.force = force;
        const ExactWorstCase wc = evaluate_first_stage_exact(inst, supply(x), o);
        py::dict d;
        d["value"] = wc.value;
        d["scenario"] = wc.scenario.members;
        d["scenarios_evaluated"] = wc.scenarios_evaluated;
        return d;
      },
      py::arg("inst"), py::arg("x"), py::arg("include_smaller") = false, py::arg("force") = false);

  m.def(
      "solve_static",
      [](const Instance& inst, bool eliminated) {
        return static_dict(eliminated ? solve_static_scrfl_eliminated(inst) : solve_static(inst));
      },
      py::arg("inst"), py::arg("eliminated") = false);

  m.def(
      "solve_full_lp",
      [](const Instance& inst, bool force) {
        FullLpOptions o;
        o.force = force;
        const ExactLpResult r = solve_full_lp(inst, o);
        py::dict d;
        d["x"] = r.x.units;
        d["objective"] = r.objective;
        d["first_stage"] = r.first_stage_cost;
        d["second_stage"] = r.second_stage_cost;
        d["scenario_count"] = r.scenario_count;
        return d;
      },
      py::arg("inst"), py::arg("force") = false);

  m.def(
      "solve_integral",
      [](const Instance& inst, bool force) {
        IntegralOptions o;
        o.force = force;
        const IntegralOptimum r = solve_integral_optimum(inst, o);
        py::dict d;
        d["x"] = r.x.units;
        d["objective"] = r.objective;
        d["first_stage"] = r.first_stage_cost;
        d["second_stage"] = r.second_stage_cost;
        d["worst_scenario"] = r.worst_scenario.members;
        return d;
      },
      py::arg("inst"), py::arg("force") = false);

  m.def(
      "procedure1",
      [](const Instance& inst, const std::vector<double>& x_star, double opt2,
         std::optional<double> alpha) {
        const AssembledPolicy p = assemble_static_policy(inst, supply(x_star), opt2, alpha);
        const auto& cls = p.classification;
        py::dict d;
        d["crowded"] = cls.crowded;
        d["undersupplied"] = cls.undersupplied;
        d["supplied"] = cls.supplied;
        d["alpha"] = cls.alpha;
        d["max_level"] = cls.max_level;
        d["level_bound"] = cls.level_bound;
        d["x"] = p.x_first.units;
        d["y"] = to_rows(p.y.y);
        d["first_stage"] = p.first_stage_cost;
        d["second_stage"] = p.worst_second_stage_cost;
        d["objective"] = p.objective;
        d["client_cost"] = p.client_cost;
        d["trace_json"] = trace_to_json(cls);
        return d;
      },
      py::arg("inst"), py::arg("x_star"), py::arg("opt2"), py::arg("alpha") = py::none());

  m.def(
      "round_urfl",
      [](const Instance& inst, double alpha, bool exact) {
        RoundingOptions o;
        o.exact = exact;
        const UrflRounding r = round_urfl(inst, solve_static(inst), alpha, o);
        py::dict d = rounded_dict(r);
        d["opened"] = r.opened;
        return d;
      },
      py::arg("inst"), py::arg("alpha") = 4.0 / 3.0, py::arg("exact") = true);

  m.def(
      "round_scrfl",
      [](const Instance& inst, double alpha, bool exact) {
        RoundingOptions o;
        o.exact = exact;
        const ScrflRounding r = round_scrfl(inst, solve_static(inst), alpha, o);
        py::dict d = rounded_dict(r);
        d["hubs"] = r.hubs;
        d["topped_up"] = r.topped_up;
        return d;
      },
      py::arg("inst"), py::arg("alpha") = 0.5, py::arg("exact") = true);

  m.def(
      "run_method_json",
      [](const Instance& inst, const std::string& method, std::optional<double> alpha, bool force) {
        RunOptions o;
        o.alpha = alpha;
        o.force = force;
        return report_to_json(run_method(inst, parse_method(method), o));
      },
      py::arg("inst"), py::arg("method"), py::arg("alpha") = py::none(), py::arg("force") = false);

  m.attr("METHODS") = method_names();

  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
}
