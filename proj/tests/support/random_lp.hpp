#pragma once

#include <cmath>
#include <random>

#include "robustfl/lp.hpp"

namespace testing_support {

/// A random LP with nv boxed variables and nr mixed rows, built around a
/// known interior point so it is feasible and bounded.
inline robustfl::LinearProgram random_lp(std::mt19937_64& rng, std::size_t nv, std::size_t nr) {
  using robustfl::Relation;
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> point(0.0, 3.0);
  std::uniform_real_distribution<double> slack(0.0, 2.0);
  std::uniform_int_distribution<int> rel(0, 4);
  robustfl::LinearProgram lp;
  std::vector<double> x0(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    x0[v] = point(rng);
    lp.add_variable("v" + std::to_string(v), coef(rng), 0.0, 5.0);
  }
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<robustfl::Term> terms;
    double lhs = 0.0;
    for (std::size_t v = 0; v < nv; ++v) {
      const double a = std::round(coef(rng) * 4.0) / 4.0;
      if (a == 0.0) continue;
      terms.push_back({v, a});
      lhs += a * x0[v];
    }
    const int kind = rel(rng);
    if (kind == 0) {
      lp.add_constraint(terms, Relation::Equal, lhs);
    } else if (kind <= 2) {
      lp.add_constraint(terms, Relation::LessEqual, lhs + slack(rng));
    } else {
      lp.add_constraint(terms, Relation::GreaterEqual, lhs - slack(rng));
    }
  }
  return lp;
}

}  // namespace testing_support
