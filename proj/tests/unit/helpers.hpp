#pragma once

#include <cmath>
#include <vector>

#include "robustfl/instance.hpp"

namespace th {

/// Points on a line: facilities at fac[i], clients at cli[j].
inline robustfl::Instance line_instance(robustfl::Variant v, std::size_t k, std::vector<double> costs,
                                        const std::vector<double>& fac, const std::vector<double>& cli) {
  std::vector<double> pos = fac;
  pos.insert(pos.end(), cli.begin(), cli.end());
  robustfl::Matrix d(pos.size(), pos.size());
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = 0; b < pos.size(); ++b) d(a, b) = std::abs(pos[a] - pos[b]);
  }
  return robustfl::Instance(v, k, std::move(costs), std::move(d), cli.size());
}

}  // namespace th
