#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "robustfl/instance.hpp"

namespace robustfl {

class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance files are JSON objects:
//
//   { "variant": "urfl" | "scrfl", "k": int, "supply_cost": [c_0, ...],
//     "facilities": [[x, y], ...], "clients": [[x, y], ...] }
//
// or, without coordinates, with an explicit (n+m)x(n+m) "dist" matrix
// (facilities first). Supplying both coordinates and "dist" is rejected.

Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace robustfl
