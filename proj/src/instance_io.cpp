#include "robustfl/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace robustfl {

using nlohmann::json;

namespace {

std::vector<Point> parse_points(const json& arr, const char* field) {
  if (!arr.is_array()) throw InstanceFormatError(std::string(field) + " must be an array");
  std::vector<Point> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw InstanceFormatError(std::string(field) + " entries must be [x, y] pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceFormatError(std::string("malformed instance JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceFormatError("instance must be a JSON object");
  for (const char* key : {"variant", "k", "supply_cost"}) {
    if (!doc.contains(key)) throw InstanceFormatError(std::string("missing field '") + key + "'");
  }

  try {
    const Variant variant = parse_variant(doc.at("variant").get<std::string>());
    if (!doc.at("k").is_number_integer() || doc.at("k").get<long long>() < 1) {
      throw InstanceFormatError("k must be a positive integer");
    }
    const auto k = static_cast<std::size_t>(doc.at("k").get<long long>());
    auto costs = doc.at("supply_cost").get<std::vector<double>>();

    const bool has_fac = doc.contains("facilities");
    const bool has_cli = doc.contains("clients");
    if (has_fac != has_cli) {
      throw InstanceFormatError("'facilities' and 'clients' must be given together");
    }
    if (has_fac) {
      if (doc.contains("dist")) {
        throw InstanceFormatError("ambiguous instance: both coordinates and 'dist' given");
      }
      return Instance::from_coordinates(variant, k, std::move(costs),
                                        parse_points(doc.at("facilities"), "facilities"),
                                        parse_points(doc.at("clients"), "clients"));
    }
    if (!doc.contains("dist")) {
      throw InstanceFormatError("'dist' is required when coordinates are absent");
    }
    const auto rows = doc.at("dist").get<std::vector<std::vector<double>>>();
    const std::size_t p = rows.size();
    Matrix dist(p, p);
    for (std::size_t r = 0; r < p; ++r) {
      if (rows[r].size() != p) throw InstanceFormatError("'dist' must be square");
      for (std::size_t c = 0; c < p; ++c) dist(r, c) = rows[r][c];
    }
    if (p < costs.size()) throw InstanceFormatError("'dist' smaller than facility count");
    const std::size_t m = p - costs.size();
    return Instance(variant, k, std::move(costs), std::move(dist), m);
  } catch (const json::exception& e) {
    throw InstanceFormatError(std::string("invalid instance field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InstanceFormatError(e.what());
  }
}

std::string format_instance(const Instance& inst) {
  json doc;
  doc["variant"] = to_string(inst.variant());
  doc["k"] = inst.k();
  doc["supply_cost"] = std::vector<double>(inst.supply_costs().begin(), inst.supply_costs().end());
  if (inst.has_coordinates()) {
    doc["facilities"] = points_to_json(*inst.facility_coordinates());
    doc["clients"] = points_to_json(*inst.client_coordinates());
  } else {
    json rows = json::array();
    const Matrix& d = inst.metric();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c));
      rows.push_back(std::move(row));
    }
    doc["dist"] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path.string());
  out << format_instance(inst);
}

}  // namespace robustfl
