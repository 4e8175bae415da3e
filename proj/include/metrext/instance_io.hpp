#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "instance.hpp"

namespace metrext {

using json = nlohmann::ordered_json;

namespace detail {

// Accepts a matrix either as a flat row-major list or as a list of rows.
inline std::vector<double> parse_flat_matrix(const json& j, int n,
                                             const std::string& field) {
  if (!j.is_array())
    throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<double> flat;
  if (!j.empty() && j.front().is_array()) {
    for (const auto& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument("field '" + field + "' must be an " +
                                    std::to_string(n) + "x" + std::to_string(n) +
                                    " matrix");
      for (const auto& v : row) flat.push_back(v.get<double>());
    }
  } else {
    for (const auto& v : j) flat.push_back(v.get<double>());
  }
  if (static_cast<int>(flat.size()) != n * n)
    throw std::invalid_argument("field '" + field + "' has " +
                                std::to_string(flat.size()) + " entries, expected " +
                                std::to_string(n * n));
  return flat;
}

}  // namespace detail

// Instance files carry exactly one of "points" (list of coordinate lists) or
// "distances" (row-major matrix), plus "subset", "a", "b", and optionally
// "group" (list of permutations) and "p" (matrix over subset positions).
inline Instance parse_instance(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  const bool has_points = j.contains("points");
  const bool has_dist = j.contains("distances");
  if (has_points == has_dist)
    throw std::invalid_argument(
        "instance must contain exactly one of 'points' or 'distances'");

  FiniteMetricSpace space = [&] {
    if (has_points) {
      std::vector<std::vector<double>> pts;
      for (const auto& row : j.at("points")) {
        std::vector<double> p;
        for (const auto& c : row) p.push_back(c.get<double>());
        pts.push_back(std::move(p));
      }
      return FiniteMetricSpace::from_coords(pts);
    }
    const auto& d = j.at("distances");
    int n = 0;
    if (d.is_array() && !d.empty() && d.front().is_array())
      n = static_cast<int>(d.size());
    else if (d.is_array())
      n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d.size()))));
    return FiniteMetricSpace::from_flat_distances(
        n, detail::parse_flat_matrix(d, n, "distances"));
  }();

  if (!j.contains("subset")) throw std::invalid_argument("instance lacks 'subset'");
  if (!j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("instance lacks base points 'a' and 'b'");
  std::vector<int> members;
  for (const auto& v : j.at("subset")) members.push_back(v.get<int>());
  SubsetSpec subset(members, j.at("a").get<int>(), j.at("b").get<int>(),
                    space.size());

  Instance inst{std::move(space), std::move(subset), std::nullopt, std::nullopt, {}};

  if (j.contains("group")) {
    std::vector<std::vector<int>> perms;
    for (const auto& row : j.at("group")) {
      std::vector<int> perm;
      for (const auto& v : row) perm.push_back(v.get<int>());
      perms.push_back(std::move(perm));
    }
    GroupValidation gv = validate_group(std::move(perms), inst.space, inst.subset);
    inst.group = std::move(gv.action);
    inst.warnings = std::move(gv.warnings);
  }

  if (j.contains("p")) {
    const int k = inst.subset.size();
    inst.p = PairFunction::from_flat(PairDomain::OverX, k,
                                     detail::parse_flat_matrix(j.at("p"), k, "p"));
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("instance file '" + path + "' is not valid JSON: " +
                             e.what());
  }
  return parse_instance(j);
}

// Serializes an instance; coordinates are kept when the space has them,
// otherwise the normalized distance matrix is written flat row-major.
inline json instance_to_json(const Instance& inst) {
  json j = json::object();
  if (inst.space.has_coords()) {
    j["points"] = inst.space.coords();
  } else {
    j["distances"] = inst.space.flat_distances();
  }
  j["subset"] = inst.subset.members();
  j["a"] = inst.subset.base_a();
  j["b"] = inst.subset.base_b();
  if (inst.group) j["group"] = inst.group->elements();
  if (inst.p) j["p"] = inst.p->flat();
  return j;
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  out << instance_to_json(inst).dump(2) << "\n";
}

}  // namespace metrext
