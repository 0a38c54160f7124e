#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loctrop/cone.hpp"

namespace loctrop {

struct Fan {
  int ambient = 0;
  std::vector<RationalCone> cones;                  // closed under faces, canonical,
                                                    // sorted by (dim, constraints)
  std::vector<std::pair<int, int>> facet_edges;     // (face index, cone index)
};

struct FanValidation {
  bool ok = true;
  Fan fan;
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // input indices
};

// Closes the input under faces and checks that pairwise intersections are
// common faces.  On failure reports one offending input pair.
inline FanValidation validate_fan(const std::vector<RationalCone>& input, int ambient) {
  FanValidation v;
  v.fan.ambient = ambient;

  std::vector<RationalCone> canon;
  for (const auto& c : input) canon.push_back(canonicalize(c));

  // Pairwise check on the input cones.
  std::vector<std::set<std::string>> face_keys(canon.size());
  std::vector<std::vector<RationalCone>> faces_of(canon.size());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    faces_of[i] = all_faces(canon[i]);
    for (const auto& f : faces_of[i]) face_keys[i].insert(cone_key(f));
  }
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j) {
      RationalCone k = intersect(canon[i], canon[j]);
      std::string key = cone_key(k);
      if (!face_keys[i].count(key) || !face_keys[j].count(key)) {
        v.ok = false;
        v.offending = {i, j};
        return v;
      }
    }

  // Assemble the face-closed cone list.
  std::map<std::string, RationalCone> acc;
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (const auto& f : faces_of[i]) acc.emplace(cone_key(f), f);
  for (auto& [key, c] : acc) v.fan.cones.push_back(c);
  std::sort(v.fan.cones.begin(), v.fan.cones.end(),
            [](const RationalCone& a, const RationalCone& b) {
              int da = a.ambient - static_cast<int>(a.eq.size());
              int db = b.ambient - static_cast<int>(b.eq.size());
              if (da != db) return da < db;
              if (a.eq != b.eq) return a.eq < b.eq;
              return a.ineq < b.ineq;
            });

  // Facet incidence edges.
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < v.fan.cones.size(); ++i)
    index[cone_key(v.fan.cones[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < v.fan.cones.size(); ++i)
    for (const auto& f : facets(v.fan.cones[i])) {
      auto it = index.find(cone_key(f));
      if (it != index.end())
        v.fan.facet_edges.emplace_back(it->second, static_cast<int>(i));
    }
  std::sort(v.fan.facet_edges.begin(), v.fan.facet_edges.end());
  return v;
}

// Membership of a weight in the support of a cone collection.
inline bool cones_contain(const std::vector<RationalCone>& cones, const WeightVector& u) {
  for (const auto& c : cones)
    if (cone_contains(c, u)) return true;
  return false;
}

}  // namespace loctrop
