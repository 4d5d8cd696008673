#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quantum3/quantum3.hpp"

namespace q3test {

using namespace quantum3;

inline std::string data_path(const std::string& rel) { return std::string(QUANTUM3_DATA_DIR) + "/" + rel; }

struct Named {
  std::string name;
  SphericalData cat;
};

inline std::vector<Named> spherical_builtins() {
  return {{"vec_z2", vec_zn(2)}, {"vec_z3", vec_zn(3)}, {"fibonacci", fibonacci().base()}, {"ising", ising().base()}};
}

inline std::vector<std::pair<std::string, ModularData>> modular_builtins() {
  return {{"fibonacci", fibonacci()}, {"ising", ising()}};
}

/// Copy of `cat` with the stored entry at `labels` shifted by `delta`.
inline SphericalData perturbed(const SphericalData& cat, const std::array<Label, 6>& labels, Scalar delta) {
  auto entries = cat.entries();
  for (auto& e : entries)
    if (e.labels == labels) e.value += delta;
  return SphericalData(cat.ring(), cat.qdims(), entries);
}

inline double rel_err(Scalar a, Scalar b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace q3test
