#pragma once

// All category checks in one report.

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quantum3/category.hpp"
#include "quantum3/modular.hpp"

namespace quantum3 {

struct CategoryReport {
  std::vector<std::string> violations;      // structural problems and axiom failures
  std::map<std::string, double> residuals;  // identity residuals
  std::optional<bool> modular;              // braided data only
  bool ok = true;
};

/// Runs the fusion, dimension, pentagon, orthonormality and unit checks,
/// and for braided data the hexagon, ribbon and modularity checks. A
/// residual above eps marks the report as failed.
inline CategoryReport validate_category(const SphericalData& cat, const ModularData* braided = nullptr,
                                        double eps = kDefaultTolerance) {
  CategoryReport rep;
  for (const auto& v : validate_fusion_ring(cat.ring())) rep.violations.push_back(v.describe());
  for (const auto& v : validate_dimensions(cat, eps)) rep.violations.push_back(v.describe());
  try {
    require_complete(cat);
  } catch (const StructureError& e) {
    rep.violations.push_back(e.what());
  }
  if (rep.violations.empty()) {
    rep.residuals["pentagon"] = check_pentagon(cat);
    rep.residuals["orthonormality"] = check_orthonormality(cat);
    rep.residuals["unit"] = check_unit_normalization(cat);
    if (braided) {
      try {
        require_complete(*braided);
        rep.residuals["hexagon"] = check_hexagon(*braided);
        rep.residuals["ribbon"] = check_ribbon(*braided);
        rep.modular = is_modular(*braided, eps);
      } catch (const StructureError& e) {
        rep.violations.push_back(e.what());
      }
    }
  }
  for (const auto& [name, r] : rep.residuals)
    if (!(r <= eps)) {
      std::ostringstream os;
      os << name << " residual " << std::scientific << std::setprecision(3) << r << " exceeds tolerance " << eps;
      rep.violations.push_back(os.str());
    }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace quantum3
