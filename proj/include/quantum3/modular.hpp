#pragma once

// S-matrix from the Hopf link, Gauss sums, modularity.

#include <utility>

#include <Eigen/Dense>

#include "quantum3/diagram.hpp"
#include "quantum3/links.hpp"

namespace quantum3 {

/// S_{ij} = <Hopf link colored i, j>.
inline Eigen::MatrixXcd s_matrix(const ModularData& cat) {
  const int r = cat.rank();
  const DiagramEvaluator ev(cat);
  Eigen::MatrixXcd s(r, r);
  const MorseDiagram h = hopf_link(0, 0);
  const DiagramWalk w = walk(h);
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) s(i, j) = ev.evaluate(h, w, {{0, i}, {1, j}});
  return s;
}

/// (Delta_+, Delta_-) = sum_i v_i^{+-1} d_i^2.
inline std::pair<Scalar, Scalar> delta_pm(const ModularData& cat) {
  Scalar plus = 0.0, minus = 0.0;
  for (Label i = 0; i < cat.rank(); ++i) {
    const Scalar d2 = cat.qdim(i) * cat.qdim(i);
    plus += cat.twist(i) * d2;
    minus += d2 / cat.twist(i);
  }
  return {plus, minus};
}

inline bool is_modular(const ModularData& cat, double eps = kDefaultTolerance) {
  return std::abs(s_matrix(cat).determinant()) > eps;
}

}  // namespace quantum3
