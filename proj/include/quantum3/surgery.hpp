#pragma once

// Reshetikhin-Turaev invariants from surgery presentations.

#include <algorithm>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quantum3/modular.hpp"

namespace quantum3 {

/// Closed diagram whose `surgery` components are uncolored and carry the
/// surgery framings; other components are colored Wilson lines.
struct SurgeryPresentation {
  MorseDiagram diagram;
  std::vector<int> surgery;
};

inline void check_presentation(const SurgeryPresentation& p) {
  for (int id : p.surgery) {
    auto it = p.diagram.components.find(id);
    if (it == p.diagram.components.end()) throw DiagramError("surgery component " + std::to_string(id) + " is not declared");
    if (it->second.color) throw DiagramError("surgery component " + std::to_string(id) + " carries a color");
  }
  for (const auto& [id, c] : p.diagram.components)
    if (!c.color && std::find(p.surgery.begin(), p.surgery.end(), id) == p.surgery.end())
      throw DiagramError("component " + std::to_string(id) + " is neither colored nor a surgery component");
}

using IntMatrix = std::vector<std::vector<long long>>;

/// b_ii = framing, b_ij = linking number; rows follow `p.surgery`.
inline IntMatrix linking_matrix(const SurgeryPresentation& p) {
  check_presentation(p);
  const DiagramWalk w = walk(p.diagram);
  const std::size_t m = p.surgery.size();
  IntMatrix b(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    b[i][i] = p.diagram.components.at(p.surgery[i]).framing;
    for (std::size_t j = i + 1; j < m; ++j) {
      const int a = std::min(p.surgery[i], p.surgery[j]), c = std::max(p.surgery[i], p.surgery[j]);
      auto it = w.linking2.find({a, c});
      const long long twice = it == w.linking2.end() ? 0 : it->second;
      if (twice % 2 != 0) throw DiagramError("odd crossing count between components " + std::to_string(a) + " and " + std::to_string(c));
      b[i][j] = b[j][i] = twice / 2;
    }
  }
  return b;
}

struct Inertia {
  int positive = 0, negative = 0, nullity = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a symmetric integer matrix by rational congruence
/// elimination.
inline Inertia signature_counts(const IntMatrix& b) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t n = b.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw std::invalid_argument("linking matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (b[i][j] != b[j][i]) throw std::invalid_argument("linking matrix is not symmetric");
      a[i][j] = b[i][j];
    }
  }
  Inertia out;
  // Congruence A -> E A E^T; both row and column operations at once.
  auto add_to = [&](std::size_t dst, std::size_t src, const Q& k) {
    for (std::size_t c = 0; c < n; ++c) a[dst][c] += k * a[src][c];
    for (std::size_t r = 0; r < n; ++r) a[r][dst] += k * a[r][src];
  };
  auto swap_idx = [&](std::size_t x, std::size_t y) {
    std::swap(a[x], a[y]);
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i)
      if (a[i][i] != 0) piv = i;
    if (piv == n) {
      // No diagonal pivot: fold an off-diagonal entry onto the diagonal.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.nullity += static_cast<int>(n - k);
        break;
      }
      add_to(pi, pj, Q(1));  // a[pi][pi] becomes 2 a[pi][pj]
      piv = pi;
    }
    swap_idx(k, piv);
    for (std::size_t i = k + 1; i < n; ++i)
      if (a[i][k] != 0) add_to(i, k, -a[i][k] / a[k][k]);
    (a[k][k] > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

struct WrtResult {
  Inertia inertia;
  Scalar bracket;  // <L(Omega) u K>
  Scalar value;
};

/// WRT(M_L) = Delta_+^{-e+} Delta_-^{-e-} <L_1(Omega) u ... u L_m(Omega) u K>.
inline WrtResult wrt_detail(const ModularData& cat, const SurgeryPresentation& p) {
  if (!is_modular(cat)) throw StructureError("wrt needs a modular category (S-matrix is singular)");
  const Inertia in = signature_counts(linking_matrix(p));
  const auto [dp, dm] = delta_pm(cat);
  const Scalar bracket = evaluate_kirby(cat, p.diagram, p.surgery);
  return {in, bracket, std::pow(dp, -in.positive) * std::pow(dm, -in.negative) * bracket};
}

inline Scalar wrt(const ModularData& cat, const SurgeryPresentation& p) { return wrt_detail(cat, p).value; }

/// tau(M) = sqrt_dim^{-b1-1} WRT(M), b1 = nullity of the linking matrix.
inline Scalar tau(const ModularData& cat, Scalar sqrt_dim, const SurgeryPresentation& p) {
  if (!approx_equal(sqrt_dim * sqrt_dim, global_dim(cat.base())))
    throw std::invalid_argument("sqrt_dim squared does not equal the global dimension");
  const WrtResult r = wrt_detail(cat, p);
  return std::pow(sqrt_dim, -r.inertia.nullity - 1) * r.value;
}

/// Orientation reversal: mirror diagram, negated framings.
inline SurgeryPresentation mirror(const SurgeryPresentation& p) { return {mirror(p.diagram), p.surgery}; }

/// Single unknot with framing n: S^3 for n = +-1, S^1 x S^2 for 0, L(n,1) otherwise.
inline SurgeryPresentation unknot_surgery(int framing) { return {unknot(std::nullopt, framing), {0}}; }

/// dim^{g-1} sum_i d_i^{2-2g}.
inline Scalar verlinde_dim(const ModularData& cat, int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  Scalar sum = 0.0;
  for (Label i = 0; i < cat.rank(); ++i) sum += std::pow(cat.qdim(i), 2 - 2 * genus);
  return std::pow(global_dim(cat.base()), genus - 1) * sum;
}

}  // namespace quantum3
