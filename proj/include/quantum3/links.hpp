#pragma once

// Small link diagrams used by tests, the corpus and the CLI samples.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quantum3/diagram.hpp"

namespace quantum3 {

/// Unknot with the given color and framing.
inline MorseDiagram unknot(std::optional<Label> color, int framing = 0) {
  return DiagramBuilder().component(0, color, framing).cup(0, 0).cap(0).build();
}

/// Hopf link with linking number +1, components 0 and 1, zero framings.
inline MorseDiagram hopf_link(std::optional<Label> i, std::optional<Label> j) {
  return DiagramBuilder()
      .component(0, i)
      .component(1, j)
      .cup(0, 0)
      .cup(2, 1, false)
      .pos(1)
      .pos(1)
      .cap(0)
      .cap(0)
      .build();
}

/// Closure of an n-strand braid. Generator +k (1 <= k < n) is a positive
/// crossing of strands k-1 and k, -k a negative one. Components are numbered
/// by the cycles of the braid permutation, in order of their smallest strand;
/// all get `color` and zero framing. Strands run upward.
inline MorseDiagram braid_closure(int n, const std::vector<int>& word, std::optional<Label> color) {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);  // perm[position] = starting strand
  for (int g : word) {
    const int k = g > 0 ? g : -g;
    if (k < 1 || k >= n) throw std::invalid_argument("braid generator out of range");
    std::swap(perm[k - 1], perm[k]);
  }
  // The closure joins top position k to bottom strand k.
  std::vector<int> comp(n, -1);
  int next_id = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    for (int k = s; comp[k] < 0;) {
      comp[k] = next_id;
      // strand starting at k ends at position pos(k); continue from there
      int pos = 0;
      while (perm[pos] != k) ++pos;
      k = pos;
    }
    ++next_id;
  }
  DiagramBuilder b;
  for (int c = 0; c < next_id; ++c) b.component(c, color);
  for (int k = 0; k < n; ++k) b.cup(k, comp[k]);
  for (int g : word) g > 0 ? b.pos(g - 1) : b.neg(-g - 1);
  for (int k = n - 1; k >= 0; --k) b.cap(k);
  return b.build();
}

/// Places `b` to the right of closed diagram `a`; b's component ids are
/// shifted past a's.
inline MorseDiagram disjoint_union(const MorseDiagram& a, const MorseDiagram& b) {
  if (!a.closed() || !b.closed()) throw DiagramError("disjoint_union needs closed diagrams");
  MorseDiagram out = a;
  const int shift = a.components.empty() ? 0 : a.components.rbegin()->first + 1;
  for (const auto& [id, c] : b.components) out.components[id + shift] = c;
  for (Slice s : b.slices) {
    for (auto& e : s)
      if (e.type == EventType::Cup) e.component += shift;
    out.slices.push_back(std::move(s));
  }
  return out;
}

}  // namespace quantum3
