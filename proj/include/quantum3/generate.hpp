#pragma once

// Construction of ordered triangulations for S^1 x S^2 and lens spaces.
//
// Small gluings of these manifolds identify vertices of a tetrahedron with
// each other, which an ordered complex forbids. We start from such a
// generalized gluing, take the barycentric subdivision (vertices of each new
// tetrahedron are barycenters of cells of dimensions 0,1,2,3 and so are
// distinct and ordered by dimension), and then shrink the result with
// inverse Pachner moves that keep the order valid.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quantum3/state_sum.hpp"
#include "quantum3/triangulation.hpp"

namespace quantum3 {

/// Face gluing in a generalized complex: local vertex i of this tetrahedron
/// goes to local vertex perm[i] of `tet`; perm[face] is the partner face.
struct RawGluing {
  int tet = -1;
  std::array<int, 4> perm{};
};

/// Closed generalized complex without vertex-class constraints.
struct RawComplex {
  std::vector<std::array<RawGluing, 4>> faces;  // faces[t][f]

  int num_tets() const { return static_cast<int>(faces.size()); }

  void glue(int t, int f, int u, std::array<int, 4> perm) {
    faces[t][f] = {u, perm};
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[perm[i]] = i;
    faces[u][perm[f]] = {t, inv};
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Dense class numbering of the roots of a union-find over n items.
inline std::vector<int> class_ids(UnionFind& uf, int n, int& count) {
  std::vector<int> id(n, -1);
  std::map<int, int> root_id;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = root_id.try_emplace(uf.find(i), static_cast<int>(root_id.size()));
    id[i] = it->second;
  }
  count = static_cast<int>(root_id.size());
  return id;
}

}  // namespace detail

/// Barycentric subdivision of a closed generalized complex, as an ordered
/// triangulation with vertices ordered by cell dimension.
inline Triangulation barycentric_subdivision(const RawComplex& raw) {
  const int nt = raw.num_tets();
  detail::UnionFind vuf(nt * 4), euf(nt * 6), fuf(nt * 4);
  for (int t = 0; t < nt; ++t)
    for (int f = 0; f < 4; ++f) {
      const RawGluing& g = raw.faces[t][f];
      fuf.unite(t * 4 + f, g.tet * 4 + g.perm[f]);
      for (int i = 0; i < 4; ++i) {
        if (i == f) continue;
        vuf.unite(t * 4 + i, g.tet * 4 + g.perm[i]);
        for (int j = i + 1; j < 4; ++j) {
          if (j == f) continue;
          const int pi = g.perm[i], pj = g.perm[j];
          euf.unite(t * 6 + local_edge(i, j), g.tet * 6 + local_edge(std::min(pi, pj), std::max(pi, pj)));
        }
      }
    }
  int nv = 0, ne = 0, nf = 0;
  const auto vid = detail::class_ids(vuf, nt * 4, nv);
  const auto eid = detail::class_ids(euf, nt * 6, ne);
  const auto fid = detail::class_ids(fuf, nt * 4, nf);

  TriangulationData d;
  for (int i = 0; i < nv; ++i) d.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < ne; ++i) d.vertices.push_back("e" + std::to_string(i));
  for (int i = 0; i < nf; ++i) d.vertices.push_back("f" + std::to_string(i));
  for (int i = 0; i < nt; ++i) d.vertices.push_back("t" + std::to_string(i));

  std::vector<std::array<int, 4>> perms;
  {
    std::array<int, 4> p{0, 1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  auto perm_index = [&](const std::array<int, 4>& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  auto sub = [&](int t, const std::array<int, 4>& p) { return t * 24 + perm_index(p); };

  for (int t = 0; t < nt; ++t)
    for (const auto& p : perms) {
      const int e = eid[t * 6 + local_edge(std::min(p[0], p[1]), std::max(p[0], p[1]))];
      d.tetrahedra.push_back({vid[t * 4 + p[0]], nv + e, nv + ne + fid[t * 4 + p[3]], nv + ne + nf + t});
    }
  for (int t = 0; t < nt; ++t)
    for (const auto& p : perms) {
      const int here = sub(t, p);
      for (int k = 0; k < 3; ++k) {
        auto q = p;
        std::swap(q[k], q[k + 1]);
        const int there = sub(t, q);
        if (here < there) d.gluings.push_back({here, k, there, k});
      }
      const RawGluing& g = raw.faces[t][p[3]];
      const std::array<int, 4> q{g.perm[p[0]], g.perm[p[1]], g.perm[p[2]], g.perm[p[3]]};
      const int there = sub(g.tet, q);
      if (here < there) d.gluings.push_back({here, 3, there, 3});
    }
  auto sign = Triangulation::coherent_orientation(d.tetrahedra.size(), d.gluings);
  if (!sign) throw InvalidTriangulation({"generalized complex is not orientable"});
  d.orientation = *sign;
  return Triangulation::build(d);
}

/// Applies 4-1 and 3-2 moves until none is possible. Deterministic.
inline Triangulation reduce_greedy(Triangulation tri) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < tri.num_vertices() && !changed; ++v) {
      try {
        tri = pachner_41(tri, v);
        changed = true;
      } catch (const MoveRefused&) {
      }
    }
    for (int e = 0; e < tri.num_edges() && !changed; ++e) {
      if (tri.edges()[e].incidences.size() != 3) continue;
      try {
        tri = pachner_32(tri, e);
        changed = true;
      } catch (const MoveRefused&) {
      }
    }
  }
  return tri;
}

/// Greedy reduction with random 2-3 moves to leave local minima. The walk
/// restarts from the best complex seen; it stops after `patience` attempts
/// without improvement. Deterministic for a fixed seed.
inline Triangulation simplify(Triangulation tri, std::uint64_t seed = 1, int patience = 400, int kicks = 3) {
  std::mt19937_64 rng(seed);
  Triangulation best = reduce_greedy(std::move(tri));
  for (int stale = 0; stale < patience;) {
    Triangulation cur = best;
    for (int k = 0; k < kicks; ++k) {
      std::uniform_int_distribution<int> pick(0, cur.num_triangles() - 1);
      for (int attempt = 0; attempt < 20; ++attempt) {
        try {
          cur = pachner_23(cur, pick(rng));
          break;
        } catch (const MoveRefused&) {
        }
      }
    }
    cur = reduce_greedy(std::move(cur));
    if (cur.num_tetrahedra() < best.num_tetrahedra()) {
      best = std::move(cur);
      stale = 0;
    } else {
      ++stale;
    }
  }
  return best;
}

/// Renames vertices to their order position.
inline Triangulation compact_names(const Triangulation& tri) {
  TriangulationData d = tri.data();
  for (int i = 0; i < static_cast<int>(d.vertices.size()); ++i) d.vertices[i] = std::to_string(i);
  return Triangulation::build(d);
}

/// Lens space L(p,1) as a bipyramid of p tetrahedra around the polar axis,
/// upper faces glued to lower faces after a rotation by one step.
inline RawComplex lens_raw(int p) {
  if (p < 1) throw std::invalid_argument("lens: p must be >= 1");
  RawComplex raw;
  raw.faces.resize(p);
  // Tetrahedron k has local vertices (N, S, v_k, v_{k+1}).
  for (int k = 0; k < p; ++k) {
    const int next = (k + 1) % p;
    // Face {N, S, v_{k+1}} of k is face {N, S, v_{k+1}} of k+1.
    raw.glue(k, 2, next, {0, 1, 3, 2});
    // Upper face {N, v_k, v_{k+1}} of k onto lower face {S, v_{k+1}, v_{k+2}} of k+1.
    raw.glue(k, 1, next, {1, 0, 2, 3});
  }
  return raw;
}

/// S^2 x [0,1] with the ends identified. S^2 is the boundary of a
/// tetrahedron; each prism over one of its triangles is cut into three
/// tetrahedra by the staircase rule.
inline RawComplex s1_x_s2_raw() {
  // Vertex labels: letter * 2 + layer.
  std::vector<std::array<int, 4>> tets;
  for (int missing = 0; missing < 4; ++missing) {
    std::array<int, 3> tri{};
    int n = 0;
    for (int v = 0; v < 4; ++v)
      if (v != missing) tri[n++] = v;
    const auto [x, y, z] = tri;
    tets.push_back({x * 2, y * 2, z * 2, z * 2 + 1});
    tets.push_back({x * 2, y * 2, y * 2 + 1, z * 2 + 1});
    tets.push_back({x * 2, x * 2 + 1, y * 2 + 1, z * 2 + 1});
  }
  const int nt = static_cast<int>(tets.size());
  // Faces entirely in the top layer match the bottom layer.
  auto key_label = [](const std::array<int, 3>& labels) {
    const bool top = std::all_of(labels.begin(), labels.end(), [](int l) { return l % 2 == 1; });
    std::array<int, 3> key = labels;
    if (top)
      for (int& l : key) l -= 1;
    return std::pair{key, top};
  };
  std::map<std::array<int, 3>, std::vector<std::pair<int, int>>> by_key;
  for (int t = 0; t < nt; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto fv = face_vertices(f);
      std::array<int, 3> labels{tets[t][fv[0]], tets[t][fv[1]], tets[t][fv[2]]};
      auto [key, top] = key_label(labels);
      std::sort(key.begin(), key.end());
      by_key[key].emplace_back(t, f);
    }
  RawComplex raw;
  raw.faces.resize(nt);
  for (const auto& [key, list] : by_key) {
    if (list.size() != 2) throw InvalidTriangulation({"S^2 x I prism faces do not pair up"});
    const auto [t, f] = list[0];
    const auto [u, g] = list[1];
    auto normal = [&](int tet, int vtx, int face) {
      const auto fv = face_vertices(face);
      std::array<int, 3> labels{tets[tet][fv[0]], tets[tet][fv[1]], tets[tet][fv[2]]};
      const bool top = key_label(labels).second;
      const int l = tets[tet][vtx];
      return top ? l - 1 : l;
    };
    std::array<int, 4> perm{};
    perm[f] = g;
    for (int i = 0; i < 4; ++i) {
      if (i == f) continue;
      for (int j = 0; j < 4; ++j)
        if (j != g && normal(u, j, g) == normal(t, i, f)) perm[i] = j;
    }
    raw.glue(t, f, u, perm);
  }
  return raw;
}

/// Simplifies with several seeds and keeps the result with the smallest
/// min-fill width, then the fewest tetrahedra.
inline Triangulation simplify_for_contraction(const Triangulation& tri, int seeds = 8) {
  std::optional<Triangulation> best;
  std::pair<int, int> best_key{};
  for (int seed = 1; seed <= seeds; ++seed) {
    Triangulation s = simplify(tri, static_cast<std::uint64_t>(seed), 100);
    const std::pair<int, int> key{min_fill_width(s), s.num_tetrahedra()};
    if (!best || key < best_key) {
      best = std::move(s);
      best_key = key;
    }
  }
  return compact_names(*best);
}

/// Ordered triangulation of S^1 x S^2.
inline Triangulation s1_x_s2() { return simplify_for_contraction(barycentric_subdivision(s1_x_s2_raw()), 1); }

/// Ordered triangulation of the lens space L(p,1), p >= 2.
inline Triangulation lens(int p) {
  if (p < 2) throw std::invalid_argument("lens: p must be >= 2");
  return simplify_for_contraction(barycentric_subdivision(lens_raw(p)));
}

}  // namespace quantum3
