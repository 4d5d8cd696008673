#pragma once

// Ordered generalized triangulations (Delta-complexes) of closed oriented
// 3-manifolds.
//
// Every tetrahedron lists four distinct vertex classes in increasing global
// order, so local vertices 0<1<2<3 are well defined. Face f of a tetrahedron
// is the face opposite local vertex f. Gluings identify two faces carrying the
// same vertex classes (the order-preserving identification). The sign
// sigma_T says whether the orientation of M on T agrees (+1) with the
// orientation induced by the vertex order; face f then carries boundary sign
// sigma_T * (-1)^f relative to its own vertex order, and glued faces must
// carry opposite signs.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quantum3/scalar.hpp"

namespace quantum3 {

/// Local edges of a tetrahedron as vertex pairs.
inline constexpr std::array<std::array<int, 2>, 6> kLocalEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Local edge index for the pair (u, v), u < v.
inline constexpr int local_edge(int u, int v) {
  for (int e = 0; e < 6; ++e)
    if (kLocalEdges[e][0] == u && kLocalEdges[e][1] == v) return e;
  return -1;
}

/// Local vertices of face f in increasing order.
inline constexpr std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[n++] = v;
  return out;
}

struct FaceRef {
  int tet = -1;
  int face = -1;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

struct EdgeClass {
  int lo = -1, hi = -1;                         // vertex classes, lo < hi
  std::vector<std::pair<int, int>> incidences;  // (tet, local edge)
};

struct TriangleClass {
  std::array<int, 3> vertices{};        // vertex classes, increasing
  std::array<FaceRef, 2> incidences{};  // the two glued faces
};

/// Raised by Triangulation::build with every violation found.
class InvalidTriangulation : public StructureError {
 public:
  explicit InvalidTriangulation(std::vector<std::string> violations)
      : StructureError(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid triangulation";
    for (const auto& x : v) s += "; " + x;
    return s;
  }
  std::vector<std::string> violations_;
};

/// Unvalidated combinatorial data; the input of Triangulation::build.
struct TriangulationData {
  std::vector<std::string> vertices;           // names in increasing order
  std::vector<std::array<int, 4>> tetrahedra;  // vertex indices
  std::vector<std::array<int, 4>> gluings;     // (tet, face, tet, face)
  std::vector<int> orientation;                // +1 / -1 per tetrahedron
};

class Triangulation {
 public:
  /// Validates `data` and derives edge and triangle classes. Throws
  /// InvalidTriangulation listing every violation.
  static Triangulation build(const TriangulationData& data) {
    std::vector<std::string> violations = check(data);
    if (!violations.empty()) throw InvalidTriangulation(std::move(violations));
    Triangulation tri;
    tri.names_ = data.vertices;
    tri.tets_ = data.tetrahedra;
    tri.sign_ = data.orientation;
    tri.partner_.assign(tri.tets_.size(), {});
    for (const auto& g : data.gluings) {
      tri.partner_[g[0]][g[1]] = {g[2], g[3]};
      tri.partner_[g[2]][g[3]] = {g[0], g[1]};
    }
    tri.derive();
    return tri;
  }

  /// Every violation of the structural invariants; empty when valid.
  static std::vector<std::string> check(const TriangulationData& data) {
    std::vector<std::string> out;
    const int nv = static_cast<int>(data.vertices.size());
    const int nt = static_cast<int>(data.tetrahedra.size());
    if (nt == 0) out.push_back("no tetrahedra");
    {
      std::set<std::string> seen;
      for (const auto& n : data.vertices)
        if (!seen.insert(n).second) out.push_back("duplicate vertex name '" + n + "'");
    }
    if (static_cast<int>(data.orientation.size()) != nt)
      out.push_back("orientation has " + std::to_string(data.orientation.size()) + " entries for " +
                    std::to_string(nt) + " tetrahedra");
    bool tets_ok = true;
    for (int t = 0; t < nt; ++t) {
      const auto& v = data.tetrahedra[t];
      for (int x : v)
        if (x < 0 || x >= nv) {
          out.push_back("tetrahedron " + std::to_string(t) + " references unknown vertex");
          tets_ok = false;
        }
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          if (v[i] == v[j]) {
            out.push_back("tetrahedron " + std::to_string(t) + " repeats vertex class " + std::to_string(v[i]));
            tets_ok = false;
          } else if (v[i] > v[j]) {
            out.push_back("tetrahedron " + std::to_string(t) + " not listed in increasing vertex order");
            tets_ok = false;
          }
        }
      if (t < static_cast<int>(data.orientation.size()) && data.orientation[t] != 1 && data.orientation[t] != -1)
        out.push_back("orientation of tetrahedron " + std::to_string(t) + " must be +1 or -1");
    }
    if (!tets_ok) return out;

    std::vector<std::array<std::optional<FaceRef>, 4>> partner(nt);
    for (std::size_t g = 0; g < data.gluings.size(); ++g) {
      const auto& gl = data.gluings[g];
      const std::string where = "gluing " + std::to_string(g);
      if (gl[0] < 0 || gl[0] >= nt || gl[2] < 0 || gl[2] >= nt || gl[1] < 0 || gl[1] > 3 || gl[3] < 0 ||
          gl[3] > 3) {
        out.push_back(where + " references an unknown tetrahedron or face");
        continue;
      }
      if (gl[0] == gl[2] && gl[1] == gl[3]) {
        out.push_back(where + " glues a face to itself");
        continue;
      }
      bool dup = false;
      for (auto [t, f] : {std::pair{gl[0], gl[1]}, std::pair{gl[2], gl[3]}})
        if (partner[t][f]) {
          out.push_back("face (" + std::to_string(t) + "," + std::to_string(f) + ") glued more than once");
          dup = true;
        }
      if (dup) continue;
      partner[gl[0]][gl[1]] = FaceRef{gl[2], gl[3]};
      partner[gl[2]][gl[3]] = FaceRef{gl[0], gl[1]};
      if (face_classes(data.tetrahedra[gl[0]], gl[1]) != face_classes(data.tetrahedra[gl[2]], gl[3]))
        out.push_back(where + " is not order-preserving (faces carry different vertex classes)");
    }
    for (int t = 0; t < nt; ++t)
      for (int f = 0; f < 4; ++f)
        if (!partner[t][f]) out.push_back("face (" + std::to_string(t) + "," + std::to_string(f) + ") is unglued");
    if (!out.empty()) return out;

    if (static_cast<int>(data.orientation.size()) == nt) {
      bool coherent = true;
      for (const auto& gl : data.gluings)
        if (boundary_sign(data.orientation[gl[0]], gl[1]) != -boundary_sign(data.orientation[gl[2]], gl[3]))
          coherent = false;
      if (!coherent) {
        if (!coherent_orientation(data.tetrahedra.size(), data.gluings))
          out.push_back("complex is not orientable");
        else
          out.push_back("orientation signs are not coherent across glued faces");
      }
    }
    if (!out.empty()) return out;

    // Closed 3-manifold: all vertex links are spheres iff chi = 0.
    Triangulation probe;
    probe.names_ = data.vertices;
    probe.tets_ = data.tetrahedra;
    probe.sign_ = data.orientation;
    probe.partner_.assign(nt, {});
    for (int t = 0; t < nt; ++t)
      for (int f = 0; f < 4; ++f) probe.partner_[t][f] = *partner[t][f];
    probe.derive();
    if (probe.euler_characteristic() != 0)
      out.push_back("Euler characteristic is " + std::to_string(probe.euler_characteristic()) +
                    ", not 0 (some vertex link is not a sphere)");
    std::vector<int> used(nv, 0);
    for (const auto& v : data.tetrahedra)
      for (int x : v) used[x] = 1;
    for (int x = 0; x < nv; ++x)
      if (!used[x]) out.push_back("vertex '" + data.vertices[x] + "' is not used by any tetrahedron");
    return out;
  }

  /// A coherent sign assignment (first tetrahedron +1), or nullopt when the
  /// gluing graph is not orientable.
  static std::optional<std::vector<int>> coherent_orientation(std::size_t num_tets,
                                                              const std::vector<std::array<int, 4>>& gluings) {
    std::vector<std::vector<std::array<int, 3>>> adj(num_tets);
    for (const auto& g : gluings) {
      adj[g[0]].push_back({g[1], g[2], g[3]});
      adj[g[2]].push_back({g[3], g[0], g[1]});
    }
    std::vector<int> sign(num_tets, 0);
    for (std::size_t root = 0; root < num_tets; ++root) {
      if (sign[root]) continue;
      sign[root] = 1;
      std::vector<std::size_t> stack{root};
      while (!stack.empty()) {
        const auto t = stack.back();
        stack.pop_back();
        for (const auto& [f, u, g] : adj[t]) {
          const int want = -boundary_sign(sign[t], f) * ((g % 2) ? -1 : 1);
          if (!sign[u]) {
            sign[u] = want;
            stack.push_back(static_cast<std::size_t>(u));
          } else if (sign[u] != want) {
            return std::nullopt;
          }
        }
      }
    }
    return sign;
  }

  /// Boundary sign of face f of a tetrahedron with orientation sign s.
  static int boundary_sign(int s, int f) { return (f % 2) ? -s : s; }

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_tetrahedra() const { return static_cast<int>(tets_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_triangles() - num_tetrahedra(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::array<int, 4>& tetrahedron(int t) const { return tets_[t]; }
  const std::vector<std::array<int, 4>>& tetrahedra() const { return tets_; }
  int orientation(int t) const { return sign_[t]; }
  FaceRef partner(int t, int f) const { return partner_[t][f]; }

  const std::vector<EdgeClass>& edges() const { return edges_; }
  const std::vector<TriangleClass>& triangles() const { return triangles_; }
  int edge_of(int t, int local) const { return edge_of_[t][local]; }
  int triangle_of(int t, int f) const { return triangle_of_[t][f]; }

  /// Sign epsilon(t, T) of face f of tetrahedron T.
  int face_sign(int t, int f) const { return boundary_sign(sign_[t], f); }

  /// Back to plain data, gluings listed once each in (tet, face) order.
  TriangulationData data() const {
    TriangulationData d{names_, tets_, {}, sign_};
    for (int t = 0; t < num_tetrahedra(); ++t)
      for (int f = 0; f < 4; ++f) {
        const FaceRef p = partner_[t][f];
        if (FaceRef{t, f} < p) d.gluings.push_back({t, f, p.tet, p.face});
      }
    return d;
  }

 private:
  static std::array<int, 3> face_classes(const std::array<int, 4>& v, int f) {
    const auto fv = face_vertices(f);
    return {v[fv[0]], v[fv[1]], v[fv[2]]};
  }

  void derive() {
    const int nt = num_tetrahedra();
    // Union-find over local edges (tet * 6 + edge).
    std::vector<int> parent(static_cast<std::size_t>(nt) * 6);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int t = 0; t < nt; ++t)
      for (int f = 0; f < 4; ++f) {
        const FaceRef p = partner_[t][f];
        const auto a = face_vertices(f), b = face_vertices(p.face);
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            const int x = find(t * 6 + local_edge(a[i], a[j]));
            const int y = find(p.tet * 6 + local_edge(b[i], b[j]));
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
          }
      }
    edges_.clear();
    edge_of_.assign(nt, {});
    std::map<int, int> root_to_class;
    for (int t = 0; t < nt; ++t)
      for (int e = 0; e < 6; ++e) {
        const int root = find(t * 6 + e);
        auto [it, fresh] = root_to_class.try_emplace(root, static_cast<int>(edges_.size()));
        if (fresh) {
          EdgeClass ec;
          ec.lo = tets_[t][kLocalEdges[e][0]];
          ec.hi = tets_[t][kLocalEdges[e][1]];
          edges_.push_back(ec);
        }
        edges_[it->second].incidences.emplace_back(t, e);
        edge_of_[t][e] = it->second;
      }
    triangles_.clear();
    triangle_of_.assign(nt, {-1, -1, -1, -1});
    for (int t = 0; t < nt; ++t)
      for (int f = 0; f < 4; ++f) {
        if (triangle_of_[t][f] >= 0) continue;
        const FaceRef p = partner_[t][f];
        TriangleClass tc;
        tc.vertices = face_classes(tets_[t], f);
        tc.incidences = {FaceRef{t, f}, p};
        triangle_of_[t][f] = triangle_of_[p.tet][p.face] = static_cast<int>(triangles_.size());
        triangles_.push_back(tc);
      }
  }

  std::vector<std::string> names_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<int> sign_;
  std::vector<std::array<FaceRef, 4>> partner_;
  std::vector<EdgeClass> edges_;
  std::vector<TriangleClass> triangles_;
  std::vector<std::array<int, 6>> edge_of_;
  std::vector<std::array<int, 4>> triangle_of_;
};

/// Raised when a Pachner move is not applicable at the requested location.
class MoveRefused : public StructureError {
 public:
  using StructureError::StructureError;
};

namespace detail {

using Point = std::array<double, 3>;

inline int orientation_of(const std::array<Point, 4>& p) {
  const auto d = [&](int i, int k) { return p[i][k] - p[0][k]; };
  const double det = d(1, 0) * (d(2, 1) * d(3, 2) - d(2, 2) * d(3, 1)) -
                     d(1, 1) * (d(2, 0) * d(3, 2) - d(2, 2) * d(3, 0)) +
                     d(1, 2) * (d(2, 0) * d(3, 1) - d(2, 1) * d(3, 0));
  return det > 0 ? 1 : -1;
}

inline int orientation_of(const std::array<int, 4>& verts, const std::map<int, Point>& coords) {
  return orientation_of({coords.at(verts[0]), coords.at(verts[1]), coords.at(verts[2]), coords.at(verts[3])});
}

inline std::array<int, 4> sorted4(std::array<int, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Replaces the tetrahedra in `removed` by `added` (vertex tuples increasing),
/// orienting each new tetrahedron from a local embedding `coords` in which the
/// manifold orientation equals `geometric_sign` times the geometric one.
/// New faces carrying the vertex classes of an outer face of the removed
/// region inherit that face's outside partner; the rest pair up internally.
inline TriangulationData replace_region(const Triangulation& tri, const std::vector<int>& removed,
                                        const std::vector<std::array<int, 4>>& added,
                                        const std::map<int, Point>& coords, int geometric_sign,
                                        std::vector<std::string> vertices) {
  const int nt = tri.num_tetrahedra();
  std::vector<char> gone(nt, 0);
  for (int t : removed) gone[t] = 1;
  std::vector<int> new_index(nt, -1);
  TriangulationData out;
  out.vertices = std::move(vertices);
  for (int t = 0; t < nt; ++t)
    if (!gone[t]) {
      new_index[t] = static_cast<int>(out.tetrahedra.size());
      out.tetrahedra.push_back(tri.tetrahedron(t));
      out.orientation.push_back(tri.orientation(t));
    }
  const int first_new = static_cast<int>(out.tetrahedra.size());
  for (const auto& v : added) {
    out.tetrahedra.push_back(v);
    out.orientation.push_back(geometric_sign * orientation_of(v, coords));
  }
  auto classes = [](const std::array<int, 4>& v, int f) {
    const auto fv = face_vertices(f);
    return std::array<int, 3>{v[fv[0]], v[fv[1]], v[fv[2]]};
  };
  // Outer faces of the removed region keyed by vertex classes.
  std::map<std::array<int, 3>, FaceRef> outer;
  for (int t : removed)
    for (int f = 0; f < 4; ++f)
      if (!gone[tri.partner(t, f).tet]) outer[classes(tri.tetrahedron(t), f)] = {t, f};
  std::map<FaceRef, FaceRef> replaced;  // old outer face -> new face
  std::map<std::array<int, 3>, FaceRef> pending;
  std::set<std::pair<FaceRef, FaceRef>> glue;
  for (int i = 0; i < static_cast<int>(added.size()); ++i)
    for (int f = 0; f < 4; ++f) {
      const FaceRef here{first_new + i, f};
      const auto key = classes(added[i], f);
      if (auto it = outer.find(key); it != outer.end()) {
        replaced[it->second] = here;
        outer.erase(it);
      } else if (auto jt = pending.find(key); jt != pending.end()) {
        glue.insert({jt->second, here});
        pending.erase(jt);
      } else {
        pending[key] = here;
      }
    }
  if (!outer.empty() || !pending.empty()) throw MoveRefused("move region does not close up");
  for (int t = 0; t < nt; ++t) {
    if (gone[t]) continue;
    for (int f = 0; f < 4; ++f) {
      const FaceRef p = tri.partner(t, f);
      const FaceRef here{new_index[t], f};
      const FaceRef there = gone[p.tet] ? replaced.at(p) : FaceRef{new_index[p.tet], p.face};
      if (here < there) glue.insert({here, there});
    }
  }
  for (const auto& [old_face, nf] : replaced) {
    const FaceRef p = tri.partner(old_face.tet, old_face.face);
    if (gone[p.tet]) {
      const FaceRef other = replaced.at(p);
      glue.insert({std::min(nf, other), std::max(nf, other)});
    }
  }
  for (const auto& [a, b] : glue) out.gluings.push_back({a.tet, a.face, b.tet, b.face});
  return out;
}

}  // namespace detail

/// 2-3 move on triangle class `t`: the two tetrahedra sharing it become three
/// around a new edge joining the opposite vertices.
inline Triangulation pachner_23(const Triangulation& tri, int t) {
  if (t < 0 || t >= tri.num_triangles()) throw MoveRefused("2-3: no triangle " + std::to_string(t));
  const auto& tc = tri.triangles()[t];
  const FaceRef A = tc.incidences[0], B = tc.incidences[1];
  if (A.tet == B.tet) throw MoveRefused("2-3: both sides of triangle " + std::to_string(t) + " lie in one tetrahedron");
  const int a = tri.tetrahedron(A.tet)[A.face];
  const int b = tri.tetrahedron(B.tet)[B.face];
  if (a == b)
    throw MoveRefused("2-3: apexes of triangle " + std::to_string(t) +
                      " share a vertex class; new tetrahedra admit no increasing order");
  const auto [x, y, z] = tc.vertices;
  std::map<int, detail::Point> coords{
      {x, {1, 0, 0}}, {y, {0, 1, 0}}, {z, {-1, -1, 0}}, {a, {0, 0, 1}}, {b, {0, 0, -1}}};
  const int s = tri.orientation(A.tet) * detail::orientation_of(tri.tetrahedron(A.tet), coords);
  std::vector<std::array<int, 4>> added{detail::sorted4({a, b, x, y}), detail::sorted4({a, b, y, z}),
                                        detail::sorted4({a, b, x, z})};
  return Triangulation::build(
      detail::replace_region(tri, {A.tet, B.tet}, added, coords, s, tri.vertex_names()));
}

/// 3-2 move on an edge class of degree three in three distinct tetrahedra.
inline Triangulation pachner_32(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.num_edges()) throw MoveRefused("3-2: no edge " + std::to_string(e));
  const auto& ec = tri.edges()[e];
  if (ec.incidences.size() != 3) throw MoveRefused("3-2: edge " + std::to_string(e) + " does not have degree 3");
  std::vector<int> tets;
  std::set<int> link;
  for (auto [t, le] : ec.incidences) {
    tets.push_back(t);
    for (int v : tri.tetrahedron(t))
      if (v != ec.lo && v != ec.hi) link.insert(v);
  }
  if (std::set<int>(tets.begin(), tets.end()).size() != 3)
    throw MoveRefused("3-2: edge " + std::to_string(e) + " meets a tetrahedron more than once");
  if (link.size() != 3) throw MoveRefused("3-2: link of edge " + std::to_string(e) + " repeats a vertex class");
  const auto it = link.begin();
  const int x = *it, y = *std::next(it), z = *std::next(it, 2);
  const int a = ec.lo, b = ec.hi;
  std::map<int, detail::Point> coords{
      {x, {1, 0, 0}}, {y, {0, 1, 0}}, {z, {-1, -1, 0}}, {a, {0, 0, 1}}, {b, {0, 0, -1}}};
  const int s = tri.orientation(tets[0]) * detail::orientation_of(tri.tetrahedron(tets[0]), coords);
  std::vector<std::array<int, 4>> added{detail::sorted4({a, x, y, z}), detail::sorted4({b, x, y, z})};
  return Triangulation::build(detail::replace_region(tri, tets, added, coords, s, tri.vertex_names()));
}

/// 1-4 move: cone tetrahedron `t` from a new vertex placed last in the order.
inline Triangulation pachner_14(const Triangulation& tri, int t, std::string name = {}) {
  if (t < 0 || t >= tri.num_tetrahedra()) throw MoveRefused("1-4: no tetrahedron " + std::to_string(t));
  auto names = tri.vertex_names();
  if (name.empty()) {
    std::set<std::string> taken(names.begin(), names.end());
    for (int k = static_cast<int>(names.size());; ++k)
      if (!taken.count("v" + std::to_string(k))) {
        name = "v" + std::to_string(k);
        break;
      }
  }
  const int v = static_cast<int>(names.size());
  names.push_back(name);
  const auto [p, q, r, s] = tri.tetrahedron(t);
  std::map<int, detail::Point> coords{
      {p, {0, 0, 0}}, {q, {1, 0, 0}}, {r, {0, 1, 0}}, {s, {0, 0, 1}}, {v, {0.25, 0.25, 0.25}}};
  const int sign = tri.orientation(t) * detail::orientation_of(tri.tetrahedron(t), coords);
  std::vector<std::array<int, 4>> added{{p, q, r, v}, {p, q, s, v}, {p, r, s, v}, {q, r, s, v}};
  return Triangulation::build(detail::replace_region(tri, {t}, added, coords, sign, names));
}

/// 4-1 move: remove a vertex whose star is four tetrahedra coning a
/// tetrahedron boundary.
inline Triangulation pachner_41(const Triangulation& tri, int v) {
  if (v < 0 || v >= tri.num_vertices()) throw MoveRefused("4-1: no vertex " + std::to_string(v));
  std::vector<int> star;
  std::set<int> link;
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    const auto& tv = tri.tetrahedron(t);
    if (std::find(tv.begin(), tv.end(), v) == tv.end()) continue;
    star.push_back(t);
    for (int x : tv)
      if (x != v) link.insert(x);
  }
  if (star.size() != 4 || link.size() != 4)
    throw MoveRefused("4-1: vertex " + std::to_string(v) + " does not have a 4-tetrahedron star");
  for (int t : star)
    for (int f = 0; f < 4; ++f) {
      const int opposite = tri.tetrahedron(t)[f];
      const bool inner = opposite != v;
      const bool partner_in_star = std::find(star.begin(), star.end(), tri.partner(t, f).tet) != star.end();
      if (inner != partner_in_star)
        throw MoveRefused("4-1: star of vertex " + std::to_string(v) + " is not a subdivided tetrahedron");
    }
  std::array<int, 4> outer{};
  std::copy(link.begin(), link.end(), outer.begin());
  std::map<int, detail::Point> coords{{outer[0], {0, 0, 0}},
                                      {outer[1], {1, 0, 0}},
                                      {outer[2], {0, 1, 0}},
                                      {outer[3], {0, 0, 1}},
                                      {v, {0.25, 0.25, 0.25}}};
  const int sign = tri.orientation(star[0]) * detail::orientation_of(tri.tetrahedron(star[0]), coords);
  auto data = detail::replace_region(tri, star, {outer}, coords, sign, tri.vertex_names());
  // Drop vertex v and shift later indices down.
  data.vertices.erase(data.vertices.begin() + v);
  for (auto& tv : data.tetrahedra)
    for (int& x : tv)
      if (x > v) --x;
  return Triangulation::build(data);
}

/// Same complex with a new vertex order; `rank[v]` is the new position of
/// vertex v. Signs are adjusted by the parity of the local reordering.
inline Triangulation reorder(const Triangulation& tri, const std::vector<int>& rank) {
  const int nv = tri.num_vertices();
  if (static_cast<int>(rank.size()) != nv) throw StructureError("reorder: rank vector has wrong length");
  TriangulationData d;
  d.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) d.vertices.at(rank[v]) = tri.vertex_names()[v];
  std::vector<std::array<int, 4>> perm_of(tri.num_tetrahedra());  // new local position -> old local vertex
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    std::array<int, 4> order{0, 1, 2, 3};
    const auto& tv = tri.tetrahedron(t);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return rank[tv[i]] < rank[tv[j]]; });
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (order[i] > order[j]) ++inversions;
    std::array<int, 4> nvx{};
    for (int i = 0; i < 4; ++i) nvx[i] = rank[tv[order[i]]];
    d.tetrahedra.push_back(nvx);
    d.orientation.push_back(inversions % 2 ? -tri.orientation(t) : tri.orientation(t));
    perm_of[t] = order;
  }
  auto new_face = [&](int t, int f) {
    for (int i = 0; i < 4; ++i)
      if (perm_of[t][i] == f) return i;
    return -1;
  };
  for (const auto& g : tri.data().gluings) d.gluings.push_back({g[0], new_face(g[0], g[1]), g[2], new_face(g[2], g[3])});
  return Triangulation::build(d);
}

/// Isomorphism preserving vertex order (vertex i maps to vertex i), tetrahedron
/// vertex tuples, orientation signs, and gluings; tetrahedra may be permuted.
inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_tetrahedra() != b.num_tetrahedra()) return false;
  const int nt = a.num_tetrahedra();
  // Candidate lists by signature.
  std::map<std::pair<std::array<int, 4>, int>, std::vector<int>> by_sig;
  for (int t = 0; t < nt; ++t) by_sig[{b.tetrahedron(t), b.orientation(t)}].push_back(t);
  std::vector<int> map(nt, -1), used(nt, 0);
  // Search in BFS order over a's gluing graph so partners constrain early.
  std::vector<int> order;
  {
    std::vector<char> seen(nt, 0);
    for (int root = 0; root < nt; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      order.push_back(root);
      for (std::size_t i = order.size() - 1; i < order.size(); ++i)
        for (int f = 0; f < 4; ++f) {
          const int u = a.partner(order[i], f).tet;
          if (!seen[u]) {
            seen[u] = 1;
            order.push_back(u);
          }
        }
    }
  }
  auto consistent = [&](int t, int u) {
    for (int f = 0; f < 4; ++f) {
      const FaceRef p = a.partner(t, f);
      if (map[p.tet] < 0) continue;
      const FaceRef q = b.partner(u, f);
      if (q.tet != map[p.tet] || q.face != p.face) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int t = order[i];
    auto it = by_sig.find({a.tetrahedron(t), a.orientation(t)});
    if (it == by_sig.end()) return false;
    for (int u : it->second) {
      if (used[u]) continue;
      map[t] = u;
      if (consistent(t, u)) {
        used[u] = 1;
        if (self(self, i + 1)) return true;
        used[u] = 0;
      }
      map[t] = -1;
    }
    return false;
  };
  return search(search, 0);
}

/// Boundary of the 4-simplex on vertices 0..4.
inline Triangulation sphere_s3() {
  TriangulationData d;
  d.vertices = {"0", "1", "2", "3", "4"};
  for (int missing = 0; missing < 5; ++missing) {
    std::array<int, 4> t{};
    int n = 0;
    for (int v = 0; v < 5; ++v)
      if (v != missing) t[n++] = v;
    d.tetrahedra.push_back(t);
  }
  // Tetrahedra i < j share the face missing {i, j}; in tetrahedron i that face
  // is opposite vertex j, which sits at local position j-1.
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) d.gluings.push_back({i, j - 1, j, i});
  d.orientation = *Triangulation::coherent_orientation(d.tetrahedra.size(), d.gluings);
  return Triangulation::build(d);
}

}  // namespace quantum3
