#pragma once

// Triangulation files:
//   {"vertices": [names in order], "tetrahedra": [[n0,n1,n2,n3], ...],
//    "gluings": [[t,f,t,f], ...], "orientation": [+1/-1, ...]}

#include <map>
#include <string>

#include "quantum3/json_util.hpp"
#include "quantum3/triangulation.hpp"

namespace quantum3 {

inline TriangulationData triangulation_data_from_json(const Json& j) {
  using namespace json_util;
  reject_unknown(j, {"vertices", "tetrahedra", "gluings", "orientation"}, "");
  TriangulationData d;
  std::map<std::string, int> index;
  const Json& jv = array(field(j, "vertices"), "vertices");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    d.vertices.push_back(string(jv[i], idx("vertices", i)));
    if (!index.emplace(d.vertices.back(), static_cast<int>(i)).second)
      throw FormatError(idx("vertices", i), "duplicate vertex name '" + d.vertices.back() + "'");
  }
  const Json& jt = array(field(j, "tetrahedra"), "tetrahedra");
  for (std::size_t t = 0; t < jt.size(); ++t) {
    const std::string p = idx("tetrahedra", t);
    array(jt[t], p, 4);
    std::array<int, 4> tet{};
    for (int k = 0; k < 4; ++k) {
      const std::string name = string(jt[t][k], idx(p, k));
      auto it = index.find(name);
      if (it == index.end()) throw FormatError(idx(p, k), "unknown vertex '" + name + "'");
      tet[k] = it->second;
    }
    d.tetrahedra.push_back(tet);
  }
  const int nt = static_cast<int>(d.tetrahedra.size());
  const Json& jg = array(field(j, "gluings"), "gluings");
  for (std::size_t g = 0; g < jg.size(); ++g) {
    const std::string p = idx("gluings", g);
    array(jg[g], p, 4);
    std::array<int, 4> row{};
    for (int k = 0; k < 4; ++k) {
      row[k] = integer(jg[g][k], idx(p, k));
      const int hi = k % 2 == 0 ? nt : 4;
      if (row[k] < 0 || row[k] >= hi) throw FormatError(idx(p, k), "index out of range");
    }
    d.gluings.push_back(row);
  }
  const Json& jo = array(field(j, "orientation"), "orientation", static_cast<std::size_t>(nt));
  for (std::size_t t = 0; t < jo.size(); ++t) {
    const int s = integer(jo[t], idx("orientation", t));
    if (s != 1 && s != -1) throw FormatError(idx("orientation", t), "sign must be +1 or -1");
    d.orientation.push_back(s);
  }
  return d;
}

inline Triangulation triangulation_from_json(const Json& j) { return Triangulation::build(triangulation_data_from_json(j)); }

inline Json triangulation_to_json(const Triangulation& tri) {
  const TriangulationData d = tri.data();
  Json j;
  j["vertices"] = d.vertices;
  Json tets = Json::array();
  for (const auto& t : d.tetrahedra) tets.push_back({d.vertices[t[0]], d.vertices[t[1]], d.vertices[t[2]], d.vertices[t[3]]});
  j["tetrahedra"] = tets;
  Json glue = Json::array();
  for (const auto& g : d.gluings) glue.push_back(g);
  j["gluings"] = glue;
  j["orientation"] = d.orientation;
  return j;
}

inline Triangulation load_triangulation(const std::string& filename) {
  return json_util::load_file(filename, triangulation_from_json);
}

inline void save_triangulation(const std::string& filename, const Triangulation& tri) {
  json_util::save_file(filename, triangulation_to_json(tri));
}

}  // namespace quantum3
