#pragma once

// Category data files:
//   {"rank": r, "dual": [...], "fusion": [[i,j,k], ...], "qdim": [[re,im], ...],
//    "sixj": [[i,j,k,l,m,n,re,im], ...], "rsym": [[i,j,k,re,im], ...], "twist": [[re,im], ...]}
// rsym and twist are optional but go together.

#include <optional>
#include <string>
#include <variant>

#include "quantum3/category.hpp"
#include "quantum3/json_util.hpp"

namespace quantum3 {

/// Parsed category file: braided data when rsym/twist are present.
struct CategoryFile {
  SphericalData spherical;
  std::optional<ModularData> braided;
};

inline CategoryFile category_from_json(const Json& j) {
  using namespace json_util;
  reject_unknown(j, {"rank", "dual", "fusion", "qdim", "sixj", "rsym", "twist"}, "");
  const int rank = integer(field(j, "rank"), "rank");
  if (rank < 1) throw FormatError("rank", "must be >= 1");
  auto label = [rank](const Json& x, const std::string& path) {
    const int v = integer(x, path);
    if (v < 0 || v >= rank) throw FormatError(path, "label " + std::to_string(v) + " out of range");
    return v;
  };

  const Json& jd = array(field(j, "dual"), "dual", rank);
  std::vector<Label> dual;
  for (std::size_t i = 0; i < jd.size(); ++i) dual.push_back(label(jd[i], idx("dual", i)));

  const Json& jf = array(field(j, "fusion"), "fusion");
  std::vector<std::array<Label, 3>> triples;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string p = idx("fusion", i);
    array(jf[i], p, 3);
    triples.push_back({label(jf[i][0], idx(p, 0)), label(jf[i][1], idx(p, 1)), label(jf[i][2], idx(p, 2))});
  }
  FusionRing ring(rank, dual, triples);

  const Json& jq = array(field(j, "qdim"), "qdim", rank);
  std::vector<Scalar> qdim;
  for (std::size_t i = 0; i < jq.size(); ++i) qdim.push_back(complex_pair(jq[i], idx("qdim", i)));

  const Json& js = array(field(j, "sixj"), "sixj");
  std::vector<SixjEntry> sixj;
  std::set<std::array<Label, 6>> seen6;
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string p = idx("sixj", i);
    array(js[i], p, 8);
    SixjEntry e{};
    for (int k = 0; k < 6; ++k) e.labels[k] = label(js[i][k], idx(p, k));
    e.value = {number(js[i][6], idx(p, 6)), number(js[i][7], idx(p, 7))};
    if (!seen6.insert(e.labels).second) throw FormatError(p, "duplicate entry " + SphericalData::tuple_string(e.labels));
    sixj.push_back(e);
  }
  CategoryFile out{SphericalData(ring, qdim, sixj), std::nullopt};

  const bool has_r = j.contains("rsym"), has_t = j.contains("twist");
  if (has_r != has_t) throw FormatError(has_r ? "twist" : "rsym", "rsym and twist must be given together");
  if (has_r) {
    const Json& jr = array(j.at("rsym"), "rsym");
    std::vector<RsymEntry> rsym;
    std::set<std::array<Label, 3>> seen3;
    for (std::size_t i = 0; i < jr.size(); ++i) {
      const std::string p = idx("rsym", i);
      array(jr[i], p, 5);
      RsymEntry e{};
      for (int k = 0; k < 3; ++k) e.labels[k] = label(jr[i][k], idx(p, k));
      e.value = {number(jr[i][3], idx(p, 3)), number(jr[i][4], idx(p, 4))};
      if (!seen3.insert(e.labels).second) throw FormatError(p, "duplicate entry");
      rsym.push_back(e);
    }
    const Json& jt = array(j.at("twist"), "twist", rank);
    std::vector<Scalar> twist;
    for (std::size_t i = 0; i < jt.size(); ++i) twist.push_back(complex_pair(jt[i], idx("twist", i)));
    out.braided = ModularData(out.spherical, rsym, twist);
  }
  return out;
}

inline Json category_to_json(const SphericalData& cat, const ModularData* braided = nullptr) {
  using json_util::pair;
  Json j;
  j["rank"] = cat.rank();
  j["dual"] = cat.ring().duals();
  Json fusion = Json::array();
  for (const auto& t : cat.ring().triples()) fusion.push_back(t);
  j["fusion"] = fusion;
  Json qdim = Json::array();
  for (Scalar d : cat.qdims()) qdim.push_back(pair(d));
  j["qdim"] = qdim;
  Json sixj = Json::array();
  for (const auto& e : cat.entries()) {
    Json row = Json::array();
    for (Label x : e.labels) row.push_back(x);
    row.push_back(e.value.real());
    row.push_back(e.value.imag());
    sixj.push_back(row);
  }
  j["sixj"] = sixj;
  if (braided) {
    Json rsym = Json::array();
    for (const auto& e : braided->rsym_entries())
      rsym.push_back({e.labels[0], e.labels[1], e.labels[2], e.value.real(), e.value.imag()});
    j["rsym"] = rsym;
    Json twist = Json::array();
    for (Scalar t : braided->twists()) twist.push_back(pair(t));
    j["twist"] = twist;
  }
  return j;
}

inline Json category_to_json(const ModularData& cat) { return category_to_json(cat.base(), &cat); }

inline CategoryFile load_category(const std::string& filename) {
  return json_util::load_file(filename, category_from_json);
}

}  // namespace quantum3
