#pragma once

// Diagram files:
//   {"components": [{"id": 0, "color": 1, "framing": 0}, ...],
//    "slices": [[{"type": "cup", "position": 0, "component": 0, "dir": "up"}, ...], ...],
//    "bottom": [{"component": 0, "dir": "up"}, ...], "top": [...]}
// bottom/top are optional (tangles). Presentation files add
//   "surgery_components": [ids].

#include <algorithm>
#include <string>

#include "quantum3/diagram.hpp"
#include "quantum3/json_util.hpp"
#include "quantum3/surgery.hpp"

namespace quantum3 {

namespace detail {

inline bool parse_dir(const Json& j, const std::string& path) {
  const std::string s = json_util::string(j, path);
  if (s == "up") return true;
  if (s == "down") return false;
  throw FormatError(path, "direction must be \"up\" or \"down\"");
}

inline StrandWord word_from_json(const Json& j, const std::string& path) {
  using namespace json_util;
  StrandWord w;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = idx(path, i);
    reject_unknown(j[i], {"component", "dir"}, p);
    w.push_back({integer(field(j[i], "component", p), p + ".component"), parse_dir(field(j[i], "dir", p), p + ".dir")});
  }
  return w;
}

inline Json word_to_json(const StrandWord& w) {
  Json out = Json::array();
  for (const auto& s : w) out.push_back({{"component", s.component}, {"dir", s.up ? "up" : "down"}});
  return out;
}

}  // namespace detail

inline MorseDiagram diagram_from_json(const Json& j, std::initializer_list<const char*> extra = {}) {
  using namespace json_util;
  std::vector<const char*> known{"components", "slices", "bottom", "top"};
  known.insert(known.end(), extra.begin(), extra.end());
  if (!j.is_object()) throw FormatError("<root>", "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find_if(known.begin(), known.end(), [&](const char* k) { return it.key() == k; }) == known.end())
      throw FormatError(it.key(), "unknown field");

  MorseDiagram d;
  const Json& jc = array(field(j, "components"), "components");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string p = idx("components", i);
    reject_unknown(jc[i], {"id", "color", "framing"}, p);
    const int id = integer(field(jc[i], "id", p), p + ".id");
    Component c;
    if (jc[i].contains("color")) c.color = integer(jc[i]["color"], p + ".color");
    c.framing = jc[i].contains("framing") ? integer(jc[i]["framing"], p + ".framing") : 0;
    if (!d.components.emplace(id, c).second) throw FormatError(p + ".id", "duplicate component id " + std::to_string(id));
  }
  const Json& js = array(field(j, "slices"), "slices");
  for (std::size_t s = 0; s < js.size(); ++s) {
    const std::string ps = idx("slices", s);
    array(js[s], ps);
    Slice slice;
    for (std::size_t k = 0; k < js[s].size(); ++k) {
      const std::string p = idx(ps, k);
      const Json& je = js[s][k];
      reject_unknown(je, {"type", "position", "component", "dir"}, p);
      const std::string type = string(field(je, "type", p), p + ".type");
      auto t = parse_event(type);
      if (!t) throw FormatError(p + ".type", "unknown event type '" + type + "'");
      Event e{*t, integer(field(je, "position", p), p + ".position")};
      if (*t == EventType::Cup) {
        e.component = integer(field(je, "component", p), p + ".component");
        e.up = je.contains("dir") ? detail::parse_dir(je["dir"], p + ".dir") : true;
      } else if (je.contains("component") || je.contains("dir")) {
        throw FormatError(p, "only cups take component and dir");
      }
      slice.push_back(e);
    }
    d.slices.push_back(std::move(slice));
  }
  if (j.contains("bottom")) d.bottom = detail::word_from_json(j["bottom"], "bottom");
  if (j.contains("top")) d.top = detail::word_from_json(j["top"], "top");
  return d;
}

inline Json diagram_to_json(const MorseDiagram& d) {
  Json j;
  Json comps = Json::array();
  for (const auto& [id, c] : d.components) {
    Json x{{"id", id}, {"framing", c.framing}};
    if (c.color) x["color"] = *c.color;
    comps.push_back(x);
  }
  j["components"] = comps;
  Json slices = Json::array();
  for (const auto& s : d.slices) {
    Json row = Json::array();
    for (const auto& e : s) {
      Json x{{"type", event_name(e.type)}, {"position", e.position}};
      if (e.type == EventType::Cup) {
        x["component"] = e.component;
        x["dir"] = e.up ? "up" : "down";
      }
      row.push_back(x);
    }
    slices.push_back(row);
  }
  j["slices"] = slices;
  if (!d.bottom.empty()) j["bottom"] = detail::word_to_json(d.bottom);
  if (!d.top.empty()) j["top"] = detail::word_to_json(d.top);
  return j;
}

inline SurgeryPresentation presentation_from_json(const Json& j) {
  using namespace json_util;
  SurgeryPresentation p{diagram_from_json(j, {"surgery_components"}), {}};
  if (j.contains("surgery_components")) {
    const Json& js = array(j["surgery_components"], "surgery_components");
    for (std::size_t i = 0; i < js.size(); ++i) p.surgery.push_back(integer(js[i], idx("surgery_components", i)));
  }
  return p;
}

inline Json presentation_to_json(const SurgeryPresentation& p) {
  Json j = diagram_to_json(p.diagram);
  j["surgery_components"] = p.surgery;
  return j;
}

inline MorseDiagram load_diagram(const std::string& filename) {
  return json_util::load_file(filename, [](const Json& j) { return diagram_from_json(j); });
}

inline SurgeryPresentation load_presentation(const std::string& filename) {
  return json_util::load_file(filename, presentation_from_json);
}

}  // namespace quantum3
