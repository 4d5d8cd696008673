#pragma once

// Strict JSON field access shared by the file readers. Errors carry the
// field path, e.g. "sixj[4][6]".

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "quantum3/scalar.hpp"

namespace quantum3 {

using Json = nlohmann::json;

/// Malformed input file. `where` is "file: field".
class FormatError : public StructureError {
 public:
  FormatError(const std::string& where, const std::string& what)
      : StructureError(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

namespace json_util {

inline void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path.empty() ? "<root>" : path, "expected an object");
  std::set<std::string> allowed(known.begin(), known.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) throw FormatError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
}

inline const Json& field(const Json& obj, const char* name, const std::string& path = {}) {
  const std::string where = path.empty() ? std::string(name) : path + "." + name;
  if (!obj.contains(name)) throw FormatError(where, "missing field");
  return obj.at(name);
}

inline const Json& array(const Json& j, const std::string& path, std::size_t size = 0) {
  if (!j.is_array()) throw FormatError(path, "expected an array");
  if (size && j.size() != size) throw FormatError(path, "expected " + std::to_string(size) + " entries");
  return j;
}

inline int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError(path, "expected an integer");
  return j.get<int>();
}

inline double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw FormatError(path, "expected a number");
  return j.get<double>();
}

inline std::string string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path, "expected a string");
  return j.get<std::string>();
}

/// [re, im]
inline Scalar complex_pair(const Json& j, const std::string& path) {
  array(j, path, 2);
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

inline Json pair(Scalar z) { return Json::array({z.real(), z.imag()}); }

inline std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

/// Parses a file; the file name is prefixed to any FormatError.
template <class Fn>
auto load_file(const std::string& filename, Fn&& parse) {
  std::ifstream in(filename);
  if (!in) throw FormatError(filename, "cannot open file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(filename, std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse(j);
  } catch (const FormatError& e) {
    throw FormatError(filename + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  } catch (const StructureError& e) {
    throw FormatError(filename, e.what());
  }
}

/// One top-level field per line, one array element per line.
inline std::string dump_rows(const Json& j) {
  if (!j.is_object()) return j.dump();
  std::string out = "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += "  " + Json(it.key()).dump() + ": ";
    const Json& v = it.value();
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (v.is_array() && !v.empty() && !flat) {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) out += "    " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += v.dump();
    }
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

inline void save_file(const std::string& filename, const Json& j) {
  std::ofstream out(filename);
  if (!out) throw FormatError(filename, "cannot write file");
  out << dump_rows(j);
}

}  // namespace json_util
}  // namespace quantum3
