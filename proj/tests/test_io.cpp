#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace q3test;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "quantum3_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Runs `fn` and returns the FormatError's where() string.
template <class Fn>
std::string error_where(Fn&& fn) {
  try {
    fn();
  } catch (const FormatError& e) {
    return e.where();
  }
  return "<no error>";
}

TEST(CategoryIo, RoundTripPreservesData) {
  for (const auto& [name, m] : modular_builtins()) {
    const CategoryFile back = category_from_json(Json::parse(json_util::dump_rows(category_to_json(m))));
    ASSERT_TRUE(back.braided.has_value());
    EXPECT_EQ(category_to_json(*back.braided), category_to_json(m)) << name;
  }
  const CategoryFile z3 = category_from_json(category_to_json(vec_zn(3)));
  EXPECT_FALSE(z3.braided.has_value());
  EXPECT_EQ(z3.spherical.entries().size(), vec_zn(3).entries().size());
}

TEST(CategoryIo, ShippedFilesEqualRegeneratedBuiltins) {
  EXPECT_EQ(Json::parse(std::ifstream(data_path("categories/fibonacci.json"))), category_to_json(fibonacci()));
  EXPECT_EQ(Json::parse(std::ifstream(data_path("categories/ising.json"))), category_to_json(ising()));
  EXPECT_EQ(Json::parse(std::ifstream(data_path("categories/vec_z2.json"))), category_to_json(vec_zn(2)));
  EXPECT_EQ(Json::parse(std::ifstream(data_path("categories/vec_z3.json"))), category_to_json(vec_zn(3)));
}

TEST(CategoryIo, ErrorsNameTheField) {
  const Json good = category_to_json(fibonacci());
  auto with = [&](auto edit) {
    Json j = good;
    edit(j);
    return error_where([&] { category_from_json(j); });
  };
  EXPECT_EQ(with([](Json& j) { j["colour"] = 1; }), "colour");
  EXPECT_EQ(with([](Json& j) { j.erase("qdim"); }), "qdim");
  EXPECT_EQ(with([](Json& j) { j["rank"] = "two"; }), "rank");
  EXPECT_EQ(with([](Json& j) { j["sixj"][4][2] = 7; }), "sixj[4][2]");
  EXPECT_EQ(with([](Json& j) { j["sixj"][3] = Json::array({1, 1}); }), "sixj[3]");
  EXPECT_EQ(with([](Json& j) { j["sixj"][5] = j["sixj"][4]; }), "sixj[5]");
  EXPECT_EQ(with([](Json& j) { j["qdim"][1] = 1.6; }), "qdim[1]");
  EXPECT_EQ(with([](Json& j) { j["fusion"][0][1] = -1; }), "fusion[0][1]");
  EXPECT_EQ(with([](Json& j) { j.erase("twist"); }), "twist");
  EXPECT_EQ(with([](Json& j) { j["rsym"][0][3] = "x"; }), "rsym[0][3]");
  EXPECT_EQ(with([](Json& j) { j["dual"] = Json::array({0}); }), "dual");
}

TEST(CategoryIo, LoadFilePrefixesFileName) {
  const fs::path p = scratch("bad_category.json");
  Json j = category_to_json(fibonacci());
  j["sixj"][2][0] = 9;
  write(p, j.dump());
  EXPECT_EQ(error_where([&] { load_category(p.string()); }), p.string() + ": sixj[2][0]");
  write(p, "{ not json");
  try {
    load_category(p.string());
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("invalid JSON"), std::string::npos);
  }
  EXPECT_EQ(error_where([] { load_category("/nonexistent/cat.json"); }), "/nonexistent/cat.json");
}

TEST(TriangulationIo, RoundTrip) {
  for (const Triangulation& t : {sphere_s3(), lens(2)}) {
    const fs::path p = scratch("tri.json");
    save_triangulation(p.string(), t);
    const Triangulation back = load_triangulation(p.string());
    EXPECT_TRUE(isomorphic(back, t));
    EXPECT_EQ(back.vertex_names(), t.vertex_names());
  }
}

TEST(TriangulationIo, ErrorsNameTheField) {
  const Json good = triangulation_to_json(sphere_s3());
  auto with = [&](auto edit) {
    Json j = good;
    edit(j);
    return error_where([&] { triangulation_data_from_json(j); });
  };
  EXPECT_EQ(with([](Json& j) { j["tets"] = 1; }), "tets");
  EXPECT_EQ(with([](Json& j) { j["tetrahedra"][1][2] = "q"; }), "tetrahedra[1][2]");
  EXPECT_EQ(with([](Json& j) { j["vertices"][1] = "0"; }), "vertices[1]");
  EXPECT_EQ(with([](Json& j) { j["gluings"][3][1] = 4; }), "gluings[3][1]");
  EXPECT_EQ(with([](Json& j) { j["gluings"][3][2] = 5; }), "gluings[3][2]");
  EXPECT_EQ(with([](Json& j) { j["orientation"][0] = 0; }), "orientation[0]");
  EXPECT_EQ(with([](Json& j) { j["orientation"].erase(0); }), "orientation");
  // structurally invalid but well formed: build lists the violation
  Json j = good;
  j["orientation"][0] = -j["orientation"][0].get<int>();
  EXPECT_THROW(triangulation_from_json(j), InvalidTriangulation);
}

TEST(DiagramIo, RoundTripEvaluatesTheSame) {
  const ModularData fib = fibonacci();
  for (const MorseDiagram& d : {hopf_link(1, 1), braid_closure(3, {1, -2, 1}, 1), unknot(1, 3)}) {
    const MorseDiagram back = diagram_from_json(Json::parse(json_util::dump_rows(diagram_to_json(d))));
    EXPECT_EQ(diagram_to_json(back), diagram_to_json(d));
    EXPECT_LT(rel_err(evaluate(fib, back), evaluate(fib, d)), 1e-12);
  }
  const StrandWord w{{0, true}, {1, false}};
  MorseDiagram t = DiagramBuilder().component(0, 1).component(1, 1).pos(0).boundary(w, {{1, false}, {0, true}}).build();
  EXPECT_EQ(diagram_to_json(diagram_from_json(diagram_to_json(t))), diagram_to_json(t));
}

TEST(DiagramIo, PresentationRoundTrip) {
  const SurgeryPresentation p = load_presentation(data_path("diagrams/surgery_lens3_wilson.json"));
  EXPECT_EQ(p.surgery, std::vector<int>{0});
  const SurgeryPresentation back = presentation_from_json(presentation_to_json(p));
  EXPECT_EQ(presentation_to_json(back), presentation_to_json(p));
}

TEST(DiagramIo, ErrorsNameTheField) {
  const Json good = diagram_to_json(hopf_link(1, 1));
  auto with = [&](auto edit) {
    Json j = good;
    edit(j);
    return error_where([&] { diagram_from_json(j); });
  };
  EXPECT_EQ(with([](Json& j) { j["surgery_components"] = Json::array(); }), "surgery_components");
  EXPECT_EQ(with([](Json& j) { j["slices"][2][0]["type"] = "twist"; }), "slices[2][0].type");
  EXPECT_EQ(with([](Json& j) { j["slices"][1][0]["dir"] = "left"; }), "slices[1][0].dir");
  EXPECT_EQ(with([](Json& j) { j["slices"][2][0]["component"] = 0; }), "slices[2][0]");
  EXPECT_EQ(with([](Json& j) { j["components"][1]["id"] = 0; }), "components[1].id");
  EXPECT_EQ(with([](Json& j) { j["components"][0]["colour"] = 0; }), "components[0].colour");
  EXPECT_EQ(with([](Json& j) { j["slices"][0][0].erase("position"); }), "slices[0][0].position");
  EXPECT_EQ(with([](Json& j) { j["top"] = Json::array({{{"component", 0}}}); }), "top[0].dir");
}

TEST(Json, RowDumpParsesBack) {
  for (const Json& j : {category_to_json(ising()), triangulation_to_json(s1_x_s2()), diagram_to_json(hopf_link(0, 1))})
    EXPECT_EQ(Json::parse(json_util::dump_rows(j)), j);
  EXPECT_EQ(json_util::dump_rows(Json(3)), "3");
}

}  // namespace
