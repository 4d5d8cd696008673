// Regenerates the shipped data files under a data directory:
//   triangulations/{s3,s1_x_s2,lens2..lens5}.json
//   categories/<builtin>.json
//   diagrams/*.json
// Usage: gen_data <data-dir>

#include <filesystem>
#include <iostream>

#include "quantum3/quantum3.hpp"

namespace fs = std::filesystem;
using namespace quantum3;

namespace {

SurgeryPresentation with_framings(MorseDiagram d, std::vector<int> framings) {
  SurgeryPresentation p{std::move(d), {}};
  for (auto& [id, c] : p.diagram.components) {
    c.color.reset();
    c.framing = framings.at(id);
    p.surgery.push_back(id);
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_data <data-dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  fs::create_directories(root / "triangulations");
  fs::create_directories(root / "categories");
  fs::create_directories(root / "diagrams");

  auto tri = [&](const std::string& name, const Triangulation& t) {
    save_triangulation((root / "triangulations" / (name + ".json")).string(), t);
    std::cout << name << ": " << t.num_tetrahedra() << " tetrahedra, width " << min_fill_width(t) << "\n";
  };
  tri("s3", sphere_s3());
  tri("s1_x_s2", s1_x_s2());
  for (int p = 2; p <= 5; ++p) tri("lens" + std::to_string(p), lens(p));

  json_util::save_file((root / "categories" / "vec_z2.json").string(), category_to_json(vec_zn(2)));
  json_util::save_file((root / "categories" / "vec_z3.json").string(), category_to_json(vec_zn(3)));
  json_util::save_file((root / "categories" / "fibonacci.json").string(), category_to_json(fibonacci()));
  json_util::save_file((root / "categories" / "ising.json").string(), category_to_json(ising()));

  const fs::path dd = root / "diagrams";
  auto diagram = [&](const std::string& name, const MorseDiagram& d) {
    json_util::save_file((dd / (name + ".json")).string(), diagram_to_json(d));
  };
  auto presentation = [&](const std::string& name, const SurgeryPresentation& p) {
    json_util::save_file((dd / (name + ".json")).string(), presentation_to_json(p));
  };

  diagram("unknot", unknot(1));
  diagram("unknot_framed", unknot(1, 2));
  diagram("hopf", hopf_link(1, 1));
  // Positive curl drawn in the blackboard framing.
  diagram("curl", DiagramBuilder().component(0, 1, 1).cup(0, 0).cup(2, 0, false).pos(1).cap(0).cap(0).build());
  diagram("trefoil", braid_closure(2, {1, 1, 1}, 1));
  diagram("omega_unknot_plus", unknot(std::nullopt, 1));
  diagram("omega_unknot_minus", unknot(std::nullopt, -1));
  // Colored unknot slid over a +1-framed Omega circle: before and after.
  {
    MorseDiagram before = disjoint_union(unknot(std::nullopt, 1), unknot(1, 0));
    MorseDiagram after = hopf_link(std::nullopt, 1);
    after.components[0].framing = 1;
    after.components[1].framing = 1;
    diagram("slide_before", before);
    diagram("slide_after", after);
  }

  presentation("surgery_s3", SurgeryPresentation{});
  presentation("surgery_s1_x_s2", unknot_surgery(0));
  for (int p = 2; p <= 5; ++p) presentation("surgery_lens" + std::to_string(p), unknot_surgery(p));
  presentation("surgery_hopf_00", with_framings(hopf_link(0, 0), {0, 0}));
  // Handle slide: unlink with framings (0, 1) and the result of sliding
  // component 0 over component 1.
  presentation("surgery_slide_before", with_framings(disjoint_union(unknot(0), unknot(0)), {0, 1}));
  presentation("surgery_slide_after", with_framings(hopf_link(0, 0), {1, 1}));
  {
    SurgeryPresentation p = unknot_surgery(3);
    p.diagram = disjoint_union(p.diagram, unknot(1));
    presentation("surgery_lens3_wilson", p);
  }
  presentation("surgery_trefoil", with_framings(braid_closure(2, {1, 1, 1}, 0), {-1}));
  return 0;
}
