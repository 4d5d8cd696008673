// quantum3 command-line tool.
//
// Exit codes: 0 success, 1 validation failure or bad input file, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quantum3/quantum3.hpp"

using namespace quantum3;
namespace fs = std::filesystem;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  int workers = 1;
  bool json = false;
};

std::string fmt(Scalar z) {
  std::ostringstream os;
  os << std::setprecision(12);
  const double scale = std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) <= 1e-12 * scale) os << z.real();
  else os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

Json out_object() { return Json{{"schema_version", kSchemaVersion}}; }

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.json) std::cout << j.dump(2) << "\n";
}

ModularData require_braided(const CategoryFile& c, const std::string& file) {
  if (!c.braided) throw FormatError(file, "category has no braiding (rsym and twist are required)");
  return *c.braided;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

/// Elimination plan, memoized under QUANTUM3_CACHE_DIR when it is set.
EliminationPlan plan_for(const Triangulation& tri, Strategy strategy) {
  const char* dir = std::getenv("QUANTUM3_CACHE_DIR");
  const EdgeTensorNetwork shape = network_shape(tri);
  if (!dir || !*dir) return elimination_order(shape, strategy);
  const std::string key = triangulation_to_json(tri).dump() + (strategy == Strategy::MinFill ? "|min-fill" : "|min-degree");
  std::ostringstream name;
  name << "plan-" << std::hex << fnv1a(key) << ".json";
  const fs::path path = fs::path(dir) / name.str();
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      const Json j = Json::parse(in);
      if (j.at("key") == key) return {j.at("order").get<std::vector<int>>(), j.at("width").get<int>()};
    } catch (const std::exception&) {
      // fall through and recompute
    }
  }
  EliminationPlan plan = elimination_order(shape, strategy);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream out(path);
  if (out) out << Json{{"key", key}, {"order", plan.order}, {"width", plan.width}}.dump();
  return plan;
}

int cmd_validate(const RunConfig& cfg, const std::string& file) {
  const CategoryFile c = load_category(file);
  const CategoryReport rep = validate_category(c.spherical, c.braided ? &*c.braided : nullptr, cfg.tol);
  if (cfg.json) {
    Json j = out_object();
    j["file"] = file;
    j["ok"] = rep.ok;
    j["violations"] = rep.violations;
    j["residuals"] = rep.residuals;
    if (rep.modular) j["modular"] = *rep.modular;
    emit(cfg, j);
  } else {
    std::cout << file << ": rank " << c.spherical.rank() << (c.braided ? ", braided" : "") << "\n";
    for (const auto& [name, r] : rep.residuals)
      std::cout << "  " << name << " residual " << std::scientific << std::setprecision(3) << r << std::defaultfloat << "\n";
    if (rep.modular) std::cout << "  modular: " << (*rep.modular ? "yes" : "no") << "\n";
    for (const auto& v : rep.violations) std::cout << "  violation: " << v << "\n";
    std::cout << (rep.ok ? "OK" : "INVALID") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_builtin(const RunConfig& cfg, const std::string& name, const std::string& emit_path) {
  Json j;
  if (name == "vec_z2") j = category_to_json(vec_zn(2));
  else if (name == "vec_z3") j = category_to_json(vec_zn(3));
  else if (name == "fibonacci") j = category_to_json(fibonacci());
  else if (name == "ising") j = category_to_json(ising());
  else {
    std::cerr << "unknown builtin '" << name << "'; known:";
    for (const auto& n : builtin_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  if (emit_path.empty()) {
    std::cout << json_util::dump_rows(j);
    return 0;
  }
  json_util::save_file(emit_path, j);
  if (cfg.json) emit(cfg, [&] {
      Json o = out_object();
      o["builtin"] = name;
      o["file"] = emit_path;
      return o;
    }());
  else std::cout << "wrote " << name << " to " << emit_path << "\n";
  return 0;
}

int cmd_tri_validate(const RunConfig& cfg, const std::string& file) {
  const TriangulationData d = json_util::load_file(file, triangulation_data_from_json);
  const auto violations = Triangulation::check(d);
  if (cfg.json) {
    Json j = out_object();
    j["file"] = file;
    j["ok"] = violations.empty();
    j["violations"] = violations;
    emit(cfg, j);
  } else {
    for (const auto& v : violations) std::cout << "violation: " << v << "\n";
    std::cout << (violations.empty() ? "OK" : "INVALID") << "\n";
  }
  return violations.empty() ? 0 : 1;
}

int cmd_tri_info(const RunConfig& cfg, const std::string& file) {
  const Triangulation t = load_triangulation(file);
  const int width = min_fill_width(t);
  if (cfg.json) {
    Json j = out_object();
    j["file"] = file;
    j["vertices"] = t.num_vertices();
    j["edges"] = t.num_edges();
    j["triangles"] = t.num_triangles();
    j["tetrahedra"] = t.num_tetrahedra();
    j["euler_characteristic"] = t.euler_characteristic();
    j["min_fill_width"] = width;
    emit(cfg, j);
  } else {
    std::cout << "vertices " << t.num_vertices() << "\nedges " << t.num_edges() << "\ntriangles " << t.num_triangles()
              << "\ntetrahedra " << t.num_tetrahedra() << "\neuler characteristic " << t.euler_characteristic()
              << "\nmin-fill width " << width << "\n";
  }
  return 0;
}

struct TvArgs {
  std::string category, triangulation, method = "contract", strategy = "min-fill";
  std::uint64_t cap_states = 10'000'000;
  int cap_width = 24;
};

int cmd_tv(const RunConfig& cfg, const TvArgs& a) {
  const CategoryFile c = load_category(a.category);
  const Triangulation t = load_triangulation(a.triangulation);
  const auto start = std::chrono::steady_clock::now();
  TvStats stats;
  Scalar value;
  if (a.method == "enumerate") {
    value = tv_enumerate(c.spherical, t, {a.cap_states}, &stats);
  } else {
    ContractOptions opt;
    opt.strategy = *parse_strategy(a.strategy);
    opt.cap_width = a.cap_width;
    opt.workers = cfg.workers;
    const EliminationPlan plan = plan_for(t, opt.strategy);
    stats.width = plan.width;
    value = contract(build_network(c.spherical, t), plan, opt);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cfg.json) {
    Json j = out_object();
    j["value"] = json_util::pair(value);
    j["method"] = a.method;
    if (a.method == "enumerate") j["states"] = stats.states;
    else {
      j["strategy"] = a.strategy;
      j["width"] = stats.width;
    }
    j["wall_time_s"] = secs;
    emit(cfg, j);
  } else {
    std::cout << fmt(value) << "\n";
  }
  return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& cat_file, const std::string& diagram_file,
             const std::vector<int>& omega, int charge) {
  const ModularData cat = require_braided(load_category(cat_file), cat_file);
  const MorseDiagram d = load_diagram(diagram_file);
  Json j = out_object();
  if (!d.closed()) {
    const TangleMatrix m = evaluate_tangle(cat, d, charge);
    if (cfg.json) {
      j["charge"] = charge;
      j["bottom_basis"] = m.bottom_basis;
      j["top_basis"] = m.top_basis;
      Json rows = Json::array();
      for (Eigen::Index r = 0; r < m.matrix.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.matrix.cols(); ++k) row.push_back(json_util::pair(m.matrix(r, k)));
        rows.push_back(row);
      }
      j["matrix"] = rows;
      emit(cfg, j);
    } else {
      for (Eigen::Index r = 0; r < m.matrix.rows(); ++r) {
        for (Eigen::Index k = 0; k < m.matrix.cols(); ++k) std::cout << (k ? "  " : "") << fmt(m.matrix(r, k));
        std::cout << "\n";
      }
    }
    return 0;
  }
  const Scalar v = omega.empty() ? evaluate(cat, d) : evaluate_kirby(cat, d, omega);
  if (cfg.json) {
    j["value"] = json_util::pair(v);
    j["omega"] = omega;
    emit(cfg, j);
  } else {
    std::cout << fmt(v) << "\n";
  }
  return 0;
}

int cmd_wrt(const RunConfig& cfg, const std::string& cat_file, const std::string& pres_file, bool want_tau,
            const std::vector<double>& sqrt_dim) {
  const ModularData cat = require_braided(load_category(cat_file), cat_file);
  const SurgeryPresentation p = load_presentation(pres_file);
  const WrtResult r = wrt_detail(cat, p);
  Scalar root = std::sqrt(global_dim(cat.base()));
  if (!sqrt_dim.empty()) {
    if (sqrt_dim.size() != 2) throw CLI::ValidationError("--sqrt-dim", "expected re,im");
    root = {sqrt_dim[0], sqrt_dim[1]};
  }
  std::optional<Scalar> t;
  if (want_tau) t = tau(cat, root, p);
  if (cfg.json) {
    Json j = out_object();
    j["e_plus"] = r.inertia.positive;
    j["e_minus"] = r.inertia.negative;
    j["nullity"] = r.inertia.nullity;
    j["bracket"] = json_util::pair(r.bracket);
    j["wrt"] = json_util::pair(r.value);
    if (t) {
      j["sqrt_dim"] = json_util::pair(root);
      j["tau"] = json_util::pair(*t);
    }
    emit(cfg, j);
  } else {
    std::cout << "e+ " << r.inertia.positive << "  e- " << r.inertia.negative << "  nullity " << r.inertia.nullity << "\n";
    std::cout << "bracket " << fmt(r.bracket) << "\nwrt " << fmt(r.value) << "\n";
    if (t) std::cout << "tau " << fmt(*t) << "\n";
  }
  return 0;
}

int cmd_fuzz(const RunConfig& cfg, const std::string& file, int moves, const std::string& category) {
  const Triangulation t = load_triangulation(file);
  const SphericalData cat = category.empty() ? fibonacci().base() : load_category(category).spherical;
  ContractOptions opt;
  opt.workers = cfg.workers;
  const FuzzReport rep = pachner_fuzz(cat, t, moves, cfg.seed, opt);
  int counts[4] = {0, 0, 0, 0};
  for (const auto& s : rep.steps) ++counts[static_cast<int>(s.move)];
  const bool ok = rep.max_deviation <= cfg.tol * std::max(1.0, std::abs(rep.initial));
  if (cfg.json) {
    Json j = out_object();
    j["initial"] = json_util::pair(rep.initial);
    j["max_deviation"] = rep.max_deviation;
    j["seed"] = cfg.seed;
    j["moves"] = {{"2-3", counts[0]}, {"3-2", counts[1]}, {"1-4", counts[2]}, {"4-1", counts[3]}};
    j["refused"] = rep.refused;
    j["final_tetrahedra"] = rep.final_triangulation.num_tetrahedra();
    j["ok"] = ok;
    emit(cfg, j);
  } else {
    std::cout << "initial " << fmt(rep.initial) << "\n";
    std::cout << "moves 2-3:" << counts[0] << " 3-2:" << counts[1] << " 1-4:" << counts[2] << " 4-1:" << counts[3]
              << " refused:" << rep.refused << "\n";
    std::cout << "final tetrahedra " << rep.final_triangulation.num_tetrahedra() << "\n";
    std::cout << "max deviation " << std::scientific << std::setprecision(3) << rep.max_deviation << "\n";
    std::cout << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verlinde(const RunConfig& cfg, const std::string& file, std::vector<int> genera) {
  const ModularData cat = require_braided(load_category(file), file);
  if (genera.empty()) genera = {0, 1, 2, 3};
  Json values = Json::array();
  for (int g : genera) {
    const Scalar v = verlinde_dim(cat, g);
    values.push_back({{"genus", g}, {"value", json_util::pair(v)}});
    if (!cfg.json) std::cout << "g=" << g << " " << fmt(v) << "\n";
  }
  if (cfg.json) {
    Json j = out_object();
    j["values"] = values;
    emit(cfg, j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum3: Turaev-Viro and Reshetikhin-Turaev invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "Tolerance for identity checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--workers", cfg.workers, "Worker threads for contraction")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit a single JSON object");

  std::string file, file2, emit_path, name, category;
  auto* validate = app.add_subcommand("validate", "Validate a category data file");
  validate->add_option("file", file, "Category file")->required();

  auto* builtin = app.add_subcommand("builtin", "Write builtin category data");
  builtin->add_option("name", name, "vec_z2, vec_z3, fibonacci or ising")->required();
  builtin->add_option("--emit", emit_path, "Output file (stdout if omitted)");

  auto* tri = app.add_subcommand("tri", "Triangulation files");
  tri->require_subcommand(1);
  auto* tri_validate = tri->add_subcommand("validate", "Check a triangulation file");
  tri_validate->add_option("file", file)->required();
  auto* tri_info = tri->add_subcommand("info", "Counts of vertex, edge, triangle classes");
  tri_info->add_option("file", file)->required();

  TvArgs tv_args;
  auto* tv = app.add_subcommand("tv", "State sum of a triangulated 3-manifold");
  tv->add_option("category", tv_args.category)->required();
  tv->add_option("triangulation", tv_args.triangulation)->required();
  tv->add_option("--method", tv_args.method)->check(CLI::IsMember({"enumerate", "contract"}));
  tv->add_option("--strategy", tv_args.strategy)->check(CLI::IsMember({"min-fill", "min-degree"}));
  tv->add_option("--cap-states", tv_args.cap_states)->check(CLI::PositiveNumber);
  tv->add_option("--cap-width", tv_args.cap_width)->check(CLI::PositiveNumber);

  std::vector<int> omega;
  int charge = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate a diagram");
  eval->add_option("category", file)->required();
  eval->add_option("diagram", file2)->required();
  eval->add_option("--omega", omega, "Components colored by the Kirby color")->delimiter(',');
  eval->add_option("--charge", charge, "Total charge for tangles");

  bool want_tau = false;
  std::vector<double> sqrt_dim;
  auto* wrt_cmd = app.add_subcommand("wrt", "Surgery invariant of a presentation");
  wrt_cmd->add_option("category", file)->required();
  wrt_cmd->add_option("presentation", file2)->required();
  wrt_cmd->add_flag("--tau", want_tau, "Also print the normalized invariant");
  wrt_cmd->add_option("--sqrt-dim", sqrt_dim, "Square root of the global dimension as re,im")->delimiter(',');

  int moves = 100;
  auto* fuzz = app.add_subcommand("pachner-fuzz", "Random Pachner moves with the state sum tracked");
  fuzz->add_option("file", file)->required();
  fuzz->add_option("--moves", moves)->check(CLI::NonNegativeNumber);
  fuzz->add_option("--category", category, "Category file (default: builtin fibonacci)");

  std::vector<int> genera;
  auto* verlinde = app.add_subcommand("verlinde", "Verlinde dimensions of closed surfaces");
  verlinde->add_option("category", file)->required();
  verlinde->add_option("--genus", genera)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(cfg, file);
    if (*builtin) return cmd_builtin(cfg, name, emit_path);
    if (*tri_validate) return cmd_tri_validate(cfg, file);
    if (*tri_info) return cmd_tri_info(cfg, file);
    if (*tv) return cmd_tv(cfg, tv_args);
    if (*eval) return cmd_eval(cfg, file, file2, omega, charge);
    if (*wrt_cmd) return cmd_wrt(cfg, file, file2, want_tau, sqrt_dim);
    if (*fuzz) return cmd_fuzz(cfg, file, moves, category);
    if (*verlinde) return cmd_verlinde(cfg, file, genera);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
