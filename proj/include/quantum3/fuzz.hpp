#pragma once

// Seeded random walks of Pachner moves with the state sum tracked along the way.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quantum3/state_sum.hpp"
#include "quantum3/triangulation.hpp"

namespace quantum3 {

enum class Move { P23, P32, P14, P41 };

inline const char* move_name(Move m) {
  switch (m) {
    case Move::P23: return "2-3";
    case Move::P32: return "3-2";
    case Move::P14: return "1-4";
    case Move::P41: return "4-1";
  }
  return "?";
}

struct FuzzStep {
  Move move;
  int target;  // triangle, edge, tetrahedron or vertex index
  int tetrahedra_after;
  Scalar value;
};

struct FuzzReport {
  Scalar initial;
  double max_deviation = 0.0;  // max |value - initial| over the walk
  std::vector<FuzzStep> steps;
  int refused = 0;
  Triangulation final_triangulation;
};

/// Applies one move of the given kind at `target`; throws MoveRefused.
inline Triangulation apply_move(const Triangulation& tri, Move m, int target) {
  switch (m) {
    case Move::P23: return pachner_23(tri, target);
    case Move::P32: return pachner_32(tri, target);
    case Move::P14: return pachner_14(tri, target);
    case Move::P41: return pachner_41(tri, target);
  }
  throw MoveRefused("unknown move");
}

/// Applies `moves` random applicable moves (refused candidates are skipped
/// and counted) and evaluates the state sum after each.
inline FuzzReport pachner_fuzz(const SphericalData& cat, Triangulation tri, int moves, std::uint64_t seed,
                               const ContractOptions& opt = {}) {
  std::mt19937_64 rng(seed);
  FuzzReport rep;
  rep.initial = tv_contract(cat, tri, opt);
  const Move kinds[] = {Move::P23, Move::P32, Move::P14, Move::P41};
  while (static_cast<int>(rep.steps.size()) < moves) {
    const Move m = kinds[std::uniform_int_distribution<int>(0, 3)(rng)];
    int range = 0;
    switch (m) {
      case Move::P23: range = tri.num_triangles(); break;
      case Move::P32: range = tri.num_edges(); break;
      case Move::P14: range = tri.num_tetrahedra(); break;
      case Move::P41: range = tri.num_vertices(); break;
    }
    const int target = std::uniform_int_distribution<int>(0, range - 1)(rng);
    try {
      tri = apply_move(tri, m, target);
    } catch (const MoveRefused&) {
      ++rep.refused;
      continue;
    }
    const Scalar v = tv_contract(cat, tri, opt);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(v - rep.initial));
    rep.steps.push_back({m, target, tri.num_tetrahedra(), v});
  }
  rep.final_triangulation = std::move(tri);
  return rep;
}

}  // namespace quantum3
