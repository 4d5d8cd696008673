#pragma once

// Multiplicity-free fusion, spherical, and braided category data in the
// scalar gauge, plus the algebraic validators.
//
// Conventions (the "convention ledger"):
//
//  * A tetrahedron with ordered vertices 0<1<2<3 and edge labels
//    s(01)=i, s(02)=j, s(12)=k, s(23)=l, s(13)=m, s(03)=n is assigned the
//    stored symbol G(i,j,k,l,m,n). It is nonzero only if the four face
//    conditions j in i(x)k, m in k(x)l, n in j(x)l, n in i(x)m hold.
//  * G already absorbs the face copairings of the state sum. In terms of
//    the associator F^{abc}_d : ((ab)_e c)_d -> (a(bc)_f)_d with
//    isotopy-normalized trivalent vertices,
//        G(a,e,b,c,f,d) = conj(F^{abc}_d[e,f]) / sqrt(d_e d_f).
//    G is the positive symbol; the negative symbol is conj(G).
//  * Biedenharn-Elliott (pentagon), over five ordered vertices with
//    a=01 b=12 c=23 d=34 f=02 g=03 e=04 h=13 k=14 l=24:
//        G(f,g,c,d,l,e) G(a,f,b,l,k,e)
//          = sum_h d_h G(a,f,b,c,h,g) G(a,g,h,d,k,e) G(b,h,c,d,l,k).
//  * Orthonormality:
//        sum_f d_f G(a,e,b,c,f,d) conj(G(a,e',b,c,f,d)) = delta_{ee'} / d_e.
//  * Braiding acts on splitting vertices as
//        c_{x,y} psi^{xy}_f = R^{xy}_f psi^{yx}_f.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quantum3/scalar.hpp"

namespace quantum3 {

/// One violated axiom instance.
struct Violation {
  std::string axiom;
  std::vector<int> indices;

  std::string describe() const {
    std::ostringstream os;
    os << axiom << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
    return os.str();
  }
};

using ValidationReport = std::vector<Violation>;

class FusionRing {
 public:
  FusionRing() = default;

  /// `triples` lists admissible (i,j,k) meaning k appears in i (x) j. A triple
  /// listed twice counts as multiplicity 2, which the validator rejects.
  FusionRing(int rank, std::vector<Label> dual,
             const std::vector<std::array<Label, 3>>& triples)
      : rank_(rank), dual_(std::move(dual)), n_(static_cast<std::size_t>(rank) * rank * rank, 0) {
    if (rank < 1) throw StructureError("fusion ring rank must be >= 1");
    if (static_cast<int>(dual_.size()) != rank)
      throw StructureError("dual array has " + std::to_string(dual_.size()) +
                           " entries, expected rank " + std::to_string(rank));
    for (Label d : dual_)
      if (d < 0 || d >= rank) throw StructureError("dual entry out of range: " + std::to_string(d));
    for (const auto& t : triples) {
      for (Label x : t)
        if (x < 0 || x >= rank)
          throw StructureError("fusion triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                               "," + std::to_string(t[2]) + ") has label out of range");
      ++n_[index(t[0], t[1], t[2])];
    }
  }

  /// Builds a ring from a rule (i,j,k) -> N^k_{ij}.
  static FusionRing from_rule(int rank, std::vector<Label> dual,
                              const std::function<int(Label, Label, Label)>& rule) {
    std::vector<std::array<Label, 3>> triples;
    for (Label i = 0; i < rank; ++i)
      for (Label j = 0; j < rank; ++j)
        for (Label k = 0; k < rank; ++k)
          for (int m = rule(i, j, k); m > 0; --m) triples.push_back({i, j, k});
    return FusionRing(rank, std::move(dual), triples);
  }

  int rank() const { return rank_; }
  Label dual(Label i) const { return dual_[i]; }
  const std::vector<Label>& duals() const { return dual_; }

  /// N^k_{ij}
  int N(Label i, Label j, Label k) const { return n_[index(i, j, k)]; }
  bool admissible(Label i, Label j, Label k) const { return N(i, j, k) != 0; }

  /// Labels k with N^k_{ij} != 0, increasing.
  std::vector<Label> fuse(Label i, Label j) const {
    std::vector<Label> out;
    for (Label k = 0; k < rank_; ++k)
      if (admissible(i, j, k)) out.push_back(k);
    return out;
  }

  std::vector<std::array<Label, 3>> triples() const {
    std::vector<std::array<Label, 3>> out;
    for (Label i = 0; i < rank_; ++i)
      for (Label j = 0; j < rank_; ++j)
        for (Label k = 0; k < rank_; ++k)
          for (int m = 0; m < N(i, j, k); ++m) out.push_back({i, j, k});
    return out;
  }

 private:
  std::size_t index(Label i, Label j, Label k) const {
    return (static_cast<std::size_t>(i) * rank_ + j) * rank_ + k;
  }

  int rank_ = 0;
  std::vector<Label> dual_;
  std::vector<std::uint8_t> n_;
};

/// Checks unit, duality, associativity, and multiplicity-freeness.
inline ValidationReport validate_fusion_ring(const FusionRing& ring) {
  ValidationReport report;
  const int r = ring.rank();
  if (r < 1) {
    report.push_back({"rank", {r}});
    return report;
  }
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j)
      for (Label k = 0; k < r; ++k)
        if (ring.N(i, j, k) > 1) report.push_back({"multiplicity-free", {i, j, k}});
  for (Label j = 0; j < r; ++j)
    for (Label k = 0; k < r; ++k) {
      const int expect = j == k ? 1 : 0;
      if (ring.N(0, j, k) != expect) report.push_back({"unit (left)", {j, k}});
      if (ring.N(j, 0, k) != expect) report.push_back({"unit (right)", {j, k}});
    }
  if (ring.dual(0) != 0) report.push_back({"dual of unit", {ring.dual(0)}});
  for (Label i = 0; i < r; ++i) {
    if (ring.dual(ring.dual(i)) != i) report.push_back({"dual involution", {i}});
    for (Label j = 0; j < r; ++j) {
      const int expect = j == ring.dual(i) ? 1 : 0;
      if (ring.N(i, j, 0) != expect) report.push_back({"duality", {i, j}});
    }
  }
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j)
      for (Label k = 0; k < r; ++k)
        for (Label l = 0; l < r; ++l) {
          int lhs = 0, rhs = 0;
          for (Label m = 0; m < r; ++m) {
            lhs += ring.N(i, j, m) * ring.N(m, k, l);
            rhs += ring.N(j, k, m) * ring.N(i, m, l);
          }
          if (lhs != rhs) report.push_back({"associativity", {i, j, k, l}});
        }
  return report;
}

struct SixjEntry {
  std::array<Label, 6> labels;
  Scalar value;
};

/// Fusion ring with quantum dimensions and the tetrahedral symbol table.
class SphericalData {
 public:
  SphericalData() = default;

  SphericalData(FusionRing ring, std::vector<Scalar> qdim, const std::vector<SixjEntry>& sixj)
      : ring_(std::move(ring)), qdim_(std::move(qdim)) {
    const int r = ring_.rank();
    if (static_cast<int>(qdim_.size()) != r)
      throw StructureError("qdim has " + std::to_string(qdim_.size()) + " entries, expected rank " +
                           std::to_string(r));
    std::size_t size = 1;
    for (int t = 0; t < 6; ++t) size *= static_cast<std::size_t>(r);
    sixj_.assign(size, Scalar{});
    present_.assign(size, 0);
    for (const auto& e : sixj) {
      for (Label x : e.labels)
        if (x < 0 || x >= r) throw StructureError("sixj entry " + tuple_string(e.labels) + " has label out of range");
      const auto idx = index(e.labels);
      if (present_[idx]) throw StructureError("duplicate sixj entry " + tuple_string(e.labels));
      sixj_[idx] = e.value;
      present_[idx] = 1;
    }
  }

  const FusionRing& ring() const { return ring_; }
  int rank() const { return ring_.rank(); }
  Scalar qdim(Label i) const { return qdim_[i]; }
  const std::vector<Scalar>& qdims() const { return qdim_; }

  /// True when all four face conditions of the labeled tetrahedron hold.
  bool tetra_admissible(Label i, Label j, Label k, Label l, Label m, Label n) const {
    return ring_.admissible(k, l, m) && ring_.admissible(j, l, n) && ring_.admissible(i, m, n) &&
           ring_.admissible(i, k, j);
  }

  bool has_entry(const std::array<Label, 6>& t) const { return present_[index(t)] != 0; }

  /// Tetrahedral symbol G(i,j,k,l,m,n); zero off the admissible support.
  /// Throws StructureError when an admissible entry is missing.
  Scalar sixj(Label i, Label j, Label k, Label l, Label m, Label n) const {
    if (!tetra_admissible(i, j, k, l, m, n)) return Scalar{};
    const std::array<Label, 6> t{i, j, k, l, m, n};
    const auto idx = index(t);
    if (!present_[idx]) throw StructureError("missing admissible sixj entry " + tuple_string(t));
    return sixj_[idx];
  }

  /// Raw stored value regardless of admissibility (zero when absent).
  Scalar stored(const std::array<Label, 6>& t) const { return sixj_[index(t)]; }

  /// F^{abc}_d[e,f] recovered from the tetrahedral symbol.
  Scalar fsym(Label a, Label b, Label c, Label d, Label e, Label f) const {
    const Scalar g = sixj(a, e, b, c, f, d);
    if (g == Scalar{}) return g;
    return std::conj(g) * std::sqrt(qdim_[e] * qdim_[f]);
  }

  std::vector<SixjEntry> entries() const {
    std::vector<SixjEntry> out;
    const int r = rank();
    std::array<Label, 6> t{};
    for (std::size_t idx = 0; idx < sixj_.size(); ++idx) {
      if (!present_[idx]) continue;
      std::size_t rest = idx;
      for (int p = 5; p >= 0; --p) {
        t[p] = static_cast<Label>(rest % r);
        rest /= r;
      }
      out.push_back({t, sixj_[idx]});
    }
    return out;
  }

  static std::string tuple_string(const std::array<Label, 6>& t) {
    std::ostringstream os;
    os << "(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "," << t[4] << "," << t[5] << ")";
    return os.str();
  }

 private:
  std::size_t index(const std::array<Label, 6>& t) const {
    std::size_t idx = 0;
    for (Label x : t) idx = idx * ring_.rank() + x;
    return idx;
  }

  FusionRing ring_;
  std::vector<Scalar> qdim_;
  std::vector<Scalar> sixj_;
  std::vector<std::uint8_t> present_;
};

/// Throws StructureError naming the first admissible 6-tuple without an entry.
inline void require_complete(const SphericalData& data) {
  const int r = data.rank();
  std::array<Label, 6> t{};
  for (t[0] = 0; t[0] < r; ++t[0])
    for (t[1] = 0; t[1] < r; ++t[1])
      for (t[2] = 0; t[2] < r; ++t[2])
        for (t[3] = 0; t[3] < r; ++t[3])
          for (t[4] = 0; t[4] < r; ++t[4])
            for (t[5] = 0; t[5] < r; ++t[5])
              if (data.tetra_admissible(t[0], t[1], t[2], t[3], t[4], t[5]) && !data.has_entry(t))
                throw StructureError("missing admissible sixj entry " + SphericalData::tuple_string(t));
}

/// dim(C) = sum_i d_i^2
inline Scalar global_dim(const SphericalData& data) {
  Scalar sum{};
  for (Label i = 0; i < data.rank(); ++i) sum += data.qdim(i) * data.qdim(i);
  return sum;
}

/// Violations of the quantum-dimension axioms: d_1 = 1, d_{i*} = d_i, d_i != 0,
/// dim(C) != 0.
inline ValidationReport validate_dimensions(const SphericalData& data, double eps = kDefaultTolerance) {
  ValidationReport report;
  if (!approx_equal(data.qdim(0), 1.0, eps)) report.push_back({"qdim(unit) = 1", {0}});
  for (Label i = 0; i < data.rank(); ++i) {
    if (approx_zero(data.qdim(i), eps)) report.push_back({"qdim nonzero", {i}});
    if (!approx_equal(data.qdim(i), data.qdim(data.ring().dual(i)), eps))
      report.push_back({"qdim(dual) = qdim", {i}});
  }
  if (approx_zero(global_dim(data), eps)) report.push_back({"global dimension nonzero", {}});
  return report;
}

/// Max residual of the Biedenharn-Elliott identity in the form documented at
/// the top of this header.
inline double check_pentagon(const SphericalData& data) {
  require_complete(data);
  const FusionRing& ring = data.ring();
  const int r = data.rank();
  double worst = 0.0;
  for (Label a = 0; a < r; ++a)
    for (Label b = 0; b < r; ++b)
      for (Label f : ring.fuse(a, b))
        for (Label c = 0; c < r; ++c)
          for (Label g : ring.fuse(f, c))
            for (Label d = 0; d < r; ++d)
              for (Label e : ring.fuse(g, d))
                for (Label l : ring.fuse(c, d))
                  for (Label k : ring.fuse(b, l)) {
                    if (!ring.admissible(a, k, e)) continue;
                    const Scalar lhs = data.sixj(f, g, c, d, l, e) * data.sixj(a, f, b, l, k, e);
                    Scalar rhs{};
                    for (Label h = 0; h < r; ++h)
                      rhs += data.qdim(h) * data.sixj(a, f, b, c, h, g) * data.sixj(a, g, h, d, k, e) *
                             data.sixj(b, h, c, d, l, k);
                    worst = std::max(worst, std::abs(lhs - rhs));
                  }
  return worst;
}

/// Max residual of the orthonormality relation (positive symbol paired with
/// the negative one).
inline double check_orthonormality(const SphericalData& data) {
  require_complete(data);
  const FusionRing& ring = data.ring();
  const int r = data.rank();
  double worst = 0.0;
  for (Label a = 0; a < r; ++a)
    for (Label b = 0; b < r; ++b)
      for (Label c = 0; c < r; ++c)
        for (Label d = 0; d < r; ++d)
          for (Label e : ring.fuse(a, b)) {
            if (!ring.admissible(e, c, d)) continue;
            for (Label e2 : ring.fuse(a, b)) {
              if (!ring.admissible(e2, c, d)) continue;
              Scalar sum{};
              for (Label f = 0; f < r; ++f)
                sum += data.qdim(f) * data.sixj(a, e, b, c, f, d) * std::conj(data.sixj(a, e2, b, c, f, d));
              const Scalar expect = e == e2 ? 1.0 / data.qdim(e) : Scalar{};
              worst = std::max(worst, std::abs(sum - expect));
            }
          }
  return worst;
}

/// Max deviation from F = 1 on blocks with a unit label among a, b, c. The
/// fusion-tree evaluator relies on this normalization.
inline double check_unit_normalization(const SphericalData& data) {
  require_complete(data);
  const FusionRing& ring = data.ring();
  const int r = data.rank();
  double worst = 0.0;
  for (Label x = 0; x < r; ++x)
    for (Label y = 0; y < r; ++y)
      for (Label d = 0; d < r; ++d) {
        if (!ring.admissible(x, y, d)) continue;
        worst = std::max(worst, std::abs(data.fsym(0, x, y, d, x, d) - 1.0));
        worst = std::max(worst, std::abs(data.fsym(x, 0, y, d, x, y) - 1.0));
        worst = std::max(worst, std::abs(data.fsym(x, y, 0, d, d, y) - 1.0));
      }
  return worst;
}

/// One F-move block F^{abc}_d with its inverse, indexed by admissible
/// intermediate labels.
struct FBlock {
  std::vector<Label> left;   // e : (ab)_e, (ec)_d
  std::vector<Label> right;  // f : (bc)_f, (af)_d
  Eigen::MatrixXcd matrix;   // rows left, cols right
  Eigen::MatrixXcd inverse;  // rows right, cols left

  int left_pos(Label e) const { return position(left, e); }
  int right_pos(Label f) const { return position(right, f); }

 private:
  static int position(const std::vector<Label>& v, Label x) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == x) return static_cast<int>(i);
    return -1;
  }
};

/// All F-move blocks of a spherical data set, built once.
class FMoves {
 public:
  explicit FMoves(const SphericalData& data) : rank_(data.rank()) {
    const FusionRing& ring = data.ring();
    const int r = rank_;
    blocks_.resize(static_cast<std::size_t>(r) * r * r * r);
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b)
        for (Label c = 0; c < r; ++c)
          for (Label d = 0; d < r; ++d) {
            FBlock& blk = blocks_[index(a, b, c, d)];
            for (Label e : ring.fuse(a, b))
              if (ring.admissible(e, c, d)) blk.left.push_back(e);
            for (Label f : ring.fuse(b, c))
              if (ring.admissible(a, f, d)) blk.right.push_back(f);
            if (blk.left.size() != blk.right.size())
              throw StructureError("F-block (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(d) + ") is not square");
            const auto n = static_cast<Eigen::Index>(blk.left.size());
            blk.matrix.resize(n, n);
            for (Eigen::Index i = 0; i < n; ++i)
              for (Eigen::Index j = 0; j < n; ++j)
                blk.matrix(i, j) = data.fsym(a, b, c, d, blk.left[i], blk.right[j]);
            if (n > 0) {
              Eigen::FullPivLU<Eigen::MatrixXcd> lu(blk.matrix);
              if (!lu.isInvertible())
                throw StructureError("F-block (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + "," + std::to_string(d) + ") is singular");
              blk.inverse = lu.inverse();
            }
          }
  }

  const FBlock& block(Label a, Label b, Label c, Label d) const { return blocks_[index(a, b, c, d)]; }

  /// F^{abc}_d[e,f], zero when e or f is not admissible.
  Scalar f(Label a, Label b, Label c, Label d, Label e, Label f) const {
    const FBlock& blk = block(a, b, c, d);
    const int i = blk.left_pos(e), j = blk.right_pos(f);
    return i < 0 || j < 0 ? Scalar{} : blk.matrix(i, j);
  }

  /// (F^{abc}_d)^{-1}[f,e]
  Scalar finv(Label a, Label b, Label c, Label d, Label f, Label e) const {
    const FBlock& blk = block(a, b, c, d);
    const int i = blk.right_pos(f), j = blk.left_pos(e);
    return i < 0 || j < 0 ? Scalar{} : blk.inverse(i, j);
  }

 private:
  std::size_t index(Label a, Label b, Label c, Label d) const {
    return ((static_cast<std::size_t>(a) * rank_ + b) * rank_ + c) * rank_ + d;
  }

  int rank_;
  std::vector<FBlock> blocks_;
};

struct RsymEntry {
  std::array<Label, 3> labels;
  Scalar value;
};

/// Spherical data plus braiding (R-symbols) and twists.
class ModularData {
 public:
  ModularData() = default;

  ModularData(SphericalData base, const std::vector<RsymEntry>& rsym, std::vector<Scalar> twist)
      : base_(std::move(base)), twist_(std::move(twist)) {
    const int r = base_.rank();
    if (static_cast<int>(twist_.size()) != r)
      throw StructureError("twist has " + std::to_string(twist_.size()) + " entries, expected rank " +
                           std::to_string(r));
    const auto size = static_cast<std::size_t>(r) * r * r;
    rsym_.assign(size, Scalar{});
    present_.assign(size, 0);
    for (const auto& e : rsym) {
      for (Label x : e.labels)
        if (x < 0 || x >= r) throw StructureError("rsym entry has label out of range");
      const auto idx = index(e.labels[0], e.labels[1], e.labels[2]);
      if (present_[idx]) throw StructureError("duplicate rsym entry");
      rsym_[idx] = e.value;
      present_[idx] = 1;
    }
  }

  const SphericalData& base() const { return base_; }
  const FusionRing& ring() const { return base_.ring(); }
  int rank() const { return base_.rank(); }
  Scalar qdim(Label i) const { return base_.qdim(i); }
  Scalar twist(Label i) const { return twist_[i]; }
  const std::vector<Scalar>& twists() const { return twist_; }

  bool has_rsym(Label a, Label b, Label c) const { return present_[index(a, b, c)] != 0; }

  /// R^{ab}_c; zero when c is not in a (x) b. Throws when an admissible entry
  /// is missing.
  Scalar rsym(Label a, Label b, Label c) const {
    if (!ring().admissible(a, b, c)) return Scalar{};
    if (!has_rsym(a, b, c))
      throw StructureError("missing admissible rsym entry (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
    return rsym_[index(a, b, c)];
  }

  std::vector<RsymEntry> rsym_entries() const {
    std::vector<RsymEntry> out;
    const int r = rank();
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b)
        for (Label c = 0; c < r; ++c)
          if (has_rsym(a, b, c)) out.push_back({{a, b, c}, rsym_[index(a, b, c)]});
    return out;
  }

 private:
  std::size_t index(Label a, Label b, Label c) const {
    return (static_cast<std::size_t>(a) * rank() + b) * rank() + c;
  }

  SphericalData base_;
  std::vector<Scalar> rsym_;
  std::vector<std::uint8_t> present_;
  std::vector<Scalar> twist_;
};

inline void require_complete(const ModularData& data) {
  require_complete(data.base());
  const int r = data.rank();
  for (Label a = 0; a < r; ++a)
    for (Label b = 0; b < r; ++b)
      for (Label c = 0; c < r; ++c) (void)data.rsym(a, b, c);
}

/// Max residual over both hexagon identities
///   R^{xf}_g F^{yzx}_g[f,h]
///     = sum_e F^{xyz}_g^{-1}[f,e] R^{xy}_e F^{yxz}_g[e,h] R^{xz}_h
///   R^{ez}_g F^{zxy}_g^{-1}[e,h]
///     = sum_f F^{xyz}_g[e,f] R^{yz}_f F^{xzy}_g^{-1}[f,h] R^{xz}_h
inline double check_hexagon(const ModularData& data) {
  require_complete(data);
  const FMoves moves(data.base());
  const int r = data.rank();
  double worst = 0.0;
  for (Label x = 0; x < r; ++x)
    for (Label y = 0; y < r; ++y)
      for (Label z = 0; z < r; ++z)
        for (Label g = 0; g < r; ++g) {
          const FBlock& xyz = moves.block(x, y, z, g);
          const FBlock& yzx = moves.block(y, z, x, g);
          for (Label f : xyz.right)
            for (Label h : yzx.right) {
              const Scalar lhs = data.rsym(x, f, g) * moves.f(y, z, x, g, f, h);
              Scalar rhs{};
              for (Label e : xyz.left)
                rhs += moves.finv(x, y, z, g, f, e) * data.rsym(x, y, e) * moves.f(y, x, z, g, e, h) *
                       data.rsym(x, z, h);
              worst = std::max(worst, std::abs(lhs - rhs));
            }
          const FBlock& zxy = moves.block(z, x, y, g);
          for (Label e : xyz.left)
            for (Label h : zxy.left) {
              const Scalar lhs = data.rsym(e, z, g) * moves.finv(z, x, y, g, e, h);
              Scalar rhs{};
              for (Label f : xyz.right)
                rhs += moves.f(x, y, z, g, e, f) * data.rsym(y, z, f) * moves.finv(x, z, y, g, f, h) *
                       data.rsym(x, z, h);
              worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
  return worst;
}

/// Max residual of the ribbon constraints: v_1 = 1, v_{i*} = v_i, and the
/// balancing relation d_a v_a = sum_c d_c R^{aa}_c that ties the twist to the
/// braiding used by curls.
inline double check_ribbon(const ModularData& data) {
  require_complete(data);
  const int r = data.rank();
  double worst = std::abs(data.twist(0) - 1.0);
  for (Label a = 0; a < r; ++a) {
    worst = std::max(worst, std::abs(data.twist(a) - data.twist(data.ring().dual(a))));
    Scalar sum{};
    for (Label c = 0; c < r; ++c) sum += data.qdim(c) * data.rsym(a, a, c);
    worst = std::max(worst, std::abs(data.qdim(a) * data.twist(a) - sum));
  }
  return worst;
}

}  // namespace quantum3
