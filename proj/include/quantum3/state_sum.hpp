#pragma once

// Turaev-Viro / Barrett-Westbury state sum:
//   |M| = dim^{-v} * sum_s prod_e d_{s(e)} * prod_T G_{eps_T}(s01,s02,s12,s23,s13,s03)
// by direct enumeration or by contracting the tensor network over edge classes.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "quantum3/category.hpp"
#include "quantum3/triangulation.hpp"

namespace quantum3 {

/// Local edges of a tetrahedron in the argument order of the 6j symbol.
inline constexpr std::array<int, 6> kSixjEdges{0, 1, 3, 5, 4, 2};

/// Tetrahedron weight for a full labeling of its local edges.
inline Scalar tet_weight(const SphericalData& cat, int sign, const std::array<Label, 6>& local) {
  const Scalar g = cat.sixj(local[0], local[1], local[3], local[5], local[4], local[2]);
  return sign > 0 ? g : std::conj(g);
}

struct EnumerateOptions {
  std::uint64_t cap_states = 10'000'000;
};

struct TvStats {
  std::uint64_t states = 0;  // admissible states (enumeration only)
  int width = 0;             // induced width (contraction only)
};

/// Sums over all admissible states by backtracking over edge classes.
inline Scalar tv_enumerate(const SphericalData& cat, const Triangulation& tri, const EnumerateOptions& opt = {},
                           TvStats* stats = nullptr) {
  require_complete(cat);
  const int r = cat.rank();
  const int ne = tri.num_edges();

  // Edges in order of first appearance so that triangles close early.
  std::vector<int> order, pos(ne, -1);
  for (int t = 0; t < tri.num_tetrahedra(); ++t)
    for (int k : kSixjEdges) {
      const int e = tri.edge_of(t, k);
      if (pos[e] < 0) {
        pos[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }

  struct Tri3 {
    int e01, e12, e02;
  };
  std::vector<std::vector<Tri3>> tri_at(ne);
  for (const auto& tc : tri.triangles()) {
    const auto [t, f] = tc.incidences[0];
    const auto fv = face_vertices(f);
    Tri3 x{tri.edge_of(t, local_edge(fv[0], fv[1])), tri.edge_of(t, local_edge(fv[1], fv[2])),
           tri.edge_of(t, local_edge(fv[0], fv[2]))};
    const int last = std::max({pos[x.e01], pos[x.e12], pos[x.e02]});
    tri_at[last].push_back(x);
  }
  std::vector<std::vector<int>> tet_at(ne);
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    int last = 0;
    for (int k = 0; k < 6; ++k) last = std::max(last, pos[tri.edge_of(t, k)]);
    tet_at[last].push_back(t);
  }

  std::vector<Label> s(ne, 0);
  std::vector<Scalar> partial(ne + 1, 1.0);
  std::uint64_t count = 0;
  Scalar total = 0.0;

  // Iterative depth-first search; level i assigns order[i].
  std::vector<Label> next(ne + 1, 0);
  int level = 0;
  if (ne == 0) throw StructureError("triangulation has no edges");
  next[0] = 0;
  while (level >= 0) {
    if (next[level] >= r) {
      --level;
      continue;
    }
    const int e = order[level];
    s[e] = next[level]++;
    bool ok = true;
    for (const auto& x : tri_at[level])
      if (!cat.ring().admissible(s[x.e01], s[x.e12], s[x.e02])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Scalar w = partial[level] * cat.qdim(s[e]);
    for (int t : tet_at[level]) {
      std::array<Label, 6> local{};
      for (int k = 0; k < 6; ++k) local[k] = s[tri.edge_of(t, k)];
      w *= tet_weight(cat, tri.orientation(t), local);
    }
    if (level + 1 == ne) {
      if (++count > opt.cap_states)
        throw CapExceeded("admissible state count exceeds cap " + std::to_string(opt.cap_states) +
                          "; use tv_contract");
      total += w;
      continue;
    }
    partial[level + 1] = w;
    next[++level] = 0;
  }
  if (stats) stats->states = count;
  return total * std::pow(global_dim(cat), -tri.num_vertices());
}

/// Dense tensor over variables with a common domain size.
struct Factor {
  std::vector<int> vars;  // sorted, most significant first
  std::vector<Scalar> data;
};

struct EdgeTensorNetwork {
  int rank = 0;
  int num_variables = 0;
  std::vector<Factor> factors;
  std::vector<Scalar> weights;  // unary weight per label, shared by all variables
  Scalar prefactor = 1.0;
};

inline std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base))
      return std::numeric_limits<std::uint64_t>::max();
    v *= base;
  }
  return v;
}

/// One factor per tetrahedron over its distinct edge classes (repeated
/// classes give a diagonal slice).
inline EdgeTensorNetwork build_network(const SphericalData& cat, const Triangulation& tri) {
  require_complete(cat);
  EdgeTensorNetwork net;
  net.rank = cat.rank();
  net.num_variables = tri.num_edges();
  net.weights = cat.qdims();
  net.prefactor = std::pow(global_dim(cat), -tri.num_vertices());
  const int r = net.rank;
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    std::array<int, 6> edge{};
    for (int k = 0; k < 6; ++k) edge[k] = tri.edge_of(t, k);
    std::set<int> distinct(edge.begin(), edge.end());
    Factor f;
    f.vars.assign(distinct.begin(), distinct.end());
    const int a = static_cast<int>(f.vars.size());
    f.data.assign(checked_pow(r, a), 0.0);
    std::vector<Label> val(a, 0);
    for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
      std::size_t rem = idx;
      for (int i = a - 1; i >= 0; --i) {
        val[i] = static_cast<Label>(rem % r);
        rem /= r;
      }
      std::array<Label, 6> local{};
      for (int k = 0; k < 6; ++k)
        local[k] = val[std::lower_bound(f.vars.begin(), f.vars.end(), edge[k]) - f.vars.begin()];
      f.data[idx] = tet_weight(cat, tri.orientation(t), local);
    }
    net.factors.push_back(std::move(f));
  }
  return net;
}

/// Network with variables and factor scopes only; enough for planning.
inline EdgeTensorNetwork network_shape(const Triangulation& tri) {
  EdgeTensorNetwork net;
  net.num_variables = tri.num_edges();
  for (int t = 0; t < tri.num_tetrahedra(); ++t) {
    std::set<int> distinct;
    for (int k = 0; k < 6; ++k) distinct.insert(tri.edge_of(t, k));
    net.factors.push_back({std::vector<int>(distinct.begin(), distinct.end()), {}});
  }
  return net;
}

enum class Strategy { MinFill, MinDegree, Given };

inline std::optional<Strategy> parse_strategy(const std::string& s) {
  if (s == "min-fill") return Strategy::MinFill;
  if (s == "min-degree") return Strategy::MinDegree;
  if (s == "given") return Strategy::Given;
  return std::nullopt;
}

struct EliminationPlan {
  std::vector<int> order;
  int width = 0;  // largest arity of an intermediate tensor
};

/// Greedy elimination order on the interaction graph of the network. Width
/// is the arity of the largest tensor produced by eliminating a variable.
inline EliminationPlan elimination_order(const EdgeTensorNetwork& net, Strategy strategy,
                                         const std::vector<int>& given = {}) {
  const int n = net.num_variables;
  std::vector<std::set<int>> adj(n);
  for (const auto& f : net.factors)
    for (int u : f.vars)
      for (int v : f.vars)
        if (u != v) adj[u].insert(v);

  EliminationPlan plan;
  std::vector<bool> done(n, false);
  if (strategy == Strategy::Given) {
    std::vector<int> sorted = given;
    std::sort(sorted.begin(), sorted.end());
    bool perm = static_cast<int>(given.size()) == n;
    for (int i = 0; perm && i < n; ++i) perm = sorted[i] == i;
    if (!perm) throw std::invalid_argument("elimination order must be a permutation of the variables");
    plan.order = given;
  }

  auto fill = [&](int v) {
    int missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  for (int step = 0; step < n; ++step) {
    int v = -1;
    if (strategy == Strategy::Given) {
      v = plan.order[step];
    } else {
      std::pair<int, int> best{std::numeric_limits<int>::max(), 0};
      for (int u = 0; u < n; ++u) {
        if (done[u]) continue;
        const int deg = static_cast<int>(adj[u].size());
        const std::pair<int, int> key = strategy == Strategy::MinFill ? std::pair{fill(u), deg} : std::pair{deg, 0};
        if (v < 0 || key < best) {
          best = key;
          v = u;
        }
      }
      plan.order.push_back(v);
    }
    plan.width = std::max(plan.width, static_cast<int>(adj[v].size()));
    for (int a : adj[v])
      for (int b : adj[v])
        if (a != b) adj[a].insert(b);
    for (int a : adj[v]) adj[a].erase(v);
    adj[v].clear();
    done[v] = true;
  }
  return plan;
}

/// Min-fill width of the edge interaction graph of a triangulation.
inline int min_fill_width(const Triangulation& tri) {
  return elimination_order(network_shape(tri), Strategy::MinFill).width;
}

struct ContractOptions {
  Strategy strategy = Strategy::MinFill;
  std::vector<int> given;                  // used with Strategy::Given
  int cap_width = 24;                      // max intermediate arity
  std::uint64_t cap_entries = 1ull << 27;  // max intermediate entries
  int workers = 1;
};

namespace detail {

/// Eliminates `var` from `inputs`: result[rest] = sum_x w(x) prod_f f[rest, x].
inline Factor eliminate(const std::vector<const Factor*>& inputs, int var, const std::vector<Scalar>& weights, int r,
                        int workers) {
  std::set<int> all;
  for (const Factor* f : inputs) all.insert(f->vars.begin(), f->vars.end());
  all.erase(var);
  Factor out;
  out.vars.assign(all.begin(), all.end());
  const int a = static_cast<int>(out.vars.size());
  const std::size_t size = checked_pow(r, a);
  out.data.assign(size, 0.0);

  // Strides of each input with respect to result positions and the eliminated variable.
  struct Access {
    const Factor* f;
    std::vector<std::size_t> stride;  // per result position
    std::size_t var_stride = 0;
  };
  std::vector<Access> acc;
  for (const Factor* f : inputs) {
    Access x{f, std::vector<std::size_t>(a, 0), 0};
    std::size_t s = 1;
    for (int i = static_cast<int>(f->vars.size()) - 1; i >= 0; --i) {
      const int v = f->vars[i];
      if (v == var) x.var_stride = s;
      else x.stride[std::lower_bound(out.vars.begin(), out.vars.end(), v) - out.vars.begin()] = s;
      s *= r;
    }
    acc.push_back(std::move(x));
  }

  auto run = [&](std::size_t begin, std::size_t end) {
    std::vector<Label> digit(a, 0);
    std::vector<std::size_t> base(acc.size(), 0);
    std::size_t rem = begin;
    for (int i = a - 1; i >= 0; --i) {
      digit[i] = static_cast<Label>(rem % r);
      rem /= r;
    }
    for (std::size_t k = 0; k < acc.size(); ++k)
      for (int i = 0; i < a; ++i) base[k] += digit[i] * acc[k].stride[i];
    for (std::size_t idx = begin; idx < end; ++idx) {
      Scalar sum = 0.0;
      for (Label x = 0; x < r; ++x) {
        Scalar p = weights[x];
        for (std::size_t k = 0; k < acc.size() && p != 0.0; ++k) p *= acc[k].f->data[base[k] + x * acc[k].var_stride];
        sum += p;
      }
      out.data[idx] = sum;
      // Advance the odometer.
      for (int i = a - 1; i >= 0; --i) {
        for (std::size_t k = 0; k < acc.size(); ++k) base[k] += acc[k].stride[i];
        if (++digit[i] < r) break;
        for (std::size_t k = 0; k < acc.size(); ++k) base[k] -= r * acc[k].stride[i];
        digit[i] = 0;
      }
    }
  };

  const std::size_t chunks = std::min<std::size_t>(std::max(1, workers), size);
  if (chunks <= 1 || size < 4096) {
    run(0, size);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < chunks; ++c) pool.emplace_back(run, size * c / chunks, size * (c + 1) / chunks);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace detail

/// Contracts the network by bucket elimination along `plan.order`.
inline Scalar contract(const EdgeTensorNetwork& net, const EliminationPlan& plan, const ContractOptions& opt = {}) {
  std::vector<Factor> live = net.factors;
  std::vector<bool> alive(live.size(), true);
  for (int var : plan.order) {
    std::vector<const Factor*> bucket;
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < live.size(); ++i)
      if (alive[i] && std::binary_search(live[i].vars.begin(), live[i].vars.end(), var)) {
        bucket.push_back(&live[i]);
        used.push_back(i);
      }
    std::set<int> rest;
    for (const Factor* f : bucket) rest.insert(f->vars.begin(), f->vars.end());
    rest.erase(var);
    const int arity = static_cast<int>(rest.size());
    const std::uint64_t entries = checked_pow(net.rank, arity);
    if (arity > opt.cap_width || entries > opt.cap_entries)
      throw CapExceeded("intermediate from eliminating edge " + std::to_string(var) + " has arity " +
                        std::to_string(arity) + " (" + std::to_string(entries) + " entries); caps are width " +
                        std::to_string(opt.cap_width) + ", entries " + std::to_string(opt.cap_entries));
    Factor out = detail::eliminate(bucket, var, net.weights, net.rank, opt.workers);
    for (std::size_t i : used) {
      alive[i] = false;
      live[i] = Factor{};
    }
    live.push_back(std::move(out));
    alive.push_back(true);
  }
  Scalar value = net.prefactor;
  for (std::size_t i = 0; i < live.size(); ++i)
    if (alive[i]) value *= live[i].data.at(0);
  return value;
}

/// State sum by tensor-network contraction.
inline Scalar tv_contract(const SphericalData& cat, const Triangulation& tri, const ContractOptions& opt = {},
                          TvStats* stats = nullptr) {
  const EdgeTensorNetwork net = build_network(cat, tri);
  const EliminationPlan plan = elimination_order(net, opt.strategy, opt.given);
  if (stats) stats->width = plan.width;
  return contract(net, plan, opt);
}

}  // namespace quantum3
