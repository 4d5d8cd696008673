#pragma once

// Colored framed oriented link and tangle diagrams in Morse position, and
// their evaluation over braided data by transferring a superposition of
// fusion trees slice by slice.
//
// Strand word: strands left to right, each (component, up?). A strand of
// color X carries the object X when oriented up and X* when oriented down.
// Fusion tree over a word x_1..x_n: charges ch[0] = 1, ch[k] in ch[k-1] (x) x_k.
//
// Events (positions index the incoming word of the slice):
//   cup  p   new strands at p, p+1 (inserted before incoming strand p)
//   cap  p   closes strands p, p+1
//   pos  p   strand p passes over strand p+1 (braiding c_{x,y})
//   neg  p   strand p passes under strand p+1 (inverse of c_{y,x})
//   id   p   no-op on strand p

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quantum3/category.hpp"

namespace quantum3 {

enum class EventType { Cup, Cap, Pos, Neg, Id };

inline const char* event_name(EventType t) {
  switch (t) {
    case EventType::Cup: return "cup";
    case EventType::Cap: return "cap";
    case EventType::Pos: return "pos";
    case EventType::Neg: return "neg";
    case EventType::Id: return "id";
  }
  return "?";
}

inline std::optional<EventType> parse_event(const std::string& s) {
  if (s == "cup") return EventType::Cup;
  if (s == "cap") return EventType::Cap;
  if (s == "pos") return EventType::Pos;
  if (s == "neg") return EventType::Neg;
  if (s == "id") return EventType::Id;
  return std::nullopt;
}

struct Event {
  EventType type = EventType::Id;
  int position = 0;
  int component = -1;  // cups only
  bool up = true;      // cups only: direction of the left new strand
};

using Slice = std::vector<Event>;

struct Strand {
  int component = -1;
  bool up = true;
  friend bool operator==(const Strand&, const Strand&) = default;
};

using StrandWord = std::vector<Strand>;

struct Component {
  std::optional<Label> color;
  int framing = 0;
};

class DiagramError : public StructureError {
 public:
  using StructureError::StructureError;
};

struct MorseDiagram {
  std::map<int, Component> components;
  std::vector<Slice> slices;
  StrandWord bottom;  // empty for links
  StrandWord top;

  bool closed() const { return bottom.empty() && top.empty(); }
};

/// Convenience builder; each call opens a new slice unless `same_slice`.
class DiagramBuilder {
 public:
  DiagramBuilder& component(int id, std::optional<Label> color, int framing = 0) {
    d_.components[id] = {color, framing};
    return *this;
  }
  DiagramBuilder& cup(int p, int comp, bool up = true) { return add({EventType::Cup, p, comp, up}); }
  DiagramBuilder& cap(int p) { return add({EventType::Cap, p}); }
  DiagramBuilder& pos(int p) { return add({EventType::Pos, p}); }
  DiagramBuilder& neg(int p) { return add({EventType::Neg, p}); }
  DiagramBuilder& same_slice() {
    join_ = true;
    return *this;
  }
  DiagramBuilder& boundary(StrandWord bottom, StrandWord top) {
    d_.bottom = std::move(bottom);
    d_.top = std::move(top);
    return *this;
  }
  MorseDiagram build() const { return d_; }

 private:
  DiagramBuilder& add(Event e) {
    if (join_ && !d_.slices.empty()) d_.slices.back().push_back(e);
    else d_.slices.push_back({e});
    join_ = false;
    return *this;
  }
  MorseDiagram d_;
  bool join_ = false;
};

/// Signed crossing between two strands: +1 for pos with both strands up.
inline int crossing_sign(EventType t, const Strand& left, const Strand& right) {
  const int base = t == EventType::Pos ? 1 : -1;
  return base * (left.up ? 1 : -1) * (right.up ? 1 : -1);
}

/// Result of walking a diagram: events in application order with the word
/// each one acts on, and the crossing counts.
struct DiagramWalk {
  struct Step {
    int slice;
    Event event;
  };
  std::vector<Step> steps;             // application order
  std::vector<StrandWord> words;       // word before each step, plus the final word
  std::map<int, int> writhe;           // self-crossing writhe per component
  std::map<std::pair<int, int>, int> linking2;  // twice the linking number, i < j
};

inline std::string slice_where(int s, const Event& e) {
  return "slice " + std::to_string(s) + " event " + event_name(e.type) + "@" + std::to_string(e.position);
}

/// Validates a diagram and produces its application sequence. Throws
/// DiagramError naming the slice and event.
inline DiagramWalk walk(const MorseDiagram& d) {
  DiagramWalk w;
  StrandWord word = d.bottom;
  for (const auto& s : d.bottom)
    if (!d.components.count(s.component))
      throw DiagramError("bottom boundary uses undeclared component " + std::to_string(s.component));
  // Arc bookkeeping: each strand carries an arc id; caps join arcs.
  std::vector<int> arc_parent;
  auto find = [&](int a) {
    while (arc_parent[a] != a) a = arc_parent[a] = arc_parent[arc_parent[a]];
    return a;
  };
  std::vector<int> arcs;
  std::vector<int> arc_component;
  for (const auto& s : word) {
    arcs.push_back(static_cast<int>(arc_parent.size()));
    arc_component.push_back(s.component);
    arc_parent.push_back(arcs.back());
  }

  for (int si = 0; si < static_cast<int>(d.slices.size()); ++si) {
    Slice events = d.slices[si];
    const int n = static_cast<int>(word.size());
    // Strands consumed by each event, for overlap detection.
    std::set<int> touched;
    for (const auto& e : events) {
      const std::string where = slice_where(si, e);
      if (e.type == EventType::Cup) {
        if (e.position < 0 || e.position > n) throw DiagramError(where + ": cup position out of range");
        if (!d.components.count(e.component))
          throw DiagramError(where + ": cup uses undeclared component " + std::to_string(e.component));
        continue;
      }
      const int width = e.type == EventType::Id ? 1 : 2;
      if (e.position < 0 || e.position + width > n) throw DiagramError(where + ": position out of range");
      for (int k = 0; k < width; ++k)
        if (!touched.insert(e.position + k).second) throw DiagramError(where + ": overlaps another event");
    }
    std::set<int> cup_at;
    for (const auto& e : events)
      if (e.type == EventType::Cup) {
        if (!cup_at.insert(e.position).second)
          throw DiagramError(slice_where(si, e) + ": two cups at the same position");
        for (const auto& o : events)
          if (o.type != EventType::Cup && o.type != EventType::Id && o.position == e.position - 1)
            throw DiagramError(slice_where(si, e) + ": cup inside a crossing or cap");
      }
    // Descending position; at equal position the strand-consuming event first.
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.position != b.position) return a.position > b.position;
      return a.type != EventType::Cup && b.type == EventType::Cup;
    });
    for (const auto& e : events) {
      const std::string where = slice_where(si, e);
      w.words.push_back(word);
      w.steps.push_back({si, e});
      const int p = e.position;
      switch (e.type) {
        case EventType::Cup: {
          const int a = static_cast<int>(arc_parent.size());
          arc_parent.push_back(a);
          arc_component.push_back(e.component);
          word.insert(word.begin() + p, {{e.component, e.up}, {e.component, !e.up}});
          arcs.insert(arcs.begin() + p, {a, a});
          break;
        }
        case EventType::Cap: {
          const Strand l = word[p], r = word[p + 1];
          if (l.component != r.component)
            throw DiagramError(where + ": cap joins components " + std::to_string(l.component) + " and " +
                               std::to_string(r.component));
          if (l.up == r.up) throw DiagramError(where + ": cap joins strands with the same direction");
          const int a = find(arcs[p]), b = find(arcs[p + 1]);
          if (a != b) arc_parent[std::max(a, b)] = std::min(a, b);
          word.erase(word.begin() + p, word.begin() + p + 2);
          arcs.erase(arcs.begin() + p, arcs.begin() + p + 2);
          break;
        }
        case EventType::Pos:
        case EventType::Neg: {
          const Strand l = word[p], r = word[p + 1];
          const int sign = crossing_sign(e.type, l, r);
          if (l.component == r.component) w.writhe[l.component] += sign;
          else w.linking2[{std::min(l.component, r.component), std::max(l.component, r.component)}] += sign;
          std::swap(word[p], word[p + 1]);
          std::swap(arcs[p], arcs[p + 1]);
          break;
        }
        case EventType::Id:
          break;
      }
    }
  }
  w.words.push_back(word);
  if (!(word == d.top)) throw DiagramError("final strand word does not match the top boundary");

  // In a link every declared component is exactly one loop.
  if (d.closed()) {
    std::map<int, std::set<int>> loops;
    for (std::size_t a = 0; a < arc_parent.size(); ++a) loops[arc_component[a]].insert(find(static_cast<int>(a)));
    for (const auto& [id, comp] : d.components) {
      auto it = loops.find(id);
      if (it == loops.end()) throw DiagramError("component " + std::to_string(id) + " does not appear in the diagram");
      if (it->second.size() != 1)
        throw DiagramError("component " + std::to_string(id) + " consists of " + std::to_string(it->second.size()) +
                           " closed loops, expected one");
    }
  }
  return w;
}

/// Superposition of fusion trees over a strand word.
using FusionState = std::map<std::vector<Label>, Scalar>;

/// Braided data with precomputed F-moves; evaluation context.
class DiagramEvaluator {
 public:
  explicit DiagramEvaluator(const ModularData& cat) : cat_(cat), fm_(cat.base()) {
    require_complete(cat);
    for (Label a = 0; a < cat.rank(); ++a) {
      const auto [z1, z2] = zigzag(a);
      if (!approx_equal(z1, 1.0) || !approx_equal(z2, 1.0))
        throw StructureError("unsupported gauge: zigzag factor for label " + std::to_string(a) +
                             " is not 1 (cup/cap normalization needs Frobenius-Schur indicator +1)");
    }
  }

  /// Both cup-cap cancellations on a single strand a; 1 in a supported gauge.
  std::pair<Scalar, Scalar> zigzag(Label a) const {
    const Label ab = cat_.ring().dual(a);
    const Scalar d = cat_.qdim(a);
    return {fm_.finv(a, ab, a, a, 0, 0) * fm_.f(0, a, ab, 0, a, 0) * d,
            fm_.finv(0, a, ab, 0, 0, a) * fm_.f(a, ab, a, a, 0, 0) * d};
  }

  const ModularData& category() const { return cat_; }

  Label object(const Strand& s, const std::map<int, Label>& colors) const {
    const Label c = colors.at(s.component);
    return s.up ? c : cat_.ring().dual(c);
  }

  /// Basis of fusion trees over `objects` with total charge `charge`.
  std::vector<std::vector<Label>> basis(const std::vector<Label>& objects, Label charge) const {
    std::vector<std::vector<Label>> out{{0}};
    for (Label x : objects) {
      std::vector<std::vector<Label>> next;
      for (const auto& ch : out)
        for (Label e : cat_.ring().fuse(ch.back(), x)) {
          auto c = ch;
          c.push_back(e);
          next.push_back(std::move(c));
        }
      out = std::move(next);
    }
    std::erase_if(out, [charge](const std::vector<Label>& ch) { return ch.back() != charge; });
    return out;
  }

  /// Applies one event to a state over the incoming word.
  FusionState apply(const FusionState& in, const Event& e, const StrandWord& word,
                    const std::map<int, Label>& colors) const {
    const auto& ring = cat_.ring();
    FusionState out;
    const int p = e.position;
    auto add = [&](std::vector<Label> ch, Scalar v) {
      if (v == 0.0) return;
      out[std::move(ch)] += v;
    };
    switch (e.type) {
      case EventType::Id:
        return in;
      case EventType::Cup: {
        const Label color = colors.at(e.component);
        const Label a = e.up ? color : ring.dual(color);
        const Label ab = ring.dual(a);
        for (const auto& [ch, amp] : in) {
          const Label c = ch[p];
          for (Label x : ring.fuse(c, a)) {
            const Scalar coef = fm_.finv(c, a, ab, c, 0, x);
            if (coef == 0.0) continue;
            std::vector<Label> n(ch.begin(), ch.begin() + p + 1);
            n.push_back(x);
            n.insert(n.end(), ch.begin() + p, ch.end());
            add(std::move(n), amp * coef);
          }
        }
        return out;
      }
      case EventType::Cap: {
        const Label x = object(word[p], colors);
        const Label y = object(word[p + 1], colors);
        for (const auto& [ch, amp] : in) {
          const Label c = ch[p], m = ch[p + 1], c2 = ch[p + 2];
          if (c2 != c) continue;
          const Scalar coef = fm_.f(c, x, y, c, m, 0) * cat_.qdim(x);
          std::vector<Label> n(ch.begin(), ch.begin() + p + 1);
          n.insert(n.end(), ch.begin() + p + 3, ch.end());
          add(std::move(n), amp * coef);
        }
        return out;
      }
      case EventType::Pos:
      case EventType::Neg: {
        const Label x = object(word[p], colors);
        const Label y = object(word[p + 1], colors);
        for (const auto& [ch, amp] : in) {
          const Label c = ch[p], f = ch[p + 1], g = ch[p + 2];
          const FBlock& blk = fm_.block(c, x, y, g);
          const FBlock& back = fm_.block(c, y, x, g);
          const int fi = blk.left_pos(f);
          if (fi < 0) continue;
          for (int hi = 0; hi < static_cast<int>(blk.right.size()); ++hi) {
            const Label h = blk.right[hi];
            const Scalar r = e.type == EventType::Pos ? cat_.rsym(x, y, h) : 1.0 / cat_.rsym(y, x, h);
            const Scalar t = amp * blk.matrix(fi, hi) * r;
            if (t == 0.0) continue;
            const int hb = back.right_pos(h);
            for (int fj = 0; fj < static_cast<int>(back.left.size()); ++fj) {
              std::vector<Label> n = ch;
              n[p + 1] = back.left[fj];
              add(std::move(n), t * back.inverse(hb, fj));
            }
          }
        }
        return out;
      }
    }
    return out;
  }

  /// Runs the walk from an initial state and applies the framing correction.
  FusionState run(const MorseDiagram& d, const DiagramWalk& w, FusionState state,
                  const std::map<int, Label>& colors) const {
    for (std::size_t i = 0; i < w.steps.size(); ++i) state = apply(state, w.steps[i].event, w.words[i], colors);
    Scalar framing = 1.0;
    for (const auto& [id, comp] : d.components) {
      const int wr = w.writhe.count(id) ? w.writhe.at(id) : 0;
      framing *= std::pow(cat_.twist(colors.at(id)), comp.framing - wr);
    }
    for (auto& [ch, amp] : state) amp *= framing;
    return state;
  }

  /// Closed diagram with the given colors.
  Scalar evaluate(const MorseDiagram& d, const DiagramWalk& w, const std::map<int, Label>& colors) const {
    const FusionState out = run(d, w, FusionState{{{0}, 1.0}}, colors);
    auto it = out.find({0});
    return it == out.end() ? Scalar{} : it->second;
  }

 private:
  const ModularData& cat_;
  FMoves fm_;
};

inline std::map<int, Label> fixed_colors(const MorseDiagram& d, const ModularData& cat) {
  std::map<int, Label> colors;
  for (const auto& [id, comp] : d.components) {
    if (!comp.color) throw DiagramError("component " + std::to_string(id) + " has no color");
    if (*comp.color < 0 || *comp.color >= cat.rank())
      throw DiagramError("component " + std::to_string(id) + " has unknown color " + std::to_string(*comp.color));
    colors[id] = *comp.color;
  }
  return colors;
}

/// <L> for a closed diagram with every component colored.
inline Scalar evaluate(const ModularData& cat, const MorseDiagram& d) {
  if (!d.closed()) throw DiagramError("evaluate needs a closed diagram; use evaluate_tangle");
  const DiagramWalk w = walk(d);
  const auto colors = fixed_colors(d, cat);
  return DiagramEvaluator(cat).evaluate(d, w, colors);
}

/// Sum over labels of the `omega` components weighted by their quantum
/// dimensions (the Kirby color).
inline Scalar evaluate_kirby(const ModularData& cat, const MorseDiagram& d, const std::vector<int>& omega) {
  if (!d.closed()) throw DiagramError("evaluate_kirby needs a closed diagram");
  const std::set<int> om(omega.begin(), omega.end());
  MorseDiagram colored = d;
  for (int id : om) {
    auto it = colored.components.find(id);
    if (it == colored.components.end()) throw DiagramError("omega component " + std::to_string(id) + " is not declared");
    if (it->second.color)
      throw DiagramError("component " + std::to_string(id) + " is both colored and listed as omega");
    it->second.color = 0;
  }
  const DiagramWalk w = walk(colored);
  auto colors = fixed_colors(colored, cat);
  const DiagramEvaluator ev(cat);
  const std::vector<int> ids(om.begin(), om.end());
  const int r = cat.rank();
  Scalar total = 0.0;
  std::vector<Label> assign(ids.size(), 0);
  while (true) {
    Scalar weight = 1.0;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      colors[ids[k]] = assign[k];
      weight *= cat.qdim(assign[k]);
    }
    total += weight * ev.evaluate(colored, w, colors);
    std::size_t k = 0;
    while (k < ids.size() && ++assign[k] == r) assign[k++] = 0;
    if (k == ids.size()) break;
  }
  return total;
}

struct TangleMatrix {
  Label charge = 0;
  std::vector<std::vector<Label>> bottom_basis, top_basis;
  Eigen::MatrixXcd matrix;  // rows top basis, cols bottom basis
};

/// Matrix of a tangle between the fusion-tree bases of its boundary words
/// with the given total charge.
inline TangleMatrix evaluate_tangle(const ModularData& cat, const MorseDiagram& d, Label charge) {
  const DiagramWalk w = walk(d);
  const auto colors = fixed_colors(d, cat);
  const DiagramEvaluator ev(cat);
  auto objects = [&](const StrandWord& word) {
    std::vector<Label> o;
    for (const auto& s : word) o.push_back(ev.object(s, colors));
    return o;
  };
  TangleMatrix t;
  t.charge = charge;
  t.bottom_basis = ev.basis(objects(d.bottom), charge);
  t.top_basis = ev.basis(objects(d.top), charge);
  t.matrix = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(t.top_basis.size()),
                                    static_cast<Eigen::Index>(t.bottom_basis.size()));
  for (std::size_t j = 0; j < t.bottom_basis.size(); ++j) {
    const FusionState out = ev.run(d, w, FusionState{{t.bottom_basis[j], 1.0}}, colors);
    for (std::size_t i = 0; i < t.top_basis.size(); ++i) {
      auto it = out.find(t.top_basis[i]);
      if (it != out.end()) t.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = it->second;
    }
  }
  return t;
}

/// Mirror image: crossings exchanged, framings negated.
inline MorseDiagram mirror(const MorseDiagram& d) {
  MorseDiagram m = d;
  for (auto& s : m.slices)
    for (auto& e : s) {
      if (e.type == EventType::Pos) e.type = EventType::Neg;
      else if (e.type == EventType::Neg) e.type = EventType::Pos;
    }
  for (auto& [id, c] : m.components) c.framing = -c.framing;
  return m;
}

}  // namespace quantum3
