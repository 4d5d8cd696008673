#include <gtest/gtest.h>

#include "oracle/solvers.hpp"
#include "support.hpp"

using namespace q3test;

namespace {

std::vector<std::pair<std::string, ModularData>> braided_cases() {
  auto v = modular_builtins();
  v.emplace_back("z3", zn_anyons(3));
  return v;
}

// (n+1)-strand braid s_1 ... s_n closes to one unknot with n curls.
MorseDiagram curls(int n, Label color) {
  std::vector<int> word;
  for (int k = 1; k <= std::abs(n); ++k) word.push_back(n > 0 ? k : -k);
  MorseDiagram d = braid_closure(std::abs(n) + 1, word, color);
  d.components[0].framing = n;  // blackboard framing
  return d;
}

MorseDiagram open_braid(int n, const std::vector<int>& word, Label color) {
  DiagramBuilder b;
  StrandWord bottom, top;
  std::vector<int> at(n);
  for (int k = 0; k < n; ++k) {
    b.component(k, color);
    bottom.push_back({k, true});
    at[k] = k;
  }
  for (int g : word) {
    const int k = std::abs(g) - 1;
    g > 0 ? b.pos(k) : b.neg(k);
    std::swap(at[k], at[k + 1]);
  }
  for (int k = 0; k < n; ++k) top.push_back({at[k], true});
  return b.boundary(bottom, top).build();
}

Scalar trefoil_oracle(const ModularData& cat, Label x) {
  // closure of s^3 on two strands: sum_c d_c (R^{xx}_c)^3, then framing 0
  Scalar sum = 0.0;
  for (Label c : cat.ring().fuse(x, x)) sum += cat.qdim(c) * std::pow(cat.rsym(x, x, c), 3);
  return sum * std::pow(cat.twist(x), -3);
}

TEST(Golden, UnknotIsQuantumDimension) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x)
      EXPECT_LT(rel_err(evaluate(cat, unknot(x)), cat.qdim(x)), 1e-9) << name << " " << x;
}

TEST(Golden, FramedUnknot) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x)
      for (int n = -3; n <= 3; ++n) {
        const Scalar expect = std::pow(cat.twist(x), n) * cat.qdim(x);
        EXPECT_LT(rel_err(evaluate(cat, unknot(x, n)), expect), 1e-9) << name << " " << x << " n=" << n;
        EXPECT_LT(rel_err(evaluate(cat, curls(n, x)), expect), 1e-9) << name << " " << x << " n=" << n;
      }
}

TEST(Golden, HopfLinkIsSMatrix) {
  for (const auto& [name, cat, prob] : {std::tuple{"fibonacci", fibonacci(), oracle::fibonacci_rules()},
                                        std::tuple{"ising", ising(), oracle::ising_rules()},
                                        std::tuple{"z3", zn_anyons(3), oracle::zn_rules(3)}}) {
    std::vector<double> dims;
    std::vector<oracle::cplx> theta;
    for (int a = 0; a < cat.rank(); ++a) {
      dims.push_back(cat.qdim(a).real());
      theta.push_back(cat.twist(a));
    }
    const Eigen::MatrixXcd s = oracle::s_from_twists(prob, dims, theta);
    for (Label i = 0; i < cat.rank(); ++i)
      for (Label j = 0; j < cat.rank(); ++j)
        EXPECT_LT(rel_err(evaluate(cat, hopf_link(i, j)), s(i, j)), 1e-9) << name << " " << i << "," << j;
  }
}

TEST(Golden, KirbyColoredUnknotsAreGaussSums) {
  for (const auto& [name, cat] : modular_builtins()) {
    const auto [dp, dm] = delta_pm(cat);
    EXPECT_LT(rel_err(evaluate_kirby(cat, unknot(std::nullopt, 1), {0}), dp), 1e-9) << name;
    EXPECT_LT(rel_err(evaluate_kirby(cat, unknot(std::nullopt, -1), {0}), dm), 1e-9) << name;
    EXPECT_LT(rel_err(evaluate_kirby(cat, unknot(std::nullopt, 0), {0}), global_dim(cat.base())), 1e-9) << name;
  }
}

TEST(Golden, TrefoilMatchesBraidEigenvalues) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x)
      EXPECT_LT(rel_err(evaluate(cat, braid_closure(2, {1, 1, 1}, x)), trefoil_oracle(cat, x)), 1e-9) << name;
}

TEST(Sliding, StrandPassesOmegaCircle) {
  const MorseDiagram before = load_diagram(data_path("diagrams/slide_before.json"));
  const MorseDiagram after = load_diagram(data_path("diagrams/slide_after.json"));
  for (const auto& [name, cat] : modular_builtins())
    for (Label x = 0; x < cat.rank(); ++x) {
      MorseDiagram b = before, a = after;
      b.components[1].color = x;
      a.components[1].color = x;
      EXPECT_LT(rel_err(evaluate_kirby(cat, a, {0}), evaluate_kirby(cat, b, {0})), 1e-9) << name << " " << x;
    }
}

TEST(Reidemeister, TwoCancels) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x) {
      const Scalar unlink = cat.qdim(x) * cat.qdim(x);
      EXPECT_LT(rel_err(evaluate(cat, braid_closure(2, {1, -1}, x)), unlink), 1e-9) << name;
      EXPECT_LT(rel_err(evaluate(cat, braid_closure(2, {-1, 1}, x)), unlink), 1e-9) << name;
      for (Label charge : cat.ring().fuse(x, x)) {
        const TangleMatrix m = evaluate_tangle(cat, open_braid(2, {1, -1}, x), charge);
        EXPECT_LT((m.matrix - Eigen::MatrixXcd::Identity(m.matrix.rows(), m.matrix.cols())).norm(), 1e-9);
      }
    }
}

TEST(Reidemeister, ThreeBraidRelation) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 1; x < cat.rank(); ++x) {
      EXPECT_LT(rel_err(evaluate(cat, braid_closure(3, {1, 2, 1}, x)), evaluate(cat, braid_closure(3, {2, 1, 2}, x))),
                1e-9);
      for (Label c = 0; c < cat.rank(); ++c) {
        const TangleMatrix a = evaluate_tangle(cat, open_braid(3, {1, 2, 1}, x), c);
        const TangleMatrix b = evaluate_tangle(cat, open_braid(3, {2, 1, 2}, x), c);
        EXPECT_LT((a.matrix - b.matrix).norm(), 1e-9) << name << " charge " << c;
        const TangleMatrix ai = evaluate_tangle(cat, open_braid(3, {-1, -2, -1}, x), c);
        const TangleMatrix bi = evaluate_tangle(cat, open_braid(3, {-2, -1, -2}, x), c);
        EXPECT_LT((ai.matrix - bi.matrix).norm(), 1e-9) << name << " charge " << c;
      }
    }
}

TEST(Reidemeister, FramedOne) {
  // a blackboard curl with matching framing equals the plain framed unknot
  const MorseDiagram curl = load_diagram(data_path("diagrams/curl.json"));
  for (const auto& [name, cat] : braided_cases()) {
    MorseDiagram c = curl;
    for (Label x = 0; x < cat.rank(); ++x) {
      c.components[0].color = x;
      EXPECT_LT(rel_err(evaluate(cat, c), evaluate(cat, unknot(x, 1))), 1e-9) << name;
      c.components[0].framing = 0;
      EXPECT_LT(rel_err(evaluate(cat, c), cat.qdim(x)), 1e-9) << name;
      c.components[0].framing = 1;
    }
  }
}

TEST(Tangles, SingleCrossingIsRSymbol) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x)
      for (Label c : cat.ring().fuse(x, x)) {
        const TangleMatrix pos = evaluate_tangle(cat, open_braid(2, {1}, x), c);
        const TangleMatrix neg = evaluate_tangle(cat, open_braid(2, {-1}, x), c);
        ASSERT_EQ(pos.matrix.rows(), 1);
        EXPECT_LT(std::abs(pos.matrix(0, 0) - cat.rsym(x, x, c)), 1e-9) << name;
        EXPECT_LT(std::abs(neg.matrix(0, 0) - 1.0 / cat.rsym(x, x, c)), 1e-9) << name;
      }
}

TEST(Tangles, ZigzagsAreIdentity) {
  for (const auto& [name, cat] : braided_cases()) {
    const DiagramEvaluator ev(cat);
    for (Label x = 0; x < cat.rank(); ++x) {
      const auto [z1, z2] = ev.zigzag(x);
      EXPECT_LT(std::abs(z1 - 1.0), 1e-12);
      EXPECT_LT(std::abs(z2 - 1.0), 1e-12);
      const StrandWord w{{0, true}};
      const MorseDiagram left = DiagramBuilder().component(0, x).cup(1, 0, false).cap(0).boundary(w, w).build();
      const MorseDiagram right = DiagramBuilder().component(0, x).cup(0, 0, true).cap(1).boundary(w, w).build();
      for (const MorseDiagram& d : {left, right}) {
        const TangleMatrix m = evaluate_tangle(cat, d, x);
        ASSERT_EQ(m.matrix.rows(), 1);
        EXPECT_LT(std::abs(m.matrix(0, 0) - 1.0), 1e-9) << name << " " << x;
      }
    }
  }
}

TEST(Mirror, ConjugatesUnitaryEvaluations) {
  for (const auto& [name, cat] : braided_cases())
    for (Label x = 0; x < cat.rank(); ++x)
      for (const MorseDiagram& d : {braid_closure(2, {1, 1, 1}, x), hopf_link(x, cat.rank() - 1), unknot(x, 2),
                                    braid_closure(3, {1, -2, 1, -2}, x)})
        EXPECT_LT(rel_err(evaluate(cat, mirror(d)), std::conj(evaluate(cat, d))), 1e-9) << name;
}

TEST(Walk, CrossingCounts) {
  const DiagramWalk h = walk(hopf_link(0, 0));
  EXPECT_EQ(h.linking2.at({0, 1}), 2);
  EXPECT_EQ(walk(braid_closure(2, {1, 1, 1}, 0)).writhe.at(0), 3);
  EXPECT_EQ(walk(mirror(braid_closure(2, {1, 1, 1}, 0))).writhe.at(0), -3);
  EXPECT_EQ(crossing_sign(EventType::Pos, {0, true}, {1, true}), 1);
  EXPECT_EQ(crossing_sign(EventType::Pos, {0, true}, {1, false}), -1);
  EXPECT_EQ(crossing_sign(EventType::Neg, {0, false}, {1, false}), -1);
}

TEST(Walk, Errors) {
  struct Case {
    std::string what;
    MorseDiagram d;
  };
  std::vector<Case> cases;
  cases.push_back({"undeclared component", DiagramBuilder().cup(0, 3).cap(0).build()});
  cases.push_back({"cup position out of range", DiagramBuilder().component(0, 1).cup(1, 0).cap(0).build()});
  cases.push_back({"position out of range", DiagramBuilder().component(0, 1).cap(0).build()});
  cases.push_back({"overlaps another event",
                   DiagramBuilder().component(0, 1).cup(0, 0).cup(0, 0).pos(0).same_slice().cap(1).build()});
  cases.push_back({"two cups at the same position",
                   DiagramBuilder().component(0, 1).component(1, 1).cup(0, 0).same_slice().cup(0, 1).build()});
  cases.push_back({"cup inside a crossing or cap",
                   DiagramBuilder().component(0, 1).component(1, 1).cup(0, 0).cap(0).same_slice().cup(1, 1).build()});
  cases.push_back({"cap joins components",
                   DiagramBuilder().component(0, 1).component(1, 1).cup(0, 0).cup(2, 1).cap(1).cap(0).build()});
  cases.push_back({"same direction",
                   DiagramBuilder().component(0, 1).cup(0, 0).cup(0, 0).pos(1).cap(0).cap(0).build()});
  cases.push_back({"does not match the top boundary", DiagramBuilder().component(0, 1).cup(0, 0).build()});
  cases.push_back({"does not appear", DiagramBuilder().component(0, 1).component(1, 1).cup(0, 0).cap(0).build()});
  cases.push_back({"consists of 2", DiagramBuilder().component(0, 1).cup(0, 0).cap(0).cup(0, 0).cap(0).build()});
  for (const auto& c : cases) {
    try {
      walk(c.d);
      ADD_FAILURE() << "no error for " << c.what;
    } catch (const DiagramError& e) {
      EXPECT_NE(std::string(e.what()).find(c.what), std::string::npos) << e.what();
    }
  }
}

TEST(Walk, EvaluationErrors) {
  const ModularData fib = fibonacci();
  EXPECT_THROW(evaluate(fib, unknot(std::nullopt)), DiagramError);
  EXPECT_THROW(evaluate(fib, unknot(5)), DiagramError);
  EXPECT_THROW(evaluate(fib, open_braid(2, {1}, 1)), DiagramError);
  EXPECT_THROW(evaluate_kirby(fib, unknot(1), {0}), DiagramError);
  EXPECT_THROW(evaluate_kirby(fib, unknot(std::nullopt), {7}), DiagramError);
  EXPECT_THROW(disjoint_union(unknot(1), open_braid(1, {}, 1)), DiagramError);
  EXPECT_THROW(braid_closure(2, {2}, 1), std::invalid_argument);
}

TEST(Walk, DisjointUnionMultiplies) {
  const ModularData fib = fibonacci();
  const MorseDiagram d = disjoint_union(hopf_link(1, 1), braid_closure(2, {1, 1, 1}, 1));
  EXPECT_LT(rel_err(evaluate(fib, d), evaluate(fib, hopf_link(1, 1)) * trefoil_oracle(fib, 1)), 1e-9);
}

}  // namespace
