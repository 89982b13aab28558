// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "ttn/pachner3d.hpp"
#include "ttn/turaev_viro.hpp"

using namespace ttn;

namespace {

FibScalar sphere_value() {
  // D^{-2} = 2/(5+sqrt5) = 1/(phi+2).
  return FibonacciData::total_dim_sq().inverse();
}

}  // namespace

TEST(TuraevViro, TwoTetSphere) {
  FibScalar v = tv_exact(sphere_two_tet());
  EXPECT_EQ(v, sphere_value());
  EXPECT_NEAR(v.to_float(), 0.2763932023, 1e-9);
}

TEST(TuraevViro, TriangulationIndependenceAcrossSpheres) {
  EXPECT_EQ(tv_exact(sphere_two_tet()), tv_exact(sphere_boundary_4simplex()));
}

TEST(TuraevViro, OpenInputRejected) {
  Triangulation3 open = Triangulation3::parse("tri3 1\ntet 0: - - - -\n");
  EXPECT_THROW(tv_exact(open), PreconditionError);
  EXPECT_THROW(tv_contract_greedy(open), PreconditionError);
}

TEST(TuraevViro, NetworkShape) {
  auto net = build_tv_network(sphere_two_tet());
  EXPECT_EQ(net.tet_vertex.size(), 2u);
  EXPECT_EQ(net.edge_vertex.size(), 6u);
  EXPECT_TRUE(net.net.closed());
  // Gluing tensors have rank = edge degree (2 here).
  for (int e : net.edge_vertex)
    EXPECT_EQ(net.net.tensors[e].rank(), 2);
}

TEST(TuraevViro, StateSumOracleMatchesEnumeration) {
  // The generic network state-sum and the pruned enumerator agree.
  Triangulation3 c = sphere_two_tet();
  auto net = build_tv_network(c);
  FibScalar raw = state_sum(net.net);
  FibScalar pref = FibonacciData::total_dim_sq().pow(c.vertex_count());
  EXPECT_EQ(raw, tv_exact(c) * pref);
}

TEST(TuraevViro, ContractMatchesExactOnPlans) {
  std::mt19937_64 rng(31);
  for (const Triangulation3& c :
       {sphere_two_tet(), sphere_boundary_4simplex()}) {
    FibScalar expected = tv_exact(c);
    auto net = build_tv_network(c);
    size_t nv = net.net.tensors.size();
    std::vector<int> order(nv);
    for (size_t i = 0; i < nv; ++i) order[i] = int(i);
    double first_delta = -1;
    bool delta_varies = false;
    for (int trial = 0; trial < 4; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      auto rep = tv_contract(c, ContractionPlan{order});
      EXPECT_EQ(rep.value, expected);
      if (first_delta < 0)
        first_delta = rep.delta;
      else if (std::abs(rep.delta - first_delta) > 1e-9)
        delta_varies = true;
    }
    auto rep = tv_contract_greedy(c);
    EXPECT_EQ(rep.value, expected);
    EXPECT_NEAR(rep.scale,
                rep.delta * std::pow(FibonacciData::total_dim_sq().to_float(),
                                     -double(c.vertex_count())),
                1e-12);
    (void)delta_varies;  // different plans may (and do) give different Delta
  }
}

TEST(TuraevViro, PachnerInvarianceRandomSequences) {
  std::mt19937_64 rng(777);
  FibScalar expected = tv_exact(sphere_two_tet());
  for (int trial = 0; trial < 25; ++trial) {
    Triangulation3 c =
        (trial % 2) ? sphere_two_tet() : sphere_boundary_4simplex();
    for (int mv = 0; mv < 5; ++mv) {
      int kind = int(rng() % 4);
      try {
        if (kind == 0) {
          int t = int(rng() % c.tet_count());
          int f = int(rng() % 4);
          if (c.gluing(t, f).glued() && c.gluing(t, f).tet != t)
            c = pachner23(c, t, f);
        } else if (kind == 1) {
          c = pachner32(c, int(rng() % c.tet_count()), int(rng() % 6));
        } else if (kind == 2) {
          c = pachner14(c, int(rng() % c.tet_count()));
        } else {
          c = pachner41(c, int(rng() % c.tet_count()), int(rng() % 4));
        }
      } catch (const PreconditionError&) {
      }
    }
    ASSERT_EQ(tv_exact(c), expected) << "trial " << trial;
  }
}

TEST(TuraevViro, TqftClosedMatchesScaledInvariant) {
  Triangulation3 c = sphere_two_tet();
  TqftTensor t = tqft_boundary(c);
  EXPECT_TRUE(t.boundary_classes.empty());
  FibScalar expected =
      FibonacciData::total_dim_sq().pow(c.vertex_count()) * tv_exact(c);
  EXPECT_EQ(t.tensor.data[0], expected);
}

TEST(TuraevViro, TqftSingleTetShape) {
  Triangulation3 open = Triangulation3::parse("tri3 1\ntet 0: - - - -\n");
  TqftTensor t = tqft_boundary(open);
  EXPECT_EQ(t.boundary_classes.size(), 6u);
  EXPECT_EQ(t.tensor.rank(), 6);
}

TEST(TuraevViro, Composability) {
  // Cutting the two-tet sphere along its common boundary sphere yields two
  // single tetrahedra; pairing their tqft tensors over the six shared edge
  // labels reproduces the closed tensor.
  Triangulation3 closed = sphere_two_tet();
  Triangulation3 open = Triangulation3::parse("tri3 1\ntet 0: - - - -\n");
  TqftTensor piece = tqft_boundary(open);
  // The identity face gluings identify local edges of the two tets
  // directly, so the pairing contracts equal indices.
  FibScalar paired(0);
  for (int flat = 0; flat < 64; ++flat)
    paired += piece.tensor.data[flat] * piece.tensor.data[flat];
  FibScalar expected =
      FibonacciData::total_dim_sq().pow(closed.vertex_count()) *
      tv_exact(closed);
  EXPECT_EQ(paired, expected);
}

TEST(TuraevViro, BigIntPathMatchesInt64) {
  // Force the BigInt fallback on a small instance and compare.
  Triangulation3 c = sphere_boundary_4simplex();
  FibScalar pref = FibonacciData::total_dim_sq().pow(c.vertex_count());
  auto weight64 = [](int, int lab) {
    return FibonacciData::dim_poly<int64_t>(lab);
  };
  auto weight_big = [](int, int lab) {
    return FibonacciData::dim_poly<BigInt>(lab);
  };
  auto p64 =
      detail::tv_state_sum_poly<int64_t>(c, weight64, nullptr, nullptr);
  auto pbig =
      detail::tv_state_sum_poly<BigInt>(c, weight_big, nullptr, nullptr);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(BigInt(p64.c[i]), pbig.c[i]);
  (void)pref;
}
