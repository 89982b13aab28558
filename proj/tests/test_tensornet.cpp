// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "ttn/network.hpp"

using namespace ttn;

namespace {

TensorNetwork<Rat> trace_of_identity(int dim) {
  TensorNetwork<Rat> net;
  DenseTensor<Rat> id(std::vector<int>{dim, dim});
  for (int i = 0; i < dim; ++i) id.at({i, i}) = 1;
  int v = net.add_tensor(std::move(id));
  net.connect(v, 0, v, 1);
  return net;
}

}  // namespace

TEST(TensorNet, TraceOfIdentity) {
  auto net = trace_of_identity(2);
  EXPECT_EQ(state_sum(net), Rat(2));
  ContractionPlan plan{{0}};
  auto rep = contract(net, plan);
  EXPECT_EQ(rep.value, Rat(2));
  EXPECT_EQ(rep.steps.size(), 1u);
  // The self-loop is traced before the split, so the step maps scalars.
  EXPECT_EQ(rep.steps[0].incoming, 0);
  EXPECT_EQ(rep.steps[0].outgoing, 0);
}

TEST(TensorNet, MatrixProductTrace) {
  // tr(A * B) with A = B = identity (dim 2) -> 2.
  TensorNetwork<Rat> net;
  for (int k = 0; k < 2; ++k) {
    DenseTensor<Rat> id(std::vector<int>{2, 2});
    id.at({0, 0}) = 1;
    id.at({1, 1}) = 1;
    net.add_tensor(std::move(id));
  }
  net.connect(0, 1, 1, 0);
  net.connect(1, 1, 0, 0);
  EXPECT_EQ(state_sum(net), Rat(2));
  auto rep = contract(net, ContractionPlan{{0, 1}});
  EXPECT_EQ(rep.value, Rat(2));
  // Both steps are caps: the identity contracted (0,2) or (2,0) costs
  // sqrt(2), so Delta = 2.
  EXPECT_NEAR(rep.delta, 2.0, 1e-9);
}

TEST(TensorNet, OpenNetworkErrors) {
  TensorNetwork<Rat> net;
  DenseTensor<Rat> v(std::vector<int>{2});
  v.at({0}) = 1;
  net.add_tensor(std::move(v));
  EXPECT_THROW(state_sum(net), PreconditionError);
  EXPECT_THROW(contract(net, ContractionPlan{{0}}), PreconditionError);
}

TEST(TensorNet, BudgetErrors) {
  auto net = trace_of_identity(3);
  EXPECT_THROW(state_sum(net, 2.0), BudgetError);
}

TEST(TensorNet, RandomNetworksContractEqualsStateSum) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    // Random closed network: 2..4 vertices, <= 6 edges, dims <= 3.
    int nv = 2 + int(rng() % 3);
    std::vector<std::vector<int>> axes(nv);
    TensorNetwork<Rat> net;
    struct E {
      int v1, v2, dim;
    };
    std::vector<E> edges;
    int nedges = 1 + int(rng() % 6);
    for (int e = 0; e < nedges; ++e) {
      int v1 = int(rng() % nv), v2 = int(rng() % nv);
      int dim = 1 + int(rng() % 3);
      if (axes[v1].size() >= 4 || axes[v2].size() + (v1 == v2) >= 4) continue;
      axes[v1].push_back(dim);
      int a1 = int(axes[v1].size()) - 1;
      axes[v2].push_back(dim);
      int a2 = int(axes[v2].size()) - 1;
      edges.push_back({v1, v2, dim});
      (void)a1;
      (void)a2;
    }
    for (int v = 0; v < nv; ++v) {
      DenseTensor<Rat> t(axes[v].empty() ? std::vector<int>{}
                                         : axes[v]);
      for (auto& x : t.data)
        x = Rat(int(rng() % 7) - 3, 1 + int(rng() % 3));
      net.add_tensor(std::move(t));
    }
    {
      std::vector<int> cursor(nv, 0);
      for (auto& e : edges) {
        int a1 = cursor[e.v1]++;
        int a2 = cursor[e.v2]++;
        net.connect(e.v1, a1, e.v2, a2);
      }
    }
    Rat oracle = state_sum(net);
    // A couple of random plans plus the greedy one.
    std::vector<int> order(nv);
    for (int i = 0; i < nv; ++i) order[i] = i;
    for (int rep = 0; rep < 2; ++rep) {
      std::shuffle(order.begin(), order.end(), rng);
      auto r = contract(net, ContractionPlan{order});
      ASSERT_EQ(r.value, oracle) << "trial " << trial;
      std::reverse(order.begin(), order.end());
      auto r2 = contract(net, ContractionPlan{order});
      ASSERT_EQ(r2.value, oracle) << "reversed, trial " << trial;
    }
    auto rg = contract(net, greedy_plan(net));
    ASSERT_EQ(rg.value, oracle);
  }
}

TEST(TensorNet, OperatorNormVsL2) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    DenseTensor<Rat> t(std::vector<int>{2, 3, 2});
    for (auto& x : t.data) x = Rat(int(rng() % 9) - 4, 1 + int(rng() % 3));
    double l2 = std::sqrt(to_float(l2_norm_squared(t)));
    for (auto in : std::vector<std::vector<int>>{
             {}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}) {
      double n = operator_norm(t, in);
      EXPECT_LE(n, l2 + 1e-9);
    }
  }
}

TEST(TensorNet, PlanMustBePermutation) {
  auto net = trace_of_identity(2);
  EXPECT_THROW(contract(net, ContractionPlan{{0, 0}}), PreconditionError);
  EXPECT_THROW(contract(net, ContractionPlan{{}}), PreconditionError);
}
