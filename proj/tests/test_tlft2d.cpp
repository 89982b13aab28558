// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "ttn/builders2d.hpp"
#include "ttn/pachner2d.hpp"
#include "ttn/tlft2d.hpp"

using namespace ttn;

TEST(Tlft2d, NetworkShape) {
  FiniteGroup c2 = FiniteGroup::named("cyclic:2");
  auto net = build_network(c2, torus_grid(1));
  EXPECT_EQ(net.triangle_vertex.size(), 2u);
  EXPECT_EQ(net.edge_vertex.size(), 3u);
  EXPECT_TRUE(net.net.closed());

  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  auto net2 = build_network(s3, sphere_4tri());
  EXPECT_EQ(net2.net.tensors.size(), 10u);  // 4 triangles + 6 edges
}

TEST(Tlft2d, NonOrientableRejected) {
  // Klein bottle: the torus gluing pattern with one orientation flag flipped.
  SurfaceComplex torus = torus_grid(1);
  auto glu = torus.gluings();
  // Flip the vertical gluing's flag on both sides.
  glu[0][0].rev = false;
  glu[1][1].rev = false;
  SurfaceComplex klein = SurfaceComplex::from_gluings(std::move(glu));
  EXPECT_FALSE(klein.is_orientable());
  EXPECT_EQ(klein.euler_characteristic(), 0);
  FiniteGroup c2 = FiniteGroup::named("cyclic:2");
  EXPECT_THROW(build_network(c2, klein), PreconditionError);
  EXPECT_THROW(invariant_exact(c2, klein), PreconditionError);
}

TEST(Tlft2d, StateSumMatchesInvariantOnSmallFixtures) {
  FiniteGroup c2 = FiniteGroup::named("cyclic:2");
  auto net = build_network(c2, torus_grid(1));
  QuadScalar ss = state_sum(net.net);
  EXPECT_TRUE(ss.is_rational());
  EXPECT_EQ(ss.as_rational(), Rat(2));
  EXPECT_EQ(invariant_exact(c2, torus_grid(1)), Rat(2));

  FiniteGroup c3 = FiniteGroup::named("cyclic:3");
  auto net3 = build_network(c3, torus_grid(1));
  EXPECT_EQ(state_sum(net3.net).as_rational(), Rat(3));
}

TEST(Tlft2d, KnownInvariants) {
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  EXPECT_EQ(invariant_exact(s3, sphere_4tri()), Rat(6));
  EXPECT_EQ(invariant_exact(s3, torus_grid(1)), Rat(3));
  EXPECT_EQ(invariant_exact(s3, genus2_minimal()), Rat(9, 4));
}

TEST(Tlft2d, MednykhAgreement) {
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  EXPECT_EQ(mednykh_rhs(s3, torus_grid(1)), Rat(3));
  EXPECT_EQ(mednykh_rhs(s3, genus2_minimal()), Rat(9, 4));
  FiniteGroup c4 = FiniteGroup::named("cyclic:4");
  for (const SurfaceComplex& s :
       {sphere_4tri(), torus_grid(1), genus2_minimal()})
    EXPECT_EQ(mednykh_rhs(c4, s), Rat(4));  // abelian: always |G|
}

TEST(Tlft2d, ThreeWayAgreementSmall) {
  for (const char* name : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    FiniteGroup g = FiniteGroup::named(name);
    for (const SurfaceComplex& s :
         {sphere_4tri(), torus_grid(1), torus_grid(2), genus2_minimal()}) {
      Rat a = invariant_exact(g, s);
      Rat b = mednykh_rhs(g, s);
      Rat c = closed_form_invariant(g, s);
      EXPECT_EQ(a, b) << name;
      EXPECT_EQ(b, c) << name;
    }
  }
}

TEST(Tlft2d, ValidLabelingIdentity) {
  FiniteGroup c2 = FiniteGroup::named("cyclic:2");
  SurfaceComplex torus = torus_grid(1);
  long long count = valid_labeling_count(c2, torus);
  int T = torus.triangle_count(), E = torus.edge_count();
  EXPECT_EQ(rat_pow(Rat(2), T - E) * count, invariant_exact(c2, torus));

  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  SurfaceComplex sph = sphere_4tri();
  long long cs = valid_labeling_count(s3, sph);
  EXPECT_EQ(rat_pow(Rat(6), sph.triangle_count() - sph.edge_count()) * cs,
            Rat(6));
}

TEST(Tlft2d, ValidLabelingBudget) {
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  EXPECT_THROW(valid_labeling_count(s3, genus2_minimal(), 100.0), BudgetError);
}

TEST(Tlft2d, MonteCarloDeterministicAndSane) {
  FiniteGroup c2 = FiniteGroup::named("cyclic:2");
  SurfaceComplex torus = torus_grid(1);
  auto r1 = monte_carlo_estimate(c2, torus, 200000, 7);
  auto r2 = monte_carlo_estimate(c2, torus, 200000, 7);
  EXPECT_EQ(r1.hits, r2.hits);
  EXPECT_EQ(r1.estimate, r2.estimate);
  EXPECT_GE(r1.estimate, 0.0);
  // Within 5 standard errors of the exact value 2 (seed is fixed).
  EXPECT_NEAR(r1.estimate, 2.0, 5.0 * r1.std_error);
  auto r3 = monte_carlo_estimate(c2, torus, 200000, 8);
  EXPECT_NE(r1.hits, 0);
  (void)r3;
}

TEST(Tlft2d, CapCountTorusOrdering) {
  SurfaceComplex torus = torus_grid(1);
  // Ordering [t1, e1, e2, e3, t2].
  std::vector<OrderingElement> ord = {
      {true, 0}, {false, 0}, {false, 1}, {false, 2}, {true, 1}};
  EXPECT_EQ(cap_count(torus, ord), 2);
  EXPECT_NEAR(cap_scale(FiniteGroup::named("symmetric:3"), torus, ord), 6.0,
              1e-12);
}

TEST(Tlft2d, CapCountAlwaysAtLeastTwoOnClosed) {
  std::mt19937_64 rng(123);
  SurfaceComplex torus = torus_grid(2);
  int T = torus.triangle_count(), E = torus.edge_count();
  std::vector<OrderingElement> ord;
  for (int t = 0; t < T; ++t) ord.push_back({true, t});
  for (int e = 0; e < E; ++e) ord.push_back({false, e});
  for (int trial = 0; trial < 500; ++trial) {
    std::shuffle(ord.begin(), ord.end(), rng);
    EXPECT_GE(cap_count(torus, ord), 2);
  }
}

TEST(Tlft2d, CapCountPermutationValidation) {
  SurfaceComplex torus = torus_grid(1);
  std::vector<OrderingElement> bad = {
      {true, 0}, {false, 0}, {false, 1}, {false, 2}, {true, 0}};
  EXPECT_THROW(cap_count(torus, bad), PreconditionError);
}

TEST(Tlft2d, MinCapIncreasesWithDiskInsertions) {
  SurfaceComplex torus = torus_grid(1);
  EXPECT_EQ(min_cap_count(torus), 2);
  SurfaceComplex once = insert_cap_disk(torus, 0);
  EXPECT_EQ(min_cap_count(once), 3);
}

TEST(Tlft2d, TwoCapOrderingFromBuilder) {
  for (int g : {0, 1, 2, 3}) {
    auto built = build_genus_g_surface(g, true);
    EXPECT_EQ(cap_count(built.complex, built.two_cap_ordering), 2) << g;
  }
}

TEST(Tlft2d, PachnerInvarianceSmall) {
  std::mt19937_64 rng(2024);
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  for (int trial = 0; trial < 30; ++trial) {
    SurfaceComplex c = (trial % 2) ? torus_grid(1) : genus2_minimal();
    Rat expected = invariant_exact(s3, c);
    for (int mv = 0; mv < 5; ++mv) {
      int kind = int(rng() % 3);
      if (kind == 0) {
        int t = int(rng() % c.triangle_count());
        int s = int(rng() % 3);
        if (c.gluing(t, s).glued() && c.gluing(t, s).tri != t)
          c = pachner22(c, t, s);
      } else if (kind == 1) {
        c = pachner13(c, int(rng() % c.triangle_count()));
      } else {
        try {
          c = pachner31(c, int(rng() % c.triangle_count()), int(rng() % 3));
        } catch (const PreconditionError&) {
        }
      }
    }
    EXPECT_EQ(invariant_exact(s3, c), expected);
  }
}
