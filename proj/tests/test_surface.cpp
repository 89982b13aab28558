// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "ttn/builders2d.hpp"
#include "ttn/pachner2d.hpp"
#include "ttn/surface.hpp"

using namespace ttn;

TEST(Surface, TorusGridCounts) {
  SurfaceComplex torus = torus_grid(1);
  EXPECT_EQ(torus.triangle_count(), 2);
  EXPECT_EQ(torus.edge_count(), 3);
  EXPECT_EQ(torus.vertex_count(), 1);
  EXPECT_EQ(torus.euler_characteristic(), 0);
  EXPECT_TRUE(torus.is_closed());
  EXPECT_TRUE(torus.is_orientable());
  SurfaceComplex t3 = torus_grid(3);
  EXPECT_EQ(t3.triangle_count(), 6);
  EXPECT_EQ(t3.vertex_count(), 3);
  EXPECT_EQ(t3.edge_count(), 9);
  EXPECT_EQ(t3.euler_characteristic(), 0);
}

TEST(Surface, SphereAndGenus2) {
  SurfaceComplex sph = sphere_4tri();
  EXPECT_EQ(sph.euler_characteristic(), 2);
  EXPECT_TRUE(sph.is_closed());
  EXPECT_TRUE(sph.is_orientable());
  SurfaceComplex g2 = genus2_minimal();
  EXPECT_EQ(g2.triangle_count(), 6);
  EXPECT_EQ(g2.edge_count(), 9);
  EXPECT_EQ(g2.vertex_count(), 1);
  EXPECT_EQ(g2.euler_characteristic(), -2);
  EXPECT_TRUE(g2.is_closed());
  EXPECT_TRUE(g2.is_orientable());
}

TEST(Surface, GenusBuilder) {
  EXPECT_EQ(build_genus_g_surface(1).complex.euler_characteristic(), 0);
  EXPECT_EQ(build_genus_g_surface(3).complex.euler_characteristic(), -4);
  for (int g = 0; g <= 4; ++g) {
    auto built = build_genus_g_surface(g);
    EXPECT_EQ(built.complex.euler_characteristic(), 2 - 2 * g) << g;
    EXPECT_TRUE(built.complex.is_closed()) << g;
    EXPECT_TRUE(built.complex.is_orientable()) << g;
  }
}

TEST(Surface, ParseSerializeRoundTrip) {
  for (const SurfaceComplex& c :
       {torus_grid(1), torus_grid(3), sphere_4tri(), genus2_minimal()}) {
    std::string text = c.serialize();
    SurfaceComplex re = SurfaceComplex::parse(text);
    EXPECT_EQ(re.serialize(), text);  // bit-exact round trip
    EXPECT_EQ(re.euler_characteristic(), c.euler_characteristic());
  }
}

TEST(Surface, ParseErrors) {
  EXPECT_THROW(SurfaceComplex::parse("surface 2\ntri 0: - - -\n"),
               ParseError);  // missing triangle line
  // Dangling reference to triangle 7.
  try {
    SurfaceComplex::parse(
        "surface 2\ntri 0: 7.0+ - -\ntri 1: - - -\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing triangle 7"),
              std::string::npos);
  }
  // Non-involutive gluing.
  EXPECT_THROW(
      SurfaceComplex::parse("surface 2\ntri 0: 1.0+ - -\ntri 1: - 0.0+ -\n"),
      ParseError);
  // Comments and boundary slots parse fine.
  SurfaceComplex c = SurfaceComplex::parse(
      "# a lone triangle\nsurface 1\ntri 0: - - -\n");
  EXPECT_FALSE(c.is_closed());
  EXPECT_EQ(c.euler_characteristic(), 1);
}

TEST(Surface, BoundaryFlag) {
  // Two triangles glued along one edge: a square with boundary.
  auto c = SurfaceComplex::parse(
      "surface 2\ntri 0: 1.0- - -\ntri 1: 0.0- - -\n");
  EXPECT_FALSE(c.is_closed());
  EXPECT_EQ(c.euler_characteristic(), 1);
}

TEST(Pachner2d, FlipTorusDiagonal) {
  SurfaceComplex torus = torus_grid(1);
  SurfaceComplex flipped = pachner22(torus, 0, 0);
  EXPECT_EQ(flipped.triangle_count(), 2);
  EXPECT_EQ(flipped.edge_count(), 3);
  EXPECT_EQ(flipped.vertex_count(), 1);
  EXPECT_EQ(flipped.euler_characteristic(), 0);
  EXPECT_TRUE(flipped.is_closed());
  // A torus stays a torus; in fact the flip is an isomorphism here.
  EXPECT_EQ(flipped.canonical_form(), torus.canonical_form());
}

TEST(Pachner2d, SubdivideSphere) {
  SurfaceComplex sph = sphere_4tri();
  SurfaceComplex sub = pachner13(sph, 0);
  EXPECT_EQ(sub.triangle_count(), 6);
  EXPECT_EQ(sub.vertex_count(), sph.vertex_count() + 1);
  EXPECT_EQ(sub.edge_count(), sph.edge_count() + 3);
  EXPECT_EQ(sub.euler_characteristic(), 2);
  EXPECT_TRUE(sub.is_closed());
  EXPECT_TRUE(sub.is_orientable());
}

TEST(Pachner2d, SubdivideThenCollapseIsIdentity) {
  for (const SurfaceComplex& base :
       {torus_grid(1), sphere_4tri(), genus2_minimal(), torus_grid(3)}) {
    SurfaceComplex sub = pachner13(base, 0);
    // The new interior vertex is corner 2 of the reused triangle 0.
    SurfaceComplex back = pachner31(sub, 0, 2);
    EXPECT_EQ(back.canonical_form(), base.canonical_form());
  }
}

TEST(Pachner2d, PreconditionErrors) {
  // The torus vertex has degree 6, so 3-1 must refuse.
  SurfaceComplex torus = torus_grid(1);
  EXPECT_THROW(pachner31(torus, 0, 0), PreconditionError);
  // Boundary edge cannot be flipped.
  auto open = SurfaceComplex::parse("surface 2\ntri 0: 1.0- - -\ntri 1: 0.0- - -\n");
  EXPECT_THROW(pachner22(open, 0, 1), PreconditionError);
}

TEST(Pachner2d, SphereVerticesCollapse) {
  // Every vertex of the 4-triangle sphere has degree 3; collapsing one gives
  // the 2-triangle sphere.
  SurfaceComplex sph = sphere_4tri();
  SurfaceComplex small = pachner31(sph, 0, 0);
  EXPECT_EQ(small.triangle_count(), 2);
  EXPECT_EQ(small.euler_characteristic(), 2);
  EXPECT_TRUE(small.is_closed());
}

TEST(Pachner2d, RandomMoveSequencesPreserveChi) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    SurfaceComplex c =
        (trial % 3 == 0) ? sphere_4tri()
                         : (trial % 3 == 1 ? torus_grid(1) : genus2_minimal());
    int chi = c.euler_characteristic();
    for (int mv = 0; mv < 8; ++mv) {
      int kind = int(rng() % 3);
      if (kind == 0) {
        int t = int(rng() % c.triangle_count());
        int s = int(rng() % 3);
        if (c.gluing(t, s).glued() && c.gluing(t, s).tri != t)
          c = pachner22(c, t, s);
      } else if (kind == 1) {
        c = pachner13(c, int(rng() % c.triangle_count()));
      } else {
        int t = int(rng() % c.triangle_count());
        int corner = int(rng() % 3);
        try {
          c = pachner31(c, t, corner);
        } catch (const PreconditionError&) {
        }
      }
      ASSERT_EQ(c.euler_characteristic(), chi);
      ASSERT_TRUE(c.is_closed());
    }
  }
}

TEST(CapDisk, TorusInsertions) {
  SurfaceComplex torus = torus_grid(1);
  SurfaceComplex once = insert_cap_disk(torus, 0);
  EXPECT_EQ(once.triangle_count(), 5);
  EXPECT_EQ(once.euler_characteristic(), 0);
  SurfaceComplex twice = insert_cap_disk(once, 0);
  EXPECT_EQ(twice.triangle_count(), 8);
  EXPECT_EQ(twice.euler_characteristic(), 0);
}

TEST(CapDisk, ChiPreservedOnAnyInput) {
  for (const SurfaceComplex& c :
       {torus_grid(1), torus_grid(3), sphere_4tri(), genus2_minimal()}) {
    SurfaceComplex out = insert_cap_disk(c, 0);
    EXPECT_EQ(out.euler_characteristic(), c.euler_characteristic());
  }
}

TEST(Surface, CanonicalFormInvariantUnderRelabeling) {
  SurfaceComplex g2 = genus2_minimal();
  std::vector<int> tri_perm = {3, 0, 5, 1, 4, 2};
  std::vector<std::array<int, 3>> cperm(6, {1, 2, 0});
  SurfaceComplex shuffled = g2.relabeled(tri_perm, cperm);
  EXPECT_EQ(shuffled.canonical_form(), g2.canonical_form());
  EXPECT_NE(sphere_4tri().canonical_form(), torus_grid(1).canonical_form());
}
