// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "ttn/pachner3d.hpp"
#include "ttn/tri3.hpp"

using namespace ttn;

TEST(Tri3, TwoTetSphere) {
  Triangulation3 c = sphere_two_tet();
  EXPECT_TRUE(c.is_closed());
  EXPECT_EQ(c.vertex_count(), 4);
  EXPECT_EQ(c.edge_count(), 6);
  EXPECT_EQ(c.face_count(), 4);
  for (int d : c.edge_degrees()) EXPECT_EQ(d, 2);
  Tri3Report r = validate_tri3(c);
  EXPECT_TRUE(r.all_links_ok);
  EXPECT_TRUE(r.orientable);
  for (int chi : r.link_euler) EXPECT_EQ(chi, 2);
}

TEST(Tri3, Boundary4Simplex) {
  Triangulation3 c = sphere_boundary_4simplex();
  EXPECT_TRUE(c.is_closed());
  EXPECT_EQ(c.tet_count(), 5);
  EXPECT_EQ(c.vertex_count(), 5);
  EXPECT_EQ(c.edge_count(), 10);
  for (int d : c.edge_degrees()) EXPECT_EQ(d, 3);
  Tri3Report r = validate_tri3(c);
  EXPECT_TRUE(r.all_links_ok);
  EXPECT_TRUE(r.orientable);
}

TEST(Tri3, SingleTetBoundary) {
  Triangulation3 c = Triangulation3::parse("tri3 1\ntet 0: - - - -\n");
  EXPECT_FALSE(c.is_closed());
  EXPECT_EQ(c.vertex_count(), 4);
  EXPECT_EQ(c.edge_count(), 6);
  Tri3Report r = validate_tri3(c);
  EXPECT_TRUE(r.all_links_ok);  // four disk links
  for (int chi : r.link_euler) EXPECT_EQ(chi, 1);
}

TEST(Tri3, ParseSerializeRoundTrip) {
  for (const Triangulation3& c : {sphere_two_tet(), sphere_boundary_4simplex()}) {
    std::string text = c.serialize();
    Triangulation3 re = Triangulation3::parse(text);
    EXPECT_EQ(re.serialize(), text);
  }
  EXPECT_THROW(Triangulation3::parse("tri3 1\ntet 0: 0(0123) - - -\n"),
               ParseError);  // face glued to itself
  EXPECT_THROW(Triangulation3::parse("tri3 2\ntet 0: 1(0113) - - -\n"
                                     "tet 1: 0(0113) - - -\n"),
               ParseError);  // invalid permutation
  EXPECT_THROW(Triangulation3::parse("tri3 2\ntet 0: 5(0123) - - -\n"
                                     "tet 1: - - - -\n"),
               ParseError);  // dangling reference
}

TEST(Tri3, Pachner23OnTwoTetSphere) {
  Triangulation3 c = sphere_two_tet();
  Triangulation3 moved = pachner23(c, 0, 0);
  EXPECT_EQ(moved.tet_count(), 3);
  EXPECT_TRUE(moved.is_closed());
  Tri3Report r = validate_tri3(moved);
  EXPECT_TRUE(r.all_links_ok);
  EXPECT_TRUE(r.orientable);
  EXPECT_EQ(moved.vertex_count(), 4);
  EXPECT_EQ(moved.edge_count(), 7);
}

TEST(Tri3, Pachner23Then32IsIdentity) {
  Triangulation3 c = sphere_boundary_4simplex();
  Triangulation3 moved = pachner23(c, 0, 0);
  EXPECT_EQ(moved.tet_count(), 6);
  // The move creates the new interior edge in the first new tet between
  // locals 0 and 1.
  Triangulation3 back = pachner32(moved, 0, tet_edge_index(0, 1));
  EXPECT_EQ(back.canonical_form(), c.canonical_form());
}

TEST(Tri3, Pachner14On5TetSphere) {
  Triangulation3 c = sphere_boundary_4simplex();
  Triangulation3 moved = pachner14(c, 0);
  EXPECT_EQ(moved.tet_count(), 8);
  EXPECT_EQ(moved.vertex_count(), 6);
  EXPECT_TRUE(moved.is_closed());
  Tri3Report r = validate_tri3(moved);
  EXPECT_TRUE(r.all_links_ok);
  EXPECT_TRUE(r.orientable);
}

TEST(Tri3, Pachner14Then41IsIdentity) {
  Triangulation3 c = sphere_two_tet();
  Triangulation3 moved = pachner14(c, 0);
  // The new vertex is local 0 of piece 0 (the reused index 0).
  Triangulation3 back = pachner41(moved, 0, 0);
  EXPECT_EQ(back.canonical_form(), c.canonical_form());
}

TEST(Tri3, MovePreconditions) {
  Triangulation3 c = sphere_two_tet();
  // Every edge of the two-tet sphere has degree 2, not 3.
  EXPECT_THROW(pachner32(c, 0, 0), PreconditionError);
  // Vertices have degree 2, not 4.
  EXPECT_THROW(pachner41(c, 0, 0), PreconditionError);
  Triangulation3 open = Triangulation3::parse("tri3 1\ntet 0: - - - -\n");
  EXPECT_THROW(pachner23(open, 0, 0), PreconditionError);
}

TEST(Tri3, RandomMoveSequencesStayValid) {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    Triangulation3 c = (trial % 2) ? sphere_two_tet() : sphere_boundary_4simplex();
    for (int mv = 0; mv < 6; ++mv) {
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
      Tri3Report r = validate_tri3(c);
      ASSERT_TRUE(r.closed);
      ASSERT_TRUE(r.all_links_ok);
      ASSERT_TRUE(r.orientable);
    }
  }
}

TEST(Tri3, CanonicalFormInvariance) {
  Triangulation3 c = sphere_boundary_4simplex();
  std::vector<int> tp = {4, 2, 0, 1, 3};
  std::vector<Perm4> vp(5, Perm4{2, 0, 3, 1});
  EXPECT_EQ(c.relabeled(tp, vp).canonical_form(), c.canonical_form());
  EXPECT_NE(sphere_two_tet().canonical_form(),
            sphere_boundary_4simplex().canonical_form());
}
