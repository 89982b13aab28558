// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "ttn/group.hpp"

using namespace ttn;

TEST(Groups, NamedConstructionsValidate) {
  for (const char* name :
       {"cyclic:1", "cyclic:2", "cyclic:4", "cyclic:5", "cyclic:12",
        "dihedral:3", "dihedral:4", "dihedral:6", "symmetric:3", "symmetric:4",
        "symmetric:5", "quaternion8"}) {
    FiniteGroup g = FiniteGroup::named(name);
    long long sum = 0;
    for (int d : g.irrep_dims()) sum += (long long)d * d;
    EXPECT_EQ(sum, g.order()) << name;
    EXPECT_EQ(int(g.irrep_dims().size()), g.conjugacy_class_count()) << name;
  }
}

TEST(Groups, Symmetric3) {
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  EXPECT_EQ(s3.order(), 6);
  EXPECT_EQ(s3.conjugacy_class_count(), 3);
  EXPECT_EQ(s3.irrep_dims(), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(s3.chi_reg(s3.identity()), 6);
  int nontrivial = 0;
  for (int x = 1; x < 6; ++x) nontrivial += s3.chi_reg(x) != 0;
  EXPECT_EQ(nontrivial, 0);
}

TEST(Groups, CyclicBasics) {
  FiniteGroup c4 = FiniteGroup::named("cyclic:4");
  EXPECT_EQ(c4.order(), 4);
  EXPECT_EQ(c4.conjugacy_class_count(), 4);
  EXPECT_EQ(c4.irrep_dims(), (std::vector<int>{1, 1, 1, 1}));
  FiniteGroup c5 = FiniteGroup::named("cyclic:5");
  EXPECT_EQ(c5.chi_reg(0), 5);
}

TEST(Groups, Quaternion8) {
  FiniteGroup q8 = FiniteGroup::named("quaternion8");
  EXPECT_EQ(q8.order(), 8);
  EXPECT_EQ(q8.conjugacy_class_count(), 5);
  // i * j = k and j * i = -k: indices i=2, j=4, k=6, -k=7.
  EXPECT_EQ(q8.mul(2, 4), 6);
  EXPECT_EQ(q8.mul(4, 2), 7);
}

TEST(Groups, NonAssociativeTableRejected) {
  // A 3-element "table" with identity but a broken triple.
  std::vector<int> t = {0, 1, 2, 1, 2, 0, 2, 1, 1};
  try {
    FiniteGroup::from_table(t);
    FAIL() << "expected rejection";
  } catch (const Error& e) {
    // The error names an offending triple or a missing inverse.
    EXPECT_TRUE(std::string(e.what()).find("(") != std::string::npos ||
                std::string(e.what()).find("inverse") != std::string::npos);
  }
}

TEST(Groups, ParseSerializeRoundTrip) {
  FiniteGroup d4 = FiniteGroup::named("dihedral:4");
  std::string text = d4.serialize();
  FiniteGroup re = FiniteGroup::parse(text);
  EXPECT_EQ(re.order(), d4.order());
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) EXPECT_EQ(re.mul(a, b), d4.mul(a, b));
  EXPECT_EQ(re.serialize(), text);
}

TEST(Groups, HomCountAbelian) {
  FiniteGroup c3 = FiniteGroup::named("cyclic:3");
  EXPECT_EQ(c3.hom_count(0), 1);
  EXPECT_EQ(c3.hom_count(1), 9);    // |G|^2
  EXPECT_EQ(c3.hom_count(2), 81);   // |G|^4
  FiniteGroup c4 = FiniteGroup::named("cyclic:4");
  EXPECT_EQ(c4.hom_count(2), 256);
}

TEST(Groups, HomCountS3) {
  FiniteGroup s3 = FiniteGroup::named("symmetric:3");
  EXPECT_EQ(s3.hom_count(1), 18);   // commuting pairs = 3 classes * 6
  EXPECT_EQ(s3.hom_count(2), 486);  // 6^3 * (1 + 1 + 1/4)
}

TEST(Groups, HomCountBurnsideIdentity) {
  // |Hom(Z^2, G)| equals the sum of centralizer orders.
  for (const char* name : {"cyclic:6", "dihedral:3", "dihedral:4",
                           "dihedral:6", "quaternion8", "cyclic:12"}) {
    FiniteGroup g = FiniteGroup::named(name);
    long long centralizers = 0;
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        centralizers += g.mul(x, y) == g.mul(y, x);
    EXPECT_EQ(g.hom_count(1), centralizers) << name;
  }
}

TEST(Groups, HomCountBudget) {
  FiniteGroup s5 = FiniteGroup::named("symmetric:5");
  EXPECT_THROW(s5.hom_count(2, 1000), BudgetError);
}
