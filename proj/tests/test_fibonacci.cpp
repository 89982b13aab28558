// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "ttn/fibonacci.hpp"

using namespace ttn;
using F = FibonacciData;

TEST(Fibonacci, SymbolBaseCases) {
  EXPECT_EQ(F::symbol(0, 0, 0, 0, 0, 0), FibScalar(1));
  // All ones: -2/(3+sqrt5).
  EXPECT_EQ(F::symbol(1, 1, 1, 1, 1, 1),
            FibScalar(-2) / (FibScalar(3) + FibScalar::sqrt5()));
  // A face with exactly one 1-label is inadmissible.
  EXPECT_EQ(F::symbol(1, 0, 0, 0, 0, 0), FibScalar(0));
  // Sum 3 admissible case: 1/t = sqrt(2/(1+sqrt5)).
  FibScalar v = F::symbol(0, 0, 0, 1, 1, 1);
  EXPECT_EQ(v * v, FibScalar(2) / (FibScalar(1) + FibScalar::sqrt5()));
  // Sum 4 and 5 cases give 2/(1+sqrt5).
  EXPECT_EQ(F::symbol(0, 1, 1, 0, 1, 1),
            FibScalar(2) / (FibScalar(1) + FibScalar::sqrt5()));
  EXPECT_EQ(F::symbol(0, 1, 1, 1, 1, 1),
            FibScalar(2) / (FibScalar(1) + FibScalar::sqrt5()));
}

TEST(Fibonacci, AdmissibleCounts) {
  // Up to cyclic permutation J = {(1,1,1),(1,1,0),(0,0,0)}; 15 admissible
  // 6-tuples in total.
  int admissible_tuples = 0;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<int, 6> j{};
    for (int b = 0; b < 6; ++b) j[b] = (mask >> b) & 1;
    admissible_tuples += F::admissible6(j);
  }
  EXPECT_EQ(admissible_tuples, 15);
  EXPECT_TRUE(F::admissible(0, 0, 0));
  EXPECT_TRUE(F::admissible(1, 1, 0));
  EXPECT_TRUE(F::admissible(1, 1, 1));
  EXPECT_FALSE(F::admissible(1, 0, 0));
}

TEST(Fibonacci, TetrahedralSymmetries) {
  // The six expressions of the symmetry identity agree on all 64 tuples.
  for (int mask = 0; mask < 64; ++mask) {
    int i = mask & 1, j = (mask >> 1) & 1, k = (mask >> 2) & 1;
    int l = (mask >> 3) & 1, m = (mask >> 4) & 1, n = (mask >> 5) & 1;
    FibScalar base = F::symbol(i, j, k, l, m, n);
    EXPECT_EQ(base, F::symbol(j, i, k, m, l, n));
    EXPECT_EQ(base, F::symbol(i, k, j, l, n, m));
    EXPECT_EQ(base, F::symbol(i, m, n, l, j, k));
    EXPECT_EQ(base, F::symbol(l, m, k, i, j, n));
    EXPECT_EQ(base, F::symbol(l, j, n, i, m, k));
  }
}

TEST(Fibonacci, IdentitiesExhaustive) {
  FibIdentityReport rep = verify_identities();
  EXPECT_TRUE(rep.ok) << rep.first_failure;
  EXPECT_GT(rep.instances_checked_orthogonality, 0);
  EXPECT_GT(rep.instances_checked_pentagon, 0);
  EXPECT_LE(rep.instances_checked_pentagon, 512);
  EXPECT_EQ(rep.instances_checked_dim, 2);
}

TEST(Fibonacci, TotalDimensionByHand) {
  // (1/d0)(d0 d0 + d1 d1) = 1 + phi^2 and (1/phi)(phi^2 + 2 phi) = phi + 2.
  FibScalar phi = FibScalar::phi();
  EXPECT_EQ(FibScalar(1) + phi * phi, F::total_dim_sq());
  EXPECT_EQ((phi * phi + FibScalar(2) * phi) / phi, F::total_dim_sq());
  EXPECT_EQ(F::total_dim_sq(),
            (FibScalar(5) + FibScalar::sqrt5()) / FibScalar(2));
}

TEST(Fibonacci, FMoveAllZeros) {
  FMoveMatrix m = f_move_matrix(0, 0, 0, 0);
  ASSERT_EQ(m.new_diagonals.size(), 1u);
  ASSERT_EQ(m.old_diagonals.size(), 1u);
  EXPECT_EQ(m.entries[0][0], FibScalar(1));
}

TEST(Fibonacci, FMoveAllOnes) {
  FMoveMatrix m = f_move_matrix(1, 1, 1, 1);
  ASSERT_EQ(m.new_diagonals.size(), 2u);
  ASSERT_EQ(m.old_diagonals.size(), 2u);
  EXPECT_TRUE(f_move_unitary(m));
}

TEST(Fibonacci, FMoveUnitaryAllOuterCases) {
  for (int outer = 0; outer < 16; ++outer) {
    FMoveMatrix m = f_move_matrix(outer & 1, (outer >> 1) & 1,
                                  (outer >> 2) & 1, (outer >> 3) & 1);
    EXPECT_EQ(m.new_diagonals.size(), m.old_diagonals.size()) << outer;
    EXPECT_TRUE(f_move_unitary(m)) << outer;
  }
}

TEST(Fibonacci, TwoFaceAttachmentNorm) {
  EXPECT_NEAR(two_face_attachment_norm(), 1.0, 1e-9);
}

TEST(Fibonacci, ScaleFloorAndL2Constants) {
  // d1^6 / D^8 = (3+sqrt5)/50.
  EXPECT_EQ(single_tet_scale_floor(),
            (FibScalar(3) + FibScalar::sqrt5()) / FibScalar(50));
  // Symbol tensor L2^2 = 16 - 4 sqrt5; gluing diag d_i: sum d_i^2 = D^2.
  EXPECT_EQ(symbol_l2_norm_squared(),
            FibScalar(16) - FibScalar(4) * FibScalar::sqrt5());
  EXPECT_EQ(F::dim(0) * F::dim(0) + F::dim(1) * F::dim(1),
            F::total_dim_sq());
}
