// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <string>
#include <vector>

#include "ttn/scalars.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// Fibonacci initial data: labels I = {0, 1}, quantum dimensions d_0 = 1,
// d_1 = (1+sqrt5)/2, total D^2 = (5+sqrt5)/2.  A triple is admissible unless
// it has exactly one 1-label; a 6-tuple (i,j,k,l,m,n) is admissible when its
// four faces (i,j,k), (k,l,m), (m,n,i), (j,l,n) are.  The nonzero symbol
// values depend only on the label sum.
// ---------------------------------------------------------------------------
struct FibonacciData {
  static constexpr int num_labels = 2;

  static bool admissible(int a, int b, int c) { return a + b + c != 1; }

  static bool admissible6(const std::array<int, 6>& j) {
    return admissible(j[0], j[1], j[2]) && admissible(j[2], j[3], j[4]) &&
           admissible(j[4], j[5], j[0]) && admissible(j[1], j[3], j[5]);
  }

  static FibScalar dim(int label) {
    return label ? FibScalar::phi() : FibScalar(1);
  }
  static FibScalar sqrt_dim(int label) {
    return label ? FibScalar::t() : FibScalar(1);
  }
  /// D^2 = (5+sqrt5)/2 = phi + 2.
  static FibScalar total_dim_sq() { return FibScalar::phi() + FibScalar(2); }

  /// The symbol tensor |j1 j2 j3; j4 j5 j6|.
  static FibScalar symbol(const std::array<int, 6>& j) {
    if (!admissible6(j)) return FibScalar(0);
    int sum = 0;
    for (int x : j) sum += x;
    switch (sum) {
      case 0:
        return FibScalar(1);  // 1
      case 3:
        // sqrt(2/(1+sqrt5)) = 1/t = t^3 - t
        return FibScalar(0, -1, 0, 1);
      case 4:
      case 5:
        // 2/(1+sqrt5) = 1/phi = t^2 - 1
        return FibScalar(-1, 0, 1, 0);
      case 6:
        // -2/(3+sqrt5) = -1/phi^2 = t^2 - 2
        return FibScalar(-2, 0, 1, 0);
      default:
        throw Error("fibonacci: admissible 6-tuple with impossible sum");
    }
  }
  static FibScalar symbol(int a, int b, int c, int d, int e, int f) {
    return symbol(std::array<int, 6>{a, b, c, d, e, f});
  }

  /// Integer-coefficient variants for the enumeration fast paths.
  template <class I>
  static detail::FibPoly<I> dim_poly(int label) {
    detail::FibPoly<I> p;
    if (label)
      p.c[2] = 1;  // phi = t^2
    else
      p.c[0] = 1;
    return p;
  }
  template <class I>
  static detail::FibPoly<I> sqrt_dim_poly(int label) {
    detail::FibPoly<I> p;
    p.c[label ? 1 : 0] = 1;  // t or 1
    return p;
  }
  template <class I>
  static detail::FibPoly<I> symbol_poly(const std::array<int, 6>& j) {
    detail::FibPoly<I> p;
    if (!admissible6(j)) return p;
    int sum = 0;
    for (int x : j) sum += x;
    switch (sum) {
      case 0:
        p.c[0] = 1;
        break;
      case 3:
        p.c[1] = -1;
        p.c[3] = 1;
        break;
      case 4:
      case 5:
        p.c[0] = -1;
        p.c[2] = 1;
        break;
      case 6:
        p.c[0] = -2;
        p.c[2] = 1;
        break;
    }
    return p;
  }
};

struct FibIdentityReport {
  bool ok = true;
  std::string first_failure;
  int instances_checked_orthogonality = 0;   // the delta identity
  int instances_checked_pentagon = 0;        // the three-symbol identity
  int instances_checked_dim = 0;             // the total-dimension identity
};

// ---------------------------------------------------------------------------
// Exhaustive exact verification of the three defining identities of the
// initial data.  All residuals must vanish exactly in the field.
// ---------------------------------------------------------------------------
inline FibIdentityReport verify_identities() {
  using F = FibonacciData;
  FibIdentityReport rep;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) {
      rep.ok = false;
      rep.first_failure = msg;
    }
  };
  // Orthogonality: sum_j d_j d_{j4} |j2 j1 j; j3 j5 j4| |j3 j1 j6; j2 j5 j|
  // = delta(j4, j6) whenever (j1,j3,j4), (j2,j4,j5), (j1,j3,j6), (j2,j5,j6)
  // are admissible.
  for (int mask = 0; mask < 64; ++mask) {
    int j1 = mask & 1, j2 = (mask >> 1) & 1, j3 = (mask >> 2) & 1;
    int j4 = (mask >> 3) & 1, j5 = (mask >> 4) & 1, j6 = (mask >> 5) & 1;
    if (!(F::admissible(j1, j3, j4) && F::admissible(j2, j4, j5) &&
          F::admissible(j1, j3, j6) && F::admissible(j2, j5, j6)))
      continue;
    ++rep.instances_checked_orthogonality;
    FibScalar sum(0);
    for (int j = 0; j < 2; ++j)
      sum += F::dim(j) * F::dim(j4) * F::symbol(j2, j1, j, j3, j5, j4) *
             F::symbol(j3, j1, j6, j2, j5, j);
    FibScalar expect(j4 == j6 ? 1 : 0);
    if (sum != expect)
      fail("orthogonality identity failed at mask " + std::to_string(mask));
  }
  // Three-symbol identity: for (j9,j1,j4,j6,j5,j2) and (j8,j7,j9,j2,j5,j3)
  // admissible 6-tuples,
  // sum_j d_j |j7 j1 j; j6 j3 j2| |j8 j j4; j6 j5 j3| |j8 j7 j9; j1 j4 j|
  //   = |j9 j1 j4; j6 j5 j2| |j8 j7 j9; j2 j5 j3|.
  for (int mask = 0; mask < 512; ++mask) {
    std::array<int, 10> j{};  // 1-based
    for (int b = 0; b < 9; ++b) j[b + 1] = (mask >> b) & 1;
    if (!(F::admissible6({j[9], j[1], j[4], j[6], j[5], j[2]}) &&
          F::admissible6({j[8], j[7], j[9], j[2], j[5], j[3]})))
      continue;
    ++rep.instances_checked_pentagon;
    FibScalar lhs(0);
    for (int x = 0; x < 2; ++x)
      lhs += F::dim(x) * F::symbol(j[7], j[1], x, j[6], j[3], j[2]) *
             F::symbol(j[8], x, j[4], j[6], j[5], j[3]) *
             F::symbol(j[8], j[7], j[9], j[1], j[4], x);
    FibScalar rhs = F::symbol(j[9], j[1], j[4], j[6], j[5], j[2]) *
                    F::symbol(j[8], j[7], j[9], j[2], j[5], j[3]);
    if (lhs != rhs)
      fail("three-symbol identity failed at mask " + std::to_string(mask));
  }
  // Total dimension: D^2 = (1/d_j) sum_{k,l admissible with j} d_k d_l.
  for (int j = 0; j < 2; ++j) {
    ++rep.instances_checked_dim;
    FibScalar sum(0);
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        if (F::admissible(j, k, l)) sum += F::dim(k) * F::dim(l);
    if (sum / F::dim(j) != F::total_dim_sq())
      fail("total-dimension identity failed at j = " + std::to_string(j));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// F-move: the basis change induced by flipping the diagonal of a boundary
// quadrilateral with outer labels (j1, j2, j3, j5).  Rows are indexed by the
// admissible new diagonals j, columns by the admissible old diagonals j4;
// F[j][j4] = sqrt(d_j d_{j4}) |j2 j1 j; j3 j5 j4|.
// ---------------------------------------------------------------------------
struct FMoveMatrix {
  std::vector<int> new_diagonals, old_diagonals;
  std::vector<std::vector<FibScalar>> entries;  // [row][col]
};

inline FMoveMatrix f_move_matrix(int j1, int j2, int j3, int j5) {
  using F = FibonacciData;
  FMoveMatrix m;
  for (int j = 0; j < 2; ++j)
    if (F::admissible(j2, j1, j) && F::admissible(j, j3, j5))
      m.new_diagonals.push_back(j);
  for (int j4 = 0; j4 < 2; ++j4)
    if (F::admissible(j5, j4, j2) && F::admissible(j1, j3, j4))
      m.old_diagonals.push_back(j4);
  for (int j : m.new_diagonals) {
    std::vector<FibScalar> row;
    for (int j4 : m.old_diagonals)
      row.push_back(F::sqrt_dim(j) * F::sqrt_dim(j4) *
                    F::symbol(j2, j1, j, j3, j5, j4));
    m.entries.push_back(std::move(row));
  }
  return m;
}

/// F^dagger F on the admissible old-diagonal subspace; exact.
inline bool f_move_unitary(const FMoveMatrix& m) {
  size_t rows = m.new_diagonals.size(), cols = m.old_diagonals.size();
  if (rows != cols) return false;
  for (size_t a = 0; a < cols; ++a)
    for (size_t b = 0; b < cols; ++b) {
      FibScalar dot(0);
      for (size_t r = 0; r < rows; ++r)
        dot += m.entries[r][a] * m.entries[r][b];
      if (dot != FibScalar(a == b ? 1 : 0)) return false;
    }
  return true;
}

/// Operator norm of the full two-face tetrahedron attachment step: the
/// block-diagonal operator over all 16 outer-label sectors whose blocks are
/// the F matrices (zero on inadmissible configurations).  Unitarity of every
/// block makes this norm exactly one.
inline double two_face_attachment_norm() {
  using F = FibonacciData;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(32, 32);
  for (int outer = 0; outer < 16; ++outer) {
    int j1 = outer & 1, j2 = (outer >> 1) & 1, j3 = (outer >> 2) & 1,
        j5 = (outer >> 3) & 1;
    for (int j = 0; j < 2; ++j)
      for (int j4 = 0; j4 < 2; ++j4) {
        if (!(F::admissible(j2, j1, j) && F::admissible(j, j3, j5)))
          continue;
        if (!(F::admissible(j5, j4, j2) && F::admissible(j1, j3, j4)))
          continue;
        FibScalar v = F::sqrt_dim(j) * F::sqrt_dim(j4) *
                      F::symbol(j2, j1, j, j3, j5, j4);
        M(outer * 2 + j, outer * 2 + j4) = v.to_float();
      }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues()(0);
}

/// Minimum norm contribution of a lone tetrahedron with its six gluing
/// tensors: d_1^6 / D^8 = (3+sqrt5)/50.
inline FibScalar single_tet_scale_floor() {
  FibScalar d1_6 = FibonacciData::dim(1).pow(6);
  FibScalar D2 = FibonacciData::total_dim_sq();
  return d1_6 / D2.pow(4);
}

/// Exact squared L2 norm of the full symbol tensor: 16 - 4 sqrt5.
inline FibScalar symbol_l2_norm_squared() {
  FibScalar sum(0);
  for (int mask = 0; mask < 64; ++mask) {
    std::array<int, 6> j{};
    for (int b = 0; b < 6; ++b) j[b] = (mask >> b) & 1;
    FibScalar s = FibonacciData::symbol(j);
    sum += s * s;
  }
  return sum;
}

}  // namespace ttn
