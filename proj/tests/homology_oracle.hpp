// SPDX-License-Identifier: Apache-2.0
// Test-only oracle: first homology of a closed triangulation, computed from
// the dual presentation (generators = face classes minus a dual spanning
// tree, relations = signed edge link cycles).  Kept independent of the
// library's invariant paths so manifold builders can be cross-checked.
#pragma once
#include "ttn/tri3.hpp"
#include <map>
#include <vector>
namespace ttn_test {
using namespace ttn;
struct H1 { int rank; std::vector<long long> torsion; };
inline H1 first_homology(const Triangulation3& c) {
  // face classes with a chosen representative side
  std::map<std::pair<int,int>, int> fclass;  // (tet,face) -> class
  std::vector<std::pair<int,int>> rep;       // class -> rep side
  for (int t = 0; t < c.tet_count(); ++t)
    for (int f = 0; f < 4; ++f) {
      if (fclass.count({t, f})) continue;
      int id = (int)rep.size();
      fclass[{t, f}] = id;
      const auto& g = c.gluing(t, f);
      if (!g.glued()) throw Error("h1: need closed");
      fclass[{g.tet, g.perm[f]}] = id;
      rep.push_back({t, f});
    }
  int F = (int)rep.size();
  // dual spanning tree over tets
  std::vector<char> in_tree(F, 0);
  {
    std::vector<char> seen(c.tet_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int t = stack.back(); stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const auto& g = c.gluing(t, f);
        if (!seen[g.tet]) {
          seen[g.tet] = 1;
          in_tree[fclass[{t, f}]] = 1;
          stack.push_back(g.tet);
        }
      }
    }
  }
  // relations: one per edge class: walk the link cycle, signed crossings
  std::vector<std::vector<long long>> rel;
  for (int e = 0; e < c.edge_count(); ++e) {
    auto [t0, le0] = c.edge_reps()[e];
    std::vector<long long> row(F, 0);
    int t = t0;
    auto [a, b] = kTetEdges[le0];
    int a0 = a, b0 = b;
    // exit through the face omitting p (one of the two non-edge locals)
    int p = -1, q = -1;
    for (int v = 0; v < 4; ++v) if (v != a0 && v != b0) (p < 0 ? p : q) = v;
    int A = a0, B = b0, exitf = p;
    int guard = 0;
    do {
      const auto& g = c.gluing(t, exitf);
      int cls = fclass[{t, exitf}];
      int sign = (rep[cls] == std::make_pair(t, exitf)) ? 1 : -1;
      row[cls] += sign;
      int nA = g.perm[A], nB = g.perm[B], entered = g.perm[exitf];
      t = g.tet; A = nA; B = nB;
      exitf = 6 - nA - nB - entered;
      if (++guard > 10000) throw Error("h1: runaway edge walk");
    } while (!(t == t0 && A == a0 && B == b0 && exitf == p));
    rel.push_back(row);
  }
  // kill tree generators
  std::vector<int> keep;
  for (int f = 0; f < F; ++f) if (!in_tree[f]) keep.push_back(f);
  std::vector<std::vector<long long>> m;
  for (auto& r : rel) {
    std::vector<long long> row;
    for (int f : keep) row.push_back(r[f]);
    m.push_back(row);
  }
  auto smith = [](std::vector<std::vector<long long>> mm) {
    std::vector<long long> divs;
    size_t R = mm.size(), C = R ? mm[0].size() : 0;
    size_t r = 0, c0 = 0;
    while (r < R && c0 < C) {
      size_t pr = r, pc = c0; long long best = 0;
      for (size_t i = r; i < R; ++i)
        for (size_t j = c0; j < C; ++j)
          if (mm[i][j] != 0 && (best == 0 || llabs(mm[i][j]) < best)) {
            best = llabs(mm[i][j]); pr = i; pc = j;
          }
      if (best == 0) break;
      std::swap(mm[r], mm[pr]);
      for (size_t i = 0; i < R; ++i) std::swap(mm[i][c0], mm[i][pc]);
      bool again = true;
      while (again) {
        again = false;
        for (size_t i = r + 1; i < R; ++i) {
          long long qq = mm[i][c0] / mm[r][c0];
          if (qq) for (size_t j = c0; j < C; ++j) mm[i][j] -= qq * mm[r][j];
          if (mm[i][c0]) { std::swap(mm[r], mm[i]); again = true; }
        }
        for (size_t j = c0 + 1; j < C; ++j) {
          long long qq = mm[r][j] / mm[r][c0];
          if (qq) for (size_t i = r; i < R; ++i) mm[i][j] -= qq * mm[i][c0];
          if (mm[r][j]) {
            for (size_t i = 0; i < R; ++i) std::swap(mm[i][c0], mm[i][j]);
            again = true;
          }
        }
      }
      divs.push_back(llabs(mm[r][c0]));
      ++r; ++c0;
    }
    return divs;
  };
  auto divs = smith(m);
  H1 h;
  h.rank = (int)keep.size() - (int)divs.size();
  for (long long d : divs) if (d > 1) h.torsion.push_back(d);
  return h;
}
// Z/2 first Betti number from the plain chain complex (signs irrelevant).
inline int b1_mod2(const Triangulation3& c) {
  int E = c.edge_count(), V = c.vertex_count();
  auto rank2 = [](std::vector<std::vector<char>> m) {
    int R = (int)m.size(), C = R ? (int)m[0].size() : 0, rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
      int p = -1;
      for (int i = rank; i < R; ++i) if (m[i][col]) { p = i; break; }
      if (p < 0) continue;
      std::swap(m[rank], m[p]);
      for (int i = 0; i < R; ++i)
        if (i != rank && m[i][col])
          for (int j = col; j < C; ++j) m[i][j] ^= m[rank][j];
      ++rank;
    }
    return rank;
  };
  std::vector<std::vector<char>> d1(E, std::vector<char>(V, 0));
  for (int e = 0; e < E; ++e) {
    auto [t, le] = c.edge_reps()[e];
    auto [a, b] = kTetEdges[le];
    d1[e][c.vertex_class(t, a)] ^= 1;
    d1[e][c.vertex_class(t, b)] ^= 1;
  }
  std::vector<std::vector<char>> d2;
  {
    std::vector<std::vector<char>> done(c.tet_count(), std::vector<char>(4, 0));
    for (int t = 0; t < c.tet_count(); ++t)
      for (int f = 0; f < 4; ++f) {
        if (done[t][f]) continue;
        done[t][f] = 1;
        const auto& g = c.gluing(t, f);
        if (g.glued()) done[g.tet][g.perm[f]] = 1;
        std::vector<char> row(E, 0);
        int vs[3]; int m = 0;
        for (int v = 0; v < 4; ++v) if (v != f) vs[m++] = v;
        row[c.edge_class_of_pair(t, vs[0], vs[1])] ^= 1;
        row[c.edge_class_of_pair(t, vs[1], vs[2])] ^= 1;
        row[c.edge_class_of_pair(t, vs[0], vs[2])] ^= 1;
        d2.push_back(row);
      }
  }
  return E - rank2(d1) - rank2(d2);
}

}  // namespace ttn_test
