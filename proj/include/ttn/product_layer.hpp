// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "ttn/surface.hpp"
#include "ttn/tri3.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// Product layer: a triangulation of (surface) x [0,1] by three tetrahedra
// per triangle (the staircase prisms).  The staircase over a triangle needs
// a total order of its three corners, and two triangles sharing an edge must
// order the shared corners compatibly (that fixes the diagonal of the square
// face between the prisms).  Degenerate triangles (repeated vertex classes)
// are fine: orders live on corners, not classes.  The order assignment is
// found by backtracking.
// ---------------------------------------------------------------------------
struct ProductLayer {
  std::vector<std::array<Tet3Gluing, 4>> tets;
  // Per surface triangle: the bottom and top face, with corner maps
  // (surface corner index -> tetrahedron local vertex).
  struct Face {
    int tet = -1, face = -1;
    std::array<int, 3> corner_to_local{};
  };
  std::vector<Face> bottom, top;
};

namespace detail {

// corner orders as permutations pi: rank -> corner index
inline constexpr std::array<std::array<int, 3>, 6> kCornerOrders = {
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

inline bool orders_compatible(const SurfaceComplex& s, int t, int ord_t,
                              int u, int ord_u) {
  // For every glued edge between t and u (possibly two), the corner pairs
  // must be ordered the same way on both sides.
  const auto& pi_t = kCornerOrders[ord_t];
  const auto& pi_u = kCornerOrders[ord_u];
  auto rank = [](const std::array<int, 3>& pi, int corner) {
    for (int r = 0; r < 3; ++r)
      if (pi[r] == corner) return r;
    return -1;
  };
  for (int sl = 0; sl < 3; ++sl) {
    const auto& g = s.gluing(t, sl);
    if (!g.glued() || g.tri != u) continue;
    int c1 = (sl + 1) % 3, c2 = (sl + 2) % 3;
    int d1 = (g.slot + 1) % 3, d2 = (g.slot + 2) % 3;
    if (g.rev) std::swap(d1, d2);
    bool here = rank(pi_t, c1) < rank(pi_t, c2);
    bool there = rank(pi_u, d1) < rank(pi_u, d2);
    if (here != there) return false;
  }
  return true;
}

}  // namespace detail

inline ProductLayer build_product_layer(const SurfaceComplex& s) {
  if (!s.is_closed())
    throw PreconditionError("product layer: surface must be closed");
  int n = s.triangle_count();
  // Assign corner orders by backtracking.
  std::vector<int> order(n, -1);
  {
    auto consistent = [&](int tt) {
      for (int sl = 0; sl < 3; ++sl) {
        const auto& g = s.gluing(tt, sl);
        if (!g.glued() || g.tri == tt || order[g.tri] < 0) continue;
        if (!detail::orders_compatible(s, tt, order[tt], g.tri, order[g.tri]))
          return false;
      }
      // Self-gluings constrain one triangle's own order.
      for (int sl = 0; sl < 3; ++sl) {
        const auto& g = s.gluing(tt, sl);
        if (g.glued() && g.tri == tt &&
            !detail::orders_compatible(s, tt, order[tt], tt, order[tt]))
          return false;
      }
      return true;
    };
    int pos = 0;
    while (pos >= 0 && pos < n) {
      bool advanced = false;
      for (int cand = order[pos] + 1; cand < 6; ++cand) {
        order[pos] = cand;
        if (consistent(pos)) {
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        order[pos] = -1;
        --pos;
      } else {
        ++pos;
      }
    }
    if (pos < 0)
      throw Error("product layer: no compatible corner orders exist");
  }

  // Prism over triangle t with corner order pi: vertices (corner, level);
  // tets: P0 = (b0, b1, b2, t2), P1 = (b0, b1, t1, t2), P2 = (b0, t0, t1, t2)
  // where bi/ti are the bottom/top copies of the rank-i corner.
  ProductLayer out;
  out.tets.assign(3 * n, {});
  out.bottom.resize(n);
  out.top.resize(n);
  struct Vtx {
    int corner, level;
  };
  auto tet_vertices = [&](int t, int piece) {
    const auto& pi = detail::kCornerOrders[order[t]];
    std::array<Vtx, 4> v{};
    if (piece == 0)
      v = {Vtx{pi[0], 0}, Vtx{pi[1], 0}, Vtx{pi[2], 0}, Vtx{pi[2], 1}};
    else if (piece == 1)
      v = {Vtx{pi[0], 0}, Vtx{pi[1], 0}, Vtx{pi[1], 1}, Vtx{pi[2], 1}};
    else
      v = {Vtx{pi[0], 0}, Vtx{pi[0], 1}, Vtx{pi[1], 1}, Vtx{pi[2], 1}};
    return v;
  };
  auto glue = [&](int t1, int f1, int t2, const Perm4& p) {
    out.tets[t1][f1] = Tet3Gluing{t2, p};
    out.tets[t2][p[f1]] = Tet3Gluing{t1, perm4_inverse(p)};
  };
  // Find the face of a prism piece whose vertex set matches `want` (as
  // (corner, level) descriptors); returns (tet index, face slot, and the
  // local index of each wanted vertex).
  auto find_face = [&](int t, const std::array<Vtx, 3>& want,
                       std::array<int, 3>& locals) -> std::pair<int, int> {
    for (int piece = 0; piece < 3; ++piece) {
      auto verts = tet_vertices(t, piece);
      for (int f = 0; f < 4; ++f) {
        bool ok = true;
        std::array<int, 3> loc{};
        for (int w = 0; w < 3; ++w) {
          int found = -1;
          for (int v = 0; v < 4; ++v) {
            if (v == f) continue;
            if (verts[v].corner == want[w].corner &&
                verts[v].level == want[w].level) {
              found = v;
              break;
            }
          }
          if (found < 0) {
            ok = false;
            break;
          }
          loc[w] = found;
        }
        // All three found and distinct?
        if (ok && loc[0] != loc[1] && loc[1] != loc[2] && loc[0] != loc[2]) {
          locals = loc;
          return {3 * t + piece, f};
        }
      }
    }
    throw Error("product layer: prism face lookup failed");
  };

  for (int t = 0; t < n; ++t) {
    const auto& pi = detail::kCornerOrders[order[t]];
    int P0 = 3 * t, P1 = 3 * t + 1, P2 = 3 * t + 2;
    // Intra-prism gluings: P0 face {b0,b1,t2} <-> P1, P1 face {b0,t1,t2}
    // <-> P2.  Vertices are at the same descriptors, so map by matching.
    auto v0 = tet_vertices(t, 0), v1 = tet_vertices(t, 1),
         v2 = tet_vertices(t, 2);
    auto match_perm = [&](const std::array<Vtx, 4>& from, int omit_from,
                          const std::array<Vtx, 4>& to, int omit_to) {
      Perm4 p{};
      p[omit_from] = omit_to;
      for (int i = 0; i < 4; ++i) {
        if (i == omit_from) continue;
        int found = -1;
        for (int j = 0; j < 4; ++j) {
          if (j == omit_to) continue;
          if (to[j].corner == from[i].corner && to[j].level == from[i].level)
            found = j;
        }
        if (found < 0) throw Error("product layer: intra-prism mismatch");
        p[i] = found;
      }
      return p;
    };
    // P0's face omitting b2 is {b0, b1, t2}; P1's omitting t1 is the same.
    glue(P0, 2, P1, match_perm(v0, 2, v1, 2));
    // P1's face omitting b1 is {b0, t1, t2}; P2's omitting t0 matches.
    glue(P1, 1, P2, match_perm(v1, 1, v2, 1));
    // Bottom face of the prism: {b0, b1, b2} = P0 omitting t2 (local 3).
    {
      std::array<int, 3> locals{};
      std::array<Vtx, 3> want = {Vtx{0, 0}, Vtx{1, 0}, Vtx{2, 0}};
      auto [tet, face] = find_face(t, want, locals);
      out.bottom[t] = {tet, face, locals};
    }
    {
      std::array<int, 3> locals{};
      std::array<Vtx, 3> want = {Vtx{0, 1}, Vtx{1, 1}, Vtx{2, 1}};
      auto [tet, face] = find_face(t, want, locals);
      out.top[t] = {tet, face, locals};
    }
    (void)pi;
  }
  // Inter-prism gluings across each glued surface edge: the square over the
  // edge is split into a lower triangle {b_u, b_v, t_later} and an upper
  // one {b_earlier, t_u, t_v}; both prisms contain each piece once.
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& sd = s.edge_sides()[e];
    if (sd.boundary()) continue;
    int t1 = sd.tri_a, s1 = sd.slot_a, t2 = sd.tri_b, s2 = sd.slot_b;
    const auto& g = s.gluing(t1, s1);
    int c1 = (s1 + 1) % 3, c2 = (s1 + 2) % 3;
    int d1 = (g.slot + 1) % 3, d2 = (g.slot + 2) % 3;
    if (g.rev) std::swap(d1, d2);
    // corner correspondence: (t1,c1) ~ (t2,d1); (t1,c2) ~ (t2,d2)
    const auto& pi1 = detail::kCornerOrders[order[t1]];
    auto rank = [](const std::array<int, 3>& pi, int corner) {
      for (int r = 0; r < 3; ++r)
        if (pi[r] == corner) return r;
      return -1;
    };
    int early1 = rank(pi1, c1) < rank(pi1, c2) ? c1 : c2;
    int late1 = early1 == c1 ? c2 : c1;
    int early2 = early1 == c1 ? d1 : d2;
    int late2 = early1 == c1 ? d2 : d1;
    // Lower piece: {b_early, b_late, t_late}; upper: {b_early, t_early,
    // t_late}.
    for (int half = 0; half < 2; ++half) {
      std::array<Vtx, 3> want1, want2;
      if (half == 0) {
        want1 = {Vtx{early1, 0}, Vtx{late1, 0}, Vtx{late1, 1}};
        want2 = {Vtx{early2, 0}, Vtx{late2, 0}, Vtx{late2, 1}};
      } else {
        want1 = {Vtx{early1, 0}, Vtx{early1, 1}, Vtx{late1, 1}};
        want2 = {Vtx{early2, 0}, Vtx{early2, 1}, Vtx{late2, 1}};
      }
      std::array<int, 3> loc1{}, loc2{};
      auto [tet1, face1] = find_face(t1, want1, loc1);
      auto [tet2, face2] = find_face(t2, want2, loc2);
      if (out.tets[tet1][face1].glued()) continue;  // already glued
      Perm4 p{};
      p[face1] = face2;
      for (int w = 0; w < 3; ++w) p[loc1[w]] = loc2[w];
      glue(tet1, face1, tet2, p);
    }
  }
  return out;
}

}  // namespace ttn
