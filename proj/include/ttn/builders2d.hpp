// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <vector>

#include "ttn/surface.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// Torus as a ring of k unit squares of height one (vertical direction wraps),
// each split by a diagonal: 2k triangles.  Triangle 2i is the lower piece
// L_i = (B_i, B_{i+1}, T_{i+1}), triangle 2i+1 the upper piece
// U_i = (B_i, T_{i+1}, T_i); row T is identified with row B.  k = 1 is the
// standard two-triangle torus.
//
// Edge roles: e_i = vertical (B_i, T_i), d_i = diagonal (B_i, T_{i+1}),
// h_i = horizontal (B_i, B_{i+1}).  The horizontal edges form one canonical
// curve (the whole torus is a strip of 2k triangles around it); each single
// square is a strip of two triangles around a vertical curve.
// ---------------------------------------------------------------------------
inline SurfaceComplex torus_grid(int k) {
  if (k < 1) throw Error("torus_grid: k must be >= 1");
  std::vector<std::array<SurfaceGluing, 3>> glu(2 * k);
  auto L = [&](int i) { return 2 * ((i % k + k) % k); };
  auto U = [&](int i) { return 2 * ((i % k + k) % k) + 1; };
  for (int i = 0; i < k; ++i) {
    // d_i: L_i.1 <-> U_i.2 ; h_i: L_i.2 <-> U_i.0 ; e_{i+1}: L_i.0 <-> U_{i+1}.1
    glu[L(i)][1] = {U(i), 2, true};
    glu[U(i)][2] = {L(i), 1, true};
    glu[L(i)][2] = {U(i), 0, true};
    glu[U(i)][0] = {L(i), 2, true};
    glu[L(i)][0] = {U(i + 1), 1, true};
    glu[U(i + 1)][1] = {L(i), 0, true};
  }
  return SurfaceComplex::from_gluings(std::move(glu));
}

/// Strip (ordered triangle list) around the horizontal curve: all 2k
/// triangles; and around the vertical curve of square `col`: that square's
/// two triangles.
inline std::vector<int> grid_horizontal_strip(int k) {
  std::vector<int> strip;
  for (int i = 0; i < k; ++i) {
    strip.push_back(2 * i + 1);  // U_i
    strip.push_back(2 * i);      // L_i
  }
  return strip;
}
inline std::vector<int> grid_vertical_strip(int /*k*/, int col = 0) {
  return {2 * col + 1, 2 * col};
}

// ---------------------------------------------------------------------------
// Auto-glue triangles given by global vertex triples; every vertex pair must
// occur on at most two edge-slots.  Orientation flags are derived from the
// vertex identification.
// ---------------------------------------------------------------------------
inline SurfaceComplex from_vertex_triangles(
    const std::vector<std::array<int, 3>>& tris) {
  int n = int(tris.size());
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_slots;
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < 3; ++s) {
      int u = tris[t][(s + 1) % 3], v = tris[t][(s + 2) % 3];
      if (u == v)
        throw Error("from_vertex_triangles: degenerate edge; use explicit "
                    "gluings for complexes with loop edges");
      edge_slots[{std::min(u, v), std::max(u, v)}].push_back({t, s});
    }
  std::vector<std::array<SurfaceGluing, 3>> glu(n);
  for (auto& [key, slots] : edge_slots) {
    if (slots.size() > 2)
      throw Error("from_vertex_triangles: edge shared by > 2 triangles");
    if (slots.size() < 2) continue;
    auto [t1, s1] = slots[0];
    auto [t2, s2] = slots[1];
    int a1 = tris[t1][(s1 + 1) % 3];
    int a2 = tris[t2][(s2 + 1) % 3];
    // Different start vertices: the slots' canonical directions oppose, so
    // the identification crosses the corner pairs (rev).
    bool rev = (a1 != a2);
    glu[t1][s1] = {t2, s2, rev};
    glu[t2][s2] = {t1, s1, rev};
  }
  return SurfaceComplex::from_gluings(std::move(glu));
}

/// Boundary of the tetrahedron: the fixed 4-triangle sphere, faces oriented
/// consistently.
inline SurfaceComplex sphere_4tri() {
  return from_vertex_triangles(
      {{{1, 2, 3}}, {{0, 3, 2}}, {{0, 1, 3}}, {{0, 2, 1}}});
}

// ---------------------------------------------------------------------------
// Minimal genus-2 surface: the octagon a b a^-1 b^-1 c d c^-1 d^-1 fanned
// into 6 triangles from one corner.  One vertex, 9 edges, chi = -2.
// ---------------------------------------------------------------------------
inline SurfaceComplex genus2_minimal() {
  std::vector<std::array<SurfaceGluing, 3>> glu(6);
  // Fan diagonals: F_j.1 <-> F_{j+1}.2 for j = 0..4.
  for (int j = 0; j < 5; ++j) {
    glu[j][1] = {j + 1, 2, true};
    glu[j + 1][2] = {j, 1, true};
  }
  // Boundary word pairings (all orientation-reversing): positions of the
  // octagon edges E_0..E_7 in the fan.
  auto pair = [&](int ta, int sa, int tb, int sb) {
    glu[ta][sa] = {tb, sb, true};
    glu[tb][sb] = {ta, sa, true};
  };
  pair(0, 2, 1, 0);  // E0 = a  with E2 = a^-1
  pair(0, 0, 2, 0);  // E1 = b  with E3 = b^-1
  pair(3, 0, 5, 0);  // E4 = c  with E6 = c^-1
  pair(4, 0, 5, 1);  // E5 = d  with E7 = d^-1
  return SurfaceComplex::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// Genus-g builder.  g = 0 is the 4-triangle sphere and g = 1 the 2-triangle
// torus; for g >= 2 the surface is a chain of g torus segments (a k = 4 grid
// torus with one or two triangles deleted) glued hole circle to hole circle.
// The chain admits a sweep ordering with exactly two caps, emitted when
// `two_cap` is set: each triangle but the first has an earlier edge-neighbor
// and each but the last a later one, and every edge is placed strictly
// between its two triangles.
// ---------------------------------------------------------------------------
struct BuiltSurface {
  SurfaceComplex complex;
  std::vector<OrderingElement> two_cap_ordering;
};

inline BuiltSurface build_genus_g_surface(int g, bool two_cap = false) {
  if (g < 0) throw Error("build_genus_g_surface: negative genus");
  BuiltSurface out;
  std::vector<int> tri_order;
  if (g == 0) {
    out.complex = sphere_4tri();
    tri_order = {0, 1, 2, 3};
  } else if (g == 1) {
    out.complex = torus_grid(1);
    tri_order = {0, 1};
  } else {
    // Segment = grid(4) with U_0 (hole A, glued to the previous segment)
    // and/or L_2 (hole B, glued to the next) deleted.  Local grid indices:
    // L_i = 2i, U_i = 2i+1.
    const int K = 4;
    SurfaceComplex grid = torus_grid(K);
    struct Seg {
      bool del_U0, del_L2;
      std::vector<int> local_order;  // sweep order in local indices
    };
    auto U = [](int i) { return 2 * i + 1; };
    auto L = [](int i) { return 2 * i; };
    std::vector<Seg> segs(g);
    for (int f = 0; f < g; ++f) {
      bool first = (f == 0), last = (f == g - 1);
      Seg s;
      s.del_U0 = !first;
      s.del_L2 = !last;
      if (first && last) throw Error("unreachable");
      if (first)
        s.local_order = {U(0), L(0), L(3), U(1), L(1), U(2), U(3)};
      else if (last)
        s.local_order = {L(0), L(3), U(1), L(1), U(2), L(2), U(3)};
      else
        s.local_order = {L(3), L(0), U(1), L(1), U(2), U(3)};
      segs[f] = s;
    }
    // Assemble: copy each segment's surviving triangles with fresh indices.
    std::vector<std::array<SurfaceGluing, 3>> glu;
    std::vector<std::vector<int>> remap(g, std::vector<int>(2 * K, -1));
    for (int f = 0; f < g; ++f) {
      for (int t = 0; t < 2 * K; ++t) {
        if ((segs[f].del_U0 && t == U(0)) || (segs[f].del_L2 && t == L(2)))
          continue;
        remap[f][t] = int(glu.size());
        glu.push_back({});
      }
    }
    for (int f = 0; f < g; ++f)
      for (int t = 0; t < 2 * K; ++t) {
        if (remap[f][t] < 0) continue;
        for (int s = 0; s < 3; ++s) {
          const auto& gl = grid.gluing(t, s);
          if (remap[f][gl.tri] < 0) continue;  // faces a hole; filled below
          glu[remap[f][t]][s] = {remap[f][gl.tri], gl.slot, gl.rev};
        }
      }
    // Hole gluings between consecutive segments.  Hole B of segment f (the
    // deleted L_2, boundary slots at U_3.1, U_2.2, U_2.0) meets hole A of
    // segment f+1 (the deleted U_0, slots at L_0.2, L_3.0, L_0.1).  The two
    // circles are identified with opposite orientations; all grid gluings
    // are rev, so the hole-to-hole flags are rev as well.
    for (int f = 0; f + 1 < g; ++f) {
      // Ghost L_2 slots 0,1,2 partner with (U_3,1), (U_2,2), (U_2,0);
      // ghost U_0 slots 0,1,2 partner with (L_0,2), (L_3,0), (L_0,1).
      std::array<std::pair<int, int>, 3> holeB = {
          {{U(3), 1}, {U(2), 2}, {U(2), 0}}};
      std::array<std::pair<int, int>, 3> holeA = {
          {{L(0), 2}, {L(3), 0}, {L(0), 1}}};
      // Opposite circle orientations: pair B_0-A_0, B_1-A_2, B_2-A_1.
      const int match[3] = {0, 2, 1};
      for (int i = 0; i < 3; ++i) {
        auto [bt, bs] = holeB[i];
        auto [at, as] = holeA[match[i]];
        int tb = remap[f][bt], ta = remap[f + 1][at];
        glu[tb][bs] = {ta, as, true};
        glu[ta][as] = {tb, bs, true};
      }
    }
    out.complex = SurfaceComplex::from_gluings(std::move(glu));
    for (int f = 0; f < g; ++f)
      for (int t : segs[f].local_order) tri_order.push_back(remap[f][t]);
  }
  if (two_cap) {
    std::vector<char> edge_seen(out.complex.edge_count(), 0);
    for (int t : tri_order) {
      out.two_cap_ordering.push_back({true, t});
      for (int s = 0; s < 3; ++s) {
        int e = out.complex.edge_class(t, s);
        if (!edge_seen[e]) {
          edge_seen[e] = 1;
          out.two_cap_ordering.push_back({false, e});
        }
      }
    }
  }
  return out;
}

}  // namespace ttn
