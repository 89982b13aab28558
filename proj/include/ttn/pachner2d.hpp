// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ttn/surface.hpp"

namespace ttn {

namespace detail {

struct SlotRef {
  int tri = -1, slot = -1;
  bool operator==(const SlotRef& o) const {
    return tri == o.tri && slot == o.slot;
  }
};

// Re-glue a set of relocated edge-slots.  `old_pos[i]` moves to `new_pos[i]`
// with `toggle[i]` telling whether the slot's canonical direction flipped.
// Partners inside the relocated set are linked pairwise; outside partners get
// their back-pointers updated.  Boundary slots stay boundary.
inline void reglue_moved_slots(
    std::vector<std::array<SurfaceGluing, 3>>& glu,
    const std::vector<SlotRef>& old_pos, const std::vector<SlotRef>& new_pos,
    const std::vector<bool>& toggle,
    const std::vector<SurfaceGluing>& old_gluing) {
  size_t m = old_pos.size();
  std::vector<char> done(m, 0);
  for (size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    const SurfaceGluing& g = old_gluing[i];
    if (!g.glued()) {
      glu[new_pos[i].tri][new_pos[i].slot] = SurfaceGluing{};
      done[i] = 1;
      continue;
    }
    // Is the partner one of the moved slots?
    int j = -1;
    for (size_t k = 0; k < m; ++k)
      if (old_pos[k] == SlotRef{g.tri, g.slot}) j = int(k);
    if (j >= 0) {
      bool rev = g.rev ^ toggle[i] ^ toggle[j];
      glu[new_pos[i].tri][new_pos[i].slot] =
          SurfaceGluing{new_pos[j].tri, new_pos[j].slot, rev};
      glu[new_pos[j].tri][new_pos[j].slot] =
          SurfaceGluing{new_pos[i].tri, new_pos[i].slot, rev};
      done[i] = done[size_t(j)] = 1;
    } else {
      bool rev = g.rev ^ toggle[i];
      glu[new_pos[i].tri][new_pos[i].slot] = SurfaceGluing{g.tri, g.slot, rev};
      glu[g.tri][g.slot] =
          SurfaceGluing{new_pos[i].tri, new_pos[i].slot, rev};
      done[i] = 1;
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// pachner22: flip the edge given by one of its sides (t, s).  The edge's two
// sides must lie in distinct triangles.  Triangle indices t and u are reused
// for the two new triangles.
// ---------------------------------------------------------------------------
inline SurfaceComplex pachner22(const SurfaceComplex& c, int t, int s) {
  const SurfaceGluing& g = c.gluing(t, s);
  if (!g.glued())
    throw PreconditionError("2-2 move: edge is a boundary edge");
  if (g.tri == t)
    throw PreconditionError("2-2 move: edge sides are not distinct triangles");
  int u = g.tri, r = g.slot;
  bool R = g.rev;
  int b = (s + 1) % 3, cc = (s + 2) % 3;
  int bp = (r + 1) % 3, cp = (r + 2) % 3;
  int x = R ? cp : bp;  // u's corner identified with t's corner b
  int y = R ? bp : cp;  // u's corner identified with t's corner cc

  // Quad letters: A = apex of t, B/C = shared edge endpoints, D = apex of u.
  enum { A = 0, B = 1, C = 2, D = 3 };
  auto u_letter = [&](int corner) { return corner == r ? D
                                    : corner == x     ? B
                                                      : C; };
  using detail::SlotRef;
  std::vector<SlotRef> old_pos = {
      {t, cc}, {t, b}, {u, y}, {u, x}};  // AB, CA, BD, DC
  std::vector<std::pair<int, int>> old_dir = {
      {A, B},
      {C, A},
      {u_letter((y + 1) % 3), u_letter((y + 2) % 3)},
      {u_letter((x + 1) % 3), u_letter((x + 2) % 3)}};
  // New triangles: t' = (A, B, D), u' = (A, D, C).
  std::vector<SlotRef> new_pos = {{t, 2}, {u, 1}, {t, 0}, {u, 0}};
  std::vector<std::pair<int, int>> new_dir = {{A, B}, {C, A}, {B, D}, {D, C}};
  std::vector<bool> toggle(4);
  for (int i = 0; i < 4; ++i) {
    if (old_dir[i] == new_dir[i])
      toggle[i] = false;
    else if (old_dir[i].first == new_dir[i].second &&
             old_dir[i].second == new_dir[i].first)
      toggle[i] = true;
    else
      throw Error("2-2 move: internal corner bookkeeping failure");
  }
  std::vector<SurfaceGluing> old_gluing;
  for (auto& p : old_pos) old_gluing.push_back(c.gluing(p.tri, p.slot));

  auto glu = c.gluings();
  glu[t] = {};
  glu[u] = {};
  // New diagonal A-D: t'.slot1 (D->A) against u'.slot2 (A->D).
  glu[t][1] = SurfaceGluing{u, 2, true};
  glu[u][2] = SurfaceGluing{t, 1, true};
  detail::reglue_moved_slots(glu, old_pos, new_pos, toggle, old_gluing);
  return SurfaceComplex::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// pachner13: subdivide triangle t at a new interior vertex.  Triangle t is
// reused for the piece carrying t's slot-0 edge; the two other pieces are
// appended.  Each piece N_k keeps old slot k's edge at its slot 2.
// ---------------------------------------------------------------------------
inline SurfaceComplex pachner13(const SurfaceComplex& c, int t) {
  if (t < 0 || t >= c.triangle_count())
    throw PreconditionError("1-3 move: no such triangle");
  int n = c.triangle_count();
  std::array<int, 3> piece = {t, n, n + 1};  // N_0, N_1, N_2

  using detail::SlotRef;
  std::vector<SlotRef> old_pos, new_pos;
  std::vector<bool> toggle;
  std::vector<SurfaceGluing> old_gluing;
  for (int k = 0; k < 3; ++k) {
    old_pos.push_back({t, k});
    new_pos.push_back({piece[k], 2});
    toggle.push_back(false);  // same corner order along the outer edge
    old_gluing.push_back(c.gluing(t, k));
  }

  auto glu = c.gluings();
  glu[t] = {};
  glu.push_back({});
  glu.push_back({});
  // Internal spokes: N_k.slot0 against N_{k+1}.slot1, opposite directions.
  for (int k = 0; k < 3; ++k) {
    int nk = piece[k], nk1 = piece[(k + 1) % 3];
    glu[nk][0] = SurfaceGluing{nk1, 1, true};
    glu[nk1][1] = SurfaceGluing{nk, 0, true};
  }
  detail::reglue_moved_slots(glu, old_pos, new_pos, toggle, old_gluing);
  return SurfaceComplex::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// pachner31: collapse the degree-3 interior vertex at corner `corner` of
// triangle t.  The three triangles around the vertex must be distinct.
// ---------------------------------------------------------------------------
inline SurfaceComplex pachner31(const SurfaceComplex& c, int t, int corner) {
  struct Around {
    int tri, ocorner;   // triangle and the corner at the collapsing vertex
    int entry, exit;    // slots at the vertex: entry edge and exit edge
  };
  std::vector<Around> cyc;
  int cur_t = t, cur_c = corner;
  int exit_slot = (corner + 1) % 3;
  for (int step = 0; step < 3; ++step) {
    cyc.push_back({cur_t, cur_c, (exit_slot == (cur_c + 1) % 3)
                                     ? (cur_c + 2) % 3
                                     : (cur_c + 1) % 3,
                   exit_slot});
    const SurfaceGluing& g = c.gluing(cur_t, exit_slot);
    if (!g.glued())
      throw PreconditionError("3-1 move: vertex lies on the boundary");
    // Where does the collapsing vertex land in the partner?
    int c1 = (exit_slot + 1) % 3, c2 = (exit_slot + 2) % 3;
    int d1 = (g.slot + 1) % 3, d2 = (g.slot + 2) % 3;
    if (g.rev) std::swap(d1, d2);
    int image = (cur_c == c1) ? d1 : d2;
    int in_slot = g.slot;
    cur_t = g.tri;
    cur_c = image;
    // Continue around: leave through the other vertex edge.
    exit_slot = ((cur_c + 1) % 3 == in_slot) ? (cur_c + 2) % 3
                                             : (cur_c + 1) % 3;
  }
  if (cur_t != t || cur_c != corner)
    throw PreconditionError("3-1 move: vertex degree is not 3");
  if (cyc[0].tri == cyc[1].tri || cyc[1].tri == cyc[2].tri ||
      cyc[0].tri == cyc[2].tri)
    throw PreconditionError("3-1 move: triangles around vertex not distinct");
  // Also demand exactly three corner incidences at the vertex class.
  if (c.vertex_degree(c.vertex_class(t, corner)) != 3)
    throw PreconditionError("3-1 move: vertex degree is not 3");

  // Rim letters: w_i = non-vertex corner on the entry edge of T_i; the outer
  // edge of T_i runs w_i -> w_{i+1}.
  using detail::SlotRef;
  std::vector<SlotRef> old_pos(3);
  std::vector<std::pair<int, int>> old_dir(3);
  for (int i = 0; i < 3; ++i) {
    const Around& a = cyc[i];
    int outer = a.ocorner;
    old_pos[i] = {a.tri, outer};
    // Canonical direction of slot `outer`: (outer+1)%3 -> (outer+2)%3.
    // The entry edge holds corners {ocorner, w_i}; the exit edge holds
    // {ocorner, w_{i+1}}.
    int wc_in = 3 - a.entry - a.ocorner;
    int wc_out = 3 - a.exit - a.ocorner;
    if ((outer + 1) % 3 == wc_in)
      old_dir[i] = {i, (i + 1) % 3};  // runs w_i -> w_{i+1}
    else if ((outer + 1) % 3 == wc_out)
      old_dir[i] = {(i + 1) % 3, i};  // runs w_{i+1} -> w_i
    else
      throw Error("3-1 move: internal corner bookkeeping failure");
  }
  // New triangle reuses index t with corners (w_0, w_1, w_2); its slot k
  // runs w_{k+1} -> w_{k+2}.
  int t0 = cyc[0].tri;
  std::vector<SlotRef> new_pos = {{t0, 2}, {t0, 0}, {t0, 1}};
  std::vector<std::pair<int, int>> new_dir = {{0, 1}, {1, 2}, {2, 0}};
  std::vector<bool> toggle(3);
  for (int i = 0; i < 3; ++i) {
    if (old_dir[i] == new_dir[i])
      toggle[i] = false;
    else if (old_dir[i].first == new_dir[i].second &&
             old_dir[i].second == new_dir[i].first)
      toggle[i] = true;
    else
      throw Error("3-1 move: rim direction bookkeeping failure");
  }
  std::vector<SurfaceGluing> old_gluing;
  for (auto& p : old_pos) old_gluing.push_back(c.gluing(p.tri, p.slot));

  // Rebuild with T_1, T_2 removed.
  int dead1 = cyc[1].tri, dead2 = cyc[2].tri;
  int n = c.triangle_count();
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (i != dead1 && i != dead2) remap[i] = next++;
  std::vector<std::array<SurfaceGluing, 3>> glu(n - 2);
  for (int i = 0; i < n; ++i) {
    if (remap[i] < 0 || i == t0) continue;
    for (int s2 = 0; s2 < 3; ++s2) {
      const auto& g = c.gluing(i, s2);
      if (!g.glued())
        glu[remap[i]][s2] = SurfaceGluing{};
      else
        glu[remap[i]][s2] = SurfaceGluing{remap[g.tri], g.slot, g.rev};
    }
  }
  glu[remap[t0]] = {};
  // Remap the moved-slot table into post-removal indices.
  for (auto& p : old_pos) p.tri = remap[p.tri];
  for (auto& p : new_pos) p.tri = remap[p.tri];
  for (auto& g : old_gluing)
    if (g.glued()) g.tri = remap[g.tri];
  // The moved slots' outside partners were copied with stale back-pointers
  // into dead triangles only if they pointed at moved slots; reglue fixes
  // the back-pointers it touches, and dead rows are gone entirely.
  detail::reglue_moved_slots(glu, old_pos, new_pos, toggle, old_gluing);
  return SurfaceComplex::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// insert_cap_disk: attach the three-triangle cap-forcing disk (four interior
// edges, one exterior loop edge) at vertex 0 of triangle t.  The disk hangs
// at a wedge point, so the Euler characteristic and the edge graph of the
// host are unchanged; the disk's exterior edge stays free, matching the one
// exterior edge of the disk.  Any contraction ordering must spend at least
// one extra cap inside the disk.
// ---------------------------------------------------------------------------
inline SurfaceComplex insert_cap_disk(const SurfaceComplex& c, int t) {
  if (t < 0 || t >= c.triangle_count())
    throw PreconditionError("insert_cap_disk: no such triangle");
  auto glu = c.gluings();
  int n = int(glu.size());
  int d0 = n, d1 = n + 1, d2 = n + 2;
  glu.push_back({});
  glu.push_back({});
  glu.push_back({});
  // Folded subdivided triangle: corners (O, A, B), (O, B, C), (O, C, A);
  // spokes glued in a ring, outer AB glued to outer BC (identifying A with
  // C), outer CA left free: a disk whose whole boundary is one loop edge.
  glu[d0][1] = SurfaceGluing{d1, 2, true};
  glu[d1][2] = SurfaceGluing{d0, 1, true};
  glu[d1][1] = SurfaceGluing{d2, 2, true};
  glu[d2][2] = SurfaceGluing{d1, 1, true};
  glu[d2][1] = SurfaceGluing{d0, 2, true};
  glu[d0][2] = SurfaceGluing{d2, 1, true};
  glu[d0][0] = SurfaceGluing{d1, 0, true};  // the fold
  glu[d1][0] = SurfaceGluing{d0, 0, true};
  auto pinches = c.pinches();
  // Wedge the disk's boundary vertex {A ~ C} (corner 2 of d2) onto vertex 0
  // of the given triangle.
  pinches.push_back({t, 0, d2, 2});
  return SurfaceComplex::from_gluings(std::move(glu), std::move(pinches));
}

}  // namespace ttn
