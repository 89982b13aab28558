// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "ttn/tri3.hpp"

namespace ttn {

namespace detail {

// A face slot that moved during a 3D move: the slot's content at
// (old_tet, old_face) re-attaches at (new_tet, new_face), with `vmap`
// mapping the new tetrahedron's local vertices to the old one's (the
// omitted vertices correspond as well).
struct MovedFace {
  int old_tet, old_face;
  int new_tet, new_face;
  Perm4 vmap;
};

inline void reglue_moved_faces(std::vector<std::array<Tet3Gluing, 4>>& glu,
                               const std::vector<MovedFace>& moved,
                               const std::vector<Tet3Gluing>& old_gluing) {
  size_t m = moved.size();
  std::vector<char> done(m, 0);
  for (size_t i = 0; i < m; ++i) {
    if (done[i]) continue;
    const Tet3Gluing& g = old_gluing[i];
    if (!g.glued()) {
      glu[moved[i].new_tet][moved[i].new_face] = Tet3Gluing{};
      done[i] = 1;
      continue;
    }
    int partner_tet = g.tet, partner_face = g.perm[moved[i].old_face];
    int j = -1;
    for (size_t k = 0; k < m; ++k)
      if (moved[k].old_tet == partner_tet && moved[k].old_face == partner_face)
        j = int(k);
    if (j >= 0) {
      // new_i -> old_i -> old_j -> new_j
      Perm4 p = perm4_compose(perm4_inverse(moved[j].vmap),
                              perm4_compose(g.perm, moved[i].vmap));
      glu[moved[i].new_tet][moved[i].new_face] =
          Tet3Gluing{moved[j].new_tet, p};
      glu[moved[j].new_tet][moved[j].new_face] =
          Tet3Gluing{moved[i].new_tet, perm4_inverse(p)};
      done[i] = done[size_t(j)] = 1;
    } else {
      Perm4 p = perm4_compose(g.perm, moved[i].vmap);
      glu[moved[i].new_tet][moved[i].new_face] = Tet3Gluing{partner_tet, p};
      glu[partner_tet][partner_face] =
          Tet3Gluing{moved[i].new_tet, perm4_inverse(p)};
      done[i] = 1;
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// pachner23: replace two distinct tetrahedra glued along face (t1, f) by
// three tetrahedra around a new edge joining the two apexes.
// ---------------------------------------------------------------------------
inline Triangulation3 pachner23(const Triangulation3& c, int t1, int f) {
  const Tet3Gluing& g = c.gluing(t1, f);
  if (!g.glued()) throw PreconditionError("2-3 move: face is on the boundary");
  if (g.tet == t1)
    throw PreconditionError("2-3 move: the two sides are the same tet");
  int t2 = g.tet;
  Perm4 p = g.perm;
  std::array<int, 3> F{};
  {
    int k = 0;
    for (int v = 0; v < 4; ++v)
      if (v != f) F[k++] = v;
  }
  auto glu = c.gluings();
  glu[t1] = {};
  glu[t2] = {};
  glu.push_back({});
  std::array<int, 3> ntet = {t1, t2, int(glu.size()) - 1};

  // N_k spans {A1, A2, u, v} with {u, v} = F minus F[k] (ascending);
  // locals: 0 = A1 (t1's apex), 1 = A2 (t2's apex), 2 = u, 3 = v.
  auto pair_of = [&](int k) {
    std::array<int, 2> uv{};
    int m = 0;
    for (int w : F)
      if (w != F[k]) uv[m++] = w;
    return uv;
  };
  auto local_of = [&](int k, int vertex) {
    auto uv = pair_of(k);
    if (vertex == uv[0]) return 2;
    if (vertex == uv[1]) return 3;
    throw Error("2-3 move: vertex not in pair");
  };
  // Internal gluings: N_k and N_k' share {A1, A2, m}, m = F minus both.
  for (int k = 0; k < 3; ++k)
    for (int k2 = k + 1; k2 < 3; ++k2) {
      int m = -1;
      for (int w : F)
        if (w != F[k] && w != F[k2]) m = w;
      Perm4 q{};
      q[0] = 0;
      q[1] = 1;
      q[local_of(k, m)] = local_of(k2, m);
      q[local_of(k, F[k2])] = local_of(k2, F[k]);
      glu[ntet[k]][local_of(k, F[k2])] = Tet3Gluing{ntet[k2], q};
      glu[ntet[k2]][local_of(k2, F[k])] =
          Tet3Gluing{ntet[k], perm4_inverse(q)};
    }
  // External faces.
  std::vector<detail::MovedFace> moved;
  std::vector<Tet3Gluing> old_gluing;
  for (int k = 0; k < 3; ++k) {
    int w = F[k];
    auto uv = pair_of(k);
    // Bottom (t1 side): old (t1, w) becomes N_k's face 1.
    Perm4 vb{};
    vb[0] = f;
    vb[1] = w;
    vb[2] = uv[0];
    vb[3] = uv[1];
    moved.push_back({t1, w, ntet[k], 1, vb});
    old_gluing.push_back(c.gluing(t1, w));
    // Top (t2 side): old (t2, p[w]) becomes N_k's face 0.
    Perm4 vt{};
    vt[1] = p[f];
    vt[0] = p[w];
    vt[2] = p[uv[0]];
    vt[3] = p[uv[1]];
    moved.push_back({t2, p[w], ntet[k], 0, vt});
    old_gluing.push_back(c.gluing(t2, p[w]));
  }
  detail::reglue_moved_faces(glu, moved, old_gluing);
  return Triangulation3::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// pachner32: collapse an interior edge of degree 3 (three distinct
// tetrahedra) back into two tetrahedra.  The edge is given by one of its
// slots (tet, local edge index 0..5).
// ---------------------------------------------------------------------------
inline Triangulation3 pachner32(const Triangulation3& c, int t, int edge) {
  int cls = c.edge_class(t, edge);
  if (c.edge_degrees()[cls] != 3)
    throw PreconditionError("3-2 move: edge degree is not 3");
  if (c.edge_on_boundary()[cls])
    throw PreconditionError("3-2 move: edge lies on the boundary");
  struct Visit {
    int tet, a1, a2, p, q;  // locals of the two apexes and the two equators
  };
  std::array<Visit, 3> cyc{};
  {
    auto [a, b] = kTetEdges[edge];
    int cur = t, A1 = a, A2 = b;
    int p0 = -1, q0 = -1;
    for (int v = 0; v < 4; ++v)
      if (v != a && v != b) (p0 < 0 ? p0 : q0) = v;
    int pp = p0, qq = q0;
    for (int i = 0; i < 3; ++i) {
      cyc[i] = {cur, A1, A2, pp, qq};
      const Tet3Gluing& gl = c.gluing(cur, pp);  // exit face omits p
      if (!gl.glued()) throw PreconditionError("3-2 move: boundary edge");
      int nA1 = gl.perm[A1], nA2 = gl.perm[A2], np = gl.perm[qq];
      cur = gl.tet;
      A1 = nA1;
      A2 = nA2;
      pp = np;
      qq = 6 - nA1 - nA2 - np;
    }
    if (cur != t || A1 != kTetEdges[edge][0] || A2 != kTetEdges[edge][1] ||
        pp != p0)
      throw PreconditionError("3-2 move: edge neighborhood is twisted");
  }
  if (cyc[0].tet == cyc[1].tet || cyc[1].tet == cyc[2].tet ||
      cyc[0].tet == cyc[2].tet)
    throw PreconditionError("3-2 move: tetrahedra around edge not distinct");

  // Equator letters: w_i is shared by t_{i-1} and t_i; in t_i's locals
  // w_i = p_i and w_{i+1} = q_i.  New tets: T_bot (apex A1) reuses
  // cyc[0].tet, T_top (apex A2) reuses cyc[1].tet; locals 0 = apex,
  // 1,2,3 = w_0,w_1,w_2.
  int bot = cyc[0].tet, top = cyc[1].tet, dead = cyc[2].tet;
  auto glu_old = c.gluings();
  std::vector<std::array<Tet3Gluing, 4>> glu(c.tet_count());
  for (int i = 0; i < c.tet_count(); ++i) glu[i] = glu_old[i];
  glu[bot] = {};
  glu[top] = {};
  glu[dead] = {};
  Perm4 ident = kPerm4Id;
  glu[bot][0] = Tet3Gluing{top, ident};
  glu[top][0] = Tet3Gluing{bot, ident};

  std::vector<detail::MovedFace> moved;
  std::vector<Tet3Gluing> old_gluing;
  for (int i = 0; i < 3; ++i) {
    const Visit& v = cyc[i];
    // t_i's pair is {w_i, w_{i+1}} = locals {p, q}; missing letter w_{i+2}.
    int missing = (i + 2) % 3;
    int wl_i = 1 + i, wl_i1 = 1 + (i + 1) % 3, wl_missing = 1 + missing;
    // Bottom face: old (t_i, a2) = {A1, p, q} -> T_bot face wl_missing.
    Perm4 vb{};
    vb[0] = v.a1;
    vb[wl_i] = v.p;
    vb[wl_i1] = v.q;
    vb[wl_missing] = v.a2;
    moved.push_back({v.tet, v.a2, bot, wl_missing, vb});
    old_gluing.push_back(c.gluing(v.tet, v.a2));
    // Top face: old (t_i, a1) -> T_top face wl_missing.
    Perm4 vt{};
    vt[0] = v.a2;
    vt[wl_i] = v.p;
    vt[wl_i1] = v.q;
    vt[wl_missing] = v.a1;
    moved.push_back({v.tet, v.a1, top, wl_missing, vt});
    old_gluing.push_back(c.gluing(v.tet, v.a1));
  }
  detail::reglue_moved_faces(glu, moved, old_gluing);
  // Drop the dead tetrahedron.
  std::vector<int> remap(c.tet_count(), -1);
  int next = 0;
  for (int i = 0; i < c.tet_count(); ++i)
    if (i != dead) remap[i] = next++;
  std::vector<std::array<Tet3Gluing, 4>> out(next);
  for (int i = 0; i < c.tet_count(); ++i) {
    if (remap[i] < 0) continue;
    for (int fc = 0; fc < 4; ++fc) {
      const auto& gg = glu[i][fc];
      if (!gg.glued())
        out[remap[i]][fc] = Tet3Gluing{};
      else
        out[remap[i]][fc] = Tet3Gluing{remap[gg.tet], gg.perm};
    }
  }
  return Triangulation3::from_gluings(std::move(out));
}

// ---------------------------------------------------------------------------
// pachner14: cone tetrahedron t from an interior point, yielding four
// tetrahedra.  Piece N_w keeps t's labels except that local w becomes the
// new vertex; t's old face w stays N_w's face w.
// ---------------------------------------------------------------------------
inline Triangulation3 pachner14(const Triangulation3& c, int t) {
  if (t < 0 || t >= c.tet_count())
    throw PreconditionError("1-4 move: no such tetrahedron");
  auto glu = c.gluings();
  glu[t] = {};
  glu.push_back({});
  glu.push_back({});
  glu.push_back({});
  int n0 = c.tet_count();
  std::array<int, 4> piece = {t, n0, n0 + 1, n0 + 2};
  for (int w = 0; w < 4; ++w)
    for (int u = 0; u < 4; ++u) {
      if (u == w) continue;
      Perm4 q = kPerm4Id;
      std::swap(q[u], q[w]);
      glu[piece[w]][u] = Tet3Gluing{piece[u], q};
    }
  std::vector<detail::MovedFace> moved;
  std::vector<Tet3Gluing> old_gluing;
  for (int w = 0; w < 4; ++w) {
    moved.push_back({t, w, piece[w], w, kPerm4Id});
    old_gluing.push_back(c.gluing(t, w));
  }
  detail::reglue_moved_faces(glu, moved, old_gluing);
  return Triangulation3::from_gluings(std::move(glu));
}

// ---------------------------------------------------------------------------
// pachner41: collapse an interior vertex of degree 4 whose star is four
// distinct tetrahedra (and whose link is a 4-triangle sphere).
// ---------------------------------------------------------------------------
inline Triangulation3 pachner41(const Triangulation3& c, int t, int v) {
  int cls = c.vertex_class(t, v);
  {
    // The star must be the standard one: the link has to be the boundary of
    // the tetrahedron combinatorially (a 4-triangle sphere with a self-glued
    // triangle, say, is not a legal 4-1 site).
    SurfaceComplex link = c.vertex_link(cls);
    if (!(link.is_closed() && link.euler_characteristic() == 2 &&
          link.triangle_count() == 4 && link.vertex_count() == 4 &&
          link.edge_count() == 6))
      throw PreconditionError(
          "4-1 move: vertex link is not the tetrahedral sphere");
    int pair_count[4][4] = {};
    for (int lt = 0; lt < 4; ++lt)
      for (int ls = 0; ls < 3; ++ls) {
        int other = link.gluing(lt, ls).tri;
        if (other == lt)
          throw PreconditionError(
              "4-1 move: vertex link is not the tetrahedral sphere");
        ++pair_count[lt][other];
      }
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b && pair_count[a][b] != 1)
          throw PreconditionError(
              "4-1 move: vertex link is not the tetrahedral sphere");
  }
  // BFS over the star, assigning each tet's outer vertices to the labels of
  // the merged tetrahedron.  psi[tet local] = merged local, -1 at the
  // collapsing vertex.
  struct Star {
    int tet, o;        // tet and the collapsing vertex's local index
    std::array<int, 4> psi;
  };
  std::vector<Star> star;
  std::vector<int> where(c.tet_count(), -1);
  {
    Star s0{t, v, {0, 1, 2, 3}};
    s0.psi[v] = -1;
    where[t] = 0;
    star.push_back(s0);
    for (size_t head = 0; head < star.size(); ++head) {
      Star cur = star[head];
      for (int u = 0; u < 4; ++u) {
        if (u == cur.o) continue;  // outer face
        const Tet3Gluing& g = c.gluing(cur.tet, u);
        if (!g.glued())
          throw PreconditionError("4-1 move: vertex lies on the boundary");
        if (where[g.tet] >= 0) continue;
        Star nxt{};
        nxt.tet = g.tet;
        nxt.o = g.perm[cur.o];
        nxt.psi = {-2, -2, -2, -2};
        nxt.psi[nxt.o] = -1;
        // Shared outer vertices carry their merged labels across; the
        // vertex opposite the crossed face takes the label this tet misses
        // (labels sum to 6, and cur.psi[u] belongs to the vertex behind
        // the crossed face, which this tet does not touch).
        int shared = 0;
        for (int w2 = 0; w2 < 4; ++w2) {
          if (w2 == u || w2 == cur.o) continue;
          nxt.psi[g.perm[w2]] = cur.psi[w2];
          shared += cur.psi[w2];
        }
        nxt.psi[g.perm[u]] = 6 - cur.psi[u] - shared;
        where[g.tet] = int(star.size());
        star.push_back(nxt);
      }
    }
  }
  if (star.size() != 4)
    throw PreconditionError("4-1 move: vertex star is not four distinct tets");

  int keep = star[0].tet;
  auto glu_all = c.gluings();
  std::vector<std::array<Tet3Gluing, 4>> glu(c.tet_count());
  for (int i = 0; i < c.tet_count(); ++i) glu[i] = glu_all[i];
  for (auto& s : star) glu[s.tet] = {};

  std::vector<detail::MovedFace> moved;
  std::vector<Tet3Gluing> old_gluing;
  for (auto& s : star) {
    // Outer face of s.tet (slot s.o) becomes the merged tet's face at the
    // label its missing outer vertex carries.
    int m = 6;  // 0+1+2+3 = 6; subtract the three assigned outer labels
    for (int w2 = 0; w2 < 4; ++w2)
      if (w2 != s.o) m -= s.psi[w2];
    Perm4 vmap{};
    for (int w2 = 0; w2 < 4; ++w2)
      if (w2 != s.o) vmap[s.psi[w2]] = w2;
    vmap[m] = s.o;
    moved.push_back({s.tet, s.o, keep, m, vmap});
    old_gluing.push_back(c.gluing(s.tet, s.o));
  }
  detail::reglue_moved_faces(glu, moved, old_gluing);
  std::vector<int> remap(c.tet_count(), -1);
  int next = 0;
  for (int i = 0; i < c.tet_count(); ++i) {
    bool dead = false;
    for (size_t k = 1; k < star.size(); ++k)
      if (star[k].tet == i) dead = true;
    if (!dead) remap[i] = next++;
  }
  std::vector<std::array<Tet3Gluing, 4>> out(next);
  for (int i = 0; i < c.tet_count(); ++i) {
    if (remap[i] < 0) continue;
    for (int fc = 0; fc < 4; ++fc) {
      const auto& gg = glu[i][fc];
      if (!gg.glued())
        out[remap[i]][fc] = Tet3Gluing{};
      else
        out[remap[i]][fc] = Tet3Gluing{remap[gg.tet], gg.perm};
    }
  }
  return Triangulation3::from_gluings(std::move(out));
}

}  // namespace ttn
