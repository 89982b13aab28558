// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ttn/builders2d.hpp"
#include "ttn/surface.hpp"
#include "ttn/tri3.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// TrackedSurface: a consistently oriented surface with stable vertex and
// edge identifiers maintained through 2-2 flips.  Each triangle stores its
// corner vertex ids (counterclockwise) and slot edge ids (slot k opposite
// corner k); glued slots are identified with opposite directions.  Each
// triangle also carries a backing record for the mapping-cylinder builders:
// either the original grid position (virtual) or a tetrahedron face.
// ---------------------------------------------------------------------------
class TrackedSurface {
 public:
  struct Backing {
    bool real = false;
    int tet = -1, face = -1;
    std::array<int, 3> corner_to_local{};  // surface corner -> tet vertex
    int grid_pos = -1;                     // virtual: original grid triangle
  };
  struct Tri {
    std::array<int, 3> vertex{};
    std::array<int, 3> edge{};
    Backing backing;
  };
  struct FlipRecord {
    int edge;                    // stable id of the flipped edge
    int tri_x, tri_y;            // the two rewired triangles
    int vA, vB, vC, vD;          // quad vertex ids: old edge B-C, new A-D
  };

  std::vector<Tri> tris;
  int next_edge = 0;
  int next_vertex = 0;

  /// Sides of an edge as (triangle, slot); an interior edge has two.
  std::vector<std::pair<int, int>> sides(int edge) const {
    std::vector<std::pair<int, int>> out;
    for (size_t t = 0; t < tris.size(); ++t)
      for (int s = 0; s < 3; ++s)
        if (tris[t].edge[s] == edge) out.push_back({int(t), s});
    return out;
  }

  /// 2-2 flip of an interior edge; triangle ids are reused.  When
  /// `attach_to` is given, a tetrahedron realizing the flip is appended to
  /// it, glued along the two old faces, and the backings move to the two
  /// new exposed faces.  `bottom` records the first covering of virtual
  /// faces.
  FlipRecord flip(int edge,
                  std::vector<std::array<Tet3Gluing, 4>>* attach_to = nullptr,
                  std::map<int, Backing>* bottom = nullptr) {
    auto sd = sides(edge);
    if (sd.size() != 2)
      throw PreconditionError("flip: edge is not interior");
    auto [X, sx] = sd[0];
    auto [Y, sy] = sd[1];
    if (X == Y)
      throw PreconditionError("flip: edge sides are not distinct triangles");
    Tri ox = tris[X], oy = tris[Y];
    int bX = (sx + 1) % 3, cX = (sx + 2) % 3;
    int bY = (sy + 1) % 3, cY = (sy + 2) % 3;
    // Opposite-direction identification: X corner bX ~ Y corner cY, and
    // X corner cX ~ Y corner bY.
    if (ox.vertex[bX] != oy.vertex[cY] || ox.vertex[cX] != oy.vertex[bY])
      throw Error("flip: corner identification out of sync");
    int A = ox.vertex[sx], B = ox.vertex[bX], C = ox.vertex[cX],
        D = oy.vertex[sy];

    int ntet = -1;
    if (attach_to) {
      // Tetrahedron locals: 0 = A, 1 = D, 2 = B, 3 = C.  Face 1 = (A,B,C)
      // is the old X, face 0 = (D,B,C) the old Y; faces 3 = (A,D,B) and
      // 2 = (A,D,C) become the flipped surface triangles.
      ntet = int(attach_to->size());
      attach_to->push_back({});
      auto glue_down = [&](const Backing& bk, int nface,
                           std::array<std::pair<int, int>, 3> corner_roles) {
        // corner_roles: (surface corner in the old triangle, tet local).
        if (bk.real) {
          Perm4 p{};
          p[nface == 1 ? 1 : 0] = bk.face;
          for (auto [corner, local] : corner_roles)
            p[local] = bk.corner_to_local[corner];
          (*attach_to)[ntet][nface] = Tet3Gluing{bk.tet, p};
          (*attach_to)[bk.tet][bk.face] = Tet3Gluing{ntet, perm4_inverse(p)};
        } else {
          Backing rec;
          rec.real = true;
          rec.tet = ntet;
          rec.face = nface;
          for (auto [corner, local] : corner_roles)
            rec.corner_to_local[corner] = local;
          rec.grid_pos = bk.grid_pos;
          if (bottom) (*bottom)[bk.grid_pos] = rec;
        }
      };
      glue_down(ox.backing, 1, {{{sx, 0}, {bX, 2}, {cX, 3}}});
      glue_down(oy.backing, 0, {{{sy, 1}, {bY, 3}, {cY, 2}}});
    }

    // Rewire: X' = (A, B, D), Y' = (A, D, C), both counterclockwise.
    Tri nx, ny;
    nx.vertex = {A, B, D};
    nx.edge = {oy.edge[bY], edge, ox.edge[cX]};  // BD, AD, AB
    ny.vertex = {A, D, C};
    ny.edge = {oy.edge[cY], ox.edge[bX], edge};  // DC, CA, AD
    if (attach_to) {
      nx.backing.real = true;
      nx.backing.tet = ntet;
      nx.backing.face = 3;
      nx.backing.corner_to_local = {0, 2, 1};  // A, B, D
      ny.backing.real = true;
      ny.backing.tet = ntet;
      ny.backing.face = 2;
      ny.backing.corner_to_local = {0, 1, 3};  // A, D, C
    }
    tris[X] = nx;
    tris[Y] = ny;
    return FlipRecord{edge, X, Y, A, B, C, D};
  }

  SurfaceComplex to_surface_complex() const {
    std::vector<std::array<SurfaceGluing, 3>> glu(tris.size());
    std::map<int, std::vector<std::pair<int, int>>> by_edge;
    for (size_t t = 0; t < tris.size(); ++t)
      for (int s = 0; s < 3; ++s) by_edge[tris[t].edge[s]].push_back({int(t), s});
    for (auto& [e, sd] : by_edge) {
      if (sd.size() == 1) continue;
      if (sd.size() != 2) throw Error("tracked surface: edge with > 2 sides");
      glu[sd[0].first][sd[0].second] = {sd[1].first, sd[1].second, true};
      glu[sd[1].first][sd[1].second] = {sd[0].first, sd[0].second, true};
    }
    return SurfaceComplex::from_gluings(std::move(glu));
  }

  /// Vertex-edge incidence multiset: sorted (min endpoint, max endpoint)
  /// pairs over all edges; stable ids make this comparable across flips.
  std::vector<std::pair<int, int>> incidence_multiset() const {
    std::map<int, std::pair<int, int>> ends;
    for (const Tri& t : tris)
      for (int s = 0; s < 3; ++s) {
        int e = t.edge[s];
        int u = t.vertex[(s + 1) % 3], v = t.vertex[(s + 2) % 3];
        if (u > v) std::swap(u, v);
        auto it = ends.find(e);
        if (it == ends.end())
          ends[e] = {u, v};
        else if (it->second != std::make_pair(u, v))
          throw Error("tracked surface: edge endpoint mismatch");
      }
    std::vector<std::pair<int, int>> out;
    for (auto& [e, uv] : ends) out.push_back(uv);
    std::sort(out.begin(), out.end());
    return out;
  }

  static TrackedSurface from_grid(int k) {
    // Matches torus_grid(k): L_i = (B_i, B_{i+1}, T_{i+1}) at index 2i,
    // U_i = (B_i, T_{i+1}, T_i) at 2i+1; vertex ids are the quotient
    // classes v_i = B_i = T_i; edge ids: e_i = i, d_i = k+i, h_i = 2k+i.
    TrackedSurface s;
    s.tris.resize(2 * k);
    auto vid = [&](int i) { return (i % k + k) % k; };
    for (int i = 0; i < k; ++i) {
      Tri& L = s.tris[2 * i];
      L.vertex = {vid(i), vid(i + 1), vid(i + 1)};
      L.edge = {vid(i + 1), k + i, 2 * k + i};  // e_{i+1}, d_i, h_i
      L.backing.grid_pos = 2 * i;
      Tri& U = s.tris[2 * i + 1];
      U.vertex = {vid(i), vid(i + 1), vid(i)};
      U.edge = {2 * k + i, i, k + i};  // h_i, e_i, d_i
      U.backing.grid_pos = 2 * i + 1;
    }
    s.next_vertex = k;
    s.next_edge = 3 * k;
    return s;
  }
};

// ---------------------------------------------------------------------------
// StripModel: the cut-open annulus around a twist curve.  Rungs are the
// strip's interior edges in cyclic order, each with abstract bottom and top
// circle positions; the gap between consecutive rungs holds a triangle whose
// apex alternates between the two circles.  A Dehn twist runs four rounds of
// one flip per bottom vertex: the clockwisemost rung of the vertex's block
// (direction +1) or the counterclockwisemost (direction -1).
// ---------------------------------------------------------------------------
struct StripModel {
  struct Rung {
    int edge;    // stable edge id in the TrackedSurface
    int bottom;  // 0..k-1
    int top;     // 0..k-1
  };
  std::vector<Rung> rungs;
  std::vector<char> gap_bottom;  // gap j (between rungs j, j+1) shares bottom
  int k = 0;

  int size() const { return int(rungs.size()); }

  void check() const {
    if (size() < 2 || size() % 2 != 0)
      throw PreconditionError("strip: need an even number of rungs");
    for (int j = 0; j < size(); ++j) {
      int jn = (j + 1) % size();
      if (gap_bottom[j]) {
        if (rungs[j].bottom != rungs[jn].bottom)
          throw PreconditionError("strip: bottom gap endpoints disagree");
      } else if (rungs[j].top != rungs[jn].top) {
        throw PreconditionError("strip: top gap endpoints disagree");
      }
      if (gap_bottom[j] == gap_bottom[jn])
        throw PreconditionError("strip: gaps must alternate sides");
    }
  }

  /// Flip rung j in the model; the surface flip must be driven in lockstep.
  void flip(int j) {
    int jp = (j - 1 + size()) % size(), jn = j % size();
    int gap_prev = jp, gap_next = j;
    bool prev_bottom = gap_bottom[gap_prev];
    if (prev_bottom) {
      rungs[j].bottom = rungs[(j + 1) % size()].bottom;
      rungs[j].top = rungs[jp].top;
    } else {
      rungs[j].bottom = rungs[jp].bottom;
      rungs[j].top = rungs[(j + 1) % size()].top;
    }
    gap_bottom[gap_prev] = !gap_bottom[gap_prev];
    gap_bottom[gap_next] = !gap_bottom[gap_next];
    (void)jn;
  }

  /// Rung index to flip for bottom vertex i: the clockwisemost rung of the
  /// maximal run of rungs joined by bottom gaps at i (the run's last member
  /// in cyclic order).
  int select(int i) const {
    // Blocks are delimited by top gaps; find the block whose bottom is i.
    int n = size();
    for (int start = 0; start < n; ++start) {
      int before = (start - 1 + n) % n;
      if (gap_bottom[before]) continue;  // not a block start
      if (rungs[start].bottom != i) continue;
      int end = start;
      while (gap_bottom[end]) end = (end + 1) % n;
      return end;
    }
    throw PreconditionError("strip: no rung block at bottom vertex " +
                            std::to_string(i));
  }

  /// The mirrored annulus: rung order reversed, circles kept.  Running the
  /// twist procedure on the mirror applies the inverse twist.
  StripModel reversed() const {
    StripModel m;
    m.k = k;
    int n = size();
    for (int j = 0; j < n; ++j) m.rungs.push_back(rungs[n - 1 - j]);
    m.gap_bottom.resize(n);
    for (int j = 0; j < n; ++j)
      m.gap_bottom[j] = gap_bottom[((n - 2 - j) % n + n) % n];
    return m;
  }
};

struct DehnTwistResult {
  std::vector<TrackedSurface::FlipRecord> flips;
  bool incidence_preserved = false;
};

/// Apply a full 2*pi twist along the strip; mutates the tracked surface
/// (and, through it, any attached tetrahedra).  A full twist takes k rounds
/// of one flip per bottom vertex, k^2 flips in total: each round shifts one
/// circle of the annulus a single vertex step relative to the other.  (For
/// k = 4 this equals the 4k count quoted for the move; a single square
/// column, k = 1, twists with one flip.)  Direction -1 runs the procedure
/// on the mirrored annulus.
inline DehnTwistResult run_twist(TrackedSurface& surf, StripModel& model,
                                 int direction,
                                 std::vector<std::array<Tet3Gluing, 4>>* tets
                                 = nullptr,
                                 std::map<int, TrackedSurface::Backing>*
                                     bottom = nullptr) {
  StripModel work = direction > 0 ? model : model.reversed();
  work.check();
  DehnTwistResult out;
  auto before = surf.incidence_multiset();
  for (int round = 0; round < work.k; ++round)
    for (int i = 0; i < work.k; ++i) {
      int j = work.select(i);
      int edge = work.rungs[j].edge;
      out.flips.push_back(surf.flip(edge, tets, bottom));
      work.flip(j);
    }
  out.incidence_preserved = (surf.incidence_multiset() == before);
  model = work;
  return out;
}

// ---------------------------------------------------------------------------
// Strip models for the torus grid: the horizontal curve's strip is the whole
// grid (rungs e_0, d_0, e_1, d_1, ...); the vertical curve's strip is one
// square column (rungs h_col, d_col).  Edges are located by their current
// role in the tracked surface, so strips can be rebuilt between letters.
// ---------------------------------------------------------------------------

/// Grid-role map of a tracked surface that is combinatorially the k-column
/// grid torus: for each column, the loop edge e_i, the triangles U_i / L_i,
/// and the corner roles inside them.
struct GridRoles {
  int k = 0;
  std::vector<int> loop_edge;  // e_i by column (the loop at vertex i)
  std::vector<int> upper_tri, lower_tri;
  // Corners of U_i in role order (B_i, T_{i+1}, T_i):
  std::vector<std::array<int, 3>> upper_corners;
  // Corners of L_i in role order (B_i, B_{i+1}, T_{i+1}):
  std::vector<std::array<int, 3>> lower_corners;
  std::vector<int> diag_edge, horiz_edge;  // d_i and h_i by column
};

inline GridRoles derive_grid_roles(const TrackedSurface& surf) {
  GridRoles roles;
  int k = surf.next_vertex;
  roles.k = k;
  if (k < 3) throw PreconditionError("grid roles: need k >= 3");
  if (int(surf.tris.size()) != 2 * k)
    throw Error("grid roles: triangle count is not 2k");
  // Loop edges: both endpoints at the same vertex.
  std::map<int, int> loop_at;  // vertex -> edge id
  std::map<int, std::pair<int, int>> ends;
  for (const auto& t : surf.tris)
    for (int s = 0; s < 3; ++s) {
      int u = t.vertex[(s + 1) % 3], v = t.vertex[(s + 2) % 3];
      if (u == v) loop_at[u] = t.edge[s];
      ends[t.edge[s]] = {u, v};
    }
  if (int(loop_at.size()) != k) throw Error("grid roles: loop edges missing");
  roles.loop_edge.resize(k);
  roles.upper_tri.assign(k, -1);
  roles.lower_tri.assign(k, -1);
  roles.upper_corners.resize(k);
  roles.lower_corners.resize(k);
  roles.diag_edge.assign(k, -1);
  roles.horiz_edge.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    auto it = loop_at.find(i);
    if (it == loop_at.end()) throw Error("grid roles: no loop at vertex");
    roles.loop_edge[i] = it->second;
  }
  for (int i = 0; i < k; ++i) {
    auto sd = surf.sides(roles.loop_edge[i]);
    if (sd.size() != 2) throw Error("grid roles: loop edge not interior");
    for (auto [t, s] : sd) {
      const auto& tri = surf.tris[t];
      int apex = tri.vertex[s];  // corner opposite the loop
      if (apex != (i + 1) % k && apex != (i - 1 + k) % k)
        throw Error("grid roles: loop side apex out of place");
      // U_i has its apex at column i+1; L_{i-1} at column i-1.
      bool is_upper = (apex == (i + 1) % k);
      if (is_upper) {
        roles.upper_tri[i] = t;
        // In ccw order (B_i, T_{i+1}, T_i) with the apex T_{i+1} at corner
        // s, the successor corner holds T_i and the predecessor B_i.
        roles.upper_corners[i] = {(s + 2) % 3, s, (s + 1) % 3};
      } else {
        roles.lower_tri[(i - 1 + k) % k] = t;
        // L_j = (B_j, B_{j+1}, T_{j+1}) has its loop e_{j+1} opposite
        // corner 0 = B_j; apex = B_j, successor = B_{j+1}, then T_{j+1}.
        roles.lower_corners[(i - 1 + k) % k] = {s, (s + 1) % 3, (s + 2) % 3};
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    if (roles.upper_tri[i] < 0 || roles.lower_tri[i] < 0)
      throw Error("grid roles: missing upper or lower triangle");
    // d_i = edge between U_i corners B_i and T_{i+1} = slot opposite T_i;
    // h_i = edge between U_i corners T_{i+1} and T_i = slot opposite B_i.
    const auto& U = surf.tris[roles.upper_tri[i]];
    roles.diag_edge[i] = U.edge[roles.upper_corners[i][2]];
    roles.horiz_edge[i] = U.edge[roles.upper_corners[i][0]];
  }
  return roles;
}

/// Strip model for the horizontal curve: rungs e_0, d_0, e_1, d_1, ....
inline StripModel horizontal_strip_model(const GridRoles& roles) {
  StripModel m;
  m.k = roles.k;
  for (int i = 0; i < roles.k; ++i) {
    m.rungs.push_back({roles.loop_edge[i], i, i});
    m.gap_bottom.push_back(1);  // U_i sits between e_i and d_i (apex B_i)
    m.rungs.push_back({roles.diag_edge[i], i, (i + 1) % roles.k});
    m.gap_bottom.push_back(0);  // L_i shares the top T_{i+1} with e_{i+1}
  }
  return m;
}

/// Strip model for the vertical curve of one column: rungs h_col, d_col.
inline StripModel vertical_strip_model(const GridRoles& roles, int col) {
  StripModel m;
  m.k = 1;
  m.rungs.push_back({roles.horiz_edge[col], 0, 0});
  m.gap_bottom.push_back(1);  // L_col joins h and d at the inner circle
  m.rungs.push_back({roles.diag_edge[col], 0, 0});
  m.gap_bottom.push_back(0);  // U_col at the outer circle
  return m;
}

// ---------------------------------------------------------------------------
// Public Dehn twist on an arbitrary strip of a surface complex.
// ---------------------------------------------------------------------------
struct DehnTwistOutcome {
  SurfaceComplex complex;
  std::vector<int> flipped_edges;  // edge-class ids, in flip order
  bool incidence_preserved = false;
  int strip_vertices = 0;  // k: vertices per boundary circle
};

namespace detail {

/// TrackedSurface over an oriented complex, ids seeded from the quotient
/// classes.  Triangles with orientation sign -1 store their corners
/// reversed so all tracked triangles are consistently oriented.
inline TrackedSurface tracked_from_complex(const SurfaceComplex& s) {
  if (!s.is_orientable())
    throw PreconditionError("dehn_twist: surface is not orientable");
  auto orient = orientation_signs(s);
  TrackedSurface out;
  out.tris.resize(s.triangle_count());
  for (int t = 0; t < s.triangle_count(); ++t) {
    auto& tri = out.tris[t];
    if (orient[t] >= 0) {
      for (int c = 0; c < 3; ++c) tri.vertex[c] = s.vertex_class(t, c);
      for (int sl = 0; sl < 3; ++sl) tri.edge[sl] = s.edge_class(t, sl);
    } else {
      // Reversed corner order (0, 2, 1); slots follow the same relabeling.
      tri.vertex = {s.vertex_class(t, 0), s.vertex_class(t, 2),
                    s.vertex_class(t, 1)};
      tri.edge = {s.edge_class(t, 0), s.edge_class(t, 2),
                  s.edge_class(t, 1)};
    }
    tri.backing.grid_pos = t;
  }
  out.next_vertex = s.vertex_count();
  out.next_edge = s.edge_count();
  return out;
}

/// Infer the strip model (rungs and circle sides) from an ordered triangle
/// list, by cutting the strip open and checking it is an annulus with k
/// vertices on each boundary circle.
inline StripModel infer_strip_model(const TrackedSurface& surf,
                                    const std::vector<int>& strip) {
  int m = int(strip.size());
  if (m < 2 || m % 2 != 0)
    throw PreconditionError("dehn_twist: strip must have even length >= 2");
  // Candidate rungs between consecutive strip members.
  std::vector<std::vector<int>> shared(m);
  for (int j = 0; j < m; ++j) {
    int a = strip[j], b = strip[(j + 1) % m];
    if (a < 0 || a >= int(surf.tris.size()) || b < 0 ||
        b >= int(surf.tris.size()))
      throw PreconditionError("dehn_twist: strip references missing triangle");
    for (int sl = 0; sl < 3; ++sl) {
      int e = surf.tris[a].edge[sl];
      if (a == b) continue;
      for (int sl2 = 0; sl2 < 3; ++sl2)
        if (surf.tris[b].edge[sl2] == e) shared[j].push_back(e);
    }
    std::sort(shared[j].begin(), shared[j].end());
    shared[j].erase(std::unique(shared[j].begin(), shared[j].end()),
                    shared[j].end());
    if (shared[j].empty())
      throw PreconditionError(
          "dehn_twist: consecutive strip triangles share no edge");
  }
  // Resolve rung choices (backtracking over the rare ambiguous pairs): each
  // strip triangle must use two distinct rungs, leaving one boundary edge.
  std::vector<int> rung(m, -1);
  std::function<bool(int)> assign = [&](int j) -> bool {
    if (j == m) return true;
    for (int e : shared[j]) {
      if (rung[(j - 1 + m) % m] == e) continue;
      rung[j] = e;
      // Triangle j+1 uses rungs j and j+1; they must be distinct slots.
      if (assign(j + 1)) return true;
    }
    rung[j] = -1;
    return false;
  };
  if (!assign(0) || rung[0] == rung[m - 1])
    throw PreconditionError("dehn_twist: strip is not an annulus");

  // Cut complex: strip triangles glued only along the rungs.
  std::vector<std::array<SurfaceGluing, 3>> cut(m);
  auto slot_of = [&](int tri, int e, int avoid_slot) {
    for (int sl = 0; sl < 3; ++sl)
      if (surf.tris[tri].edge[sl] == e && sl != avoid_slot) return sl;
    return -1;
  };
  std::vector<std::array<int, 2>> rung_slots(m);  // per rung: slot in S_j, S_{j+1}
  std::vector<int> used_slot(m, -1);
  for (int j = 0; j < m; ++j) {
    int a = j, b = (j + 1) % m;
    int sa = slot_of(strip[a], rung[j], used_slot[a]);
    if (sa < 0) sa = slot_of(strip[a], rung[j], -1);
    int sb = slot_of(strip[b], rung[j], -1);
    if (sa < 0 || sb < 0)
      throw PreconditionError("dehn_twist: strip is not an annulus");
    cut[a][sa] = {b, sb, true};
    cut[b][sb] = {a, sa, true};
    rung_slots[j] = {sa, sb};
    used_slot[b] = sb;
  }
  SurfaceComplex cutc = SurfaceComplex::from_gluings(std::move(cut));
  // Boundary circles: vertex classes on boundary edges; must be two cycles
  // of equal length k with 2k = m.
  int k = m / 2;
  // Classify cut-vertex classes into the two boundary circles; circle 0
  // ("bottom") is the one met first.
  std::vector<int> circle_of(cutc.vertex_count(), -1);
  {
    int ncircles = 0;
    for (int t = 0; t < cutc.triangle_count(); ++t)
      for (int sl = 0; sl < 3; ++sl) {
        if (cutc.gluing(t, sl).glued()) continue;
        int v1 = cutc.vertex_class(t, (sl + 1) % 3);
        int v2 = cutc.vertex_class(t, (sl + 2) % 3);
        int c1 = circle_of[v1], c2 = circle_of[v2];
        if (c1 < 0 && c2 < 0) {
          circle_of[v1] = circle_of[v2] = ncircles++;
        } else if (c1 < 0) {
          circle_of[v1] = c2;
        } else if (c2 < 0) {
          circle_of[v2] = c1;
        } else if (c1 != c2) {
          // merge circles (relabel)
          for (auto& c : circle_of)
            if (c == c2) c = c1;
        }
      }
    std::vector<int> distinct;
    for (int c : circle_of)
      if (c >= 0 && std::find(distinct.begin(), distinct.end(), c) ==
                        distinct.end())
        distinct.push_back(c);
    if (distinct.size() != 2)
      throw PreconditionError(
          "dehn_twist: strip boundary is not two circles");
    int count0 = 0, count1 = 0;
    for (int c : circle_of) {
      if (c == distinct[0]) ++count0;
      if (c == distinct[1]) ++count1;
    }
    if (count0 != k || count1 != k)
      throw PreconditionError(
          "dehn_twist: strip does not have k vertices per boundary circle");
    for (auto& c : circle_of) c = (c == distinct[0]) ? 0 : 1;
  }
  // Build the model: rung endpoints in cut-vertex classes; bottom = circle
  // 0; model ids numbered by first appearance.
  StripModel model;
  model.k = k;
  std::map<int, int> bottom_id, top_id;
  for (int j = 0; j < m; ++j) {
    int a = j;
    int sa = rung_slots[j][0];
    int u = cutc.vertex_class(a, (sa + 1) % 3);
    int v = cutc.vertex_class(a, (sa + 2) % 3);
    if (circle_of[u] == circle_of[v])
      throw PreconditionError("dehn_twist: rung endpoints on one circle");
    int ub = circle_of[u] == 0 ? u : v;
    int ut = circle_of[u] == 0 ? v : u;
    if (!bottom_id.count(ub)) bottom_id[ub] = int(bottom_id.size());
    if (!top_id.count(ut)) top_id[ut] = int(top_id.size());
    model.rungs.push_back(
        {surf.tris[strip[a]].edge[sa], bottom_id[ub], top_id[ut]});
  }
  model.gap_bottom.resize(m);
  for (int j = 0; j < m; ++j) {
    // Gap j holds strip triangle (j+1): apex = corner on both its rungs.
    int t = (j + 1) % m;
    int s_in = rung_slots[j][1], s_out = rung_slots[(j + 1) % m][0];
    int apex = 3 - s_in - s_out;
    model.gap_bottom[j] = (circle_of[cutc.vertex_class(t, apex)] == 0);
  }
  model.check();
  return model;
}

}  // namespace detail

/// Full Dehn twist along a strip of 2k triangles (k vertices per boundary
/// circle of the strip's annulus); k^2 flips.  Returns the retriangulated
/// complex, the flipped edge classes in order, and whether the final
/// incidence structure matches the input exactly.
inline DehnTwistOutcome dehn_twist(const SurfaceComplex& s,
                                   const std::vector<int>& strip,
                                   int direction) {
  if (direction != 1 && direction != -1)
    throw PreconditionError("dehn_twist: direction must be +1 or -1");
  TrackedSurface surf = detail::tracked_from_complex(s);
  StripModel model = detail::infer_strip_model(surf, strip);
  DehnTwistResult r = run_twist(surf, model, direction);
  DehnTwistOutcome out;
  out.complex = surf.to_surface_complex();
  for (const auto& f : r.flips) out.flipped_edges.push_back(f.edge);
  out.incidence_preserved = r.incidence_preserved;
  out.strip_vertices = model.k;
  return out;
}

}  // namespace ttn
