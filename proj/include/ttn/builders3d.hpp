// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "ttn/product_layer.hpp"
#include "ttn/twist.hpp"

namespace ttn {

/// Word in the Dehn twist generators: letters are (curve index 1..3g-1,
/// sign).  For genus 1 the curves are 1 = horizontal (the whole-grid strip)
/// and 2 = vertical (one square column).
struct DehnWord {
  int genus = 1;
  std::vector<std::pair<int, int>> letters;

  void validate() const {
    if (genus < 1) throw PreconditionError("DehnWord: genus must be >= 1");
    for (auto [c, sign] : letters) {
      if (c < 1 || c > 3 * genus - 1)
        throw PreconditionError("DehnWord: curve index out of range");
      if (sign != 1 && sign != -1)
        throw PreconditionError("DehnWord: sign must be +1 or -1");
    }
  }
};

/// A boundary face of a built solid torus, with the grid corner roles:
/// lower faces have corners (B_i, B_{i+1}, T_{i+1}), upper faces
/// (B_i, T_{i+1}, T_i).
struct GridFace {
  int tet = -1, face = -1;
  std::array<int, 3> role_to_local{};
};

struct SolidTorus {
  Triangulation3 complex;
  std::vector<GridFace> lower, upper;  // by column 0..k-1
};

// ---------------------------------------------------------------------------
// Solid torus with boundary exactly the k-column grid torus: the staircase
// triangulation of (fan disk) x S^1 — three tetrahedra per fan triangle,
// top level identified with the bottom — plus one layering tetrahedron that
// flips the wrap column's diagonal into grid position.  3k + 1 tetrahedra;
// the disk's rim circle is the grid's horizontal curve, so the meridian of
// this solid torus is the horizontal curve and its longitude the vertical.
// ---------------------------------------------------------------------------
inline SolidTorus build_solid_torus(int k) {
  if (k < 3) throw PreconditionError("build_solid_torus: need k >= 3");
  std::vector<std::array<Tet3Gluing, 4>> glu(3 * k + 1);
  auto P = [&](int prism, int layer) { return 3 * prism + layer; };
  auto glue = [&](int t1, int f1, int t2, const Perm4& p) {
    glu[t1][f1] = Tet3Gluing{t2, p};
    glu[t2][p[f1]] = Tet3Gluing{t1, perm4_inverse(p)};
  };
  // Within each prism (sorted vertices a < b < c; layer tets
  // (a,b,c,c'), (a,b,b',c'), (a,a',b',c')):
  for (int i = 0; i < k; ++i) {
    glue(P(i, 0), 2, P(i, 1), kPerm4Id);
    glue(P(i, 1), 1, P(i, 2), kPerm4Id);
    glue(P(i, 2), 0, P(i, 0), Perm4{3, 0, 1, 2});  // level identification
  }
  // Between prisms, across the disk edge (O, r_j).  Role of r_j: 'b' when
  // it is the middle sorted vertex of the prism, 'c' when the largest.
  struct Side {
    int tet_lower, face_lower;  // face {O, r_j, r_j'}
    int tet_upper, face_upper;  // face {O, O', r_j'}
    // locals of O, r_j, r_j' on the lower face and O, O', r_j' on the upper
    std::array<int, 3> low;     // O, r_j, r_j'
    std::array<int, 3> up;      // O, O', r_j'
  };
  auto side_of = [&](int prism, bool role_b) {
    Side s{};
    if (role_b) {
      s.tet_lower = P(prism, 1);
      s.face_lower = 3;  // {a, b, b'} of (a,b,b',c')
      s.low = {0, 1, 2};
      s.tet_upper = P(prism, 2);
      s.face_upper = 3;  // {a, a', b'} of (a,a',b',c')
      s.up = {0, 1, 2};
    } else {
      s.tet_lower = P(prism, 0);
      s.face_lower = 1;  // {a, c, c'} of (a,b,c,c')
      s.low = {0, 2, 3};
      s.tet_upper = P(prism, 2);
      s.face_upper = 2;  // {a, a', c'} of (a,a',b',c')
      s.up = {0, 1, 3};
    }
    return s;
  };
  for (int j = 0; j < k; ++j) {
    int left = (j - 1 + k) % k, right = j;
    bool left_b = (left == k - 1);    // r_0 is the middle vertex of prism k-1
    bool right_b = (right != k - 1);  // r_j is the middle vertex of prism j
    Side L = side_of(left, left_b), R = side_of(right, right_b);
    Perm4 p_low{};
    p_low[L.low[0]] = R.low[0];
    p_low[L.low[1]] = R.low[1];
    p_low[L.low[2]] = R.low[2];
    p_low[L.face_lower] = R.face_lower;
    glue(L.tet_lower, L.face_lower, R.tet_lower, p_low);
    Perm4 p_up{};
    p_up[L.up[0]] = R.up[0];
    p_up[L.up[1]] = R.up[1];
    p_up[L.up[2]] = R.up[2];
    p_up[L.face_upper] = R.face_upper;
    glue(L.tet_upper, L.face_upper, R.tet_upper, p_up);
  }
  // The wrap prism k-1 has sorted vertices (O, r_0, r_{k-1}), so its rim
  // square carries the anti-diagonal; one layering tetrahedron N flips it.
  // N locals: 0 = B_{k-1} (r_{k-1}), 1 = T_0 (r_0'), 2 = B_0 (r_0),
  // 3 = T_{k-1} (r_{k-1}').
  int N = 3 * k;
  glue(N, 1, P(k - 1, 0), Perm4{2, 0, 1, 3});  // onto {b, c, c'}
  glue(N, 0, P(k - 1, 1), Perm4{0, 2, 1, 3});  // onto {b, b', c'}

  SolidTorus out;
  out.complex = Triangulation3::from_gluings(std::move(glu));
  out.lower.resize(k);
  out.upper.resize(k);
  for (int i = 0; i + 1 < k; ++i) {
    // L_i = (B_i, B_{i+1}, T_{i+1}) = (b, c, c') of prism i, face 0.
    out.lower[i] = {P(i, 0), 0, {1, 2, 3}};
    // U_i = (B_i, T_{i+1}, T_i) = (b, c', b') of prism i, face 0.
    out.upper[i] = {P(i, 1), 0, {1, 3, 2}};
  }
  out.lower[k - 1] = {N, 3, {0, 2, 1}};  // (B_{k-1}, B_0, T_0)
  out.upper[k - 1] = {N, 2, {0, 1, 3}};  // (B_{k-1}, T_0, T_{k-1})
  return out;
}

/// The mirror of a solid torus (all tetrahedra reflected); used for the cap
/// on the far side of a Heegaard splitting, whose boundary must carry the
/// opposite orientation.
inline SolidTorus mirror_solid_torus(const SolidTorus& st) {
  int n = st.complex.tet_count();
  std::vector<int> tp(n);
  for (int i = 0; i < n; ++i) tp[i] = i;
  std::vector<Perm4> vp(n, Perm4{1, 0, 2, 3});
  SolidTorus out;
  out.complex = st.complex.relabeled(tp, vp);
  auto remap = [&](const GridFace& f) {
    GridFace g;
    g.tet = f.tet;
    g.face = vp[f.tet][f.face];
    for (int r = 0; r < 3; ++r) g.role_to_local[r] = vp[f.tet][f.role_to_local[r]];
    return g;
  };
  for (auto& f : st.lower) out.lower.push_back(remap(f));
  for (auto& f : st.upper) out.upper.push_back(remap(f));
  return out;
}

struct BuiltManifold {
  Triangulation3 complex;
  int base_tets = 0;               // collar or cap tetrahedra
  std::vector<int> letter_flips;   // flips contributed per letter
  int total_flips = 0;
};

namespace detail {

struct CylinderState {
  TrackedSurface surf;
  std::vector<std::array<Tet3Gluing, 4>> tets;
  std::map<int, TrackedSurface::Backing> bottom;  // by grid triangle index
  int k = 0;
};

inline int apply_letter(CylinderState& st, int curve, int sign) {
  GridRoles roles = derive_grid_roles(st.surf);
  StripModel model = (curve == 1) ? horizontal_strip_model(roles)
                                  : vertical_strip_model(roles, 0);
  DehnTwistResult r =
      run_twist(st.surf, model, sign, &st.tets, &st.bottom);
  if (!r.incidence_preserved)
    throw Error("builder: twist did not restore the incidence matrix");
  return int(r.flips.size());
}

/// Faces of the current (top) boundary by grid position, with corner roles.
inline std::vector<std::pair<GridFace, GridFace>> top_faces(
    const CylinderState& st) {
  GridRoles roles = derive_grid_roles(st.surf);
  std::vector<std::pair<GridFace, GridFace>> out(st.k);  // (lower, upper)
  for (int i = 0; i < st.k; ++i) {
    const auto& lt = st.surf.tris[roles.lower_tri[i]];
    const auto& ut = st.surf.tris[roles.upper_tri[i]];
    if (!lt.backing.real || !ut.backing.real)
      throw Error("builder: top boundary has an unattached face");
    GridFace low{lt.backing.tet, lt.backing.face, {}};
    GridFace up{ut.backing.tet, ut.backing.face, {}};
    for (int r = 0; r < 3; ++r) {
      low.role_to_local[r] =
          lt.backing.corner_to_local[roles.lower_corners[i][r]];
      up.role_to_local[r] =
          ut.backing.corner_to_local[roles.upper_corners[i][r]];
    }
    out[i] = {low, up};
  }
  return out;
}

inline GridFace bottom_face(const CylinderState& st, int grid_tri) {
  auto it = st.bottom.find(grid_tri);
  if (it == st.bottom.end())
    throw Error("builder: bottom face not covered");
  const auto& bk = it->second;
  // Original grid triangles carry their roles in corner order already:
  // L_i = (B_i, B_{i+1}, T_{i+1}), U_i = (B_i, T_{i+1}, T_i).
  GridFace f{bk.tet, bk.face, {}};
  for (int r = 0; r < 3; ++r) f.role_to_local[r] = bk.corner_to_local[r];
  return f;
}

/// Glue two grid faces role-to-role.
inline void glue_faces(std::vector<std::array<Tet3Gluing, 4>>& glu,
                       const GridFace& a, const GridFace& b) {
  Perm4 p{};
  for (int r = 0; r < 3; ++r) p[a.role_to_local[r]] = b.role_to_local[r];
  p[a.face] = b.face;
  if (glu[a.tet][a.face].glued() || glu[b.tet][b.face].glued())
    throw Error("builder: face already glued");
  glu[a.tet][a.face] = Tet3Gluing{b.tet, p};
  glu[b.tet][b.face] = Tet3Gluing{a.tet, perm4_inverse(p)};
}

inline GridFace offset_face(const GridFace& f, int off) {
  GridFace g = f;
  g.tet += off;
  return g;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Mapping torus of a genus-1 word over the k-column grid torus.  The build
// starts from an honest product layer (torus x [0,1], three tetrahedra per
// triangle) so that the bottom boundary really is the grid surface; the
// word's letters follow as shells of flip tetrahedra on the top; finally
// top faces are glued to the bottom faces position by position.
// ---------------------------------------------------------------------------
inline BuiltManifold build_mapping_torus(const DehnWord& word, int k = 3) {
  word.validate();
  if (word.genus != 1)
    throw PreconditionError(
        "build_mapping_torus: only genus 1 is implemented (genus >= 2 base "
        "triangulations are not pinned down)");
  if (k < 3) throw PreconditionError("build_mapping_torus: need k >= 3");
  detail::CylinderState st;
  st.surf = TrackedSurface::from_grid(k);
  st.k = k;
  ProductLayer layer = build_product_layer(st.surf.to_surface_complex());
  st.tets = layer.tets;
  for (size_t t = 0; t < st.surf.tris.size(); ++t) {
    auto& bk = st.surf.tris[t].backing;
    bk.real = true;
    bk.tet = layer.top[t].tet;
    bk.face = layer.top[t].face;
    bk.corner_to_local = layer.top[t].corner_to_local;
    TrackedSurface::Backing low;
    low.real = true;
    low.tet = layer.bottom[t].tet;
    low.face = layer.bottom[t].face;
    low.corner_to_local = layer.bottom[t].corner_to_local;
    low.grid_pos = int(t);
    st.bottom[int(t)] = low;
  }
  BuiltManifold out;
  out.base_tets = int(layer.tets.size());
  for (auto [curve, sign] : word.letters)
    out.letter_flips.push_back(detail::apply_letter(st, curve, sign));
  auto tops = detail::top_faces(st);
  auto glu = st.tets;
  for (int i = 0; i < k; ++i) {
    detail::glue_faces(glu, tops[i].first, detail::bottom_face(st, 2 * i));
    detail::glue_faces(glu, tops[i].second,
                       detail::bottom_face(st, 2 * i + 1));
  }
  out.complex = Triangulation3::from_gluings(std::move(glu));
  out.total_flips = 0;
  for (int f : out.letter_flips) out.total_flips += f;
  return out;
}

// ---------------------------------------------------------------------------
// Heegaard splitting of a genus-1 word: the word's shells (no collar) with
// the fixed solid torus glued to the bottom and its mirror to the top.
// Positions never touched by a shell connect the two caps directly.
// ---------------------------------------------------------------------------
inline BuiltManifold build_heegaard(const DehnWord& word, int k = 3) {
  word.validate();
  if (word.genus != 1)
    throw PreconditionError(
        "build_heegaard: only genus 1 is implemented (genus >= 2 base "
        "triangulations are not pinned down)");
  if (k < 3) throw PreconditionError("build_heegaard: need k >= 3");
  detail::CylinderState st;
  st.surf = TrackedSurface::from_grid(k);
  st.k = k;
  BuiltManifold out;
  for (auto [curve, sign] : word.letters)
    out.letter_flips.push_back(detail::apply_letter(st, curve, sign));

  SolidTorus cap_bottom = build_solid_torus(k);
  SolidTorus cap_top = mirror_solid_torus(cap_bottom);
  int shell_tets = int(st.tets.size());
  int cap_tets = cap_bottom.complex.tet_count();
  out.base_tets = 2 * cap_tets;

  // Assemble: shells at [0, shell), bottom cap at [shell, shell+cap),
  // top cap at [shell+cap, shell+2cap).
  std::vector<std::array<Tet3Gluing, 4>> glu = st.tets;
  auto append = [&](const Triangulation3& c, int off) {
    for (int t = 0; t < c.tet_count(); ++t) {
      glu.push_back({});
      for (int f = 0; f < 4; ++f) {
        const auto& g = c.gluing(t, f);
        if (g.glued()) glu[off + t][f] = Tet3Gluing{g.tet + off, g.perm};
      }
    }
  };
  append(cap_bottom.complex, shell_tets);
  append(cap_top.complex, shell_tets + cap_tets);

  GridRoles roles = derive_grid_roles(st.surf);
  for (int i = 0; i < k; ++i) {
    for (int half = 0; half < 2; ++half) {
      int grid_tri = 2 * i + half;  // L_i then U_i
      const GridFace& capb = half ? cap_bottom.upper[i] : cap_bottom.lower[i];
      const GridFace& capt = half ? cap_top.upper[i] : cap_top.lower[i];
      GridFace cb = detail::offset_face(capb, shell_tets);
      GridFace ct = detail::offset_face(capt, shell_tets + cap_tets);
      bool covered = st.bottom.count(grid_tri) > 0;
      if (!covered) {
        // Zero-thickness position: the caps meet directly.
        detail::glue_faces(glu, cb, ct);
        continue;
      }
      detail::glue_faces(glu, cb, detail::bottom_face(st, grid_tri));
      // Top face at this position.
      const auto& tri =
          st.surf.tris[half ? roles.upper_tri[i] : roles.lower_tri[i]];
      if (!tri.backing.real) throw Error("build_heegaard: top face missing");
      GridFace top{tri.backing.tet, tri.backing.face, {}};
      const auto& corners =
          half ? roles.upper_corners[i] : roles.lower_corners[i];
      for (int r = 0; r < 3; ++r)
        top.role_to_local[r] = tri.backing.corner_to_local[corners[r]];
      detail::glue_faces(glu, ct, top);
    }
  }
  out.complex = Triangulation3::from_gluings(std::move(glu));
  out.total_flips = 0;
  for (int f : out.letter_flips) out.total_flips += f;
  return out;
}

}  // namespace ttn
