// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttn/error.hpp"
#include "ttn/surface.hpp"

namespace ttn {

/// Vertex permutation of {0,1,2,3}; the face gluing convention: the gluing
/// at face-slot f of tetrahedron t maps t's local vertices to the partner's,
/// with perm[f] the partner's face-slot, and the partner's stored
/// permutation is the inverse.
using Perm4 = std::array<int, 4>;

inline Perm4 perm4_inverse(const Perm4& p) {
  Perm4 q{};
  for (int i = 0; i < 4; ++i) q[p[i]] = i;
  return q;
}
inline Perm4 perm4_compose(const Perm4& outer, const Perm4& inner) {
  // (outer o inner)[i] = outer[inner[i]]
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = outer[inner[i]];
  return r;
}
inline bool perm4_valid(const Perm4& p) {
  std::array<char, 4> seen{};
  for (int v : p) {
    if (v < 0 || v > 3 || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}
inline int perm4_parity(const Perm4& p) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
  return inv % 2;  // 0 = even
}
inline const Perm4 kPerm4Id = {0, 1, 2, 3};

struct Tet3Gluing {
  int tet = -1;
  Perm4 perm = kPerm4Id;
  bool glued() const { return tet >= 0; }
};

/// Local edge indexing of a tetrahedron: pairs in lexicographic order.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline int tet_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  int e = table[a][b];
  if (e < 0) throw Error("tet_edge_index: degenerate pair");
  return e;
}

// ---------------------------------------------------------------------------
// Triangulation3: tetrahedra with local vertices {0,1,2,3} glued along
// triangular faces; face-slot k omits local vertex k.  Edge and vertex
// quotient classes are recomputed eagerly; self-gluings between two faces of
// one tetrahedron are allowed, a face glued to itself is not.
// ---------------------------------------------------------------------------
class Triangulation3 {
 public:
  Triangulation3() = default;

  static Triangulation3 from_gluings(
      std::vector<std::array<Tet3Gluing, 4>> gluings) {
    Triangulation3 c;
    c.glu_ = std::move(gluings);
    c.recompute();
    return c;
  }

  static Triangulation3 parse(const std::string& text);
  std::string serialize() const;

  int tet_count() const { return int(glu_.size()); }
  int vertex_count() const { return nv_; }
  int edge_count() const { return ne_; }
  int face_count() const { return nf_; }
  bool is_closed() const { return closed_; }

  const Tet3Gluing& gluing(int t, int f) const { return glu_.at(t).at(f); }
  const std::vector<std::array<Tet3Gluing, 4>>& gluings() const {
    return glu_;
  }

  int vertex_class(int t, int v) const { return vclass_.at(t).at(v); }
  int edge_class(int t, int e) const { return eclass_.at(t).at(e); }
  int edge_class_of_pair(int t, int a, int b) const {
    return eclass_.at(t).at(tet_edge_index(a, b));
  }

  /// Number of (tet, local edge) incidences of each edge class.
  const std::vector<int>& edge_degrees() const { return edge_degree_; }
  /// One representative (tet, local edge) per edge class.
  const std::vector<std::pair<int, int>>& edge_reps() const {
    return edge_rep_;
  }
  /// True if the edge class touches an unglued face.
  const std::vector<bool>& edge_on_boundary() const { return edge_bdry_; }
  /// (tet, local edge) slots of each edge class.
  const std::vector<std::vector<std::pair<int, int>>>& edge_slots() const {
    return edge_slots_;
  }

  /// Link of each vertex class as a surface complex (triangle per corner).
  SurfaceComplex vertex_link(int vclass) const;
  std::vector<int> vertex_class_sizes() const {
    std::vector<int> sz(nv_, 0);
    for (auto& row : vclass_)
      for (int v : row) ++sz[v];
    return sz;
  }

  Triangulation3 relabeled(const std::vector<int>& tet_perm,
                           const std::vector<Perm4>& vperm) const;
  std::string canonical_form() const;

 private:
  void recompute();

  std::vector<std::array<Tet3Gluing, 4>> glu_;
  std::vector<std::array<int, 4>> vclass_;
  std::vector<std::array<int, 6>> eclass_;
  std::vector<int> edge_degree_;
  std::vector<std::pair<int, int>> edge_rep_;
  std::vector<std::vector<std::pair<int, int>>> edge_slots_;
  std::vector<bool> edge_bdry_;
  int nv_ = 0, ne_ = 0, nf_ = 0;
  bool closed_ = true;
};

inline void Triangulation3::recompute() {
  int n = tet_count();
  closed_ = true;
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g.glued()) {
        closed_ = false;
        continue;
      }
      if (g.tet >= n) throw Error("gluing reference out of range");
      if (!perm4_valid(g.perm)) throw Error("gluing permutation invalid");
      if (g.tet == t && g.perm[f] == f)
        throw Error("face glued to itself at tet " + std::to_string(t));
      const auto& back = glu_[g.tet][g.perm[f]];
      if (back.tet != t || back.perm != perm4_inverse(g.perm))
        throw Error("gluing is not an involution at tet " + std::to_string(t) +
                    " face " + std::to_string(f));
    }
  detail::UnionFind vu(4 * n), eu(6 * n), fu(4 * n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g.glued()) continue;
      fu.unite(4 * t + f, 4 * g.tet + g.perm[f]);
      for (int v = 0; v < 4; ++v)
        if (v != f) vu.unite(4 * t + v, 4 * g.tet + g.perm[v]);
      for (int e = 0; e < 6; ++e) {
        auto [a, b] = kTetEdges[e];
        if (a == f || b == f) continue;
        eu.unite(6 * t + e,
                 6 * g.tet + tet_edge_index(g.perm[a], g.perm[b]));
      }
    }
  std::vector<int> vmap, emap, fmap;
  nv_ = vu.compress(vmap);
  ne_ = eu.compress(emap);
  nf_ = fu.compress(fmap);
  vclass_.assign(n, {});
  eclass_.assign(n, {});
  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) vclass_[t][v] = vmap[4 * t + v];
    for (int e = 0; e < 6; ++e) eclass_[t][e] = emap[6 * t + e];
  }
  edge_degree_.assign(ne_, 0);
  edge_rep_.assign(ne_, {-1, -1});
  edge_bdry_.assign(ne_, false);
  edge_slots_.assign(ne_, {});
  for (int t = 0; t < n; ++t)
    for (int e = 0; e < 6; ++e) {
      int c = eclass_[t][e];
      ++edge_degree_[c];
      edge_slots_[c].push_back({t, e});
      if (edge_rep_[c].first < 0) edge_rep_[c] = {t, e};
      auto [a, b] = kTetEdges[e];
      // The two faces containing this edge are the slots omitting the other
      // two vertices; the edge touches the boundary if either is unglued.
      for (int f = 0; f < 4; ++f)
        if (f != a && f != b && !glu_[t][f].glued()) edge_bdry_[c] = true;
    }
}

inline SurfaceComplex Triangulation3::vertex_link(int vclass) const {
  // One link triangle per (tet, corner) in the class; link-slot j of the
  // corner (t, v) corresponds to face w_list[j], where w_list is the
  // ascending list of the other three vertices, and link-corner j sits on
  // the tetrahedron edge (v, w_list[j]).
  std::vector<std::pair<int, int>> corners;
  std::map<std::pair<int, int>, int> corner_index;
  for (int t = 0; t < tet_count(); ++t)
    for (int v = 0; v < 4; ++v)
      if (vclass_[t][v] == vclass) {
        corner_index[{t, v}] = int(corners.size());
        corners.push_back({t, v});
      }
  auto wlist = [](int v) {
    std::array<int, 3> w{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != v) w[k++] = i;
    return w;
  };
  std::vector<std::array<SurfaceGluing, 3>> glu(corners.size());
  for (size_t i = 0; i < corners.size(); ++i) {
    auto [t, v] = corners[i];
    auto w = wlist(v);
    for (int j = 0; j < 3; ++j) {
      int f = w[j];  // link slot j lies in face f
      const auto& g = glu_[t][f];
      if (!g.glued()) continue;
      int t2 = g.tet, v2 = g.perm[v];
      auto w2 = wlist(v2);
      auto it = corner_index.find({t2, v2});
      if (it == corner_index.end()) throw Error("vertex_link: broken class");
      int f2 = g.perm[f];
      int j2 = int(std::find(w2.begin(), w2.end(), f2) - w2.begin());
      // Corner correspondence: link corner for w maps to the link corner for
      // perm[w]; flag derived from whether the first corner of slot j maps
      // to the first corner of slot j2.
      int c1 = (j + 1) % 3;               // link corner index on this side
      int h1 = w[c1];                     // tetra vertex it rides on
      int h1_img = g.perm[h1];
      int c1_img = int(std::find(w2.begin(), w2.end(), h1_img) - w2.begin());
      bool rev = (c1_img != (j2 + 1) % 3);
      glu[i][j] = SurfaceGluing{it->second, j2, rev};
    }
  }
  return SurfaceComplex::from_gluings(std::move(glu));
}

// --------------------------- file format ----------------------------------
// tri3 <ntets>
// tet <id>: <f0> <f1> <f2> <f3>   each <fi> '-' or '<tid>(<p0><p1><p2><p3>)'

inline Triangulation3 Triangulation3::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, ntet = -1, seen = 0;
  std::vector<std::array<Tet3Gluing, 4>> glu;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (ntet < 0) {
      if (tok != "tri3") throw ParseError(lineno, "expected 'tri3 <ntets>'");
      if (!(ls >> ntet) || ntet < 0)
        throw ParseError(lineno, "bad tetrahedron count");
      glu.assign(ntet, {});
      continue;
    }
    if (tok != "tet") throw ParseError(lineno, "expected 'tet <id>: ...'");
    int id;
    char colon;
    if (!(ls >> id >> colon) || colon != ':' || id < 0 || id >= ntet)
      throw ParseError(lineno, "bad tetrahedron id");
    for (int f = 0; f < 4; ++f) {
      std::string e;
      if (!(ls >> e)) throw ParseError(lineno, "missing face entry");
      if (e == "-") continue;
      auto open = e.find('(');
      if (open == std::string::npos || e.back() != ')' ||
          e.size() != open + 6)
        throw ParseError(lineno, "bad gluing token '" + e + "'");
      int tid;
      try {
        tid = std::stoi(e.substr(0, open));
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad gluing token '" + e + "'");
      }
      if (tid < 0 || tid >= ntet)
        throw ParseError(lineno, "gluing references missing tet " +
                                     std::to_string(tid));
      Perm4 p{};
      for (int i = 0; i < 4; ++i) {
        char c = e[open + 1 + i];
        if (c < '0' || c > '3')
          throw ParseError(lineno, "bad permutation in '" + e + "'");
        p[i] = c - '0';
      }
      if (!perm4_valid(p)) throw ParseError(lineno, "invalid permutation");
      glu[id][f] = Tet3Gluing{tid, p};
    }
    ++seen;
  }
  if (ntet < 0) throw ParseError("missing 'tri3 <ntets>' header");
  if (seen != ntet)
    throw ParseError("expected " + std::to_string(ntet) + " tet lines");
  try {
    return from_gluings(std::move(glu));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid triangulation: ") + e.what());
  }
}

inline std::string Triangulation3::serialize() const {
  std::ostringstream out;
  out << "tri3 " << tet_count() << "\n";
  for (int t = 0; t < tet_count(); ++t) {
    out << "tet " << t << ":";
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g.glued()) {
        out << " -";
      } else {
        out << " " << g.tet << "(";
        for (int i = 0; i < 4; ++i) out << g.perm[i];
        out << ")";
      }
    }
    out << "\n";
  }
  return out.str();
}

inline Triangulation3 Triangulation3::relabeled(
    const std::vector<int>& tet_perm, const std::vector<Perm4>& vperm) const {
  int n = tet_count();
  std::vector<std::array<Tet3Gluing, 4>> glu(n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = glu_[t][f];
      if (!g.glued()) continue;
      // New gluing: vperm[g.tet] o g.perm o vperm[t]^{-1}.
      Perm4 np = perm4_compose(vperm[g.tet],
                               perm4_compose(g.perm, perm4_inverse(vperm[t])));
      glu[tet_perm[t]][vperm[t][f]] = Tet3Gluing{tet_perm[g.tet], np};
    }
  return from_gluings(std::move(glu));
}

inline std::string Triangulation3::canonical_form() const {
  int n = tet_count();
  if (n == 0) return "";
  static std::vector<Perm4> all24 = [] {
    std::vector<Perm4> ps;
    Perm4 p = {0, 1, 2, 3};
    do {
      ps.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return ps;
  }();
  std::string best;
  for (int seed = 0; seed < n; ++seed)
    for (const auto& seed_perm : all24) {
      std::vector<int> tet_perm(n, -1);
      std::vector<Perm4> vperm(n);
      std::vector<int> order{seed};
      tet_perm[seed] = 0;
      vperm[seed] = seed_perm;
      int next_id = 1;
      for (size_t head = 0; head < order.size(); ++head) {
        int t = order[head];
        Perm4 inv = perm4_inverse(vperm[t]);
        for (int nf = 0; nf < 4; ++nf) {
          int f = inv[nf];
          const auto& g = glu_[t][f];
          if (!g.glued() || tet_perm[g.tet] >= 0) continue;
          vperm[g.tet] = perm4_compose(vperm[t], perm4_inverse(g.perm));
          tet_perm[g.tet] = next_id++;
          order.push_back(g.tet);
        }
      }
      if (int(order.size()) != n) continue;
      std::string enc = relabeled(tet_perm, vperm).serialize();
      if (best.empty() || enc < best) best = std::move(enc);
    }
  return best.empty() ? serialize() : best;
}

// ---------------------------------------------------------------------------
// Validation report.
// ---------------------------------------------------------------------------
struct Tri3Report {
  bool closed = false;
  bool all_links_ok = false;  // S^2 links at interior, disks on the boundary
  bool orientable = false;
  int vertices = 0, edges = 0, faces = 0, tets = 0;
  std::vector<int> edge_degrees;
  std::vector<bool> edge_boundary;
  std::vector<int> link_euler;  // per vertex class
};

inline Tri3Report validate_tri3(const Triangulation3& c) {
  Tri3Report r;
  r.closed = c.is_closed();
  r.vertices = c.vertex_count();
  r.edges = c.edge_count();
  r.faces = c.face_count();
  r.tets = c.tet_count();
  r.edge_degrees = c.edge_degrees();
  r.edge_boundary.assign(c.edge_on_boundary().begin(),
                         c.edge_on_boundary().end());
  r.all_links_ok = true;
  for (int v = 0; v < c.vertex_count(); ++v) {
    SurfaceComplex link = c.vertex_link(v);
    int chi = link.euler_characteristic();
    r.link_euler.push_back(chi);
    bool ok = link.is_closed() ? (chi == 2) : (chi == 1);
    if (!ok) r.all_links_ok = false;
  }
  // Orientability: a gluing with odd vertex-permutation parity joins
  // tetrahedra of the same orientation sign.
  r.orientable = true;
  int n = c.tet_count();
  std::vector<int> orient(n, 0);
  for (int seed = 0; seed < n; ++seed) {
    if (orient[seed]) continue;
    orient[seed] = 1;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int f = 0; f < 4; ++f) {
        const auto& g = c.gluing(t, f);
        if (!g.glued()) continue;
        int want = perm4_parity(g.perm) ? orient[t] : -orient[t];
        if (orient[g.tet] == 0) {
          orient[g.tet] = want;
          stack.push_back(g.tet);
        } else if (orient[g.tet] != want) {
          r.orientable = false;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fixed fixtures: the two-tetrahedron sphere (faces glued by the identity)
// and the boundary of the 4-simplex.
// ---------------------------------------------------------------------------
inline Triangulation3 sphere_two_tet() {
  std::vector<std::array<Tet3Gluing, 4>> glu(2);
  for (int f = 0; f < 4; ++f) {
    glu[0][f] = Tet3Gluing{1, kPerm4Id};
    glu[1][f] = Tet3Gluing{0, kPerm4Id};
  }
  return Triangulation3::from_gluings(std::move(glu));
}

inline Triangulation3 sphere_boundary_4simplex() {
  // Tetrahedron i spans the global vertices {0..4} minus {i}; local order
  // ascending.  Faces glue where two tetrahedra share three globals.
  auto globals = [](int i) {
    std::array<int, 4> g{};
    int k = 0;
    for (int v = 0; v < 5; ++v)
      if (v != i) g[k++] = v;
    return g;
  };
  std::vector<std::array<Tet3Gluing, 4>> glu(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      auto gi = globals(i), gj = globals(j);
      Perm4 p{};
      for (int a = 0; a < 4; ++a) {
        if (gi[a] == j) {
          // Local vertex of tet i holding global j maps to tet j's local
          // vertex holding global i (the face-slot pairing).
          p[a] = int(std::find(gj.begin(), gj.end(), i) - gj.begin());
        } else {
          p[a] = int(std::find(gj.begin(), gj.end(), gi[a]) - gj.begin());
        }
      }
      int fslot = int(std::find(gi.begin(), gi.end(), j) - gi.begin());
      glu[i][fslot] = Tet3Gluing{j, p};
    }
  return Triangulation3::from_gluings(std::move(glu));
}

}  // namespace ttn
