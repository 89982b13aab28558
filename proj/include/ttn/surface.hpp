// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttn/error.hpp"

namespace ttn {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  /// Relabel classes as 0..k-1 in order of first appearance; returns k.
  int compress(std::vector<int>& out) {
    out.assign(parent_.size(), -1);
    std::vector<int> label(parent_.size(), -1);
    int next = 0;
    for (size_t i = 0; i < parent_.size(); ++i) {
      int r = find(int(i));
      if (label[r] < 0) label[r] = next++;
      out[i] = label[r];
    }
    return next;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// An element of an ordering of a complex's edges and triangles.
struct OrderingElement {
  bool is_triangle = false;
  int index = -1;  // triangle id, or edge class id
};

/// One side of an edge gluing.  `rev` tells how the two edge-slots are
/// identified: slot k of a triangle runs from corner (k+1)%3 to (k+2)%3;
/// rev == true identifies the two slots with opposite directions (the
/// orientation-compatible case for consistently oriented triangles).
struct SurfaceGluing {
  int tri = -1;
  int slot = -1;
  bool rev = false;
  bool glued() const { return tri >= 0; }
};

// ---------------------------------------------------------------------------
// SurfaceComplex: triangles with local vertices {0,1,2} and edge-slot
// gluings; edge-slot k is opposite local vertex k.  Vertex and edge quotient
// classes are recomputed eagerly on construction, so every mutation builds a
// fresh complex.  Self-gluings between two slots of one triangle are allowed;
// a slot glued to itself is not.
// ---------------------------------------------------------------------------
class SurfaceComplex {
 public:
  SurfaceComplex() = default;

  /// Extra vertex identification (a wedge point): corners (t1,c1) ~ (t2,c2)
  /// are identified without any edge gluing.
  struct Pinch {
    int tri_a, corner_a, tri_b, corner_b;
  };

  static SurfaceComplex from_gluings(
      std::vector<std::array<SurfaceGluing, 3>> gluings,
      std::vector<Pinch> pinches = {}) {
    SurfaceComplex c;
    c.glu_ = std::move(gluings);
    c.pinches_ = std::move(pinches);
    c.recompute();
    return c;
  }

  static SurfaceComplex parse(const std::string& text);
  std::string serialize() const;

  int triangle_count() const { return int(glu_.size()); }
  int vertex_count() const { return nv_; }
  int edge_count() const { return ne_; }
  int euler_characteristic() const {
    return nv_ - ne_ + triangle_count();
  }
  bool is_closed() const { return closed_; }
  bool is_orientable() const { return orientable_; }

  const SurfaceGluing& gluing(int t, int s) const { return glu_.at(t).at(s); }
  const std::vector<std::array<SurfaceGluing, 3>>& gluings() const {
    return glu_;
  }
  const std::vector<Pinch>& pinches() const { return pinches_; }

  int vertex_class(int t, int corner) const {
    return vclass_.at(t).at(corner);
  }
  int edge_class(int t, int slot) const { return eclass_.at(t).at(slot); }

  /// The one or two (triangle, slot) sides of each edge class.
  struct EdgeSides {
    int tri_a = -1, slot_a = -1;
    int tri_b = -1, slot_b = -1;  // tri_b < 0 for boundary edges
    bool boundary() const { return tri_b < 0; }
  };
  const std::vector<EdgeSides>& edge_sides() const { return sides_; }

  /// Endpoint vertex classes of an edge class (unordered).
  std::pair<int, int> edge_endpoints(int edge) const {
    const auto& s = sides_.at(edge);
    int v1 = vertex_class(s.tri_a, (s.slot_a + 1) % 3);
    int v2 = vertex_class(s.tri_a, (s.slot_a + 2) % 3);
    return {std::min(v1, v2), std::max(v1, v2)};
  }

  /// Degree of a vertex class = number of (triangle, corner) incidences.
  int vertex_degree(int vclass) const {
    int d = 0;
    for (int t = 0; t < triangle_count(); ++t)
      for (int k = 0; k < 3; ++k)
        if (vclass_[t][k] == vclass) ++d;
    return d;
  }

  /// Rebuild under a triangle permutation and per-triangle corner
  /// permutations: new triangle tri_perm[t] is old t with new corner
  /// corner_perm[t][k] being old corner k.
  SurfaceComplex relabeled(const std::vector<int>& tri_perm,
                           const std::vector<std::array<int, 3>>& cperm) const;

  /// Canonical byte encoding up to combinatorial isomorphism (BFS canonical
  /// relabeling from every seed, lexicographic minimum).
  std::string canonical_form() const;

 private:
  void recompute() {
    int n = triangle_count();
    // Gluing involution sanity.
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < 3; ++s) {
        const auto& g = glu_[t][s];
        if (!g.glued()) continue;
        if (g.tri >= n || g.slot < 0 || g.slot > 2)
          throw Error("gluing reference out of range at triangle " +
                      std::to_string(t));
        if (g.tri == t && g.slot == s)
          throw Error("edge-slot glued to itself at triangle " +
                      std::to_string(t));
        const auto& back = glu_[g.tri][g.slot];
        if (back.tri != t || back.slot != s || back.rev != g.rev)
          throw Error("gluing is not an involution at triangle " +
                      std::to_string(t) + " slot " + std::to_string(s));
      }
    // Vertex classes.
    detail::UnionFind vu(3 * n);
    auto cid = [&](int t, int k) { return 3 * t + k; };
    closed_ = true;
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < 3; ++s) {
        const auto& g = glu_[t][s];
        if (!g.glued()) {
          closed_ = false;
          continue;
        }
        int c1 = (s + 1) % 3, c2 = (s + 2) % 3;
        int d1 = (g.slot + 1) % 3, d2 = (g.slot + 2) % 3;
        if (g.rev) std::swap(d1, d2);
        vu.unite(cid(t, c1), cid(g.tri, d1));
        vu.unite(cid(t, c2), cid(g.tri, d2));
      }
    for (const Pinch& p : pinches_) {
      if (p.tri_a < 0 || p.tri_a >= n || p.tri_b < 0 || p.tri_b >= n ||
          p.corner_a < 0 || p.corner_a > 2 || p.corner_b < 0 ||
          p.corner_b > 2)
        throw Error("pinch reference out of range");
      vu.unite(cid(p.tri_a, p.corner_a), cid(p.tri_b, p.corner_b));
    }
    std::vector<int> vmap;
    nv_ = vu.compress(vmap);
    vclass_.assign(n, {});
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < 3; ++k) vclass_[t][k] = vmap[cid(t, k)];
    // Edge classes.
    detail::UnionFind eu(3 * n);
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < 3; ++s)
        if (glu_[t][s].glued())
          eu.unite(cid(t, s), cid(glu_[t][s].tri, glu_[t][s].slot));
    std::vector<int> emap;
    ne_ = eu.compress(emap);
    eclass_.assign(n, {});
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < 3; ++s) eclass_[t][s] = emap[cid(t, s)];
    sides_.assign(ne_, {});
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < 3; ++s) {
        auto& sd = sides_[eclass_[t][s]];
        if (sd.tri_a < 0) {
          sd.tri_a = t;
          sd.slot_a = s;
        } else if (sd.tri_b < 0 && !(sd.tri_a == t && sd.slot_a == s)) {
          sd.tri_b = t;
          sd.slot_b = s;
        }
      }
    // Orientability: rev gluings preserve the orientation class.
    orientable_ = true;
    std::vector<int> orient(n, 0);
    for (int seed = 0; seed < n; ++seed) {
      if (orient[seed]) continue;
      orient[seed] = 1;
      std::vector<int> stack{seed};
      while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s = 0; s < 3; ++s) {
          const auto& g = glu_[t][s];
          if (!g.glued()) continue;
          int want = g.rev ? orient[t] : -orient[t];
          if (orient[g.tri] == 0) {
            orient[g.tri] = want;
            stack.push_back(g.tri);
          } else if (orient[g.tri] != want) {
            orientable_ = false;
          }
        }
      }
    }
  }

  std::vector<std::array<SurfaceGluing, 3>> glu_;
  std::vector<Pinch> pinches_;
  std::vector<std::array<int, 3>> vclass_, eclass_;
  std::vector<EdgeSides> sides_;
  int nv_ = 0, ne_ = 0;
  bool closed_ = true, orientable_ = true;
};

inline int euler_characteristic(const SurfaceComplex& c) {
  return c.euler_characteristic();
}

/// Consistent orientation signs (+1/-1 per triangle, 0 never) for each
/// connected component; meaningful when the complex is orientable.
inline std::vector<int> orientation_signs(const SurfaceComplex& s) {
  int n = s.triangle_count();
  std::vector<int> orient(n, 0);
  for (int seed = 0; seed < n; ++seed) {
    if (orient[seed]) continue;
    orient[seed] = 1;
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int sl = 0; sl < 3; ++sl) {
        const auto& g = s.gluing(t, sl);
        if (!g.glued()) continue;
        int want = g.rev ? orient[t] : -orient[t];
        if (orient[g.tri] == 0) {
          orient[g.tri] = want;
          stack.push_back(g.tri);
        }
      }
    }
  }
  return orient;
}

// --------------------------- file format ----------------------------------
// surface <ntriangles>
// tri <id>: <e0> <e1> <e2>     each <ei> is '-' or '<tid>.<slot><+|->'
// pinch <t1>.<c1> <t2>.<c2>    optional extra vertex identification
// '#' starts a comment.

inline SurfaceComplex SurfaceComplex::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, ntri = -1, seen = 0;
  std::vector<std::array<SurfaceGluing, 3>> glu;
  std::vector<SurfaceComplex::Pinch> pinches;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (ntri < 0) {
      if (tok != "surface")
        throw ParseError(lineno, "expected 'surface <ntriangles>'");
      if (!(ls >> ntri) || ntri < 0)
        throw ParseError(lineno, "bad triangle count");
      glu.assign(ntri, {});
      continue;
    }
    if (tok == "pinch") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError(lineno, "bad pinch line");
      auto split = [&](const std::string& s) {
        auto dot = s.find('.');
        if (dot == std::string::npos) throw ParseError(lineno, "bad pinch");
        return std::pair<int, int>{std::stoi(s.substr(0, dot)),
                                   std::stoi(s.substr(dot + 1))};
      };
      auto [t1, c1] = split(a);
      auto [t2, c2] = split(b);
      pinches.push_back({t1, c1, t2, c2});
      continue;
    }
    if (tok != "tri") throw ParseError(lineno, "expected 'tri <id>: ...'");
    int id;
    char colon;
    if (!(ls >> id >> colon) || colon != ':' || id < 0 || id >= ntri)
      throw ParseError(lineno, "bad triangle id");
    for (int s = 0; s < 3; ++s) {
      std::string e;
      if (!(ls >> e)) throw ParseError(lineno, "missing edge-slot entry");
      if (e == "-") continue;
      auto dot = e.find('.');
      char orient = e.back();
      if (dot == std::string::npos || (orient != '+' && orient != '-'))
        throw ParseError(lineno, "bad gluing token '" + e + "'");
      try {
        int tid = std::stoi(e.substr(0, dot));
        int slot = std::stoi(e.substr(dot + 1, e.size() - dot - 2));
        if (tid < 0 || tid >= ntri)
          throw ParseError(lineno, "gluing references missing triangle " +
                                       std::to_string(tid));
        if (slot < 0 || slot > 2) throw ParseError(lineno, "bad slot");
        glu[id][s] = SurfaceGluing{tid, slot, orient == '-'};
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "bad gluing token '" + e + "'");
      }
    }
    ++seen;
  }
  if (ntri < 0) throw ParseError("missing 'surface <ntriangles>' header");
  if (seen != ntri)
    throw ParseError("expected " + std::to_string(ntri) + " triangle lines");
  try {
    return from_gluings(std::move(glu), std::move(pinches));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid complex: ") + e.what());
  }
}

inline std::string SurfaceComplex::serialize() const {
  std::ostringstream out;
  out << "surface " << triangle_count() << "\n";
  for (int t = 0; t < triangle_count(); ++t) {
    out << "tri " << t << ":";
    for (int s = 0; s < 3; ++s) {
      const auto& g = glu_[t][s];
      if (!g.glued())
        out << " -";
      else
        out << " " << g.tri << "." << g.slot << (g.rev ? '-' : '+');
    }
    out << "\n";
  }
  for (const Pinch& p : pinches_)
    out << "pinch " << p.tri_a << "." << p.corner_a << " " << p.tri_b << "."
        << p.corner_b << "\n";
  return out.str();
}

inline SurfaceComplex SurfaceComplex::relabeled(
    const std::vector<int>& tri_perm,
    const std::vector<std::array<int, 3>>& cperm) const {
  int n = triangle_count();
  std::vector<std::array<SurfaceGluing, 3>> glu(n);
  // Slot permutation induced by a corner permutation is the same map.
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < 3; ++s) {
      const auto& g = glu_[t][s];
      if (!g.glued()) continue;
      int nt = tri_perm[t], ns = cperm[t][s];
      int pt = tri_perm[g.tri], ps = cperm[g.tri][g.slot];
      // Direction of (t,s) in new labels: corners (s+1),(s+2) map to
      // cperm[t][(s+1)%3] -> cperm[t][(s+2)%3]; canonical for new slot ns is
      // (ns+1)%3 -> (ns+2)%3.
      bool flip_here = cperm[t][(s + 1) % 3] != (ns + 1) % 3;
      bool flip_there = cperm[g.tri][(g.slot + 1) % 3] != (ps + 1) % 3;
      glu[nt][ns] = SurfaceGluing{pt, ps, bool(g.rev ^ flip_here ^ flip_there)};
    }
  std::vector<Pinch> pinches;
  for (const Pinch& p : pinches_)
    pinches.push_back({tri_perm[p.tri_a], cperm[p.tri_a][p.corner_a],
                       tri_perm[p.tri_b], cperm[p.tri_b][p.corner_b]});
  return from_gluings(std::move(glu), std::move(pinches));
}

inline std::string SurfaceComplex::canonical_form() const {
  int n = triangle_count();
  if (n == 0) return "";
  static const std::array<std::array<int, 3>, 6> all_perms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  std::string best;
  for (int seed = 0; seed < n; ++seed) {
    for (const auto& seed_perm : all_perms) {
      // BFS assigning new ids and corner permutations.
      std::vector<int> tri_perm(n, -1);
      std::vector<std::array<int, 3>> cperm(n);
      std::vector<int> order;
      tri_perm[seed] = 0;
      cperm[seed] = seed_perm;
      order.push_back(seed);
      int next_id = 1;
      for (size_t head = 0; head < order.size(); ++head) {
        int t = order[head];
        // Visit this triangle's new slots in order.
        std::array<int, 3> old_slot_of_new;
        for (int s = 0; s < 3; ++s) old_slot_of_new[cperm[t][s]] = s;
        for (int ns = 0; ns < 3; ++ns) {
          int s = old_slot_of_new[ns];
          const auto& g = glu_[t][s];
          if (!g.glued() || tri_perm[g.tri] >= 0) continue;
          // Induce partner corner permutation: shared edge corners map so
          // that the glued edge has matching labels; apex follows.
          auto& pc = cperm[g.tri];
          int c1 = (s + 1) % 3, c2 = (s + 2) % 3;
          int d1 = (g.slot + 1) % 3, d2 = (g.slot + 2) % 3;
          if (g.rev) std::swap(d1, d2);
          pc[d1] = cperm[t][c1];
          pc[d2] = cperm[t][c2];
          pc[g.slot] = 3 - pc[d1] - pc[d2];
          tri_perm[g.tri] = next_id++;
          order.push_back(g.tri);
        }
      }
      if (int(order.size()) != n) continue;  // disconnected: skip seed combo
      std::string enc = relabeled(tri_perm, cperm).serialize();
      if (best.empty() || enc < best) best = std::move(enc);
    }
  }
  if (best.empty()) {
    // Disconnected complex: canonicalize componentwise.
    best = serialize();  // TODO: componentwise canonical form if ever needed
  }
  return best;
}

}  // namespace ttn
