// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "ttn/group.hpp"
#include "ttn/network.hpp"
#include "ttn/surface.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// The 2-D TLFT of a finite group on a closed oriented surface: triangle
// tensors C^{ijk} = chi_reg(ijk) / |G|^{3/2} and gluing tensors
// g_{ij} = chi_reg(ij) / |G|.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> surface_orientation(const SurfaceComplex& s) {
  return orientation_signs(s);
}

/// Per-triangle axis order: slots in boundary-traversal order under the
/// surface orientation (slot order 0,1,2 for +1, reversed for -1).
inline std::array<int, 3> slot_axis_order(int orient) {
  return orient >= 0 ? std::array<int, 3>{0, 1, 2}
                     : std::array<int, 3>{0, 2, 1};
}

}  // namespace detail

template <class S>
struct Tlft2dNetwork {
  TensorNetwork<S> net;
  std::vector<int> triangle_vertex;  // network vertex per surface triangle
  std::vector<int> edge_vertex;      // network vertex per surface edge class
  std::vector<int> orient;           // +1/-1 per triangle
};

/// Build the TLFT network over a scalar type.  `triangle_entry(prod_is_id)`
/// and `gluing_entry(prod_is_id)` supply the tensor entries so the exact
/// QuadScalar network and the integer counting network share one builder.
template <class S, class TriFn, class GluFn>
Tlft2dNetwork<S> build_tlft2d_network_with(const FiniteGroup& G,
                                           const SurfaceComplex& s,
                                           TriFn triangle_entry,
                                           GluFn gluing_entry) {
  if (!s.is_closed())
    throw PreconditionError("tlft2d: surface has boundary");
  if (!s.is_orientable())
    throw PreconditionError("tlft2d: surface is not orientable");
  int n = G.order();
  Tlft2dNetwork<S> out;
  out.orient = detail::surface_orientation(s);

  for (int t = 0; t < s.triangle_count(); ++t) {
    DenseTensor<S> C(std::vector<int>{n, n, n});
    size_t f = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c, ++f)
          C.data[f] = triangle_entry(G.mul(G.mul(a, b), c) == G.identity());
    out.triangle_vertex.push_back(out.net.add_tensor(std::move(C)));
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& sd = s.edge_sides()[e];
    if (sd.boundary()) throw PreconditionError("tlft2d: boundary edge");
    DenseTensor<S> g(std::vector<int>{n, n});
    size_t f = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b, ++f)
        g.data[f] = gluing_entry(G.mul(a, b) == G.identity());
    out.edge_vertex.push_back(out.net.add_tensor(std::move(g)));
  }
  // Wire each edge class's two sides to the gluing tensor's two axes; the
  // triangle axis for surface slot k follows the orientation-dependent
  // cyclic order.
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& sd = s.edge_sides()[e];
    auto axis_of = [&](int tri, int slot) {
      auto order = detail::slot_axis_order(out.orient[tri]);
      for (int a = 0; a < 3; ++a)
        if (order[a] == slot) return a;
      return -1;
    };
    out.net.connect(out.triangle_vertex[sd.tri_a], axis_of(sd.tri_a, sd.slot_a),
                    out.edge_vertex[e], 0);
    out.net.connect(out.triangle_vertex[sd.tri_b], axis_of(sd.tri_b, sd.slot_b),
                    out.edge_vertex[e], 1);
  }
  return out;
}

/// Exact TLFT network over QuadScalar with radicand |G|.  Verifies cyclic
/// invariance of C and the flip identity
/// C^{abc} g_{cd} C^{def} = C^{acf} g_{cd} C^{bed} on the built tensors.
inline Tlft2dNetwork<QuadScalar> build_network(const FiniteGroup& G,
                                               const SurfaceComplex& s) {
  long n = G.order();
  // chi_reg(xyz)/|G|^{3/2} = [xyz = 1] / sqrt(|G|); chi_reg(xy)/|G| = [xy=1].
  QuadScalar inv_sqrt = QuadScalar(1) / QuadScalar::sqrt_of(n);
  auto out = build_tlft2d_network_with<QuadScalar>(
      G, s,
      [&](bool is_id) { return is_id ? inv_sqrt : QuadScalar(0); },
      [&](bool is_id) { return is_id ? QuadScalar(1) : QuadScalar(0); });

  // Cyclic invariance of the triangle tensor.
  const DenseTensor<QuadScalar>& C = out.net.tensors[out.triangle_vertex[0]];
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (C.at({a, b, c}) != C.at({b, c, a}))
          throw Error("tlft2d: triangle tensor is not cyclically invariant");
  // Flip identity, using the gluing tensor's support.
  const DenseTensor<QuadScalar>& g = out.net.tensors[out.edge_vertex[0]];
  std::vector<std::pair<int, int>> g_support;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (!g.at({c, d}).is_zero()) g_support.push_back({c, d});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
          QuadScalar lhs(0), rhs(0);
          for (auto [c, d] : g_support) {
            lhs += C.at({a, b, c}) * g.at({c, d}) * C.at({d, e, f});
            rhs += C.at({a, c, f}) * g.at({c, d}) * C.at({b, e, d});
          }
          if (lhs != rhs) throw Error("tlft2d: 2-2 move identity failed");
        }
  return out;
}

/// Exact invariant M(G, S).  Evaluates the valid-labeling count by integer
/// tensor contraction (the network with C and g rescaled to 0/1 entries) and
/// rescales by |G|^{T-E}; the closed-surface value is always rational.
inline Rat invariant_exact(const FiniteGroup& G, const SurfaceComplex& s,
                           size_t memory_budget = size_t(1) << 24) {
  int T = s.triangle_count(), E = s.edge_count();
  Rat count;
  double bits = double(E) * std::log2(double(G.order()));
  if (bits < 62.0) {
    auto net = build_tlft2d_network_with<long long>(
        G, s, [](bool id) { return (long long)id; },
        [](bool id) { return (long long)id; });
    auto rep = contract(net.net, greedy_plan(net.net), memory_budget);
    count = Rat(rep.value);
  } else {
    auto net = build_tlft2d_network_with<Rat>(
        G, s, [](bool id) { return Rat(id); },
        [](bool id) { return Rat(id); });
    auto rep = contract(net.net, greedy_plan(net.net), memory_budget);
    count = rep.value;
  }
  return count * rat_pow(Rat(G.order()), T - E);
}

/// Mednykh's right-hand side |G|^{chi-1} |Hom(pi_1(S), G)| with the genus
/// derived from the Euler characteristic.
inline Rat mednykh_rhs(const FiniteGroup& G, const SurfaceComplex& s,
                       long long hom_budget = 100'000'000) {
  if (!s.is_closed() || !s.is_orientable())
    throw PreconditionError("mednykh_rhs: need a closed orientable surface");
  int chi = s.euler_characteristic();
  if ((2 - chi) % 2 != 0) throw Error("mednykh_rhs: odd 2-chi");
  int genus = (2 - chi) / 2;
  long long hom = G.hom_count(genus, hom_budget);
  return rat_pow(Rat(G.order()), chi - 1) * hom;
}

/// Closed form sum over shipped irrep dimensions: sum dim^chi.
inline Rat closed_form_invariant(const FiniteGroup& G,
                                 const SurfaceComplex& s) {
  int chi = s.euler_characteristic();
  Rat sum(0);
  for (int d : G.irrep_dims()) sum += rat_pow(Rat(d), chi);
  return sum;
}

// ---------------------------------------------------------------------------
// Valid labelings: assignments of group elements to triangle edge-slots such
// that every glued pair multiplies to the identity and every triangle's
// boundary cycle multiplies to the identity.  Parametrized by one element per
// edge class; enumerated with triangle-product pruning.
// ---------------------------------------------------------------------------
inline long long valid_labeling_count(const FiniteGroup& G,
                                      const SurfaceComplex& s,
                                      double budget = double(1 << 24)) {
  if (!s.is_closed())
    throw PreconditionError("valid_labeling_count: surface has boundary");
  int n = G.order(), E = s.edge_count(), T = s.triangle_count();
  if (std::pow(double(n), E) > budget)
    throw BudgetError("valid_labeling_count: |G|^E exceeds budget");
  auto orient = detail::surface_orientation(s);
  // Triangle slot values: side A of an edge takes x_e, side B takes
  // x_e^{-1}; a triangle's cycle follows its orientation order.
  struct SlotUse {
    int edge;
    bool inverse;
  };
  std::vector<std::array<SlotUse, 3>> tri_slots(T);
  for (int t = 0; t < T; ++t) {
    auto order = detail::slot_axis_order(orient[t]);
    for (int i = 0; i < 3; ++i) {
      int slot = order[i];
      int e = s.edge_class(t, slot);
      const auto& sd = s.edge_sides()[e];
      bool is_a = (sd.tri_a == t && sd.slot_a == slot);
      tri_slots[t][i] = {e, !is_a};
    }
  }
  // Process triangles as soon as all their edges are assigned.
  std::vector<std::vector<int>> ready(E + 1);
  {
    std::vector<int> last(T, -1);
    for (int t = 0; t < T; ++t)
      for (auto& u : tri_slots[t]) last[t] = std::max(last[t], u.edge);
    for (int t = 0; t < T; ++t) ready[last[t] + 1].push_back(t);
  }
  std::vector<int> label(E, 0), inv_label(E, 0);
  long long count = 0;
  // Iterative DFS over edge labels.
  int depth = 0;
  std::vector<int> next(E + 1, 0);
  while (depth >= 0) {
    if (depth == E) {
      ++count;
      --depth;
      continue;
    }
    if (next[depth] == n) {
      next[depth] = 0;
      --depth;
      continue;
    }
    label[depth] = next[depth]++;
    inv_label[depth] = G.inv(label[depth]);
    bool ok = true;
    for (int t : ready[depth + 1]) {
      int prod = G.identity();
      for (auto& u : tri_slots[t])
        prod = G.mul(prod, u.inverse ? inv_label[u.edge] : label[u.edge]);
      if (prod != G.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++depth;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Monte Carlo estimator: sample uniform group elements on all 3T slots and
// count valid labelings; estimate = |G|^{T-E} * |G|^{3T} * (hit fraction).
// Blocked sampling with per-block seeds keeps results reproducible and
// thread-count independent.
// ---------------------------------------------------------------------------
struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  long long hits = 0;
  long long samples = 0;
};

inline MonteCarloResult monte_carlo_estimate(const FiniteGroup& G,
                                             const SurfaceComplex& s,
                                             long long samples,
                                             uint64_t seed) {
  if (samples < 1) throw PreconditionError("monte_carlo: samples must be >= 1");
  int n = G.order(), T = s.triangle_count();
  auto orient = detail::surface_orientation(s);
  // Slot indexing: 3t + slot.  Precompute cyclic orders and glued pairs.
  std::vector<std::array<int, 3>> cyc(T);
  for (int t = 0; t < T; ++t) cyc[t] = detail::slot_axis_order(orient[t]);
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& sd = s.edge_sides()[e];
    if (!sd.boundary())
      pairs.push_back({3 * sd.tri_a + sd.slot_a, 3 * sd.tri_b + sd.slot_b});
  }
  const long long block_size = 1 << 16;
  long long nblocks = (samples + block_size - 1) / block_size;
  std::vector<long long> block_hits(nblocks, 0);
  auto run_block = [&](long long blk) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + uint64_t(blk) + 1);
    long long from = blk * block_size;
    long long to = std::min(samples, from + block_size);
    std::vector<int> slot(3 * size_t(T));
    // Unbiased sampling via rejection below the largest multiple of n.
    uint64_t limit = (~uint64_t(0) / uint64_t(n)) * uint64_t(n);
    auto draw = [&]() {
      uint64_t r;
      do {
        r = rng();
      } while (r >= limit);
      return int(r % uint64_t(n));
    };
    long long hits = 0;
    for (long long i = from; i < to; ++i) {
      for (auto& v : slot) v = draw();
      bool ok = true;
      for (auto& [p, q] : pairs)
        if (G.mul(slot[p], slot[q]) != G.identity()) {
          ok = false;
          break;
        }
      if (ok)
        for (int t = 0; t < T && ok; ++t) {
          int prod = G.mul(G.mul(slot[3 * t + cyc[t][0]],
                                 slot[3 * t + cyc[t][1]]),
                           slot[3 * t + cyc[t][2]]);
          ok = (prod == G.identity());
        }
      if (ok) ++hits;
    }
    block_hits[blk] = hits;
  };
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || nblocks == 1) {
    for (long long b = 0; b < nblocks; ++b) run_block(b);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (long long b = next.fetch_add(1); b < nblocks;
             b = next.fetch_add(1))
          run_block(b);
      });
    for (auto& th : pool) th.join();
  }
  long long hits = 0;
  for (long long h : block_hits) hits += h;
  MonteCarloResult r;
  r.hits = hits;
  r.samples = samples;
  int E = s.edge_count();
  double scale = std::pow(double(n), double(T - E)) *
                 std::pow(double(n), 3.0 * T);
  double p = double(hits) / double(samples);
  r.estimate = scale * p;
  r.std_error = scale * std::sqrt(std::max(0.0, p * (1.0 - p)) /
                                  double(samples));
  return r;
}

// ---------------------------------------------------------------------------
// Cap accounting.  An interior edge is a cap when its two triangle sides are
// both before or both after it in the ordering; a triangle is a cap when its
// three edges all precede or all follow it.  Boundary edges never count (no
// gluing tensor sits on them).
// ---------------------------------------------------------------------------
inline int cap_count(const SurfaceComplex& s,
                     const std::vector<OrderingElement>& ordering) {
  int T = s.triangle_count(), E = s.edge_count();
  if (int(ordering.size()) != T + E)
    throw PreconditionError("cap_count: ordering is not a permutation");
  std::vector<int> tri_pos(T, -1), edge_pos(E, -1);
  for (size_t i = 0; i < ordering.size(); ++i) {
    const auto& el = ordering[i];
    auto& pos = el.is_triangle ? tri_pos : edge_pos;
    int limit = el.is_triangle ? T : E;
    if (el.index < 0 || el.index >= limit || pos[el.index] >= 0)
      throw PreconditionError("cap_count: ordering is not a permutation");
    pos[el.index] = int(i);
  }
  int caps = 0;
  for (int e = 0; e < E; ++e) {
    const auto& sd = s.edge_sides()[e];
    if (sd.boundary()) continue;
    int p1 = tri_pos[sd.tri_a], p2 = tri_pos[sd.tri_b], pe = edge_pos[e];
    if ((p1 < pe && p2 < pe) || (p1 > pe && p2 > pe)) ++caps;
  }
  for (int t = 0; t < T; ++t) {
    bool all_before = true, all_after = true;
    for (int sl = 0; sl < 3; ++sl) {
      int pe = edge_pos[s.edge_class(t, sl)];
      (pe < tri_pos[t] ? all_after : all_before) = false;
    }
    if (all_before || all_after) ++caps;
  }
  return caps;
}

/// Approximation scale |G|^{k/2} for an ordering with k caps.
inline double cap_scale(const FiniteGroup& G,
                        const SurfaceComplex& s,
                        const std::vector<OrderingElement>& ordering) {
  return std::pow(double(G.order()), cap_count(s, ordering) / 2.0);
}

/// Exact minimum of cap_count over all orderings, by subset dynamic
/// programming over the T+E elements (feasible up to ~24 elements).
inline int min_cap_count(const SurfaceComplex& s) {
  int T = s.triangle_count(), E = s.edge_count();
  int m = T + E;
  if (m > 26) throw BudgetError("min_cap_count: too many elements");
  // Neighbor masks: edge element T+e touches its side triangles; triangle
  // element t touches its edge elements.
  std::vector<uint64_t> nbr(m, 0);
  std::vector<int> nbr_count(m, 0);
  for (int e = 0; e < E; ++e) {
    const auto& sd = s.edge_sides()[e];
    if (sd.boundary()) continue;
    nbr[T + e] = (uint64_t(1) << sd.tri_a) | (uint64_t(1) << sd.tri_b);
    nbr_count[T + e] = 2;
  }
  for (int t = 0; t < T; ++t) {
    uint64_t mask = 0;
    for (int sl = 0; sl < 3; ++sl) mask |= uint64_t(1) << (T + s.edge_class(t, sl));
    nbr[t] = mask;
    nbr_count[t] = 3;
  }
  size_t total = size_t(1) << m;
  std::vector<uint8_t> dp(total, 255);
  dp[0] = 0;
  for (uint64_t mask = 0; mask < total; ++mask) {
    uint8_t cur = dp[mask];
    if (cur == 255) continue;
    for (int x = 0; x < m; ++x) {
      if (mask & (uint64_t(1) << x)) continue;
      uint64_t inter = nbr[x] & mask;
      int cap;
      if (x >= T && s.edge_sides()[x - T].boundary())
        cap = 0;  // boundary edges carry no gluing tensor
      else
        cap = (inter == nbr[x] || inter == 0) ? 1 : 0;
      uint64_t nm = mask | (uint64_t(1) << x);
      uint8_t cand = uint8_t(cur + cap);
      if (cand < dp[nm]) dp[nm] = cand;
    }
  }
  return dp[total - 1];
}

}  // namespace ttn
