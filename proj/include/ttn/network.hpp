// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ttn/tensor.hpp"

namespace ttn {

/// Ordering of the network vertices for step-by-step contraction.
struct ContractionPlan {
  std::vector<int> order;
};

template <class S>
struct ContractionReport {
  S value{0};
  double value_double = 0.0;
  double delta = 1.0;  // product of per-step operator norms
  struct Step {
    int vertex;
    int incoming;   // k: axes shared with the already-contracted part
    int outgoing;   // l: axes toward the rest of the network
    double norm;    // operator norm of the step matricization
  };
  std::vector<Step> steps;
};

// ---------------------------------------------------------------------------
// TensorNetwork: tensors at vertices, edges pairing tensor axes.  Each edge
// records which endpoint is the contravariant one (`from`).  Open axes
// (matched by no edge) are allowed while building; state_sum and contract
// require a closed network.
// ---------------------------------------------------------------------------
template <class S>
struct TensorNetwork {
  struct End {
    int vertex = -1;
    int axis = -1;
  };
  struct Edge {
    End from, to;  // contravariant / covariant endpoints
  };

  std::vector<DenseTensor<S>> tensors;
  std::vector<Edge> edges;

  int add_tensor(DenseTensor<S> t) {
    tensors.push_back(std::move(t));
    return int(tensors.size()) - 1;
  }
  int connect(int v_from, int axis_from, int v_to, int axis_to) {
    edges.push_back(Edge{{v_from, axis_from}, {v_to, axis_to}});
    return int(edges.size()) - 1;
  }

  /// axis_edge[v][a] = edge index attached to (v, a), or -1 if open.
  std::vector<std::vector<int>> axis_edges() const {
    std::vector<std::vector<int>> m(tensors.size());
    for (size_t v = 0; v < tensors.size(); ++v)
      m[v].assign(tensors[v].dims.size(), -1);
    for (size_t e = 0; e < edges.size(); ++e) {
      for (const End* end : {&edges[e].from, &edges[e].to}) {
        if (end->vertex < 0 || end->vertex >= int(tensors.size()))
          throw Error("network edge references missing vertex");
        auto& slot = m[end->vertex].at(end->axis);
        if (slot != -1) throw Error("tensor axis matched by two edges");
        slot = int(e);
      }
      int da = tensors[edges[e].from.vertex].dims.at(edges[e].from.axis);
      int db = tensors[edges[e].to.vertex].dims.at(edges[e].to.axis);
      if (da != db) throw Error("axis dimensions disagree across an edge");
    }
    return m;
  }

  bool closed() const {
    auto m = axis_edges();
    for (auto& row : m)
      for (int e : row)
        if (e < 0) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// state_sum: exact evaluation of a closed network by summing over all edge
// labelings (Eq.-(1)-style).  Intended as the small-instance oracle.
// ---------------------------------------------------------------------------
template <class S>
S state_sum(const TensorNetwork<S>& net, double budget = double(1 << 24)) {
  auto axis_map = net.axis_edges();
  for (auto& row : axis_map)
    for (int e : row)
      if (e < 0) throw PreconditionError("state_sum: network is open");

  double labelings = 1;
  std::vector<int> edge_dim(net.edges.size(), 1);
  for (size_t e = 0; e < net.edges.size(); ++e) {
    const auto& ed = net.edges[e];
    edge_dim[e] = net.tensors[ed.from.vertex].dims[ed.from.axis];
    labelings *= edge_dim[e];
    if (labelings > budget)
      throw BudgetError("state_sum: labeling count exceeds budget");
  }

  // Per vertex: strides into the tensor keyed by edge label positions.
  size_t nv = net.tensors.size();
  std::vector<std::vector<std::pair<int, size_t>>> vertex_axes(nv);
  for (size_t v = 0; v < nv; ++v) {
    auto st = net.tensors[v].strides();
    for (size_t a = 0; a < net.tensors[v].dims.size(); ++a)
      vertex_axes[v].push_back({axis_map[v][a], st[a]});
  }

  std::vector<int> label(net.edges.size(), 0);
  S total(0);
  while (true) {
    S term(1);
    bool zero = false;
    for (size_t v = 0; v < nv && !zero; ++v) {
      size_t off = 0;
      for (auto [e, stride] : vertex_axes[v]) off += stride * label[e];
      const S& entry = net.tensors[v].data[off];
      if (is_zero_scalar(entry)) {
        zero = true;
        break;
      }
      term *= entry;
    }
    if (!zero) total += term;
    size_t e = 0;
    for (; e < label.size(); ++e) {
      if (++label[e] < edge_dim[e]) break;
      label[e] = 0;
    }
    if (e == label.size()) break;
    if (label.empty()) break;
  }
  return total;
}

namespace detail {

template <class S>
Eigen::MatrixXd matricize(const DenseTensor<S>& t,
                          const std::vector<int>& in_axes,
                          const std::vector<int>& out_axes) {
  size_t rows = 1, cols = 1;
  for (int a : out_axes) rows *= t.dims[a];
  for (int a : in_axes) cols *= t.dims[a];
  Eigen::MatrixXd m(rows, cols);
  auto st = t.strides();
  std::vector<int> idx(t.dims.size(), 0);
  for (size_t flat = 0; flat < t.size(); ++flat) {
    size_t r = 0, c = 0;
    for (int a : out_axes) r = r * t.dims[a] + idx[a];
    for (int a : in_axes) c = c * t.dims[a] + idx[a];
    m(r, c) = to_float(t.data[flat]);
    for (int i = int(idx.size()) - 1; i >= 0; --i) {
      if (++idx[i] < t.dims[i]) break;
      idx[i] = 0;
    }
  }
  return m;
}

inline double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.rows() == 1 && m.cols() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace detail

/// Largest singular value of the matricization splitting the tensor's axes
/// into `in_axes` (domain) and the rest (codomain).
template <class S>
double operator_norm(const DenseTensor<S>& t, const std::vector<int>& in_axes) {
  std::vector<char> is_in(t.dims.size(), 0);
  for (int a : in_axes) {
    if (a < 0 || a >= t.rank()) throw Error("operator_norm: bad axis");
    if (is_in[a]) throw Error("operator_norm: repeated axis");
    is_in[a] = 1;
  }
  std::vector<int> in = in_axes, out;
  std::sort(in.begin(), in.end());
  for (int a = 0; a < t.rank(); ++a)
    if (!is_in[a]) out.push_back(a);
  return detail::spectral_norm(detail::matricize(t, in, out));
}

// ---------------------------------------------------------------------------
// contract: evaluate a closed network one vertex at a time, keeping the exact
// boundary tensor of the processed prefix.  Norm accounting follows the
// matricization of each step tensor as a map from the prefix-facing axes to
// the rest (axes sorted by edge identifier on both sides; self-loops at the
// step vertex are traced out first and do not enter the split).
// ---------------------------------------------------------------------------
template <class S>
ContractionReport<S> contract(const TensorNetwork<S>& net,
                              const ContractionPlan& plan,
                              size_t memory_budget = size_t(1) << 24) {
  size_t nv = net.tensors.size();
  {
    std::vector<char> seen(nv, 0);
    if (plan.order.size() != nv)
      throw PreconditionError("contract: plan is not a permutation");
    for (int v : plan.order) {
      if (v < 0 || v >= int(nv) || seen[v])
        throw PreconditionError("contract: plan is not a permutation");
      seen[v] = 1;
    }
  }
  auto axis_map = net.axis_edges();
  for (auto& row : axis_map)
    for (int e : row)
      if (e < 0) throw PreconditionError("contract: network is open");

  ContractionReport<S> report;
  // Frontier tensor over the open edges (sorted by edge id).
  DenseTensor<S> frontier;
  frontier.data[0] = S(1);
  std::vector<int> frontier_edges;

  std::vector<char> processed(nv, 0);
  for (int v : plan.order) {
    const DenseTensor<S>& raw = net.tensors[v];
    // Classify this vertex's axes.
    std::vector<std::pair<int, int>> loop_pairs;  // self-loop axes
    std::map<int, std::vector<int>> edge_axes;    // edge -> axes at v
    for (size_t a = 0; a < raw.dims.size(); ++a)
      edge_axes[axis_map[v][a]].push_back(int(a));
    std::vector<int> kept_axis_edge;  // edge id per kept axis, in axis order
    for (auto& [e, axes] : edge_axes) {
      if (axes.size() == 2) {
        loop_pairs.push_back({axes[0], axes[1]});
      } else if (axes.size() == 1) {
        // filled below
      } else {
        throw Error("contract: edge uses more than two axes of one tensor");
      }
    }
    DenseTensor<S> step = raw.traced(loop_pairs);
    {
      std::vector<char> looped(raw.dims.size(), 0);
      for (auto [a, b] : loop_pairs) looped[a] = looped[b] = 1;
      for (size_t a = 0; a < raw.dims.size(); ++a)
        if (!looped[a]) kept_axis_edge.push_back(axis_map[v][a]);
    }
    // Incoming = edges already open in the frontier; outgoing = the rest.
    std::vector<int> in_axes, out_axes;
    for (size_t a = 0; a < kept_axis_edge.size(); ++a) {
      int e = kept_axis_edge[a];
      bool incoming = std::binary_search(frontier_edges.begin(),
                                         frontier_edges.end(), e);
      (incoming ? in_axes : out_axes).push_back(int(a));
    }
    auto by_edge = [&](int x, int y) {
      return kept_axis_edge[x] < kept_axis_edge[y];
    };
    std::sort(in_axes.begin(), in_axes.end(), by_edge);
    std::sort(out_axes.begin(), out_axes.end(), by_edge);

    double norm =
        detail::spectral_norm(detail::matricize(step, in_axes, out_axes));
    report.steps.push_back(
        {v, int(in_axes.size()), int(out_axes.size()), norm});
    report.delta *= norm;

    // New frontier edge set: (frontier minus incoming) plus outgoing.
    std::vector<int> new_edges;
    for (int e : frontier_edges)
      if (!edge_axes.count(e)) new_edges.push_back(e);
    for (int a : out_axes) new_edges.push_back(kept_axis_edge[a]);
    std::sort(new_edges.begin(), new_edges.end());

    std::vector<int> new_dims(new_edges.size());
    for (size_t i = 0; i < new_edges.size(); ++i) {
      const auto& ed = net.edges[new_edges[i]];
      new_dims[i] = net.tensors[ed.from.vertex].dims[ed.from.axis];
    }
    if (DenseTensor<S>::size_from(new_dims) > memory_budget)
      throw BudgetError("contract: intermediate tensor exceeds memory budget");
    DenseTensor<S> next(new_dims);

    // Axis bookkeeping for the accumulation loops.
    auto fst = frontier.strides();
    auto sst = step.strides();
    std::vector<size_t> out_fstride(new_edges.size(), 0),
        out_sstride(new_edges.size(), 0);
    for (size_t i = 0; i < new_edges.size(); ++i) {
      int e = new_edges[i];
      for (size_t j = 0; j < frontier_edges.size(); ++j)
        if (frontier_edges[j] == e) out_fstride[i] = fst[j];
      for (size_t a = 0; a < kept_axis_edge.size(); ++a)
        if (kept_axis_edge[a] == e) out_sstride[i] = sst[a];
    }
    std::vector<size_t> sum_fstride, sum_sstride;
    std::vector<int> sum_dim;
    for (int a : in_axes) {
      int e = kept_axis_edge[a];
      for (size_t j = 0; j < frontier_edges.size(); ++j)
        if (frontier_edges[j] == e) sum_fstride.push_back(fst[j]);
      sum_sstride.push_back(sst[a]);
      sum_dim.push_back(step.dims[a]);
    }

    std::vector<int> oidx(new_edges.size(), 0);
    std::vector<int> sidx(sum_dim.size(), 0);
    for (size_t of = 0; of < next.size(); ++of) {
      size_t fbase = 0, sbase = 0;
      for (size_t i = 0; i < oidx.size(); ++i) {
        fbase += out_fstride[i] * oidx[i];
        sbase += out_sstride[i] * oidx[i];
      }
      S acc(0);
      std::fill(sidx.begin(), sidx.end(), 0);
      while (true) {
        size_t foff = fbase, soff = sbase;
        for (size_t i = 0; i < sidx.size(); ++i) {
          foff += sum_fstride[i] * sidx[i];
          soff += sum_sstride[i] * sidx[i];
        }
        const S& sv = step.data[soff];
        if (!is_zero_scalar(sv)) {
          const S& fv = frontier.data[foff];
          if (!is_zero_scalar(fv)) acc += fv * sv;
        }
        size_t i = 0;
        for (; i < sidx.size(); ++i) {
          if (++sidx[i] < sum_dim[i]) break;
          sidx[i] = 0;
        }
        if (i == sidx.size()) break;
      }
      next.data[of] = acc;
      for (int i = int(oidx.size()) - 1; i >= 0; --i) {
        if (++oidx[i] < next.dims[i]) break;
        oidx[i] = 0;
      }
    }
    frontier = std::move(next);
    frontier_edges = std::move(new_edges);
    processed[v] = 1;
  }
  if (!frontier_edges.empty())
    throw Error("contract: frontier not scalar at end");
  report.value = frontier.data[0];
  report.value_double = to_float(report.value);
  return report;
}

/// Deterministic default plan: repeatedly contract the vertex minimizing the
/// resulting open-axis count, ties broken by lowest index.
template <class S>
ContractionPlan greedy_plan(const TensorNetwork<S>& net) {
  size_t nv = net.tensors.size();
  auto axis_map = net.axis_edges();
  std::vector<char> processed(nv, 0);
  std::set<int> open;
  ContractionPlan plan;
  for (size_t step = 0; step < nv; ++step) {
    int best = -1;
    long best_count = -1;
    for (size_t v = 0; v < nv; ++v) {
      if (processed[v]) continue;
      std::set<int> next_open(open);
      for (size_t a = 0; a < net.tensors[v].dims.size(); ++a) {
        int e = axis_map[v][a];
        if (e < 0) continue;
        if (next_open.count(e))
          next_open.erase(e);
        else
          next_open.insert(e);
      }
      long count = long(next_open.size());
      if (best < 0 || count < best_count) {
        best = int(v);
        best_count = count;
      }
    }
    plan.order.push_back(best);
    processed[best] = 1;
    for (size_t a = 0; a < net.tensors[best].dims.size(); ++a) {
      int e = axis_map[best][a];
      if (e < 0) continue;
      if (open.count(e))
        open.erase(e);
      else
        open.insert(e);
    }
  }
  return plan;
}

}  // namespace ttn
