// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ttn/error.hpp"
#include "ttn/scalars.hpp"

namespace ttn {

inline bool is_zero_scalar(const Rat& s) { return s == 0; }
inline bool is_zero_scalar(const QuadScalar& s) { return s.is_zero(); }
inline bool is_zero_scalar(const FibScalar& s) { return s.is_zero(); }
inline bool is_zero_scalar(double s) { return s == 0.0; }
inline bool is_zero_scalar(long long s) { return s == 0; }
template <class I>
inline bool is_zero_scalar(const detail::FibPoly<I>& s) {
  return s.is_zero();
}
template <class I>
inline double to_float(const detail::FibPoly<I>& s) {
  return s.eval();
}

// ---------------------------------------------------------------------------
// DenseTensor: row-major dense array over an exact or floating scalar type.
// Rank 0 is a scalar (size 1).
// ---------------------------------------------------------------------------
template <class S>
struct DenseTensor {
  std::vector<int> dims;
  std::vector<S> data;

  DenseTensor() : data(1, S(0)) {}
  explicit DenseTensor(std::vector<int> d) : dims(std::move(d)) {
    data.assign(size_from(dims), S(0));
  }

  static size_t size_from(const std::vector<int>& dims,
                          size_t limit = size_t(1) << 28) {
    size_t n = 1;
    for (int d : dims) {
      if (d <= 0) throw Error("tensor axis dimension must be positive");
      if (n > limit / size_t(d))
        throw BudgetError("tensor exceeds memory budget");
      n *= size_t(d);
    }
    return n;
  }

  int rank() const { return int(dims.size()); }
  size_t size() const { return data.size(); }

  size_t flat(const std::vector<int>& idx) const {
    size_t f = 0;
    for (int i = 0; i < rank(); ++i) f = f * dims[i] + idx[i];
    return f;
  }
  S& at(const std::vector<int>& idx) { return data[flat(idx)]; }
  const S& at(const std::vector<int>& idx) const { return data[flat(idx)]; }

  std::vector<size_t> strides() const {
    std::vector<size_t> s(dims.size(), 1);
    for (int i = rank() - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
    return s;
  }

  /// Trace out pairs of axes (each pair contracted against each other);
  /// remaining axes keep their relative order.
  DenseTensor traced(const std::vector<std::pair<int, int>>& pairs) const {
    if (pairs.empty()) return *this;
    std::vector<char> gone(dims.size(), 0);
    for (auto [a, b] : pairs) {
      if (dims.at(a) != dims.at(b)) throw Error("trace: axis dims differ");
      gone[a] = gone[b] = 1;
    }
    std::vector<int> keep;
    for (int i = 0; i < rank(); ++i)
      if (!gone[i]) keep.push_back(i);
    std::vector<int> out_dims;
    for (int i : keep) out_dims.push_back(dims[i]);
    DenseTensor out(out_dims);
    auto st = strides();
    std::vector<int> oidx(keep.size(), 0), tidx(pairs.size(), 0);
    for (size_t of = 0; of < out.size(); ++of) {
      size_t base = 0;
      for (size_t i = 0; i < keep.size(); ++i) base += st[keep[i]] * oidx[i];
      S acc(0);
      std::fill(tidx.begin(), tidx.end(), 0);
      while (true) {
        size_t off = base;
        for (size_t p = 0; p < pairs.size(); ++p)
          off += (st[pairs[p].first] + st[pairs[p].second]) * tidx[p];
        acc += data[off];
        size_t p = 0;
        for (; p < pairs.size(); ++p) {
          if (++tidx[p] < dims[pairs[p].first]) break;
          tidx[p] = 0;
        }
        if (p == pairs.size()) break;
      }
      out.data[of] = acc;
      for (int i = int(keep.size()) - 1; i >= 0; --i) {
        if (++oidx[i] < out.dims[i]) break;
        oidx[i] = 0;
      }
    }
    return out;
  }
};

/// Exact sum of squared entries.
template <class S>
S l2_norm_squared(const DenseTensor<S>& t) {
  S acc(0);
  for (const S& v : t.data)
    if (!is_zero_scalar(v)) acc += v * v;
  return acc;
}

}  // namespace ttn
