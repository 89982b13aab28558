// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ttn/error.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// FiniteGroup: a multiplication table validated on construction, with the
// regular character, conjugacy data and a brute-force surface-group
// homomorphism counter.  Named constructions additionally ship their
// irreducible representation dimensions as verified data.
// ---------------------------------------------------------------------------
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<int> table, std::string name = "",
                                std::vector<int> irrep_dims = {}) {
    FiniteGroup g;
    double sz = std::sqrt(double(table.size()));
    g.n_ = int(std::lround(sz));
    if (size_t(g.n_) * g.n_ != table.size())
      throw Error("group table is not square");
    if (g.n_ == 0) throw Error("empty group table");
    g.mult_ = std::move(table);
    g.name_ = std::move(name);
    g.irrep_dims_ = std::move(irrep_dims);
    g.validate();
    return g;
  }

  /// cyclic:n, dihedral:n (order 2n), symmetric:n (n <= 5), quaternion8.
  static FiniteGroup named(const std::string& name);

  static FiniteGroup parse(const std::string& text);
  std::string serialize() const;

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mult_[size_t(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name() const { return name_; }

  /// Character of the regular representation: |G| at the identity, else 0.
  long chi_reg(int x) const {
    check_element(x);
    return x == identity() ? n_ : 0;
  }

  int conjugacy_class_count() const {
    std::vector<char> seen(n_, 0);
    int classes = 0;
    for (int x = 0; x < n_; ++x) {
      if (seen[x]) continue;
      ++classes;
      for (int g = 0; g < n_; ++g) seen[mul(mul(g, x), inv(g))] = 1;
    }
    return classes;
  }

  /// Dimensions of the irreducible representations, when shipped.
  const std::vector<int>& irrep_dims() const {
    if (irrep_dims_.empty())
      throw Error("group '" + name_ + "' has no irrep dimension data");
    return irrep_dims_;
  }
  bool has_irrep_dims() const { return !irrep_dims_.empty(); }

  /// |Hom(pi_1(genus-g surface), G)|: the number of 2g-tuples
  /// (a_1, b_1, ..., a_g, b_g) whose product of commutators is the identity.
  /// Enumerates |G|^(2g) tuples; throws BudgetError beyond `budget`.
  long long hom_count(int genus, long long budget = 100'000'000) const {
    if (genus < 0) throw Error("hom_count: negative genus");
    if (genus == 0) return 1;
    double space = std::pow(double(n_), 2.0 * genus);
    if (space > double(budget))
      throw BudgetError("hom_count: |G|^(2g) = " + std::to_string(space) +
                        " exceeds budget " + std::to_string(budget));
    // Recursion over (a_i, b_i) pairs carrying the partial commutator
    // product; parallel over the outermost generator.
    std::function<long long(int, int)> count_from = [&](int pairs_left,
                                                        int prefix) {
      if (pairs_left == 0) return (long long)(prefix == identity());
      long long total = 0;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          total += count_from(pairs_left - 1,
                              mul(prefix, mul(mul(a, b), mul(inv(a), inv(b)))));
      return total;
    };
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          unsigned(n_));
    if (workers <= 1 || genus < 1) return count_from(genus, identity());
    std::vector<long long> partial(n_, 0);
    std::vector<std::thread> pool;
    std::atomic<int> next_a{0};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int a = next_a.fetch_add(1); a < n_; a = next_a.fetch_add(1)) {
          long long sub = 0;
          for (int b = 0; b < n_; ++b) {
            int comm = mul(mul(a, b), mul(inv(a), inv(b)));
            sub += count_from(genus - 1, comm);
          }
          partial[a] = sub;
        }
      });
    }
    for (auto& t : pool) t.join();
    long long total = 0;
    for (long long p : partial) total += p;
    return total;
  }

 private:
  FiniteGroup() = default;

  void check_element(int x) const {
    if (x < 0 || x >= n_)
      throw Error("group element index " + std::to_string(x) +
                  " out of range");
  }

  void validate() {
    for (int v : mult_)
      if (v < 0 || v >= n_) throw Error("group table entry out of range");
    // Element 0 must be the identity.
    for (int a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a)
        throw Error("element 0 is not an identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] < 0)
        throw Error("element " + std::to_string(a) + " has no inverse");
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("non-associative triple (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    if (!irrep_dims_.empty()) {
      long long sum = 0;
      for (int d : irrep_dims_) sum += (long long)d * d;
      if (sum != n_)
        throw Error("irrep dimension data fails sum of squares = |G|");
      if (int(irrep_dims_.size()) != conjugacy_class_count())
        throw Error("irrep dimension count differs from class count");
    }
  }

  int n_ = 0;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<int> irrep_dims_;
  std::string name_;
};

namespace detail {

inline std::vector<int> cyclic_table(int n) {
  std::vector<int> t(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[size_t(i) * n + j] = (i + j) % n;
  return t;
}

// r^i s^j with s r s = r^-1; index = i + n*j.
inline std::vector<int> dihedral_table(int n) {
  int order = 2 * n;
  std::vector<int> t(size_t(order) * order);
  for (int i1 = 0; i1 < n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
          int j = (j1 + j2) % 2;
          t[size_t(i1 + n * j1) * order + (i2 + n * j2)] = i + n * j;
        }
  return t;
}

inline std::vector<int> symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Identity is lexicographically first.
  int order = int(perms.size());
  auto rank = [&](const std::vector<int>& q) {
    return int(std::lower_bound(perms.begin(), perms.end(), q) -
               perms.begin());
  };
  std::vector<int> t(size_t(order) * order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t[size_t(a) * order + b] = rank(comp);
    }
  return t;
}

// {1, -1, i, -i, j, -j, k, -k} as 0..7; sign bit is the low bit.
inline std::vector<int> quaternion_table() {
  // unit * unit -> (unit, sign) for units 1, i, j, k;
  // sign[a][b] = 1 means a*b = -unit[a][b] (i*j = k, j*i = -k, ...).
  static const int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a >> 1, sa = a & 1, ub = b >> 1, sb = b & 1;
      int u = unit[ua][ub];
      int s = (sa + sb + sign[ua][ub]) % 2;
      t[size_t(a) * 8 + b] = (u << 1) | s;
    }
  return t;
}

}  // namespace detail

inline FiniteGroup FiniteGroup::named(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  int n = 0;
  if (colon != std::string::npos) {
    try {
      n = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error("bad group parameter in '" + name + "'");
    }
  }
  if (kind == "cyclic") {
    if (n < 1) throw Error("cyclic group needs order >= 1");
    return from_table(detail::cyclic_table(n), name, std::vector<int>(n, 1));
  }
  if (kind == "dihedral") {
    if (n < 3) throw Error("dihedral group needs n >= 3");
    std::vector<int> dims;
    if (n % 2 == 0) {
      dims.assign(4, 1);
      dims.insert(dims.end(), n / 2 - 1, 2);
    } else {
      dims.assign(2, 1);
      dims.insert(dims.end(), (n - 1) / 2, 2);
    }
    return from_table(detail::dihedral_table(n), name, dims);
  }
  if (kind == "symmetric") {
    if (n < 1 || n > 5) throw Error("symmetric group supported for n <= 5");
    static const std::vector<std::vector<int>> dims = {
        {}, {1}, {1, 1}, {1, 1, 2}, {1, 1, 2, 3, 3}, {1, 1, 4, 4, 5, 5, 6}};
    return from_table(detail::symmetric_table(n), name, dims[n]);
  }
  if (kind == "quaternion8")
    return from_table(detail::quaternion_table(), name, {1, 1, 1, 1, 2});
  throw Error("unknown group name '" + name + "'");
}

inline FiniteGroup FiniteGroup::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, order = -1;
  std::vector<int> table;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (order < 0) {
      if (tok != "group") throw ParseError(lineno, "expected 'group <order>'");
      if (!(ls >> order) || order <= 0)
        throw ParseError(lineno, "bad group order");
      continue;
    }
    ls.clear();
    ls.str(line);
    int v;
    while (ls >> v) table.push_back(v);
  }
  if (order < 0) throw ParseError("missing 'group <order>' header");
  if (int(table.size()) != order * order)
    throw ParseError("expected " + std::to_string(order * order) +
                     " table entries, found " + std::to_string(table.size()));
  return from_table(std::move(table));
}

inline std::string FiniteGroup::serialize() const {
  std::ostringstream out;
  out << "group " << n_ << "\n";
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) out << (b ? " " : "") << mul(a, b);
    out << "\n";
  }
  return out.str();
}

}  // namespace ttn
