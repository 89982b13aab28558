// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "ttn/error.hpp"
#include "ttn/rational.hpp"

namespace ttn {

// ---------------------------------------------------------------------------
// QuadScalar: a + b*sqrt(n) with rational a, b and a fixed integer radicand.
//
// A value with b == 0 carries radicand 0 ("pure rational") and combines with
// any context; combining two distinct nonzero radicands is an error.  If n is
// a perfect square the representation folds into the rational part.
// ---------------------------------------------------------------------------
class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), n_(0) {}
  QuadScalar(const Rat& rational) : a_(rational), b_(0), n_(0) {}  // NOLINT
  QuadScalar(long long rational) : a_(rational), b_(0), n_(0) {}   // NOLINT

  QuadScalar(const Rat& a, const Rat& b, long n) : a_(a), b_(b), n_(n) {
    if (n_ < 0) throw Error("QuadScalar: radicand must be nonnegative");
    normalize();
  }

  /// sqrt(n) as an exact value.
  static QuadScalar sqrt_of(long n) { return QuadScalar(0, 1, n); }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  long radicand() const { return n_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact rational value; throws if the radical part is nonzero.
  Rat as_rational() const {
    if (!is_rational()) throw Error("QuadScalar: value is irrational");
    return a_;
  }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    long n = merged(x, y);
    return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, n);
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    long n = merged(x, y);
    return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, n);
  }
  QuadScalar operator-() const { return QuadScalar(-a_, -b_, n_); }
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    long n = merged(x, y);
    return QuadScalar(x.a_ * y.a_ + Rat(n) * x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_, n);
  }
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    long n = merged(x, y);
    // (a + b r)^-1 = (a - b r) / (a^2 - n b^2), r = sqrt(n).
    Rat norm = y.a_ * y.a_ - Rat(n) * y.b_ * y.b_;
    if (norm == 0) throw Error("QuadScalar: division by zero");
    return x * QuadScalar(y.a_ / norm, -y.b_ / norm, n);
  }
  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    if (x.b_ != 0 && y.b_ != 0 && x.n_ != y.n_) return false;
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) {
    return !(x == y);
  }

  double to_float() const {
    return to_double(a_) + to_double(b_) * std::sqrt(double(n_));
  }

  std::string str() const {
    if (is_rational()) return rat_str(a_);
    return rat_str(a_) + " + " + rat_str(b_) + "*sqrt(" + std::to_string(n_) +
           ")";
  }

 private:
  void normalize() {
    if (n_ > 0) {
      long root = std::lround(std::sqrt(double(n_)));
      while (root * root > n_) --root;
      while ((root + 1) * (root + 1) <= n_) ++root;
      if (root * root == n_) {
        a_ += b_ * root;
        b_ = 0;
      }
    }
    if (b_ == 0) n_ = 0;
  }

  static long merged(const QuadScalar& x, const QuadScalar& y) {
    if (x.n_ == 0) return y.n_;
    if (y.n_ == 0 || x.n_ == y.n_) return x.n_;
    throw FieldMismatchError("QuadScalar: mixed radicands " +
                             std::to_string(x.n_) + " and " +
                             std::to_string(y.n_));
  }

  Rat a_, b_;
  long n_;
};

namespace detail {

// Coefficient-level arithmetic in Q[t]/(t^4 - t^2 - 1), templated so the hot
// enumeration paths can run on plain int64 coefficients.  Reduction rules:
// t^4 = t^2 + 1, t^5 = t^3 + t, t^6 = 2 t^2 + 1.
template <class I>
struct FibPoly {
  std::array<I, 4> c{};  // c[0] + c[1]*t + c[2]*t^2 + c[3]*t^3

  FibPoly() = default;
  FibPoly(long long v) { c[0] = I(v); }  // NOLINT

  static FibPoly zero() { return {}; }
  static FibPoly one() {
    FibPoly p;
    p.c[0] = 1;
    return p;
  }
  bool is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
  }
  friend FibPoly operator+(const FibPoly& x, const FibPoly& y) {
    FibPoly r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
  }
  friend FibPoly operator-(const FibPoly& x, const FibPoly& y) {
    FibPoly r;
    for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
  }
  FibPoly operator-() const {
    FibPoly r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
  }
  FibPoly& operator+=(const FibPoly& y) {
    for (int i = 0; i < 4; ++i) c[i] += y.c[i];
    return *this;
  }
  friend FibPoly operator*(const FibPoly& x, const FibPoly& y) {
    std::array<I, 7> w{};
    for (int i = 0; i < 4; ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < 4; ++j) w[i + j] += x.c[i] * y.c[j];
    }
    FibPoly r;
    r.c[0] = w[0] + w[4] + w[6];
    r.c[1] = w[1] + w[5];
    r.c[2] = w[2] + w[4] + w[6] + w[6];
    r.c[3] = w[3] + w[5];
    return r;
  }
  friend bool operator==(const FibPoly& x, const FibPoly& y) {
    return x.c == y.c;
  }
  double eval() const {
    constexpr double t = 1.2720196495140689;   // positive root of t^4-t^2-1
    constexpr double t2 = 1.6180339887498949;  // golden ratio
    double c0 = double(c[0]), c1 = double(c[1]), c2 = double(c[2]),
           c3 = double(c[3]);
    return c0 + c1 * t + c2 * t2 + c3 * (t * t2);
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// FibScalar: exact element of Q[t]/(t^4 - t^2 - 1), t embedded as the positive
// real root t = sqrt(phi).  The field contains phi = t^2, sqrt(5) = 2 t^2 - 1,
// every Fibonacci symbol value, the quantum dimensions and their square roots,
// and D^2 = (5 + sqrt 5)/2 = t^2 + 2.
// ---------------------------------------------------------------------------
class FibScalar {
 public:
  FibScalar() = default;
  FibScalar(const Rat& rational) { p_.c[0] = rational; }  // NOLINT
  FibScalar(long long rational) { p_.c[0] = rational; }   // NOLINT
  FibScalar(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) {
    p_.c = {c0, c1, c2, c3};
  }
  explicit FibScalar(const detail::FibPoly<Rat>& p) : p_(p) {}

  static FibScalar t() { return FibScalar(0, 1, 0, 0); }
  static FibScalar phi() { return FibScalar(0, 0, 1, 0); }
  static FibScalar sqrt5() { return FibScalar(-1, 0, 2, 0); }
  /// a + b*sqrt(5)
  static FibScalar from_sqrt5(const Rat& a, const Rat& b) {
    return FibScalar(a - b, 0, 2 * b, 0);
  }

  const Rat& coeff(int i) const { return p_.c.at(i); }
  bool is_zero() const { return p_.is_zero(); }
  bool is_rational() const {
    return p_.c[1] == 0 && p_.c[2] == 0 && p_.c[3] == 0;
  }
  Rat as_rational() const {
    if (!is_rational()) throw Error("FibScalar: value is irrational");
    return p_.c[0];
  }

  friend FibScalar operator+(const FibScalar& x, const FibScalar& y) {
    return FibScalar(x.p_ + y.p_);
  }
  friend FibScalar operator-(const FibScalar& x, const FibScalar& y) {
    return FibScalar(x.p_ - y.p_);
  }
  FibScalar operator-() const { return FibScalar(-p_); }
  friend FibScalar operator*(const FibScalar& x, const FibScalar& y) {
    return FibScalar(x.p_ * y.p_);
  }
  friend FibScalar operator/(const FibScalar& x, const FibScalar& y) {
    return x * y.inverse();
  }
  FibScalar& operator+=(const FibScalar& y) { return *this = *this + y; }
  FibScalar& operator-=(const FibScalar& y) { return *this = *this - y; }
  FibScalar& operator*=(const FibScalar& y) { return *this = *this * y; }

  friend bool operator==(const FibScalar& x, const FibScalar& y) {
    return x.p_ == y.p_;
  }
  friend bool operator!=(const FibScalar& x, const FibScalar& y) {
    return !(x == y);
  }

  /// Multiplicative inverse via the 4x4 multiplication matrix.
  FibScalar inverse() const {
    if (is_zero()) throw Error("FibScalar: division by zero");
    // Columns: this * t^j expressed in the basis 1, t, t^2, t^3.
    std::array<detail::FibPoly<Rat>, 4> cols;
    detail::FibPoly<Rat> tj = detail::FibPoly<Rat>::one();
    detail::FibPoly<Rat> tpoly;
    tpoly.c[1] = 1;
    for (int j = 0; j < 4; ++j) {
      cols[j] = p_ * tj;
      tj = tj * tpoly;
    }
    // Solve M y = e0 by Gaussian elimination over Q.
    Rat m[4][5];
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m[i][j] = cols[j].c[i];
      m[i][4] = (i == 0) ? 1 : 0;
    }
    for (int col = 0; col < 4; ++col) {
      int pivot = -1;
      for (int r = col; r < 4; ++r)
        if (m[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw Error("FibScalar: singular inverse system");
      for (int j = 0; j <= 4; ++j) std::swap(m[col][j], m[pivot][j]);
      for (int r = 0; r < 4; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rat f = m[r][col] / m[col][col];
        for (int j = col; j <= 4; ++j) m[r][j] -= f * m[col][j];
      }
    }
    FibScalar y;
    for (int i = 0; i < 4; ++i) y.p_.c[i] = m[i][4] / m[i][i];
    return y;
  }

  FibScalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FibScalar acc(1), b = *this;
    while (e) {
      if (e & 1) acc *= b;
      b *= b;
      e >>= 1;
    }
    return acc;
  }

  double to_float() const {
    constexpr double t = 1.2720196495140689;
    constexpr double t2 = 1.6180339887498949;
    return to_double(p_.c[0]) + to_double(p_.c[1]) * t +
           to_double(p_.c[2]) * t2 + to_double(p_.c[3]) * (t * t2);
  }

  std::string str() const {
    static const char* names[4] = {"", "t", "t^2", "t^3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (p_.c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += rat_str(p_.c[i]);
      if (i > 0) out += std::string("*") + names[i];
    }
    return out.empty() ? "0" : out;
  }

  const detail::FibPoly<Rat>& poly() const { return p_; }

 private:
  detail::FibPoly<Rat> p_;
};

inline double to_float(const QuadScalar& s) { return s.to_float(); }
inline double to_float(const FibScalar& s) { return s.to_float(); }
inline double to_float(const Rat& s) { return to_double(s); }
inline double to_float(double s) { return s; }
inline double to_float(long long s) { return double(s); }

}  // namespace ttn
