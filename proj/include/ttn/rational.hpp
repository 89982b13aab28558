// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ttn/error.hpp"

namespace ttn {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(const Rat& base, long exponent) {
  if (exponent == 0) return Rat(1);
  if (base == 0 && exponent < 0) throw Error("rat_pow: 0 to a negative power");
  Rat b = exponent > 0 ? base : Rat(1) / base;
  unsigned long e = exponent > 0 ? exponent : -exponent;
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

/// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ttn
