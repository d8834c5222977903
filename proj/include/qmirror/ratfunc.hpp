#pragma once

#include <stdexcept>
#include <string>

#include "qmirror/mpoly.hpp"

namespace qmirror {

// Unreduced fraction over a polynomial ring.  Arithmetic never cancels;
// equality is decided by cross-multiplication and zero-testing the numerator.
template <typename P>
struct LazyFrac {
  P num, den;
};

template <typename P>
LazyFrac<P> make_frac(P num, P den) {
  if (den.is_zero()) throw std::invalid_argument("make_frac: zero denominator");
  return {std::move(num), std::move(den)};
}

template <typename P>
LazyFrac<P> operator+(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

template <typename P>
LazyFrac<P> operator-(const LazyFrac<P>& a) {
  return {-a.num, a.den};
}

template <typename P>
LazyFrac<P> operator-(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  return a + (-b);
}

template <typename P>
LazyFrac<P> operator*(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  return {a.num * b.num, a.den * b.den};
}

template <typename P>
LazyFrac<P> operator/(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  if (b.num.is_zero()) throw std::invalid_argument("LazyFrac: division by zero");
  return {a.num * b.den, a.den * b.num};
}

template <typename P>
bool operator==(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  return a.num * b.den == b.num * a.den;
}

template <typename P>
bool operator!=(const LazyFrac<P>& a, const LazyFrac<P>& b) {
  return !(a == b);
}

template <typename P>
bool coeff_is_zero(const LazyFrac<P>& a) {
  return a.num.is_zero();
}

template <typename P>
std::string coeff_str(const LazyFrac<P>& a) {
  return "(" + to_string(a.num) + ")/(" + to_string(a.den) + ")";
}

}  // namespace qmirror
