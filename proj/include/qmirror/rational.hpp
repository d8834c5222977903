#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qmirror {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q"; throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return z.get_si();
}

// Exact n-th root of an integer, if one exists.
inline std::optional<Int> exact_nth_root(const Int& z, unsigned n) {
  if (n == 0) throw std::invalid_argument("exact_nth_root: n = 0");
  if (z < 0 && n % 2 == 0) return std::nullopt;
  Int a = abs(z);
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  if (z < 0) r = -r;
  return r;
}

// Exact n-th root of a rational, if one exists.
inline std::optional<Rat> exact_nth_root(const Rat& q, unsigned n) {
  auto num = exact_nth_root(Int(q.get_num()), n);
  if (!num) return std::nullopt;
  auto den = exact_nth_root(Int(q.get_den()), n);
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(Int(r.get_num()), Int(r.get_den())); }

}  // namespace qmirror
