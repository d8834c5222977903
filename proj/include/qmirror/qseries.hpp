#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

// Truncated Laurent series with exact rational coefficients and rational
// exponents.  `prec == nullopt` means the series is exact; otherwise
// coefficients at exponents >= *prec are unknown.  Every stored exponent is
// strictly below the precision and every stored coefficient is nonzero.
struct QSeries {
  std::string var = "q";
  std::map<Rat, Rat> terms;
  std::optional<Rat> prec;

  bool known_zero() const { return terms.empty() && !prec; }
  Rat coeff(const Rat& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
  }
  // Lowest known exponent; nullopt when no term is known.
  std::optional<Rat> valuation() const {
    if (terms.empty()) return std::nullopt;
    return terms.begin()->first;
  }
};

QSeries qs_zero(std::string var = "q");
QSeries qs_const(const Rat& c, std::string var = "q");
QSeries qs_monomial(const Rat& c, const Rat& e, std::string var = "q");
QSeries with_prec(QSeries a, const Rat& prec);
QSeries truncated(QSeries a, const Rat& prec);

void normalize(QSeries& a);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(QSeries a);
QSeries scale(QSeries a, const Rat& c);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries invert(const QSeries& a);
QSeries nth_root(const QSeries& a, unsigned n);
QSeries power(const QSeries& a, long n);

// q -> q^m for a positive rational m.
QSeries substitute_power(const QSeries& a, const Rat& m);

QSeries derivative(const QSeries& a);

// Substitutes g into f.  f must have integer exponents; g must have valuation
// >= 1.  The result lives in g's variable.
QSeries compose(const QSeries& f, const QSeries& g);

// Inverse under composition.  The valuation of a must be exactly +1 or -1
// with a nonzero leading coefficient, integer exponents, and finite
// precision.  For valuation +1 the result is the usual power series inverse.
// For valuation -1 (Laurent inversion about infinity) the result is a
// descending series: finitely many terms at negative exponents, deepest known
// exponent bounded by the input precision, and precision field 0.
QSeries compositional_inverse(const QSeries& a);

// e -> -e on every exponent, with the precision field replaced.  Bridges the
// descending series returned by compositional_inverse back into the ordinary
// ascending world.
QSeries flip_exponents(const QSeries& a, std::optional<Rat> new_prec);

bool equal_to_order(const QSeries& a, const QSeries& b, const Rat& order);
// First exponent below `order` where a and b differ, if any.
std::optional<Rat> first_mismatch(const QSeries& a, const QSeries& b, const Rat& order);

std::string to_string(const QSeries& a);

// prod_k (1 - q^{m k})^e over the listed factors, times q^{prefactor},
// truncated at `order`.
struct EtaQuotientSpec {
  std::vector<std::pair<long, long>> factors;  // (scale m >= 1, exponent e)
  Rat prefactor = 0;
};

QSeries eta_quotient(const EtaQuotientSpec& spec, const Rat& order);

// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, truncated at `order`.
QSeries jacobi_cube(const Rat& order);

inline bool is_zero(const QSeries& a) { return a.terms.empty(); }

// Operator and trait shims so QSeries can serve as an MPoly coefficient ring.
inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline bool operator==(const QSeries& a, const QSeries& b) {
  return a.var == b.var && a.terms == b.terms && a.prec == b.prec;
}
inline bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }
inline bool coeff_is_zero(const QSeries& a) { return a.terms.empty(); }
inline std::string coeff_str(const QSeries& a) { return to_string(a); }

}  // namespace qmirror
