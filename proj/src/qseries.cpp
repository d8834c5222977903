#include "qmirror/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmirror {

namespace {

std::optional<Rat> min_prec(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void check_vars(const QSeries& a, const QSeries& b, const char* op) {
  if (a.var != b.var)
    throw std::invalid_argument(std::string(op) + ": variable mismatch ('" + a.var + "' vs '" +
                                b.var + "')");
}

// Lowest exponent a hidden term could occupy.  nullopt when the series is
// exactly zero.
std::optional<Rat> conservative_valuation(const QSeries& a) {
  if (!a.terms.empty()) return a.terms.begin()->first;
  return a.prec;
}

long rat_ceil_long(const Rat& r) {
  Int c = -floor_div(Int(-r.get_num()), Int(r.get_den()));
  return to_long(c);
}

}  // namespace

QSeries qs_zero(std::string var) {
  QSeries a;
  a.var = std::move(var);
  return a;
}

QSeries qs_const(const Rat& c, std::string var) { return qs_monomial(c, 0, std::move(var)); }

QSeries qs_monomial(const Rat& c, const Rat& e, std::string var) {
  QSeries a;
  a.var = std::move(var);
  if (c != 0) a.terms[e] = c;
  return a;
}

QSeries with_prec(QSeries a, const Rat& prec) {
  a.prec = prec;
  normalize(a);
  return a;
}

QSeries truncated(QSeries a, const Rat& prec) {
  a.prec = min_prec(a.prec, prec);
  normalize(a);
  return a;
}

void normalize(QSeries& a) {
  if (a.prec) a.terms.erase(a.terms.lower_bound(*a.prec), a.terms.end());
  for (auto it = a.terms.begin(); it != a.terms.end();) {
    if (it->second == 0)
      it = a.terms.erase(it);
    else
      ++it;
  }
}

QSeries add(const QSeries& a, const QSeries& b) {
  check_vars(a, b, "add");
  QSeries r = a;
  for (const auto& [e, c] : b.terms) r.terms[e] += c;
  r.prec = min_prec(a.prec, b.prec);
  normalize(r);
  return r;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries neg(QSeries a) {
  for (auto& [e, c] : a.terms) c = -c;
  return a;
}

QSeries scale(QSeries a, const Rat& c) {
  if (c == 0) return qs_zero(a.var);
  for (auto& [e, co] : a.terms) co *= c;
  return a;
}

QSeries mul(const QSeries& a, const QSeries& b) {
  check_vars(a, b, "mul");
  QSeries r;
  r.var = a.var;
  if ((a.terms.empty() && !a.prec) || (b.terms.empty() && !b.prec)) return r;
  std::optional<Rat> p;
  if (a.prec) {
    auto vb = conservative_valuation(b);
    if (vb) p = min_prec(p, *a.prec + *vb);
  }
  if (b.prec) {
    auto va = conservative_valuation(a);
    if (va) p = min_prec(p, *b.prec + *va);
  }
  r.prec = p;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Rat e = ea + eb;
      if (p && e >= *p) continue;
      r.terms[e] += ca * cb;
    }
  normalize(r);
  return r;
}

QSeries invert(const QSeries& a) {
  if (a.terms.empty()) throw std::invalid_argument("invert: no known leading term");
  const Rat v = a.terms.begin()->first;
  const Rat c = a.terms.begin()->second;
  if (a.terms.size() == 1 && !a.prec) return qs_monomial(1 / c, -v, a.var);
  if (!a.prec)
    throw std::invalid_argument("invert: exact non-monomial input needs a precision");
  QSeries g = qs_monomial(1 / c, -v, a.var);
  QSeries one = qs_const(1, a.var);
  QSeries r = sub(one, mul(a, g));
  while (!r.terms.empty()) {
    const Rat er = r.terms.begin()->first;
    const Rat cr = r.terms.begin()->second;
    QSeries dg = qs_monomial(cr / c, er - v, a.var);
    g = add(g, dg);
    r = sub(r, mul(a, dg));
  }
  g.prec = *a.prec - v - v;
  normalize(g);
  return g;
}

QSeries power(const QSeries& a, long n) {
  if (n < 0) return power(invert(a), -n);
  QSeries r = qs_const(1, a.var);
  QSeries base = a;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

QSeries nth_root(const QSeries& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("nth_root: n = 0");
  if (n == 1) return a;
  if (a.terms.empty()) throw std::invalid_argument("nth_root: no known leading term");
  const Rat v = a.terms.begin()->first;
  const Rat c = a.terms.begin()->second;
  auto croot = exact_nth_root(c, n);
  if (!croot) throw std::invalid_argument("nth_root: leading coefficient has no exact root");
  const Rat ev = v / Rat(n);
  if (a.terms.size() == 1 && !a.prec) return qs_monomial(*croot, ev, a.var);
  if (!a.prec)
    throw std::invalid_argument("nth_root: exact non-monomial input needs a precision");
  const Rat rel = *a.prec - v;
  // 1 + u = a / (c q^v), solved for its n-th root by Newton correction.
  QSeries one_plus_u = truncated(scale(mul(a, qs_monomial(1, -v, a.var)), 1 / c), rel);
  QSeries g = with_prec(qs_const(1, a.var), rel);
  for (int iter = 0; iter < 10000; ++iter) {
    QSeries r = sub(one_plus_u, power(g, static_cast<long>(n)));
    if (r.terms.empty()) break;
    QSeries dg = mul(r, invert(scale(power(g, static_cast<long>(n) - 1), n)));
    g = add(g, dg);
  }
  QSeries res = scale(mul(g, qs_monomial(1, ev, a.var)), *croot);
  res.prec = rel + ev;
  normalize(res);
  return res;
}

QSeries substitute_power(const QSeries& a, const Rat& m) {
  if (m <= 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  QSeries r;
  r.var = a.var;
  for (const auto& [e, c] : a.terms) r.terms[e * m] = c;
  if (a.prec) r.prec = *a.prec * m;
  return r;
}

QSeries flip_exponents(const QSeries& a, std::optional<Rat> new_prec);

QSeries derivative(const QSeries& a) {
  QSeries r;
  r.var = a.var;
  for (const auto& [e, c] : a.terms) {
    if (e == 0) continue;
    r.terms[e - 1] = c * e;
  }
  if (a.prec) r.prec = *a.prec - 1;
  normalize(r);
  return r;
}

namespace {

// Horner evaluation of the integer-exponent terms of f at g, walking the
// present exponents from the top down.
QSeries horner_eval(const std::vector<std::pair<long, Rat>>& coeffs, const QSeries& g) {
  QSeries res = qs_zero(g.var);
  if (coeffs.empty()) return res;
  long prev = coeffs.back().first;  // highest exponent
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    res = mul(res, power(g, prev - it->first));
    res = add(res, qs_const(it->second, g.var));
    prev = it->first;
  }
  return mul(res, power(g, prev));
}

}  // namespace

QSeries compose(const QSeries& f, const QSeries& g) {
  std::vector<std::pair<long, Rat>> nonneg, negpart;
  for (const auto& [e, c] : f.terms) {
    if (!is_integer(e)) throw std::invalid_argument("compose: outer series has a fractional exponent");
    long el = to_long(Int(e.get_num()));
    if (el >= 0)
      nonneg.emplace_back(el, c);
    else
      negpart.emplace_back(-el, c);
  }
  auto vg = conservative_valuation(g);
  if ((!nonneg.empty() || !negpart.empty()) && (!vg || *vg < 1))
    throw std::invalid_argument("compose: inner series must have valuation >= 1");
  std::sort(nonneg.begin(), nonneg.end());
  std::sort(negpart.begin(), negpart.end());
  QSeries res = horner_eval(nonneg, g);
  if (!negpart.empty()) res = add(res, horner_eval(negpart, invert(g)));
  if (f.prec) {
    Rat vgr = vg ? *vg : Rat(1);
    res.prec = min_prec(res.prec, *f.prec * vgr);
    normalize(res);
  }
  return res;
}

QSeries flip_exponents(const QSeries& a, std::optional<Rat> new_prec) {
  QSeries r;
  r.var = a.var;
  for (const auto& [e, c] : a.terms) r.terms[-e] = c;
  r.prec = std::move(new_prec);
  normalize(r);
  return r;
}

namespace {

QSeries inverse_val_plus_one(const QSeries& a) {
  const Rat N = *a.prec;
  const Rat c = a.terms.begin()->second;
  QSeries id = qs_monomial(1, 1, a.var);
  QSeries da = derivative(a);
  QSeries g = with_prec(qs_monomial(1 / c, 1, a.var), N);
  for (int iter = 0; iter < 64; ++iter) {
    QSeries err = sub(compose(a, g), id);
    if (err.terms.empty()) break;
    g = sub(g, mul(err, invert(compose(da, g))));
    g = truncated(g, N);
  }
  g.prec = N;
  normalize(g);
  return g;
}

// Inverse about infinity: f = c q^{-1} + sum_{n>=0} f_n q^n, solved for the
// descending series g with f(g(t)) = t.  Writing g in u = 1/t as an ordinary
// power series A(u) of valuation 1, the equation becomes
//   A = c u / (1 - u h(A)),   h(A) = sum_{n>=0} f_n A^n,
// a contraction solved by iteration.
QSeries inverse_val_minus_one(const QSeries& a) {
  const Rat c = a.terms.begin()->second;
  std::vector<std::pair<long, Rat>> hterms;
  for (auto it = std::next(a.terms.begin()); it != a.terms.end(); ++it) {
    if (it->first < 0) throw std::invalid_argument("compositional_inverse: exponents below -1");
    hterms.emplace_back(to_long(Int(it->first.get_num())), it->second);
  }
  const Rat Nu = *a.prec + 2;  // depth of the u-expansion we can trust
  QSeries A = with_prec(qs_monomial(c, 1, a.var), Nu);
  QSeries one = qs_const(1, a.var);
  QSeries u = qs_monomial(1, 1, a.var);
  for (int iter = 0; iter < 20000; ++iter) {
    QSeries h = horner_eval(hterms, A);
    QSeries next = truncated(mul(mul(u, invert(sub(with_prec(one, Nu), mul(u, h)))), qs_const(c, a.var)), Nu);
    if (next.terms == A.terms) {
      A = next;
      break;
    }
    A = next;
  }
  return flip_exponents(A, Rat(0));
}

}  // namespace

QSeries compositional_inverse(const QSeries& a) {
  if (a.terms.empty())
    throw std::invalid_argument("compositional_inverse: no known leading term");
  if (!a.prec)
    throw std::invalid_argument("compositional_inverse: input needs a precision");
  for (const auto& [e, c] : a.terms)
    if (!is_integer(e))
      throw std::invalid_argument("compositional_inverse: fractional exponent");
  const Rat v = a.terms.begin()->first;
  if (v == 1) return inverse_val_plus_one(a);
  if (v == -1) return inverse_val_minus_one(a);
  throw std::invalid_argument("compositional_inverse: valuation must be +1 or -1");
}

bool equal_to_order(const QSeries& a, const QSeries& b, const Rat& order) {
  if (a.prec && *a.prec < order) return false;
  if (b.prec && *b.prec < order) return false;
  return !first_mismatch(a, b, order).has_value();
}

std::optional<Rat> first_mismatch(const QSeries& a, const QSeries& b, const Rat& order) {
  Rat lim = order;
  if (a.prec) lim = std::min(lim, *a.prec);
  if (b.prec) lim = std::min(lim, *b.prec);
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  while (ia != a.terms.end() || ib != b.terms.end()) {
    Rat ea = ia != a.terms.end() ? ia->first : lim;
    Rat eb = ib != b.terms.end() ? ib->first : lim;
    Rat e = std::min(ea, eb);
    if (e >= lim) break;
    Rat ca = (ia != a.terms.end() && ia->first == e) ? (ia++)->second : Rat(0);
    Rat cb = (ib != b.terms.end() && ib->first == e) ? (ib++)->second : Rat(0);
    if (ca != cb) return e;
  }
  return std::nullopt;
}

std::string to_string(const QSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a.terms) {
    Rat ac = c;
    if (first) {
      if (c < 0) {
        os << "-";
        ac = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) ac = -c;
    }
    first = false;
    if (e == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << a.var;
      if (e != 1) {
        if (is_integer(e) && e > 0)
          os << "^" << e.get_str();
        else
          os << "^(" << e.get_str() << ")";
      }
    }
  }
  if (first) os << "0";
  if (a.prec) os << " + O(" << a.var << "^(" << a.prec->get_str() << "))";
  return os.str();
}

QSeries eta_quotient(const EtaQuotientSpec& spec, const Rat& order) {
  long N = rat_ceil_long(order - spec.prefactor);
  QSeries r;
  r.prec = order;
  if (N <= 0) return r;
  std::vector<Rat> c(static_cast<size_t>(N));
  c[0] = 1;
  for (const auto& [m, e] : spec.factors) {
    if (m < 1) throw std::invalid_argument("eta_quotient: scale must be >= 1");
    for (long k = 1; m * k < N; ++k) {
      const long s = m * k;
      if (e > 0) {
        for (long rep = 0; rep < e; ++rep)
          for (long i = N - 1; i >= s; --i) c[i] -= c[i - s];
      } else {
        for (long rep = 0; rep < -e; ++rep)
          for (long i = s; i < N; ++i) c[i] += c[i - s];
      }
    }
  }
  for (long i = 0; i < N; ++i)
    if (c[i] != 0) r.terms[Rat(i) + spec.prefactor] = c[i];
  normalize(r);
  return r;
}

QSeries jacobi_cube(const Rat& order) {
  QSeries r;
  r.prec = order;
  for (long k = 0;; ++k) {
    Rat e(k * (k + 1) / 2);
    if (e >= order) break;
    r.terms[e] = Rat((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  return r;
}

}  // namespace qmirror
