#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline std::string coeff_str(const Rat& c) { return c.get_str(); }

// Exponent tuple, one nonnegative entry per ring variable.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Canonical term order: ascending total degree, descending lexicographic
// (earlier variables heavier) within a degree.
struct GradedLex {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

using Vars = std::shared_ptr<const std::vector<std::string>>;

Vars make_vars(std::vector<std::string> names);
std::string monomial_key(const Vars& vars, const Expo& e);

template <typename C>
struct MPoly {
  Vars vars;
  std::map<Expo, C, GradedLex> terms;

  bool is_zero() const { return terms.empty(); }
  size_t nvars() const { return vars->size(); }
};

namespace detail {
inline void check_ring(const Vars& a, const Vars& b, const char* op) {
  if (a == b) return;
  if (!a || !b || *a != *b)
    throw std::invalid_argument(std::string(op) + ": ring context mismatch");
}
}  // namespace detail

template <typename C>
MPoly<C> mpoly_zero(Vars v) {
  MPoly<C> p;
  p.vars = std::move(v);
  return p;
}

template <typename C>
MPoly<C> mpoly_monomial(Vars v, Expo e, C c) {
  if (e.size() != v->size()) throw std::invalid_argument("mpoly_monomial: exponent arity");
  MPoly<C> p;
  p.vars = std::move(v);
  if (!coeff_is_zero(c)) p.terms.emplace(std::move(e), std::move(c));
  return p;
}

template <typename C>
MPoly<C> mpoly_const(Vars v, C c) {
  Expo e(v ? v->size() : 0, 0);
  return mpoly_monomial(std::move(v), std::move(e), std::move(c));
}

template <typename C>
MPoly<C> mpoly_var(Vars v, size_t i, C one) {
  Expo e(v->size(), 0);
  e.at(i) = 1;
  return mpoly_monomial(std::move(v), std::move(e), std::move(one));
}

inline size_t var_index(const Vars& v, const std::string& name) {
  for (size_t i = 0; i < v->size(); ++i)
    if ((*v)[i] == name) return i;
  throw std::invalid_argument("var_index: unknown variable '" + name + "'");
}

template <typename C>
void normalize(MPoly<C>& p) {
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    if (coeff_is_zero(it->second))
      it = p.terms.erase(it);
    else
      ++it;
  }
}

template <typename C>
MPoly<C> operator+(const MPoly<C>& a, const MPoly<C>& b) {
  detail::check_ring(a.vars, b.vars, "poly add");
  MPoly<C> r = a;
  for (const auto& [e, c] : b.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end())
      r.terms.emplace(e, c);
    else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) r.terms.erase(it);
    }
  }
  return r;
}

template <typename C>
MPoly<C> operator-(const MPoly<C>& a) {
  MPoly<C> r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

template <typename C>
MPoly<C> operator-(const MPoly<C>& a, const MPoly<C>& b) {
  return a + (-b);
}

template <typename C>
MPoly<C> operator*(const MPoly<C>& a, const MPoly<C>& b) {
  detail::check_ring(a.vars, b.vars, "poly mul");
  MPoly<C> r = mpoly_zero<C>(a.vars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Expo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      C prod = ca * cb;
      auto it = r.terms.find(e);
      if (it == r.terms.end())
        r.terms.emplace(std::move(e), std::move(prod));
      else
        it->second = it->second + prod;
    }
  normalize(r);
  return r;
}

template <typename C>
MPoly<C> operator*(const MPoly<C>& a, const C& c) {
  MPoly<C> r = a;
  for (auto& [e, co] : r.terms) co = co * c;
  normalize(r);
  return r;
}

template <typename C>
bool operator==(const MPoly<C>& a, const MPoly<C>& b) {
  detail::check_ring(a.vars, b.vars, "poly eq");
  return a.terms == b.terms;
}

template <typename C>
bool operator!=(const MPoly<C>& a, const MPoly<C>& b) {
  return !(a == b);
}

// p^n for n >= 0; `one` supplies the ring identity coefficient.
template <typename C>
MPoly<C> mpoly_power(const MPoly<C>& p, long n, const C& one) {
  if (n < 0) throw std::invalid_argument("mpoly_power: negative exponent");
  MPoly<C> r = mpoly_const(p.vars, one);
  MPoly<C> base = p;
  unsigned long k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

// Simultaneous substitution variable -> polynomial.  Unmapped variables pass
// through by name into the target ring; every key of `subs` must name a
// variable of p.  The target ring is that of the substitution values (p's own
// ring when subs is empty).
template <typename C>
MPoly<C> substitute_linear(const MPoly<C>& p, const std::map<std::string, MPoly<C>>& subs) {
  for (const auto& [name, val] : subs) var_index(p.vars, name);
  Vars target = subs.empty() ? p.vars : subs.begin()->second.vars;
  for (const auto& [name, val] : subs) detail::check_ring(target, val.vars, "substitute_linear");

  std::vector<MPoly<C>> images;
  images.reserve(p.nvars());
  for (size_t i = 0; i < p.nvars(); ++i) {
    auto it = subs.find((*p.vars)[i]);
    if (it != subs.end())
      images.push_back(it->second);
    else
      images.push_back(mpoly_zero<C>(target));  // passthrough, handled per term
  }

  // Power cache per variable; powers[i][k] = images[i]^k for k >= 1.
  std::vector<std::vector<MPoly<C>>> powers(p.nvars());
  auto power_of = [&](size_t i, int k) -> const MPoly<C>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(images[i]);
    while (static_cast<int>(cache.size()) < k) cache.push_back(cache.back() * images[i]);
    return cache[k - 1];
  };

  MPoly<C> result = mpoly_zero<C>(target);
  for (const auto& [e, c] : p.terms) {
    MPoly<C> term = mpoly_const(target, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (subs.count((*p.vars)[i]) == 0) {
        // Plain variable passthrough: bump the exponent directly.
        size_t j = var_index(target, (*p.vars)[i]);
        MPoly<C> shifted = mpoly_zero<C>(target);
        for (const auto& [te, tc] : term.terms) {
          Expo ne = te;
          ne[j] += e[i];
          shifted.terms.emplace(std::move(ne), tc);
        }
        term = std::move(shifted);
      } else {
        term = term * power_of(i, e[i]);
      }
    }
    result = result + term;
  }
  return result;
}

// Quotient c with c*d = p, via single-divisor leading-term reduction in the
// canonical order.  Throws when p is not a multiple of d.
template <typename C>
MPoly<C> exact_divide(const MPoly<C>& p, const MPoly<C>& d) {
  detail::check_ring(p.vars, d.vars, "exact_divide");
  if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  MPoly<C> rem = p;
  MPoly<C> quot = mpoly_zero<C>(p.vars);
  const auto& [de, dc] = *d.terms.rbegin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms.rbegin();
    Expo e(re.size());
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = re[i] - de[i];
      if (e[i] < 0) throw std::invalid_argument("exact_divide: not divisible");
    }
    MPoly<C> t = mpoly_monomial(p.vars, std::move(e), C(rc / dc));
    quot = quot + t;
    rem = rem - t * d;
  }
  return quot;
}

template <typename C>
int deg_in_var(const MPoly<C>& p, size_t var) {
  int d = -1;
  for (const auto& [e, c] : p.terms) d = std::max(d, e[var]);
  return d;
}

// Terms of p with exponent k in `var`, that exponent zeroed out.
template <typename C>
MPoly<C> coeff_of_var_power(const MPoly<C>& p, size_t var, int k) {
  MPoly<C> r = mpoly_zero<C>(p.vars);
  for (const auto& [e, c] : p.terms) {
    if (e[var] != k) continue;
    Expo ne = e;
    ne[var] = 0;
    r.terms.emplace(std::move(ne), c);
  }
  return r;
}

// Division with remainder, univariate in the chosen variable.  The divisor's
// leading coefficient in that variable must be a scalar (constant polynomial).
template <typename C>
std::pair<MPoly<C>, MPoly<C>> divmod_in_var(const MPoly<C>& f, const MPoly<C>& g, size_t var) {
  detail::check_ring(f.vars, g.vars, "divmod_in_var");
  int dg = deg_in_var(g, var);
  if (dg < 0) throw std::invalid_argument("divmod_in_var: zero divisor");
  MPoly<C> lead = coeff_of_var_power(g, var, dg);
  if (lead.terms.size() != 1 || total_degree(lead.terms.begin()->first) != 0)
    throw std::invalid_argument("divmod_in_var: divisor leading coefficient must be scalar");
  const C ell = lead.terms.begin()->second;

  MPoly<C> rem = f;
  MPoly<C> quot = mpoly_zero<C>(f.vars);
  for (int d = deg_in_var(rem, var); d >= dg; d = deg_in_var(rem, var)) {
    MPoly<C> lf = coeff_of_var_power(rem, var, d);
    if (lf.is_zero()) break;
    MPoly<C> factor = mpoly_zero<C>(f.vars);
    for (const auto& [e, c] : lf.terms) {
      Expo ne = e;
      ne[var] = d - dg;
      factor.terms.emplace(std::move(ne), C(c / ell));
    }
    quot = quot + factor;
    rem = rem - factor * g;
  }
  return {quot, rem};
}

template <typename C>
std::string to_string(const MPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + coeff_str(c) + ")*" + monomial_key(p.vars, e);
  }
  return s;
}

}  // namespace qmirror
