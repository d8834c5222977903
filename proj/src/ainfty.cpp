#include "qmirror/ainfty.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qmirror/jsonio.hpp"

namespace qmirror {

namespace {

MPoly<QSeries> qmono(const Vars& v, const Rat& c, const Rat& e, const Rat& prec) {
  return mpoly_const(v, with_prec(qs_monomial(c, e), prec));
}

const ACombo kEmptyCombo{};

// iterate index tuples of the given length over [0, base)
template <typename F>
void for_each_tuple(size_t base, size_t len, F&& fn) {
  std::vector<size_t> idx(len, 0);
  if (base == 0 && len > 0) return;
  while (true) {
    fn(idx);
    size_t i = 0;
    for (; i < len; ++i) {
      if (++idx[i] < base) break;
      idx[i] = 0;
    }
    if (i == len) break;
  }
}

}  // namespace

int AInftyAlgebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

bool AInftyAlgebra::composable(const AKey& key) const {
  for (size_t i = 0; i + 1 < key.size(); ++i)
    if (gens[key[i]].dst != gens[key[i + 1]].src) return false;
  return true;
}

bool AInftyAlgebra::defined(size_t k, const AKey& key) const {
  if (k >= m.size()) return false;
  if (!composable(key)) return true;  // structurally zero
  return m[k].count(key) > 0;
}

const ACombo* AInftyAlgebra::table(size_t k, const AKey& key) const {
  if (k >= m.size()) return nullptr;
  if (!composable(key)) return &kEmptyCombo;
  auto it = m[k].find(key);
  return it == m[k].end() ? nullptr : &it->second;
}

void AInftyAlgebra::define(size_t k, const AKey& key) { m.at(k)[key]; }

void AInftyAlgebra::add_term(size_t k, const AKey& key, int out, const MPoly<QSeries>& c) {
  auto& slot = m.at(k)[key];
  auto it = slot.find(out);
  if (it == slot.end()) slot.emplace(out, c);
  else it->second = it->second + c;
}

namespace {

bool combo_zero(const AInftyAlgebra& alg, const ACombo& c, const Rat& order) {
  MPoly<QSeries> z = mpoly_zero<QSeries>(alg.vars);
  for (const auto& [g, v] : c)
    if (!mpoly_equal_to_order(v, z, order)) return false;
  return true;
}

void combo_axpy(ACombo& acc, const ACombo& src, const MPoly<QSeries>& scale, int sgn) {
  for (const auto& [g, c] : src) {
    MPoly<QSeries> t = c * scale;
    if (sgn < 0) t = -t;
    auto it = acc.find(g);
    if (it == acc.end()) acc.emplace(g, std::move(t));
    else it->second = it->second + t;
  }
}

// the filtered A-infinity relation on one tuple, with arity-0 insertions;
// false = a needed entry is outside the populated sub-table
bool relation_residual(const AInftyAlgebra& alg, const AKey& x, ACombo& residual,
                       const Rat& order) {
  size_t n = x.size();
  size_t cap = static_cast<size_t>(alg.kmax);
  residual.clear();
  for (size_t n2 = 0; n2 <= n; ++n2) {
    for (size_t i = 0; i + n2 <= n; ++i) {
      size_t n1 = n - n2 + 1;
      if (n1 > cap || n2 > cap) continue;  // outside stored arities: absent
      AKey inner(x.begin() + i, x.begin() + i + n2);
      if (!alg.defined(n2, inner)) return false;
      const ACombo* oin = alg.table(n2, inner);
      int eps = 0;
      for (size_t j = 0; j < i; ++j) eps += alg.gens[x[j]].parity + 1;
      int sgn = eps % 2 ? -1 : 1;
      for (const auto& [h, c] : *oin) {
        if (c.is_zero()) continue;
        AKey outer;
        outer.reserve(n1);
        for (size_t j = 0; j < i; ++j) outer.push_back(x[j]);
        outer.push_back(h);
        for (size_t j = i + n2; j < n; ++j) outer.push_back(x[j]);
        if (!alg.defined(n1, outer)) return false;
        const ACombo* oout = alg.table(n1, outer);
        for (const auto& [g, d] : *oout) {
          if (d.is_zero()) continue;
          MPoly<QSeries> term = d * c;
          if (sgn < 0) term = -term;
          auto it = residual.find(g);
          if (it == residual.end()) residual.emplace(g, std::move(term));
          else it->second = it->second + term;
        }
      }
    }
  }
  return true;
}

void add_violation(AReport& rep, AViolation v) {
  ++rep.failed;
  if (rep.violations.size() < 16) rep.violations.push_back(std::move(v));
}

void check_axioms(const AInftyAlgebra& alg, AReport& rep) {
  MPoly<QSeries> z = mpoly_zero<QSeries>(alg.vars);
  std::vector<char> is_unit(alg.gens.size(), 0);
  for (int u : alg.units) is_unit.at(u) = 1;
  for (size_t k = 0; k < alg.m.size(); ++k) {
    for (const auto& [key, combo] : alg.m[k]) {
      bool comp = alg.composable(key);
      bool has_unit = false;
      int par_in = static_cast<int>(k);
      for (int g : key) {
        has_unit |= is_unit[g];
        par_in += alg.gens[g].parity;
      }
      for (const auto& [g, c] : combo) {
        if (mpoly_equal_to_order(c, z, alg.cutoff)) continue;
        if (!comp) {
          add_violation(rep, {k, key, g, "nonzero value on a non-composable tuple"});
          continue;
        }
        if (!key.empty()) {
          if (alg.gens[g].src != alg.gens[key.front()].src ||
              alg.gens[g].dst != alg.gens[key.back()].dst)
            add_violation(rep, {k, key, g, "output component tags do not match the tuple"});
        } else if (alg.gens[g].src != alg.gens[g].dst) {
          add_violation(rep, {k, key, g, "arity-0 output is not diagonal"});
        }
        if ((alg.gens[g].parity + par_in) % 2 != 0)
          add_violation(rep, {k, key, g, "output parity breaks the degree convention"});
        if (has_unit && k != 2)
          add_violation(rep, {k, key, g, "unit insertion fails to vanish"});
        for (const auto& [e, s] : c.terms) {
          auto val = s.valuation();
          if (!val) continue;
          if (*val < 0 || (k == 0 && *val <= 0)) {
            add_violation(rep, {k, key, g, "structure constant valuation too low"});
            break;
          }
        }
      }
    }
  }
  // two-sided unit axiom on the defined m2 keys
  QSeries one = qs_const(1);
  for (int u : alg.units) {
    for (size_t g = 0; g < alg.gens.size(); ++g) {
      AKey left{u, static_cast<int>(g)};
      if (alg.composable(left) && alg.m[2].count(left)) {
        ACombo want;
        want.emplace(static_cast<int>(g), mpoly_const(alg.vars, one));
        ACombo diff = *alg.table(2, left);
        combo_axpy(diff, want, mpoly_const(alg.vars, one), -1);
        if (!combo_zero(alg, diff, alg.cutoff))
          add_violation(rep, {2, left, static_cast<int>(g), "left unit axiom"});
      }
      AKey right{static_cast<int>(g), u};
      if (alg.composable(right) && alg.m[2].count(right)) {
        int sgn = alg.gens[g].parity ? -1 : 1;
        ACombo diff = *alg.table(2, right);
        ACombo want;
        want.emplace(static_cast<int>(g), mpoly_const(alg.vars, one));
        combo_axpy(diff, want, mpoly_const(alg.vars, one), -sgn);
        if (!combo_zero(alg, diff, alg.cutoff))
          add_violation(rep, {2, right, static_cast<int>(g), "right unit axiom"});
      }
    }
  }
}

}  // namespace

AReport check_ainfty(const AInftyAlgebra& alg, int threads) {
  AReport rep;
  check_axioms(alg, rep);

  std::vector<AKey> tuples;
  tuples.push_back({});
  for (int n = 1; n <= alg.kmax; ++n)
    for_each_tuple(alg.gens.size(), static_cast<size_t>(n), [&](const std::vector<size_t>& idx) {
      AKey x(idx.begin(), idx.end());
      tuples.push_back(std::move(x));
    });

  int nthreads = std::max(1, threads);
  std::vector<AReport> parts(nthreads);
  std::mutex mu;
  size_t next = 0;
  auto worker = [&](AReport& local) {
    while (true) {
      size_t lo, hi;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= tuples.size()) return;
        lo = next;
        hi = std::min(tuples.size(), next + 256);
        next = hi;
      }
      for (size_t t = lo; t < hi; ++t) {
        ACombo res;
        if (!relation_residual(alg, tuples[t], res, alg.cutoff)) {
          ++local.skipped;
        } else if (!combo_zero(alg, res, alg.cutoff)) {
          int out = -1;
          MPoly<QSeries> z = mpoly_zero<QSeries>(alg.vars);
          for (const auto& [g, c] : res)
            if (!mpoly_equal_to_order(c, z, alg.cutoff)) {
              out = g;
              break;
            }
          add_violation(local, {tuples[t].size(), tuples[t], out, "relation residual nonzero"});
        } else {
          ++local.checked;
        }
      }
    }
  };
  if (nthreads == 1) {
    worker(parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back([&, i]() { worker(parts[i]); });
    for (auto& th : pool) th.join();
  }
  for (auto& p : parts) {
    rep.checked += p.checked;
    rep.skipped += p.skipped;
    rep.failed += p.failed;
    for (auto& v : p.violations)
      if (rep.violations.size() < 16) rep.violations.push_back(std::move(v));
  }
  return rep;
}

namespace {

void check_cochain(const AInftyAlgebra& alg, const Bulk& b, const char* who) {
  for (const auto& [g, c] : b) {
    if (alg.gens.at(g).parity == 0)
      throw std::invalid_argument(std::string(who) + ": cochain must be odd");
    for (const auto& [e, s] : c.terms) {
      if (total_degree(e) > 0) continue;
      auto val = s.valuation();
      if (!val || *val <= 0)
        throw std::invalid_argument(std::string(who) + ": insertion does not grow energy");
    }
  }
}

}  // namespace

PolyMat<QSeries> deform_m1(const AInftyAlgebra& alg, const Bulk& b0, const Bulk& b1) {
  check_cochain(alg, b0, "deform_m1");
  check_cochain(alg, b1, "deform_m1");
  size_t n = alg.gens.size();
  PolyMat<QSeries> D = pm_zero<QSeries>(n, n, alg.vars);
  size_t cap = static_cast<size_t>(alg.kmax);
  for (size_t j = 0; j < n; ++j) {
    for (size_t l1 = 0; l1 + 1 <= cap; ++l1) {
      for (size_t l0 = 0; l1 + 1 + l0 <= cap; ++l0) {
        for_each_tuple(b1.size(), l1, [&](const std::vector<size_t>& t1) {
          for_each_tuple(b0.size(), l0, [&](const std::vector<size_t>& t0) {
            AKey key;
            key.reserve(l1 + 1 + l0);
            for (size_t t : t1) key.push_back(b1[t].first);
            key.push_back(static_cast<int>(j));
            for (size_t t : t0) key.push_back(b0[t].first);
            const ACombo* o = alg.table(l1 + 1 + l0, key);
            if (!o || o->empty()) return;
            MPoly<QSeries> scale = mpoly_const(alg.vars, qs_const(1));
            for (size_t t : t1) scale = scale * b1[t].second;
            for (size_t t : t0) scale = scale * b0[t].second;
            for (const auto& [g, c] : *o) D[g][j] = D[g][j] + c * scale;
          });
        });
      }
    }
  }
  return D;
}

Bulk standard_bulk(const AInftyAlgebra& alg) {
  Bulk b;
  const char* names[3] = {"X", "Y", "Z"};
  for (size_t i = 0; i < 3; ++i) {
    int g = alg.index_of(names[i]);
    if (g < 0) throw std::invalid_argument("standard_bulk: generator missing");
    b.emplace_back(g, mpoly_var(alg.vars, i, qs_const(1)));
  }
  return b;
}

WeakMCResult weak_mc_check(const AInftyAlgebra& alg, const Bulk& b) {
  for (const auto& [g, c] : b)
    if (alg.gens.at(g).parity == 0)
      throw std::invalid_argument("weak_mc_check: cochain must be odd");
  size_t cap = static_cast<size_t>(alg.kmax);
  ACombo total;
  for (size_t l = 0; l <= cap; ++l) {
    for_each_tuple(b.size(), l, [&](const std::vector<size_t>& t) {
      AKey key;
      key.reserve(l);
      for (size_t i : t) key.push_back(b[i].first);
      const ACombo* o = alg.table(l, key);
      if (!o || o->empty()) return;
      MPoly<QSeries> scale = mpoly_const(alg.vars, qs_const(1));
      for (size_t i : t) scale = scale * b[i].second;
      for (const auto& [g, c] : *o) {
        auto it = total.find(g);
        if (it == total.end()) total.emplace(g, c * scale);
        else it->second = it->second + c * scale;
      }
    });
  }
  WeakMCResult r;
  std::vector<char> is_unit(alg.gens.size(), 0);
  for (int u : alg.units) is_unit.at(u) = 1;
  MPoly<QSeries> z = mpoly_zero<QSeries>(alg.vars);
  bool have = false;
  for (int u : alg.units) {
    auto it = total.find(u);
    MPoly<QSeries> coeff = it == total.end() ? z : it->second;
    if (!have) {
      r.w = coeff;
      have = true;
    } else if (!mpoly_equal_to_order(r.w, coeff, alg.cutoff)) {
      r.witness = u;
      r.bad = coeff;
      return r;
    }
  }
  for (const auto& [g, c] : total) {
    if (is_unit[g]) continue;
    if (!mpoly_equal_to_order(c, z, alg.cutoff)) {
      r.witness = g;
      r.bad = c;
      return r;
    }
  }
  r.ok = true;
  return r;
}

namespace {

struct FCell {
  bool def = false;
  ACombo out;
};

// sum_l m(xs..., y, b^l), undefined when a needed entry is missing
FCell functor_cell(const AInftyAlgebra& alg, const AKey& xs, int y, const Bulk& b) {
  FCell r;
  r.def = true;
  size_t k = xs.size();
  size_t cap = static_cast<size_t>(alg.kmax);
  for (size_t l = 0; k + 1 + l <= cap && r.def; ++l) {
    for_each_tuple(b.size(), l, [&](const std::vector<size_t>& t) {
      if (!r.def) return;
      AKey key;
      key.reserve(k + 1 + l);
      for (int g : xs) key.push_back(g);
      key.push_back(y);
      for (size_t i : t) key.push_back(b[i].first);
      if (!alg.defined(k + 1 + l, key)) {
        r.def = false;
        return;
      }
      const ACombo* o = alg.table(k + 1 + l, key);
      if (!o || o->empty()) return;
      MPoly<QSeries> scale = mpoly_const(alg.vars, qs_const(1));
      for (size_t i : t) scale = scale * b[i].second;
      combo_axpy(r.out, *o, scale, 1);
    });
  }
  if (!r.def) r.out.clear();
  return r;
}

}  // namespace

FunctorReport functor_check(const AInftyAlgebra& alg, const Bulk& b, const Rat& order) {
  FunctorReport rep;
  size_t n = alg.gens.size();
  PolyMat<QSeries> D = deform_m1(alg, b, {});
  std::vector<ACombo> dcol(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      if (!D[i][j].is_zero()) dcol[j].emplace(static_cast<int>(i), D[i][j]);

  // raw cells F1 before the (-1)^{|x|} prefactor
  std::vector<std::vector<FCell>> f1(n, std::vector<FCell>(n));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) f1[x][y] = functor_cell(alg, {static_cast<int>(x)}, static_cast<int>(y), b);

  MPoly<QSeries> one = mpoly_const(alg.vars, qs_const(1));
  std::vector<char> closed(n, 1);
  for (size_t x = 0; x < n; ++x) {
    const ACombo* m1x = alg.table(1, {static_cast<int>(x)});
    if (m1x && !combo_zero(alg, *m1x, order)) closed[x] = 0;
  }

  // k = 1: D o F1(x) - (-1)^{|x|} F1(x) o D = 0 for closed x
  for (size_t x = 0; x < n; ++x) {
    if (!closed[x]) continue;
    int sgn = alg.gens[x].parity ? -1 : 1;
    for (size_t y = 0; y < n; ++y) {
      if (!f1[x][y].def) continue;
      bool colok = true;
      for (const auto& [h, c] : dcol[y])
        if (!f1[x][h].def) colok = false;
      if (!colok) continue;
      ACombo res;
      for (const auto& [h, c] : f1[x][y].out) combo_axpy(res, dcol[h], c, 1);
      for (const auto& [h, c] : dcol[y]) combo_axpy(res, f1[x][h].out, c, -sgn);
      if (combo_zero(alg, res, order)) ++rep.k1_checked;
      else ++rep.k1_failed;
    }
  }

  // k = 2: F1(m2(x1,x2)) = (-1)^{|x1|} F1(x1) o F1(x2)
  //        + D o F2 - (-1)^{|x1|+|x2|} F2 o D, in raw-cell form
  for (size_t x1 = 0; x1 < n; ++x1) {
    if (!closed[x1]) continue;
    for (size_t x2 = 0; x2 < n; ++x2) {
      if (!closed[x2]) continue;
      int d1 = alg.gens[x1].parity, d2 = alg.gens[x2].parity;
      int dm = (d1 + d2) % 2;
      AKey pair{static_cast<int>(x1), static_cast<int>(x2)};
      if (!alg.defined(2, pair)) continue;
      const ACombo* m12 = alg.table(2, pair);
      for (size_t y = 0; y < n; ++y) {
        bool defall = true;
        for (const auto& [h, c] : *m12)
          if (!f1[h][y].def) defall = false;
        const FCell& inner = f1[x2][y];
        if (!inner.def) defall = false;
        else
          for (const auto& [h, c] : inner.out)
            if (!f1[x1][h].def) defall = false;
        FCell f2y = functor_cell(alg, pair, static_cast<int>(y), b);
        if (!f2y.def) defall = false;
        std::vector<FCell> f2cells;
        f2cells.reserve(dcol[y].size());
        for (const auto& [h, c] : dcol[y]) {
          f2cells.push_back(functor_cell(alg, pair, h, b));
          if (!f2cells.back().def) defall = false;
        }
        if (!defall) continue;
        ACombo res;
        int sgnL = dm ? -1 : 1;
        for (const auto& [h, c] : *m12) combo_axpy(res, f1[h][y].out, c, sgnL);
        int sgnT = d2 ? -1 : 1;
        for (const auto& [h, c] : inner.out) combo_axpy(res, f1[x1][h].out, c, -sgnT);
        int sgnD = dm ? -1 : 1;
        for (const auto& [h, c] : f2y.out) combo_axpy(res, dcol[h], c, -sgnD);
        size_t ci = 0;
        for (const auto& [h, c] : dcol[y]) combo_axpy(res, f2cells[ci++].out, c, 1);
        if (combo_zero(alg, res, order)) ++rep.k2_checked;
        else ++rep.k2_failed;
      }
    }
  }

  // unit to identity
  rep.unit_ok = true;
  for (size_t y = 0; y < n; ++y) {
    ACombo sum;
    bool def = true;
    for (int u : alg.units) {
      if (!f1[u][y].def) def = false;
      else combo_axpy(sum, f1[u][y].out, one, 1);
    }
    if (!def) {
      rep.unit_ok = false;
      break;
    }
    ACombo want;
    want.emplace(static_cast<int>(y), one);
    combo_axpy(sum, want, one, -1);
    if (!combo_zero(alg, sum, order)) rep.unit_ok = false;
  }

  // round trip: F1(p) on the unit, constant part, must return p
  int p = alg.index_of("p");
  if (p < 0) {
    rep.psi_phi_ok = true;
  } else {
    ACombo sum;
    bool def = true;
    for (int u : alg.units) {
      if (!f1[p][u].def) def = false;
      else combo_axpy(sum, f1[p][u].out, one, -1);  // (-1)^{|p|} prefactor
    }
    if (def) {
      Expo zero(alg.vars->size(), 0);
      bool good = true;
      for (const auto& [g, c] : sum) {
        QSeries cval = qs_zero();
        auto it = c.terms.find(zero);
        if (it != c.terms.end()) cval = it->second;
        QSeries want = g == p ? qs_const(1) : qs_zero();
        if (!equal_to_order(cval, want, order)) good = false;
      }
      if (sum.find(p) == sum.end()) good = false;
      rep.psi_phi_ok = good;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// fixtures

AInftyAlgebra ainfty_dg_fixture() {
  AInftyAlgebra alg;
  alg.vars = xyz_vars();
  alg.cutoff = 10;
  // e unit, a odd, b even with d(b) = a and b*b = b, b*a = a
  alg.gens.push_back({"e", 0, 1, std::nullopt, 0, 0});
  alg.gens.push_back({"a", 1, 0, std::nullopt, 0, 0});
  alg.gens.push_back({"b", 0, 1, std::nullopt, 0, 0});
  alg.units = {0};
  MPoly<QSeries> one = mpoly_const(alg.vars, qs_const(1));
  alg.define(0, {});
  for (int g = 0; g < 3; ++g) alg.define(1, {g});
  alg.add_term(1, {2}, 1, one);
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h) alg.define(2, {g, h});
  for (int g = 0; g < 3; ++g) {
    alg.add_term(2, {0, g}, g, one);
    if (g != 0) {
      MPoly<QSeries> s = alg.gens[g].parity ? -one : one;
      alg.add_term(2, {g, 0}, g, s);
    }
  }
  alg.add_term(2, {2, 2}, 2, one);
  alg.add_term(2, {2, 1}, 1, one);
  for (size_t k = 3; k <= 5; ++k)
    for_each_tuple(3, k, [&](const std::vector<size_t>& idx) {
      alg.define(k, AKey(idx.begin(), idx.end()));
    });
  return alg;
}

AInftyAlgebra ainfty_333_fixture(const std::vector<Polygon>& polys, const Potential& pot,
                                 const FloerData& fd, const Rat& cutoff) {
  AInftyAlgebra alg;
  alg.vars = xyz_vars();
  alg.cutoff = cutoff;
  Rat prec = potential_precision(cutoff, {});
  MatrixFact<QSeries> mf = build_seidel_mf(fd, pot);
  const int deg3[8] = {3, 1, 1, 1, 0, 2, 2, 2};
  for (int i = 0; i < 8; ++i) {
    int parity = mf.parity[i];
    alg.gens.push_back({mf.labels[i], parity, (parity + 1) % 2, deg3[i], 0, 0});
  }
  const int Gp = 0, GX = 1, Ge = 4, GXb = 5;
  alg.units = {Ge};

  // strict unit
  for (int g = 0; g < 8; ++g) {
    alg.add_term(2, {Ge, g}, g, qmono(alg.vars, 1, 0, prec));
    if (g != Ge) alg.add_term(2, {g, Ge}, g, qmono(alg.vars, alg.gens[g].parity ? -1 : 1, 0, prec));
  }
  alg.define(0, {});
  for (int a = 0; a < 8; ++a) {
    alg.define(1, {a});
    for (int b = 0; b < 8; ++b) alg.define(2, {a, b});
  }
  // constant strips pair each odd generator with its partner
  for (int i = 0; i < 3; ++i) {
    alg.add_term(2, {GXb + i, GX + i}, Gp, qmono(alg.vars, 1, 0, prec));
    alg.add_term(2, {GX + i, GXb + i}, Gp, qmono(alg.vars, -1, 0, prec));
  }
  // polygon families: corners feed m2, marked sides feed m3 with a p or e slot
  for (const auto& p : polys) {
    if (p.corners != 3) continue;
    Rat base = Rat(1) / Rat(p.r);
    int sigma_t = p.positive ? (p.s % 2 ? -1 : 1) : (p.pcount % 2 ? 1 : -1);
    for (int t = 0; t < 3; ++t) {
      int w0 = p.word[t], w1 = p.word[(t + 1) % 3], w2 = p.word[(t + 2) % 3];
      alg.add_term(2, {GX + w1, GX + w2}, GXb + w0,
                   qmono(alg.vars, Rat(-sigma_t) * base, p.area, prec));
      if (p.side_e[t] > 0)
        alg.add_term(3, {GX + w1, GX + w2, GX + w0}, Ge,
                     qmono(alg.vars, Rat(raw_sign(p) * p.side_e[t]) * base, p.area, prec));
      if (p.side_p[t] > 0)
        alg.add_term(3, {Gp, GX + w1, GX + w2}, GXb + w0,
                     qmono(alg.vars, Rat(raw_sign(p) * p.side_p[t]) * base, p.area, prec));
    }
  }
  // remaining defined-zero entries: all odd-only m3..m5 (the index bound kills
  // them past the corner count), p-first tails, unit insertions
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      alg.define(3, {Gp, a, b});
      for (int c = 1; c <= 3; ++c) {
        alg.define(3, {a, b, c});
        alg.define(4, {Gp, a, b, c});
        for (int j = 0; j < 3; ++j) alg.define(4, {GXb + j, a, b, c});
        for (int d = 1; d <= 3; ++d) {
          alg.define(4, {a, b, c, d});
          alg.define(5, {Gp, a, b, c, d});
          for (int j = 0; j < 3; ++j) alg.define(5, {GXb + j, a, b, c, d});
          for (int e = 1; e <= 3; ++e) alg.define(5, {a, b, c, d, e});
        }
      }
    }
  for (size_t k = 3; k <= 5; ++k)
    for_each_tuple(8, k, [&](const std::vector<size_t>& idx) {
      for (size_t i : idx)
        if (static_cast<int>(i) == Ge) {
          alg.define(k, AKey(idx.begin(), idx.end()));
          return;
        }
    });
  // partner-first m3 from the factorization columns through the gamma bridge:
  // each quadratic entry splits evenly over the orderings of its two letters
  QSeries gaminv = invert(fd.tg.gamma_scalar);
  for (int jb = 0; jb < 3; ++jb) {
    for (int g = 1; g <= 3; ++g) {
      MPoly<QSeries> col = mf.entries[g][GXb + jb] * mpoly_const(alg.vars, gaminv);
      for (const auto& [e, c] : col.terms) {
        std::vector<int> letters;
        for (int v = 0; v < 3; ++v)
          for (long t = 0; t < e[v]; ++t) letters.push_back(v);
        if (letters.size() != 2)
          throw std::logic_error("ainfty_333_fixture: partner column is not quadratic");
        int a = letters[0], b = letters[1];
        int mult = a == b ? 1 : 2;
        QSeries share = scale(c, Rat(1, mult));
        alg.add_term(3, {GXb + jb, GX + a, GX + b}, g, mpoly_const(alg.vars, share));
        if (a != b) alg.add_term(3, {GXb + jb, GX + b, GX + a}, g, mpoly_const(alg.vars, share));
      }
    }
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) alg.define(3, {GXb + jb, a, b});
  }
  return alg;
}

AInftyAlgebra ainfty_p1_fixture(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("ainfty_p1_fixture: sign must be +-1");
  AInftyAlgebra alg;
  alg.vars = make_vars({"x", "y", "u", "v"});
  alg.cutoff = 10;
  Rat prec = alg.cutoff;
  alg.gens.push_back({"e1", 0, 1, std::nullopt, 1, 1});
  alg.gens.push_back({"e2", 0, 1, std::nullopt, 2, 2});
  alg.gens.push_back({"X", 1, 0, std::nullopt, 1, 2});
  alg.gens.push_back({"Y", 1, 0, std::nullopt, 2, 1});
  alg.units = {0, 1};
  for (size_t k = 0; k <= 5; ++k)
    for_each_tuple(4, k, [&](const std::vector<size_t>& idx) {
      alg.define(k, AKey(idx.begin(), idx.end()));
    });
  // m0 = sign q^4 (e1 + e2)
  alg.add_term(0, {}, 0, qmono(alg.vars, sign, 4, prec));
  alg.add_term(0, {}, 1, qmono(alg.vars, sign, 4, prec));
  // units, composability-gated
  for (int u = 0; u < 2; ++u)
    for (int g = 0; g < 4; ++g) {
      if (alg.composable({u, g})) alg.add_term(2, {u, g}, g, qmono(alg.vars, 1, 0, prec));
      if (g >= 2 && alg.composable({g, u}))
        alg.add_term(2, {g, u}, g, qmono(alg.vars, -1, 0, prec));
    }
  // the two half-discs between the equators
  alg.add_term(2, {2, 3}, 0, qmono(alg.vars, 1, 2, prec));
  alg.add_term(2, {3, 2}, 1, qmono(alg.vars, 1, 2, prec));
  return alg;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json ainfty_to_json(const AInftyAlgebra& alg) {
  Json j;
  Json vars = Json::array();
  for (const auto& n : *alg.vars) vars.push_back(n);
  j["vars"] = std::move(vars);
  j["cutoff"] = rat_pair(alg.cutoff);
  j["kmax"] = alg.kmax;
  Json gens = Json::array();
  for (const auto& g : alg.gens) {
    Json gj;
    gj["name"] = g.name;
    gj["parity"] = g.parity;
    gj["shifted"] = g.shifted;
    if (g.deg3) gj["deg3"] = *g.deg3;
    gj["src"] = g.src;
    gj["dst"] = g.dst;
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  Json units = Json::array();
  for (int u : alg.units) units.push_back(alg.gens[u].name);
  j["unit"] = std::move(units);
  Json tables = Json::array();
  for (size_t k = 0; k < alg.m.size(); ++k)
    for (const auto& [key, combo] : alg.m[k]) {
      Json e;
      e["k"] = k;
      Json in = Json::array();
      for (int g : key) in.push_back(alg.gens[g].name);
      e["in"] = std::move(in);
      Json out = Json::array();
      for (const auto& [g, c] : combo)
        out.push_back(Json::array({alg.gens[g].name, mpoly_to_json(c)}));
      e["out"] = std::move(out);
      tables.push_back(std::move(e));
    }
  j["tables"] = std::move(tables);
  return j;
}

AInftyAlgebra ainfty_from_json(const nlohmann::ordered_json& j) {
  AInftyAlgebra alg;
  std::vector<std::string> names;
  for (const auto& n : j.at("vars")) names.push_back(n.get<std::string>());
  alg.vars = names == std::vector<std::string>{"x", "y", "z"} ? xyz_vars() : make_vars(names);
  alg.cutoff = rat_unpair(j.at("cutoff"));
  alg.kmax = j.at("kmax").get<int>();
  for (const auto& gj : j.at("generators")) {
    AGen g;
    g.name = gj.at("name").get<std::string>();
    g.parity = gj.at("parity").get<int>();
    g.shifted = gj.at("shifted").get<int>();
    if (gj.contains("deg3")) g.deg3 = gj.at("deg3").get<int>();
    g.src = gj.at("src").get<int>();
    g.dst = gj.at("dst").get<int>();
    alg.gens.push_back(std::move(g));
  }
  for (const auto& u : j.at("unit")) {
    int g = alg.index_of(u.get<std::string>());
    if (g < 0) throw std::invalid_argument("ainfty_from_json: unknown unit");
    alg.units.push_back(g);
  }
  for (const auto& e : j.at("tables")) {
    size_t k = e.at("k").get<size_t>();
    AKey key;
    for (const auto& n : e.at("in")) {
      int g = alg.index_of(n.get<std::string>());
      if (g < 0) throw std::invalid_argument("ainfty_from_json: unknown generator");
      key.push_back(g);
    }
    alg.define(k, key);
    for (const auto& o : e.at("out")) {
      int g = alg.index_of(o.at(0).get<std::string>());
      if (g < 0) throw std::invalid_argument("ainfty_from_json: unknown generator");
      alg.add_term(k, key, g, mpoly_qs_from_json(o.at(1)));
    }
  }
  return alg;
}

}  // namespace qmirror
