#include "qmirror/floer.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace qmirror {

namespace {

using Acc = std::map<Expo, std::map<Rat, Rat>>;

MPoly<QSeries> build(Acc& acc, const Rat& prec) {
  MPoly<QSeries> out;
  out.vars = xyz_vars();
  for (auto& [e, coeffs] : acc) {
    QSeries s;
    s.prec = prec;
    for (auto& [a, c] : coeffs)
      if (c != 0) s.terms[a] = c;
    if (s.terms.empty()) continue;
    out.terms[e] = s;
  }
  return out;
}

Expo drop_letters(const Polygon& p, int a, int b) {
  Expo e{static_cast<int>(p.expo[0]), static_cast<int>(p.expo[1]),
         static_cast<int>(p.expo[2])};
  if (a >= 0) --e[a];
  if (b >= 0) --e[b];
  for (int v : e)
    if (v < 0) throw std::logic_error("corner monomial with negative exponent");
  return e;
}

int cyclic_pairs(const std::vector<int>& word, int a, int b) {
  int n = static_cast<int>(word.size());
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (word[i] == a && word[(i + 1) % n] == b) ++count;
  return count;
}

QSeries zero_to(const Rat& prec) {
  QSeries s = qs_zero();
  s.prec = prec;
  return s;
}

}  // namespace

const char* w_convention_name(WConvention c) {
  switch (c) {
    case WConvention::PFollowing: return "p-following";
    case WConvention::PPreceding: return "p-preceding";
    case WConvention::EFollowing: return "e-following";
    case WConvention::EPreceding: return "e-preceding";
  }
  return "?";
}

ThetaGamma compute_theta_gamma(const std::vector<Polygon>& polys, const Rat& cutoff,
                               const RegionWeights& weights) {
  Rat prec = potential_precision(cutoff, weights);
  Acc acc;
  for (const auto& p : polys) {
    if (!p.positive) continue;
    std::set<int> letters(p.word.begin(), p.word.end());
    if (letters.size() < 3) continue;
    // Adjacent corner pairs, counted with the boundary orientation: a class
    // can wind its letters either way around, and the reversed winding
    // enters with the opposite sign.
    int fxy = cyclic_pairs(p.word, 0, 1);
    int fyz = cyclic_pairs(p.word, 1, 2);
    int fzx = cyclic_pairs(p.word, 2, 0);
    int bxy = cyclic_pairs(p.word, 1, 0);
    int byz = cyclic_pairs(p.word, 2, 1);
    int bzx = cyclic_pairs(p.word, 0, 2);
    if (fxy != fyz || fyz != fzx || bxy != byz || byz != bzx)
      throw std::logic_error("inconsistent corner-pair counts on " + p.canon);
    int alpha = fxy - bxy;
    if (alpha == 0) continue;
    Rat c = Rat(alpha) / Rat(p.r);
    if (p.s % 2) c = -c;
    Expo e{static_cast<int>(p.expo[0] - 1), static_cast<int>(p.expo[1] - 1),
           static_cast<int>(p.expo[2] - 1)};
    for (int v : e)
      if (v < 0) throw std::logic_error("three-letter class missing a letter");
    acc[e][p.area] += c;
  }
  ThetaGamma tg;
  tg.gamma = build(acc, prec);
  Expo unit{0, 0, 0};
  auto it = tg.gamma.terms.find(unit);
  tg.gamma_scalar = it != tg.gamma.terms.end() ? it->second : zero_to(prec);
  return tg;
}

std::array<MPoly<QSeries>, 3> compute_w(const std::vector<Polygon>& polys, const Rat& cutoff,
                                        WConvention conv, const RegionWeights& weights) {
  Rat prec = potential_precision(cutoff, weights);
  std::array<Acc, 3> acc;
  for (const auto& p : polys) {
    int k = p.corners;
    int sign = raw_sign(p);
    for (int t = 0; t < k; ++t) {
      int v = p.word[t];
      int side;
      bool use_p;
      switch (conv) {
        case WConvention::PFollowing: side = t; use_p = true; break;
        case WConvention::PPreceding: side = (t - 1 + k) % k; use_p = true; break;
        case WConvention::EFollowing: side = t; use_p = false; break;
        case WConvention::EPreceding: side = (t - 1 + k) % k; use_p = false; break;
      }
      int count = use_p ? p.side_p[side] : p.side_e[side];
      if (count == 0) continue;
      acc[v][drop_letters(p, v, -1)][p.area] += Rat(sign * count) / Rat(p.r);
    }
  }
  std::array<MPoly<QSeries>, 3> w;
  for (int v = 0; v < 3; ++v) w[v] = build(acc[v], prec);
  return w;
}

TTable compute_t_table(const std::vector<Polygon>& polys, const Rat& cutoff,
                       const RegionWeights& weights) {
  Rat prec = potential_precision(cutoff, weights);
  std::array<std::array<Acc, 3>, 3> acc;
  for (const auto& p : polys) {
    int k = p.corners;
    Rat sigma = p.positive ? Rat(p.s % 2 ? -1 : 1) : Rat(p.pcount % 2 ? 1 : -1);
    for (int t = 0; t < k; ++t) {
      int out = p.word[t];
      int in = p.word[(t - 1 + k) % k];
      acc[out][in][drop_letters(p, out, in)][p.area] += sigma / Rat(p.r);
    }
  }
  TTable tt;
  for (int o = 0; o < 3; ++o)
    for (int i = 0; i < 3; ++i) tt[o][i] = build(acc[o][i], prec);
  return tt;
}

bool mpoly_equal_to_order(const MPoly<QSeries>& a, const MPoly<QSeries>& b, const Rat& order) {
  std::set<Expo, GradedLex> keys;
  for (const auto& [e, s] : a.terms) keys.insert(e);
  for (const auto& [e, s] : b.terms) keys.insert(e);
  for (const auto& e : keys) {
    auto ia = a.terms.find(e);
    auto ib = b.terms.find(e);
    QSeries sa = ia != a.terms.end() ? ia->second : zero_to(order);
    QSeries sb = ib != b.terms.end() ? ib->second : zero_to(order);
    if (!equal_to_order(sa, sb, order)) return false;
  }
  return true;
}

FloerData compute_delta(const std::vector<Polygon>& polys, const Potential& pot,
                        const RegionWeights& weights) {
  const Rat& cutoff = pot.cutoff;
  Rat prec = potential_precision(cutoff, weights);
  FloerData fd;
  fd.tg = compute_theta_gamma(polys, cutoff, weights);

  MPoly<QSeries> target = pot.poly;
  {
    MPoly<QSeries> lam = mpoly_const(xyz_vars(), pot.lambda);
    target = target - lam;
  }

  QSeries one = qs_const(Rat(1));
  // Every marker-side convention splits the potential (each one hands the
  // full per-class marker total to some side), so the split identity cannot
  // pick the side. Calibrated once against the factorization entries for
  // (3,3,3): only p-following and its mirror twin e-preceding match them.
  fd.convention = WConvention::PFollowing;
  fd.w = compute_w(polys, cutoff, fd.convention, weights);
  MPoly<QSeries> sum = mpoly_zero<QSeries>(xyz_vars());
  for (int v = 0; v < 3; ++v) sum = sum + mpoly_var(xyz_vars(), v, one) * fd.w[v];
  if (!mpoly_equal_to_order(sum, target, cutoff))
    throw std::runtime_error("markers do not split the potential: sum x_i w_i != W - lambda");

  fd.t = compute_t_table(polys, cutoff, weights);
  for (int out = 0; out < 3; ++out)
    for (int in = 0; in < 3; ++in) {
      if (out == in) {
        if (!mpoly_equal_to_order(fd.t[out][in], mpoly_zero<QSeries>(xyz_vars()), cutoff))
          throw std::runtime_error("diagonal transition entry does not cancel");
        continue;
      }
      int third = 3 - out - in;
      MPoly<QSeries> expect = fd.tg.gamma * mpoly_var(xyz_vars(), third, one);
      if (out != (in + 1) % 3) expect = -expect;
      if (!mpoly_equal_to_order(fd.t[out][in], expect, cutoff))
        throw std::runtime_error("transition entry does not factor through gamma");
    }
  return fd;
}

}  // namespace qmirror
