#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmirror/floer.hpp"

namespace qmirror {

// Z/2-graded square matrix d with d^2 = target * Id.  Entry (i,j) maps basis
// element j into basis element i, so a nonzero entry must connect opposite
// parities.
template <typename C>
struct MatrixFact {
  Vars vars;
  std::vector<int> parity;
  std::vector<std::string> labels;
  std::vector<std::vector<MPoly<C>>> entries;
  MPoly<C> target;

  size_t size() const { return parity.size(); }
};

template <typename C>
using PolyMat = std::vector<std::vector<MPoly<C>>>;

template <typename C>
PolyMat<C> pm_zero(size_t rows, size_t cols, const Vars& v) {
  return PolyMat<C>(rows, std::vector<MPoly<C>>(cols, mpoly_zero<C>(v)));
}

template <typename C>
PolyMat<C> pm_mul(const PolyMat<C>& a, const PolyMat<C>& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("pm_mul: shape mismatch");
  PolyMat<C> r = pm_zero<C>(a.size(), b[0].size(), a[0][0].vars);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j)
        if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

template <typename C>
PolyMat<C> pm_add(const PolyMat<C>& a, const PolyMat<C>& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw std::invalid_argument("pm_add: shape mismatch");
  PolyMat<C> r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] + b[i][j];
  return r;
}

template <typename C>
PolyMat<C> pm_scale(const PolyMat<C>& a, const MPoly<C>& s) {
  PolyMat<C> r = a;
  for (auto& row : r)
    for (auto& e : row) e = e * s;
  return r;
}

struct SquareOffender {
  int row = 0, col = 0;
  std::string residual;
};

struct SquareReport {
  std::vector<SquareOffender> parity_offenders;
  std::vector<SquareOffender> square_offenders;
  bool ok() const { return parity_offenders.empty() && square_offenders.empty(); }
};

// Checks the odd-operator placement and the square law; `vanishes` decides
// zero-ness of residual entries, so truncated coefficient rings can compare
// to their working order.
template <typename C, typename ZeroTest>
SquareReport square_check(const MatrixFact<C>& m, ZeroTest vanishes) {
  SquareReport rep;
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (m.parity[i] == m.parity[j] && !m.entries[i][j].is_zero())
        rep.parity_offenders.push_back({(int)i, (int)j, to_string(m.entries[i][j])});
  PolyMat<C> sq = pm_mul(m.entries, m.entries);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      MPoly<C> res = i == j ? sq[i][j] - m.target : sq[i][j];
      if (!vanishes(res)) rep.square_offenders.push_back({(int)i, (int)j, to_string(res)});
    }
  return rep;
}

template <typename C>
SquareReport square_check(const MatrixFact<C>& m) {
  return square_check(m, [](const MPoly<C>& p) { return p.is_zero(); });
}

SquareReport square_check_to_order(const MatrixFact<QSeries>& m, const Rat& order);

// The 8x8 factorization on basis (p, X, Y, Z | e, Xb, Yb, Zb) assembled from
// the transition data; target is W - lambda.
MatrixFact<QSeries> build_seidel_mf(const FloerData& fd, const Potential& W);

// Koszul-type operator sum_i xs[i] * (wedge by generator i) + ws[i] *
// (contraction by generator i) on the rank-2^n exterior basis, subsets in
// binary order; target sum_i xs[i] ws[i].
template <typename C>
MatrixFact<C> wedge_contraction(const std::vector<MPoly<C>>& xs, const std::vector<MPoly<C>>& ws,
                                const C& one) {
  if (xs.size() != ws.size()) throw std::invalid_argument("wedge_contraction: length mismatch");
  if (xs.empty()) throw std::invalid_argument("wedge_contraction: no generators");
  Vars v = xs[0].vars;
  size_t n = xs.size();
  if (n > 20) throw std::invalid_argument("wedge_contraction: rank too large");
  size_t N = size_t(1) << n;
  MatrixFact<C> m;
  m.vars = v;
  m.parity.resize(N);
  m.labels.resize(N);
  m.entries = pm_zero<C>(N, N, v);
  m.target = mpoly_zero<C>(v);
  for (size_t i = 0; i < n; ++i) m.target = m.target + xs[i] * ws[i];
  for (size_t s = 0; s < N; ++s) {
    int pop = __builtin_popcountll(s);
    m.parity[s] = pop & 1;
    std::string lab;
    for (size_t i = 0; i < n; ++i)
      if (s >> i & 1) lab += (lab.empty() ? "v" : "^v") + std::to_string(i);
    m.labels[s] = lab.empty() ? "1" : lab;
    for (size_t i = 0; i < n; ++i) {
      int below = __builtin_popcountll(s & ((size_t(1) << i) - 1));
      const MPoly<C>& coeff = (s >> i & 1) ? ws[i] : xs[i];
      size_t t = s ^ (size_t(1) << i);
      MPoly<C> signed_coeff = (below & 1) ? -coeff : coeff;
      m.entries[t][s] = m.entries[t][s] + signed_coeff;
    }
  }
  return m;
}

// Basis map from the Seidel labels onto exterior-basis bitmask indices.
std::array<int, 8> seidel_wedge_perm();

// Signs s (s[0] = +1) with seidel.entries[i][j] == s[i] s[j] *
// wedge.entries[perm[i]][perm[j]] up to the given order, if any exist.
std::optional<std::array<int, 8>> seidel_wedge_signs(const MatrixFact<QSeries>& wedge,
                                                     const MatrixFact<QSeries>& seidel,
                                                     const Rat& order);

// Shared symbol ring for the diagonal-brane checks:
// (phi, psi, a1, a2, a3, b1, b2, b3, g1, g2, g3, x, y, z).
Vars diag_vars();

// The two 3x3 factors of the long-diagonal factorization, entries in the
// printed symbol pattern.
std::array<std::array<MPoly<Rat>, 3>, 3> long_diagonal_J();
std::array<std::array<MPoly<Rat>, 3>, 3> long_diagonal_E();

struct LongDiagReport {
  bool ok = false;
  bool specialization_ok = false;
  std::vector<std::string> failures;
  // Cofactors c with a1 a2 a3 * (product - W Id) = c * R entrywise, where
  // R = phi (a1^3 + a2^3 + a3^3) - psi a1 a2 a3.
  std::array<std::array<MPoly<Rat>, 3>, 3> je_cofactor, ej_cofactor;
};

// Substitutes b_i = phi / a_i and g_i = -phi a_i / (a_j a_k) (cleared of
// denominators), multiplies J and E both ways, and verifies the products
// equal W Id modulo the cubic relation R; also checks the exact square at
// the specialization a = (1,1,1), psi = 3 phi, which satisfies R = 0.
LongDiagReport long_diagonal_check();

// The 4x4 short-diagonal block matrix over the symbol ring.
MatrixFact<Rat> short_diagonal_mf();

// Constraints on the series symbols equivalent to the short diagonal squaring
// to W Id: one polynomial per cubic monomial in (x, y, z), each required to
// vanish.  Emitted as data; the source text leaves the list unstated.
std::vector<std::pair<Expo, MPoly<Rat>>> short_diagonal_relations();

// Differential on morphism matrices f: P -> Q (entry (i,j) maps P-basis j to
// Q-basis i): d(f) = d_Q f - (-1)^{deg} f d_P.
template <typename C>
PolyMat<C> morphism_differential(const PolyMat<C>& f, int deg, const MatrixFact<C>& P,
                                 const MatrixFact<C>& Q) {
  if (f.size() != Q.size() || f.empty() || f[0].size() != P.size())
    throw std::invalid_argument("morphism_differential: shape mismatch");
  PolyMat<C> left = pm_mul(Q.entries, f);
  PolyMat<C> right = pm_mul(f, P.entries);
  PolyMat<C> r = left;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j)
      r[i][j] = (deg % 2 == 0) ? r[i][j] - right[i][j] : r[i][j] + right[i][j];
  return r;
}

// Sign bridging a pair of composable elements into the dg convention:
// (-1)^{deg_first * (deg_second + 1)}.
inline int ainfty_compose_sign(int deg_first, int deg_second) {
  return (deg_first * (deg_second + 1)) % 2 ? -1 : 1;
}

// Determinant of the block carrying odd generators into even ones, with every
// ring variable set to zero, as a series certificate: a nonzero value means
// the differential is invertible at the origin, so the object is trivial.
QSeries odd_block_det_at_origin(const MatrixFact<QSeries>& m);

}  // namespace qmirror
