#include "qmirror/matrixfact.hpp"

#include <functional>
#include <map>

namespace qmirror {

namespace {

MPoly<Rat> sym(size_t i) { return mpoly_var(diag_vars(), i, Rat(1)); }

// Indices into diag_vars.
enum : size_t { PHI, PSI, A1, A2, A3, B1, B2, B3, G1, G2, G3, VX, VY, VZ };

MPoly<Rat> mono2(size_t i, size_t j) { return sym(i) * sym(j); }

}  // namespace

SquareReport square_check_to_order(const MatrixFact<QSeries>& m, const Rat& order) {
  MPoly<QSeries> zero = mpoly_zero<QSeries>(m.vars);
  return square_check(m, [&](const MPoly<QSeries>& p) {
    return mpoly_equal_to_order(p, zero, order);
  });
}

MatrixFact<QSeries> build_seidel_mf(const FloerData& fd, const Potential& W) {
  Vars v = xyz_vars();
  for (const auto& wv : fd.w)
    for (const auto& [e, c] : wv.terms)
      if (!c.prec || *c.prec < W.cutoff)
        throw std::invalid_argument("build_seidel_mf: transition data short of the cutoff");

  QSeries one = qs_const(Rat(1));
  auto var = [&](int i) { return mpoly_var(v, i, one); };
  MPoly<QSeries> x = var(0), y = var(1), z = var(2);
  const MPoly<QSeries>&wx = fd.w[0], &wy = fd.w[1], &wz = fd.w[2];

  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 1, 1, 1, 0, 0, 0, 0};
  m.labels = {"p", "X", "Y", "Z", "e", "Xb", "Yb", "Zb"};
  m.entries = pm_zero<QSeries>(8, 8, v);
  m.target = W.poly - mpoly_const(v, W.lambda);

  const MPoly<QSeries> A[4][4] = {
      {mpoly_zero<QSeries>(v), x, y, z},
      {x, mpoly_zero<QSeries>(v), wz, -wy},
      {y, -wz, mpoly_zero<QSeries>(v), wx},
      {z, wy, -wx, mpoly_zero<QSeries>(v)},
  };
  const MPoly<QSeries> B[4][4] = {
      {mpoly_zero<QSeries>(v), wx, wy, wz},
      {wx, mpoly_zero<QSeries>(v), -z, y},
      {wy, z, mpoly_zero<QSeries>(v), -x},
      {wz, -y, x, mpoly_zero<QSeries>(v)},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      m.entries[i][4 + j] = A[i][j];
      m.entries[4 + i][j] = B[i][j];
    }
  return m;
}

std::array<int, 8> seidel_wedge_perm() {
  // (p, X, Y, Z, e, Xb, Yb, Zb) onto bitmask subsets of the generators:
  // p = v0^v1^v2, X = v0, Y = v1, Z = v2, e = 1, Xb = v1^v2, Yb = v0^v2,
  // Zb = v0^v1.
  return {7, 1, 2, 4, 0, 6, 5, 3};
}

std::optional<std::array<int, 8>> seidel_wedge_signs(const MatrixFact<QSeries>& wedge,
                                                     const MatrixFact<QSeries>& seidel,
                                                     const Rat& order) {
  if (wedge.size() != 8 || seidel.size() != 8) return std::nullopt;
  auto perm = seidel_wedge_perm();
  for (int i = 0; i < 8; ++i)
    if (seidel.parity[i] != wedge.parity[perm[i]]) return std::nullopt;
  if (!mpoly_equal_to_order(wedge.target, seidel.target, order)) return std::nullopt;
  for (int mask = 0; mask < 128; ++mask) {
    std::array<int, 8> s;
    s[0] = 1;
    for (int i = 1; i < 8; ++i) s[i] = (mask >> (i - 1) & 1) ? -1 : 1;
    bool ok = true;
    for (int i = 0; ok && i < 8; ++i)
      for (int j = 0; ok && j < 8; ++j) {
        MPoly<QSeries> mapped = wedge.entries[perm[i]][perm[j]];
        if (s[i] * s[j] < 0) mapped = -mapped;
        ok = mpoly_equal_to_order(mapped, seidel.entries[i][j], order);
      }
    if (ok) return s;
  }
  return std::nullopt;
}

Vars diag_vars() {
  static Vars v = make_vars(
      {"phi", "psi", "a1", "a2", "a3", "b1", "b2", "b3", "g1", "g2", "g3", "x", "y", "z"});
  return v;
}

std::array<std::array<MPoly<Rat>, 3>, 3> long_diagonal_J() {
  auto ent = [](size_t b, size_t m1, size_t m2a, size_t g, size_t n1, size_t n2) {
    return sym(b) * mono2(m1, m2a) + sym(g) * mono2(n1, n2);
  };
  return {{
      {ent(B1, VX, VX, G1, VY, VZ), ent(B3, VZ, VZ, G3, VX, VY), ent(B2, VY, VY, G2, VZ, VX)},
      {ent(B2, VZ, VZ, G2, VX, VY), ent(B1, VY, VY, G1, VZ, VX), ent(B3, VX, VX, G3, VY, VZ)},
      {ent(B3, VY, VY, G3, VZ, VX), ent(B2, VX, VX, G2, VY, VZ), ent(B1, VZ, VZ, G1, VX, VY)},
  }};
}

std::array<std::array<MPoly<Rat>, 3>, 3> long_diagonal_E() {
  auto ent = [](size_t a, size_t v) { return mono2(a, v); };
  return {{
      {ent(A1, VX), ent(A2, VZ), ent(A3, VY)},
      {ent(A3, VZ), ent(A1, VY), ent(A2, VX)},
      {ent(A2, VY), ent(A3, VX), ent(A1, VZ)},
  }};
}

namespace {

MPoly<Rat> curve_relation() {
  auto cube = [](size_t a) { return sym(a) * sym(a) * sym(a); };
  return sym(PHI) * (cube(A1) + cube(A2) + cube(A3)) - sym(PSI) * sym(A1) * sym(A2) * sym(A3);
}

MPoly<Rat> w_tilde() {
  auto cube = [](size_t a) { return sym(a) * sym(a) * sym(a); };
  return sym(PHI) * (cube(VX) + cube(VY) + cube(VZ)) - sym(PSI) * sym(VX) * sym(VY) * sym(VZ);
}

// Division by the curve relation, univariate in a1.  The leading a1
// coefficient of the relation is phi, so each reduction step divides by phi;
// nullopt means some step failed and the entry is not a multiple.
std::optional<MPoly<Rat>> cofactor_mod_relation(MPoly<Rat> f) {
  const MPoly<Rat> R = curve_relation();
  const MPoly<Rat> phi = sym(PHI);
  MPoly<Rat> quot = mpoly_zero<Rat>(diag_vars());
  for (int d = deg_in_var(f, A1); d >= 3; d = deg_in_var(f, A1)) {
    MPoly<Rat> lc = coeff_of_var_power(f, A1, d);
    MPoly<Rat> c;
    try {
      c = exact_divide(lc, phi);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    MPoly<Rat> t = mpoly_zero<Rat>(diag_vars());
    for (const auto& [e, co] : c.terms) {
      Expo ne = e;
      ne[A1] += d - 3;
      t.terms.emplace(std::move(ne), co);
    }
    quot = quot + t;
    f = f - t * R;
  }
  if (!f.is_zero()) return std::nullopt;
  return quot;
}

using Mat3 = std::array<std::array<MPoly<Rat>, 3>, 3>;

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = mpoly_zero<Rat>(diag_vars());
      for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

LongDiagReport long_diagonal_check() {
  LongDiagReport rep;
  Vars v = diag_vars();

  std::map<std::string, MPoly<Rat>> clear = {
      {"b1", sym(PHI) * mono2(A2, A3)},  {"b2", sym(PHI) * mono2(A3, A1)},
      {"b3", sym(PHI) * mono2(A1, A2)},  {"g1", -(sym(PHI) * mono2(A1, A1))},
      {"g2", -(sym(PHI) * mono2(A2, A2))}, {"g3", -(sym(PHI) * mono2(A3, A3))},
  };

  Mat3 J = long_diagonal_J(), E = long_diagonal_E(), DJ;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) DJ[i][j] = substitute_linear(J[i][j], clear);

  MPoly<Rat> DW = sym(A1) * sym(A2) * sym(A3) * w_tilde();
  Mat3 JE = mat3_mul(DJ, E), EJ = mat3_mul(E, DJ);
  bool all_ok = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPoly<Rat> je = i == j ? JE[i][j] - DW : JE[i][j];
      MPoly<Rat> ej = i == j ? EJ[i][j] - DW : EJ[i][j];
      auto cj = cofactor_mod_relation(je);
      auto ce = cofactor_mod_relation(ej);
      if (cj)
        rep.je_cofactor[i][j] = *cj;
      else {
        all_ok = false;
        rep.failures.push_back("JE entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not a multiple of the curve relation");
      }
      if (ce)
        rep.ej_cofactor[i][j] = *ce;
      else {
        all_ok = false;
        rep.failures.push_back("EJ entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not a multiple of the curve relation");
      }
    }

  MPoly<Rat> one = mpoly_const(v, Rat(1));
  std::map<std::string, MPoly<Rat>> spec = {
      {"a1", one}, {"a2", one}, {"a3", one}, {"psi", sym(PHI) * Rat(3)}};
  Mat3 Js, Es;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Js[i][j] = substitute_linear(DJ[i][j], spec);
      Es[i][j] = substitute_linear(E[i][j], spec);
    }
  MPoly<Rat> Ws = substitute_linear(w_tilde(), spec);
  Mat3 prods[2] = {mat3_mul(Js, Es), mat3_mul(Es, Js)};
  rep.specialization_ok = true;
  for (const Mat3& prod : prods)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        MPoly<Rat> want = i == j ? Ws : mpoly_zero<Rat>(v);
        if (!(prod[i][j] == want)) rep.specialization_ok = false;
      }
  if (!rep.specialization_ok)
    rep.failures.push_back("specialized product is not W Id");

  rep.ok = all_ok && rep.specialization_ok;
  return rep;
}

namespace {

MPoly<Rat> short_L1() { return mono2(A1, VX) + mono2(A2, VY) + mono2(A3, VZ); }
MPoly<Rat> short_L2() { return mono2(A3, VX) + mono2(A2, VY) + mono2(A1, VZ); }

MPoly<Rat> short_Q(size_t bh, size_t gh, size_t bt, size_t gt) {
  return sym(bh) * mono2(VX, VX) + sym(gh) * mono2(VY, VZ) + sym(B2) * mono2(VY, VY) +
         sym(G2) * mono2(VZ, VX) + sym(bt) * mono2(VZ, VZ) + sym(gt) * mono2(VX, VY);
}

MPoly<Rat> short_Q1() { return short_Q(B1, G1, B3, G3); }
MPoly<Rat> short_Q2() { return short_Q(B3, G3, B1, G1); }

MPoly<Rat> w_full() {
  auto cube = [](size_t a) { return sym(a) * sym(a) * sym(a); };
  return sym(PHI) * (cube(VX) - cube(VY) + cube(VZ)) + sym(PSI) * sym(VX) * sym(VY) * sym(VZ);
}

}  // namespace

MatrixFact<Rat> short_diagonal_mf() {
  Vars v = diag_vars();
  MatrixFact<Rat> m;
  m.vars = v;
  m.parity = {1, 1, 0, 0};
  m.labels = {"o1", "o2", "e1", "e2"};
  m.entries = pm_zero<Rat>(4, 4, v);
  m.target = w_full();
  MPoly<Rat> L1 = short_L1(), L2 = short_L2(), Q1 = short_Q1(), Q2 = short_Q2();
  m.entries[0][2] = L1;
  m.entries[0][3] = Q2;
  m.entries[1][2] = -L2;
  m.entries[1][3] = Q1;
  m.entries[2][0] = Q1;
  m.entries[2][1] = -Q2;
  m.entries[3][0] = L2;
  m.entries[3][1] = L1;
  return m;
}

std::vector<std::pair<Expo, MPoly<Rat>>> short_diagonal_relations() {
  Vars v = diag_vars();
  MPoly<Rat> S = short_L1() * short_Q1() + short_L2() * short_Q2() - w_full();
  std::map<Expo, MPoly<Rat>, GradedLex> grouped;
  for (const auto& [e, c] : S.terms) {
    Expo xyz = {e[VX], e[VY], e[VZ]};
    Expo rest = e;
    rest[VX] = rest[VY] = rest[VZ] = 0;
    auto it = grouped.find(xyz);
    if (it == grouped.end()) it = grouped.emplace(xyz, mpoly_zero<Rat>(v)).first;
    it->second = it->second + mpoly_monomial(v, rest, c);
  }
  return {grouped.begin(), grouped.end()};
}

QSeries odd_block_det_at_origin(const MatrixFact<QSeries>& m) {
  std::vector<int> even_rows, odd_cols;
  for (size_t i = 0; i < m.size(); ++i)
    (m.parity[i] == 0 ? even_rows : odd_cols).push_back((int)i);
  if (even_rows.size() != odd_cols.size())
    throw std::invalid_argument("odd_block_det_at_origin: unbalanced parities");
  size_t n = even_rows.size();
  Expo origin(m.vars->size(), 0);
  std::vector<std::vector<QSeries>> a(n, std::vector<QSeries>(n, qs_zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto it = m.entries[even_rows[i]][odd_cols[j]].terms.find(origin);
      if (it != m.entries[even_rows[i]][odd_cols[j]].terms.end()) a[i][j] = it->second;
    }
  // Laplace expansion; the blocks in play are small.
  std::vector<int> cols(n);
  for (size_t j = 0; j < n; ++j) cols[j] = (int)j;
  std::function<QSeries(size_t, std::vector<int>&)> det = [&](size_t row,
                                                              std::vector<int>& avail) {
    if (row == n) return qs_const(Rat(1));
    QSeries acc = qs_zero();
    for (size_t k = 0; k < avail.size(); ++k) {
      int c = avail[k];
      if (a[row][c].terms.empty() && !a[row][c].prec) continue;
      std::vector<int> rest = avail;
      rest.erase(rest.begin() + k);
      QSeries sub = det(row + 1, rest);
      QSeries term = mul(a[row][c], sub);
      if (k % 2) term = neg(term);
      acc = add(acc, term);
    }
    return acc;
  };
  return det(0, cols);
}

}  // namespace qmirror
