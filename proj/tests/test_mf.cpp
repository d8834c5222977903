#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qmirror/matrixfact.hpp"
#include "qmirror/series333.hpp"

using namespace qmirror;

namespace {

// One shared (3,3,3) corpus for the Seidel-side cases.
struct Corpus {
  Rat cutoff{80};
  std::vector<Polygon> polys;
  Potential pot;
  FloerData fd;
  Corpus() {
    EnumOptions o;
    o.cutoff = cutoff;
    polys = enumerate_polygons(3, 3, 3, o);
    pot = assemble_potential({3, 3, 3}, polys, cutoff, o.weights);
    fd = compute_delta(polys, pot);
  }
};

const Corpus& corpus() {
  static Corpus c;
  return c;
}

MatrixFact<QSeries> p1_fixture() {
  // Basis (p1, p2 | q1, q2) over Z[x, y][[q]], differential blocks K (odd
  // rows) and H (even rows), squaring to q^2 x y.
  Vars v = make_vars({"x", "y"});
  QSeries q2 = qs_monomial(Rat(1), Rat(2));
  QSeries one = qs_const(Rat(1));
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 1, 0, 0};
  m.labels = {"p1", "p2", "q1", "q2"};
  m.entries = pm_zero<QSeries>(4, 4, v);
  m.target = mpoly_monomial(v, Expo{1, 1}, q2);
  QSeries mq = neg(qs_monomial(Rat(1), Rat(1)));
  MPoly<QSeries> mxq = mpoly_monomial(v, Expo{1, 0}, mq);
  MPoly<QSeries> myq = mpoly_monomial(v, Expo{0, 1}, mq);
  // K maps q-generators to p-generators, H the other way round.
  m.entries[0][2] = myq;
  m.entries[1][3] = mxq;
  m.entries[2][0] = mxq;
  m.entries[3][1] = myq;
  return m;
}

MPoly<QSeries> rand_poly(std::mt19937& rng, const Vars& v) {
  std::uniform_int_distribution<int> nterms(1, 3), expo(0, 2), num(-4, 4), den(1, 3);
  MPoly<QSeries> p = mpoly_zero<QSeries>(v);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Expo e(v->size());
    for (auto& ei : e) ei = expo(rng);
    Rat c = rat(num(rng), den(rng));
    if (c == 0) c = 1;
    p = p + mpoly_monomial(v, e, qs_const(c));
  }
  return p;
}

}  // namespace

TEST_CASE("square check accepts the zero factorization of zero") {
  Vars v = xyz_vars();
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 0};
  m.labels = {"o", "e"};
  m.entries = pm_zero<QSeries>(2, 2, v);
  m.target = mpoly_zero<QSeries>(v);
  CHECK(square_check(m).ok());
}

TEST_CASE("square check flags parity and square offenders") {
  Vars v = xyz_vars();
  QSeries one = qs_const(Rat(1));
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 0};
  m.labels = {"o", "e"};
  m.entries = pm_zero<QSeries>(2, 2, v);
  m.target = mpoly_zero<QSeries>(v);
  m.entries[0][0] = mpoly_const(v, one);  // same parity
  auto rep = square_check(m);
  CHECK(!rep.ok());
  CHECK(rep.parity_offenders.size() == 1);
  CHECK(!rep.square_offenders.empty());
}

TEST_CASE("projective line fixture squares exactly and is not trivial") {
  MatrixFact<QSeries> m = p1_fixture();
  auto rep = square_check(m);
  CHECK(rep.ok());
  QSeries det = odd_block_det_at_origin(m);
  CHECK(det.terms.empty());
}

TEST_CASE("a unit entry at the origin certifies a trivial object") {
  // Factorization of q^2 x y + 2 q^4, the same potential shifted off its
  // critical value; the odd-to-even block is invertible at x = y = 0.
  Vars v = make_vars({"x", "y"});
  QSeries one = qs_const(Rat(1));
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 0};
  m.labels = {"o", "e"};
  m.entries = pm_zero<QSeries>(2, 2, v);
  m.target = mpoly_monomial(v, Expo{1, 1}, qs_monomial(Rat(1), Rat(2))) +
             mpoly_const(v, qs_monomial(Rat(2), Rat(4)));
  m.entries[0][1] = mpoly_const(v, one);
  m.entries[1][0] = m.target;
  CHECK(square_check(m).ok());
  QSeries det = odd_block_det_at_origin(m);
  REQUIRE(!det.terms.empty());
  CHECK(det.terms.begin()->first == 4);
  CHECK(det.terms.begin()->second == 2);
}

TEST_CASE("odd block determinant requires balanced parities") {
  Vars v = xyz_vars();
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 1, 0};
  m.labels = {"a", "b", "c"};
  m.entries = pm_zero<QSeries>(3, 3, v);
  m.target = mpoly_zero<QSeries>(v);
  CHECK_THROWS_AS(odd_block_det_at_origin(m), std::invalid_argument);
}

TEST_CASE("assembled 8x8 factorization squares to the potential") {
  const Corpus& c = corpus();
  MatrixFact<QSeries> m = build_seidel_mf(c.fd, c.pot);
  REQUIRE(m.size() == 8);
  auto rep = square_check_to_order(m, c.cutoff);
  CHECK(rep.parity_offenders.empty());
  CHECK(rep.square_offenders.empty());
  CHECK(odd_block_det_at_origin(m).terms.empty());
}

TEST_CASE("the 8x8 entries sit where the strip counts put them") {
  const Corpus& c = corpus();
  MatrixFact<QSeries> m = build_seidel_mf(c.fd, c.pot);
  QSeries one = qs_const(Rat(1));
  Vars v = xyz_vars();
  MPoly<QSeries> x = mpoly_var(v, 0, one), y = mpoly_var(v, 1, one), z = mpoly_var(v, 2, one);
  CHECK(m.entries[0][5] == x);
  CHECK(m.entries[0][6] == y);
  CHECK(m.entries[0][7] == z);
  CHECK(m.entries[1][4] == x);
  CHECK(m.entries[4][1] == c.fd.w[0]);
  CHECK(m.entries[4][2] == c.fd.w[1]);
  CHECK(m.entries[4][3] == c.fd.w[2]);
  CHECK(m.entries[1][6] == c.fd.w[2]);
  CHECK(m.entries[1][7] == -c.fd.w[1]);
  CHECK(m.entries[2][4] == y);
  CHECK(m.entries[5][2] == -z);
  CHECK(m.entries[5][3] == y);
  CHECK(m.entries[5][1].is_zero());
  CHECK(m.entries[0][4].is_zero());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(m.entries[i][j].is_zero());
      CHECK(m.entries[4 + i][4 + j].is_zero());
    }
}

TEST_CASE("transition data short of the potential cutoff is rejected") {
  const Corpus& c = corpus();
  EnumOptions o;
  o.cutoff = 40;
  auto polys = enumerate_polygons(3, 3, 3, o);
  Potential pot40 = assemble_potential({3, 3, 3}, polys, o.cutoff, o.weights);
  FloerData fd40 = compute_delta(polys, pot40);
  CHECK_THROWS_AS(build_seidel_mf(fd40, c.pot), std::invalid_argument);
}

TEST_CASE("rank one wedge contraction is the Koszul two by two") {
  Vars v = xyz_vars();
  MPoly<Rat> x = mpoly_var(v, 0, Rat(1));
  MPoly<Rat> w = mpoly_var(v, 1, Rat(1)) * mpoly_var(v, 2, Rat(1));
  MatrixFact<Rat> m = wedge_contraction<Rat>({x}, {w}, Rat(1));
  REQUIRE(m.size() == 2);
  CHECK(m.labels[0] == "1");
  CHECK(m.labels[1] == "v0");
  CHECK(m.parity[0] == 0);
  CHECK(m.parity[1] == 1);
  CHECK(m.entries[1][0] == x);
  CHECK(m.entries[0][1] == w);
  CHECK(m.entries[0][0].is_zero());
  CHECK(m.entries[1][1].is_zero());
  CHECK(m.target == x * w);
  CHECK(square_check(m).ok());
}

TEST_CASE("wedge contraction squares for random data in every small rank") {
  std::mt19937 rng(20260822);
  Vars v = xyz_vars();
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<MPoly<QSeries>> xs, ws;
      std::mt19937 local(rng());
      for (int i = 0; i < n; ++i) {
        xs.push_back(rand_poly(local, v));
        ws.push_back(rand_poly(local, v));
      }
      MatrixFact<QSeries> m = wedge_contraction(xs, ws, qs_const(Rat(1)));
      auto rep = square_check(m);
      if (!rep.ok()) {
        CAPTURE(n);
        CAPTURE(trial);
        REQUIRE(rep.ok());
      }
    }
  }
}

TEST_CASE("wedge contraction validates its input") {
  Vars v = xyz_vars();
  MPoly<Rat> x = mpoly_var(v, 0, Rat(1));
  CHECK_THROWS_AS(wedge_contraction<Rat>({x}, {x, x}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(wedge_contraction<Rat>({}, {}, Rat(1)), std::invalid_argument);
}

TEST_CASE("the 8x8 factorization is the rank three Koszul model in disguise") {
  const Corpus& c = corpus();
  MatrixFact<QSeries> seidel = build_seidel_mf(c.fd, c.pot);
  QSeries one = qs_const(Rat(1));
  Vars v = xyz_vars();
  std::vector<MPoly<QSeries>> xs = {mpoly_var(v, 0, one), mpoly_var(v, 1, one),
                                    mpoly_var(v, 2, one)};
  std::vector<MPoly<QSeries>> ws = {c.fd.w[0], c.fd.w[1], c.fd.w[2]};
  MatrixFact<QSeries> wedge = wedge_contraction(xs, ws, one);
  CHECK(square_check_to_order(wedge, c.cutoff).ok());
  auto signs = seidel_wedge_signs(wedge, seidel, c.cutoff);
  REQUIRE(signs.has_value());
  std::array<int, 8> expect = {1, 1, 1, 1, 1, 1, -1, 1};
  CHECK(*signs == expect);
}

TEST_CASE("long diagonal factorization closes modulo the curve relation") {
  LongDiagReport rep = long_diagonal_check();
  CHECK(rep.ok);
  CHECK(rep.specialization_ok);
  CHECK(rep.failures.empty());
  Vars v = diag_vars();
  MPoly<Rat> mxyz =
      -(mpoly_var(v, var_index(v, "x"), Rat(1)) * mpoly_var(v, var_index(v, "y"), Rat(1)) *
        mpoly_var(v, var_index(v, "z"), Rat(1)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const MPoly<Rat>& je = rep.je_cofactor[i][j];
      const MPoly<Rat>& ej = rep.ej_cofactor[i][j];
      if (i == j) {
        CHECK(je == mxyz);
        CHECK(ej == mxyz);
      } else {
        CHECK(je.is_zero());
        CHECK(ej.is_zero());
      }
    }
}

TEST_CASE("long diagonal factors carry the printed symbol pattern") {
  Vars v = diag_vars();
  auto sym = [&](const char* n) { return mpoly_var(v, var_index(v, n), Rat(1)); };
  auto J = long_diagonal_J();
  auto E = long_diagonal_E();
  CHECK(J[0][0] == sym("b1") * sym("x") * sym("x") + sym("g1") * sym("y") * sym("z"));
  CHECK(J[0][1] == sym("b3") * sym("z") * sym("z") + sym("g3") * sym("x") * sym("y"));
  CHECK(J[1][2] == sym("b3") * sym("x") * sym("x") + sym("g3") * sym("y") * sym("z"));
  CHECK(E[0][0] == sym("a1") * sym("x"));
  CHECK(E[0][1] == sym("a2") * sym("z"));
  CHECK(E[2][1] == sym("a3") * sym("x"));
}

TEST_CASE("short diagonal block layout and parity") {
  MatrixFact<Rat> m = short_diagonal_mf();
  REQUIRE(m.size() == 4);
  CHECK(m.parity == std::vector<int>{1, 1, 0, 0});
  auto rep = square_check(m);
  CHECK(rep.parity_offenders.empty());
  // With free symbols the square law is exactly the relation set, so it
  // cannot hold identically.
  CHECK(!rep.square_offenders.empty());
}

TEST_CASE("short diagonal relations reproduce the square defect") {
  MatrixFact<Rat> m = short_diagonal_mf();
  auto rels = short_diagonal_relations();
  REQUIRE(rels.size() == 10);

  Vars v = diag_vars();
  auto sym = [&](const char* n) { return mpoly_var(v, var_index(v, n), Rat(1)); };
  std::map<Expo, MPoly<Rat>, GradedLex> by_mono(
      std::make_move_iterator(rels.begin()), std::make_move_iterator(rels.end()));

  MPoly<Rat> x3 = by_mono.at(Expo{3, 0, 0});
  CHECK(x3 == sym("a1") * sym("b1") + sym("a3") * sym("b3") - sym("phi"));
  MPoly<Rat> xyz = by_mono.at(Expo{1, 1, 1});
  CHECK(xyz == (sym("a1") * sym("g1") + sym("a2") * sym("g2") + sym("a3") * sym("g3")) * Rat(2) -
                   sym("psi"));

  // The x <-> z reflection fixes the factorization, so the list is closed
  // under swapping the first and last exponents.
  for (const auto& [e, p] : by_mono) {
    Expo flip = {e[2], e[1], e[0]};
    REQUIRE(by_mono.count(flip) == 1);
    CHECK(by_mono.at(flip) == p);
  }

  // Faithfulness: the relations are exactly the graded pieces of the square
  // defect on the diagonal.
  auto sq = pm_mul(m.entries, m.entries);
  MPoly<Rat> defect = sq[0][0] - m.target;
  MPoly<Rat> rebuilt = mpoly_zero<Rat>(v);
  size_t ix = var_index(v, "x"), iy = var_index(v, "y"), iz = var_index(v, "z");
  for (const auto& [e, p] : by_mono) {
    Expo full(v->size(), 0);
    full[ix] = e[0];
    full[iy] = e[1];
    full[iz] = e[2];
    rebuilt = rebuilt + p * mpoly_monomial(v, full, Rat(1));
  }
  CHECK(rebuilt == defect);
}

TEST_CASE("morphism differential of the identity vanishes") {
  MatrixFact<QSeries> m = p1_fixture();
  PolyMat<QSeries> id = pm_zero<QSeries>(4, 4, m.vars);
  for (int i = 0; i < 4; ++i) id[i][i] = mpoly_const(m.vars, qs_const(Rat(1)));
  auto d = morphism_differential(id, 0, m, m);
  for (const auto& row : d)
    for (const auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("morphism differential squares to the target difference") {
  // P factors q^2 x y, Q factors q^2 x y + 2 q^4; d^2 multiplies by the
  // difference of the two targets.
  MatrixFact<QSeries> P = p1_fixture();
  Vars v = P.vars;
  QSeries one = qs_const(Rat(1));
  MatrixFact<QSeries> Q;
  Q.vars = v;
  Q.parity = {1, 0};
  Q.labels = {"o", "e"};
  Q.entries = pm_zero<QSeries>(2, 2, v);
  Q.target = P.target + mpoly_const(v, qs_monomial(Rat(2), Rat(4)));
  Q.entries[0][1] = mpoly_const(v, one);
  Q.entries[1][0] = Q.target;
  REQUIRE(square_check(Q).ok());

  std::mt19937 rng(7);
  for (int deg = 0; deg <= 1; ++deg) {
    PolyMat<QSeries> f = pm_zero<QSeries>(2, 4, v);
    std::mt19937 local(rng());
    for (auto& row : f)
      for (auto& e : row) e = rand_poly(local, v);
    auto df = morphism_differential(f, deg, P, Q);
    auto ddf = morphism_differential(df, deg + 1, P, Q);
    MPoly<QSeries> scale = Q.target - P.target;
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = 0; j < f[i].size(); ++j) CHECK(ddf[i][j] == scale * f[i][j]);
  }
}

TEST_CASE("morphism differential rejects mismatched shapes") {
  MatrixFact<QSeries> m = p1_fixture();
  PolyMat<QSeries> bad = pm_zero<QSeries>(3, 4, m.vars);
  CHECK_THROWS_AS(morphism_differential(bad, 0, m, m), std::invalid_argument);
}
