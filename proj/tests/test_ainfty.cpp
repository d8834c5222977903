#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmirror/ainfty.hpp"

using namespace qmirror;

namespace {

struct Corpus {
  Rat cutoff{30};
  std::vector<Polygon> polys;
  Potential pot;
  FloerData fd;
  AInftyAlgebra alg;
  Corpus() {
    EnumOptions o;
    o.cutoff = cutoff;
    polys = enumerate_polygons(3, 3, 3, o);
    pot = assemble_potential({3, 3, 3}, polys, cutoff, o.weights);
    fd = compute_delta(polys, pot);
    alg = ainfty_333_fixture(polys, pot, fd, cutoff);
  }
};

const Corpus& corpus() {
  static Corpus c;
  return c;
}

MPoly<QSeries> qcmono(const Vars& v, const Expo& e, const Rat& c, const Rat& ex) {
  return mpoly_monomial(v, e, qs_monomial(c, ex));
}

}  // namespace

TEST_CASE("dg fixture satisfies every relation with nothing skipped") {
  AInftyAlgebra alg = ainfty_dg_fixture();
  AReport rep = check_ainfty(alg);
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
  CHECK(rep.skipped == 0);
  CHECK(rep.checked > 300);
}

TEST_CASE("perturbing one dg structure constant is caught and located") {
  AInftyAlgebra alg = ainfty_dg_fixture();
  int a = alg.index_of("a"), b = alg.index_of("b");
  alg.add_term(2, {b, a}, a, mpoly_const(alg.vars, qs_const(1)));
  AReport rep = check_ainfty(alg);
  CHECK(rep.failed > 0);
  REQUIRE(!rep.violations.empty());
  bool located = false;
  for (const auto& v : rep.violations)
    if (v.what == "relation residual nonzero" && !v.tuple.empty()) located = true;
  CHECK(located);
}

TEST_CASE("(3,3,3) fixture passes axioms and relations") {
  const auto& c = corpus();
  AReport rep = check_ainfty(c.alg, 4);
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
  CHECK(rep.checked > 500);
  CHECK(rep.skipped > 0);  // mixed tuples stay outside the populated sub-table
}

TEST_CASE("a planted (3,3,3) mutation fails the relation sweep") {
  const auto& c = corpus();
  AInftyAlgebra alg = c.alg;
  int X = alg.index_of("X"), Y = alg.index_of("Y"), Zb = alg.index_of("Zb");
  alg.add_term(2, {X, Y}, Zb, mpoly_const(alg.vars, qs_monomial(Rat(1), Rat(5))));
  AReport rep = check_ainfty(alg, 4);
  CHECK(rep.failed > 0);
}

TEST_CASE("deforming by the standard cochain reproduces the factorization") {
  const auto& c = corpus();
  Bulk b = standard_bulk(c.alg);
  PolyMat<QSeries> D = deform_m1(c.alg, b, {});
  MatrixFact<QSeries> mf = build_seidel_mf(c.fd, c.pot);
  QSeries gam = c.fd.tg.gamma_scalar;
  QSeries gaminv = invert(gam);
  const int wt[8] = {1, 0, 0, 0, 0, 1, 1, 1};
  Rat ord = 25;
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      MPoly<QSeries> want = mf.entries[i][j];
      int d = wt[i] - wt[j];
      if (d == 1) want = want * mpoly_const(c.alg.vars, gam);
      if (d == -1) want = want * mpoly_const(c.alg.vars, gaminv);
      CHECK(mpoly_equal_to_order(D[i][j], want, ord));
    }
}

TEST_CASE("deformed differential squares to the potential") {
  const auto& c = corpus();
  Bulk b = standard_bulk(c.alg);
  PolyMat<QSeries> D = deform_m1(c.alg, b, {});
  PolyMat<QSeries> S = pm_mul(D, D);
  MPoly<QSeries> w = c.pot.poly - mpoly_const(c.alg.vars, c.pot.lambda);
  MPoly<QSeries> z = mpoly_zero<QSeries>(c.alg.vars);
  Rat ord = 25;
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j)
      CHECK(mpoly_equal_to_order(S[i][j], i == j ? w : z, ord));
  // with the parity twist on inputs the square flips sign
  PolyMat<QSeries> Dt = D;
  for (size_t j = 0; j < 8; ++j)
    if (c.alg.gens[j].parity)
      for (size_t i = 0; i < 8; ++i) Dt[i][j] = -Dt[i][j];
  PolyMat<QSeries> St = pm_mul(Dt, Dt);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j)
      CHECK(mpoly_equal_to_order(St[i][j], i == j ? -w : z, ord));
}

TEST_CASE("deformation input checks") {
  const auto& c = corpus();
  PolyMat<QSeries> D0 = deform_m1(c.alg, {}, {});
  MPoly<QSeries> z = mpoly_zero<QSeries>(c.alg.vars);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) CHECK(mpoly_equal_to_order(D0[i][j], z, Rat(25)));
  int X = c.alg.index_of("X"), e = c.alg.index_of("e");
  Bulk flat{{X, mpoly_const(c.alg.vars, qs_const(1))}};
  CHECK_THROWS_AS(deform_m1(c.alg, flat, {}), std::invalid_argument);
  Bulk even{{e, mpoly_var(c.alg.vars, 0, qs_const(1))}};
  CHECK_THROWS_AS(deform_m1(c.alg, even, {}), std::invalid_argument);
}

TEST_CASE("weak Maurer-Cartan value reproduces the potential termwise") {
  const auto& c = corpus();
  WeakMCResult wm = weak_mc_check(c.alg, standard_bulk(c.alg));
  CHECK(wm.ok);
  CHECK(mpoly_equal_to_order(wm.w, c.pot.poly, c.cutoff));
}

TEST_CASE("weak Maurer-Cartan rejects an even admixture") {
  const auto& c = corpus();
  Bulk b = standard_bulk(c.alg);
  b.emplace_back(c.alg.index_of("e"), mpoly_var(c.alg.vars, 0, qs_const(1)));
  CHECK_THROWS_AS(weak_mc_check(c.alg, b), std::invalid_argument);
}

TEST_CASE("functor equations hold on the checkable slots") {
  const auto& c = corpus();
  FunctorReport fr = functor_check(c.alg, standard_bulk(c.alg), Rat(20));
  CHECK(fr.ok());
  CHECK(fr.k1_checked == 15);
  CHECK(fr.k1_failed == 0);
  CHECK(fr.k2_checked == 85);
  CHECK(fr.k2_failed == 0);
  CHECK(fr.unit_ok);
  CHECK(fr.psi_phi_ok);
}

TEST_CASE("two-equator fixture passes for both disc signs") {
  for (int s : {1, -1}) {
    AInftyAlgebra alg = ainfty_p1_fixture(s);
    AReport rep = check_ainfty(alg);
    CHECK(rep.ok());
    CHECK(rep.skipped == 0);
    int X = alg.index_of("X"), Y = alg.index_of("Y");
    Bulk b{{X, mpoly_var(alg.vars, 0, qs_const(1))}, {Y, mpoly_var(alg.vars, 1, qs_const(1))}};
    WeakMCResult wm = weak_mc_check(alg, b);
    CHECK(wm.ok);
    MPoly<QSeries> want = qcmono(alg.vars, Expo{1, 1, 0, 0}, Rat(1), Rat(2)) +
                          mpoly_const(alg.vars, qs_monomial(Rat(s), Rat(4)));
    CHECK(mpoly_equal_to_order(wm.w, want, Rat(8)));
  }
}

TEST_CASE("two-equator bimodule differential squares to the potential difference") {
  AInftyAlgebra alg = ainfty_p1_fixture(1);
  int X = alg.index_of("X"), Y = alg.index_of("Y");
  Bulk b{{X, mpoly_var(alg.vars, 0, qs_const(1))}, {Y, mpoly_var(alg.vars, 1, qs_const(1))}};
  Bulk bp{{X, mpoly_var(alg.vars, 2, qs_const(1))}, {Y, mpoly_var(alg.vars, 3, qs_const(1))}};
  PolyMat<QSeries> D = deform_m1(alg, b, bp);
  PolyMat<QSeries> S = pm_mul(D, D);
  MPoly<QSeries> diff = qcmono(alg.vars, Expo{1, 1, 0, 0}, Rat(1), Rat(2)) -
                        qcmono(alg.vars, Expo{0, 0, 1, 1}, Rat(1), Rat(2));
  MPoly<QSeries> z = mpoly_zero<QSeries>(alg.vars);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      CHECK(mpoly_equal_to_order(S[i][j], i == j ? diff : z, Rat(8)));
  // equal insertions on both sides cancel exactly
  PolyMat<QSeries> Dsame = deform_m1(alg, b, b);
  PolyMat<QSeries> Ssame = pm_mul(Dsame, Dsame);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(mpoly_equal_to_order(Ssame[i][j], z, Rat(8)));
}

TEST_CASE("algebra JSON round trip is stable") {
  for (int which : {0, 1}) {
    AInftyAlgebra alg = which == 0 ? ainfty_dg_fixture() : ainfty_p1_fixture(-1);
    auto j = ainfty_to_json(alg);
    CHECK(j.contains("generators"));
    CHECK(j.contains("tables"));
    REQUIRE(!j["tables"].empty());
    const auto& first = j["tables"][0];
    CHECK(first.contains("k"));
    CHECK(first.contains("in"));
    CHECK(first.contains("out"));
    AInftyAlgebra back = ainfty_from_json(j);
    CHECK(back.gens.size() == alg.gens.size());
    CHECK(back.units == alg.units);
    AReport rep = check_ainfty(back);
    CHECK(rep.ok());
    CHECK(ainfty_to_json(back) == j);
  }
}
