#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmirror/quotient.hpp"

#include "qmirror/floer.hpp"
#include "qmirror/jsonio.hpp"

using namespace qmirror;

namespace {

struct Corpus {
  std::vector<Polygon> polys;
  Potential pot;
  MatrixFact<QSeries> mf;
  Corpus() {
    EnumOptions o;
    o.cutoff = 100;
    polys = enumerate_polygons(3, 3, 3, o);
    pot = assemble_potential({3, 3, 3}, polys, o.cutoff, o.weights);
    EnumOptions o40;
    o40.cutoff = 40;
    std::vector<Polygon> p40 = enumerate_polygons(3, 3, 3, o40);
    Potential w40 = assemble_potential({3, 3, 3}, p40, o40.cutoff, o40.weights);
    mf = build_seidel_mf(compute_delta(p40, w40), w40);
  }
};

const Corpus& corpus() {
  static Corpus c;
  return c;
}

GroupLabeling trivial_labeling(std::initializer_list<const char*> vars) {
  GroupLabeling lab;
  for (const char* v : vars) lab.var_labels[v] = {};
  return lab;
}

}  // namespace

TEST_CASE("diagonal Z/3 labels leave the cutoff-100 potential invariant") {
  const auto& c = corpus();
  QuotientReport rep = check_w_invariance(c.pot, labeling_333());
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
  CHECK(rep.checked == 3 * (static_cast<long>(c.pot.poly.terms.size()) + 1));
}

TEST_CASE("the trivial group leaves everything invariant") {
  const auto& c = corpus();
  QuotientReport rep = check_w_invariance(c.pot, trivial_labeling({"x", "y", "z"}));
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
}

TEST_CASE("mislabeling x to the identity breaks exactly the mixed terms") {
  const auto& c = corpus();
  GroupLabeling lab;
  lab.group = {3};
  lab.var_labels = {{"x", {0}}, {"y", {1}}, {"z", {1}}};
  QuotientReport rep = check_w_invariance(c.pot, lab);
  CHECK(rep.failed > 0);
  REQUIRE(!rep.violations.empty());
  bool xyz_hit = false;
  for (const auto& v : rep.violations) {
    CHECK(v.where.find("x^3") == std::string::npos);
    CHECK(v.where.find("y^3") == std::string::npos);
    if (v.where == "x^1 y^1 z^1") xyz_hit = true;
  }
  CHECK(xyz_hit);
}

TEST_CASE("polygon word labels multiply to the identity") {
  const auto& c = corpus();
  QuotientReport rep = check_word_labels(c.polys, labeling_333());
  CHECK(rep.ok());
  CHECK(rep.checked == static_cast<long>(c.polys.size()));
}

TEST_CASE("generator label search finds the canonical assignment") {
  const auto& c = corpus();
  auto found = search_gen_labels(c.mf, labeling_333());
  REQUIRE(found.has_value());
  std::map<std::string, std::vector<int>> want{
      {"p", {0}},  {"X", {2}},  {"Y", {2}},  {"Z", {2}},
      {"e", {0}},  {"Xb", {1}}, {"Yb", {1}}, {"Zb", {1}},
  };
  CHECK(found->gen_labels == want);
  QuotientReport rep = check_twisted_equivariance(c.mf, *found);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("twisted equivariance is closed under a global relabel") {
  const auto& c = corpus();
  auto found = search_gen_labels(c.mf, labeling_333());
  REQUIRE(found.has_value());
  GroupLabeling shifted = *found;
  for (auto& [name, e] : shifted.gen_labels) e[0] = (e[0] + 1) % 3;
  QuotientReport rep = check_twisted_equivariance(c.mf, shifted);
  CHECK(rep.ok());
}

TEST_CASE("perturbing one generator label is caught and located") {
  const auto& c = corpus();
  auto found = search_gen_labels(c.mf, labeling_333());
  REQUIRE(found.has_value());
  GroupLabeling bad = *found;
  bad.gen_labels["X"][0] = (bad.gen_labels["X"][0] + 1) % 3;
  QuotientReport rep = check_twisted_equivariance(c.mf, bad);
  CHECK(rep.failed > 0);
  REQUIRE(!rep.violations.empty());
  bool located = false;
  for (const auto& v : rep.violations)
    if (v.where.find("X") != std::string::npos) located = true;
  CHECK(located);
}

TEST_CASE("a trivially labeled two-variable factorization passes") {
  Vars v = make_vars({"x", "y"});
  QSeries mq = neg(qs_monomial(Rat(1), Rat(1)));
  MatrixFact<QSeries> m;
  m.vars = v;
  m.parity = {1, 1, 0, 0};
  m.labels = {"p1", "p2", "q1", "q2"};
  m.entries = pm_zero<QSeries>(4, 4, v);
  m.target = mpoly_monomial(v, Expo{1, 1}, qs_monomial(Rat(1), Rat(2)));
  m.entries[0][2] = mpoly_monomial(v, Expo{0, 1}, mq);
  m.entries[1][3] = mpoly_monomial(v, Expo{1, 0}, mq);
  m.entries[2][0] = mpoly_monomial(v, Expo{1, 0}, mq);
  m.entries[3][1] = mpoly_monomial(v, Expo{0, 1}, mq);
  GroupLabeling lab = trivial_labeling({"x", "y"});
  for (const auto& name : m.labels) lab.gen_labels[name] = {};
  QuotientReport rep = check_twisted_equivariance(m, lab);
  CHECK(rep.ok());
  CHECK(rep.checked == 4);
}

TEST_CASE("labeling JSON round trip is stable and keeps the spec shape") {
  const auto& c = corpus();
  auto found = search_gen_labels(c.mf, labeling_333());
  REQUIRE(found.has_value());
  auto j = labeling_to_json(*found);
  CHECK(j["group"] == nlohmann::ordered_json::array({3}));
  CHECK(j["varLabels"]["x"] == nlohmann::ordered_json::array({1}));
  CHECK(j.contains("genLabels"));
  GroupLabeling back = labeling_from_json(j);
  CHECK(back.group == found->group);
  CHECK(back.var_labels == found->var_labels);
  CHECK(back.gen_labels == found->gen_labels);
  CHECK(dump_json(labeling_to_json(back)) == dump_json(j));
}
