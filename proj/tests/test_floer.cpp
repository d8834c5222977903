#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "qmirror/floer.hpp"
#include "qmirror/series333.hpp"

using namespace qmirror;

namespace {

struct Fixture {
  Rat cutoff;
  std::vector<Polygon> polys;
  Potential pot;
  explicit Fixture(long cut) : cutoff(cut) {
    EnumOptions o;
    o.cutoff = cutoff;
    polys = enumerate_polygons(3, 3, 3, o);
    pot = assemble_potential({3, 3, 3}, polys, cutoff, o.weights);
  }
};

MPoly<QSeries> xw_sum(const std::array<MPoly<QSeries>, 3>& w) {
  QSeries one = qs_const(Rat(1));
  MPoly<QSeries> sum = mpoly_zero<QSeries>(xyz_vars());
  for (int v = 0; v < 3; ++v) sum = sum + mpoly_var(xyz_vars(), v, one) * w[v];
  return sum;
}

}  // namespace

TEST_CASE("marker rule reproduces the closed-form w entries") {
  Fixture f(170);
  auto w = compute_w(f.polys, f.cutoff, WConvention::PFollowing);
  CHECK(mpoly_equal_to_order(w[0], w_x_333(f.cutoff), f.cutoff));
  CHECK(mpoly_equal_to_order(w[1], w_y_333(f.cutoff), f.cutoff));
  CHECK(mpoly_equal_to_order(w[2], w_z_333(f.cutoff), f.cutoff));
}

TEST_CASE("the potential split cannot see the marker side") {
  Fixture f(90);
  for (WConvention c : {WConvention::PFollowing, WConvention::PPreceding,
                        WConvention::EFollowing, WConvention::EPreceding}) {
    auto w = compute_w(f.polys, f.cutoff, c);
    CHECK(mpoly_equal_to_order(xw_sum(w), f.pot.poly, f.cutoff));
  }
}

TEST_CASE("only the p-following pair matches the factorization entries") {
  Fixture f(90);
  auto matches = [&](WConvention c) {
    auto w = compute_w(f.polys, f.cutoff, c);
    return mpoly_equal_to_order(w[0], w_x_333(f.cutoff), f.cutoff) &&
           mpoly_equal_to_order(w[1], w_y_333(f.cutoff), f.cutoff) &&
           mpoly_equal_to_order(w[2], w_z_333(f.cutoff), f.cutoff);
  };
  CHECK(matches(WConvention::PFollowing));
  CHECK(matches(WConvention::EPreceding));
  CHECK_FALSE(matches(WConvention::PPreceding));
  CHECK_FALSE(matches(WConvention::EFollowing));
}

TEST_CASE("the two passing conventions are the same rule") {
  Fixture f(90);
  auto a = compute_w(f.polys, f.cutoff, WConvention::PFollowing);
  auto b = compute_w(f.polys, f.cutoff, WConvention::EPreceding);
  for (int v = 0; v < 3; ++v) CHECK(mpoly_equal_to_order(a[v], b[v], f.cutoff));
}

TEST_CASE("gamma series carries unit multiplicities with the strip signs") {
  Fixture f(170);
  auto tg = compute_theta_gamma(f.polys, f.cutoff);
  CHECK(tg.gamma.terms.size() == 1);
  CHECK(tg.gamma_scalar.terms ==
        std::map<Rat, Rat>{{Rat(1), Rat(-1)},
                           {Rat(25), Rat(1)},
                           {Rat(49), Rat(1)},
                           {Rat(121), Rat(-1)},
                           {Rat(169), Rat(-1)}});
  CHECK(equal_to_order(tg.gamma_scalar, gamma333_series(f.cutoff), f.cutoff));
}

TEST_CASE("transition table factors through gamma with the cyclic signs") {
  Fixture f(122);
  auto tg = compute_theta_gamma(f.polys, f.cutoff);
  auto t = compute_t_table(f.polys, f.cutoff);
  QSeries one = qs_const(Rat(1));
  auto x = mpoly_var(xyz_vars(), 0, one);
  auto y = mpoly_var(xyz_vars(), 1, one);
  auto z = mpoly_var(xyz_vars(), 2, one);
  CHECK(mpoly_equal_to_order(t[1][0], tg.gamma * z, f.cutoff));
  CHECK(mpoly_equal_to_order(t[2][1], tg.gamma * x, f.cutoff));
  CHECK(mpoly_equal_to_order(t[0][2], tg.gamma * y, f.cutoff));
  CHECK(mpoly_equal_to_order(t[0][1], -(tg.gamma * z), f.cutoff));
  CHECK(mpoly_equal_to_order(t[1][2], -(tg.gamma * x), f.cutoff));
  CHECK(mpoly_equal_to_order(t[2][0], -(tg.gamma * y), f.cutoff));
  auto zero = mpoly_zero<QSeries>(xyz_vars());
  for (int v = 0; v < 3; ++v) CHECK(mpoly_equal_to_order(t[v][v], zero, f.cutoff));
}

TEST_CASE("compute_delta calibrates to the p-following convention") {
  Fixture f(122);
  FloerData fd = compute_delta(f.polys, f.pot);
  CHECK(fd.convention == WConvention::PFollowing);
  CHECK(std::string(w_convention_name(fd.convention)) == "p-following");
  CHECK(mpoly_equal_to_order(fd.w[0], w_x_333(f.cutoff), f.cutoff));
  CHECK(mpoly_equal_to_order(xw_sum(fd.w), f.pot.poly, f.cutoff));
}

TEST_CASE("floer tables stay consistent under rescaled region weights") {
  EnumOptions o;
  o.cutoff = Rat(40);
  o.weights.central = Rat(2);
  o.weights.corner = {Rat(1), Rat(1), Rat(1)};
  auto polys = enumerate_polygons(3, 3, 3, o);
  auto pot = assemble_potential({3, 3, 3}, polys, o.cutoff, o.weights);
  CHECK_NOTHROW(compute_delta(polys, pot, o.weights));
}
