#pragma once

// Floer-theoretic tables read off the polygon corpus: the gamma series
// counting corner-to-corner strips, the w-entries produced by the marker
// rule, and the transition table between barred and unbarred generators.
// Everything is verified against the assembled potential.

#include <array>
#include <vector>

#include "qmirror/enumerate.hpp"
#include "qmirror/potential.hpp"

namespace qmirror {

// Which side of a corner supplies the marker count in the w-rule.  The two
// descriptions pair up: counting p-markers on the side after the corner is
// the same rule as counting e-markers on the side before it.
enum class WConvention { PFollowing, PPreceding, EFollowing, EPreceding };

const char* w_convention_name(WConvention c);

struct ThetaGamma {
  MPoly<QSeries> gamma;  // sum over classes of theta(area, m) q^area m/(xyz)
  QSeries gamma_scalar;  // coefficient of the constant monomial
};

ThetaGamma compute_theta_gamma(const std::vector<Polygon>& polys, const Rat& cutoff,
                               const RegionWeights& weights = {});

// w_v collects, over every class and every corner of letter v, the marker
// count of the adjacent side with the class sign, divided by the symmetry
// order, times q^area and the corner monomial with one factor x_v removed.
std::array<MPoly<QSeries>, 3> compute_w(const std::vector<Polygon>& polys, const Rat& cutoff,
                                        WConvention conv, const RegionWeights& weights = {});

// t[out][in]: output corner letter against its predecessor corner letter,
// with the remaining corners contributing the coefficient monomial.
using TTable = std::array<std::array<MPoly<QSeries>, 3>, 3>;

TTable compute_t_table(const std::vector<Polygon>& polys, const Rat& cutoff,
                       const RegionWeights& weights = {});

struct FloerData {
  ThetaGamma tg;
  std::array<MPoly<QSeries>, 3> w;
  WConvention convention = WConvention::PFollowing;
  TTable t;
};

// Builds all tables and verifies them against the potential: the marker
// convention is calibrated so that sum_i x_i w_i = W - lambda holds, and the
// T-table must equal +/- gamma x_third with the cyclic sign pattern and a
// vanishing diagonal.  Throws if no convention passes or a check fails.
FloerData compute_delta(const std::vector<Polygon>& polys, const Potential& pot,
                        const RegionWeights& weights = {});

// Termwise comparison of polynomial q-series coefficients through q^order.
bool mpoly_equal_to_order(const MPoly<QSeries>& a, const MPoly<QSeries>& b, const Rat& order);

}  // namespace qmirror
