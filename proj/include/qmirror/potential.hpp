#pragma once

#include <array>

#include "qmirror/mpoly.hpp"
#include "qmirror/qseries.hpp"

namespace qmirror {

// Shared (x, y, z) ring context for potentials and matrix factorizations.
Vars xyz_vars();

// Bulk-deformed superpotential data: finitely many monomials with QSeries
// coefficients below the area cutoff, plus the constant term lambda.
struct Potential {
  std::array<int, 3> abc{3, 3, 3};
  Rat cutoff;
  MPoly<QSeries> poly;
  QSeries lambda;
  bool partial = false;  // spherical signatures support local queries only

  QSeries monomial_series(int i, int j, int k) const {
    auto it = poly.terms.find(Expo{i, j, k});
    if (it == poly.terms.end()) {
      QSeries z;
      z.prec = cutoff;
      return z;
    }
    return it->second;
  }
};

}  // namespace qmirror
