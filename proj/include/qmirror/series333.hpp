#pragma once

#include "qmirror/potential.hpp"
#include "qmirror/qseries.hpp"

namespace qmirror {

// Closed forms for the (3,3,3) potential
//   W = phi(q) (x^3 - y^3 + z^3) + psi(q) xyz
// and for the off-diagonal series of the w-entries in its Koszul-type matrix
// factorization.  The enumeration pipeline must reproduce all of these.

// sum_{k>=0} (-1)^{k+1} (2k+1) q^{(6k+3)^2}
QSeries phi333(const Rat& order);

// -q + sum_{k>=1} (-1)^{k+1} ((6k+1) q^{(6k+1)^2} - (6k-1) q^{(6k-1)^2})
QSeries psi333(const Rat& order);

// -q + sum_{k>=1} (-1)^{k+1} ((2k+1) q^{(6k+1)^2} - (2k-1) q^{(6k-1)^2})
QSeries w333_yz_series(const Rat& order);

// sum_{k>=1} (-1)^{k+1} 2k (q^{(6k+1)^2} - q^{(6k-1)^2})
QSeries w333_even_series(const Rat& order);

// -q + sum_{k>=1} (-1)^{k+1} (q^{(6k+1)^2} + q^{(6k-1)^2}),
// the scalar part of the degree-2 coordinate change gamma.
QSeries gamma333_series(const Rat& order);

// w_x = x^2 phi + yz * w333_yz_series
// w_y = -y^2 phi + xz * w333_even_series
// w_z = z^2 phi + xy * w333_even_series
MPoly<QSeries> w_x_333(const Rat& order);
MPoly<QSeries> w_y_333(const Rat& order);
MPoly<QSeries> w_z_333(const Rat& order);

// The potential assembled from the closed forms, as an enumeration oracle.
Potential closed_form_potential_333(const Rat& cutoff);

}  // namespace qmirror
