#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmirror/potential.hpp"
#include "qmirror/qseries.hpp"

namespace qmirror {

struct MirrorMapData {
  QSeries a_q;           // a(q) = 1 + (1/3) (eta(q)/eta(q^9))^3
  QSeries qcheck;        // -3 a(q)
  QSeries psi_over_phi;  // 3 + q^-8 prod (1-q^{8k})^3 / (1-q^{72k})^3
  Rat order;
};

MirrorMapData compute_mirror_map(const Rat& order);

// One termwise series comparison, with the first differing exponent when it
// fails.  `order` is the order actually compared.
struct SeriesCheck {
  std::string name;
  bool pass = false;
  std::optional<Rat> mismatch_at;
  std::string lhs, rhs;  // coefficient values at the mismatch
  Rat order = 0;
  std::string note;
};

SeriesCheck compare_series(std::string name, const QSeries& a, const QSeries& b, Rat order);

// The three-way identity: psi/phi read off W's xyz- and x^3-series, the eta
// quotient plus 3, and -qcheck(q^8), compared pairwise to `order` (clamped to
// what W's cutoff supports).
std::vector<SeriesCheck> check_syz_equals_mirror(const Potential& W, const Rat& order);

// y -> -y followed by (x,y,z) -> phi^{-1/3}(x,y,z): the normal form
// (x^3+y^3+z^3) - (psi/phi) xyz.
MPoly<QSeries> standard_form(const Potential& W);

SeriesCheck check_qcheck_integrality(const Rat& order);

// Compositional inverse of qcheck: only exponents = -1 mod 3, leading term
// -1/qcheck, and the defining equation holds in the ascending world.
std::vector<SeriesCheck> check_mirror_inverse(const Rat& order);

}  // namespace qmirror
