#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmirror/floer.hpp"
#include "qmirror/matrixfact.hpp"
#include "qmirror/mpoly.hpp"
#include "qmirror/potential.hpp"

namespace qmirror {

// Energy-truncated filtered A-infinity data over a finite generator set, with
// relation checking, deformation by odd cochains, weak Maurer-Cartan
// potentials, and the low-arity functor equations into matrix factorizations.

struct AGen {
  std::string name;
  int parity = 0;            // 0 even, 1 odd
  int shifted = 1;           // parity of the shifted degree |x|' = |x| - 1
  std::optional<int> deg3;   // one-third grading tag where meaningful
  int src = 0, dst = 0;      // component tags; single-object algebras use 0
};

using AKey = std::vector<int>;
using ACombo = std::map<int, MPoly<QSeries>>;

// Sparse m_k tables. A key present in m[k] is defined (an empty combination
// being a definite zero); an absent key is outside the populated sub-table
// and relation tuples needing it are skipped rather than checked.
struct AInftyAlgebra {
  Vars vars;
  std::vector<AGen> gens;
  std::vector<int> units;  // idempotent decomposition of the unit
  Rat cutoff = 0;
  int kmax = 5;
  std::vector<std::map<AKey, ACombo>> m;

  AInftyAlgebra() : m(6) {}

  int index_of(const std::string& name) const;
  bool composable(const AKey& key) const;
  bool defined(size_t k, const AKey& key) const;
  const ACombo* table(size_t k, const AKey& key) const;
  void define(size_t k, const AKey& key);
  void add_term(size_t k, const AKey& key, int out, const MPoly<QSeries>& c);
};

// odd cochain: generator index -> coefficient
using Bulk = std::vector<std::pair<int, MPoly<QSeries>>>;

struct AViolation {
  size_t k = 0;
  AKey tuple;
  int out = -1;
  std::string what;
};

struct AReport {
  long checked = 0, skipped = 0, failed = 0;
  std::vector<AViolation> violations;
  bool ok() const { return failed == 0 && checked > 0; }
};

// A-infinity relations on every generator tuple up to kmax, with the sign
// (-1)^{eps1}, eps1 = sum_{j<i}(|x_j|+1), including arity-0 insertions.
// Tuples whose needed entries fall outside the populated sub-table are
// counted as skipped. Unit, parity, composability and valuation axioms are
// verified first and reported through the same structure.
AReport check_ainfty(const AInftyAlgebra& alg, int threads = 1);

// b = x X + y Y + z Z over the ring variables of `alg` (odd generators named
// X, Y, Z).
Bulk standard_bulk(const AInftyAlgebra& alg);

// m_1^{b0,b1}(v) = sum over insertions of b1 before and b0 after v, as a
// matrix over the generator basis. Cochains must be odd and energy-growing.
PolyMat<QSeries> deform_m1(const AInftyAlgebra& alg, const Bulk& b0, const Bulk& b1);

struct WeakMCResult {
  bool ok = false;
  MPoly<QSeries> w;    // the potential, on success
  int witness = -1;    // offending non-unit generator otherwise
  MPoly<QSeries> bad;  // its coefficient
};

// m(e^b) = sum_l m_l(b,...,b): passes iff the output is a multiple of the
// unit, with equal coefficients across all idempotent components.
WeakMCResult weak_mc_check(const AInftyAlgebra& alg, const Bulk& b);

// First-order functor data F1(x)(y) = (-1)^{|x|} sum_l m(x, y, b^l) and its
// k = 2 companion, checked against the matrix factorization differential
// D = m_1^{b,0}: the chain-map equation, the composition equation, unit to
// identity, and the round trip p -> F1(p)(e)|_{x=y=z=0} = p.
struct FunctorReport {
  long k1_checked = 0, k1_failed = 0;
  long k2_checked = 0, k2_failed = 0;
  bool unit_ok = false;
  bool psi_phi_ok = false;
  bool ok() const {
    return k1_failed == 0 && k2_failed == 0 && k1_checked > 0 && k2_checked > 0 && unit_ok &&
           psi_phi_ok;
  }
};

FunctorReport functor_check(const AInftyAlgebra& alg, const Bulk& b, const Rat& order);

// Fixtures.
AInftyAlgebra ainfty_dg_fixture();
AInftyAlgebra ainfty_333_fixture(const std::vector<Polygon>& polys, const Potential& pot,
                                 const FloerData& fd, const Rat& cutoff);
// sign +1 or -1: the two equators, m0 = (+/-) q^4 (e1 + e2)
AInftyAlgebra ainfty_p1_fixture(int sign);

nlohmann::ordered_json ainfty_to_json(const AInftyAlgebra& alg);
AInftyAlgebra ainfty_from_json(const nlohmann::ordered_json& j);

}  // namespace qmirror
