#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmirror/enumerate.hpp"
#include "qmirror/matrixfact.hpp"
#include "qmirror/potential.hpp"

namespace qmirror {

// Dual-group action data: a product of cyclic factors with a group element
// attached to each variable and, optionally, to each Floer generator.
// Elements are exponent vectors, one slot per factor.
struct GroupLabeling {
  std::vector<int> group;
  std::map<std::string, std::vector<int>> var_labels;
  std::map<std::string, std::vector<int>> gen_labels;
};

struct QuotientViolation {
  std::vector<int> character;
  std::string where;
};

struct QuotientReport {
  long checked = 0;
  long failed = 0;
  std::vector<QuotientViolation> violations;

  bool ok() const { return failed == 0 && checked > 0; }
};

// Character weights are exact phases in Q/Z; a monomial passes when every
// character gives an integer phase.
Rat character_phase(const std::vector<int>& group, const std::vector<int>& character,
                    const std::vector<int>& element);

// Every monomial of W (and lambda) must have trivial weight under every
// character of the labeled group.
QuotientReport check_w_invariance(const Potential& w, const GroupLabeling& lab);

// Labels of the letters in each polygon's corner word must multiply to the
// identity.
QuotientReport check_word_labels(const std::vector<Polygon>& polys, const GroupLabeling& lab);

// Entry (i, j) of the factorization carries the twist g_i - g_j: each of its
// monomials must have weight cancelling the twist under every character.
QuotientReport check_twisted_equivariance(const MatrixFact<QSeries>& m, const GroupLabeling& lab);

// First generator labeling in canonical odometer order under which every
// entry is twisted-invariant; variable labels are taken from lab.
std::optional<GroupLabeling> search_gen_labels(const MatrixFact<QSeries>& m, GroupLabeling lab);

// Z/3 with the diagonal labels on x, y, z.
GroupLabeling labeling_333();

nlohmann::ordered_json labeling_to_json(const GroupLabeling& lab);
GroupLabeling labeling_from_json(const nlohmann::ordered_json& j);

}  // namespace qmirror
