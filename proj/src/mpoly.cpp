#include "qmirror/mpoly.hpp"

#include "qmirror/potential.hpp"

namespace qmirror {

Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Vars xyz_vars() {
  static Vars v = make_vars({"x", "y", "z"});
  return v;
}

std::string monomial_key(const Vars& vars, const Expo& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += (*vars)[i] + "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace qmirror
