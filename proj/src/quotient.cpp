#include "qmirror/quotient.hpp"

#include <stdexcept>

#include "qmirror/jsonio.hpp"

namespace qmirror {

namespace {

bool phase_integral(const Rat& phase) { return phase.get_den() == 1; }

std::vector<int> reduce(const std::vector<int>& group, std::vector<int> e) {
  for (size_t i = 0; i < group.size(); ++i) {
    int n = group[i];
    e[i] = ((e[i] % n) + n) % n;
  }
  return e;
}

// weight of a monomial exponent under the variable labels
std::vector<int> monomial_element(const GroupLabeling& lab, const Vars& vars, const Expo& e) {
  std::vector<int> w(lab.group.size(), 0);
  for (size_t v = 0; v < vars->size(); ++v) {
    if (e[v] == 0) continue;
    auto it = lab.var_labels.find((*vars)[v]);
    if (it == lab.var_labels.end())
      throw std::invalid_argument("quotient: unlabeled variable " + (*vars)[v]);
    for (size_t i = 0; i < w.size(); ++i) w[i] += e[v] * it->second.at(i);
  }
  return reduce(lab.group, w);
}

template <typename F>
void for_each_character(const std::vector<int>& group, F&& fn) {
  std::vector<int> chi(group.size(), 0);
  while (true) {
    fn(chi);
    size_t i = 0;
    for (; i < group.size(); ++i) {
      if (++chi[i] < group[i]) break;
      chi[i] = 0;
    }
    if (i == group.size()) break;
  }
}

void record(QuotientReport& rep, const std::vector<int>& chi, std::string where) {
  ++rep.failed;
  if (rep.violations.size() < 32) rep.violations.push_back({chi, std::move(where)});
}

}  // namespace

Rat character_phase(const std::vector<int>& group, const std::vector<int>& character,
                    const std::vector<int>& element) {
  Rat phase = 0;
  for (size_t i = 0; i < group.size(); ++i)
    phase += rat(character.at(i) * element.at(i), group[i]);
  return phase;
}

QuotientReport check_w_invariance(const Potential& w, const GroupLabeling& lab) {
  QuotientReport rep;
  std::vector<std::pair<Expo, std::vector<int>>> weights;
  for (const auto& [e, c] : w.poly.terms)
    weights.emplace_back(e, monomial_element(lab, w.poly.vars, e));
  for_each_character(lab.group, [&](const std::vector<int>& chi) {
    for (const auto& [e, g] : weights) {
      ++rep.checked;
      if (!phase_integral(character_phase(lab.group, chi, g)))
        record(rep, chi, monomial_key(w.poly.vars, e));
    }
    ++rep.checked;  // lambda sits in weight zero
  });
  return rep;
}

QuotientReport check_word_labels(const std::vector<Polygon>& polys, const GroupLabeling& lab) {
  QuotientReport rep;
  const char* names[3] = {"x", "y", "z"};
  for (const auto& p : polys) {
    std::vector<int> w(lab.group.size(), 0);
    for (int letter : p.word) {
      auto it = lab.var_labels.find(names[letter]);
      if (it == lab.var_labels.end())
        throw std::invalid_argument("quotient: unlabeled variable in polygon word");
      for (size_t i = 0; i < w.size(); ++i) w[i] += it->second.at(i);
    }
    w = reduce(lab.group, w);
    ++rep.checked;
    bool trivial = true;
    for (size_t i = 0; i < w.size(); ++i) trivial &= w[i] == 0;
    if (!trivial) record(rep, {}, p.canon);
  }
  return rep;
}

QuotientReport check_twisted_equivariance(const MatrixFact<QSeries>& m, const GroupLabeling& lab) {
  QuotientReport rep;
  size_t n = m.labels.size();
  std::vector<std::vector<int>> g(n);
  for (size_t i = 0; i < n; ++i) {
    auto it = lab.gen_labels.find(m.labels[i]);
    if (it == lab.gen_labels.end())
      throw std::invalid_argument("quotient: unlabeled generator " + m.labels[i]);
    g[i] = it->second;
  }
  for_each_character(lab.group, [&](const std::vector<int>& chi) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        for (const auto& [e, c] : m.entries[i][j].terms) {
          ++rep.checked;
          std::vector<int> w = monomial_element(lab, m.vars, e);
          for (size_t f = 0; f < w.size(); ++f) w[f] += g[i][f] - g[j][f];
          w = reduce(lab.group, w);
          if (!phase_integral(character_phase(lab.group, chi, w)))
            record(rep, chi,
                   m.labels[i] + " <- " + m.labels[j] + " : " + monomial_key(m.vars, e));
        }
      }
  });
  return rep;
}

std::optional<GroupLabeling> search_gen_labels(const MatrixFact<QSeries>& m, GroupLabeling lab) {
  size_t n = m.labels.size();
  long order = 1;
  for (int f : lab.group) order *= f;
  auto element_of = [&](long code) {
    std::vector<int> e(lab.group.size());
    for (size_t i = 0; i < lab.group.size(); ++i) {
      e[i] = static_cast<int>(code % lab.group[i]);
      code /= lab.group[i];
    }
    return e;
  };
  // entry monomial weights are label-independent; precompute them
  std::vector<std::tuple<size_t, size_t, std::vector<int>>> mono;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [e, c] : m.entries[i][j].terms)
        mono.emplace_back(i, j, monomial_element(lab, m.vars, e));
  std::vector<long> assign(n, 0);
  while (true) {
    bool good = true;
    std::vector<std::vector<int>> g(n);
    for (size_t i = 0; i < n; ++i) g[i] = element_of(assign[i]);
    for (const auto& [i, j, w0] : mono) {
      std::vector<int> w = w0;
      for (size_t f = 0; f < w.size(); ++f) w[f] += g[i][f] - g[j][f];
      w = reduce(lab.group, w);
      for (size_t f = 0; f < w.size(); ++f)
        if (w[f] != 0) good = false;
      if (!good) break;
    }
    if (good) {
      lab.gen_labels.clear();
      for (size_t i = 0; i < n; ++i) lab.gen_labels[m.labels[i]] = g[i];
      return lab;
    }
    size_t i = n;
    while (i > 0) {
      if (++assign[i - 1] < order) break;
      assign[i - 1] = 0;
      --i;
    }
    if (i == 0) return std::nullopt;
  }
}

GroupLabeling labeling_333() {
  GroupLabeling lab;
  lab.group = {3};
  lab.var_labels = {{"x", {1}}, {"y", {1}}, {"z", {1}}};
  return lab;
}

nlohmann::ordered_json labeling_to_json(const GroupLabeling& lab) {
  Json j;
  j["group"] = lab.group;
  Json vl = Json::object();
  for (const auto& [name, e] : lab.var_labels) vl[name] = e;
  j["varLabels"] = std::move(vl);
  if (!lab.gen_labels.empty()) {
    Json gl = Json::object();
    for (const auto& [name, e] : lab.gen_labels) gl[name] = e;
    j["genLabels"] = std::move(gl);
  }
  return j;
}

GroupLabeling labeling_from_json(const nlohmann::ordered_json& j) {
  GroupLabeling lab;
  lab.group = j.at("group").get<std::vector<int>>();
  for (const auto& [name, e] : j.at("varLabels").items())
    lab.var_labels[name] = e.get<std::vector<int>>();
  if (j.contains("genLabels"))
    for (const auto& [name, e] : j.at("genLabels").items())
      lab.gen_labels[name] = e.get<std::vector<int>>();
  return lab;
}

}  // namespace qmirror
