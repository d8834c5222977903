#include "qmirror/jsonio.hpp"

#include <fstream>
#include <stdexcept>

namespace qmirror {

Json rat_pair(const Rat& r) {
  return Json::array({r.get_num().get_si(), r.get_den().get_si()});
}

Rat rat_unpair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rat_unpair: want [num,den]");
  Rat r(Rat(j[0].get<long>()) / Rat(j[1].get<long>()));
  return r;
}

Json qseries_to_json(const QSeries& s) {
  Json j;
  j["variable"] = s.var;
  if (s.prec) j["precision"] = rat_pair(*s.prec);
  else j["precision"] = nullptr;
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms) terms.push_back(Json::array({rat_pair(e), c.get_str()}));
  j["terms"] = std::move(terms);
  return j;
}

QSeries qseries_from_json(const Json& j) {
  QSeries s;
  s.var = j.at("variable").get<std::string>();
  if (!j.at("precision").is_null()) s.prec = rat_unpair(j.at("precision"));
  for (const auto& t : j.at("terms")) {
    Rat e = rat_unpair(t.at(0));
    Rat c(t.at(1).get<std::string>());
    c.canonicalize();
    s.terms.emplace(e, c);
  }
  return s;
}

namespace {

Json expo_json(const Expo& e) {
  Json a = Json::array();
  for (int v : e) a.push_back(v);
  return a;
}

Expo expo_parse(const Json& j) {
  Expo e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return e;
}

Json vars_json(const Vars& vars) {
  Json a = Json::array();
  for (const auto& n : *vars) a.push_back(n);
  return a;
}

Vars vars_parse(const Json& j) {
  std::vector<std::string> names;
  for (const auto& n : j) names.push_back(n.get<std::string>());
  if (names == std::vector<std::string>{"x", "y", "z"}) return xyz_vars();
  return make_vars(std::move(names));
}

template <typename C, typename CoeffOut>
Json mpoly_json_impl(const MPoly<C>& p, CoeffOut&& out) {
  Json j;
  j["vars"] = vars_json(p.vars);
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) {
    Json t;
    t["exp"] = expo_json(e);
    t["coeff"] = out(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

template <typename C, typename CoeffIn>
MPoly<C> mpoly_parse_impl(const Json& j, CoeffIn&& in) {
  MPoly<C> p;
  p.vars = vars_parse(j.at("vars"));
  for (const auto& t : j.at("terms")) p.terms.emplace(expo_parse(t.at("exp")), in(t.at("coeff")));
  return p;
}

}  // namespace

Json mpoly_to_json(const MPoly<Rat>& p) {
  return mpoly_json_impl(p, [](const Rat& c) { return Json(c.get_str()); });
}

Json mpoly_to_json(const MPoly<QSeries>& p) {
  return mpoly_json_impl(p, [](const QSeries& c) { return qseries_to_json(c); });
}

MPoly<Rat> mpoly_rat_from_json(const Json& j) {
  return mpoly_parse_impl<Rat>(j, [](const Json& c) {
    Rat r(c.get<std::string>());
    r.canonicalize();
    return r;
  });
}

MPoly<QSeries> mpoly_qs_from_json(const Json& j) {
  return mpoly_parse_impl<QSeries>(j, [](const Json& c) { return qseries_from_json(c); });
}

Json potential_to_json(const Potential& w) {
  Json j;
  j["abc"] = Json::array({w.abc[0], w.abc[1], w.abc[2]});
  j["cutoff"] = rat_pair(w.cutoff);
  j["lambda"] = qseries_to_json(w.lambda);
  Json mono;
  for (const auto& [e, c] : w.poly.terms) mono[monomial_key(w.poly.vars, e)] = qseries_to_json(c);
  j["monomials"] = std::move(mono);
  if (w.partial) j["partial"] = true;
  return j;
}

Potential potential_from_json(const Json& j) {
  Potential w;
  auto abc = j.at("abc");
  w.abc = {abc.at(0).get<int>(), abc.at(1).get<int>(), abc.at(2).get<int>()};
  w.cutoff = rat_unpair(j.at("cutoff"));
  w.lambda = qseries_from_json(j.at("lambda"));
  w.poly = mpoly_zero<QSeries>(xyz_vars());
  for (const auto& [key, val] : j.at("monomials").items()) {
    Expo e(3, 0);
    // parse "x^i y^j z^k" against the fixed ring
    if (key != "1") {
      size_t pos = 0;
      while (pos < key.size()) {
        size_t sp = key.find(' ', pos);
        std::string part = key.substr(pos, sp == std::string::npos ? sp : sp - pos);
        size_t caret = part.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("potential_from_json: bad key " + key);
        std::string name = part.substr(0, caret);
        int ex = std::stoi(part.substr(caret + 1));
        size_t vi = 0;
        for (; vi < w.poly.vars->size(); ++vi)
          if ((*w.poly.vars)[vi] == name) break;
        if (vi == w.poly.vars->size()) throw std::invalid_argument("potential_from_json: unknown variable " + name);
        e[vi] = ex;
        if (sp == std::string::npos) break;
        pos = sp + 1;
      }
    }
    w.poly.terms.emplace(std::move(e), qseries_from_json(val));
  }
  if (j.contains("partial")) w.partial = j.at("partial").get<bool>();
  return w;
}

Json mf_to_json(const MatrixFact<QSeries>& m) {
  Json j;
  Json basis = Json::array();
  for (const auto& n : m.labels) basis.push_back(n);
  j["basis"] = std::move(basis);
  Json par = Json::array();
  for (int p : m.parity) par.push_back(p);
  j["parity"] = std::move(par);
  j["target"] = mpoly_to_json(m.target);
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& entry : row) r.push_back(mpoly_to_json(entry));
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

MatrixFact<QSeries> mf_from_json(const Json& j) {
  MatrixFact<QSeries> m;
  for (const auto& n : j.at("basis")) m.labels.push_back(n.get<std::string>());
  for (const auto& p : j.at("parity")) m.parity.push_back(p.get<int>());
  m.target = mpoly_qs_from_json(j.at("target"));
  m.vars = m.target.vars;
  for (const auto& row : j.at("entries")) {
    m.entries.emplace_back();
    for (const auto& entry : row) m.entries.back().push_back(mpoly_qs_from_json(entry));
  }
  return m;
}

Json polygons_to_json(const std::vector<Polygon>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) {
    Json j;
    j["canon"] = p.canon;
    j["mirror"] = p.mirror;
    j["word"] = p.word;
    j["cornerParity"] = p.corner_parity;
    j["sideLengths"] = p.side_lengths;
    j["sideE"] = p.side_e;
    j["sideP"] = p.side_p;
    j["area"] = rat_pair(p.area);
    j["corners"] = p.corners;
    j["s"] = p.s;
    j["pcount"] = p.pcount;
    j["r"] = p.r;
    j["disagreements"] = p.disagreements;
    j["positive"] = p.positive;
    j["expo"] = Json::array({p.expo[0], p.expo[1], p.expo[2]});
    a.push_back(std::move(j));
  }
  return a;
}

std::vector<Polygon> polygons_from_json(const Json& a) {
  std::vector<Polygon> out;
  for (const auto& j : a) {
    Polygon p;
    p.canon = j.at("canon").get<std::string>();
    p.mirror = j.at("mirror").get<std::string>();
    p.word = j.at("word").get<std::vector<int>>();
    p.corner_parity = j.at("cornerParity").get<std::vector<int>>();
    p.side_lengths = j.at("sideLengths").get<std::vector<int>>();
    p.side_e = j.at("sideE").get<std::vector<int>>();
    p.side_p = j.at("sideP").get<std::vector<int>>();
    p.area = rat_unpair(j.at("area"));
    p.corners = j.at("corners").get<int>();
    p.s = j.at("s").get<int>();
    p.pcount = j.at("pcount").get<int>();
    p.r = j.at("r").get<int>();
    p.disagreements = j.at("disagreements").get<int>();
    p.positive = j.at("positive").get<bool>();
    auto ex = j.at("expo");
    p.expo = {ex.at(0).get<long>(), ex.at(1).get<long>(), ex.at(2).get<long>()};
    out.push_back(std::move(p));
  }
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << dump_json(j);
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  return Json::parse(f);
}

}  // namespace qmirror
