#include "qmirror/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <deque>
#include <exception>
#include <set>
#include <thread>

namespace qmirror {

namespace {

char encode_step(const StepInfo& s) {
  return static_cast<char>('A' + s.src + 3 * s.hemi + 6 * s.agree + 12 * s.corner);
}

std::string steps_string(const std::vector<StepInfo>& steps) {
  std::string out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(encode_step(s));
  return out;
}

// Lex-minimal rotation; returns the rotation offset.
int canonical_rotation(const std::string& s) {
  int n = static_cast<int>(s.size());
  int best = 0;
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      char a = s[(r + i) % n], b = s[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return best;
}

std::string rotated(const std::string& s, int r) {
  return s.substr(r) + s.substr(0, r);
}

int string_period(const std::string& s) {
  int n = static_cast<int>(s.size());
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = s[i] == s[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

}  // namespace

std::vector<StepInfo> reflect_steps(const std::vector<StepInfo>& steps) {
  int n = static_cast<int>(steps.size());
  std::vector<StepInfo> out(n);
  for (int i = 0; i < n; ++i) {
    const StepInfo& a = steps[i];
    StepInfo b;
    b.src = a.dest;
    b.dest = a.src;
    b.hemi = static_cast<int8_t>(1 - a.hemi);
    b.agree = static_cast<int8_t>(1 - a.agree);
    b.e = a.p;
    b.p = a.e;
    b.corner = 0;
    out[n - 1 - i] = b;
  }
  for (int i = 0; i < n; ++i)
    if (steps[i].corner) out[(n - i) % n].corner = steps[i].corner;
  return out;
}

Polygon make_polygon(const std::vector<StepInfo>& steps, const Rat& area) {
  int n = static_cast<int>(steps.size());
  if (n == 0) throw std::invalid_argument("empty polygon walk");
  std::string raw = steps_string(steps);
  int rot = canonical_rotation(raw);

  Polygon p;
  p.canon = rotated(raw, rot);
  p.area = area;
  p.r = n / string_period(p.canon);

  std::vector<StepInfo> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = steps[(rot + i) % n];

  std::vector<int> corner_at;
  for (int i = 0; i < n; ++i) {
    const auto& s = cyc[i];
    p.s += s.e;
    p.pcount += s.p;
    if (!s.agree) ++p.disagreements;
    if (s.corner) {
      corner_at.push_back(i);
      p.word.push_back(s.src);
      p.corner_parity.push_back(s.corner);
      ++p.expo[s.src];
    }
  }
  p.corners = static_cast<int>(corner_at.size());
  if (p.corners == 0) throw std::invalid_argument("polygon walk without corners");

  for (int t = 0; t < p.corners; ++t) {
    int from = corner_at[t];
    int to = corner_at[(t + 1) % p.corners];
    int len = (to - from + n) % n;
    if (len == 0) len = n;  // single corner wrapping all the way around
    int se = 0, sp = 0;
    for (int k = 0; k < len; ++k) {
      se += cyc[(from + k) % n].e;
      sp += cyc[(from + k) % n].p;
    }
    p.side_lengths.push_back(len);
    p.side_e.push_back(se);
    p.side_p.push_back(sp);
  }

  int first = corner_at.front();
  p.positive = cyc[(first - 1 + n) % n].agree != 0;

  auto refl = reflect_steps(steps);
  std::string mraw = steps_string(refl);
  p.mirror = rotated(mraw, canonical_rotation(mraw));
  return p;
}

namespace {

struct Searcher {
  const Tessellation& T;
  const EnumOptions& opt;
  std::atomic<long>& budget;
  bool euclidean;
  long max_len;
  std::map<std::string, Polygon> out;

  Dart anchor{};
  std::vector<Dart> path;
  std::vector<int8_t> codes;
  std::set<int> arcs;
  std::map<int, Rat> faces;
  Rat face_sum = 0;
  int corners = 0;
  int ext_sum = 0;  // exterior angle units: odd corner 2, even corner 1 (x60 deg)

  Searcher(const Tessellation& t, const EnumOptions& o, std::atomic<long>& b)
      : T(t), opt(o), budget(b) {
    euclidean = t.b() * t.c() + t.a() * t.c() + t.a() * t.b() == t.a() * t.b() * t.c();
    Rat c = opt.cutoff;
    max_len = 4 * to_long(rat_floor(c)) + 32;
  }

  static int arc_key(const Dart& d) { return d.tri * 3 + d.j; }

  bool parity_ok(int code) const { return !opt.odd_corners_only || code == 1; }

  void run(const Dart& a) {
    anchor = a;
    path.assign(1, a);
    codes.assign(1, 0);
    arcs = {arc_key(a)};
    faces.clear();
    face_sum = 0;
    corners = 0;
    ext_sum = 0;
    int lf = left_face(T, a);
    Rat w = face_weight(T, lf, opt.weights);
    faces.emplace(lf, w);
    face_sum = w;
    if (face_sum <= opt.cutoff) dfs();
  }

  void dfs() {
    if (budget.fetch_sub(1, std::memory_order_relaxed) <= 0)
      throw ResourceLimit("enumeration step budget exhausted");
    const Dart d = path.back();
    Dart le = left_exit(T, d);
    Dart st = straight_exit(T, d);
    int close_code = corner_is_odd(d, le) ? 1 : 2;
    int close_units = close_code == 1 ? 2 : 1;
    int min_units = opt.odd_corners_only ? 2 : 1;

    if (le == anchor && corners + 1 >= opt.min_corners && corners + 1 <= opt.max_corners &&
        parity_ok(close_code) && (!euclidean || ext_sum + close_units == 6)) {
      codes[0] = static_cast<int8_t>(close_code);
      finalize();
      codes[0] = 0;
    }

    if (static_cast<long>(path.size()) < max_len) {
      descend(st, 0);
      if (parity_ok(close_code) && corners + 1 < opt.max_corners &&
          (!euclidean || ext_sum + close_units + min_units <= 6))
        descend(le, close_code);
    }
  }

  void descend(const Dart& nd, int code) {
    int k = arc_key(nd);
    if (!arcs.insert(k).second) return;
    int lf = left_face(T, nd);
    auto it = faces.find(lf);
    bool fresh_face = it == faces.end();
    if (fresh_face) {
      Rat w = face_weight(T, lf, opt.weights);
      if (face_sum + w > opt.cutoff) {
        arcs.erase(k);
        return;
      }
      faces.emplace(lf, w);
      face_sum += w;
    }
    path.push_back(nd);
    codes.push_back(static_cast<int8_t>(code));
    if (code) {
      ++corners;
      ext_sum += code == 1 ? 2 : 1;
    }
    dfs();
    if (code) {
      --corners;
      ext_sum -= code == 1 ? 2 : 1;
    }
    path.pop_back();
    codes.pop_back();
    if (fresh_face) {
      Rat w = faces.at(lf);
      face_sum -= w;
      faces.erase(lf);
    }
    arcs.erase(k);
  }

  void finalize() {
    // Region fill with the boundary as walls; rejects candidates that exceed
    // the cutoff or fail to bound a disc on their left.
    std::set<int> filled;
    std::deque<int> frontier;
    Rat area = 0;
    for (const Dart& d : path) {
      int lf = left_face(T, d);
      if (filled.insert(lf).second) {
        area += face_weight(T, lf, opt.weights);
        frontier.push_back(lf);
      }
    }
    while (!frontier.empty()) {
      if (area > opt.cutoff) return;
      int f = frontier.front();
      frontier.pop_front();
      for (auto& [arc, nb] : face_boundary(T, f)) {
        if (arcs.count(arc)) continue;
        if (filled.insert(nb).second) {
          area += face_weight(T, nb, opt.weights);
          frontier.push_back(nb);
        }
      }
    }
    if (area > opt.cutoff) return;
    for (const Dart& d : path)
      if (filled.count(right_face(T, d))) return;

    std::vector<StepInfo> steps(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
      const Dart& d = path[i];
      StepInfo s;
      s.src = static_cast<int8_t>(src_letter(d));
      s.dest = static_cast<int8_t>(dest_letter(d));
      s.hemi = static_cast<int8_t>(arc_upper(T, d) ? 1 : 0);
      s.agree = static_cast<int8_t>(d.dir > 0 ? 1 : 0);
      s.corner = codes[i];
      s.e = static_cast<int8_t>(arc_e_marked(T, d) ? 1 : 0);
      s.p = static_cast<int8_t>(arc_p_marked(T, d) ? 1 : 0);
      steps[i] = s;
    }
    Polygon p = make_polygon(steps, area);
    auto [it, inserted] = out.emplace(p.canon, p);
    if (!inserted) {
      const Polygon& q = it->second;
      if (q.area != p.area || q.r != p.r || q.s != p.s || q.pcount != p.pcount)
        throw std::logic_error("inconsistent rediscovery of a polygon class");
    }
  }
};

std::vector<Dart> anchor_darts(const Tessellation& T) {
  std::vector<Dart> out;
  int lower = T.tris()[0].nbr[0];
  if (lower == -1) throw NeedExtend();
  for (int tri : {0, lower})
    for (int j = 0; j < 3; ++j)
      for (int dir : {+1, -1}) out.push_back(Dart{tri, j, dir});
  return out;
}

}  // namespace

std::vector<Polygon> enumerate_on(const Tessellation& T, const EnumOptions& opt) {
  auto anchors = anchor_darts(T);
  std::atomic<long> budget{opt.step_budget};
  int nthreads = std::max(1, std::min<int>(opt.threads, static_cast<int>(anchors.size())));

  std::vector<std::map<std::string, Polygon>> results(anchors.size());
  std::vector<std::exception_ptr> errors(nthreads);

  auto work = [&](int w) {
    try {
      Searcher s(T, opt, budget);
      for (size_t i = w; i < anchors.size(); i += nthreads) {
        s.out.clear();
        s.run(anchors[i]);
        results[i] = std::move(s.out);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const NeedExtend&) {
      throw;
    } catch (...) {
      std::rethrow_exception(e);
    }
  }

  std::map<std::string, Polygon> merged;
  for (auto& m : results)
    for (auto& [k, p] : m) {
      auto [it, inserted] = merged.emplace(k, p);
      if (!inserted && (it->second.area != p.area || it->second.r != p.r))
        throw std::logic_error("anchor runs disagree on a polygon class");
    }

  std::vector<Polygon> out;
  out.reserve(merged.size());
  for (auto& [k, p] : merged) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), [](const Polygon& a, const Polygon& b) {
    if (a.area != b.area) return a.area < b.area;
    if (a.word != b.word) return a.word < b.word;
    return a.canon < b.canon;
  });
  return out;
}

std::vector<Polygon> enumerate_polygons(int a, int b, int c, const EnumOptions& opt) {
  bool spherical = b * c + a * c + a * b > a * b * c;
  bool euclidean = b * c + a * c + a * b == a * b * c;
  long cut = to_long(rat_floor(opt.cutoff)) + 1;
  long radius;
  if (euclidean) {
    // A straight boundary run of m arcs picks up ~3.5m in left-face weight,
    // so runs are <= ~cutoff/3 arcs and stay within that triangle depth.
    radius = cut / 3 + 10;
  } else if (!spherical) {
    radius = std::max<long>(6, cut / 2 + 6);
  } else {
    radius = 3;
  }
  int tries = spherical ? 1 : opt.max_retries + 1;
  for (int attempt = 0; attempt < tries; ++attempt) {
    Tessellation t(a, b, c, static_cast<int>(radius));
    try {
      return enumerate_on(t, opt);
    } catch (const NeedExtend&) {
      radius += 4;
    }
  }
  throw ResourceLimit("enumeration radius limit exceeded");
}

Rat potential_precision(const Rat& cutoff, const RegionWeights& weights) {
  Int l = Int(weights.central.get_den());
  for (const Rat& w : weights.corner) {
    Int d = Int(w.get_den());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return cutoff + Rat(1) / Rat(l);
}

Potential assemble_potential(std::array<int, 3> abc, const std::vector<Polygon>& polys,
                             const Rat& cutoff, const RegionWeights& weights,
                             bool spherical_partial) {
  Rat prec = potential_precision(cutoff, weights);
  std::map<std::string, const Polygon*> by_canon;
  for (const auto& p : polys) by_canon.emplace(p.canon, &p);

  std::map<Expo, std::map<Rat, Rat>> terms;
  std::set<std::string> done;
  for (const auto& p : polys) {
    if (done.count(p.canon)) continue;
    auto it = by_canon.find(p.mirror);
    if (it == by_canon.end())
      throw std::runtime_error("unpaired polygon class: " + p.canon);
    const Polygon& q = *it->second;
    done.insert(p.canon);
    done.insert(q.canon);

    Rat coeff;
    Expo e;
    Rat area;
    if (&p == &q) {
      if (p.s != p.pcount)
        throw std::logic_error("reflection-symmetric class with s != p");
      coeff = Rat(p.s + p.pcount) / Rat(p.r);
      if (p.s % 2) coeff = -coeff;
      e = Expo{(int)p.expo[0], (int)p.expo[1], (int)p.expo[2]};
      area = p.area;
    } else {
      if (p.positive == q.positive)
        throw std::logic_error("reflection pair without a unique positive member");
      const Polygon& pos = p.positive ? p : q;
      const Polygon& neg = p.positive ? q : p;
      if (pos.area != neg.area || pos.r != neg.r || pos.expo != neg.expo ||
          pos.s != neg.pcount || pos.pcount != neg.s)
        throw std::logic_error("reflection pair invariants violated");
      coeff = Rat(pos.s + neg.s) / Rat(pos.r);
      if (pos.s % 2) coeff = -coeff;
      e = Expo{(int)pos.expo[0], (int)pos.expo[1], (int)pos.expo[2]};
      area = pos.area;
    }
    if (coeff != 0) terms[e][area] += coeff;
  }

  Potential w;
  w.abc = abc;
  w.cutoff = cutoff;
  w.partial = spherical_partial;
  w.lambda = qs_zero();
  w.lambda.prec = prec;
  w.poly.vars = xyz_vars();
  for (auto& [e, series] : terms) {
    QSeries s;
    s.prec = prec;
    for (auto& [a, c] : series)
      if (c != 0) s.terms[a] = c;
    if (s.terms.empty()) continue;
    w.poly.terms[e] = s;
  }
  return w;
}

}  // namespace qmirror
