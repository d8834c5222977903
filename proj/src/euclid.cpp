#include "qmirror/euclid.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <exception>
#include <map>
#include <set>
#include <thread>

namespace qmirror {

namespace {

struct Pt {
  Rat x, y;  // the plane point (x, y*sqrt(3))
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator<(const Pt& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

Pt operator+(const Pt& a, const Pt& b) { return {Rat(a.x + b.x), Rat(a.y + b.y)}; }
Pt operator-(const Pt& a, const Pt& b) { return {Rat(a.x - b.x), Rat(a.y - b.y)}; }

Rat cross(const Pt& a, const Pt& b) { return Rat(a.x * b.y - a.y * b.x); }

// Unit arc displacements, counterclockwise from east.  Odd directions run
// along the global arrow.
const std::array<Pt, 6>& arc_vec() {
  static const std::array<Pt, 6> v = {
      Pt{rat(1, 2), Rat(0)},    Pt{rat(1, 4), rat(1, 4)},   Pt{rat(-1, 4), rat(1, 4)},
      Pt{rat(-1, 2), Rat(0)},   Pt{rat(-1, 4), rat(-1, 4)}, Pt{rat(1, 4), rat(-1, 4)}};
  return v;
}

// Half offsets of the three lattice edge families.
const std::array<Pt, 3>& half_edge() {
  static const std::array<Pt, 3> v = {Pt{rat(1, 2), Rat(0)}, Pt{rat(1, 4), rat(1, 4)},
                                      Pt{rat(-1, 4), rat(1, 4)}};
  return v;
}

bool is_int(const Rat& r) { return r.get_den() == 1; }

bool is_vertex(const Pt& p) { return is_int(Rat(2 * p.y)) && is_int(Rat(p.x - p.y)); }

int vtype(const Pt& p) {
  Int n = Rat(2 * p.y).get_num();
  Int m = Rat(p.x - p.y).get_num();
  long t = Int((m - n) % 3).get_si();
  return static_cast<int>((t % 3 + 3) % 3);
}

int node_family(const Pt& p) {
  for (int f = 0; f < 3; ++f)
    if (is_vertex(p - half_edge()[f]) && is_vertex(p + half_edge()[f])) return f;
  return -1;
}

bool is_node(const Pt& p) { return node_family(p) >= 0; }

int node_letter(const Pt& p) {
  int f = node_family(p);
  assert(f >= 0);
  int t1 = vtype(p - half_edge()[f]);
  int t2 = vtype(p + half_edge()[f]);
  return ((-(t1 + t2)) % 3 + 3) % 3;
}

struct Dt {
  Pt tail;
  int dir = 0;
  bool operator==(const Dt& o) const { return dir == o.dir && tail == o.tail; }
};

Pt head_of(const Dt& d) { return d.tail + arc_vec()[d.dir]; }

Pt vertex_at(const Int& m, const Int& n) {
  return {Rat(Rat(m) + Rat(n) / 2), Rat(Rat(n) / 2)};
}

struct Cell {
  bool up = false;
  std::array<Pt, 3> verts;
  Pt centroid;
};

Cell cell_of(const Dt& d) {
  Pt q = d.tail;
  q.x += arc_vec()[d.dir].x / 2;
  q.y += arc_vec()[d.dir].y / 2;
  Rat mf(q.x - q.y), nf(2 * q.y);
  Int m = rat_floor(mf), n = rat_floor(nf);
  Cell c;
  c.up = Rat(mf - Rat(m) + nf - Rat(n)) < 1;
  if (c.up)
    c.verts = {vertex_at(m, n), vertex_at(Int(m + 1), n), vertex_at(m, Int(n + 1))};
  else
    c.verts = {vertex_at(Int(m + 1), n), vertex_at(Int(m + 1), Int(n + 1)),
               vertex_at(m, Int(n + 1))};
  c.centroid = {Rat((c.verts[0].x + c.verts[1].x + c.verts[2].x) / 3),
                Rat((c.verts[0].y + c.verts[1].y + c.verts[2].y) / 3)};
  return c;
}

// The cell vertex shared by the tail edge and the head edge of the arc.
Pt pivot_vertex(const Dt& d, const Cell& c) {
  Pt h = head_of(d);
  int ft = node_family(d.tail), fh = node_family(h);
  std::array<Pt, 2> te = {d.tail - half_edge()[ft], d.tail + half_edge()[ft]};
  std::array<Pt, 2> he = {h - half_edge()[fh], h + half_edge()[fh]};
  for (const Pt& a : te)
    for (const Pt& b : he)
      if (a == b) return a;
  assert(false && "arc endpoints on non-adjacent edges");
  return c.centroid;
}

struct Face {
  Pt center;
  Rat weight;
};

Face left_face(const Dt& d, const RegionWeights& w) {
  Cell c = cell_of(d);
  Pt piv = pivot_vertex(d, c);
  if (cross(arc_vec()[d.dir], piv - d.tail) > 0)
    return {piv, Rat(6 * w.corner[vtype(piv)])};
  return {c.centroid, w.central};
}

Dt straight_exit(const Dt& d) { return {head_of(d), d.dir}; }

// Left turn taken at the head of d, with its corner parity code.
std::pair<Dt, int> left_exit(const Dt& d) {
  Pt h = head_of(d);
  int d1 = (d.dir + 1) % 6;
  if (is_node(h + arc_vec()[d1])) return {Dt{h, d1}, 2};
  int d2 = (d.dir + 2) % 6;
  assert(is_node(h + arc_vec()[d2]));
  return {Dt{h, d2}, 1};
}

StepInfo step_info(const Dt& d, int code) {
  StepInfo s;
  s.src = static_cast<int8_t>(node_letter(d.tail));
  s.dest = static_cast<int8_t>(node_letter(head_of(d)));
  Cell c = cell_of(d);
  s.hemi = static_cast<int8_t>(c.up ? 1 : 0);
  s.agree = static_cast<int8_t>(d.dir % 2);
  s.corner = static_cast<int8_t>(code);
  int j = s.agree ? s.src : s.dest;
  s.e = static_cast<int8_t>(j == 2 && c.up ? 1 : 0);
  s.p = static_cast<int8_t>(j == 2 && !c.up ? 1 : 0);
  return s;
}

using ArcKey = std::array<Rat, 4>;

ArcKey arc_key(const Dt& d) {
  Pt h = head_of(d);
  if (h < d.tail) return {h.x, h.y, d.tail.x, d.tail.y};
  return {d.tail.x, d.tail.y, h.x, h.y};
}

Int rat_ceil(const Rat& r) { return Int(-rat_floor(Rat(-r))); }

struct CoordSearcher {
  const EnumOptions& opt;
  std::atomic<long>& budget;
  std::map<std::string, Polygon> out;

  Dt anchor;
  std::vector<Dt> path;
  std::vector<int8_t> codes;
  std::set<ArcKey> arcs;
  std::set<Pt> nodes;
  std::map<Pt, Rat> faces;
  Rat face_sum = 0;
  int corners = 0;
  int ext_sum = 0;

  CoordSearcher(const EnumOptions& o, std::atomic<long>& b) : opt(o), budget(b) {}

  void run(const Dt& a) {
    anchor = a;
    path.assign(1, a);
    codes.assign(1, 0);
    arcs = {arc_key(a)};
    nodes = {a.tail};
    faces.clear();
    corners = 0;
    ext_sum = 0;
    Face f = left_face(a, opt.weights);
    faces.emplace(f.center, f.weight);
    face_sum = f.weight;
    if (face_sum <= opt.cutoff) dfs();
  }

  bool parity_ok(int code) const { return !opt.odd_corners_only || code == 1; }

  void dfs() {
    if (budget.fetch_sub(1, std::memory_order_relaxed) <= 0)
      throw ResourceLimit("enumeration step budget exhausted");
    const Dt d = path.back();
    auto [le, close_code] = left_exit(d);
    int close_units = close_code == 1 ? 2 : 1;
    int min_units = opt.odd_corners_only ? 2 : 1;

    if (le == anchor && corners + 1 >= opt.min_corners && corners + 1 <= opt.max_corners &&
        parity_ok(close_code) && ext_sum + close_units == 6) {
      codes[0] = static_cast<int8_t>(close_code);
      finalize();
      codes[0] = 0;
    }

    descend(straight_exit(d), 0);
    if (parity_ok(close_code) && corners + 1 < opt.max_corners &&
        ext_sum + close_units + min_units <= 6)
      descend(le, close_code);
  }

  void descend(const Dt& nd, int code) {
    if (!nodes.insert(nd.tail).second) return;
    auto [ait, fresh_arc] = arcs.insert(arc_key(nd));
    if (!fresh_arc) {
      nodes.erase(nd.tail);
      return;
    }
    Face f = left_face(nd, opt.weights);
    auto it = faces.find(f.center);
    bool fresh_face = it == faces.end();
    if (fresh_face) {
      if (face_sum + f.weight > opt.cutoff) {
        arcs.erase(*ait);
        nodes.erase(nd.tail);
        return;
      }
      faces.emplace(f.center, f.weight);
      face_sum += f.weight;
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
      face_sum -= f.weight;
      faces.erase(f.center);
    }
    arcs.erase(arc_key(nd));
    nodes.erase(nd.tail);
  }

  bool strictly_inside(const Pt& p, const std::vector<Pt>& poly) const {
    int hits = 0;
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
      const Pt& a = poly[i];
      const Pt& b = poly[(i + 1) % n];
      bool below_a = a.y <= p.y, below_b = b.y <= p.y;
      if (below_a == below_b) continue;
      Rat xi(a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y));
      if (xi > p.x) ++hits;
    }
    return hits % 2 == 1;
  }

  void finalize() {
    int n = static_cast<int>(path.size());
    std::vector<Pt> poly(n);
    for (int i = 0; i < n; ++i) poly[i] = path[i].tail;

    Rat twice_signed = 0;
    for (int i = 0; i < n; ++i) twice_signed += cross(poly[i], poly[(i + 1) % n]);
    if (twice_signed <= 0) return;  // region lies to the right

    Rat xlo = poly[0].x, xhi = poly[0].x, ylo = poly[0].y, yhi = poly[0].y;
    for (const Pt& p : poly) {
      xlo = std::min(xlo, p.x);
      xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y);
      yhi = std::max(yhi, p.y);
    }

    Rat area = 0;
    for (Int nn = rat_ceil(Rat(2 * ylo)); nn <= rat_floor(Rat(2 * yhi)); ++nn) {
      for (Int mm = rat_ceil(Rat(xlo - Rat(nn) / 2)); mm <= rat_floor(Rat(xhi - Rat(nn) / 2));
           ++mm) {
        Pt v = vertex_at(mm, nn);
        if (strictly_inside(v, poly)) {
          area += Rat(6 * opt.weights.corner[vtype(v)]);
          if (area > opt.cutoff) return;
        }
      }
    }
    for (Int nn = Int(rat_floor(Rat(2 * ylo)) - 1); nn <= rat_floor(Rat(2 * yhi)); ++nn) {
      for (Int mm = Int(rat_floor(Rat(xlo - Rat(nn) / 2)) - 1);
           mm <= rat_floor(Rat(xhi - Rat(nn) / 2)); ++mm) {
        Pt up{Rat(Rat(mm) + Rat(nn) / 2 + rat(1, 2)), Rat(Rat(nn) / 2 + rat(1, 6))};
        Pt dn{Rat(Rat(mm) + Rat(nn) / 2 + 1), Rat(Rat(nn) / 2 + rat(1, 3))};
        for (const Pt& cen : {up, dn})
          if (strictly_inside(cen, poly)) {
            area += opt.weights.central;
            if (area > opt.cutoff) return;
          }
      }
    }

    std::vector<StepInfo> steps(n);
    for (int i = 0; i < n; ++i) steps[i] = step_info(path[i], codes[i]);
    Polygon p = make_polygon(steps, area);
    auto [it, inserted] = out.emplace(p.canon, p);
    if (!inserted) {
      const Polygon& q = it->second;
      if (q.area != p.area || q.r != p.r || q.s != p.s || q.pcount != p.pcount)
        throw std::logic_error("inconsistent rediscovery of a polygon class");
    }
  }
};

// Darts of six cells forming a fundamental domain for the type-preserving
// translations; every class has a representative through one of them.
std::vector<Dt> coord_anchors() {
  std::vector<Dt> out;
  for (int m = 0; m < 3; ++m) {
    for (int upper : {1, 0}) {
      Cell c;
      if (upper)
        c.verts = {vertex_at(Int(m), Int(0)), vertex_at(Int(m + 1), Int(0)),
                   vertex_at(Int(m), Int(1))};
      else
        c.verts = {vertex_at(Int(m + 1), Int(0)), vertex_at(Int(m + 1), Int(1)),
                   vertex_at(Int(m), Int(1))};
      std::array<Pt, 3> mids;
      for (int i = 0; i < 3; ++i) {
        Pt a = c.verts[i], b = c.verts[(i + 1) % 3];
        mids[i] = {Rat((a.x + b.x) / 2), Rat((a.y + b.y) / 2)};
      }
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
          if (i == k) continue;
          Pt disp = mids[k] - mids[i];
          for (int dir = 0; dir < 6; ++dir)
            if (arc_vec()[dir] == disp) out.push_back(Dt{mids[i], dir});
        }
    }
  }
  return out;
}

}  // namespace

std::vector<Polygon> enumerate_euclid(const EnumOptions& opt) {
  auto anchors = coord_anchors();
  std::atomic<long> budget{opt.step_budget};
  int nthreads = std::max(1, std::min<int>(opt.threads, static_cast<int>(anchors.size())));

  std::vector<std::map<std::string, Polygon>> results(anchors.size());
  std::vector<std::exception_ptr> errors(nthreads);

  auto work = [&](int w) {
    try {
      CoordSearcher s(opt, budget);
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
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

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

}  // namespace qmirror
