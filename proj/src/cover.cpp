#include "qmirror/cover.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace qmirror {

namespace {

int edge_letter_between(int s1, int s2) {
  assert(s1 != s2);
  return (6 - s1 - s2) % 3;
}

}  // namespace

Tessellation::Tessellation(int a, int b, int c, int radius)
    : abc_{a, b, c}, radius_(radius) {
  if (a < 2 || b < 2 || c < 2) throw std::invalid_argument("orbifold orders must be >= 2");
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  // 1/a + 1/b + 1/c > 1 closes up to a sphere; we only grow a local patch.
  spherical_ = b * c + a * c + a * b > a * b * c;

  create_seed();
  std::deque<int> open;
  open.push_back(0);
  std::vector<int> work;
  while (!open.empty()) {
    int t = open.front();
    open.pop_front();
    if (tris_[t].depth >= radius_) continue;
    for (int j = 0; j < 3; ++j) {
      if (tris_[t].nbr[j] != -1) continue;
      // Fresh neighbor across edge j: shares the two edge vertices in the
      // same slots, gets a new third vertex at slot j.
      int u = tris_[t].v[(j + 1) % 3];
      int w = tris_[t].v[(j + 2) % 3];
      int fresh = static_cast<int>(verts_.size());
      verts_.push_back(Vert{j, false, true, {}});
      std::array<int, 3> vv;
      vv[j] = fresh;
      vv[(j + 1) % 3] = u;
      vv[(j + 2) % 3] = w;
      int nt = create_tri(vv, !tris_[t].upper, tris_[t].depth + 1);
      glue(t, j, nt);
      open.push_back(nt);
      work.assign({u, w, fresh});
      close_fans(work);
      while (!work.empty()) {
        // close_fans may have created closure triangles; they belong to the
        // current rings and never outrun the frontier, so just record them.
        int extra = work.back();
        work.pop_back();
        open.push_back(extra);
      }
      if (static_cast<long>(tris_.size()) > 4'000'000)
        throw ResourceLimit("tessellation patch exceeds triangle budget");
    }
  }

  for (size_t v = 0; v < verts_.size(); ++v) {
    if (!verts_[v].alive || verts_[v].tris.empty()) continue;
    int t0 = verts_[v].tris.front();
    int count = 1;
    int t = ccw_next(t0, verts_[v].type);
    while (t != -1 && t != t0 && count <= valence(verts_[v].type) + 1) {
      ++count;
      t = ccw_next(t, verts_[v].type);
    }
    verts_[v].complete = (t == t0 && count == valence(verts_[v].type));
  }
}

void Tessellation::create_seed() {
  for (int s = 0; s < 3; ++s) verts_.push_back(Vert{s, false, true, {}});
  create_tri({0, 1, 2}, true, 0);
}

int Tessellation::create_tri(std::array<int, 3> v, bool upper, int depth) {
  int id = static_cast<int>(tris_.size());
  Tri t;
  t.v = v;
  t.upper = upper;
  t.depth = depth;
  tris_.push_back(t);
  for (int s = 0; s < 3; ++s) {
    assert(verts_[v[s]].alive && verts_[v[s]].type == s);
    verts_[v[s]].tris.push_back(id);
  }
  for (int j = 0; j < 3; ++j) {
    int e = static_cast<int>(edges_.size());
    Edge ed;
    ed.letter = j;
    ed.tri[upper ? 0 : 1] = id;
    edges_.push_back(ed);
    tris_[id].edge[j] = e;
  }
  return id;
}

void Tessellation::set_edge_side(int e, int t) {
  edges_[e].tri[tris_[t].upper ? 0 : 1] = t;
}

// Glue t2 onto t1 across edge letter j of both; t1's edge id survives.
void Tessellation::glue(int t1, int j, int t2) {
  assert(tris_[t1].nbr[j] == -1 && tris_[t2].nbr[j] == -1);
  assert(tris_[t1].upper != tris_[t2].upper);
  assert(tris_[t1].v[(j + 1) % 3] == tris_[t2].v[(j + 1) % 3]);
  assert(tris_[t1].v[(j + 2) % 3] == tris_[t2].v[(j + 2) % 3]);
  tris_[t1].nbr[j] = t2;
  tris_[t2].nbr[j] = t1;
  int keep = tris_[t1].edge[j];
  int drop = tris_[t2].edge[j];
  if (keep != drop) merge_edges(keep, drop);
  tris_[t2].edge[j] = keep;
  set_edge_side(keep, t2);
}

void Tessellation::merge_edges(int keep, int drop) {
  for (int side = 0; side < 2; ++side) {
    int t = edges_[drop].tri[side];
    if (t == -1) continue;
    assert(edges_[keep].tri[side] == -1 || edges_[keep].tri[side] == t);
    edges_[keep].tri[side] = t;
    tris_[t].edge[edges_[drop].letter] = keep;
  }
  edges_[drop].alive = false;
  edges_[drop].tri = {-1, -1};
}

void Tessellation::merge_verts(int keep, int drop) {
  assert(keep != drop);
  assert(verts_[keep].type == verts_[drop].type);
  int s = verts_[drop].type;
  for (int t : verts_[drop].tris) {
    assert(tris_[t].v[s] == drop);
    tris_[t].v[s] = keep;
    verts_[keep].tris.push_back(t);
  }
  verts_[drop].tris.clear();
  verts_[drop].alive = false;
}

int Tessellation::ccw_next(int tri, int s) const {
  int l = edge_letter_between(s, pred_slot(tri, s));
  return tris_[tri].nbr[l];
}

int Tessellation::cw_next(int tri, int s) const {
  int l = edge_letter_between(s, succ_slot(tri, s));
  return tris_[tri].nbr[l];
}

// Repeatedly complete vertex fans: a fan one triangle short of full valence
// gets its closer inserted; a full fan with unlinked ends gets zipped.  Newly
// created triangles are appended to work (as negative-offset markers via the
// same vector: callers re-queue anything we push that is a triangle id offset
// by vertex count; simpler: we push created triangle ids through `created_`).
void Tessellation::close_fans(std::vector<int>& work) {
  std::vector<int> created;
  std::deque<int> pending(work.begin(), work.end());
  work.clear();
  int guard = 0;
  while (!pending.empty()) {
    if (++guard > 1'000'000) throw ResourceLimit("fan closure did not stabilize");
    int v = pending.front();
    pending.pop_front();
    if (!verts_[v].alive || verts_[v].complete || verts_[v].tris.empty()) continue;
    int s = verts_[v].type;
    int full = valence(s);

    int t0 = verts_[v].tris.front();
    // Walk to the clockwise end of the fan, then sweep counterclockwise.
    int start = t0;
    for (int i = 0; i < full + 2; ++i) {
      int prev = cw_next(start, s);
      if (prev == -1 || prev == t0) break;
      start = prev;
    }
    int count = 1;
    int end = start;
    while (true) {
      int nxt = ccw_next(end, s);
      if (nxt == -1 || nxt == start) break;
      end = nxt;
      if (++count > full + 1) throw ResourceLimit("vertex fan overfull");
    }
    if (ccw_next(end, s) == start) {
      verts_[v].complete = (count == full);
      continue;
    }
    if (count > full) throw ResourceLimit("vertex fan overfull");

    // Dangling edges at the two fan ends: {v, pred} on the ccw end,
    // {v, succ} on the cw end.
    int pe = pred_slot(end, s);
    int le = edge_letter_between(s, pe);
    int ps = succ_slot(start, s);
    int ls = edge_letter_between(s, ps);
    int outer_ccw = tris_[end].v[pe];
    int outer_cw = tris_[start].v[ps];

    if (count == full) {
      // Zip the two ends together, identifying their outer vertices first.
      assert(le == ls);
      if (outer_ccw != outer_cw) {
        int keep = outer_ccw, drop = outer_cw;
        if (verts_[drop].tris.size() > verts_[keep].tris.size()) std::swap(keep, drop);
        merge_verts(keep, drop);
        pending.push_back(keep);
      }
      glue(end, le, start);
      verts_[v].complete = true;
      pending.push_back(tris_[end].v[pe]);
    } else if (count == full - 1) {
      // Insert the unique missing triangle; all three vertices exist.
      assert(tris_[end].upper == tris_[start].upper);
      if (outer_ccw == outer_cw) throw ResourceLimit("degenerate fan closure");
      std::array<int, 3> vv;
      vv[s] = v;
      vv[pe] = outer_ccw;
      vv[ps] = outer_cw;
      int nt = create_tri(vv, !tris_[end].upper, std::min(tris_[end].depth, tris_[start].depth) + 1);
      glue(end, le, nt);
      glue(start, ls, nt);
      created.push_back(nt);
      verts_[v].complete = true;
      pending.push_back(outer_ccw);
      pending.push_back(outer_cw);
    }
  }
  work = created;
}

int tail_node(const Tessellation& t, const Dart& d) {
  return d.dir > 0 ? t.tris()[d.tri].edge[d.j] : t.tris()[d.tri].edge[(d.j + 1) % 3];
}

int head_node(const Tessellation& t, const Dart& d) {
  return d.dir > 0 ? t.tris()[d.tri].edge[(d.j + 1) % 3] : t.tris()[d.tri].edge[d.j];
}

std::array<Dart, 4> node_stubs(const Tessellation& t, int node) {
  const auto& e = t.edges()[node];
  int U = e.tri[0], D = e.tri[1];
  if (U == -1 || D == -1) throw NeedExtend();
  int L = e.letter;
  int Lm = (L + 2) % 3;
  return {Dart{D, Lm, -1}, Dart{D, L, +1}, Dart{U, L, +1}, Dart{U, Lm, -1}};
}

namespace {

Dart exit_from(const Tessellation& t, const Dart& d, int offset) {
  int node = head_node(t, d);
  auto cycle = node_stubs(t, node);
  Dart back = reversed(d);
  int i = -1;
  for (int k = 0; k < 4; ++k)
    if (cycle[k] == back) { i = k; break; }
  if (i < 0) throw std::logic_error("dart not incident to its head node");
  return cycle[(i + offset) % 4];
}

}  // namespace

Dart straight_exit(const Tessellation& t, const Dart& d) { return exit_from(t, d, 2); }
Dart left_exit(const Tessellation& t, const Dart& d) { return exit_from(t, d, 3); }

int cut_vertex(const Tessellation& t, const Dart& d) {
  return t.tris()[d.tri].v[(d.j + 2) % 3];
}

int left_face(const Tessellation& t, const Dart& d) {
  bool up = t.tris()[d.tri].upper;
  bool fwd = d.dir > 0;
  if (up == fwd) return central_face(d.tri);
  return vertex_face(t, cut_vertex(t, d));
}

int right_face(const Tessellation& t, const Dart& d) {
  int lf = left_face(t, d);
  return lf == central_face(d.tri) ? vertex_face(t, cut_vertex(t, d)) : central_face(d.tri);
}

Rat face_weight(const Tessellation& t, int face, const RegionWeights& w) {
  int ntris = static_cast<int>(t.tris().size());
  if (face < ntris) return w.central;
  const auto& v = t.verts()[face - ntris];
  if (!v.complete) throw NeedExtend();
  return Rat(t.valence(v.type)) * w.corner[v.type];
}

std::vector<std::pair<int, int>> face_boundary(const Tessellation& t, int face) {
  std::vector<std::pair<int, int>> out;
  int ntris = static_cast<int>(t.tris().size());
  if (face < ntris) {
    for (int j = 0; j < 3; ++j)
      out.emplace_back(face * 3 + j, vertex_face(t, cut_vertex(t, Dart{face, j, +1})));
    return out;
  }
  int v = face - ntris;
  const auto& vert = t.verts()[v];
  if (!vert.complete) throw NeedExtend();
  int s = vert.type;
  int t0 = vert.tris.front();
  int cur = t0;
  do {
    // The arc of cur that cuts off v has cut slot s, i.e. j = s+1 mod 3.
    int j = (s + 1) % 3;
    assert(cut_vertex(t, Dart{cur, j, +1}) == v);
    out.emplace_back(cur * 3 + j, central_face(cur));
    cur = t.ccw_next(cur, s);
  } while (cur != t0 && cur != -1);
  if (cur == -1) throw NeedExtend();
  return out;
}

}  // namespace qmirror
