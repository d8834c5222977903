#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qmirror/cover.hpp"

using namespace qmirror;

namespace {

int fan_size(const Tessellation& t, int v) {
  return static_cast<int>(t.verts()[v].tris.size());
}

}  // namespace

TEST_CASE("euclidean patch closes interior vertices at valence 2a") {
  Tessellation t(3, 3, 3, 5);
  CHECK_FALSE(t.spherical());
  for (int v = 0; v < 3; ++v) {
    CHECK(t.verts()[v].complete);
    CHECK(fan_size(t, v) == 6);
  }
  int complete = 0;
  for (const auto& v : t.verts())
    if (v.alive && v.complete) {
      CHECK(static_cast<int>(v.tris.size()) == t.valence(v.type));
      ++complete;
    }
  CHECK(complete >= 10);
}

TEST_CASE("hyperbolic patch: interior 7-vertex has 14 triangles") {
  Tessellation t(2, 3, 7, 6);
  CHECK_FALSE(t.spherical());
  CHECK(t.verts()[0].complete);
  CHECK(fan_size(t, 0) == 4);
  CHECK(t.verts()[1].complete);
  CHECK(fan_size(t, 1) == 6);
  CHECK(t.verts()[2].complete);
  CHECK(fan_size(t, 2) == 14);
}

TEST_CASE("spherical signatures are flagged") {
  Tessellation t(2, 3, 3, 2);
  CHECK(t.spherical());
}

TEST_CASE("colors alternate and gluing is mutual") {
  Tessellation t(3, 4, 5, 5);
  for (size_t i = 0; i < t.tris().size(); ++i) {
    const auto& tr = t.tris()[i];
    for (int j = 0; j < 3; ++j) {
      int n = tr.nbr[j];
      if (n == -1) continue;
      CHECK(t.tris()[n].upper != tr.upper);
      CHECK(t.tris()[n].nbr[j] == static_cast<int>(i));
      CHECK(t.tris()[n].edge[j] == tr.edge[j]);
      CHECK(t.tris()[n].v[(j + 1) % 3] == tr.v[(j + 1) % 3]);
      CHECK(t.tris()[n].v[(j + 2) % 3] == tr.v[(j + 2) % 3]);
    }
  }
  for (size_t e = 0; e < t.edges().size(); ++e) {
    const auto& ed = t.edges()[e];
    if (!ed.alive) continue;
    if (ed.tri[0] != -1) CHECK(t.tris()[ed.tri[0]].upper);
    if (ed.tri[1] != -1) CHECK_FALSE(t.tris()[ed.tri[1]].upper);
  }
}

TEST_CASE("one e per upper triangle, one p per lower") {
  Tessellation t(3, 3, 3, 4);
  for (size_t i = 0; i < t.tris().size(); ++i) {
    int ecount = 0, pcount = 0;
    for (int j = 0; j < 3; ++j) {
      if (arc_e_marked(t, Dart{static_cast<int>(i), j, +1})) ++ecount;
      if (arc_p_marked(t, Dart{static_cast<int>(i), j, +1})) ++pcount;
    }
    if (t.tris()[i].upper) {
      CHECK(ecount == 1);
      CHECK(pcount == 0);
    } else {
      CHECK(ecount == 0);
      CHECK(pcount == 1);
    }
  }
}

TEST_CASE("node stubs pair into two straight continuations") {
  Tessellation t(3, 3, 3, 4);
  for (size_t e = 0; e < t.edges().size(); ++e) {
    if (!t.edges()[e].alive || t.edges()[e].tri[0] == -1 || t.edges()[e].tri[1] == -1)
      continue;
    auto cycle = node_stubs(t, static_cast<int>(e));
    for (int i = 0; i < 4; ++i) {
      CHECK(tail_node(t, cycle[i]) == static_cast<int>(e));
      // Straight continuation of the reversal of stub i is stub i+2.
      Dart incoming = reversed(cycle[i]);
      CHECK(straight_exit(t, incoming) == cycle[(i + 2) % 4]);
    }
  }
}

TEST_CASE("minimal upper medial triangle: three odd corners, word XYZ ccw") {
  Tessellation t(3, 3, 3, 3);
  Dart d{0, 0, +1};
  std::vector<int> corner_letters;
  Dart cur = d;
  for (int i = 0; i < 3; ++i) {
    corner_letters.push_back(dest_letter(cur));
    Dart nxt = left_exit(t, cur);
    CHECK(corner_is_odd(cur, nxt));
    cur = nxt;
  }
  CHECK(cur == d);
  CHECK(corner_letters == std::vector<int>{1, 2, 0});  // Y, Z, X cyclically = XYZ
}

TEST_CASE("straight lines are embedded until they leave the patch") {
  Tessellation t(3, 3, 3, 6);
  Dart d{0, 0, +1};
  std::set<std::tuple<int, int, int>> seen;
  bool hit_boundary = false;
  try {
    for (int i = 0; i < 10000; ++i) {
      auto key = std::make_tuple(d.tri, d.j, d.dir);
      CHECK(seen.insert(key).second);
      d = straight_exit(t, d);
    }
  } catch (const NeedExtend&) {
    hit_boundary = true;
  }
  CHECK(hit_boundary);
  CHECK(seen.size() >= 6);
}

TEST_CASE("hyperbolic straight lines also run off the patch without repeating") {
  Tessellation t(2, 3, 7, 6);
  Dart d{0, 1, +1};
  std::set<std::tuple<int, int, int>> seen;
  bool hit_boundary = false;
  try {
    for (int i = 0; i < 100000; ++i) {
      CHECK(seen.insert(std::make_tuple(d.tri, d.j, d.dir)).second);
      d = straight_exit(t, d);
    }
  } catch (const NeedExtend&) {
    hit_boundary = true;
  }
  CHECK(hit_boundary);
}

TEST_CASE("faces: central has three sides, vertex face has valence sides") {
  Tessellation t(3, 3, 3, 5);
  RegionWeights w;
  CHECK(face_weight(t, central_face(0), w) == Rat(1));
  auto cb = face_boundary(t, central_face(0));
  CHECK(cb.size() == 3);
  for (auto& [arc, other] : cb) CHECK(other >= static_cast<int>(t.tris().size()));

  int vf = vertex_face(t, 0);
  CHECK(face_weight(t, vf, w) == Rat(6));
  auto vb = face_boundary(t, vf);
  CHECK(vb.size() == 6);
  for (auto& [arc, other] : vb) CHECK(other < static_cast<int>(t.tris().size()));

  RegionWeights w2;
  w2.central = rat(1, 2);
  w2.corner[0] = rat(3, 1);
  CHECK(face_weight(t, central_face(0), w2) == rat(1, 2));
  CHECK(face_weight(t, vf, w2) == Rat(18));
}

TEST_CASE("left face: disc side of the inscribed triangle is the central face") {
  Tessellation t(3, 3, 3, 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(left_face(t, Dart{0, j, +1}) == central_face(0));
    CHECK(right_face(t, Dart{0, j, +1}) == vertex_face(t, cut_vertex(t, Dart{0, j, +1})));
    CHECK(left_face(t, Dart{0, j, -1}) == vertex_face(t, cut_vertex(t, Dart{0, j, -1})));
  }
  // Lower triangles are mirrored: forward darts see the vertex face on the left.
  int lower = t.tris()[0].nbr[0];
  REQUIRE(lower != -1);
  CHECK_FALSE(t.tris()[lower].upper);
  for (int j = 0; j < 3; ++j) {
    CHECK(left_face(t, Dart{lower, j, +1}) == vertex_face(t, cut_vertex(t, Dart{lower, j, +1})));
    CHECK(left_face(t, Dart{lower, j, -1}) == central_face(lower));
  }
}

TEST_CASE("deterministic construction") {
  Tessellation t1(2, 3, 7, 5);
  Tessellation t2(2, 3, 7, 5);
  REQUIRE(t1.tris().size() == t2.tris().size());
  for (size_t i = 0; i < t1.tris().size(); ++i) {
    CHECK(t1.tris()[i].v == t2.tris()[i].v);
    CHECK(t1.tris()[i].nbr == t2.tris()[i].nbr);
    CHECK(t1.tris()[i].upper == t2.tris()[i].upper);
  }
}
