#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

// Thrown when a walk or region fill reaches the generated patch boundary;
// callers extend the radius and retry.
struct NeedExtend : std::runtime_error {
  NeedExtend() : std::runtime_error("patch boundary reached") {}
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Area units per region type.
struct RegionWeights {
  Rat central = 1;
  std::array<Rat, 3> corner = {Rat(1), Rat(1), Rat(1)};  // indexed by vertex type
};

// Triangle tessellation of the universal cover of P^1(a,b,c), built
// combinatorially by breadth-first expansion with vertex-fan closure.
//
// Conventions baked into everything downstream:
//  - vertex slot in a triangle = vertex type (0,1,2 of valence 2a,2b,2c);
//  - edge letter j joins the two slots other than j (X=0 between types 1,2;
//    Y=1 between 2,0; Z=2 between 0,1);
//  - counterclockwise vertex cycle is (0,1,2) on upper triangles and
//    (0,2,1) on lower ones; colors alternate across every edge.
class Tessellation {
 public:
  struct Tri {
    std::array<int, 3> v;
    std::array<int, 3> nbr = {-1, -1, -1};
    std::array<int, 3> edge = {-1, -1, -1};
    bool upper = true;
    int depth = 0;
  };
  struct Vert {
    int type = 0;
    bool complete = false;
    bool alive = true;
    std::vector<int> tris;  // incident triangles, unordered
  };
  struct Edge {
    std::array<int, 2> tri = {-1, -1};  // [0] upper side, [1] lower side
    int letter = 0;
    bool alive = true;
  };

  Tessellation(int a, int b, int c, int radius);

  int a() const { return abc_[0]; }
  int b() const { return abc_[1]; }
  int c() const { return abc_[2]; }
  int valence(int type) const { return 2 * abc_[type]; }
  int radius() const { return radius_; }
  bool spherical() const { return spherical_; }

  const std::vector<Tri>& tris() const { return tris_; }
  const std::vector<Vert>& verts() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Slot of the counterclockwise predecessor / successor of slot s.
  int pred_slot(int tri, int s) const { return tris_[tri].upper ? (s + 2) % 3 : (s + 1) % 3; }
  int succ_slot(int tri, int s) const { return tris_[tri].upper ? (s + 1) % 3 : (s + 2) % 3; }

  // Triangle counterclockwise-next around vertex at slot s of tri; -1 at a gap.
  int ccw_next(int tri, int s) const;
  int cw_next(int tri, int s) const;

 private:
  void create_seed();
  int create_tri(std::array<int, 3> v, bool upper, int depth);
  void set_edge_side(int e, int t);
  void glue(int t1, int j, int t2);
  void close_fans(std::vector<int>& work);
  void merge_verts(int keep, int drop);
  void merge_edges(int keep, int drop);

  std::array<int, 3> abc_;
  int radius_;
  bool spherical_ = false;
  std::vector<Tri> tris_;
  std::vector<Vert> verts_;
  std::vector<Edge> edges_;
};

// A directed minimal arc of the medial graph: arc j of a triangle runs from
// the node on edge j to the node on edge (j+1)%3 (letter cycle X->Y->Z->X is
// the global orientation of the immersed circle); dir = -1 traverses it
// against that orientation.
struct Dart {
  int tri = -1;
  int j = 0;
  int dir = +1;

  friend bool operator==(const Dart& a, const Dart& b) {
    return a.tri == b.tri && a.j == b.j && a.dir == b.dir;
  }
  friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
};

inline Dart reversed(const Dart& d) { return {d.tri, d.j, -d.dir}; }

int tail_node(const Tessellation& t, const Dart& d);
int head_node(const Tessellation& t, const Dart& d);
inline int src_letter(const Dart& d) { return d.dir > 0 ? d.j : (d.j + 1) % 3; }
inline int dest_letter(const Dart& d) { return d.dir > 0 ? (d.j + 1) % 3 : d.j; }
inline bool arc_upper(const Tessellation& t, const Dart& d) { return t.tris()[d.tri].upper; }
// e-marker on upper Z-X arcs, p-marker on their lower reflections.
inline bool arc_e_marked(const Tessellation& t, const Dart& d) {
  return d.j == 2 && t.tris()[d.tri].upper;
}
inline bool arc_p_marked(const Tessellation& t, const Dart& d) {
  return d.j == 2 && !t.tris()[d.tri].upper;
}

// The four outgoing stubs at a node in counterclockwise order.  Throws
// NeedExtend when the node's edge lacks a triangle on either side.
std::array<Dart, 4> node_stubs(const Tessellation& t, int node);

// Continuations of d past its head node.  A corner (left turn) is odd when
// the exit stays in the same triangle, even when it crosses to the partner.
Dart straight_exit(const Tessellation& t, const Dart& d);
Dart left_exit(const Tessellation& t, const Dart& d);
inline bool corner_is_odd(const Dart& incoming, const Dart& exit) {
  return exit.tri == incoming.tri;
}

// Faces of the medial complement: one central face per triangle, one face per
// tessellation vertex.  Face ids: [0, ntris) central, ntris + v for vertices.
inline int central_face(int tri) { return tri; }
inline int vertex_face(const Tessellation& t, int v) {
  return static_cast<int>(t.tris().size()) + v;
}
int cut_vertex(const Tessellation& t, const Dart& d);
int left_face(const Tessellation& t, const Dart& d);
int right_face(const Tessellation& t, const Dart& d);
Rat face_weight(const Tessellation& t, int face, const RegionWeights& w);
// Arcs bounding a face, as undirected arc keys tri*3+j, with the face across
// each arc.  Throws NeedExtend for an incomplete vertex face.
std::vector<std::pair<int, int>> face_boundary(const Tessellation& t, int face);

}  // namespace qmirror
