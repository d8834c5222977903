#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qmirror/cover.hpp"
#include "qmirror/mpoly.hpp"
#include "qmirror/potential.hpp"

namespace qmirror {

// One boundary dart of a polygon walk in backend-neutral form.  The corner
// code describes the turn entering this dart: 0 straight, 1 odd, 2 even.
struct StepInfo {
  int8_t src = 0;    // node letter at the tail
  int8_t dest = 0;   // node letter at the head
  int8_t hemi = 0;   // 1 when the arc lies in an upper triangle
  int8_t agree = 0;  // 1 when traversed along the global arc orientation
  int8_t corner = 0;
  int8_t e = 0;      // markers crossed on this arc
  int8_t p = 0;
};

std::vector<StepInfo> reflect_steps(const std::vector<StepInfo>& steps);

// A cyclic-symmetry class of closed convex-cornered immersed discs.
struct Polygon {
  std::string canon;   // lex-minimal rotation of the decorated boundary
  std::string mirror;  // canonical encoding of the reflected class
  std::vector<int> word;           // corner letters in canonical order
  std::vector<int> corner_parity;  // 1 odd / 2 even, aligned with word
  std::vector<int> side_lengths;   // arcs from corner i to corner i+1
  std::vector<int> side_e;         // e-markers on that side
  std::vector<int> side_p;
  Rat area;
  int corners = 0;
  int s = 0;       // e-markers on the whole boundary
  int pcount = 0;  // p-markers
  int r = 1;       // cyclic symmetry order
  int disagreements = 0;  // darts running against the arc orientation
  bool positive = false;  // orientation agrees on the arc entering the first corner
  std::array<long, 3> expo = {0, 0, 0};  // corner monomial exponents
};

inline int raw_sign(const Polygon& p) {
  return (p.s + p.disagreements) % 2 == 0 ? +1 : -1;
}

Polygon make_polygon(const std::vector<StepInfo>& steps, const Rat& area);

struct EnumOptions {
  Rat cutoff = 1;
  RegionWeights weights;
  bool odd_corners_only = true;
  int min_corners = 1;
  int max_corners = 1 << 20;
  int threads = 1;
  long step_budget = 400'000'000;
  int max_retries = 5;
};

// All polygon classes of weighted area <= cutoff on a prebuilt patch.
// Throws NeedExtend when the patch is too small.
std::vector<Polygon> enumerate_on(const Tessellation& t, const EnumOptions& opt);

// Builds the patch itself, growing the radius on demand.
std::vector<Polygon> enumerate_polygons(int a, int b, int c, const EnumOptions& opt);

// Signed count over reflection pairs, assembled into the potential.
Potential assemble_potential(std::array<int, 3> abc, const std::vector<Polygon>& polys,
                             const Rat& cutoff, const RegionWeights& weights,
                             bool spherical_partial = false);

// Series precision used for a given cutoff: one weight quantum past it.
Rat potential_precision(const Rat& cutoff, const RegionWeights& weights);

}  // namespace qmirror
