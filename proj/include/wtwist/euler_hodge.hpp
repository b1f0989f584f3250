#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtwist/twist.hpp"
#include "wtwist/weight_system.hpp"

namespace wtwist {

// Orbifold Euler number of a degree-d hypersurface in P(w), by the exact
// double character sum over the cyclic actions; NonIntegralResult when the
// sum fails to close (invalid data).
Int orbifold_euler(const WeightSystem& ws, const Int& degree);

// Sections of the dualizing sheaf, counted as monomials of degree d - sum w.
Int geometric_genus(const WeightSystem& ws, const Int& degree);

struct HodgePair {
  Int h11;
  Int h21;
};

// h21 from chi = 2(h11 - h21); NegativeHodge when impossible.
HodgePair cy3_hodge(const Int& chi, const Int& h11);

struct ConifoldData {
  HodgePair hodge;
  Int nodes;      // P
  Int relations;  // R
};

// Small resolution bookkeeping: (h11 + R, h21 - (P - R)).
HodgePair conifold_transition(const ConifoldData& data);

// Genus of a smooth complete intersection of two hypersurfaces in P(w):
// 2g - 2 = (d1 d2 / prod w) (d1 + d2 - sum w); NonIntegerGenus when the
// right side is odd-ended or yields g < 0.
Int ci_curve_genus(const Int& d1, const Int& d2, const WeightSystem& ws);

// The two fourfold presentations glued along one hypersurface: the left one
// a plain twist, the right one a generalized twist, with the singular locus
// and the conifold count that separate them.
struct FourfoldTransitionReport {
  std::vector<Int> fiber_image;        // K3-fibered threefold fiber weights
  Int fiber_degree;
  std::vector<Int> left_image;         // plain-twist fourfold weights
  Int left_degree;
  std::vector<Int> right_image_second_factor;  // generalized-twist image P(..)
  std::vector<std::vector<Int>> right_bidegrees;
  Int sigma_genus;                     // genus of the common singular curve
  Rat node_count;                      // expected double points
  bool consistent;                     // all cross-checks in one flag
};

FourfoldTransitionReport fourfold_transition_report();

}  // namespace wtwist
