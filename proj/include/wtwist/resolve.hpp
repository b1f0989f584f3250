#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wtwist/weight_system.hpp"

namespace wtwist {

// Cyclic quotient singularity of type (1/alpha)(1, beta): gcd = 1 and
// 1 <= beta < alpha (alpha = 1 is the smooth point).
struct CyclicSingularity {
  Int alpha;
  Int beta;
};

// Ceiling continued-fraction expansion alpha/beta = [b1, ..., bk]; every
// entry is >= 2 and the string resolves the singularity by a chain of
// rational curves of self-intersections -b_i.  alpha = 1 gives [].
std::vector<Int> hj_expand(const Int& alpha, const Int& beta);

// Evaluates [b1, ..., bk] back to alpha/beta (the round trip of hj_expand).
Rat hj_evaluate(const std::vector<Int>& string);

// The beta seen by a local chart of weight k: k * beta == 1 mod alpha.
// NotCoprime when k is not invertible; alpha = 1 returns 0 (smooth).
Int beta_from_weight(const Int& alpha, const Int& k);

// Self-intersection of the central curve of a star-shaped resolution:
// b = -1/product + sum beta_i/alpha_i.  The caller supplies the product
// explicitly (it need not factor through the alphas).
Rat central_self_intersection(
    const std::vector<CyclicSingularity>& branches, const Int& product);

bool is_exceptional_first_kind(const Rat& b, const Int& genus);

// ---- curve configurations and blowdowns ------------------------------------

struct ConfigCurve {
  std::string name;
  Int self_int;
  Int geom_genus;  // genus of the normalization
  Int delta;       // arithmetic-genus excess collected from singular points
};

// Curves on a smooth surface with pairwise intersection multiplicities.
class CurveConfig {
 public:
  void add_curve(std::string name, Int self_int, Int geom_genus = 0,
                 Int delta = 0);
  void add_intersection(const std::string& a, const std::string& b,
                        Int multiplicity = 1);

  const std::vector<ConfigCurve>& curves() const { return curves_; }
  Int intersection(std::size_t i, std::size_t j) const;
  std::size_t index_of(const std::string& name) const;

  // Contracts the first smooth rational (-1)-curve: every other curve X
  // gains (X.Z)^2 self-intersection, binomial(X.Z, 2) arithmetic genus, and
  // X.Y gains (X.Z)(Y.Z).  Returns the contracted curve's name;
  // NothingToContract when no curve is eligible.
  std::string blowdown_step();

  // Contracts until no (-1)-curve remains; returns the names in order.
  std::vector<std::string> blowdown_to_minimal(std::size_t max_steps = 64);

 private:
  std::vector<ConfigCurve> curves_;
  std::vector<std::vector<Int>> inter_;
};

// The hard-coded star-shaped configuration with three resolution branches
// [2], [3] and [6,2] around a central curve of self-intersection -1 (the
// value forced by central_self_intersection with product 66).
CurveConfig exotic_configuration();

// Lattice points (alpha, beta, gamma) with 0 < alpha < w0,
// w0*beta > w1*alpha, w0*gamma > w2*alpha and
// w0*(beta + gamma) <= alpha*(w1 + w2) + w0, in lexicographic order.  These
// index the interior generators of the resolution cone of the vertex.
std::vector<std::array<Int, 3>> cone_lattice_points(const Int& w0,
                                                    const Int& w1,
                                                    const Int& w2);

}  // namespace wtwist
