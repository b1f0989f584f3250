#pragma once

#include <optional>
#include <vector>

#include "wtwist/weight_system.hpp"

namespace wtwist {

// Input of the basic construction: two hypersurfaces, each of the shape
// {x_0^ell + p(x_1..x_n) = 0} with the distinguished pure-power variable at
// index 0, of degrees ell*w_0 and ell*v_0 respectively.
struct TwistInput {
  WeightedHypersurface v1;
  WeightedHypersurface v2;
  Int ell;
};

struct TwistResult {
  // {p(z) - q(t) = 0} on the interleaved weights
  // (v_0 w_1, ..., v_0 w_n, w_0 v_1, ..., w_0 v_m); NOT auto-normalized.
  WeightedHypersurface image;
  Int quotient_order;   // order of the cyclic group folded away per sheet
  Int gcd_w0_v0_ell;
  bool generically_finite;  // the map is ell:1 exactly when this gcd is 1
};

TwistResult twist(const TwistInput& in);

struct QuotientCheck {
  Int gcd;  // gcd(w_0, v_0, ell)
  bool is_ell_to_one;
};

QuotientCheck quotient_check(const TwistInput& in);

// Exact verification that the defining polynomial of the image pulls back to
// zero on V1 x V2: each p-term transports x_0-degree ell, each q-term
// transports y_0-degree ell, and the two shortcuts x_0^ell = -p, y_0^ell = -q
// cancel.  Evaluated at caller-supplied rational points (no roots of unity
// are ever taken).
bool substitution_identity_holds(const TwistInput& in,
                                 const std::vector<Rat>& x_tail,
                                 const std::vector<Rat>& y_tail);

struct CyReport {
  bool sufficient;  // degree equals the weight sum
  Int genus_count;  // sections of the dualizing sheaf, by monomial count
  bool exceptional_candidate;  // not sufficient, yet genus_count == 1
  // Present when the hypersurface is a twist image:
  std::optional<bool> fiber_cy;  // sum v_j == ell * v_0
  std::optional<bool> total_cy;  // v0*sum_{i>0} w_i + w0*sum_{j>0} v_j == v0*w0*ell
  // Distinguished weight 1 on the curve side: the pencil structure only
  // becomes an honest fibration after a birational modification.
  std::optional<bool> fibration_needs_modification;
};

CyReport cy_conditions(const WeightedHypersurface& x,
                       const std::optional<TwistInput>& from = {});

struct FermatPartitionResult {
  std::vector<WeightedHypersurface> factors;  // sign-adjusted Fermat factors
  std::vector<TwistResult> folds;             // applied left to right
  WeightedHypersurface final_image;  // all-plus Fermat, n - lambda + 2 vars
  Int fold_quotient_order;           // d per fold
};

// Splits the degree-d Fermat data n = n_1 + ... + n_lambda (each part >= 2,
// n > 3) into lambda Fermat factors and folds them pairwise; each fold is a
// twist with all weights 1 and ell = d.
FermatPartitionResult fermat_partition(const Int& d, const Int& n,
                                       const std::vector<Int>& partition);

struct GeneralizedTwistInput {
  WeightedHypersurface v1;  // {x_0^mu + p = 0} in P(w)
  WeightSystem v;           // (v_0, ..., v_m)
  Int nu;                   // order of the distinguished action upstairs
  // Optional explicit pieces of the upstairs equations, as polynomials over
  // P(v) in the variables y_1..y_m (y_0-exponent zero):
  std::optional<WeightedPolynomial> p11;  // degree v_1
  std::optional<WeightedPolynomial> p20;  // degree d - v_1, d = sum(v)
};

struct GeneralizedTwistResult {
  CompleteIntersection upstairs;  // in P(1,1) x P(v), bidegrees [1,v1],[1,d-v1]
  CompleteIntersection image;     // in P(1,1) x P(w1 v0,..,wn v0, w0 v1,..,w0 vm)
  Int mu;                         // (d - v_1)/v_0 == v_1 (nu - 1)/v_0
  Int ell;                        // gcd(mu, nu)
  bool identity_checked;  // degree bookkeeping of both displayed equations
};

GeneralizedTwistResult generalized_twist(const GeneralizedTwistInput& in);

// Canonical representative of a weighted hypersurface: normalize, sort the
// variables by weight (stable), sort terms lexicographically by exponent
// vector, then canonicalize the coefficients.  When the exponent matrix
// (with the global-scale column appended) has full row rank, diagonal
// rescaling over an algebraically closed field makes every coefficient +1
// and the representative uses that; otherwise only the leading coefficient
// is scaled to +1.
WeightedHypersurface canonical_form(const WeightedHypersurface& x);

}  // namespace wtwist
