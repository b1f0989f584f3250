#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtwist/twist.hpp"
#include "wtwist/weight_system.hpp"

namespace wtwist {

// Singular-fiber types of constant-modulus elliptic fibrations coming from
// cyclic quotients, keyed by the rotation number alpha in (0,1).
struct KodairaFiber {
  std::string symbol;   // II, III, IV, I0*, IV*, III*, II*
  int euler;            // contribution to the Euler number
  Rat alpha;            // local rotation number
  std::string lattice;  // root lattice glued into the Picard group ("" = none)
};

const std::array<KodairaFiber, 7>& kodaira_table();

// Lookup by rotation number; UnbalancedFibration when alpha is not one of
// the seven quotient types.
const KodairaFiber& fiber_from_alpha(const Rat& alpha);

// The dual fiber: alpha -> 1 - alpha, euler -> 12 - euler.
const KodairaFiber& involution(const KodairaFiber& f);

struct FiberCount {
  Int count;
  KodairaFiber fiber;
};

struct FibrationReport {
  std::vector<FiberCount> fibers;  // merged by type, ordered by alpha
  Int singular_count;              // total number of singular fibers
  Rat alpha_sum;                   // must be 2
  Int euler_sum;                   // must be 24
  Int total_euler;                 // of the fibered surface
};

// Singular fibers of the elliptic surface obtained by twisting the curve
// {x0^ell + p(x1,x2) = 0} in P(w0,w1,w2) with an elliptic curve of weights
// elliptic_v and the same ell.  The fiber over a zero of p depends only on
// the local rotation number of the cyclic action.  UnbalancedFibration when
// the rotation numbers fail to sum to 2.
FibrationReport classify_elliptic_fibers(const WeightedHypersurface& curve,
                                         const WeightSystem& elliptic_v,
                                         const Int& ell);

struct AlphaCondition {
  Rat alpha_sum;
  bool is_cy_candidate;  // alpha_sum == 2
};

// Necessary condition on any collection of (count, rotation number) pairs.
AlphaCondition alpha_necessary_condition(
    const std::vector<std::pair<Int, Rat>>& fibers);

// "A2^6 (+) H" style description of the frame Picard contribution; the
// hyperbolic summand is always appended.
std::string picard_summands(const std::vector<FiberCount>& fibers);

// "6xIII+1xI0*" rendering of a merged fiber list.
std::string fibers_to_string(const std::vector<FiberCount>& fibers);

// Product of (m_i - 1) over the local exponents; each m_i >= 2.
Int milnor_number(const std::vector<Int>& exponents);

// Affine singular-fiber data of a K3-fibered threefold: the generic fiber
// degenerates to a surface whose Milnor number mu eats into the Euler
// number, e_s = 24 - mu.
struct K3FiberDatum {
  std::vector<Int> exponents;
  Int milnor;
  Int fiber_euler;  // 24 - milnor
};

K3FiberDatum k3_fiber_datum(const std::vector<Int>& exponents);

struct FibrationEuler {
  Int value;  // (base_euler - n) * generic + n * fiber_euler
  // Engaged when generic == 24 and n > 0: open bound
  // 48 - 24 n < value < 48 for honest K3 degenerations.
  std::optional<bool> bound_satisfied;
};

FibrationEuler fibration_euler(const Int& n, const Int& fiber_euler,
                               const Int& generic_euler = 24,
                               const Int& base_euler = 2);

// Restriction of a fibered hypersurface to a generic member of the pencil
// spanned by z_keep^(w_elim/w_keep) and z_elim: substitutes
// z_elim = z_keep^(w_elim) (kept weight must be 1) and normalizes.
// UnsafeElimination when the substitution would produce a cover or a
// quotient of the true fiber instead.
WeightedHypersurface extract_fiber(const WeightedHypersurface& x,
                                   std::size_t keep, std::size_t eliminate);

// ---- rational ruled surface bookkeeping -----------------------------------

// Divisor a*C0 + b*F on the ruled surface with C0^2 = n, C0.F = 1, F^2 = 0,
// C_inf = C0 - n F, K = -2 C0 + (n-2) F.
struct RuledClass {
  Int a, b;
};

struct RuledCoverInput {
  Int k;           // degree of the cyclic base cover
  Int branch;      // number of branch points on the section
  Int n;           // index of the ruled surface the cover maps to
  Int mult_sigma;  // discriminant multiplicity along the k-section
  Int mult_cinf;   // discriminant multiplicity along the infinity section
};

struct RuledCoverReport {
  Int cover_euler;          // 2k - branch*(k-1)
  RuledClass sigma;         // the k-section, from adjunction
  // Discriminant and -12K in the (C_inf, F) basis:
  Int delta_cinf, delta_f;
  Int m12k_cinf, m12k_f;
  bool matches;             // delta == -12K (the rational elliptic balance)
};

// Resolves the class of a k-section of known Euler number via adjunction and
// compares the discriminant against -12K.  NoIntegralClass when adjunction
// has no integral solution.
RuledCoverReport ruled_cover_discriminant(const RuledCoverInput& in);

struct RuledFamilyDatum {
  Int k;
  Int ell;          // 6 for k in {2,3,4,7}, 4 for k = 5
  Int n;            // 2(k-1)
  Int euler;        // 2k(2-k), as printed in the source family
  Int a, b;         // section class aC0 + bF
  Int nu;           // multiplicity of the infinity section in the discriminant
  std::string fiber_at_infinity;
};

// Curated one-parameter family data (reference values, not recomputed).
const std::vector<RuledFamilyDatum>& ruled_family_table();

}  // namespace wtwist
