#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wtwist/weight_system.hpp"

namespace wtwist {

struct NormalizeResult {
  WeightSystem ws;
  Int degree;
  std::optional<WeightedPolynomial> poly;
  // Reduction factors applied, in order (the initial global gcd first).
  std::vector<Int> factors;
};

// Removes well-formedness failures of a weighted projective space: first
// divides out a common factor of all weights, then repeatedly divides out the
// largest factor a > 1 shared by all weights but one (ties broken by the
// smallest untouched index).  The degree divides along; exponents of the
// untouched variable divide by a, all other exponents are unchanged.
// Throws NonDivisibleDegree / NonDivisibleExponent when the data cannot
// follow the reduction.
NormalizeResult normalize(const WeightSystem& ws, const Int& degree,
                          const std::optional<WeightedPolynomial>& poly = {});

// Number of monomials of the given weighted degree, by exact bounded
// enumeration.  restrict_to limits which variables may occur.
Int count_monomials(const WeightSystem& ws, const Int& degree,
                    const std::vector<std::size_t>* restrict_to = nullptr);

struct BezoutCount {
  Rat value;
  // Set when the count is not an integer (the intersection carries orbifold
  // multiplicity); the value is still meaningful as a rational.
  bool non_integer_count;
};

// Expected intersection count prod(degrees) / prod(weights) for a dimension-
// matched collection of hypersurfaces in P(ws).
BezoutCount weighted_bezout(const std::vector<Int>& degrees,
                            const WeightSystem& ws);

// Sum of pure powers x_i^(d / w_i); NonFermatWeights when some w_i does not
// divide d.
WeightedPolynomial build_fermat(const WeightSystem& ws, const Int& degree);

// Fermat terms where possible; for each variable without a pure power,
// searches for a chain monomial x_i^a * x_j (partner exponent 1, smallest
// feasible partner index, at most one incoming chain per variable, no
// cycles).  NonFermatWeights when some variable cannot be covered.  When
// `reserved` is set, that variable must carry a pure power and never serves
// as a chain partner (the distinguished variable of a cyclic quotient).
WeightedPolynomial build_chain(const WeightSystem& ws, const Int& degree,
                               std::optional<std::size_t> reserved = {});

// Quasismoothness of {poly = 0}: the affine cone is smooth away from the
// origin.  Delsarte-type polynomials (one head monomial per variable, chain
// targets forming a forest) are decided combinatorially; other shapes fall
// back to exact stratum analysis and may throw UnsupportedShape.
bool is_quasismooth(const WeightedPolynomial& poly);

// Whether a GENERIC hypersurface of the given degree is quasismooth, by the
// subset criterion: for every nonempty set I of variables there is either a
// monomial of degree d supported on I, or |I| monomials (supported on I)
// times |I| distinct external variables.  Decided by exact feasibility
// checks; no polynomial is constructed.
bool admits_quasismooth_member(const WeightSystem& ws, const Int& degree);

}  // namespace wtwist
