#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtwist/twist.hpp"
#include "wtwist/weight_system.hpp"

namespace wtwist {

// A fiber the enumerators can twist with: {y0^ell + q = 0}, distinguished
// variable first.
struct CatalogFiber {
  std::string name;
  WeightedHypersurface surface;
  Int ell;  // degree / v0
};

// The three constant-modulus elliptic curves with extra automorphisms.
const std::vector<CatalogFiber>& elliptic_catalog();
// The three K3 surfaces with a non-symplectic cyclic action of maximal order
// for their weights.
const std::vector<CatalogFiber>& k3_catalog();

struct SearchBounds {
  Int max_w0 = 11;
  // Allowed quotient orders; empty means every catalog order.
  std::vector<Int> ells;
  bool allow_chain = true;
  bool attach_chi = false;
  // Appended to the default catalog (matched by weight count per family).
  std::vector<CatalogFiber> extra_fibers;
};

struct TableRow {
  std::vector<Int> base;    // curve (3) or surface (4) weights
  std::vector<Int> fiber;   // fiber weights
  Int ell;
  std::vector<Int> image;   // raw interleaved image weights
  Int degree;
  std::optional<Int> chi;
  std::string fibers;           // merged singular-fiber list, "" if n/a
  std::string base_polynomial;  // explicit equation when one was built
  std::string note;             // "" or "not in reference tables"
};

// Twisted K3 surfaces: curve bases (w1 + w2 = w0, coprime) times the
// elliptic catalog, with the singular-fiber classification attached.
std::vector<TableRow> enumerate_k3(const SearchBounds& bounds);

// Elliptically fibered threefolds: Fermat surface bases
// (w1 + w2 + w3 = w0, gcd 1) times the elliptic catalog.
std::vector<TableRow> enumerate_cy3_elliptic(const SearchBounds& bounds);

// K3-fibered threefolds: curve bases times the K3 catalog (Fermat or chain),
// plus non-Fermat surface bases times the elliptic catalog where the image
// weight system admits a quasismooth member (chain equations attached when
// the forest search finds one).
std::vector<TableRow> enumerate_cy3_k3fibered(const SearchBounds& bounds);

// Builds the surface-base x elliptic-fiber row directly (the spot-check path
// that skips the sweep); nullopt when the candidate fails the filters.
std::optional<TableRow> build_surface_row(const WeightSystem& base,
                                          const CatalogFiber& fiber,
                                          bool allow_chain, bool attach_chi);

struct LatticeDatum {
  Int order;
  std::string s_lattice;  // Picard lattice of the maximizing surface
  std::string t_lattice;  // transcendental lattice
};

struct AutomorphismCheck {
  bool admissible;  // a purely non-symplectic action of this order can exist
  std::optional<LatticeDatum> lattice;  // for the unimodular orders
};

AutomorphismCheck validate_k3_automorphism_order(const Int& order);

// ---- curated cross-check data ----------------------------------------------
// Rows bundled for recall testing of the enumerators; an emitted row missing
// from these lists is marked "not in reference tables".

struct ReferenceTwistRow {
  std::vector<Int> base;
  std::vector<Int> fiber;
  Int ell;
  std::vector<Int> image;
  Int degree;
  std::string fibers;       // "" when the source table does not list them
  std::optional<Int> chi;
  std::optional<Int> h11;
};

const std::vector<ReferenceTwistRow>& reference_k3_rows();
const std::vector<ReferenceTwistRow>& reference_cy3_elliptic_rows();
const std::vector<ReferenceTwistRow>& reference_cy3_k3_rows();
const std::vector<ReferenceTwistRow>& reference_large_chi_rows();

}  // namespace wtwist
