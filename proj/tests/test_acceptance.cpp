// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Every comparison is exact; there are no tolerances anywhere.
#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wtwist/errors.hpp"
#include "wtwist/euler_hodge.hpp"
#include "wtwist/fibration.hpp"
#include "wtwist/json_io.hpp"
#include "wtwist/resolve.hpp"
#include "wtwist/search.hpp"
#include "wtwist/twist.hpp"
#include "wtwist/wps_core.hpp"

using namespace wtwist;

namespace {

struct Failure {
  std::string reason;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

bool row_matches(const ReferenceTwistRow& ref, const TableRow& row) {
  return ref.base == row.base && ref.fiber == row.fiber &&
         ref.ell == row.ell && ref.image == row.image &&
         ref.degree == row.degree;
}

const TableRow* find_row(const std::vector<TableRow>& rows,
                         const ReferenceTwistRow& ref) {
  for (const TableRow& row : rows)
    if (row_matches(ref, row)) return &row;
  return nullptr;
}

WeightedHypersurface rebuild_base(const std::vector<Int>& weights,
                                  const Int& degree) {
  WeightSystem ws(weights);
  try {
    return WeightedHypersurface{build_fermat(ws, degree)};
  } catch (const domain_error&) {
    return WeightedHypersurface{build_chain(ws, degree, 0)};
  }
}

bool same_hypersurface(const WeightedHypersurface& a,
                       const WeightedHypersurface& b) {
  if (!(a.ambient() == b.ambient()) || a.degree() != b.degree()) return false;
  if (a.poly.terms().size() != b.poly.terms().size()) return false;
  for (std::size_t i = 0; i < a.poly.terms().size(); ++i) {
    if (!(a.poly.terms()[i].mono == b.poly.terms()[i].mono)) return false;
    if (a.poly.terms()[i].coeff != b.poly.terms()[i].coeff) return false;
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  expect(in.good(), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- criterion bodies -------------------------------------------------------

// Every reference K3 row is recalled with its exact singular-fiber multiset,
// and every emitted surface balances the rotation numbers and Euler sum.
void criterion_1() {
  SearchBounds bounds;
  bounds.max_w0 = 11;
  std::vector<TableRow> rows = enumerate_k3(bounds);
  for (const ReferenceTwistRow& ref : reference_k3_rows()) {
    const TableRow* row = find_row(rows, ref);
    expect(row != nullptr, "row missing for base " +
                               WeightSystem(ref.base).to_string());
    expect(row->fibers == ref.fibers,
           "fiber multiset mismatch on " + WeightSystem(ref.base).to_string() +
               ": " + row->fibers);
    expect(row->note.empty(), "reference row flagged as unknown");
  }
  for (const TableRow& row : rows) {
    WeightedHypersurface curve = rebuild_base(row.base, row.ell * row.base[0]);
    FibrationReport report =
        classify_elliptic_fibers(curve, WeightSystem(row.fiber), row.ell);
    expect(report.alpha_sum == Rat(2), "alpha sum is not 2");
    expect(report.euler_sum == 24, "euler sum is not 24");
  }
}

// Every reference elliptically fibered threefold is recalled exactly.
void criterion_2() {
  SearchBounds bounds;
  bounds.max_w0 = 14;
  std::vector<TableRow> rows = enumerate_cy3_elliptic(bounds);
  for (const ReferenceTwistRow& ref : reference_cy3_elliptic_rows()) {
    const TableRow* row = find_row(rows, ref);
    expect(row != nullptr, "row missing for base " +
                               WeightSystem(ref.base).to_string());
    expect(row->note.empty(), "reference row flagged as unknown");
  }
}

// Every K3-fibered reference row is recalled with its exact chi, and on the
// P(2,1,1) bases the orbifold value agrees with the fibration formula.
void criterion_3() {
  const std::array<long, 15> chis = {-192, -312, -960, -144, -228,
                                     -720, -120, -192, -624, -168,
                                     -132, -480, -72,  -108, -384};
  const auto& refs = reference_cy3_k3_rows();
  expect(refs.size() == chis.size(), "reference table size");
  for (std::size_t i = 0; i < refs.size(); ++i)
    expect(*refs[i].chi == chis[i], "curated chi drifted");

  SearchBounds bounds;
  bounds.max_w0 = 7;
  bounds.attach_chi = true;
  std::vector<TableRow> rows = enumerate_cy3_k3fibered(bounds);
  for (const ReferenceTwistRow& ref : refs) {
    const TableRow* row = find_row(rows, ref);
    expect(row != nullptr, "row missing for base " +
                               WeightSystem(ref.base).to_string());
    expect(row->chi.has_value(), "chi not attached");
    expect(*row->chi == *ref.chi,
           "chi mismatch on " + WeightSystem(ref.image).to_string());
    expect(row->note.empty(), "reference row flagged as unknown");

    if (ref.base == int_vec({2, 1, 1})) {
      // Second path: N singular fibers of Euler number 24 - mu on a base of
      // Euler number 2, N = ell * w0.
      WeightSystem fiber(ref.fiber);
      std::vector<Int> exps;
      for (std::size_t j = 1; j < fiber.size(); ++j)
        exps.push_back(exact_div(ref.ell * fiber[0], fiber[j]));
      FibrationEuler second =
          fibration_euler(ref.ell * Int(2), k3_fiber_datum(exps).fiber_euler);
      expect(second.value == *ref.chi, "fibration formula disagrees");
      expect(second.bound_satisfied.value_or(false), "bound not satisfied");
    }
  }
}

// Spot checks on the large-chi chain-equation rows.
void criterion_4() {
  const CatalogFiber& e3 = elliptic_catalog()[2];

  auto first = build_surface_row(WeightSystem(int_vec({581, 41, 42, 498})),
                                 e3, true, true);
  expect(first.has_value(), "first row filtered out");
  expect(first->chi.has_value() && *first->chi == 960, "chi != 960");
  HodgePair h1 = cy3_hodge(*first->chi, Int(491));
  expect(h1.h21 == 11, "h21 != 491 - 960/2");
  expect(first->base_polynomial == "x3^7 + x2^83 + x1^84*x2 + x0^6",
         "chain polynomial mismatch: " + first->base_polynomial);

  auto second = build_surface_row(WeightSystem(int_vec({372, 18, 41, 313})),
                                  e3, true, true);
  expect(second.has_value(), "second row filtered out");
  expect(second->chi.has_value() && *second->chi == 720, "chi != 720");
  HodgePair h2 = cy3_hodge(*second->chi, Int(377));
  expect(h2.h21 == 17, "h21 != 377 - 720/2");
  expect(second->base_polynomial == "x2*x3^7 + x1*x2^54 + x1^124 + x0^6",
         "chain polynomial mismatch: " + second->base_polynomial);
}

// Resolution arithmetic: the continued fraction, the star-shaped central
// curve, and the exotic blowdown.
void criterion_5() {
  expect(hj_expand(Int(11), Int(2)) == int_vec({6, 2}), "hj_expand(11,2)");

  std::vector<CyclicSingularity> branches = {
      {Int(2), Int(1)}, {Int(3), Int(1)}, {Int(11), Int(2)}};
  expect(central_self_intersection(branches, Int(66)) == Rat(1),
         "central self-intersection != 1");

  CurveConfig cfg = exotic_configuration();
  std::vector<std::string> steps = cfg.blowdown_to_minimal();
  expect(steps.size() == 3, "blowdown took " + std::to_string(steps.size()) +
                                " contractions");
  expect(cfg.curves().size() == 2, "wrong number of final curves");
  const ConfigCurve& cusp = cfg.curves()[cfg.index_of("E1")];
  expect(cusp.self_int == 0 && cusp.geom_genus == 0 && cusp.delta == 1,
         "image of E1 is not a cuspidal curve of arithmetic genus 1");
  const ConfigCurve& minus2 = cfg.curves()[cfg.index_of("E2")];
  expect(minus2.self_int == -2 && minus2.delta == 0, "E2 is not a (-2)-curve");
}

// The 20 interior generators of the vertex resolution cone.
void criterion_6() {
  using Triple = std::array<Int, 3>;
  auto t = [](long a, long b, long c) {
    return Triple{Int(a), Int(b), Int(c)};
  };
  std::vector<Triple> expected = {
      t(11, 2, 23), t(16, 3, 33), t(17, 3, 35), t(21, 4, 43), t(22, 4, 45),
      t(23, 4, 47), t(26, 5, 53), t(27, 5, 55), t(28, 5, 57), t(29, 5, 59),
      t(31, 6, 63), t(32, 6, 65), t(33, 6, 67), t(34, 6, 69), t(35, 6, 71),
      t(36, 7, 73), t(37, 7, 75), t(38, 7, 77), t(39, 7, 79), t(40, 7, 81)};
  expect(cone_lattice_points(Int(41), Int(7), Int(83)) == expected,
         "lattice point list differs");
}

// The one-off geometry suite.
void criterion_7() {
  expect(milnor_number(int_vec({11, 3, 2})) == 20, "milnor(11,3,2)");
  FibrationEuler fe = fibration_euler(Int(132), Int(4));
  expect(fe.value == -2592, "fibration_euler(132,4)");
  expect(geometric_genus(WeightSystem(int_vec({1, 1, 12, 44, 66})),
                         Int(132)) == 9,
         "geometric_genus");

  RuledCoverReport r = ruled_cover_discriminant(
      RuledCoverInput{Int(11), Int(132), Int(12), Int(2), Int(2)});
  expect(r.cover_euler == -1298, "cover euler");
  expect(r.delta_cinf == 24 && r.delta_f == 264, "discriminant class");
  expect(r.m12k_cinf == 24 && r.m12k_f == 168, "-12K class");
  expect(!r.matches, "the unbalanced cover must not match");

  // Euler bound over every enumerated K3 fibration with chi attached: the
  // d singular fibers each eat a positive Milnor number below 48.
  SearchBounds bounds;
  bounds.max_w0 = 11;
  bounds.attach_chi = true;
  std::vector<TableRow> rows = enumerate_cy3_k3fibered(bounds);
  int checked = 0;
  for (const TableRow& row : rows) {
    if (row.base.size() != 3 || !row.chi) continue;  // K3 fibers only
    expect(-48 * row.degree < *row.chi - 48 && *row.chi - 48 < 0,
           "Euler bound violated on image " +
               WeightSystem(row.image).to_string());
    ++checked;
  }
  expect(checked >= 15, "too few rows carried chi");
}

// Conifold bookkeeping.
void criterion_8() {
  HodgePair after = conifold_transition(
      ConifoldData{HodgePair{Int(5), Int(101)}, Int(32), Int(1)});
  expect(after.h11 == 6 && after.h21 == 70, "transition Hodge pair");

  BezoutCount nodes = weighted_bezout(int_vec({4, 4, 8, 8}),
                                      weight_system({4, 4, 1, 1, 2}));
  expect(nodes.value == Rat(32) && !nodes.non_integer_count, "node count");

  Int chi_before = 2 * (Int(5) - Int(101));
  Int chi_after = 2 * (after.h11 - after.h21);
  expect(chi_after - chi_before == 64 && chi_after - chi_before == 2 * Int(32),
         "chi delta is not twice the node count");
}

// Fourfold factorizations.
void criterion_9() {
  expect(ci_curve_genus(Int(16), Int(16), weight_system({4, 2, 1, 1})) == 385,
         "sigma genus");
  FourfoldTransitionReport r = fourfold_transition_report();
  expect(r.consistent, "fourfold report inconsistent");
  expect(r.sigma_genus == 385 && r.node_count == Rat(32),
         "singular-curve data");
  expect(r.right_bidegrees ==
             std::vector<std::vector<Int>>{int_vec({1, 8}), int_vec({1, 16})},
         "bidegrees");
}

// Two presentations of the double fibration collapse to one hypersurface.
void criterion_10() {
  WeightedHypersurface c6{build_fermat(weight_system({2, 1, 1}), Int(6))};
  WeightedHypersurface k12{build_fermat(weight_system({4, 1, 1, 6}), Int(12))};
  TwistResult route_a = twist({c6, k12, Int(3)});

  WeightedHypersurface c12{build_fermat(weight_system({2, 1, 1}), Int(12))};
  WeightedHypersurface k6{build_fermat(weight_system({1, 1, 1, 3}), Int(6))};
  TwistResult route_b = twist({c12, k6, Int(6)});

  NormalizeResult na = normalize(route_a.image.ambient(),
                                 route_a.image.degree(), route_a.image.poly);
  expect(na.ws == weight_system({2, 2, 1, 1, 6}) && na.degree == 12,
         "route A does not normalize to (2,2,1,1,6) degree 12");

  WeightedHypersurface ca = canonical_form(route_a.image);
  WeightedHypersurface cb = canonical_form(route_b.image);
  WeightedHypersurface fermat = canonical_form(
      WeightedHypersurface{build_fermat(weight_system({2, 2, 1, 1, 6}),
                                        Int(12))});
  expect(same_hypersurface(ca, cb), "the two routes disagree");
  expect(same_hypersurface(ca, fermat), "the routes miss the Fermat member");
}

// Property suites: idempotence, series oracle, continued-fraction round
// trips, the involution, and the golden enumeration files.
void criterion_11() {
  {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> size_dist(2, 6);
    std::uniform_int_distribution<int> weight_dist(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Int> ws;
      int n = size_dist(rng);
      for (int i = 0; i < n; ++i) ws.emplace_back(weight_dist(rng));
      WeightSystem system(ws);
      NormalizeResult once = normalize(system, system.product());
      expect(once.ws.is_normalized(), "normalize left a shared factor");
      NormalizeResult twice = normalize(once.ws, once.degree);
      expect(twice.ws == once.ws && twice.degree == once.degree &&
                 twice.factors.empty(),
             "normalize is not idempotent");
    }
  }
  {
    std::mt19937 rng(987654321u);
    std::uniform_int_distribution<int> size_dist(2, 5);
    std::uniform_int_distribution<int> weight_dist(1, 12);
    std::uniform_int_distribution<int> degree_dist(0, 40);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> ws;
      int n = size_dist(rng);
      for (int i = 0; i < n; ++i) ws.emplace_back(weight_dist(rng));
      std::uint64_t d = static_cast<std::uint64_t>(degree_dist(rng));
      std::vector<Int> coef(d + 1, 0);
      coef[0] = 1;
      for (const Int& w : ws) {
        std::uint64_t wu = to_u64_checked(w, 1u << 20, "weight");
        for (std::uint64_t j = wu; j <= d; ++j) coef[j] += coef[j - wu];
      }
      expect(count_monomials(WeightSystem(ws), Int(d)) == coef[d],
             "count_monomials disagrees with the power series");
    }
  }
  for (long alpha = 2; alpha <= 200; ++alpha) {
    for (long beta = 1; beta < alpha; ++beta) {
      if (int_gcd(Int(alpha), Int(beta)) != 1) continue;
      std::vector<Int> expansion = hj_expand(Int(alpha), Int(beta));
      expect(!expansion.empty() &&
                 expansion.size() <= static_cast<std::size_t>(alpha - 1),
             "expansion length out of range");
      for (const Int& entry : expansion)
        expect(entry >= 2, "expansion entry below 2");
      expect(hj_evaluate(expansion) == make_rat(Int(alpha), Int(beta)),
             "continued fraction does not round-trip");
    }
  }
  for (const KodairaFiber& f : kodaira_table()) {
    const KodairaFiber& dual = involution(f);
    expect(f.alpha + dual.alpha == Rat(1) && f.euler + dual.euler == 12 &&
               involution(dual).symbol == f.symbol,
           "involution broken at " + f.symbol);
  }
  {
    SearchBounds k3;
    k3.max_w0 = 11;
    std::string first = rows_to_csv(enumerate_k3(k3));
    std::string second = rows_to_csv(enumerate_k3(k3));
    expect(first == second, "enumeration is not deterministic");
    expect(first == slurp(std::string(WTWIST_GOLDEN_DIR) + "/k3_w0_11.csv"),
           "K3 golden file differs");

    SearchBounds elliptic;
    elliptic.max_w0 = 14;
    expect(rows_to_csv(enumerate_cy3_elliptic(elliptic)) ==
               slurp(std::string(WTWIST_GOLDEN_DIR) +
                     "/cy3_elliptic_w0_14.csv"),
           "elliptic golden file differs");
  }
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4,
      criterion_5, criterion_6, criterion_7, criterion_8,
      criterion_9, criterion_10, criterion_11};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "PASS";
    std::string detail;
    try {
      criteria[i]();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.reason;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    std::cout << "CRITERION " << (i + 1) << ": " << verdict;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
