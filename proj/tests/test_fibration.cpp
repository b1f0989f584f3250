#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "wtwist/errors.hpp"
#include "wtwist/fibration.hpp"
#include "wtwist/wps_core.hpp"

using namespace wtwist;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const domain_error& e) {
    return e.code();
  }
  return "";
}

WeightedHypersurface base_curve(std::initializer_list<long> ws, long degree) {
  WeightSystem w = weight_system(ws);
  Int d(degree);
  try {
    return WeightedHypersurface{build_fermat(w, d)};
  } catch (const domain_error&) {
    return WeightedHypersurface{build_chain(w, d, 0)};
  }
}

}  // namespace

TEST_CASE("kodaira_table basics") {
  const auto& table = kodaira_table();
  REQUIRE(table.size() == 7);
  CHECK(table[0].symbol == "II");
  CHECK(table[0].euler == 2);
  CHECK(table[0].alpha == make_rat(Int(1), Int(6)));
  CHECK(table[0].lattice.empty());
  CHECK(table[3].symbol == "I0*");
  CHECK(table[3].lattice == "D4");
  CHECK(table[6].symbol == "II*");
  CHECK(table[6].euler == 10);
  CHECK(table[6].lattice == "E8");

  CHECK(fiber_from_alpha(make_rat(Int(1), Int(4))).symbol == "III");
  CHECK(code_of([] {
          fiber_from_alpha(make_rat(Int(5), Int(7)));
        }) == errc::unbalanced_fibration());
}

TEST_CASE("involution pairs dual fibers") {
  for (const KodairaFiber& f : kodaira_table()) {
    const KodairaFiber& dual = involution(f);
    CHECK(f.alpha + dual.alpha == Rat(1));
    CHECK(f.euler + dual.euler == 12);
    CHECK(involution(dual).symbol == f.symbol);
  }
  CHECK(involution(kodaira_table()[0]).symbol == "II*");
  CHECK(involution(kodaira_table()[3]).symbol == "I0*");
}

TEST_CASE("classify_elliptic_fibers on the reference bases") {
  // 6 x IV over P(2,1,1), order 3.
  FibrationReport iv = classify_elliptic_fibers(
      base_curve({2, 1, 1}, 6), weight_system({1, 1, 1}), Int(3));
  CHECK(fibers_to_string(iv.fibers) == "6xIV");
  CHECK(iv.singular_count == 6);
  CHECK(iv.alpha_sum == Rat(2));
  CHECK(iv.euler_sum == 24);
  CHECK(iv.total_euler == 24);

  // 6 x III + I0* over P(3,1,2), order 4: the extra orbit at the end of the
  // weight-2 axis.
  FibrationReport mixed = classify_elliptic_fibers(
      base_curve({3, 1, 2}, 12), weight_system({1, 1, 2}), Int(4));
  CHECK(fibers_to_string(mixed.fibers) == "6xIII+1xI0*");
  CHECK(mixed.alpha_sum == Rat(2));
  CHECK(mixed.euler_sum == 24);
  CHECK(picard_summands(mixed.fibers) == "A1^6 (+) D4 (+) H");

  // 2 x II + 2 x II* over P(11,5,6), order 6: a chain monomial parks one
  // fiber at the axis end, the pure power contributes the other.
  FibrationReport big = classify_elliptic_fibers(
      base_curve({11, 5, 6}, 66), weight_system({1, 2, 3}), Int(6));
  CHECK(fibers_to_string(big.fibers) == "2xII+2xII*");
  CHECK(big.alpha_sum == Rat(2));
  CHECK(big.euler_sum == 24);
  CHECK(picard_summands(big.fibers) == "E8^2 (+) H");

  CHECK(code_of([] {
          classify_elliptic_fibers(base_curve({2, 1, 1}, 6),
                                   weight_system({1, 1, 3}), Int(3));
        }) == errc::validation());
  CHECK(code_of([] {
          classify_elliptic_fibers(base_curve({2, 1, 1}, 6),
                                   weight_system({1, 2, 3}), Int(6));
        }) == errc::degree_mismatch());
}

TEST_CASE("alpha_necessary_condition") {
  AlphaCondition good = alpha_necessary_condition(
      {{Int(6), make_rat(Int(1), Int(4))}, {Int(1), make_rat(Int(1), Int(2))}});
  CHECK(good.alpha_sum == Rat(2));
  CHECK(good.is_cy_candidate);

  AlphaCondition bad = alpha_necessary_condition(
      {{Int(5), make_rat(Int(1), Int(4))}});
  CHECK(!bad.is_cy_candidate);
}

TEST_CASE("milnor numbers and K3 fiber data") {
  CHECK(milnor_number(int_vec({11, 3, 2})) == 20);
  CHECK(milnor_number(int_vec({2})) == 1);
  CHECK(code_of([] { milnor_number(int_vec({3, 1})); }) == errc::validation());
  CHECK(code_of([] { milnor_number({}); }) == errc::validation());

  K3FiberDatum datum = k3_fiber_datum(int_vec({6, 3, 3}));
  CHECK(datum.milnor == 20);
  CHECK(datum.fiber_euler == 4);
  CHECK(k3_fiber_datum(int_vec({6, 4, 2})).fiber_euler == 9);
  CHECK(k3_fiber_datum(int_vec({7, 3, 2})).fiber_euler == 12);
}

TEST_CASE("fibration_euler and the degeneration bound") {
  FibrationEuler big = fibration_euler(Int(132), Int(4));
  CHECK(big.value == -2592);
  REQUIRE(big.bound_satisfied.has_value());
  CHECK(*big.bound_satisfied);

  FibrationEuler none = fibration_euler(Int(0), Int(4));
  CHECK(none.value == 48);
  CHECK(!none.bound_satisfied.has_value());

  FibrationEuler other = fibration_euler(Int(5), Int(3), Int(12), Int(2));
  CHECK(other.value == -21);
  CHECK(!other.bound_satisfied.has_value());

  CHECK(code_of([] {
          fibration_euler(Int(-1), Int(4));
        }) == errc::validation());
}

TEST_CASE("extract_fiber") {
  WeightedHypersurface total{
      build_fermat(weight_system({1, 1, 2, 4, 4}), Int(12))};
  WeightedHypersurface fiber = extract_fiber(total, 0, 1);
  CHECK(fiber.ambient() == weight_system({1, 1, 2, 2}));
  CHECK(fiber.degree() == 6);
  CHECK(fiber.poly.to_string() == "x3^3 + x2^3 + x1^6 + 2*x0^6");

  // Restricting along a weight > 1 pencil member gives a cover.
  CHECK(code_of([] {
          extract_fiber(WeightedHypersurface{build_fermat(
                            weight_system({2, 1, 4}), Int(8))},
                        0, 2);
        }) == errc::unsafe_elimination());
  // The reverse divisibility gives a quotient.
  CHECK(code_of([] {
          extract_fiber(WeightedHypersurface{build_fermat(
                            weight_system({2, 1, 1}), Int(6))},
                        0, 1);
        }) == errc::unsafe_elimination());
  // Incomparable weights pair no monomial pencil at all.
  CHECK(code_of([] {
          extract_fiber(WeightedHypersurface{build_fermat(
                            weight_system({1, 2, 3}), Int(6))},
                        1, 2);
        }) == errc::unsafe_elimination());
  CHECK(code_of([] {
          extract_fiber(WeightedHypersurface{build_fermat(
                            weight_system({1, 1, 2}), Int(4))},
                        1, 1);
        }) == errc::validation());
}

TEST_CASE("ruled_cover_discriminant") {
  // The 11-fold cover branched in 132 points, mapping to the index-12
  // surface: the discriminant overshoots -12K in the fiber direction.
  RuledCoverReport r = ruled_cover_discriminant(
      RuledCoverInput{Int(11), Int(132), Int(12), Int(2), Int(2)});
  CHECK(r.cover_euler == -1298);
  CHECK(r.sigma.a == 11);
  CHECK(r.sigma.b == 0);
  CHECK(r.delta_cinf == 24);
  CHECK(r.delta_f == 264);
  CHECK(r.m12k_cinf == 24);
  CHECK(r.m12k_f == 168);
  CHECK(!r.matches);

  // A balanced double cover: delta equals -12K.
  RuledCoverReport ok = ruled_cover_discriminant(
      RuledCoverInput{Int(2), Int(4), Int(2), Int(12), Int(0)});
  CHECK(ok.cover_euler == 0);
  CHECK(ok.sigma.a == 2);
  CHECK(ok.sigma.b == 0);
  CHECK(ok.delta_cinf == 24);
  CHECK(ok.delta_f == 48);
  CHECK(ok.m12k_f == 48);
  CHECK(ok.matches);

  CHECK(code_of([] {
          ruled_cover_discriminant(
              RuledCoverInput{Int(2), Int(1), Int(1), Int(1), Int(1)});
        }) == errc::no_integral_class());

  RuledCoverReport section = ruled_cover_discriminant(
      RuledCoverInput{Int(1), Int(0), Int(3), Int(1), Int(0)});
  CHECK(section.cover_euler == 2);
  CHECK(section.sigma.a == 1);
  CHECK(section.sigma.b == 0);
}

TEST_CASE("ruled_family_table") {
  const auto& rows = ruled_family_table();
  REQUIRE(rows.size() == 5);
  CHECK(rows[3].k == 7);
  CHECK(rows[3].n == 12);
  CHECK(rows[3].euler == -70);
  CHECK(rows[3].fiber_at_infinity == "II*");
  for (const RuledFamilyDatum& row : rows) {
    CHECK(row.n == 2 * (row.k - 1));
    CHECK(row.euler == 2 * row.k * (2 - row.k));
  }
}
