#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "wtwist/errors.hpp"
#include "wtwist/search.hpp"
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

}  // namespace

TEST_CASE("catalogs") {
  const auto& es = elliptic_catalog();
  REQUIRE(es.size() == 3);
  CHECK(es[0].ell == 3);
  CHECK(es[1].ell == 4);
  CHECK(es[2].ell == 6);
  CHECK(es[2].surface.ambient() == weight_system({1, 2, 3}));
  CHECK(es[2].surface.degree() == 6);

  const auto& ks = k3_catalog();
  REQUIRE(ks.size() == 3);
  CHECK(ks[0].ell == 6);
  CHECK(ks[1].ell == 12);
  CHECK(ks[2].ell == 42);
  CHECK(ks[2].surface.ambient() == weight_system({1, 6, 14, 21}));
}

TEST_CASE("reference tables have the curated row counts") {
  CHECK(reference_k3_rows().size() == 11);
  CHECK(reference_cy3_elliptic_rows().size() == 37);
  CHECK(reference_cy3_k3_rows().size() == 15);
  CHECK(reference_large_chi_rows().size() == 11);
}

TEST_CASE("enumerate_k3 recalls every reference surface") {
  SearchBounds bounds;
  bounds.max_w0 = 11;
  std::vector<TableRow> rows = enumerate_k3(bounds);
  CHECK(rows.size() == 19);

  for (const ReferenceTwistRow& ref : reference_k3_rows()) {
    const TableRow* row = find_row(rows, ref);
    REQUIRE_MESSAGE(row != nullptr, "missing reference base");
    CHECK(row->fibers == ref.fibers);
    CHECK(row->note.empty());
    CHECK(!row->base_polynomial.empty());
  }
  for (const TableRow& row : rows) {
    CHECK(!row.fibers.empty());
    bool in_reference = false;
    for (const ReferenceTwistRow& ref : reference_k3_rows())
      if (row_matches(ref, row)) in_reference = true;
    CHECK(row.note.empty() == in_reference);
  }
}

TEST_CASE("enumerate_k3 honors bounds") {
  SearchBounds only6;
  only6.max_w0 = 11;
  only6.ells = int_vec({6});
  for (const TableRow& row : enumerate_k3(only6)) CHECK(row.ell == 6);

  // The order-66 surface needs a chain equation on its base.
  SearchBounds no_chain;
  no_chain.max_w0 = 11;
  no_chain.allow_chain = false;
  for (const TableRow& row : enumerate_k3(no_chain))
    CHECK(row.base != int_vec({11, 5, 6}));

  // Extra fibers join the sweep only when the variable count matches.
  SearchBounds extra;
  extra.max_w0 = 3;
  extra.extra_fibers.push_back(k3_catalog()[0]);
  CHECK(enumerate_k3(extra).size() == enumerate_k3([] {
          SearchBounds plain;
          plain.max_w0 = 3;
          return plain;
        }()).size());
}

TEST_CASE("enumerate_cy3_elliptic recalls the reference table") {
  SearchBounds bounds;
  bounds.max_w0 = 14;
  std::vector<TableRow> rows = enumerate_cy3_elliptic(bounds);
  CHECK(rows.size() == 47);
  for (const ReferenceTwistRow& ref : reference_cy3_elliptic_rows()) {
    const TableRow* row = find_row(rows, ref);
    REQUIRE_MESSAGE(row != nullptr, "missing reference base");
    CHECK(row->note.empty());
  }
}

TEST_CASE("enumerate_cy3_k3fibered attaches chi on the curve family") {
  SearchBounds bounds;
  bounds.max_w0 = 7;
  bounds.attach_chi = true;
  std::vector<TableRow> rows = enumerate_cy3_k3fibered(bounds);
  for (const ReferenceTwistRow& ref : reference_cy3_k3_rows()) {
    const TableRow* row = find_row(rows, ref);
    REQUIRE_MESSAGE(row != nullptr, "missing reference base");
    REQUIRE(row->chi.has_value());
    CHECK(*row->chi == *ref.chi);
    CHECK(row->note.empty());
  }
}

TEST_CASE("build_surface_row spot checks") {
  const CatalogFiber& e3 = elliptic_catalog()[2];

  auto big = build_surface_row(WeightSystem(int_vec({581, 41, 42, 498})), e3,
                               true, true);
  REQUIRE(big.has_value());
  CHECK(big->image == int_vec({41, 42, 498, 1162, 1743}));
  CHECK(big->degree == 3486);
  REQUIRE(big->chi.has_value());
  CHECK(*big->chi == 960);
  CHECK(big->base_polynomial == "x3^7 + x2^83 + x1^84*x2 + x0^6");
  CHECK(big->note.empty());

  // No explicit Fermat or chain member exists over this base, yet the image
  // weight system still certifies a quasismooth representative.
  auto certificate = build_surface_row(
      WeightSystem(int_vec({385, 28, 31, 326})), e3, true, true);
  REQUIRE(certificate.has_value());
  CHECK(certificate->base_polynomial.empty());
  REQUIRE(certificate->chi.has_value());
  CHECK(*certificate->chi == 744);
  CHECK(certificate->note.empty());

  CHECK(code_of([&] {
          build_surface_row(WeightSystem(int_vec({2, 1, 1})), e3, true, false);
        }) == errc::validation());
  CHECK(code_of([&] {
          build_surface_row(WeightSystem(int_vec({5, 1, 1, 1})), e3, true,
                            false);
        }) == errc::validation());
}

TEST_CASE("validate_k3_automorphism_order") {
  AutomorphismCheck top = validate_k3_automorphism_order(Int(66));
  CHECK(top.admissible);
  REQUIRE(top.lattice.has_value());
  CHECK(top.lattice->s_lattice == "U");
  CHECK(top.lattice->t_lattice == "U (+) U (+) E8 (+) E8");

  AutomorphismCheck mid = validate_k3_automorphism_order(Int(42));
  CHECK(mid.admissible);
  REQUIRE(mid.lattice.has_value());
  CHECK(mid.lattice->s_lattice == "U (+) E8");
  CHECK(mid.lattice->t_lattice == "U (+) U (+) E8");

  AutomorphismCheck low = validate_k3_automorphism_order(Int(12));
  REQUIRE(low.lattice.has_value());
  CHECK(low.lattice->s_lattice == "U (+) E8 (+) E8");
  CHECK(low.lattice->t_lattice == "U (+) U");

  AutomorphismCheck beyond = validate_k3_automorphism_order(Int(67));
  CHECK(!beyond.admissible);
  CHECK(!beyond.lattice.has_value());

  AutomorphismCheck plain = validate_k3_automorphism_order(Int(7));
  CHECK(plain.admissible);
  CHECK(!plain.lattice.has_value());
}

TEST_CASE("enumeration is deterministic") {
  SearchBounds bounds;
  bounds.max_w0 = 8;
  std::vector<TableRow> first = enumerate_k3(bounds);
  std::vector<TableRow> second = enumerate_k3(bounds);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].base == second[i].base);
    CHECK(first[i].image == second[i].image);
    CHECK(first[i].fibers == second[i].fibers);
    CHECK(first[i].base_polynomial == second[i].base_polynomial);
  }
}
