#include "wtwist/search.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>

#include "wtwist/errors.hpp"
#include "wtwist/euler_hodge.hpp"
#include "wtwist/fibration.hpp"
#include "wtwist/wps_core.hpp"

namespace wtwist {

namespace {

CatalogFiber catalog_entry(std::string name, std::initializer_list<long> w,
                           long degree) {
  WeightSystem ws = weight_system(w);
  Int d(degree);
  return CatalogFiber{std::move(name),
                      WeightedHypersurface{build_fermat(ws, d)},
                      exact_div(d, ws[0])};
}

bool ell_allowed(const SearchBounds& bounds, const Int& ell) {
  if (bounds.ells.empty()) return true;
  return std::find(bounds.ells.begin(), bounds.ells.end(), ell) !=
         bounds.ells.end();
}

// Default catalog plus user extras of the matching variable count.
std::vector<CatalogFiber> fibers_for(const SearchBounds& bounds,
                                     const std::vector<CatalogFiber>& defaults,
                                     std::size_t weight_count) {
  std::vector<CatalogFiber> out = defaults;
  for (const CatalogFiber& f : bounds.extra_fibers)
    if (f.surface.ambient().size() == weight_count) out.push_back(f);
  return out;
}

std::vector<Int> interleaved_image(const std::vector<Int>& w,
                                   const std::vector<Int>& v) {
  std::vector<Int> image;
  for (std::size_t i = 1; i < w.size(); ++i) image.push_back(v[0] * w[i]);
  for (std::size_t j = 1; j < v.size(); ++j) image.push_back(w[0] * v[j]);
  return image;
}

bool matches_reference(const ReferenceTwistRow& ref, const TableRow& row) {
  return ref.base == row.base && ref.fiber == row.fiber && ref.ell == row.ell &&
         ref.image == row.image && ref.degree == row.degree;
}

std::string note_for(
    const TableRow& row,
    const std::vector<const std::vector<ReferenceTwistRow>*>& tables) {
  for (const auto* table : tables)
    for (const ReferenceTwistRow& ref : *table)
      if (matches_reference(ref, row)) return "";
  return "not in reference tables";
}

// Fermat equation if the weights allow it, otherwise a chain equation with
// the distinguished variable reserved; nullopt when neither exists.
std::optional<WeightedPolynomial> base_equation(const WeightSystem& ws,
                                                const Int& degree,
                                                bool allow_chain) {
  try {
    return build_fermat(ws, degree);
  } catch (const domain_error&) {
  }
  if (!allow_chain) return std::nullopt;
  try {
    return build_chain(ws, degree, 0);
  } catch (const domain_error&) {
  }
  return std::nullopt;
}

void attach_euler(TableRow& row) {
  try {
    row.chi = orbifold_euler(WeightSystem(row.image), row.degree);
  } catch (const domain_error&) {
    // leave unset: the raw image carries non-isolated quotient data
  }
}

void sort_rows(std::vector<TableRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const TableRow& a, const TableRow& b) {
              return std::tie(a.base, a.ell, a.fiber, a.image) <
                     std::tie(b.base, b.ell, b.fiber, b.image);
            });
}

// Necessary per-variable condition on the image weights, in machine words:
// every variable needs a pure power or a tail x_i^a x_j (a >= 0).  Filters
// the bulk of the sweep before any exact arithmetic runs.
bool fast_cover(const std::vector<std::uint64_t>& weights, std::uint64_t d) {
  for (std::uint64_t u : weights) {
    if (d % u == 0) continue;
    bool covered = false;
    for (std::uint64_t t : weights) {
      if (t == u || t > d) continue;
      if ((d - t) % u == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

long max_w0_of(const SearchBounds& bounds) {
  return static_cast<long>(to_u64_checked(bounds.max_w0, 5000, "max_w0"));
}

}  // namespace

const std::vector<CatalogFiber>& elliptic_catalog() {
  static const std::vector<CatalogFiber> fibers = {
      catalog_entry("E1", {1, 1, 1}, 3),
      catalog_entry("E2", {1, 1, 2}, 4),
      catalog_entry("E3", {1, 2, 3}, 6),
  };
  return fibers;
}

const std::vector<CatalogFiber>& k3_catalog() {
  static const std::vector<CatalogFiber> fibers = {
      catalog_entry("K1", {1, 1, 2, 2}, 6),
      catalog_entry("K2", {1, 2, 3, 6}, 12),
      catalog_entry("K3", {1, 6, 14, 21}, 42),
  };
  return fibers;
}

std::vector<TableRow> enumerate_k3(const SearchBounds& bounds) {
  std::vector<TableRow> rows;
  const auto fibers = fibers_for(bounds, elliptic_catalog(), 3);
  const long max_w0 = max_w0_of(bounds);
  for (long w0 = 2; w0 <= max_w0; ++w0) {
    for (long w1 = 1; 2 * w1 <= w0; ++w1) {
      const long w2 = w0 - w1;
      if (std::gcd(w1, w2) != 1) continue;
      const WeightSystem base({Int(w0), Int(w1), Int(w2)});
      for (const CatalogFiber& fiber : fibers) {
        if (!ell_allowed(bounds, fiber.ell)) continue;
        const Int d = fiber.ell * Int(w0);
        auto eq = base_equation(base, d, bounds.allow_chain);
        if (!eq) continue;
        const WeightedHypersurface curve{*eq};
        FibrationReport report{};
        try {
          report = classify_elliptic_fibers(curve, fiber.surface.ambient(),
                                            fiber.ell);
        } catch (const domain_error&) {
          continue;  // unbalanced or unsupported degeneration
        }
        const TwistResult tw = twist({curve, fiber.surface, fiber.ell});
        TableRow row;
        row.base = base.weights();
        row.fiber = fiber.surface.ambient().weights();
        row.ell = fiber.ell;
        row.image = tw.image.ambient().weights();
        row.degree = tw.image.degree();
        row.fibers = fibers_to_string(report.fibers);
        row.base_polynomial = eq->to_string();
        row.note = note_for(row, {&reference_k3_rows()});
        rows.push_back(std::move(row));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<TableRow> enumerate_cy3_elliptic(const SearchBounds& bounds) {
  std::vector<TableRow> rows;
  const auto fibers = fibers_for(bounds, elliptic_catalog(), 3);
  const long max_w0 = max_w0_of(bounds);
  for (long w0 = 3; w0 <= max_w0; ++w0) {
    for (long w1 = 1; 3 * w1 <= w0; ++w1) {
      for (long w2 = w1; 2 * w2 <= w0 - w1; ++w2) {
        const long w3 = w0 - w1 - w2;
        if (std::gcd(w1, std::gcd(w2, w3)) != 1) continue;
        const WeightSystem base({Int(w0), Int(w1), Int(w2), Int(w3)});
        for (const CatalogFiber& fiber : fibers) {
          if (!ell_allowed(bounds, fiber.ell)) continue;
          const Int d = fiber.ell * Int(w0);
          std::optional<WeightedPolynomial> eq;
          try {
            eq = build_fermat(base, d);
          } catch (const domain_error&) {
            continue;  // this list is the Fermat-type one
          }
          const TwistResult tw =
              twist({WeightedHypersurface{*eq}, fiber.surface, fiber.ell});
          TableRow row;
          row.base = base.weights();
          row.fiber = fiber.surface.ambient().weights();
          row.ell = fiber.ell;
          row.image = tw.image.ambient().weights();
          row.degree = tw.image.degree();
          row.base_polynomial = eq->to_string();
          row.note = note_for(row, {&reference_cy3_elliptic_rows()});
          if (bounds.attach_chi) attach_euler(row);
          rows.push_back(std::move(row));
        }
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::optional<TableRow> build_surface_row(const WeightSystem& base,
                                          const CatalogFiber& fiber,
                                          bool allow_chain, bool attach_chi) {
  if (base.size() != 4)
    throw domain_error(errc::validation(), "base must have four weights");
  if (base.sum() != 2 * base[0])
    throw domain_error(errc::validation(),
                       "base weights must satisfy w1 + w2 + w3 = w0");
  const Int d = fiber.ell * base[0];
  const std::vector<Int> image =
      interleaved_image(base.weights(), fiber.surface.ambient().weights());
  const WeightSystem image_ws{image};
  if (!admits_quasismooth_member(image_ws, d)) return std::nullopt;

  TableRow row;
  row.base = base.weights();
  row.fiber = fiber.surface.ambient().weights();
  row.ell = fiber.ell;
  row.image = image;
  row.degree = d;
  auto eq = base_equation(base, d, allow_chain);
  if (eq && is_quasismooth(*eq)) {
    // Cross-check the direct image weights against the twist construction.
    const TwistResult tw =
        twist({WeightedHypersurface{*eq}, fiber.surface, fiber.ell});
    if (tw.image.ambient().weights() != image ||
        tw.image.degree() != d)
      throw internal_error("twist image disagrees with interleaved weights");
    row.base_polynomial = eq->to_string();
  }
  row.note = note_for(row, {&reference_large_chi_rows()});
  if (attach_chi) attach_euler(row);
  return row;
}

std::vector<TableRow> enumerate_cy3_k3fibered(const SearchBounds& bounds) {
  std::vector<TableRow> rows;
  const long max_w0 = max_w0_of(bounds);

  // Family (a): curve bases times the K3 catalog.
  const auto k3_fibers = fibers_for(bounds, k3_catalog(), 4);
  for (long w0 = 2; w0 <= max_w0; ++w0) {
    for (long w1 = 1; 2 * w1 <= w0; ++w1) {
      const long w2 = w0 - w1;
      if (std::gcd(w1, w2) != 1) continue;
      const WeightSystem base({Int(w0), Int(w1), Int(w2)});
      for (const CatalogFiber& fiber : k3_fibers) {
        if (!ell_allowed(bounds, fiber.ell)) continue;
        const Int d = fiber.ell * Int(w0);
        auto eq = base_equation(base, d, bounds.allow_chain);
        if (!eq) continue;
        const TwistResult tw =
            twist({WeightedHypersurface{*eq}, fiber.surface, fiber.ell});
        TableRow row;
        row.base = base.weights();
        row.fiber = fiber.surface.ambient().weights();
        row.ell = fiber.ell;
        row.image = tw.image.ambient().weights();
        row.degree = tw.image.degree();
        row.base_polynomial = eq->to_string();
        row.note = note_for(row, {&reference_cy3_k3_rows()});
        if (bounds.attach_chi) attach_euler(row);
        rows.push_back(std::move(row));
      }
    }
  }

  // Family (b): non-Fermat surface bases times the elliptic catalog, kept
  // when the image weight system certifies a quasismooth member.  Fermat
  // surface bases already live in the elliptic enumeration.
  if (bounds.allow_chain) {
    const auto e_fibers = fibers_for(bounds, elliptic_catalog(), 3);
    for (long w0 = 3; w0 <= max_w0; ++w0) {
      for (long w1 = 1; 3 * w1 <= w0; ++w1) {
        for (long w2 = w1; 2 * w2 <= w0 - w1; ++w2) {
          const long w3 = w0 - w1 - w2;
          if (std::gcd(w1, std::gcd(w2, w3)) != 1) continue;
          for (const CatalogFiber& fiber : e_fibers) {
            if (!ell_allowed(bounds, fiber.ell)) continue;
            const std::uint64_t ell_u =
                to_u64_checked(fiber.ell, 1u << 20, "ell");
            const std::uint64_t d_u = ell_u * static_cast<std::uint64_t>(w0);
            const std::uint64_t u1 = static_cast<std::uint64_t>(w1);
            const std::uint64_t u2 = static_cast<std::uint64_t>(w2);
            const std::uint64_t u3 = static_cast<std::uint64_t>(w3);
            if (d_u % u1 == 0 && d_u % u2 == 0 && d_u % u3 == 0)
              continue;  // Fermat base
            std::vector<std::uint64_t> img_u = {u1, u2, u3};
            for (std::size_t j = 1; j < fiber.surface.ambient().size(); ++j)
              img_u.push_back(
                  static_cast<std::uint64_t>(w0) *
                  to_u64_checked(fiber.surface.ambient()[j], 1u << 20, "v"));
            if (!fast_cover(img_u, d_u)) continue;
            const WeightSystem base({Int(w0), Int(w1), Int(w2), Int(w3)});
            auto row = build_surface_row(base, fiber, bounds.allow_chain,
                                         bounds.attach_chi);
            if (row) rows.push_back(std::move(*row));
          }
        }
      }
    }
  }

  sort_rows(rows);
  return rows;
}

AutomorphismCheck validate_k3_automorphism_order(const Int& order) {
  AutomorphismCheck out;
  out.admissible = order >= 1 && order <= 66;
  static const std::vector<LatticeDatum> unimodular = {
      {Int(66), "U", "U (+) U (+) E8 (+) E8"},
      {Int(44), "U", "U (+) U (+) E8 (+) E8"},
      {Int(42), "U (+) E8", "U (+) U (+) E8"},
      {Int(36), "U (+) E8", "U (+) U (+) E8"},
      {Int(28), "U (+) E8", "U (+) U (+) E8"},
      {Int(12), "U (+) E8 (+) E8", "U (+) U"},
  };
  for (const LatticeDatum& datum : unimodular)
    if (datum.order == order) {
      out.lattice = datum;
      break;
    }
  return out;
}

}  // namespace wtwist
