#include "wtwist/fibration.hpp"

#include <algorithm>
#include <map>

#include "wtwist/errors.hpp"
#include "wtwist/wps_core.hpp"

namespace wtwist {

const std::array<KodairaFiber, 7>& kodaira_table() {
  static const std::array<KodairaFiber, 7> table = {
      KodairaFiber{"II", 2, make_rat(1, 6), ""},
      KodairaFiber{"III", 3, make_rat(1, 4), "A1"},
      KodairaFiber{"IV", 4, make_rat(1, 3), "A2"},
      KodairaFiber{"I0*", 6, make_rat(1, 2), "D4"},
      KodairaFiber{"IV*", 8, make_rat(2, 3), "E6"},
      KodairaFiber{"III*", 9, make_rat(3, 4), "E7"},
      KodairaFiber{"II*", 10, make_rat(5, 6), "E8"}};
  return table;
}

const KodairaFiber& fiber_from_alpha(const Rat& alpha) {
  for (const KodairaFiber& f : kodaira_table())
    if (f.alpha == alpha) return f;
  throw domain_error(errc::unbalanced_fibration(),
                     "rotation number " + rat_to_string(alpha) +
                         " is not a cyclic quotient fiber type");
}

const KodairaFiber& involution(const KodairaFiber& f) {
  return fiber_from_alpha(Rat(1) - f.alpha);
}

namespace {

Int inverse_mod(const Int& a, const Int& m, const char* what) {
  Int inv;
  if (!try_mod_inverse(mod_floor(a, m), m, inv))
    throw domain_error(errc::not_coprime(),
                       std::string(what) + ": " + a.get_str() +
                           " is not invertible modulo " + m.get_str());
  return inv;
}

}  // namespace

FibrationReport classify_elliptic_fibers(const WeightedHypersurface& curve,
                                         const WeightSystem& elliptic_v,
                                         const Int& ell) {
  const WeightSystem& w = curve.ambient();
  if (w.size() != 3)
    throw domain_error(errc::validation(), "base must be a curve in P(w0,w1,w2)");
  if (elliptic_v.size() != 3 || elliptic_v.sum() != ell * elliptic_v[0])
    throw domain_error(errc::validation(),
                       "fiber weights must satisfy sum(v) = ell*v0");
  if (curve.degree() != ell * w[0])
    throw domain_error(errc::degree_mismatch(),
                       "curve degree must be ell*w0");

  // Terms of p(x1, x2); the pure power x0^ell is split off.
  std::vector<Term> p;
  bool saw_lead = false;
  for (const Term& t : curve.poly.terms()) {
    if (t.mono.exps[0] > 0) {
      auto sup = t.mono.support();
      if (sup.size() != 1 || t.mono.exps[0] != ell)
        throw domain_error(errc::shape_error(),
                           "curve must have the shape x0^ell + p(x1,x2)");
      saw_lead = true;
    } else {
      p.push_back(t);
    }
  }
  if (!saw_lead || p.empty())
    throw domain_error(errc::shape_error(),
                       "curve must have the shape x0^ell + p(x1,x2)");

  Int s1 = p[0].mono.exps[1], s2 = p[0].mono.exps[2];
  bool pure1 = false, pure2 = false;
  for (const Term& t : p) {
    s1 = std::min(s1, t.mono.exps[1]);
    s2 = std::min(s2, t.mono.exps[2]);
    auto sup = t.mono.support();
    if (sup.size() == 1 && sup[0] == 1) pure1 = true;
    if (sup.size() == 1 && sup[0] == 2) pure2 = true;
  }
  if (s1 > 1 || s2 > 1 || (s1 == 1 && s2 == 1))
    throw domain_error(errc::unsupported_shape(),
                       "p must vanish on a coordinate axis at most once");

  std::map<Rat, Int> counts;  // rotation number -> fiber count

  // Zeros of p away from the coordinate axes: the cyclic action rotates the
  // transverse disc once, so each contributes the order-ell fiber.
  Int reduced_degree = curve.degree() - s1 * w[1] - s2 * w[2];
  if (!divides(w[1] * w[2], reduced_degree))
    throw domain_error(errc::unsupported_shape(),
                       "torus zeros of p do not come out integral");
  Int generic = exact_div(reduced_degree, w[1] * w[2]);
  if (generic > 0) counts[make_rat(Int(1), ell)] += generic;

  // A chain monomial parks one zero of p at the end of the coordinate axis;
  // the rotation number picks up the inverse weight.
  if (s2 == 1) counts[make_rat(mod_floor(inverse_mod(w[1], ell, "chain end"),
                                         ell),
                               ell)] += 1;
  if (s1 == 1) counts[make_rat(mod_floor(inverse_mod(w[2], ell, "chain end"),
                                         ell),
                               ell)] += 1;

  // Away from {x0 = 0}: the locus {x_i = 0} carries one extra orbit of fixed
  // points whenever p has a pure x_j power and gcd(ell, w_j) > 1.
  auto extra_orbit = [&](std::size_t i, std::size_t j, bool pure_j) {
    if (!pure_j) return;
    Int k = int_gcd(ell, w[j]);
    if (k == 1) return;
    Int t = inverse_mod(w[0], w[j], "extra orbit");
    Int c = mod_floor(-inverse_mod(t * w[i], k, "extra orbit"), k);
    counts[make_rat(c, k)] += 1;
  };
  extra_orbit(1, 2, pure2);
  extra_orbit(2, 1, pure1);

  FibrationReport report{};
  report.singular_count = 0;
  report.alpha_sum = 0;
  report.euler_sum = 0;
  for (const auto& [alpha, cnt] : counts) {
    const KodairaFiber& f = fiber_from_alpha(alpha);
    report.fibers.push_back(FiberCount{cnt, f});
    report.singular_count += cnt;
    report.alpha_sum += Rat(cnt) * alpha;
    report.euler_sum += cnt * f.euler;
  }
  if (report.alpha_sum != 2)
    throw domain_error(errc::unbalanced_fibration(),
                       "rotation numbers sum to " +
                           rat_to_string(report.alpha_sum) + ", need 2");
  // Smooth fibers contribute zero, so the fibered surface's Euler number is
  // the singular sum: 24, a K3.
  report.total_euler = report.euler_sum;
  return report;
}

AlphaCondition alpha_necessary_condition(
    const std::vector<std::pair<Int, Rat>>& fibers) {
  Rat sum = 0;
  for (const auto& [count, alpha] : fibers) sum += Rat(count) * alpha;
  return AlphaCondition{sum, sum == 2};
}

std::string picard_summands(const std::vector<FiberCount>& fibers) {
  std::string out;
  for (const FiberCount& fc : fibers) {
    if (fc.fiber.lattice.empty()) continue;
    if (!out.empty()) out += " (+) ";
    out += fc.fiber.lattice;
    if (fc.count > 1) out += "^" + fc.count.get_str();
  }
  if (!out.empty()) out += " (+) ";
  out += "H";
  return out;
}

std::string fibers_to_string(const std::vector<FiberCount>& fibers) {
  std::string out;
  for (const FiberCount& fc : fibers) {
    if (!out.empty()) out += "+";
    out += fc.count.get_str() + "x" + fc.fiber.symbol;
  }
  return out;
}

Int milnor_number(const std::vector<Int>& exponents) {
  if (exponents.empty())
    throw domain_error(errc::validation(), "need at least one exponent");
  Int mu = 1;
  for (const Int& m : exponents) {
    if (m < 2)
      throw domain_error(errc::validation(),
                         "local exponents must be >= 2, got " + m.get_str());
    mu *= m - 1;
  }
  return mu;
}

K3FiberDatum k3_fiber_datum(const std::vector<Int>& exponents) {
  Int mu = milnor_number(exponents);
  return K3FiberDatum{exponents, mu, Int(24) - mu};
}

FibrationEuler fibration_euler(const Int& n, const Int& fiber_euler,
                               const Int& generic_euler,
                               const Int& base_euler) {
  if (n < 0)
    throw domain_error(errc::validation(), "fiber count must be >= 0");
  FibrationEuler out{(base_euler - n) * generic_euler + n * fiber_euler, {}};
  if (generic_euler == 24 && n > 0)
    out.bound_satisfied = (48 - 24 * n < out.value && out.value < 48);
  return out;
}

WeightedHypersurface extract_fiber(const WeightedHypersurface& x,
                                   std::size_t keep, std::size_t eliminate) {
  const WeightSystem& ws = x.ambient();
  if (keep >= ws.size() || eliminate >= ws.size() || keep == eliminate)
    throw domain_error(errc::validation(), "bad variable indices");
  const Int& wk = ws[keep];
  const Int& we = ws[eliminate];
  if (divides(wk, we)) {
    if (wk != 1)
      throw domain_error(
          errc::unsafe_elimination(),
          "the pencil member meets the generic fiber " + wk.get_str() +
              " times: restricting gives a " + wk.get_str() +
              "-1 cover of the fiber, not the fiber");
  } else if (divides(we, wk)) {
    throw domain_error(
        errc::unsafe_elimination(),
        "the eliminated variable occurs to the power " +
            exact_div(wk, we).get_str() +
            " in the pencil: restricting gives a quotient of the fiber");
  } else {
    throw domain_error(errc::unsafe_elimination(),
                       "no monomial pencil pairs these two variables");
  }

  // Substitute z_elim = z_keep^(w_elim) and drop the eliminated slot.
  std::vector<Int> new_w;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (i != eliminate) new_w.push_back(ws[i]);
  std::vector<Term> terms;
  for (const Term& t : x.poly.terms()) {
    Monomial m{std::vector<Int>()};
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (i != eliminate) m.exps.push_back(t.mono.exps[i]);
    std::size_t keep_pos = keep < eliminate ? keep : keep - 1;
    m.exps[keep_pos] += we * t.mono.exps[eliminate];
    terms.push_back(Term{m, t.coeff});
  }
  WeightedPolynomial restricted(WeightSystem(new_w), x.degree(),
                                std::move(terms));
  NormalizeResult nr = normalize(restricted.ambient(), restricted.degree(),
                                 restricted);
  return WeightedHypersurface{*nr.poly};
}

RuledCoverReport ruled_cover_discriminant(const RuledCoverInput& in) {
  if (in.k < 1 || in.branch < 0 || in.n < 0)
    throw domain_error(errc::validation(), "bad ruled cover data");
  Int e = 2 * in.k - in.branch * (in.k - 1);
  Int a = in.k;
  Int b;
  if (a == 1) {
    if (e != 2)
      throw domain_error(errc::no_integral_class(),
                         "a section must have Euler number 2");
    b = 0;
  } else {
    // Adjunction for a smooth k-section: S.(S + K) = -e(S) with
    // S = a C0 + b F, C0^2 = n, C0.F = 1, K = -2 C0 + (n-2) F.
    Int num = a * in.n * (1 - a) + 2 * a - e;
    Int den = 2 * (a - 1);
    if (!divides(den, num))
      throw domain_error(errc::no_integral_class(),
                         "adjunction has no integral F-coefficient");
    b = exact_div(num, den);
  }
  RuledCoverReport r{};
  r.cover_euler = e;
  r.sigma = RuledClass{a, b};
  r.delta_cinf = in.mult_sigma * a + in.mult_cinf;
  r.delta_f = in.mult_sigma * (a * in.n + b);
  r.m12k_cinf = 24;
  r.m12k_f = 12 * in.n + 24;
  r.matches = (r.delta_cinf == r.m12k_cinf && r.delta_f == r.m12k_f);
  return r;
}

const std::vector<RuledFamilyDatum>& ruled_family_table() {
  static const std::vector<RuledFamilyDatum> rows = {
      {Int(2), Int(6), Int(2), Int(0), Int(2), Int(-4), Int(3), "IV"},
      {Int(3), Int(6), Int(4), Int(-6), Int(3), Int(-12), Int(6), "I0*"},
      {Int(4), Int(6), Int(6), Int(-16), Int(4), Int(-24), Int(8), "IV*"},
      {Int(7), Int(6), Int(12), Int(-70), Int(7), Int(-84), Int(10), "II*"},
      {Int(5), Int(4), Int(8), Int(-30), Int(5), Int(-40), Int(9), "III*"}};
  return rows;
}

}  // namespace wtwist
