#include "wtwist/wps_core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wtwist/errors.hpp"

namespace wtwist {

namespace {

constexpr std::uint64_t kDegreeCap = 1000000;  // bounded-enumeration guard

}  // namespace

NormalizeResult normalize(const WeightSystem& ws, const Int& degree,
                          const std::optional<WeightedPolynomial>& poly) {
  const std::size_t n = ws.size();
  std::vector<Int> w = ws.weights();
  Int d = degree;
  std::vector<Int> factors;
  std::vector<std::vector<Int>> exps;
  std::vector<Rat> coeffs;
  if (poly) {
    if (poly->ambient() != ws || poly->degree() != degree)
      throw domain_error(errc::validation(),
                         "polynomial does not live on the given space");
    for (const Term& t : poly->terms()) {
      exps.push_back(t.mono.exps);
      coeffs.push_back(t.coeff);
    }
  }

  // Common factor of ALL weights: weights and degree divide, exponents are
  // untouched (the variables themselves are unchanged).
  Int g = gcd_range(w.begin(), w.end());
  if (g > 1) {
    if (!divides(g, d))
      throw domain_error(errc::non_divisible_degree(),
                         "common weight factor " + g.get_str() +
                             " does not divide degree " + d.get_str());
    for (Int& wi : w) wi = exact_div(wi, g);
    d = exact_div(d, g);
    factors.push_back(g);
  }

  // Factor shared by all weights but one: the spared variable absorbs the
  // reduction in its exponents.  Largest factor first, ties broken by the
  // smallest spared index.
  for (;;) {
    Int best_a = 1;
    std::size_t best_i = n;
    for (std::size_t i = 0; i < n; ++i) {
      Int a = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) a = int_gcd(a, w[j]);
      if (a > best_a) {
        best_a = a;
        best_i = i;
      }
    }
    if (best_a == 1) break;
    if (!divides(best_a, d))
      throw domain_error(errc::non_divisible_degree(),
                         "reduction factor " + best_a.get_str() +
                             " does not divide degree " + d.get_str());
    for (std::size_t j = 0; j < n; ++j)
      if (j != best_i) w[j] = exact_div(w[j], best_a);
    d = exact_div(d, best_a);
    for (auto& e : exps) {
      if (!divides(best_a, e[best_i]))
        throw domain_error(errc::non_divisible_exponent(),
                           "exponent " + e[best_i].get_str() +
                               " of variable " + std::to_string(best_i) +
                               " not divisible by " + best_a.get_str());
      e[best_i] = exact_div(e[best_i], best_a);
    }
    factors.push_back(best_a);
  }

  NormalizeResult out{WeightSystem(w), d, std::nullopt, std::move(factors)};
  if (poly) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < exps.size(); ++k)
      terms.push_back(Term{Monomial{exps[k]}, coeffs[k]});
    out.poly = WeightedPolynomial(out.ws, out.degree, std::move(terms));
  }
  return out;
}

Int count_monomials(const WeightSystem& ws, const Int& degree,
                    const std::vector<std::size_t>* restrict_to) {
  if (degree < 0) return 0;
  std::uint64_t d = to_u64_checked(degree, kDegreeCap, "degree");
  std::vector<Int> ways(d + 1, 0);
  ways[0] = 1;
  auto use = [&](std::size_t i) {
    std::uint64_t wi = to_u64_checked(ws[i], kDegreeCap, "weight");
    for (std::uint64_t deg = wi; deg <= d; ++deg)
      ways[deg] += ways[deg - wi];
  };
  if (restrict_to) {
    for (std::size_t i : *restrict_to) use(i);
  } else {
    for (std::size_t i = 0; i < ws.size(); ++i) use(i);
  }
  return ways[d];
}

BezoutCount weighted_bezout(const std::vector<Int>& degrees,
                            const WeightSystem& ws) {
  if (degrees.size() + 1 != ws.size())
    throw domain_error(errc::validation(),
                       "need exactly dim P(w) = " +
                           std::to_string(ws.size() - 1) + " degrees, got " +
                           std::to_string(degrees.size()));
  Int num = 1;
  for (const Int& d : degrees) {
    if (d < 1)
      throw domain_error(errc::validation(), "degrees must be positive");
    num *= d;
  }
  Rat value = make_rat(num, ws.product());
  return BezoutCount{value, !is_integer(value)};
}

WeightedPolynomial build_fermat(const WeightSystem& ws, const Int& degree) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (!divides(ws[i], degree))
      throw domain_error(errc::non_fermat_weights(),
                         "weight " + ws[i].get_str() +
                             " of variable " + std::to_string(i) +
                             " does not divide degree " + degree.get_str());
    Monomial m{std::vector<Int>(ws.size(), 0)};
    m.exps[i] = exact_div(degree, ws[i]);
    terms.push_back(Term{m, Rat(1)});
  }
  return WeightedPolynomial(ws, degree, std::move(terms));
}

WeightedPolynomial build_chain(const WeightSystem& ws, const Int& degree,
                               std::optional<std::size_t> reserved) {
  const std::size_t n = ws.size();
  std::vector<Term> terms;
  std::vector<bool> pure(n, false);
  std::vector<bool> incoming(n, false);
  std::vector<std::size_t> target(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (divides(ws[i], degree)) {
      pure[i] = true;
      Monomial m{std::vector<Int>(n, 0)};
      m.exps[i] = exact_div(degree, ws[i]);
      terms.push_back(Term{m, Rat(1)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pure[i]) continue;
    if (reserved && i == *reserved)
      throw domain_error(errc::non_fermat_weights(),
                         "distinguished variable has no pure power");
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (j == i || incoming[j]) continue;
      if (reserved && j == *reserved) continue;
      Int rest = degree - ws[j];
      if (rest < ws[i] || !divides(ws[i], rest)) continue;
      Monomial m{std::vector<Int>(n, 0)};
      m.exps[i] = exact_div(rest, ws[i]);
      m.exps[j] = 1;
      terms.push_back(Term{m, Rat(1)});
      target[i] = j;
      incoming[j] = true;
      found = true;
    }
    if (!found)
      throw domain_error(errc::non_fermat_weights(),
                         "no pure power and no chain monomial for variable " +
                             std::to_string(i));
  }
  // Chains must flow into pure powers without cycles.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t steps = 0;
    for (std::size_t j = i; target[j] != n; j = target[j])
      if (++steps > n)
        throw domain_error(errc::non_fermat_weights(),
                           "chain search produced a cycle");
  }
  return WeightedPolynomial(ws, degree, std::move(terms));
}

namespace {

// ---- exact univariate helpers for the stratum fallback -------------------

using Poly1 = std::vector<Rat>;  // coefficient of x^k at index k

void poly1_trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 poly1_rem(Poly1 a, const Poly1& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    poly1_trim(a);
  }
  return a;
}

Poly1 poly1_gcd(Poly1 a, Poly1 b) {
  poly1_trim(a);
  poly1_trim(b);
  while (!b.empty()) {
    Poly1 r = poly1_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// True when the polynomials share a common root away from zero.
bool common_nonzero_root(std::vector<Poly1> polys) {
  Poly1 g;
  for (Poly1& p : polys) {
    poly1_trim(p);
    g = g.empty() ? std::move(p) : poly1_gcd(std::move(g), p);
  }
  std::size_t low = 0;
  while (low < g.size() && g[low] == 0) ++low;
  return g.size() > low + 1;  // a factor of positive degree survives x^low
}

// ---- combinatorial (Delsarte) path ----------------------------------------

struct HeadShape {
  bool usable = false;
  // head_of[i] = term index headed by variable i; tail_of[i] = chain target.
  std::vector<std::size_t> head_of, tail_of;
};

// Tries to read the polynomial as "one monomial per variable": pure powers
// x_i^a and chain links x_i^a * x_j.  Terms x_i * x_j admit either head; a
// tiny backtracking search resolves the ambiguity.
HeadShape find_head_assignment(const WeightedPolynomial& poly) {
  const std::size_t n = poly.variables();
  const auto& terms = poly.terms();
  HeadShape shape;
  if (terms.size() != n) return shape;
  // candidates[t] = variables that may head term t (paired with the tail).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> candidates(n);
  for (std::size_t t = 0; t < n; ++t) {
    auto sup = terms[t].mono.support();
    if (sup.size() == 1) {
      candidates[t].push_back({sup[0], n});
    } else if (sup.size() == 2) {
      const Int& e0 = terms[t].mono.exps[sup[0]];
      const Int& e1 = terms[t].mono.exps[sup[1]];
      if (e1 == 1) candidates[t].push_back({sup[0], sup[1]});
      if (e0 == 1) candidates[t].push_back({sup[1], sup[0]});
      if (candidates[t].empty()) return shape;
    } else {
      return shape;
    }
  }
  std::vector<std::size_t> head_of(n, n), tail_of(n, n);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, std::size_t t) -> bool {
    if (t == n) return true;
    for (auto [head, tail] : candidates[t]) {
      if (used[head]) continue;
      used[head] = true;
      head_of[head] = t;
      tail_of[head] = tail;
      if (self(self, t + 1)) return true;
      used[head] = false;
      head_of[head] = n;
      tail_of[head] = n;
    }
    return false;
  };
  if (!assign(assign, 0)) return shape;
  shape.usable = true;
  shape.head_of = std::move(head_of);
  shape.tail_of = std::move(tail_of);
  return shape;
}

// verdict: 1 quasismooth, 0 singular, -1 undecided by this path
int delsarte_verdict(const WeightedPolynomial& poly) {
  const std::size_t n = poly.variables();
  HeadShape shape = find_head_assignment(poly);
  if (!shape.usable) return -1;
  std::vector<int> incoming(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (shape.tail_of[i] != n) ++incoming[shape.tail_of[i]];
  if (*std::max_element(incoming.begin(), incoming.end()) > 1)
    return -1;  // multiple chains into one variable: decided by strata
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t steps = 0;
    for (std::size_t j = i; shape.tail_of[j] != n; j = shape.tail_of[j])
      if (++steps > n) return -1;  // loop shape: decided by strata
  }
  return 1;  // disjoint chains ending in pure powers
}

// ---- stratum fallback ------------------------------------------------------

// Partial derivative of poly wrt variable j, restricted to the coordinate
// stratum "x_k = 0 for k outside S", as a term list over the S-variables.
std::vector<Term> restricted_partial(const WeightedPolynomial& poly,
                                     std::size_t j,
                                     const std::set<std::size_t>& s) {
  std::vector<Term> out;
  for (const Term& t : poly.terms()) {
    if (t.mono.exps[j] == 0) continue;
    Monomial m = t.mono;
    Rat c = t.coeff * Rat(m.exps[j]);
    m.exps[j] -= 1;
    bool alive = true;
    for (std::size_t k = 0; k < m.exps.size() && alive; ++k)
      if (m.exps[k] > 0 && !s.count(k)) alive = false;
    if (alive) out.push_back(Term{m, c});
  }
  return out;
}

Poly1 to_univariate(const std::vector<Term>& terms, std::size_t main_var,
                    std::size_t unit_var) {
  Poly1 p;
  for (const Term& t : terms) {
    std::uint64_t e =
        to_u64_checked(t.mono.exps[main_var], kDegreeCap, "exponent");
    if (p.size() <= e) p.resize(e + 1, Rat(0));
    p[e] += t.coeff;
    (void)unit_var;  // its exponent is evaluated at 1
  }
  poly1_trim(p);
  return p;
}

bool stratum_fallback(const WeightedPolynomial& poly) {
  const std::size_t n = poly.variables();
  if (n > 12)
    throw domain_error(errc::unsupported_shape(),
                       "too many variables for stratum analysis");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) s.insert(i);
    std::vector<std::vector<Term>> survivors;
    bool has_monomial_partial = false;
    for (std::size_t j = 0; j < n && !has_monomial_partial; ++j) {
      std::vector<Term> g = restricted_partial(poly, j, s);
      // merge equal monomials exactly
      std::map<Monomial, Rat> merged;
      for (Term& t : g) merged[t.mono] += t.coeff;
      std::vector<Term> clean;
      for (auto& [m, c] : merged)
        if (c != 0) clean.push_back(Term{m, c});
      if (clean.empty()) continue;
      if (clean.size() == 1) {
        has_monomial_partial = true;  // never vanishes on the open stratum
        break;
      }
      survivors.push_back(std::move(clean));
    }
    if (has_monomial_partial) continue;
    if (survivors.empty()) return false;  // every partial vanishes identically
    // Common zero with all S-coordinates nonzero?
    std::vector<std::size_t> vars(s.begin(), s.end());
    if (vars.size() == 1) {
      std::vector<Poly1> ps;
      for (auto& g : survivors) ps.push_back(to_univariate(g, vars[0], n));
      if (common_nonzero_root(std::move(ps))) return false;
      continue;
    }
    if (vars.size() == 2) {
      // The gradient locus is invariant under the weighted scaling action,
      // so the second coordinate can be set to 1.
      std::vector<Poly1> ps;
      for (auto& g : survivors) ps.push_back(to_univariate(g, vars[0], vars[1]));
      if (common_nonzero_root(std::move(ps))) return false;
      continue;
    }
    throw domain_error(errc::unsupported_shape(),
                       "stratum with " + std::to_string(vars.size()) +
                           " variables and entangled partials");
  }
  return true;
}

}  // namespace

bool is_quasismooth(const WeightedPolynomial& poly) {
  if (poly.terms().empty()) return false;
  int v = delsarte_verdict(poly);
  if (v >= 0) return v == 1;
  return stratum_fallback(poly);
}

bool admits_quasismooth_member(const WeightSystem& ws, const Int& degree) {
  const std::size_t n = ws.size();
  if (n > 16)
    throw domain_error(errc::unsupported_shape(),
                       "too many variables for the subset criterion");
  std::uint64_t d = to_u64_checked(degree, kDegreeCap, "degree");
  std::vector<std::uint64_t> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = to_u64_checked(ws[i], kDegreeCap, "weight");
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    // reachable[deg]: deg is a non-negative combination of the I-weights
    std::vector<char> reach(d + 1, 0);
    reach[0] = 1;
    std::size_t card = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::uint32_t(1) << i))) continue;
      ++card;
      for (std::uint64_t deg = w[i]; deg <= d; ++deg)
        if (reach[deg - w[i]]) reach[deg] = 1;
    }
    if (reach[d]) continue;  // a monomial of degree d lives on I
    std::size_t tails = 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (mask & (std::uint32_t(1) << e)) continue;
      if (w[e] <= d && reach[d - w[e]]) ++tails;
    }
    if (tails < card) return false;
  }
  return true;
}

}  // namespace wtwist
