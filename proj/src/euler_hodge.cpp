#include "wtwist/euler_hodge.hpp"

#include <algorithm>

#include "wtwist/errors.hpp"
#include "wtwist/wps_core.hpp"

namespace wtwist {

Int orbifold_euler(const WeightSystem& ws, const Int& degree) {
  const std::size_t n = ws.size();
  if (n > 16)
    throw domain_error(errc::validation(), "too many weights");
  std::uint64_t d = to_u64_checked(degree, 4000000, "degree");
  if (d == 0)
    throw domain_error(errc::validation(), "degree must be positive");

  // chi = (1/d) sum_{l,r} prod_{i : t_i | l and t_i | r} (1 - d/w_i), where
  // t_i = d / gcd(d, w_i) and the empty product is 1.  Group the l's by the
  // subset of periods t_i dividing them; the double sum collapses to a sum
  // over subset pairs weighted by their counts.
  std::vector<std::uint64_t> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int ti = exact_div(degree, int_gcd(degree, ws[i]));
    t[i] = to_u64_checked(ti, 4000000, "period");
  }
  std::vector<std::uint64_t> count(std::size_t(1) << n, 0);
  for (std::uint64_t l = 0; l < d; ++l) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (l % t[i] == 0) mask |= std::uint32_t(1) << i;
    ++count[mask];
  }
  std::vector<std::pair<std::uint32_t, std::uint64_t>> occupied;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask)
    if (count[mask]) occupied.push_back({mask, count[mask]});
  std::vector<Rat> prod(std::size_t(1) << n);
  std::vector<char> prod_known(std::size_t(1) << n, 0);
  auto product_for = [&](std::uint32_t mask) -> const Rat& {
    if (!prod_known[mask]) {
      Rat p = 1;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint32_t(1) << i))
          p *= Rat(1) - make_rat(degree, ws[i]);
      prod[mask] = p;
      prod_known[mask] = 1;
    }
    return prod[mask];
  };
  Rat total = 0;
  for (std::size_t a = 0; a < occupied.size(); ++a) {
    for (std::size_t b = a; b < occupied.size(); ++b) {
      Rat contrib = Rat(occupied[a].second) * Rat(occupied[b].second) *
                    product_for(occupied[a].first & occupied[b].first);
      total += (a == b) ? contrib : 2 * contrib;
    }
  }
  total /= Rat(degree);
  if (!is_integer(total))
    throw domain_error(errc::non_integral_result(),
                       "character sum came out as " + rat_to_string(total));
  return total.get_num();
}

Int geometric_genus(const WeightSystem& ws, const Int& degree) {
  Int excess = degree - ws.sum();
  if (excess < 0) return 0;
  return count_monomials(ws, excess);
}

HodgePair cy3_hodge(const Int& chi, const Int& h11) {
  if (h11 < 0)
    throw domain_error(errc::negative_hodge(), "h11 must be >= 0");
  if (!divides(Int(2), chi))
    throw domain_error(errc::non_integral_result(),
                       "chi must be even, got " + chi.get_str());
  Int h21 = h11 - exact_div(chi, Int(2));
  if (h21 < 0)
    throw domain_error(errc::negative_hodge(),
                       "h21 = " + h21.get_str() + " is negative");
  return HodgePair{h11, h21};
}

HodgePair conifold_transition(const ConifoldData& data) {
  if (data.relations < 0 || data.nodes < data.relations)
    throw domain_error(errc::validation(), "need nodes >= relations >= 0");
  Int h11 = data.hodge.h11 + data.relations;
  Int h21 = data.hodge.h21 - (data.nodes - data.relations);
  if (h21 < 0 || h11 < 0)
    throw domain_error(errc::negative_hodge(),
                       "transition leaves negative Hodge numbers");
  return HodgePair{h11, h21};
}

Int ci_curve_genus(const Int& d1, const Int& d2, const WeightSystem& ws) {
  if (d1 < 1 || d2 < 1)
    throw domain_error(errc::validation(), "degrees must be positive");
  Rat lhs = make_rat(d1 * d2, ws.product()) * Rat(d1 + d2 - ws.sum());
  Rat g = (lhs + 2) / 2;
  if (!is_integer(g) || g < 0)
    throw domain_error(errc::non_integer_genus(),
                       "adjunction gives genus " + rat_to_string(g));
  return g.get_num();
}

FourfoldTransitionReport fourfold_transition_report() {
  FourfoldTransitionReport r{};
  bool ok = true;

  // K3-fibered threefold: twist of the curve {x0^6 + x1^12 + x2^12 = 0} in
  // P(2,1,1) with the degree-6 K3 in P(1,2,2,1) (distinguished variable of
  // weight 1 first).
  {
    WeightedHypersurface c{build_fermat(weight_system({2, 1, 1}), Int(12))};
    WeightedHypersurface k{build_fermat(weight_system({1, 2, 2, 1}), Int(6))};
    TwistResult t = twist(TwistInput{c, k, Int(6)});
    r.fiber_image = t.image.ambient().weights();
    r.fiber_degree = t.image.degree();
    std::vector<Int> sorted = r.fiber_image;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && (sorted == int_vec({1, 1, 2, 4, 4})) && r.fiber_degree == 12;
  }

  // Left fourfold: plain twist of {x0^12 + x1^24 + x2^24} in P(2,1,1) with
  // the degree-12 K3-fibered threefold in P(1,4,4,2,1).
  {
    WeightedHypersurface c{build_fermat(weight_system({2, 1, 1}), Int(24))};
    WeightedHypersurface f{
        build_fermat(weight_system({1, 4, 4, 2, 1}), Int(12))};
    TwistResult t = twist(TwistInput{c, f, Int(12)});
    r.left_image = t.image.ambient().weights();
    r.left_degree = t.image.degree();
    std::vector<Int> sorted = r.left_image;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && (sorted == int_vec({1, 1, 2, 4, 8, 8})) && r.left_degree == 24;
  }

  // Right fourfold: generalized twist with mu = 8, nu = 3 over the same
  // weights; the image is a complete intersection of bidegrees (1,8), (1,16)
  // in P(1,1) x P(1,1,8,8,4,2).
  {
    WeightedHypersurface v1{build_fermat(weight_system({2, 1, 1}), Int(16))};
    GeneralizedTwistResult g = generalized_twist(GeneralizedTwistInput{
        v1, weight_system({1, 4, 4, 2, 1}), Int(3), {}, {}});
    r.right_image_second_factor = g.image.factors[1].weights();
    r.right_bidegrees = g.image.multidegrees;
    std::vector<Int> sorted = r.right_image_second_factor;
    std::sort(sorted.begin(), sorted.end());
    ok = ok && (sorted == int_vec({1, 1, 2, 4, 8, 8}));
    ok = ok && g.mu == 8 && g.ell == 1;
    ok = ok && (r.right_bidegrees ==
                std::vector<std::vector<Int>>{{Int(1), Int(8)},
                                              {Int(1), Int(16)}});
  }

  // The two presentations are separated by a curve of (16,16) intersections
  // in P(4,2,1,1) and a finite set of double points.
  r.sigma_genus = ci_curve_genus(Int(16), Int(16), weight_system({4, 2, 1, 1}));
  BezoutCount nodes =
      weighted_bezout(int_vec({4, 4, 8, 8}), weight_system({4, 4, 1, 1, 2}));
  r.node_count = nodes.value;
  ok = ok && r.sigma_genus == 385 && r.node_count == 32 &&
       !nodes.non_integer_count;
  r.consistent = ok;
  return r;
}

}  // namespace wtwist
