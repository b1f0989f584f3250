#include "wtwist/resolve.hpp"

#include <algorithm>

#include "wtwist/errors.hpp"

namespace wtwist {

namespace {

void check_cyclic(const Int& alpha, const Int& beta) {
  if (alpha < 1)
    throw domain_error(errc::validation(), "alpha must be >= 1");
  if (alpha == 1) return;
  if (beta < 1 || beta >= alpha)
    throw domain_error(errc::validation(),
                       "need 1 <= beta < alpha, got beta = " +
                           beta.get_str() + ", alpha = " + alpha.get_str());
  if (int_gcd(alpha, beta) != 1)
    throw domain_error(errc::not_coprime(),
                       "alpha and beta share a factor");
}

}  // namespace

std::vector<Int> hj_expand(const Int& alpha, const Int& beta) {
  check_cyclic(alpha, beta);
  std::vector<Int> out;
  if (alpha == 1) return out;
  Int a = alpha, b = beta;
  while (b > 0) {
    // ceiling division: a/b = bq rounded up
    Int q = (a + b - 1) / b;
    out.push_back(q);
    Int next = q * b - a;  // a/b = q - next/b with 0 <= next < b
    a = b;
    b = next;
  }
  return out;
}

Rat hj_evaluate(const std::vector<Int>& string) {
  if (string.empty())
    throw domain_error(errc::validation(), "empty string has no value");
  Rat x = Rat(string.back());
  for (std::size_t i = string.size() - 1; i-- > 0;) {
    if (x == 0)
      throw domain_error(errc::validation(), "division by zero in evaluation");
    x = Rat(string[i]) - Rat(1) / x;
  }
  return x;
}

Int beta_from_weight(const Int& alpha, const Int& k) {
  if (alpha < 1)
    throw domain_error(errc::validation(), "alpha must be >= 1");
  if (alpha == 1) return 0;
  Int inv;
  if (!try_mod_inverse(mod_floor(k, alpha), alpha, inv))
    throw domain_error(errc::not_coprime(),
                       "weight " + k.get_str() +
                           " is not invertible modulo " + alpha.get_str());
  return inv;
}

Rat central_self_intersection(
    const std::vector<CyclicSingularity>& branches, const Int& product) {
  if (product == 0)
    throw domain_error(errc::validation(), "product must be nonzero");
  Rat b = -make_rat(Int(1), product);
  for (const CyclicSingularity& s : branches) {
    check_cyclic(s.alpha, s.beta);
    b += make_rat(s.beta, s.alpha);
  }
  return b;
}

bool is_exceptional_first_kind(const Rat& b, const Int& genus) {
  return b == 1 && genus == 0;
}

void CurveConfig::add_curve(std::string name, Int self_int, Int geom_genus,
                            Int delta) {
  for (const ConfigCurve& c : curves_)
    if (c.name == name)
      throw domain_error(errc::validation(), "duplicate curve " + name);
  curves_.push_back(ConfigCurve{std::move(name), std::move(self_int),
                                std::move(geom_genus), std::move(delta)});
  for (auto& row : inter_) row.push_back(0);
  inter_.push_back(std::vector<Int>(curves_.size(), 0));
}

std::size_t CurveConfig::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  throw domain_error(errc::validation(), "unknown curve " + name);
}

void CurveConfig::add_intersection(const std::string& a, const std::string& b,
                                   Int multiplicity) {
  std::size_t i = index_of(a), j = index_of(b);
  if (i == j)
    throw domain_error(errc::validation(),
                       "self-intersections are set on the curve itself");
  inter_[i][j] += multiplicity;
  inter_[j][i] += multiplicity;
}

Int CurveConfig::intersection(std::size_t i, std::size_t j) const {
  return inter_[i][j];
}

std::string CurveConfig::blowdown_step() {
  std::size_t z = curves_.size();
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].self_int == -1 && curves_[i].geom_genus == 0 &&
        curves_[i].delta == 0) {
      z = i;
      break;
    }
  }
  if (z == curves_.size())
    throw domain_error(errc::nothing_to_contract(),
                       "no smooth rational (-1)-curve in the configuration");
  std::string name = curves_[z].name;
  // Push the configuration down: images meet the old intersections with Z.
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (i == z) continue;
    const Int m = inter_[i][z];
    curves_[i].self_int += m * m;
    curves_[i].delta += binom2(m);
    for (std::size_t j = i + 1; j < curves_.size(); ++j) {
      if (j == z) continue;
      Int gain = m * inter_[j][z];
      inter_[i][j] += gain;
      inter_[j][i] += gain;
    }
  }
  curves_.erase(curves_.begin() + static_cast<std::ptrdiff_t>(z));
  for (auto& row : inter_)
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(z));
  inter_.erase(inter_.begin() + static_cast<std::ptrdiff_t>(z));
  return name;
}

std::vector<std::string> CurveConfig::blowdown_to_minimal(
    std::size_t max_steps) {
  std::vector<std::string> steps;
  for (std::size_t s = 0; s < max_steps; ++s) {
    bool any = false;
    for (const ConfigCurve& c : curves_)
      if (c.self_int == -1 && c.geom_genus == 0 && c.delta == 0) any = true;
    if (!any) return steps;
    steps.push_back(blowdown_step());
  }
  throw internal_error("blowdown did not terminate");
}

CurveConfig exotic_configuration() {
  CurveConfig cfg;
  // Central curve: self-intersection -b with b = 1 from
  // central_self_intersection({(2,1),(3,1),(11,2)}, 66).
  cfg.add_curve("C", -1);
  cfg.add_curve("A", -2);   // branch [2]
  cfg.add_curve("B", -3);   // branch [3]
  cfg.add_curve("E1", -6);  // branch [6,2], head
  cfg.add_curve("E2", -2);  // branch [6,2], tail
  cfg.add_intersection("C", "A");
  cfg.add_intersection("C", "B");
  cfg.add_intersection("C", "E1");
  cfg.add_intersection("E1", "E2");
  return cfg;
}

std::vector<std::array<Int, 3>> cone_lattice_points(const Int& w0,
                                                    const Int& w1,
                                                    const Int& w2) {
  if (w0 < 1 || w1 < 1 || w2 < 1)
    throw domain_error(errc::validation(), "weights must be positive");
  std::vector<std::array<Int, 3>> out;
  for (Int alpha = 1; alpha < w0; ++alpha) {
    // smallest beta with w0*beta > w1*alpha
    Int beta_min = w1 * alpha / w0 + 1;
    Int gamma_min = w2 * alpha / w0 + 1;
    Int budget = alpha * (w1 + w2) + w0;  // w0*(beta+gamma) <= budget
    for (Int beta = beta_min;; ++beta) {
      Int room = budget - w0 * beta;
      if (room < w0 * gamma_min) break;
      for (Int gamma = gamma_min; w0 * (beta + gamma) <= budget; ++gamma)
        out.push_back({alpha, beta, gamma});
    }
  }
  return out;
}

}  // namespace wtwist
