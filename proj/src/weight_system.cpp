#include "wtwist/weight_system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wtwist/errors.hpp"

namespace wtwist {

std::uint64_t to_u64_checked(const Int& v, std::uint64_t cap,
                             const char* what) {
  if (v < 0 || !v.fits_ulong_p() || v.get_ui() > cap)
    throw domain_error(errc::validation(),
                       std::string(what) + " out of supported range");
  return v.get_ui();
}

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

WeightSystem::WeightSystem(std::vector<Int> weights) : w_(std::move(weights)) {
  if (w_.size() < 2)
    throw domain_error(errc::validation(),
                       "weight system needs at least two weights");
  for (const Int& wi : w_)
    if (wi < 1)
      throw domain_error(errc::validation(), "weights must be positive");
}

Int WeightSystem::sum() const {
  Int s = 0;
  for (const Int& wi : w_) s += wi;
  return s;
}

Int WeightSystem::product() const {
  Int p = 1;
  for (const Int& wi : w_) p *= wi;
  return p;
}

bool WeightSystem::is_normalized() const {
  for (std::size_t skip = 0; skip < w_.size(); ++skip) {
    Int g = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (i != skip) g = int_gcd(g, w_[i]);
    if (g > 1) return false;
  }
  return true;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w_.size(); ++i)
    os << (i ? "," : "") << w_[i].get_str();
  os << ")";
  return os.str();
}

Int Monomial::weighted_degree(const WeightSystem& ws) const {
  if (exps.size() != ws.size())
    throw internal_error("monomial arity does not match weight system");
  Int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * ws[i];
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) s.push_back(i);
  return s;
}

WeightedPolynomial::WeightedPolynomial(WeightSystem ambient, Int degree,
                                       std::vector<Term> terms)
    : ambient_(std::move(ambient)), degree_(std::move(degree)) {
  std::map<Monomial, Rat> merged;
  for (Term& t : terms) {
    if (t.mono.exps.size() != ambient_.size())
      throw domain_error(errc::validation(),
                         "term arity does not match weight system");
    for (const Int& e : t.mono.exps)
      if (e < 0)
        throw domain_error(errc::validation(), "negative exponent");
    if (t.mono.weighted_degree(ambient_) != degree_)
      throw domain_error(
          errc::degree_mismatch(),
          "term of degree " + t.mono.weighted_degree(ambient_).get_str() +
              " in a polynomial of degree " + degree_.get_str());
    merged[t.mono] += t.coeff;
  }
  for (auto& [mono, coeff] : merged)
    if (coeff != 0) terms_.push_back(Term{mono, coeff});
}

std::optional<Int> WeightedPolynomial::pure_exponent(std::size_t i) const {
  for (const Term& t : terms_) {
    auto sup = t.mono.support();
    if (sup.size() == 1 && sup[0] == i) return t.mono.exps[i];
  }
  return std::nullopt;
}

std::string WeightedPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rat a = abs(c);
    bool has_vars = !t.mono.support().empty();
    if (a != 1 || !has_vars) {
      os << (is_integer(a) ? a.get_num().get_str() : rat_to_string(a));
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << i;
      if (t.mono.exps[i] > 1) os << "^" << t.mono.exps[i].get_str();
    }
  }
  return os.str();
}

std::string CompleteIntersection::to_string() const {
  std::ostringstream os;
  for (std::size_t f = 0; f < factors.size(); ++f)
    os << (f ? " x " : "") << "P" << factors[f].to_string();
  os << " / degrees ";
  for (std::size_t e = 0; e < multidegrees.size(); ++e) {
    os << (e ? ", " : "") << "(";
    for (std::size_t f = 0; f < multidegrees[e].size(); ++f)
      os << (f ? "," : "") << multidegrees[e][f].get_str();
    os << ")";
  }
  return os.str();
}

Monomial monomial(std::initializer_list<long> exps) {
  Monomial m;
  for (long e : exps) m.exps.emplace_back(e);
  return m;
}

WeightSystem weight_system(std::initializer_list<long> ws) {
  std::vector<Int> v;
  for (long w : ws) v.emplace_back(w);
  return WeightSystem(std::move(v));
}

std::vector<Int> int_vec(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace wtwist
