#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wtwist/arith.hpp"

namespace wtwist {

// Weights of a weighted projective space P(w_0, ..., w_n).  Order matters:
// operations that transport exponents refer to variables by index.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Int> weights);

  std::size_t size() const { return w_.size(); }
  const Int& operator[](std::size_t i) const { return w_[i]; }
  const std::vector<Int>& weights() const { return w_; }

  Int sum() const;
  Int product() const;

  // True when no n of the n+1 weights share a common divisor > 1.
  bool is_normalized() const;

  bool operator==(const WeightSystem& o) const { return w_ == o.w_; }

  std::string to_string() const;

 private:
  std::vector<Int> w_;
};

struct Monomial {
  std::vector<Int> exps;

  Int weighted_degree(const WeightSystem& ws) const;
  // Indices of variables occurring with positive exponent.
  std::vector<std::size_t> support() const;

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator<(const Monomial& o) const { return exps < o.exps; }
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Weighted-homogeneous polynomial with exact rational coefficients.  The
// constructor enforces: every term has the stated degree, no two terms share
// an exponent vector, no zero coefficients survive.
class WeightedPolynomial {
 public:
  WeightedPolynomial(WeightSystem ambient, Int degree, std::vector<Term> terms);

  const WeightSystem& ambient() const { return ambient_; }
  const Int& degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t variables() const { return ambient_.size(); }

  // Exponent of a pure power of variable i, if such a term exists.
  std::optional<Int> pure_exponent(std::size_t i) const;

  std::string to_string() const;

 private:
  WeightSystem ambient_;
  Int degree_;
  std::vector<Term> terms_;
};

// Hypersurface {poly = 0} in P(ambient).
struct WeightedHypersurface {
  WeightedPolynomial poly;

  const WeightSystem& ambient() const { return poly.ambient(); }
  const Int& degree() const { return poly.degree(); }
  // Dimension of the hypersurface itself.
  std::size_t dimension() const { return poly.variables() - 2; }
};

// Complete intersection inside a product of weighted projective spaces,
// tracked at the level of degree bookkeeping: one multidegree row per
// equation, one column per factor.
struct CompleteIntersection {
  std::vector<WeightSystem> factors;
  std::vector<std::vector<Int>> multidegrees;

  std::string to_string() const;
};

// Convenience builders used throughout the tests.
Monomial monomial(std::initializer_list<long> exps);
WeightSystem weight_system(std::initializer_list<long> ws);
std::vector<Int> int_vec(std::initializer_list<long> xs);

}  // namespace wtwist
