#pragma once

#include <stdexcept>
#include <string>

namespace wtwist {

// Recoverable rejection of an input: the operation's preconditions or the
// geometry they encode do not hold.  The CLI maps these to exit code 2.
class domain_error : public std::runtime_error {
 public:
  domain_error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Broken internal invariant (a bug, not bad input).  CLI exit code 3.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Error codes used across the library.  Kept as functions returning the
// canonical spelling so tests and the CLI match on one definition.
namespace errc {
inline const char* non_divisible_degree() { return "NonDivisibleDegree"; }
inline const char* non_divisible_exponent() { return "NonDivisibleExponent"; }
inline const char* unsupported_shape() { return "UnsupportedShape"; }
inline const char* non_fermat_weights() { return "NonFermatWeights"; }
inline const char* shape_error() { return "ShapeError"; }
inline const char* degree_mismatch() { return "DegreeMismatch"; }
inline const char* bad_partition() { return "BadPartition"; }
inline const char* weight_relation_violated() {
  return "WeightRelationViolated";
}
inline const char* unbalanced_fibration() { return "UnbalancedFibration"; }
inline const char* unsafe_elimination() { return "UnsafeElimination"; }
inline const char* not_coprime() { return "NotCoprime"; }
inline const char* nothing_to_contract() { return "NothingToContract"; }
inline const char* non_integral_result() { return "NonIntegralResult"; }
inline const char* negative_hodge() { return "NegativeHodge"; }
inline const char* non_integer_genus() { return "NonIntegerGenus"; }
inline const char* no_integral_class() { return "NoIntegralClass"; }
inline const char* validation() { return "ValidationError"; }
}  // namespace errc

}  // namespace wtwist
