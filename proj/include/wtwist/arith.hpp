#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wtwist {

// All public arithmetic is exact: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

template <typename It>
Int gcd_range(It first, It last) {
  Int g = 0;
  for (It it = first; it != last; ++it) g = int_gcd(g, *it);
  return g;
}

inline bool divides(const Int& a, const Int& b) {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

// Exact quotient; caller must guarantee divisibility.
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Least non-negative residue, also for negative a.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a modulo m in [0, m); returns false when gcd(a, m) > 1.
inline bool try_mod_inverse(const Int& a, const Int& m, Int& out) {
  return mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline Int binom2(const Int& n) { return n * (n - 1) / 2; }

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Narrowing helper for loop bounds; the caller provides a hard cap so a
// pathological CLI input cannot turn into an unbounded allocation.
std::uint64_t to_u64_checked(const Int& v, std::uint64_t cap,
                             const char* what);

std::string rat_to_string(const Rat& q);

}  // namespace wtwist
