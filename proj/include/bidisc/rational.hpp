#ifndef BIDISC_RATIONAL_HPP
#define BIDISC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "bidisc/error.hpp"

namespace bidisc {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as construction goes through rat()/canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  require(den != 0, Err::DivisionByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  require(den != 0, Err::DivisionByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline Rat rat_pow(const Rat& a, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), e);
  return r;  // powers of a canonical rational stay canonical
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

// Exact integer q-th root if it exists.
inline std::optional<Int> int_root(const Int& n, unsigned long q) {
  if (q == 1) return n;
  if (sgn(n) < 0 && q % 2 == 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
  if (!exact) return std::nullopt;
  return r;
}

// Exact rational q-th root if it exists (q >= 1). For even q the nonnegative
// root is returned.
inline std::optional<Rat> rat_root(const Rat& a, unsigned long q) {
  auto rn = int_root(Int(a.get_num()), q);
  if (!rn) return std::nullopt;
  auto rd = int_root(Int(a.get_den()), q);
  if (!rd) return std::nullopt;
  return rat(*rn, *rd);
}

}  // namespace bidisc

#endif
