#ifndef BIDISC_RATIONAL_ROOTS_HPP
#define BIDISC_RATIONAL_ROOTS_HPP

#include <utility>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), sorted
  UPoly rootless;                          // cofactor with no rational root
  bool complete = false;                   // rootless is constant
};

// All rational roots of a nonzero univariate polynomial, with multiplicities.
RationalRoots rational_roots(const UPoly& u);

// Factor |n| > 0 into primes (trial division + Pollard rho).
std::vector<std::pair<Int, int>> factor_integer(Int n);

std::vector<Int> divisors_of(const Int& n);

}  // namespace bidisc

#endif
