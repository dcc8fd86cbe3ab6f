#ifndef BIDISC_IRREDUCIBILITY_HPP
#define BIDISC_IRREDUCIBILITY_HPP

#include "bidisc/elimination.hpp"

namespace bidisc {

struct FactorCount {
  bool squarefree = false;
  int abs_factor_count = 0;  // number of irreducible factors over the closure
};

// true iff gcd(f, df/dy) over Q(x) is constant in y
bool squarefree_in_y(const BPoly& f);

// Ruppert-Gao count: dimension of the space of closed 1-forms
// (g dx + h dy)/f with deg g <= (d_x-1, d_y), deg h <= (d_x, d_y-1),
// which for a squarefree primitive f in characteristic 0 equals the number
// of absolutely irreducible factors.
FactorCount absolute_factor_count(const BPoly& f);

bool is_absolutely_irreducible(const BPoly& f);

}  // namespace bidisc

#endif
