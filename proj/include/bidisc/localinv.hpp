#ifndef BIDISC_LOCALINV_HPP
#define BIDISC_LOCALINV_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bidisc/elimination.hpp"

namespace bidisc {

// One place of the curve over x = alpha: a rational Puiseux cycle
//   y = center + sum c_k t^k   with   x = alpha + t^ram.
// Exponents are relative to the center; center == nullopt marks the place
// over y = infinity (the series then expands 1/y in the tau chart).
struct PuiseuxBranch {
  int ram = 1;
  std::vector<std::pair<int, Rat>> series;  // ascending exponents, nonzero coeffs
  int known_upto = 0;  // exponents < known_upto are complete (ignored when exact)
  bool exact = false;  // the series terminates: complete knowledge
  std::optional<Rat> center;
};

// All places of the curve over x = alpha, expanded through x-order `order`.
// NonRationalBranch when any center or series coefficient is irrational.
std::vector<PuiseuxBranch> puiseux_branches(const BPoly& f, const Rat& alpha, int order);

struct LocalReport {
  Rat alpha;
  int places = 0;
  int r_alpha = 0;
  int delta_alpha = 0;
  int ord_disc = 0;
  bool identity_holds = false;  // ord_disc == r_alpha + 2*delta_alpha
};

LocalReport local_invariants(const BPoly& f, const Rat& alpha);

// delta invariant of a single cycle from its characteristic exponents;
// the branch must be separated (gcd chain complete within the known part).
int branch_delta(const PuiseuxBranch& b);

// Local intersection multiplicity of two distinct cycles at the same center.
// nullopt when the truncation cannot decide yet.
std::optional<int> branch_intersection(const PuiseuxBranch& a, const PuiseuxBranch& b);

}  // namespace bidisc

#endif
