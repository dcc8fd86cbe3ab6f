#ifndef BIDISC_MINIMALITY_HPP
#define BIDISC_MINIMALITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bidisc/elimination.hpp"
#include "bidisc/irreducibility.hpp"

namespace bidisc {

struct MinimalityReport {
  int d_y = 0;
  Degree deg_disc;
  bool abs_irreducible = false;
  bool minimal = false;        // abs_irreducible and deg_disc == d_y - 1
  bool almost_minimal = false; // abs_irreducible and deg_disc == d_y
  std::optional<int> genus_if_extremal;  // (deg_disc - d_y + 1)/2 when integral
  UPoly disc;
};

MinimalityReport minimality_report(const BPoly& f);

// Plane-automorphism generator: Swap is (x,y) -> (y,x); Elementary is
// (x,y) -> (x, lambda*y + p(x)).
struct AutGen {
  bool is_swap = false;
  Rat lambda;
  UPoly p;
  static AutGen swap() { return AutGen{true, Rat(1), UPoly()}; }
  static AutGen elementary(const Rat& lambda, UPoly p) {
    require(!is_zero(lambda), Err::BadParams, "elementary generator needs lambda != 0");
    return AutGen{false, lambda, std::move(p)};
  }
};

// word = [g1,...,gk] represents sigma = g1 о g2 о ... о gk (gk innermost);
// apply_aut(word, f) = f о sigma, computed generator by generator.
using AutWord = std::vector<AutGen>;

BPoly apply_aut(const AutWord& w, const BPoly& f);
AutWord invert_word(const AutWord& w);
inline AutWord compose_words(AutWord a, const AutWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
// components (sigma_x, sigma_y) of the composed automorphism
std::pair<BPoly, BPoly> aut_components(const AutWord& w);

// For monic minimal f, a word sigma with f o sigma = y exactly.
AutWord extract_automorphism(const BPoly& f);

// Deterministic coordinate polynomial: f = y o sigma for a seeded random word.
std::pair<BPoly, AutWord> random_coordinate(std::uint64_t seed, int steps, int coeff_bound,
                                            int deg_bound);

struct MonicFamilyReport {
  int r = 0;
  Degree deg_disc;
  bool attains = false;
  bool witness_unavailable = false;
  // word sigma and univariate g with  apply_aut(word, f) == g(y)  exactly;
  // equivalently f = g о w_y for w = invert_word(word).
  std::optional<std::pair<AutWord, UPoly>> witness;
};

MonicFamilyReport monic_family_check(const BPoly& f);

// f = g(h) with g in Q[t] of degree r and h monic of y-degree d_y/r,
// when such a decomposition exists.
std::optional<std::pair<UPoly, BPoly>> decompose_composite(const BPoly& f, int r);

struct SymmetryReport {
  int n_x = 0;  // distinct roots of lc_y over the closure
  int n_y = 0;  // distinct roots of lc_x over the closure
  bool nondegenerate = false;
  bool vanishes_at_inf_inf = false;
  bool eq_a = false;  // deg_x disc_y = d_y + n_y - 1
  bool eq_b = false;  // deg_y disc_x = d_x + n_x - 1
  Degree deg_disc_y, deg_disc_x;
};

SymmetryReport symmetry_report(const BPoly& f);

struct AppendixCReport {
  bool jacobian_const = false;
  bool degree_dualities = false;
  bool monicity = false;
  bool disc_degree = false;     // deg_x Disc_y(sigma_x) = deg_y sigma_x - 1
  bool disc_applicable = false; // deg_y sigma_x != 0
  bool all_pass = false;
  int deg_y_sigma_x = 0;
  int deg_disc_sigma_x = 0;
};

AppendixCReport verify_appendixc(const AutWord& w);

}  // namespace bidisc

#endif
