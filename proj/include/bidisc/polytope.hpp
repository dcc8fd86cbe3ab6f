#ifndef BIDISC_POLYTOPE_HPP
#define BIDISC_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "bidisc/bpoly.hpp"

namespace bidisc {

struct PolytopeData {
  std::vector<std::pair<int, int>> vertices;  // counterclockwise, starting at (0,0)
  int a = 0;   // deg_x f(x,0)
  int b = 0;   // deg_x lc_y(f)
  int c = 0;   // min(a, b)
  int d_x = 0;
  int d_y = 0;
  bool normal_position = false;  // b <= a
  long long two_volume = 0;      // twice the Euclidean area
};

// Convex hull of Supp(f) together with (0,0) and (0,d_y).
PolytopeData generic_polytope(const BPoly& f);

// Twice the area of the generic polytope; defined for every nonzero f.
long long newton_two_volume(const BPoly& f);

// Right-edge data of a minimal polynomial: the edge polynomial equals
// unit * x^b (y^p + beta x^q)^n with p*n = d_y and q*n = a-b (alpha is
// normalised to 1, the scale sits in `unit`).
struct CharData {
  int p = 1;
  int q = 0;
  int n = 1;
  Rat alpha;  // always 1 after normalisation
  Rat beta;   // x-side coefficient relative to alpha
  int b = 0;
  Rat unit;   // coefficient of x^b y^{d_y}
};

CharData edge_char_data(const BPoly& f);

// Exact reconstruction of the edge polynomial described by CharData,
// as a BPoly: unit * x^b * (y^p + beta x^q)^n. Requires q >= 0.
BPoly edge_poly_of(const CharData& cd);

}  // namespace bidisc

#endif
