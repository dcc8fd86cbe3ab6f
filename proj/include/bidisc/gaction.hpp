#ifndef BIDISC_GACTION_HPP
#define BIDISC_GACTION_HPP

#include <vector>

#include "bidisc/elimination.hpp"
#include "bidisc/polytope.hpp"

namespace bidisc {

// Invertible 2x2 matrix over Q[x]; the determinant is a nonzero constant,
// checked at construction.
struct GMat {
  UPoly a, b, c, d;
  Rat det;

  GMat(UPoly a_, UPoly b_, UPoly c_, UPoly d_);
  static GMat identity();
  static GMat tau();  // [[0,1],[1,0]]
  static GMat dejonquieres(const Rat& lambda, const UPoly& h);  // y -> lambda*y + h(x)
  static GMat diag(const Rat& u, const Rat& v);
  GMat inverse() const;
  friend GMat operator*(const GMat& s, const GMat& t);
  friend bool operator==(const GMat& s, const GMat& t) {
    return s.a == t.a && s.b == t.b && s.c == t.c && s.d == t.d;
  }
};

// F(a Y0 + b Y1, c Y0 + d Y1); degree in Y preserved.
BForm apply_form(const GMat& s, const BForm& F);

// (cy+d)^{d_y} f(x, (ay+b)/(cy+d)); DegreeDrop when a linear factor in y is
// sent to infinity (the transformed form is divisible by Y1).
BPoly apply_affine(const GMat& s, const BPoly& f);

struct ReductionTrace {
  BPoly input;
  BPoly output;
  std::vector<GMat> word;  // generators applied in order: output = word(input)
  bool reduced = false;
  std::vector<long long> volume_sequence;
  int d_y = 0, d_x = 0, c = 0;  // parameters of the output
};

// Volume reduction in the GL2(K[x]) orbit: normalise position with tau,
// kill the right edge with a De Jonquieres step while p = 1.
ReductionTrace g_reduce(const BPoly& f);

enum class DivCase {
  NonReducedDyDivides,
  Case1_line,
  Case2_dx1,
  Case3_dxDividesDy,
  Case4_gcdWindow,
};

const char* div_case_name(DivCase c);

struct DivisibilityReport {
  DivCase outcome;       // classification of the input
  DivCase reduced_case;  // classification of the reduced representative
  bool input_reduced = false;
  int gcd_window = 0;  // gcd(d_x - c, d_y) of the reduced representative in case 4
  ReductionTrace trace;
};

DivisibilityReport divisibility_report(const BPoly& f);

// Substitute x -> x_num/x_den, y -> y_num/y_den and clear denominators by the
// minimal power d_x resp. d_y; NotPolynomial when the denominator does not
// divide out exactly.
BPoly subst_rational(const BPoly& f, const BPoly& x_num, const BPoly& x_den, const BPoly& y_num,
                     const BPoly& y_den);

}  // namespace bidisc

#endif
