#ifndef BIDISC_FORM_HPP
#define BIDISC_FORM_HPP

#include <utility>
#include <vector>

#include "bidisc/bpoly.hpp"

namespace bidisc {

// Homogeneous form of declared degree d in (Y0, Y1) over Q[x].
// coeffs[k] multiplies Y0^k Y1^(d-k); leading entries may be zero, the
// degree is declared rather than inferred.
struct BForm {
  int d = 0;
  std::vector<UPoly> c;  // size d+1

  BForm() : c(1) {}
  explicit BForm(int degree) : d(degree), c(degree + 1) {}

  const UPoly& coeff(int k) const {
    static const UPoly kZero{};
    if (k < 0 || k > d) return kZero;
    return c[k];
  }
  bool zero() const {
    for (const auto& u : c)
      if (!u.zero()) return false;
    return true;
  }
  friend bool operator==(const BForm& a, const BForm& b) { return a.d == b.d && a.c == b.c; }
};

inline BForm homogenize(const BPoly& f) {
  if (f.zero()) return BForm();
  BForm F(f.deg());
  for (int k = 0; k <= F.d; ++k) F.c[k] = f.coeff(k);
  return F;
}

// Substitute (Y0, Y1) -> (y, 1); drops degree when Y1 | F.
inline BPoly dehomogenize(const BForm& F) { return BPoly::from_coeffs(F.c); }

// Y1 divides F iff the Y0^d monomial is absent; Y0 divides F iff the Y1^d
// monomial is absent.
inline bool y1_divides(const BForm& F) { return F.c.empty() || F.c.back().zero(); }
inline bool y0_divides(const BForm& F) { return F.c.empty() || F.c[0].zero(); }

inline BForm form_mul(const BForm& A, const BForm& B) {
  BForm R(A.d + B.d);
  for (int i = 0; i <= A.d; ++i) {
    if (A.c[i].zero()) continue;
    for (int j = 0; j <= B.d; ++j) R.c[i + j] = R.c[i + j] + A.c[i] * B.c[j];
  }
  return R;
}

inline BForm form_scale(const BForm& A, const Rat& s) {
  BForm R(A.d);
  for (int i = 0; i <= A.d; ++i) R.c[i] = A.c[i] * s;
  return R;
}

// d/dY0 as a form of declared degree d-1.
inline BForm form_dY0(const BForm& F) {
  require(F.d >= 1, Err::DegreeTooSmall, "derivative of a degree-0 form");
  BForm R(F.d - 1);
  for (int k = 0; k <= F.d - 1; ++k) R.c[k] = F.c[k + 1] * Rat(k + 1);
  return R;
}

// d/dY1 as a form of declared degree d-1.
inline BForm form_dY1(const BForm& F) {
  require(F.d >= 1, Err::DegreeTooSmall, "derivative of a degree-0 form");
  BForm R(F.d - 1);
  for (int k = 0; k <= F.d - 1; ++k) R.c[k] = F.c[k] * Rat(F.d - k);
  return R;
}

// Swap Y0 <-> Y1.
inline BForm form_swap(const BForm& F) {
  BForm R(F.d);
  for (int k = 0; k <= F.d; ++k) R.c[k] = F.c[F.d - k];
  return R;
}

}  // namespace bidisc

#endif
