#ifndef BIDISC_ELIMINATION_HPP
#define BIDISC_ELIMINATION_HPP

#include <utility>
#include <vector>

#include "bidisc/form.hpp"

namespace bidisc {

inline Rat ring_pow(const Rat& a, int e) { return rat_pow(a, (unsigned long)e); }
template <class T>
Poly<T> ring_pow(const Poly<T>& a, int e) {
  return poly_pow(a, e);
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B, for deg A >= deg B.
template <class R>
Poly<R> prem(const Poly<R>& A, const Poly<R>& B) {
  const int dB = B.deg();
  const R& d = B.lc();
  Poly<R> r = A;
  int e = A.degree().value_or(dB - 1) - dB + 1;
  while (!r.zero() && r.deg() >= dB) {
    Poly<R> s = Poly<R>::monomial(r.lc(), r.deg() - dB) * B;
    r = r * d - s;
    --e;
  }
  while (e-- > 0) r = r * d;
  return r;
}

template <class R>
Poly<R> poly_divexact_scalar(const Poly<R>& p, const R& d) {
  std::vector<R> c;
  c.reserve(p.size());
  for (const auto& pk : p.coeffs()) c.push_back(is_zero(pk) ? R() : divexact(pk, d));
  return Poly<R>::from_coeffs(std::move(c));
}

// Resultant via the subresultant PRS with fraction-free arithmetic; exact over
// any integral domain R with exact division. Bit-exactly equal to the
// Sylvester determinant (exercised against it in the tests).
template <class R>
R resultant_subres(Poly<R> A, Poly<R> B) {
  if (A.zero() || B.zero()) return R();
  int s = 1;
  if (A.deg() < B.deg()) {
    if ((A.deg() % 2) && (B.deg() % 2)) s = -s;
    std::swap(A, B);
  }
  if (A.deg() == 0) return R(Rat(1));
  if (B.deg() == 0) return ring_pow(B.coeff(0), A.deg());
  R g = R(Rat(1)), h = R(Rat(1));
  while (true) {
    int dA = A.deg(), dB = B.deg();
    int delta = dA - dB;
    if ((dA % 2) && (dB % 2)) s = -s;
    Poly<R> rem = prem(A, B);
    A = B;
    B = poly_divexact_scalar(rem, R(g * ring_pow(h, delta)));
    g = A.lc();
    if (delta > 0) h = divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
    if (B.zero()) return R();
    if (B.deg() == 0) {
      int l = A.deg();
      R r = divexact(ring_pow(B.coeff(0), l), ring_pow(h, l - 1));
      return s < 0 ? R(-r) : r;
    }
  }
}

// Fraction-free determinant (Bareiss) with row pivoting.
template <class R>
R bareiss_det(std::vector<std::vector<R>> M) {
  const int n = (int)M.size();
  if (n == 0) return R(Rat(1));
  int sign = 1;
  R prev = R(Rat(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero(M[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(M[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return R();
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R t = R(M[i][j] * M[k][k] - M[i][k] * M[k][j]);
        M[i][j] = is_zero(t) ? R() : divexact(t, prev);
      }
      M[i][k] = R();
    }
    prev = M[k][k];
  }
  R det = M[n - 1][n - 1];
  return sign < 0 ? R(-det) : det;
}

// Sylvester resultant from coefficient vectors with *declared* degrees m and n
// (a[k] multiplies X^k; entries above the actual degree may be zero). This is
// the formal resultant needed for binary forms whose leading coefficient
// vanishes.
template <class R>
R sylvester_resultant(const std::vector<R>& a, int m, const std::vector<R>& b, int n) {
  if (m == 0 && n == 0) return R(Rat(1));
  if (m == 0) return ring_pow(a[0], n);
  if (n == 0) return ring_pow(b[0], m);
  const int N = m + n;
  std::vector<std::vector<R>> M(N, std::vector<R>(N, R()));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t <= m; ++t) M[i][i + t] = a[m - t];
  for (int i = 0; i < m; ++i)
    for (int t = 0; t <= n; ++t) M[n + i][i + t] = b[n - t];
  return bareiss_det(std::move(M));
}

// ---- concrete operations --------------------------------------------------

struct DiscReport {
  UPoly disc;
  Degree deg;        // degree of disc; minus infinity when disc == 0
  int upper_bound;   // 2 * d_x * (d_y - 1)
  int ord_inf;       // upper_bound - deg; meaningful only when separable
  int d_y;
  bool separable;    // disc != 0
};

// Both subresultant-PRS and Sylvester paths exposed so tests can pin them to
// each other; resultant_y dispatches (Sylvester below y-degree 6).
UPoly resultant_y_prs(const BPoly& f, const BPoly& g);
UPoly resultant_y_sylvester(const BPoly& f, const BPoly& g);
UPoly resultant_y(const BPoly& f, const BPoly& g);

UPoly resultant_form(const BForm& P, const BForm& Q);

DiscReport disc_affine(const BPoly& f);
UPoly disc_form(const BForm& F);
DiscReport disc_degree_report(const BPoly& f);

// gcd in Q(x)[y], represented primitive in Q[x][y].
BPoly ygcd(const BPoly& a, const BPoly& b);

struct DegreeProfile {
  int d_x = 0;
  int d_y = 0;
  UPoly lc_y;
  UPoly lc_x_in_y;  // leading coefficient w.r.t. x, a polynomial in y
  UPoly const_coeff_y;
  bool monic_in_y = false;
  bool monic_in_x = false;
  bool primitive_in_y = false;
  bool separable_in_y = false;
  bool vanishes_at_inf_inf = false;
};

DegreeProfile degree_profile(const BPoly& f);

}  // namespace bidisc

#endif
