#ifndef BIDISC_BPOLY_HPP
#define BIDISC_BPOLY_HPP

#include <utility>
#include <vector>

#include "bidisc/poly.hpp"

namespace bidisc {

// BPoly is Poly<UPoly>: f = sum_j f_j(x) y^j. These helpers fix the variable
// roles (inner coefficient variable x, outer variable y).

inline int deg_y(const BPoly& f) { return f.deg(); }
inline Degree degree_y(const BPoly& f) { return f.degree(); }

inline Degree degree_x(const BPoly& f) {
  Degree d = Degree::neg_inf();
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}
inline int deg_x(const BPoly& f) { return degree_x(f).value(); }

inline BPoly deriv_y(const BPoly& f) { return derivative(f); }

inline BPoly deriv_x(const BPoly& f) {
  std::vector<UPoly> c;
  c.reserve(f.size());
  for (const auto& fj : f.coeffs()) c.push_back(derivative(fj));
  return BPoly::from_coeffs(std::move(c));
}

// f(alpha, y) as a polynomial in y.
inline UPoly eval_x(const BPoly& f, const Rat& alpha) {
  std::vector<Rat> c;
  c.reserve(f.size());
  for (const auto& fj : f.coeffs()) c.push_back(eval(fj, alpha));
  return UPoly::from_coeffs(std::move(c));
}

// f(x, beta) as a polynomial in x.
inline UPoly eval_y(const BPoly& f, const Rat& beta) {
  UPoly r;
  for (int k = f.size() - 1; k >= 0; --k) r = r * beta + f.coeff(k);
  return r;
}

inline Rat eval_xy(const BPoly& f, const Rat& alpha, const Rat& beta) {
  return eval(eval_x(f, alpha), beta);
}

// Swap the roles of x and y.
inline BPoly transpose(const BPoly& f) {
  if (f.zero()) return f;
  std::vector<std::vector<Rat>> grid(deg_x(f) + 1, std::vector<Rat>(f.size(), Rat(0)));
  for (int j = 0; j < f.size(); ++j)
    for (int i = 0; i < f.coeff(j).size(); ++i) grid[i][j] = f.coeff(j).coeff(i);
  std::vector<UPoly> c;
  c.reserve(grid.size());
  for (auto& row : grid) c.push_back(UPoly::from_coeffs(std::move(row)));
  return BPoly::from_coeffs(std::move(c));
}

// y -> lambda*y + p(x)
inline BPoly subst_y(const BPoly& f, const Rat& lambda, const UPoly& p) {
  BPoly img = BPoly::from_coeffs({p, UPoly(lambda)});
  BPoly r;
  for (int k = f.size() - 1; k >= 0; --k) r = r * img + BPoly(f.coeff(k));
  return r;
}

// x -> x + alpha, coefficientwise Taylor shift
inline BPoly shift_x(const BPoly& f, const Rat& alpha) {
  std::vector<UPoly> c;
  c.reserve(f.size());
  for (const auto& fj : f.coeffs()) c.push_back(shift(fj, alpha));
  return BPoly::from_coeffs(std::move(c));
}

// Full bivariate composition f(gx, gy).
inline BPoly compose_xy(const BPoly& f, const BPoly& gx, const BPoly& gy) {
  BPoly r;
  for (int k = f.size() - 1; k >= 0; --k) r = r * gy + compose(f.coeff(k), gx);
  return r;
}

// y^{d_y} f(x, 1/y): reverse the coefficient list.
inline BPoly reverse_y(const BPoly& f) {
  std::vector<UPoly> c(f.coeffs().rbegin(), f.coeffs().rend());
  return BPoly::from_coeffs(std::move(c));
}

inline const UPoly& lc_y(const BPoly& f) { return f.lc(); }
inline const UPoly& const_coeff_y(const BPoly& f) { return f.coeff(0); }

// Content in K[x], normalised monic; constant scalars stay in the primitive part.
inline UPoly content_y(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "content of the zero polynomial");
  UPoly g;
  for (const auto& fj : f.coeffs()) {
    if (fj.zero()) continue;
    g = g.zero() ? fj : gcd(g, fj);
    if (g.size() == 1) break;
  }
  return monic(g);
}

inline std::pair<UPoly, BPoly> content_primitive(const BPoly& f) {
  UPoly c = content_y(f);
  if (c.size() == 1) return {UPoly(Rat(1)), f};
  std::vector<UPoly> parts;
  parts.reserve(f.size());
  for (const auto& fj : f.coeffs()) parts.push_back(fj.zero() ? fj : divexact(fj, c));
  return {c, BPoly::from_coeffs(std::move(parts))};
}

inline bool is_primitive_y(const BPoly& f) { return content_y(f).size() == 1; }

inline BPoly bp_from_rat(const Rat& r) { return BPoly(UPoly(r)); }

inline bool is_constant_total(const BPoly& f) {
  return f.size() <= 1 && (f.zero() || f.coeff(0).size() <= 1);
}

// x as a BPoly
inline BPoly bp_x() { return BPoly(UPoly::from_coeffs({Rat(0), Rat(1)})); }
// y as a BPoly
inline BPoly bp_y() { return BPoly::from_coeffs({UPoly(), UPoly(Rat(1))}); }

}  // namespace bidisc

#endif
