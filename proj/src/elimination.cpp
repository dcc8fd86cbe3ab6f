#include "bidisc/elimination.hpp"

namespace bidisc {

UPoly resultant_y_prs(const BPoly& f, const BPoly& g) {
  UPoly r = resultant_subres<UPoly>(f, g);
  return r;
}

UPoly resultant_y_sylvester(const BPoly& f, const BPoly& g) {
  require(!f.zero() && !g.zero(), Err::ZeroPolynomial, "resultant with zero operand");
  int m = f.deg(), n = g.deg();
  int sign = (m % 2) && (n % 2) ? -1 : 1;  // matches the PRS swap convention
  if (m < n) {
    UPoly r = sylvester_resultant<UPoly>(g.coeffs(), n, f.coeffs(), m);
    return sign < 0 ? UPoly(-r) : r;
  }
  return sylvester_resultant<UPoly>(f.coeffs(), m, g.coeffs(), n);
}

UPoly resultant_y(const BPoly& f, const BPoly& g) {
  require(!f.zero() && !g.zero(), Err::ZeroPolynomial, "resultant with zero operand");
  require(f.deg() >= 1 || g.deg() >= 1, Err::BothConstantInY,
          "resultant of two polynomials constant in y");
  if (std::max(f.deg(), g.deg()) < 6) return resultant_y_sylvester(f, g);
  return resultant_y_prs(f, g);
}

UPoly resultant_form(const BForm& P, const BForm& Q) {
  return sylvester_resultant<UPoly>(P.c, P.d, Q.c, Q.d);
}

namespace {

int disc_sign(int d) { return (d * (d - 1) / 2) % 2 ? -1 : 1; }

}  // namespace

DiscReport disc_affine(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "discriminant of zero");
  require(f.deg() >= 1, Err::DegreeZeroInY, "discriminant needs y-degree >= 1");
  const int d = f.deg();
  UPoly res = d == 1 ? lc_y(f) : resultant_y(f, deriv_y(f));
  UPoly disc = divexact(res * Rat(disc_sign(d)), lc_y(f));
  DiscReport rep;
  rep.disc = disc;
  rep.deg = disc.degree();
  rep.d_y = d;
  rep.upper_bound = 2 * degree_x(f).value_or(0) * (d - 1);
  rep.separable = !disc.zero();
  rep.ord_inf = rep.separable ? rep.upper_bound - rep.deg.value() : 0;
  return rep;
}

UPoly disc_form(const BForm& F) {
  require(F.d >= 2, Err::DegreeTooSmall, "form discriminant needs degree >= 2");
  require(!F.zero(), Err::ZeroPolynomial, "discriminant of the zero form");
  UPoly res = resultant_form(form_dY0(F), form_dY1(F));
  Rat scale = rat(disc_sign(F.d), 1) / rat_pow(Rat(F.d), (unsigned long)(F.d - 2));
  return res * scale;
}

DiscReport disc_degree_report(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "report of zero");
  require(is_primitive_y(f), Err::NotPrimitive, "input has a nonconstant factor in K[x]");
  require(f.deg() >= 1, Err::DegreeZeroInY, "report needs y-degree >= 1");
  DiscReport rep = disc_affine(f);
  if (rep.separable) {
    require(rep.deg.value() + rep.ord_inf == rep.upper_bound, Err::Internal,
            "degree bookkeeping violated");
    require(rep.deg.value() <= rep.upper_bound, Err::Internal,
            "discriminant degree exceeds 2*d_x*(d_y-1)");
  }
  return rep;
}

BPoly ygcd(const BPoly& a, const BPoly& b) {
  if (a.zero()) return b.zero() ? b : content_primitive(b).second;
  if (b.zero()) return content_primitive(a).second;
  BPoly A = content_primitive(a).second;
  BPoly B = content_primitive(b).second;
  if (A.deg() < B.deg()) std::swap(A, B);
  while (!B.zero()) {
    BPoly r = prem<UPoly>(A, B);
    A = B;
    B = r.zero() ? r : content_primitive(r).second;
  }
  // normalise: monic leading coefficient when constant in y
  if (A.deg() == 0) return BPoly(monic(A.coeff(0)));
  return A;
}

DegreeProfile degree_profile(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "profile of the zero polynomial");
  DegreeProfile p;
  p.d_y = f.deg();
  p.d_x = degree_x(f).value_or(0);
  p.lc_y = lc_y(f);
  p.const_coeff_y = const_coeff_y(f);
  BPoly t = transpose(f);
  p.lc_x_in_y = t.lc();
  p.monic_in_y = p.lc_y.size() == 1;
  p.monic_in_x = p.lc_x_in_y.size() == 1;
  p.primitive_in_y = is_primitive_y(f);
  p.vanishes_at_inf_inf = is_zero(f.coeff(p.d_y).coeff(p.d_x));
  if (p.d_y >= 1) {
    BPoly g = ygcd(f, deriv_y(f));
    p.separable_in_y = g.zero() || g.deg() == 0;
  } else {
    p.separable_in_y = true;
  }
  return p;
}

}  // namespace bidisc
