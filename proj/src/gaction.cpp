#include "bidisc/gaction.hpp"

#include <numeric>

#include "bidisc/minimality.hpp"

namespace bidisc {

GMat::GMat(UPoly a_, UPoly b_, UPoly c_, UPoly d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  UPoly dp = a * d - b * c;
  require(!dp.zero() && dp.deg() == 0, Err::BadParams,
          "GL2(K[x]) matrix needs a nonzero constant determinant");
  det = dp.coeff(0);
}

GMat GMat::identity() { return GMat(UPoly(Rat(1)), UPoly(), UPoly(), UPoly(Rat(1))); }

GMat GMat::tau() { return GMat(UPoly(), UPoly(Rat(1)), UPoly(Rat(1)), UPoly()); }

GMat GMat::dejonquieres(const Rat& lambda, const UPoly& h) {
  require(!is_zero(lambda), Err::BadParams, "De Jonquieres scale must be nonzero");
  return GMat(UPoly(lambda), h, UPoly(), UPoly(Rat(1)));
}

GMat GMat::diag(const Rat& u, const Rat& v) {
  return GMat(UPoly(u), UPoly(), UPoly(), UPoly(v));
}

GMat GMat::inverse() const {
  Rat inv = Rat(1 / det);
  return GMat(d * inv, UPoly(-b) * inv, UPoly(-c) * inv, a * inv);
}

GMat operator*(const GMat& s, const GMat& t) {
  return GMat(s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d, s.c * t.a + s.d * t.c,
              s.c * t.b + s.d * t.d);
}

BForm apply_form(const GMat& s, const BForm& F) {
  const int d = F.d;
  // Y0 -> a Y0 + b Y1 and Y1 -> c Y0 + d Y1 as degree-1 forms
  BForm A(1), C(1);
  A.c[1] = s.a;
  A.c[0] = s.b;
  C.c[1] = s.c;
  C.c[0] = s.d;
  std::vector<BForm> apow(d + 1, BForm(0)), cpow(d + 1, BForm(0));
  apow[0].c[0] = UPoly(Rat(1));
  cpow[0].c[0] = UPoly(Rat(1));
  for (int k = 1; k <= d; ++k) {
    apow[k] = form_mul(apow[k - 1], A);
    cpow[k] = form_mul(cpow[k - 1], C);
  }
  BForm R(d);
  for (int k = 0; k <= d; ++k) {
    if (F.c[k].zero()) continue;
    BForm term = form_mul(apow[k], cpow[d - k]);
    for (int j = 0; j <= d; ++j) R.c[j] = R.c[j] + term.c[j] * F.c[k];
  }
  return R;
}

BPoly apply_affine(const GMat& s, const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "action on the zero polynomial");
  BForm G = apply_form(s, homogenize(f));
  require(!G.c[G.d].zero(), Err::DegreeDrop,
          "transformed form divisible by Y1: a linear factor in y was sent to infinity");
  return dehomogenize(G);
}

namespace {

bool is_unit_times_y(const BPoly& f) {
  return f.deg() == 1 && f.coeff(0).zero() && f.coeff(1).size() == 1;
}

}  // namespace

ReductionTrace g_reduce(const BPoly& f) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "reduction needs y-degree >= 1");
  require(is_primitive_y(f), Err::NotPrimitive, "reduction needs a primitive input");
  ReductionTrace tr;
  tr.input = f;
  BPoly cur = f;
  tr.volume_sequence.push_back(newton_two_volume(cur));
  const int dy = f.deg();
  int guard = 0;
  while (true) {
    require(++guard < 10000, Err::Internal, "reduction failed to terminate");
    if (is_unit_times_y(cur)) {
      tr.d_y = 1;
      tr.d_x = 0;
      tr.c = 0;
      tr.reduced = true;
      break;
    }
    if (cur.coeff(0).zero())
      throw Error(Err::NotUnibranchEdge, "y divides a reduction state: input is not minimal");
    PolytopeData P = generic_polytope(cur);
    if (P.b > P.a) {
      GMat t = GMat::tau();
      cur = apply_affine(t, cur);
      tr.word.push_back(t);
      tr.volume_sequence.push_back(newton_two_volume(cur));
      P = generic_polytope(cur);
    }
    CharData cd = edge_char_data(cur);
    if (cd.p != 1) {
      tr.d_y = P.d_y;
      tr.d_x = P.d_x;
      tr.c = P.c;
      tr.reduced = (P.d_x - P.c) % P.d_y != 0;
      break;
    }
    GMat step = GMat::dejonquieres(Rat(1), UPoly::monomial(Rat(-cd.beta), cd.q));
    cur = apply_affine(step, cur);
    tr.word.push_back(step);
    tr.volume_sequence.push_back(newton_two_volume(cur));
    if (cur.deg() == dy && !cur.coeff(0).zero()) {
      // volume must drop strictly on a kill step
      size_t k = tr.volume_sequence.size();
      require(tr.volume_sequence[k - 1] < tr.volume_sequence[k - 2], Err::Internal,
              "kill step did not decrease the polytope volume");
    }
  }
  tr.output = cur;
  return tr;
}

const char* div_case_name(DivCase c) {
  switch (c) {
    case DivCase::NonReducedDyDivides: return "NonReducedDyDivides";
    case DivCase::Case1_line: return "Case1_line";
    case DivCase::Case2_dx1: return "Case2_dx1";
    case DivCase::Case3_dxDividesDy: return "Case3_dxDividesDy";
    case DivCase::Case4_gcdWindow: return "Case4_gcdWindow";
  }
  return "?";
}

DivisibilityReport divisibility_report(const BPoly& f) {
  MinimalityReport mr = minimality_report(f);
  require(mr.minimal, Err::NotMinimal, "divisibility cases apply to minimal polynomials");
  DivisibilityReport rep{DivCase::Case1_line, DivCase::Case1_line, false, 0, g_reduce(f)};
  const ReductionTrace& tr = rep.trace;

  // classify the reduced representative
  int dx = tr.d_x, dy = tr.d_y, c = tr.c;
  require(tr.reduced, Err::Internal, "g_reduce of a minimal polynomial must end reduced");
  if (dx == 0) {
    require(c == 0 && dy == 1, Err::Internal, "reduced case 1 must have c=0, d_y=1");
    rep.reduced_case = DivCase::Case1_line;
  } else if (dx == 1) {
    require(c == 0 && dy > 1, Err::Internal, "reduced case 2 must have c=0, d_y>1");
    rep.reduced_case = DivCase::Case2_dx1;
  } else if (c == 0) {
    require(dy % dx == 0, Err::Internal, "reduced case 3 must have d_x | d_y");
    rep.reduced_case = DivCase::Case3_dxDividesDy;
  } else {
    int g = std::gcd(dx - c, dy);
    require(2 <= g && g <= dy / 2, Err::Internal, "reduced case 4 gcd window violated");
    rep.reduced_case = DivCase::Case4_gcdWindow;
    rep.gcd_window = g;
  }

  // the input itself: reduced or the nonreduced branch of the theorem
  PolytopeData P0 = generic_polytope(f);
  int dy0 = P0.d_y, dx0 = P0.d_x, c0 = P0.c;
  rep.input_reduced = dy0 == 1 ? (dx0 == 0) : ((dx0 - c0) % dy0 != 0);
  if (rep.input_reduced) {
    rep.outcome = rep.reduced_case;
  } else {
    require((dx0 - c0) % dy0 == 0, Err::Internal, "nonreduced input must satisfy d_y | d_x - c");
    rep.outcome = DivCase::NonReducedDyDivides;
  }
  return rep;
}

BPoly subst_rational(const BPoly& f, const BPoly& x_num, const BPoly& x_den, const BPoly& y_num,
                     const BPoly& y_den) {
  require(!x_den.zero() && !y_den.zero(), Err::DivisionByZero, "zero denominator in substitution");
  if (f.zero()) return f;
  const int dx = degree_x(f).value_or(0);
  const int dy = f.deg();
  auto powers = [](const BPoly& p, int e) {
    std::vector<BPoly> pw(e + 1, BPoly(UPoly(Rat(1))));
    for (int k = 1; k <= e; ++k) pw[k] = pw[k - 1] * p;
    return pw;
  };
  auto xn = powers(x_num, dx), xd = powers(x_den, dx);
  auto yn = powers(y_num, dy), yd = powers(y_den, dy);
  BPoly raw;
  for (int j = 0; j <= dy; ++j) {
    const UPoly& fj = f.coeff(j);
    if (fj.zero()) continue;
    BPoly row;
    for (int i = 0; i < fj.size(); ++i) {
      if (is_zero(fj.coeff(i))) continue;
      row = row + xn[i] * xd[dx - i] * UPoly(fj.coeff(i));
    }
    raw = raw + row * yn[j] * yd[dy - j];
  }
  BPoly den = xd[dx] * yd[dy];
  auto q = try_div(raw, den);
  require(q.has_value(), Err::NotPolynomial, "denominators do not divide out");
  return *q;
}

}  // namespace bidisc
