#include "bidisc/minimality.hpp"

#include "bidisc/polytope.hpp"
#include "bidisc/rational_roots.hpp"
#include "bidisc/rng.hpp"

namespace bidisc {

MinimalityReport minimality_report(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "minimality of zero");
  require(f.deg() >= 1, Err::DegreeZeroInY, "minimality needs y-degree >= 1");
  require(is_primitive_y(f), Err::NotPrimitive, "minimality needs a primitive input");
  MinimalityReport r;
  r.d_y = f.deg();
  DiscReport dr = disc_affine(f);
  require(dr.separable, Err::NotSeparable, "minimality needs a separable input");
  r.disc = dr.disc;
  r.deg_disc = dr.deg;
  r.abs_irreducible = is_absolutely_irreducible(f);
  int dd = r.deg_disc.value();
  r.minimal = r.abs_irreducible && dd == r.d_y - 1;
  r.almost_minimal = r.abs_irreducible && dd == r.d_y;
  if (r.abs_irreducible && dd >= r.d_y - 1 && (dd - r.d_y + 1) % 2 == 0)
    r.genus_if_extremal = (dd - r.d_y + 1) / 2;
  return r;
}

BPoly apply_aut(const AutWord& w, const BPoly& f) {
  BPoly cur = f;
  for (const AutGen& g : w) cur = g.is_swap ? transpose(cur) : subst_y(cur, g.lambda, g.p);
  return cur;
}

AutWord invert_word(const AutWord& w) {
  AutWord inv;
  inv.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_swap) {
      inv.push_back(AutGen::swap());
    } else {
      Rat li = Rat(1 / it->lambda);
      inv.push_back(AutGen::elementary(li, it->p * Rat(-li)));
    }
  }
  return inv;
}

std::pair<BPoly, BPoly> aut_components(const AutWord& w) {
  BPoly cx = bp_x(), cy = bp_y();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_swap) {
      std::swap(cx, cy);
    } else {
      cy = cy * UPoly(it->lambda) + compose(it->p, cx);
    }
  }
  return {cx, cy};
}

namespace {

bool monic_in_y(const BPoly& f) { return lc_y(f).size() == 1; }
bool monic_in_x(const BPoly& f) { return transpose(f).lc().size() == 1; }

}  // namespace

AutWord extract_automorphism(const BPoly& f) {
  require(!f.zero() && !is_constant_total(f), Err::NotMonicMinimal, "constant input");
  BPoly cur = f;
  AutWord word;
  if (cur.deg() == 0) {
    // pure polynomial in x; must be linear to be a coordinate
    word.push_back(AutGen::swap());
    cur = transpose(cur);
    require(cur.deg() == 1 && degree_x(cur).value_or(0) == 0, Err::NotMonicMinimal,
            "univariate input of degree > 1 is not absolutely irreducible");
  } else {
    if (!monic_in_y(cur)) {
      require(monic_in_x(cur), Err::NotMonicMinimal, "input is monic in neither variable");
      word.push_back(AutGen::swap());
      cur = transpose(cur);
    }
    MinimalityReport mr = minimality_report(cur);
    require(mr.minimal, Err::NotMonicMinimal,
            "input is not minimal (deg disc = " +
                std::to_string(mr.deg_disc.value_or(-1)) + ", d_y = " + std::to_string(mr.d_y) +
                ")");
  }
  int guard = 0;
  while (true) {
    require(++guard < 10000, Err::Internal, "automorphism extraction failed to terminate");
    int dy = cur.deg();
    int dx = degree_x(cur).value_or(0);
    if (dy == 1 && dx == 0) {
      // cur = alpha*y + beta
      Rat alpha = cur.coeff(1).coeff(0);
      Rat beta = cur.coeff(0).coeff(0);
      if (!is_one(alpha) || !is_zero(beta))
        word.push_back(AutGen::elementary(Rat(1 / alpha), UPoly(Rat(-beta / alpha))));
      break;
    }
    require(dy >= 1, Err::NotMonicMinimal, "reduction left a univariate polynomial in x");
    require(monic_in_y(cur), Err::NotMonicMinimal, "reduction state lost monicity");
    CharData cd = edge_char_data(cur);  // throws NotUnibranchEdge for nonminimal shapes
    require(cd.b == 0, Err::NotMonicMinimal, "monic input must have b = 0");
    if (cd.p == 1) {
      AutGen g = AutGen::elementary(Rat(1), UPoly::monomial(Rat(-cd.beta), cd.q));
      word.push_back(g);
      cur = subst_y(cur, g.lambda, g.p);
    } else if (cd.q == 1) {
      require(monic_in_x(cur), Err::NotMonicMinimal,
              "d_x | d_y step requires monicity in x (Abhyankar-Moh violated)");
      word.push_back(AutGen::swap());
      cur = transpose(cur);
    } else {
      throw Error(Err::NotMonicMinimal,
                  "neither d_x | d_y nor d_y | d_x on the edge: not a coordinate");
    }
  }
  require(apply_aut(word, f) == bp_y(), Err::Internal, "extracted word does not normalise f to y");
  return word;
}

std::pair<BPoly, AutWord> random_coordinate(std::uint64_t seed, int steps, int coeff_bound,
                                            int deg_bound) {
  require(steps >= 1, Err::BadParams, "need at least one step");
  require(coeff_bound >= 1 && deg_bound >= 0, Err::BadParams, "bad bounds");
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 0x853c49e6748fea9bull);
  AutWord w;
  for (int i = 0; i < steps; ++i) {
    if (i > 0) w.push_back(AutGen::swap());
    long lam = rng.range(1, coeff_bound);
    if (rng.below(2)) lam = -lam;
    int dg = (int)rng.range(0, deg_bound);
    std::vector<Rat> c(dg + 1, Rat(0));
    for (int k = 0; k <= dg; ++k) c[k] = rat(rng.range(-coeff_bound, coeff_bound));
    if (is_zero(c[dg])) c[dg] = rat(rng.range(1, coeff_bound));
    w.push_back(AutGen::elementary(rat(lam), UPoly::from_coeffs(std::move(c))));
  }
  BPoly f = apply_aut(w, bp_y());
  if (f.deg() == 0) {
    w.push_back(AutGen::swap());
    f = transpose(f);
  }
  return {f, w};
}

namespace {

// y-division by a divisor with constant leading y-coefficient.
std::pair<BPoly, BPoly> divrem_y(const BPoly& a, const BPoly& b) {
  require(!b.zero() && b.lc().size() == 1, Err::Internal, "divrem_y needs constant lc divisor");
  Rat inv = Rat(1 / b.lc().coeff(0));
  BPoly q, r = a;
  while (!r.zero() && r.deg() >= b.deg()) {
    BPoly t = BPoly::monomial(r.lc() * inv, r.deg() - b.deg());
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

}  // namespace

std::optional<std::pair<UPoly, BPoly>> decompose_composite(const BPoly& f, int r) {
  if (f.zero() || f.deg() < 1 || r < 1 || f.deg() % r != 0) return std::nullopt;
  if (!monic_in_y(f)) return std::nullopt;
  const int n = f.deg();
  const int m = n / r;
  Rat unit = lc_y(f).coeff(0);
  BPoly fm = f * UPoly(Rat(1 / unit));

  // h = y^m + c_{m-1} y^{m-1} + ... : match the top coefficients of h^r
  std::vector<UPoly> h(m + 1);
  h[m] = UPoly(Rat(1));
  for (int k = 1; k <= m; ++k) {
    BPoly hp = BPoly::from_coeffs(std::vector<UPoly>(h));
    BPoly p = poly_pow(hp, r);
    h[m - k] = (fm.coeff(n - k) - p.coeff(n - k)) * rat(1, r);
  }
  BPoly hh = BPoly::from_coeffs(std::move(h));

  // h-adic expansion: every remainder must be a constant
  std::vector<Rat> gc;
  BPoly rem = fm;
  for (int k = 0; k <= r; ++k) {
    auto [q, s] = divrem_y(rem, hh);
    if (s.zero()) {
      gc.push_back(Rat(0));
    } else {
      if (s.deg() != 0 || s.coeff(0).size() > 1) return std::nullopt;
      gc.push_back(s.coeff(0).coeff(0));
    }
    rem = q;
  }
  if (!rem.zero()) return std::nullopt;
  UPoly g = UPoly::from_coeffs(std::move(gc)) * unit;
  if (g.zero() || g.deg() != r) return std::nullopt;
  // exact verification
  if (compose(g, hh) != f) return std::nullopt;
  return std::make_pair(g, hh);
}

MonicFamilyReport monic_family_check(const BPoly& f) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "needs y-degree >= 1");
  require(monic_in_y(f), Err::NotMonic, "needs a monic input");
  require(is_primitive_y(f), Err::NotPrimitive, "needs a primitive input");
  MonicFamilyReport rep;
  DiscReport dr = disc_affine(f);
  require(dr.separable, Err::NotSeparable, "needs a separable input");
  rep.deg_disc = dr.deg;
  const int n = f.deg();
  const int m = degree_x(f).value_or(0);
  if (m == 0) {
    rep.r = n;  // squarefree univariate splits into n distinct linear factors
  } else {
    rep.r = absolute_factor_count(f).abs_factor_count;
  }
  rep.attains = rep.deg_disc.value() == n - rep.r;
  if (!rep.attains) return rep;

  require(n % rep.r == 0, Err::Internal, "equality requires r | d_y");
  if (rep.r == 1) {
    AutWord w = extract_automorphism(f);
    rep.witness = std::make_pair(std::move(w), UPoly::from_coeffs({Rat(0), Rat(1)}));
    return rep;
  }
  auto dec = decompose_composite(f, rep.r);
  require(dec.has_value(), Err::Internal, "attaining monic polynomial must decompose as g(h)");
  const auto& [g, h] = *dec;
  auto roots = rational_roots(g);
  if (roots.roots.empty()) {
    rep.witness_unavailable = true;
    return rep;
  }
  const Rat& rho = roots.roots.front().first;
  BPoly seed = h - BPoly(UPoly(rho));
  AutWord w = extract_automorphism(seed);
  UPoly gshift = compose_u(g, UPoly::from_coeffs({rho, Rat(1)}));  // g(t + rho)
  require(apply_aut(w, f) == compose(gshift, bp_y()), Err::Internal,
          "witness word does not carry f to its univariate form");
  rep.witness = std::make_pair(std::move(w), std::move(gshift));
  return rep;
}

SymmetryReport symmetry_report(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "symmetry of zero");
  require(f.degree().value_or(0) >= 1 && degree_x(f).value_or(0) >= 1, Err::BadParams,
          "symmetry report needs positive degree in both variables");
  require(is_absolutely_irreducible(f), Err::NotIrreducible,
          "symmetry report needs an absolutely irreducible input");
  SymmetryReport s;
  const UPoly& ly = lc_y(f);
  UPoly lx = transpose(f).lc();
  s.n_x = squarefree_part(ly).degree().value_or(0);
  s.n_y = squarefree_part(lx).degree().value_or(0);
  s.nondegenerate = s.n_x == ly.deg() && s.n_y == lx.deg();
  const int dy = f.deg();
  const int dx = degree_x(f).value();
  s.vanishes_at_inf_inf = is_zero(f.coeff(dy).coeff(dx));
  s.deg_disc_y = disc_affine(f).deg;
  s.deg_disc_x = disc_affine(transpose(f)).deg;
  s.eq_a = s.deg_disc_y == Degree(dy + s.n_y - 1);
  s.eq_b = s.deg_disc_x == Degree(dx + s.n_x - 1);
  return s;
}

AppendixCReport verify_appendixc(const AutWord& w) {
  AppendixCReport rep;
  auto [sx, sy] = aut_components(w);
  auto [ix, iy] = aut_components(invert_word(w));

  BPoly jac = deriv_x(sx) * deriv_y(sy) - deriv_x(sy) * deriv_y(sx);
  rep.jacobian_const = !jac.zero() && jac.deg() == 0 && jac.coeff(0).size() == 1;

  auto dgy = [](const BPoly& p) { return p.degree(); };
  auto dgx = [](const BPoly& p) { return degree_x(p); };
  rep.degree_dualities = dgy(sx) == dgy(ix) && dgx(sy) == dgx(iy) && dgx(sx) == dgy(iy) &&
                         dgy(sy) == dgx(ix);

  auto affine_in = [](const BPoly& p, bool in_x) {
    // p == a*x + b resp. a*y + b with a != 0
    const BPoly q = in_x ? p : transpose(p);
    return !q.zero() && q.deg() == 0 && q.coeff(0).deg() == 1;
  };
  auto check_pair = [&](const BPoly& p, bool wrt_y) {
    // if deg p w.r.t. the given variable is 0 it must be affine in the other,
    // else monic w.r.t. it
    if (wrt_y) {
      if (p.degree().value_or(0) == 0) return affine_in(p, true);
      return lc_y(p).size() == 1;
    }
    if (degree_x(p).value_or(0) == 0) return affine_in(p, false);
    return transpose(p).lc().size() == 1;
  };
  rep.monicity = check_pair(sx, true) && check_pair(sy, false) && check_pair(sx, false) &&
                 check_pair(sy, true);

  rep.disc_applicable = sx.degree().value_or(0) >= 1;
  if (rep.disc_applicable) {
    rep.deg_y_sigma_x = sx.deg();
    DiscReport dr = disc_affine(sx);
    rep.deg_disc_sigma_x = dr.separable ? dr.deg.value() : -1;
    rep.disc_degree = dr.separable && dr.deg == Degree(sx.deg() - 1);
  } else {
    rep.disc_degree = true;
  }
  rep.all_pass = rep.jacobian_const && rep.degree_dualities && rep.monicity && rep.disc_degree;
  return rep;
}

}  // namespace bidisc
