#include "bidisc/selftest.hpp"

#include <sstream>

#include "bidisc/classify.hpp"
#include "bidisc/localinv.hpp"
#include "bidisc/minimality.hpp"
#include "bidisc/param.hpp"
#include "bidisc/parse.hpp"
#include "bidisc/rng.hpp"

namespace bidisc {

namespace {

UPoly rand_upoly(SplitMix64& rng, int maxdeg, int bound, bool nonzero = false) {
  int d = (int)rng.range(0, maxdeg);
  std::vector<Rat> c(d + 1);
  for (auto& x : c) x = rat(rng.range(-bound, bound));
  UPoly u = UPoly::from_coeffs(std::move(c));
  if (nonzero && u.zero()) u = UPoly(Rat(1));
  return u;
}

BPoly rand_bpoly(SplitMix64& rng, int dy, int dx, int bound) {
  std::vector<UPoly> c(dy + 1);
  for (auto& u : c) u = rand_upoly(rng, dx, bound);
  if (c.back().zero()) c.back() = UPoly(rat(rng.range(1, bound)));
  return BPoly::from_coeffs(std::move(c));
}

GMat rand_gmat(SplitMix64& rng, int maxdeg, int bound) {
  GMat m = GMat::identity();
  int steps = (int)rng.range(1, 3);
  for (int i = 0; i < steps; ++i) {
    switch (rng.below(3)) {
      case 0: m = m * GMat::tau(); break;
      case 1: m = m * GMat::dejonquieres(rat(rng.range(1, bound)), rand_upoly(rng, maxdeg, bound)); break;
      default: {
        GMat low(UPoly(Rat(1)), UPoly(), rand_upoly(rng, maxdeg, bound), UPoly(Rat(1)));
        m = m * low;
      }
    }
  }
  return m;
}

using Check = std::pair<std::string, bool>;

}  // namespace

std::vector<SelfTestResult> run_selftest(int threads) {
  (void)threads;  // every check is cheap; kept single-threaded for determinism
  std::vector<SelfTestResult> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
  };

  // ring laws
  {
    SplitMix64 rng(101);
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      BPoly a = rand_bpoly(rng, 3, 3, 4), b = rand_bpoly(rng, 3, 3, 4), c = rand_bpoly(rng, 2, 2, 4);
      ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
           deriv_y(a * b) == deriv_y(a) * b + a * deriv_y(b);
    }
    add("ring laws (assoc/dist/Leibniz)", ok);
  }

  // parse/print round trip
  {
    SplitMix64 rng(102);
    bool ok = true;
    for (int t = 0; t < 25 && ok; ++t) {
      BPoly f = rand_bpoly(rng, 4, 4, 9);
      ok = parse_poly(to_string(f)) == f;
    }
    add("print/parse round trip", ok);
  }

  // PRS vs Sylvester, bit-exact
  {
    SplitMix64 rng(103);
    bool ok = true;
    for (int t = 0; t < 15 && ok; ++t) {
      BPoly f = rand_bpoly(rng, (int)rng.range(1, 7), 3, 3);
      BPoly g = rand_bpoly(rng, (int)rng.range(1, 7), 3, 3);
      ok = resultant_y_prs(f, g) == resultant_y_sylvester(f, g);
    }
    add("resultant: subresultant PRS == Sylvester determinant", ok);
  }

  // resultant multiplicativity and discriminant product formula
  {
    SplitMix64 rng(104);
    bool mult_ok = true, prod_ok = true, unit_ok = true, ceil_ok = true;
    for (int t = 0; t < 12; ++t) {
      BPoly f = rand_bpoly(rng, 2, 2, 3), g = rand_bpoly(rng, 2, 2, 3), h = rand_bpoly(rng, 2, 2, 3);
      if (f.deg() < 1 || g.deg() < 1 || h.deg() < 1) continue;
      mult_ok = mult_ok && resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h);
      DiscReport df = disc_affine(f), dg = disc_affine(g), dfg = disc_affine(f * g);
      if (df.separable && dg.separable) {
        UPoly r = resultant_y(f, g);
        prod_ok = prod_ok && dfg.disc == df.disc * dg.disc * r * r;
      }
      UPoly u = rand_upoly(rng, 2, 3, true);
      DiscReport duf = disc_affine(f * BPoly(u));
      unit_ok = unit_ok && duf.disc == df.disc * poly_pow(u, 2 * f.deg() - 2);
      if (df.separable && is_primitive_y(f))
        ceil_ok = ceil_ok && df.deg <= Degree(2 * degree_x(f).value_or(0) * (f.deg() - 1));
    }
    add("resultant multiplicativity", mult_ok);
    add("discriminant product formula", prod_ok);
    add("unit-factor law Disc(u*f) = u^(2dy-2) Disc(f)", unit_ok);
    add("degree ceiling 2*dx*(dy-1)", ceil_ok);
  }

  // GL2 covariance and the scalar law
  {
    SplitMix64 rng(105);
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
      BPoly f = rand_bpoly(rng, (int)rng.range(2, 4), 2, 3);
      if (!disc_affine(f).separable) continue;
      GMat s = rand_gmat(rng, 2, 2);
      BForm F = homogenize(f);
      UPoly lhs = disc_form(apply_form(s, F));
      UPoly rhs = disc_form(F) * rat_pow(s.det, (unsigned long)(F.d * (F.d - 1)));
      ok = lhs == rhs;
    }
    add("scalar law Disc(sF) = det(s)^(d(d-1)) Disc(F)", ok);
  }

  // tau involution and (a,b) swap
  {
    bool ok = true;
    BPoly f = parse_poly("x*(x-y^2)^2 - 2*y*(x-y^2) + 1");
    BPoly tf = apply_affine(GMat::tau(), f);
    PolytopeData P = generic_polytope(f), Q = generic_polytope(tf);
    ok = apply_affine(GMat::tau(), tf) == f && P.a == Q.b && P.b == Q.a;
    add("tau involution and a<->b swap", ok);
  }

  // local invariants: ord Disc = r + 2*delta on the curated corpus
  {
    struct Case {
      const char* f;
      long a_num, a_den;
    };
    const Case cases[] = {
        {"y^2 - x^3", 0, 1},          {"y^2 - x^2*(x + 1)", 0, 1}, {"y^2 - x", 0, 1},
        {"y^2 - x^4", 0, 1},          {"y^3 - x^4", 0, 1},         {"y^2 - x^2*(x + 1)", -1, 1},
        {"y^3 - 3*x*y - x^3", 0, 1},
    };
    bool ok = true;
    std::ostringstream det;
    for (const auto& c : cases) {
      LocalReport lr = local_invariants(parse_poly(c.f), rat(c.a_num, c.a_den));
      if (!lr.identity_holds) {
        ok = false;
        det << c.f << " at " << c.a_num << "/" << c.a_den << " failed; ";
      }
    }
    add("local identity ord Disc = r + 2*delta", ok, det.str());
  }

  // coordinates are minimal and extract back to y
  {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 8 && ok; ++seed) {
      auto [f, w] = random_coordinate(seed, 3, 3, 3);
      MinimalityReport mr = minimality_report(f);
      ok = mr.minimal;
      if (ok) {
        AutWord s = extract_automorphism(f);
        ok = apply_aut(s, f) == bp_y();
      }
      if (ok) ok = verify_appendixc(w).all_pass;
    }
    add("coordinate polynomials: minimal, extractable, appendix checks", ok);
  }

  // classification: families classify to their own case; dichotomy holds
  {
    bool ok = true;
    {
      auto v = classify_form({normal_form_even({Rat(0), Rat(1)})});
      ok = ok && v.outcome == ClassifyOutcome::EqualityCase4_even;
    }
    {
      BForm Y1(1);
      Y1.c[0] = UPoly(Rat(1));
      auto v = classify_form({Y1, parse_form("Y0^2 + x*Y1^2")});
      ok = ok && v.outcome == ClassifyOutcome::EqualityCase3_odd;
    }
    {
      auto v = classify_form(parse_form_factors("(Y0)*(Y1)*(Y0^2 + x*Y0*Y1 + Y1^2)"));
      ok = ok && v.outcome == ClassifyOutcome::EqualityCase1 && v.deg_disc == Degree(2);
    }
    SplitMix64 rng(106);
    for (int t = 0; t < 10 && ok; ++t) {
      std::vector<BForm> fs;
      int n = (int)rng.range(2, 3);
      for (int i = 0; i < n; ++i) {
        BForm L(1);
        L.c[1] = rand_upoly(rng, 1, 2);
        L.c[0] = rand_upoly(rng, 1, 2);
        if (L.c[1].zero() && L.c[0].zero()) L.c[0] = UPoly(Rat(1));
        fs.push_back(L);
      }
      try {
        BoundCheck bc = verify_bound(fs);
        ok = bc.ok;
      } catch (const Error& e) {
        if (e.kind() != Err::FactorsNotCoprime && e.kind() != Err::NotSquarefree) throw;
      }
    }
    add("classification families and bound dichotomy", ok);
  }

  // search determinism
  {
    auto h1 = search_minimal({2, 1, 0}, 5, 200);
    auto h2 = search_minimal({2, 1, 0}, 5, 200);
    bool ok = h1.size() == h2.size();
    for (size_t i = 0; ok && i < h1.size(); ++i) ok = h1[i].f == h2[i].f && h1[i].index == h2[i].index;
    add("search determinism (seed, budget)", ok);
  }

  return out;
}

}  // namespace bidisc
