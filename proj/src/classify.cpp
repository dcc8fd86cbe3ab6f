#include "bidisc/classify.hpp"

#include "bidisc/irreducibility.hpp"

namespace bidisc {

const char* classify_outcome_name(ClassifyOutcome o) {
  switch (o) {
    case ClassifyOutcome::ConstantDisc: return "ConstantDisc";
    case ClassifyOutcome::EqualityCase1: return "EqualityCase1";
    case ClassifyOutcome::EqualityCase2: return "EqualityCase2";
    case ClassifyOutcome::EqualityCase3_odd: return "EqualityCase3_odd";
    case ClassifyOutcome::EqualityCase4_even: return "EqualityCase4_even";
    case ClassifyOutcome::AboveBound: return "AboveBound";
  }
  return "?";
}

namespace {

UPoly form_content(const BForm& F) {
  UPoly g;
  for (const auto& c : F.c) {
    if (c.zero()) continue;
    g = g.zero() ? c : gcd(g, c);
    if (g.size() == 1) break;
  }
  require(!g.zero(), Err::ZeroPolynomial, "zero factor");
  return monic(g);
}

// number of K-bar-linear factors contributed by one rational factor:
// its degree when it splits into linears over the closure, else 0.
int kbar_linear_count(const BForm& F, bool& assumed) {
  if (F.d == 1) return 1;
  BPoly p = dehomogenize(F);
  require(p.degree().value_or(-1) == F.d, Err::BadParams,
          "nonlinear factor divisible by Y1 cannot be irreducible");
  int count;
  if (degree_x(p).value_or(0) == 0) {
    count = p.deg();  // univariate squarefree splits into distinct linears
  } else {
    count = absolute_factor_count(p).abs_factor_count;
  }
  if (count == F.d) return F.d;
  if (count > 1) assumed = true;  // rational-irreducible Galois orbit, tag trusted
  return 0;
}

// unimodular completion sending the linear form a*Y0 + b*Y1 to Y1 exactly
GMat linear_to_Y1(const UPoly& a, const UPoly& b) {
  // extended gcd over Q[x]: u*a + v*b = 1 (the pair is coprime for a factor
  // of a primitive form)
  UPoly r0 = a, r1 = b, u0{Rat(1)}, u1{}, v0{}, v1{Rat(1)};
  while (!r1.zero()) {
    auto [q, r] = divrem(r0, r1);
    UPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    r0 = r1;
    r1 = r;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  require(!r0.zero() && r0.deg() == 0, Err::BadParams,
          "linear factor with non-coprime coefficients");
  Rat ginv = Rat(1 / r0.coeff(0));
  UPoly u = u0 * ginv, v = v0 * ginv;  // u*a + v*b = 1
  // sigma(a Y0 + b Y1) = (a m11 + b m21) Y0 + (a m12 + b m22) Y1 = Y1
  return GMat(UPoly(-b), u, a, v);
}

BForm apply_word(const std::vector<GMat>& w, BForm F) {
  for (const auto& s : w) F = apply_form(s, F);
  return F;
}

}  // namespace

UPoly product_disc(const std::vector<BForm>& factors) {
  UPoly disc{Rat(1)};
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].d >= 2) {
      UPoly di = disc_form(factors[i]);
      require(!di.zero(), Err::NotSquarefree, "factor " + std::to_string(i) + " is not squarefree");
      disc = disc * di;
    }
    for (size_t j = i + 1; j < factors.size(); ++j) {
      UPoly r = resultant_form(factors[i], factors[j]);
      require(!r.zero(), Err::FactorsNotCoprime,
              "factors " + std::to_string(i) + " and " + std::to_string(j) + " share a root");
      disc = disc * r * r;
    }
  }
  return disc;
}

ClassificationVerdict classify_form(const std::vector<BForm>& factors) {
  require(!factors.empty(), Err::BadParams, "empty factor list");
  ClassificationVerdict v;
  for (const auto& F : factors) {
    require(!F.zero(), Err::ZeroPolynomial, "zero factor");
    require(F.d >= 1, Err::BadParams, "factor in K[x] is not allowed");
    require(form_content(F).size() == 1, Err::NotPrimitive, "factor with content in K[x]");
    v.d += F.d;
  }
  require(v.d >= 2, Err::BadParams, "product degree must be at least 2");
  v.bound = v.d / 2;  // = ceil((d-1)/2)

  UPoly disc = product_disc(factors);
  v.deg_disc = disc.degree();
  const int dd = v.deg_disc.value();

  int linear = 0;
  std::vector<const BForm*> rational_linears;
  for (const auto& F : factors) {
    linear += kbar_linear_count(F, v.irreducibility_assumed);
    if (F.d == 1) rational_linears.push_back(&F);
  }

  if (dd == 0) {
    v.outcome = ClassifyOutcome::ConstantDisc;
    require(linear == v.d, Err::Internal,
            "constant discriminant with a nonlinear closure factor contradicts the lower bound");
    const bool all_rational_linear = (int)rational_linears.size() == v.d;
    // witness from a constant-resultant linear pair
    std::optional<GMat> cand;
    if (rational_linears.size() >= 2) {
      const BForm& F1 = *rational_linears[0];
      const BForm& F2 = *rational_linears[1];
      // sigma = [[b2, -b1], [-a2, a1]] sends F1 -> det*Y0, F2 -> det*Y1
      cand = GMat(F2.c[0], UPoly(-F1.c[0]), UPoly(-F2.c[1]), F1.c[1]);
    } else if (rational_linears.size() == 1) {
      const BForm& F1 = *rational_linears[0];
      cand = linear_to_Y1(F1.c[1], F1.c[0]);
    }
    if (cand) {
      BForm prod = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) prod = form_mul(prod, factors[i]);
      BForm img = apply_form(*cand, prod);
      bool constant = true;
      for (const auto& c : img.c)
        if (c.size() > 1) constant = false;
      if (constant) {
        v.witness = cand;
      } else {
        require(!all_rational_linear, Err::Internal,
                "constant-disc witness failed to land in K[Y]");
        v.note = "constant discriminant; orbit factors kept the image outside K[Y]";
      }
    } else {
      v.note = "constant discriminant; witness construction needs rational linear factors";
    }
    return v;
  }

  require(dd >= v.bound, Err::BoundViolated,
          "discriminant degree below the uniform bound: invalid input tags");
  if (dd > v.bound) {
    v.outcome = ClassifyOutcome::AboveBound;
    return v;
  }

  // equality: decide the case structurally
  if (v.d % 2 == 1) {
    v.outcome = ClassifyOutcome::EqualityCase3_odd;
  } else if (linear == 0) {
    v.outcome = ClassifyOutcome::EqualityCase4_even;
  } else if (linear == 1) {
    require(v.d == 4, Err::Internal, "one linear closure factor at equality forces d = 4");
    v.outcome = ClassifyOutcome::EqualityCase2;
  } else {
    require(v.d == 4 && linear == 2, Err::Internal,
            "two linear closure factors at equality force d = 4");
    v.outcome = ClassifyOutcome::EqualityCase1;
  }

  // rational normalisation towards the displayed family
  BForm prod = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) prod = form_mul(prod, factors[i]);

  auto try_peel = [&](const BForm& G, bool odd_strip) -> std::optional<BForm> {
    // G (after stripping Y1 when odd) should be H(Y0^2 + mu*x*Y1^2, Y1^2)
    BForm W = G;
    if (odd_strip) {
      if (!y1_divides(W)) return std::nullopt;
      BForm S(W.d - 1);
      for (int k = 0; k <= S.d; ++k) S.c[k] = W.c[k];
      W = S;
    }
    if (W.d % 2 != 0) return std::nullopt;
    int n = W.d / 2;
    for (int k = 0; k <= W.d; ++k)
      if (k % 2 == 1 && !W.c[k].zero()) return std::nullopt;  // only even Y0-powers
    if (W.c[2 * n].size() != 1) return std::nullopt;
    Rat hn = W.c[2 * n].coeff(0);
    if (n == 0) return std::nullopt;
    const UPoly& c1 = W.c[2 * n - 2];
    if (c1.size() > 2) return std::nullopt;
    Rat mu = Rat(c1.coeff(1) / (hn * Rat(n)));
    if (is_zero(mu)) return std::nullopt;
    // peel: R -= h_k (Y0^2 + mu x Y1^2)^k Y1^{2(n-k)}
    BForm base(2);
    base.c[2] = UPoly(Rat(1));
    base.c[0] = UPoly::monomial(mu, 1);
    std::vector<BForm> basepow(n + 1, BForm(0));
    basepow[0].c[0] = UPoly(Rat(1));
    for (int k = 1; k <= n; ++k) basepow[k] = form_mul(basepow[k - 1], base);
    BForm R = W;
    std::vector<Rat> h(n + 1, Rat(0));
    for (int k = n; k >= 0; --k) {
      const UPoly& lead = R.c[2 * k];
      if (lead.zero()) {
        h[k] = Rat(0);
        continue;
      }
      if (lead.size() != 1) return std::nullopt;
      h[k] = lead.coeff(0);
      BForm term(W.d);
      for (int t = 0; t <= 2 * k; ++t) term.c[t] = basepow[k].coeff(t) * h[k];
      for (int t = 0; t <= W.d; ++t) R.c[t] = R.c[t] - term.coeff(t);
    }
    if (!R.zero()) return std::nullopt;
    return G;
  };

  switch (v.outcome) {
    case ClassifyOutcome::EqualityCase1: {
      if (rational_linears.size() == 2) {
        const BForm& F1 = *rational_linears[0];
        const BForm& F2 = *rational_linears[1];
        GMat s(F2.c[0], UPoly(-F1.c[0]), UPoly(-F2.c[1]), F1.c[1]);
        v.normalising_word.push_back(s);
        BForm img = apply_form(s, prod);
        // expect unit * Y0 Y1 (Y0^2 + (mu x + lambda) Y0 Y1 + Y1^2)
        if (img.c[0].zero() && img.c[4].zero() && !img.c[3].zero() && img.c[3].size() == 1 &&
            img.c[1] == img.c[3] && img.c[2].size() <= 2) {
          Rat unit = img.c[3].coeff(0);
          UPoly mid = img.c[2] * Rat(1 / unit);
          if (mid.size() == 2 && !is_zero(mid.coeff(1))) v.normal_form_reached = img;
        }
        if (!v.normal_form_reached) v.note = "case recognised; normal frame not reached over Q";
      } else {
        v.note = "case recognised; linear closure factors are not rational";
      }
      break;
    }
    case ClassifyOutcome::EqualityCase2: {
      if (rational_linears.size() == 1) {
        const BForm& L = *rational_linears[0];
        GMat s = linear_to_Y1(L.c[1], L.c[0]);
        v.normalising_word.push_back(s);
        BForm img = apply_form(s, prod);
        // expect unit * Y1 * (H(Y) + x' Y1^3) with constant H-part coefficients
        if (y1_divides(img)) {
          BForm P(3);
          for (int k = 0; k <= 3; ++k) P.c[k] = img.c[k];
          bool ok = P.c[3].size() == 1 && P.c[2].size() <= 1 && P.c[1].size() <= 1 &&
                    P.c[0].size() == 2 && !is_zero(P.c[0].coeff(1));
          if (ok) v.normal_form_reached = img;
        }
        if (!v.normal_form_reached) v.note = "case recognised; normal frame not reached over Q";
      } else {
        v.note = "case recognised; the linear closure factor is not rational";
      }
      break;
    }
    case ClassifyOutcome::EqualityCase3_odd: {
      BForm img = prod;
      bool normalised = false;
      if (!rational_linears.empty()) {
        const BForm& L = *rational_linears[0];
        GMat s = linear_to_Y1(L.c[1], L.c[0]);
        v.normalising_word.push_back(s);
        img = apply_form(s, prod);
        normalised = true;
      }
      if (normalised) {
        if (auto nf = try_peel(img, /*odd_strip=*/true)) v.normal_form_reached = *nf;
      }
      if (!v.normal_form_reached) v.note = "case recognised; normal frame not reached over Q";
      break;
    }
    case ClassifyOutcome::EqualityCase4_even: {
      if (auto nf = try_peel(prod, /*odd_strip=*/false)) v.normal_form_reached = *nf;
      if (!v.normal_form_reached) v.note = "case recognised; normal frame not reached over Q";
      break;
    }
    default: break;
  }
  return v;
}

BForm normal_form_case1(const Rat& mu, const Rat& lambda) {
  require(!is_zero(mu), Err::BadParams, "case 1 needs mu != 0");
  BForm P(2);
  P.c[2] = UPoly(Rat(1));
  P.c[1] = UPoly::from_coeffs({lambda, mu});
  P.c[0] = UPoly(Rat(1));
  BForm Y0(1), Y1(1);
  Y0.c[1] = UPoly(Rat(1));
  Y1.c[0] = UPoly(Rat(1));
  return form_mul(form_mul(Y0, Y1), P);
}

BForm normal_form_case2(const std::array<Rat, 4>& h) {
  require(!is_zero(h[3]), Err::BadParams, "case 2 needs a nonzero Y0^3 coefficient in H");
  BForm P(3);
  for (int k = 0; k <= 3; ++k) P.c[k] = UPoly(h[k]);
  P.c[0] = P.c[0] + UPoly::monomial(Rat(1), 1);  // + x*Y1^3
  BForm Y1(1);
  Y1.c[0] = UPoly(Rat(1));
  BForm F = form_mul(Y1, P);
  require(!disc_form(F).zero(), Err::BadParams, "case 2 parameters give a non-squarefree form");
  return F;
}

namespace {

BForm quad_factor(const Rat& a) {
  BForm Q(2);
  Q.c[2] = UPoly(Rat(1));
  Q.c[0] = UPoly::from_coeffs({a, Rat(1)});  // (x + a) Y1^2
  return Q;
}

void require_distinct(const std::vector<Rat>& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      require(a[i] != a[j], Err::BadParams, "family parameters must be pairwise distinct");
}

}  // namespace

BForm normal_form_odd(const std::vector<Rat>& a) {
  require(!a.empty(), Err::BadParams, "odd family needs n >= 1");
  require_distinct(a);
  BForm F(1);
  F.c[0] = UPoly(Rat(1));  // Y1
  for (const Rat& ai : a) F = form_mul(F, quad_factor(ai));
  return F;
}

BForm normal_form_even(const std::vector<Rat>& a) {
  require(!a.empty(), Err::BadParams, "even family needs n >= 1");
  require_distinct(a);
  BForm F(0);
  F.c[0] = UPoly(Rat(1));
  for (const Rat& ai : a) F = form_mul(F, quad_factor(ai));
  return F;
}

BoundCheck verify_bound(const std::vector<BForm>& factors) {
  require(!factors.empty(), Err::BadParams, "empty factor list");
  int d = 0;
  for (const auto& F : factors) {
    require(!F.zero(), Err::ZeroPolynomial, "zero factor");
    d += F.d;
  }
  BoundCheck bc;
  UPoly disc = product_disc(factors);
  bc.deg_disc = disc.degree();
  bc.bound = d / 2;  // = ceil((d-1)/2)
  bc.ok = bc.deg_disc == Degree(0) || bc.deg_disc >= Degree(bc.bound);
  return bc;
}

}  // namespace bidisc
