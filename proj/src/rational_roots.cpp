#include "bidisc/rational_roots.hpp"

#include <algorithm>
#include <map>

namespace bidisc {

namespace {

Int pollard_rho(const Int& n) {
  // n odd composite, not a prime power of interest; returns a nontrivial factor
  Int x(2), y(2), d(1), c(1);
  while (true) {
    x = 2;
    y = 2;
    d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (sgn(diff) < 0) diff = -diff;
      if (sgn(diff) == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
    c += 1;  // cycle degenerated, retry with another polynomial
  }
}

void factor_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(Int(n / d), out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
  require(sgn(n) != 0, Err::BadParams, "factoring zero");
  if (sgn(n) < 0) n = -n;
  std::map<Int, int> fac;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      fac[Int(p)] += 1;
      n /= p;
    }
  }
  long p = 17;
  while (n > 1 && p < 100000 && Int(p) * p <= n) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      fac[Int(p)] += 1;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) factor_rec(n, fac);
  return {fac.begin(), fac.end()};
}

std::vector<Int> divisors_of(const Int& n) {
  auto fac = factor_integer(n);
  std::vector<Int> divs{Int(1)};
  for (const auto& [prime, e] : fac) {
    size_t sz = divs.size();
    Int pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (size_t i = 0; i < sz; ++i) divs.push_back(Int(divs[i] * pk));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RationalRoots rational_roots(const UPoly& u) {
  require(!u.zero(), Err::ZeroPolynomial, "roots of the zero polynomial");
  RationalRoots out;
  if (u.deg() == 0) {
    out.rootless = u;
    out.complete = true;
    return out;
  }
  // clear denominators to a primitive integer polynomial
  Int den(1);
  for (const auto& c : u.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> zc;
  zc.reserve(u.size());
  Int content(0);
  for (const auto& c : u.coeffs()) {
    Rat scaled = c * Rat(den);
    zc.push_back(Int(scaled.get_num()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zc.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& z : zc) z /= content;

  // strip x^k: root 0 with multiplicity k
  UPoly cur = u;
  int k0 = 0;
  while (is_zero(zc[k0])) ++k0;
  if (k0 > 0) {
    out.roots.push_back({Rat(0), k0});
    cur = divexact(cur, UPoly::monomial(Rat(1), k0));
  }

  Int trailing = zc[k0];
  Int leading = zc.back();
  std::vector<Int> dp = divisors_of(trailing);
  std::vector<Int> dq = divisors_of(leading);
  std::vector<Rat> candidates;
  for (const Int& p : dp)
    for (const Int& q : dq) {
      Rat r = rat(p, q);
      candidates.push_back(r);
      candidates.push_back(Rat(-r));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const Rat& cand : candidates) {
    if (!is_zero(eval(cur, cand))) continue;
    UPoly lin = UPoly::from_coeffs({Rat(-cand), Rat(1)});
    int mult = 0;
    while (true) {
      auto [q, r] = divrem(cur, lin);
      if (!r.zero()) break;
      cur = q;
      ++mult;
    }
    if (mult > 0) out.roots.push_back({cand, mult});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.rootless = cur;
  out.complete = cur.size() <= 1;
  return out;
}

}  // namespace bidisc
