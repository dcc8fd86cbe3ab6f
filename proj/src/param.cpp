#include "bidisc/param.hpp"

#include <atomic>
#include <thread>

#include "bidisc/gaction.hpp"
#include "bidisc/polytope.hpp"
#include "bidisc/rng.hpp"

namespace bidisc {

RatParam::RatParam(UPoly u_, UPoly v1_, UPoly v2_)
    : u(std::move(u_)), v1(std::move(v1_)), v2(std::move(v2_)) {
  require(!u.zero() && u.deg() >= 1, Err::BadParams, "u must be nonconstant");
  require(!v2.zero(), Err::DivisionByZero, "v2 must be nonzero");
  if (!v1.zero()) {
    UPoly g = gcd(v1, v2);
    require(g.deg() == 0, Err::BadParams, "v1 and v2 must be coprime");
  } else {
    require(v2.deg() == 0, Err::BadParams, "v1 = 0 requires constant v2");
  }
}

BPoly implicitize(const RatParam& p) {
  // A(s) = u(s) - x,  B(s) = v2(s)*y - v1(s), resultant over Q[x,y]
  std::vector<BPoly> ac, bc;
  ac.reserve(p.u.size());
  for (int k = 0; k < p.u.size(); ++k) {
    BPoly c = bp_from_rat(p.u.coeff(k));
    if (k == 0) c = c - bp_x();
    ac.push_back(c);
  }
  int db = std::max(p.v1.degree().value_or(0), p.v2.deg());
  bc.assign(db + 1, BPoly());
  for (int k = 0; k <= db; ++k) {
    BPoly c = BPoly::monomial(UPoly(p.v2.coeff(k)), 1);  // v2_k * y
    c = c - bp_from_rat(p.v1.coeff(k));
    bc[k] = c;
  }
  Poly<BPoly> A = Poly<BPoly>::from_coeffs(std::move(ac));
  Poly<BPoly> B = Poly<BPoly>::from_coeffs(std::move(bc));
  require(!B.zero(), Err::DegenerateImage, "image collapses");
  BPoly res = B.deg() == 0 ? ring_pow(B.coeff(0), A.deg()) : resultant_subres<BPoly>(A, B);
  require(!res.zero(), Err::DegenerateImage, "vanishing resultant");
  if (is_constant_total(res)) throw Error(Err::DegenerateImage, "image is a point");
  if (res.deg() == 0) throw Error(Err::DegenerateImage, "image is a vertical line");
  return content_primitive(res).second;
}

ParamReport param_report(const RatParam& p) {
  ParamReport rep;
  rep.f = implicitize(p);
  rep.pred_dy = p.u.deg();
  rep.pred_a = p.v1.degree().value_or(0);
  rep.pred_b = p.v2.deg();
  rep.obs_dy = rep.f.deg();
  rep.obs_a = rep.f.coeff(0).degree().value_or(0);
  rep.obs_b = lc_y(rep.f).degree().value_or(0);
  rep.proper = rep.obs_dy == rep.pred_dy && !rep.f.coeff(0).zero();
  DiscReport dr = disc_affine(rep.f);
  rep.deg_disc = dr.deg;
  rep.minimal = rep.proper && dr.separable && dr.deg == Degree(rep.obs_dy - 1) &&
                is_absolutely_irreducible(rep.f);
  return rep;
}

namespace {

// all integer vectors of dimension D with L1-norm exactly H, deterministic order
void gen_shell(int D, int H, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (D == 1) {
    cur.push_back(H);
    out.push_back(cur);
    cur.pop_back();
    if (H > 0) {
      cur.push_back(-H);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int a = -H; a <= H; ++a) {
    cur.push_back(a);
    gen_shell(D - 1, H - std::abs(a), cur, out);
    cur.pop_back();
  }
}

std::optional<SearchHit> evaluate_candidate(const SearchShape& shape, const std::vector<int>& z,
                                            std::uint64_t index) {
  const int nu = shape.deg_u + 1, nv1 = shape.deg_v1 + 1, nv2 = shape.deg_v2;
  if (z[nu - 1] == 0) return std::nullopt;            // exact degree for u
  if (z[nu + nv1 - 1] == 0) return std::nullopt;      // exact degree for v1
  std::vector<Rat> uc(z.begin(), z.begin() + nu);
  std::vector<Rat> v1c(z.begin() + nu, z.begin() + nu + nv1);
  std::vector<Rat> v2c(z.begin() + nu + nv1, z.end());
  v2c.push_back(Rat(1));  // v2 monic of exact degree
  UPoly u = UPoly::from_coeffs(std::move(uc));
  UPoly v1 = UPoly::from_coeffs(std::move(v1c));
  UPoly v2 = UPoly::from_coeffs(std::move(v2c));
  if (v1.zero()) return std::nullopt;
  if (gcd(v1, v2).deg() != 0) return std::nullopt;

  RatParam p(u, v1, v2);
  BPoly f;
  try {
    f = implicitize(p);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (f.degree().value_or(0) != shape.deg_u) return std::nullopt;  // improper
  if (f.coeff(0).zero()) return std::nullopt;
  const int dy = f.deg();
  const int dx = degree_x(f).value_or(0);
  const int a = f.coeff(0).deg();
  const int b = lc_y(f).deg();
  const int c = std::min(a, b);
  if (c <= 0) return std::nullopt;                       // nonmonic wanted
  if (dy < 2 || (dx - c) % dy == 0) return std::nullopt; // reduced wanted
  DiscReport dr = disc_affine(f);
  if (!dr.separable || dr.deg != Degree(dy - 1)) return std::nullopt;
  if (!is_absolutely_irreducible(f)) return std::nullopt;
  SearchHit hit{p, f, dy, dx, c, dy - 1, true, index};
  return hit;
}

}  // namespace

std::vector<SearchHit> search_minimal(const SearchShape& shape, std::uint64_t seed,
                                      std::uint64_t budget, std::uint64_t offset, int threads,
                                      const std::function<void(const SearchHit&)>& sink) {
  require(shape.deg_u >= 1 && shape.deg_v1 >= 0 && shape.deg_v2 >= 0, Err::BadParams,
          "invalid shape");
  require(threads >= 1, Err::BadParams, "threads must be >= 1");
  const int D = (shape.deg_u + 1) + (shape.deg_v1 + 1) + shape.deg_v2;
  std::vector<SearchHit> hits;
  std::uint64_t base = 0;       // global index of the first vector of this shell
  std::uint64_t examined = 0;   // candidates examined so far
  for (int H = 0; examined < budget && H <= 64; ++H) {
    std::vector<std::vector<int>> shell;
    std::vector<int> cur;
    gen_shell(D, H, cur, shell);
    // seed-derived permutation within the shell
    SplitMix64 rng(seed * 0x2545f4914f6cdd1dull + (std::uint64_t)H * 0x9e3779b97f4a7c15ull + 1);
    for (size_t i = shell.size(); i > 1; --i) std::swap(shell[i - 1], shell[rng.next() % i]);

    // window of this shell to examine
    std::uint64_t lo = std::max(base, offset);
    if (lo < base + shell.size()) {
      std::uint64_t want = std::min<std::uint64_t>(budget - examined, base + shell.size() - lo);
      std::uint64_t hi = lo + want;
      std::vector<std::optional<SearchHit>> results(hi - lo);
      auto work = [&](int tid) {
        for (std::uint64_t k = lo + tid; k < hi; k += threads)
          results[k - lo] = evaluate_candidate(shape, shell[k - base], k);
      };
      if (threads == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
      }
      for (auto& r : results) {
        if (r) {
          if (sink) sink(*r);
          hits.push_back(std::move(*r));
        }
      }
      examined += hi - lo;
    }
    base += shell.size();
  }
  return hits;
}

}  // namespace bidisc
