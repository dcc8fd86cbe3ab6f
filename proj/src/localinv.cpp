#include "bidisc/localinv.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bidisc/rational_roots.hpp"

namespace bidisc {

namespace {

constexpr int kExactHorizon = 1 << 28;

struct RawBranch {
  int e = 1;
  std::vector<std::pair<int, Rat>> ser;  // ascending t-exponents >= 1
  int known = 0;
  bool exact = false;
};

const Rat& cxy(const BPoly& p, int i, int j) { return p.coeff(j).coeff(i); }

// h(x1^q, x1^p * (c + y1)) / x1^W with W = q*i0 + p*j0 the edge weight.
BPoly edge_transform(const BPoly& h, int p, int q, const Rat& c, long long W) {
  std::map<int, std::map<int, Rat>> acc;  // j1 -> (i1 -> coeff)
  const int dy = h.deg();
  // binomial row (c + y1)^j
  std::vector<std::vector<Rat>> binom(dy + 1);
  binom[0] = {Rat(1)};
  for (int j = 1; j <= dy; ++j) {
    binom[j].assign(j + 1, Rat(0));
    for (int k = 0; k < j; ++k) {
      binom[j][k] = Rat(binom[j][k] + binom[j - 1][k] * c);
      binom[j][k + 1] = Rat(binom[j][k + 1] + binom[j - 1][k]);
    }
  }
  for (int j = 0; j <= dy; ++j) {
    const UPoly& hj = h.coeff(j);
    for (int i = 0; i < hj.size(); ++i) {
      const Rat& a = hj.coeff(i);
      if (is_zero(a)) continue;
      long long shift = (long long)q * i + (long long)p * j - W;
      require(shift >= 0, Err::Internal, "edge weight not minimal");
      for (int k = 0; k <= j; ++k) {
        if (is_zero(binom[j][k])) continue;
        Rat& slot = acc[k][(int)shift];
        slot = Rat(slot + a * binom[j][k]);
      }
    }
  }
  int maxj = acc.empty() ? 0 : acc.rbegin()->first;
  std::vector<UPoly> rows(maxj + 1);
  for (auto& [j, row] : acc) {
    int maxi = 0;
    for (auto& [i, v] : row)
      if (!is_zero(v)) maxi = std::max(maxi, i);
    std::vector<Rat> dense(maxi + 1, Rat(0));
    for (auto& [i, v] : row) dense[i] = v;
    rows[j] = UPoly::from_coeffs(std::move(dense));
  }
  return BPoly::from_coeffs(std::move(rows));
}

// Branches of h centered at the origin, as series in t with x = t^e.
// Budget M is in x-valuation units and throttles only the regular tail;
// ramified and multiple-root stages always run to completion.
std::vector<RawBranch> expand_at_origin(BPoly h, int M, int depth) {
  require(depth < 256, Err::TruncationInsufficient, "expansion recursion too deep");
  std::vector<RawBranch> out;
  require(!h.zero(), Err::Internal, "expansion of the zero germ");

  if (h.coeff(0).zero()) {
    // exact branch y = 0 (multiplicity 1 for separable inputs)
    out.push_back(RawBranch{1, {}, kExactHorizon, true});
    h = divexact(h, BPoly::from_coeffs({UPoly(), UPoly(Rat(1))}));
  }
  if (!is_zero(cxy(h, 0, 0))) return out;

  // v0 = val_y h(0, y); T = val_x h(x, 0); both finite here
  const UPoly fiber = eval_x(h, Rat(0));
  require(!fiber.zero(), Err::Internal, "x divides the germ: input not primitive");
  int v0 = 0;
  while (is_zero(fiber.coeff(v0))) ++v0;

  // stop the regular tail once the budget is spent
  if (v0 == 1 && M <= 0) {
    out.push_back(RawBranch{1, {}, 0, false});
    return out;
  }

  // lowest support point per x-exponent relevant to the lower-left chain
  std::vector<std::pair<int, int>> pts;  // (i, min j), i ascending
  {
    std::map<int, int> minj;
    for (int j = 0; j < h.size(); ++j)
      for (int i = 0; i < h.coeff(j).size(); ++i) {
        if (is_zero(cxy(h, i, j))) continue;
        auto it = minj.find(i);
        if (it == minj.end() || j < it->second) minj[i] = j;
      }
    for (auto& [i, j] : minj)
      if (j <= v0) pts.push_back({i, j});
  }

  // walk the Newton polygon greedily from (0, v0) to the x-axis
  std::pair<int, int> A{0, v0};
  while (A.second > 0) {
    std::pair<int, int> B{-1, -1};
    long long bn = 0, bd = 1;  // best slope bn/bd
    for (const auto& P : pts) {
      if (P.second >= A.second || P.first <= A.first) continue;
      long long n = P.first - A.first, d = A.second - P.second;
      if (B.first < 0 || n * bd < bn * d || (n * bd == bn * d && P.first > B.first)) {
        if (B.first < 0 || n * bd != bn * d) {
          bn = n;
          bd = d;
        }
        B = P;
      }
    }
    require(B.first > 0, Err::Internal, "Newton polygon chain broke off");
    int g = std::gcd(B.first - A.first, A.second - B.second);
    int p = (B.first - A.first) / g;   // x-step of the primitive edge vector
    int q = (A.second - B.second) / g; // y-step; slope mu = p/q
    long long W = (long long)q * A.first + (long long)p * A.second;

    // phi(v) = sum over lattice points; the k-th point from A carries v^(g-k)
    std::vector<Rat> phi(g + 1, Rat(0));
    for (int k = 0; k <= g; ++k) phi[g - k] = cxy(h, A.first + k * p, A.second - k * q);
    UPoly phit = UPoly::from_coeffs(std::move(phi));
    RationalRoots rr = rational_roots(phit);
    if (!rr.complete)
      throw Error(Err::NonRationalBranch,
                  "edge polynomial has an irrational root; rational expansion impossible");
    for (const auto& [v, mult] : rr.roots) {
      require(!is_zero(v), Err::Internal, "edge polynomial cannot vanish at 0");
      auto c = rat_root(v, (unsigned long)q);
      if (!c)
        throw Error(Err::NonRationalBranch,
                    "edge root has no rational q-th root; cycle not rational");
      BPoly h1 = edge_transform(h, p, q, *c, W);
      int M1 = q * M - p;
      for (RawBranch sub : expand_at_origin(h1, M1, depth + 1)) {
        RawBranch b;
        b.e = q * sub.e;
        b.exact = sub.exact;
        int lead = p * sub.e;
        b.ser.push_back({lead, *c});
        for (auto& [k, co] : sub.ser) b.ser.push_back({lead + k, co});
        b.known = sub.exact ? kExactHorizon
                            : std::min((long long)kExactHorizon, (long long)lead + std::max(sub.known, 1));
        out.push_back(std::move(b));
      }
      // multiplicity accounting is implicit: the y1-valuation of h1 is mult
      (void)mult;
    }
    A = B;
  }
  return out;
}

void normalise_primitive(RawBranch& b) {
  if (!b.exact) return;
  int g = b.e;
  for (auto& [k, c] : b.ser) g = std::gcd(g, k);
  if (g <= 1) return;
  b.e /= g;
  for (auto& [k, c] : b.ser) k /= g;
}

}  // namespace

std::vector<PuiseuxBranch> puiseux_branches(const BPoly& f, const Rat& alpha, int order) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "branches need y-degree >= 1");
  require(is_primitive_y(f), Err::NotPrimitive, "branches need a primitive input");
  require(order >= 1, Err::BadParams, "order must be positive");
  BPoly g = shift_x(f, alpha);
  const int dy = g.deg();
  std::vector<PuiseuxBranch> out;

  UPoly fiber = eval_x(g, Rat(0));
  require(!fiber.zero(), Err::Internal, "vertical-line fiber on a primitive input");

  auto harvest = [&](const BPoly& h, std::optional<Rat> center) {
    for (RawBranch rb : expand_at_origin(h, order, 0)) {
      normalise_primitive(rb);
      PuiseuxBranch b;
      b.ram = rb.e;
      b.series = std::move(rb.ser);
      b.known_upto = rb.exact ? kExactHorizon : rb.known;
      b.exact = rb.exact;
      b.center = center;
      out.push_back(std::move(b));
    }
  };

  if (fiber.deg() < dy) {
    // place(s) over y = infinity in the tau chart
    harvest(reverse_y(g), std::nullopt);
  }

  RationalRoots rr = rational_roots(fiber);
  if (!rr.complete)
    throw Error(Err::NonRationalBranch, "fiber point with irrational y-coordinate");
  for (const auto& [beta, mult] : rr.roots) {
    harvest(subst_y(g, Rat(1), UPoly(beta)), beta);
    (void)mult;
  }

  long long total = 0;
  for (const auto& b : out) total += b.ram;
  require(total == dy, Err::Internal, "branch multiplicities do not sum to d_y");
  return out;
}

int branch_delta(const PuiseuxBranch& b) {
  int e = b.ram;
  long long twodelta = 0;
  for (const auto& [k, c] : b.series) {
    if (e == 1) break;
    if (k % e != 0) {
      int e2 = std::gcd(e, k);
      twodelta += (long long)(k - 1) * (e - e2);
      e = e2;
    }
  }
  require(e == 1 || b.exact, Err::TruncationInsufficient,
          "characteristic exponents incomplete at this truncation");
  require(e == 1, Err::Internal, "cycle parametrisation not primitive");
  require(twodelta % 2 == 0, Err::Internal, "odd conductor sum");
  return (int)(twodelta / 2);
}

std::optional<int> branch_intersection(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  require(a.center == b.center, Err::BadParams, "intersection needs a common center");
  const int e = a.ram, f = b.ram;
  const int N = std::lcm(e, f);
  const int sa = N / e, sb = N / f;
  // u-exponent horizons
  const long long ha = a.exact ? (long long)kExactHorizon * sa : (long long)a.known_upto * sa;
  const long long hb = b.exact ? (long long)kExactHorizon * sb : (long long)b.known_upto * sb;
  const long long horizon = std::min(ha, hb);

  long long total = 0;
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < f; ++j) {
      // ord_u of phi_i - psi_j where terms carry phases in Z_N
      size_t ia = 0, ib = 0;
      long long ord = -1;
      while (true) {
        long long Ea = ia < a.series.size() ? (long long)a.series[ia].first * sa : kExactHorizon;
        long long Eb = ib < b.series.size() ? (long long)b.series[ib].first * sb : kExactHorizon;
        long long E = std::min(Ea, Eb);
        if (E >= horizon) break;
        if (Ea < Eb) {
          ord = Ea;
          break;
        }
        if (Eb < Ea) {
          ord = Eb;
          break;
        }
        if (Ea >= kExactHorizon) break;
        // both sides have a term at E
        const Rat& ca = a.series[ia].second;
        const Rat& cb = b.series[ib].second;
        long long pa = (long long)i * a.series[ia].first % e * sa % N;
        long long pb = (long long)j * b.series[ib].first % f * sb % N;
        bool equal = false;
        if (ca == cb && pa == pb) equal = true;
        if (N % 2 == 0 && ca == -cb && (pa + N / 2) % N == pb) equal = true;
        if (!equal) {
          ord = E;
          break;
        }
        ++ia;
        ++ib;
      }
      if (ord < 0) {
        if (a.exact && b.exact)
          throw Error(Err::Internal, "two identical cycles at one center");
        return std::nullopt;
      }
      total += ord;
    }
  }
  require(total % N == 0, Err::Internal, "intersection sum not divisible by lcm");
  return (int)(total / N);
}

LocalReport local_invariants(const BPoly& f, const Rat& alpha) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "local invariants need y-degree >= 1");
  require(is_primitive_y(f), Err::NotPrimitive, "local invariants need a primitive input");
  DiscReport dr = disc_affine(f);
  require(dr.separable, Err::NotSeparable, "local invariants need a separable input");

  LocalReport rep;
  rep.alpha = alpha;
  rep.ord_disc = ord_at(dr.disc, alpha);

  int order = std::max(4, 2 * degree_x(f).value_or(1) * f.deg());
  for (int attempt = 0; attempt < 8; ++attempt, order *= 2) {
    std::vector<PuiseuxBranch> br = puiseux_branches(f, alpha, order);
    // group by center (infinity first, then by value); centers are exact
    std::vector<std::vector<const PuiseuxBranch*>> groups;
    {
      std::vector<const PuiseuxBranch*> inf;
      std::map<Rat, std::vector<const PuiseuxBranch*>> fin;
      for (const auto& b : br) {
        if (b.center)
          fin[*b.center].push_back(&b);
        else
          inf.push_back(&b);
      }
      if (!inf.empty()) groups.push_back(std::move(inf));
      for (auto& [key, v] : fin) groups.push_back(std::move(v));
    }
    bool ok = true;
    long long delta = 0;
    try {
      for (const auto& g : groups) {
        for (const auto* b : g) delta += branch_delta(*b);
        for (size_t i = 0; i < g.size() && ok; ++i)
          for (size_t j = i + 1; j < g.size() && ok; ++j) {
            auto m = branch_intersection(*g[i], *g[j]);
            if (!m) {
              ok = false;
              break;
            }
            delta += *m;
          }
        if (!ok) break;
      }
    } catch (const Error& e) {
      if (e.kind() != Err::TruncationInsufficient) throw;
      ok = false;
    }
    if (!ok) continue;
    rep.places = (int)br.size();
    rep.r_alpha = f.deg() - rep.places;
    rep.delta_alpha = (int)delta;
    rep.identity_holds = rep.ord_disc == rep.r_alpha + 2 * rep.delta_alpha;
    return rep;
  }
  throw Error(Err::TruncationInsufficient, "pairwise contacts did not stabilise");
}

}  // namespace bidisc
