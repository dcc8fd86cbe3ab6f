#include "bidisc/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace bidisc {

namespace {

using Pt = std::pair<int, int>;

long long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (long long)(a.first - o.first) * (b.second - o.second) -
         (long long)(a.second - o.second) * (b.first - o.first);
}

std::vector<Pt> support_points(const BPoly& f) {
  std::vector<Pt> pts;
  for (int j = 0; j < f.size(); ++j)
    for (int i = 0; i < f.coeff(j).size(); ++i)
      if (!is_zero(f.coeff(j).coeff(i))) pts.push_back({i, j});
  pts.push_back({0, 0});
  pts.push_back({0, f.deg()});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Monotone chain; returns strict hull vertices counterclockwise.
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  int n = (int)pts.size();
  if (n <= 2) return pts;
  std::vector<Pt> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

long long shoelace_twice(const std::vector<Pt>& v) {
  long long s = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Pt& p = v[i];
    const Pt& q = v[(i + 1) % v.size()];
    s += (long long)p.first * q.second - (long long)q.first * p.second;
  }
  return s < 0 ? -s : s;
}

}  // namespace

long long newton_two_volume(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "polytope of the zero polynomial");
  return shoelace_twice(convex_hull(support_points(f)));
}

PolytopeData generic_polytope(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "polytope of the zero polynomial");
  require(is_primitive_y(f), Err::NotPrimitive, "polytope parameters need a primitive input");
  require(!f.coeff(0).zero(), Err::YDivides,
          "y divides f: the parameter a = deg_x f(x,0) is undefined");
  PolytopeData P;
  P.d_y = f.deg();
  P.d_x = degree_x(f).value();
  P.a = f.coeff(0).deg();
  P.b = lc_y(f).deg();
  P.c = std::min(P.a, P.b);
  P.normal_position = P.b <= P.a;
  auto hull = convex_hull(support_points(f));
  // rotate so the vertex list starts at (0,0)
  auto it = std::find(hull.begin(), hull.end(), Pt{0, 0});
  require(it != hull.end(), Err::Internal, "(0,0) must be a hull vertex");
  std::rotate(hull.begin(), it, hull.end());
  P.two_volume = shoelace_twice(hull);
  P.vertices = std::move(hull);
  return P;
}

CharData edge_char_data(const BPoly& f) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "edge data needs y-degree >= 1");
  if (f.coeff(0).zero())
    throw Error(Err::NotUnibranchEdge, "y divides f; no right edge from the x-axis");
  PolytopeData P = generic_polytope(f);
  const int dy = P.d_y, a = P.a, b = P.b;

  // Lemma-4.1 shape: every support point lies on the (a,0)-(b,d_y) side
  //   d_y*i + (a-b)*j <= a*d_y
  for (int j = 0; j < f.size(); ++j)
    for (int i = 0; i < f.coeff(j).size(); ++i) {
      if (is_zero(f.coeff(j).coeff(i))) continue;
      if ((long long)dy * i + (long long)(a - b) * j > (long long)a * dy)
        throw Error(Err::NotUnibranchEdge,
                    "support crosses the (a,0)-(b,d_y) edge; polytope not of unibranch shape");
    }

  CharData cd;
  cd.b = b;
  cd.n = std::gcd(dy, std::abs(a - b));
  cd.p = dy / cd.n;
  cd.q = (a - b) / cd.n;
  cd.alpha = Rat(1);

  // lattice points on the edge: (a - k*q, k*p) for k = 0..n
  std::vector<Rat> edge(cd.n + 1);
  for (int k = 0; k <= cd.n; ++k) edge[k] = f.coeff(k * cd.p).coeff(a - k * cd.q);
  cd.unit = edge[cd.n];
  require(!is_zero(cd.unit) && !is_zero(edge[0]), Err::Internal, "edge endpoints must be present");

  if (cd.n == 1) {
    cd.beta = Rat(edge[0] / cd.unit);
  } else {
    cd.beta = Rat(edge[cd.n - 1] / (Rat(cd.n) * cd.unit));
    if (is_zero(cd.beta))
      throw Error(Err::NotUnibranchEdge, "edge polynomial is not an n-th power of a binomial");
    for (int k = 0; k <= cd.n; ++k) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), cd.n, k);
      Rat expect = Rat(cd.unit * Rat(binom) * rat_pow(cd.beta, cd.n - k));
      if (edge[k] != expect)
        throw Error(Err::NotUnibranchEdge, "edge polynomial is not an n-th power of a binomial");
    }
  }
  require(!is_zero(cd.beta), Err::NotUnibranchEdge, "vanishing x-side coefficient on the edge");
  return cd;
}

BPoly edge_poly_of(const CharData& cd) {
  require(cd.q >= 0, Err::BadParams, "edge reconstruction needs q >= 0");
  BPoly binom = BPoly::monomial(UPoly(Rat(1)), cd.p) + BPoly(UPoly::monomial(cd.beta, cd.q));
  return poly_pow(binom, cd.n) * UPoly::monomial(cd.unit, cd.b);
}

}  // namespace bidisc
