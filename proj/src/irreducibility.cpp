#include "bidisc/irreducibility.hpp"

#include <map>

namespace bidisc {

bool squarefree_in_y(const BPoly& f) {
  require(!f.zero() && f.deg() >= 1, Err::DegreeZeroInY, "squarefree test needs y-degree >= 1");
  BPoly g = ygcd(f, deriv_y(f));
  return g.zero() ? false : g.deg() == 0;
}

namespace {

// Exact rank of a dense rational matrix.
int rank_of(std::vector<std::vector<Rat>>& M) {
  const int rows = (int)M.size();
  if (rows == 0) return 0;
  const int cols = (int)M[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!is_zero(M[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    Rat inv = Rat(1 / M[rank][col]);
    for (int j = col; j < cols; ++j) M[rank][j] = Rat(M[rank][j] * inv);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || is_zero(M[i][col])) continue;
      Rat factor = M[i][col];
      for (int j = col; j < cols; ++j) M[i][j] = Rat(M[i][j] - factor * M[rank][j]);
    }
    ++rank;
  }
  return rank;
}

// coefficient of x^i y^j
const Rat& cxy(const BPoly& p, int i, int j) { return p.coeff(j).coeff(i); }

}  // namespace

FactorCount absolute_factor_count(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "factor count of zero");
  require(is_primitive_y(f), Err::NotPrimitive, "factor count needs a primitive input");
  const int n = f.degree().value_or(0);
  const int m = degree_x(f).value_or(0);
  require(m >= 1 && n >= 1, Err::UnivariateInput,
          "factor count needs positive degree in both variables");
  FactorCount fc;
  fc.squarefree = squarefree_in_y(f);
  require(fc.squarefree, Err::NotSquarefree, "factor count needs a squarefree input");

  const BPoly fx = deriv_x(f);
  const BPoly fy = deriv_y(f);

  // unknowns: g-monomials x^a y^b with a <= m-1, b <= n, then h-monomials with
  // a <= m, b <= n-1. Each contributes a column of
  //   E = f*(dg/dy - dh/dx) - g*fy + h*fx
  const int g_count = m * (n + 1);
  const int h_count = (m + 1) * n;
  const int cols = g_count + h_count;
  const int xr = 2 * m;  // E has deg_x <= 2m-1, deg_y <= 2n-1
  const int yr = 2 * n;
  std::vector<std::vector<Rat>> M(xr * yr, std::vector<Rat>(cols, Rat(0)));

  auto add_poly = [&](const BPoly& p, int col, const Rat& scale, int sx, int sy) {
    // adds scale * x^sx y^sy * p into column col
    for (int j = 0; j < p.size(); ++j)
      for (int i = 0; i < p.coeff(j).size(); ++i) {
        const Rat& c = cxy(p, i, j);
        if (is_zero(c)) continue;
        int row = (i + sx) * yr + (j + sy);
        M[row][col] = Rat(M[row][col] + scale * c);
      }
  };

  int col = 0;
  for (int a = 0; a <= m - 1; ++a)
    for (int b = 0; b <= n; ++b, ++col) {
      if (b > 0) add_poly(f, col, Rat(b), a, b - 1);  // f * d/dy(x^a y^b)
      add_poly(fy, col, Rat(-1), a, b);               // - x^a y^b * fy
    }
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= n - 1; ++b, ++col) {
      if (a > 0) add_poly(f, col, Rat(-a), a - 1, b);  // -f * d/dx(x^a y^b)
      add_poly(fx, col, Rat(1), a, b);                 // + x^a y^b * fx
    }

  int rank = rank_of(M);
  fc.abs_factor_count = cols - rank;
  require(fc.abs_factor_count >= 1, Err::Internal, "nullspace lost the trivial solution");
  return fc;
}

bool is_absolutely_irreducible(const BPoly& f) {
  require(!f.zero(), Err::ZeroPolynomial, "irreducibility of zero");
  const int n = f.degree().value_or(0);
  const int m = degree_x(f).value_or(0);
  if (n == 0 || m == 0) {
    // univariate: irreducible over the closure iff linear
    return m + n == 1;
  }
  return absolute_factor_count(f).abs_factor_count == 1;
}

}  // namespace bidisc
