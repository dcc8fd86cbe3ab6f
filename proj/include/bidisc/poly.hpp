#ifndef BIDISC_POLY_HPP
#define BIDISC_POLY_HPP

#include <algorithm>
#include <compare>
#include <limits>
#include <optional>
#include <vector>

#include "bidisc/error.hpp"
#include "bidisc/rational.hpp"

namespace bidisc {

// Degree of a polynomial; the zero polynomial has degree minus infinity,
// carried as an explicit sentinel rather than -1.
class Degree {
 public:
  Degree() : raw_(kNegInf) {}
  Degree(int v) : raw_(v) {}
  static Degree neg_inf() { return Degree(); }

  bool is_neg_inf() const { return raw_ == kNegInf; }
  int value() const {
    require(!is_neg_inf(), Err::ZeroPolynomial, "degree of the zero polynomial");
    return raw_;
  }
  int value_or(int fallback) const { return is_neg_inf() ? fallback : raw_; }

  friend bool operator==(Degree a, Degree b) { return a.raw_ == b.raw_; }
  friend auto operator<=>(Degree a, Degree b) { return a.raw_ <=> b.raw_; }
  friend Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.raw_ + b.raw_);
  }

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  int raw_;
};

template <class T>
bool is_zero(const T& a);

// Dense univariate polynomial over an exact coefficient ring T.
// coeff(k) is the coefficient of X^k; no trailing zero is stored.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(const T& constant) {
    if (!is_zero(constant)) c_.push_back(constant);
  }
  static Poly from_coeffs(std::vector<T> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }
  // c * X^k
  static Poly monomial(const T& c, int k) {
    Poly p;
    if (!is_zero(c)) {
      p.c_.assign(k + 1, T());
      p.c_[k] = c;
    }
    return p;
  }

  bool zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree((int)c_.size() - 1); }
  // degree as int; only for known-nonzero operands
  int deg() const {
    require(!c_.empty(), Err::ZeroPolynomial, "degree of the zero polynomial");
    return (int)c_.size() - 1;
  }
  int size() const { return (int)c_.size(); }

  const T& coeff(int k) const {
    static const T kZero{};
    if (k < 0 || k >= (int)c_.size()) return kZero;
    return c_[k];
  }
  const T& lc() const {
    require(!c_.empty(), Err::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<T>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = T(c[i] + b.c_[i]);
    return from_coeffs(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = T(c[i] - b.c_[i]);
    return from_coeffs(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<T> c(a.c_.size(), T());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = T(-a.c_[i]);
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = T(c[i + j] + a.c_[i] * b.c_[j]);
    }
    return from_coeffs(std::move(c));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> c(a.c_.size(), T());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = T(a.c_[i] * s);
    return from_coeffs(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using UPoly = Poly<Rat>;
using BPoly = Poly<UPoly>;

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.zero();
}
inline bool is_constant(const UPoly& p) { return p.size() <= 1; }
inline bool is_constant(const BPoly& p) { return p.size() <= 1; }

template <class T>
Poly<T> poly_pow(const Poly<T>& a, int e) {
  require(e >= 0, Err::BadParams, "negative polynomial power");
  Poly<T> r{T(1)};
  Poly<T> base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.size() <= 1) return Poly<T>();
  std::vector<T> c(a.size() - 1, T());
  for (int k = 1; k < a.size(); ++k) c[k - 1] = T(a.coeff(k) * T(Rat(k)));
  return Poly<T>::from_coeffs(std::move(c));
}

// ---- scalar helpers -------------------------------------------------------

inline std::optional<Rat> try_div(const Rat& a, const Rat& b) {
  if (is_zero(b)) return std::nullopt;
  return Rat(a / b);
}

template <class T>
std::optional<Poly<T>> try_div(const Poly<T>& a, const Poly<T>& b);

template <class T>
T divexact(const T& a, const T& b) {
  auto q = try_div(a, b);
  require(q.has_value(), Err::Internal, "inexact division in exact-division context");
  return *q;
}

// Exact division in T[X]; nullopt when b does not divide a.
// Works over any integral domain T: leading coefficients never cancel, so
// every partial quotient of an exact division is itself exact.
template <class T>
std::optional<Poly<T>> try_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.zero()) return std::nullopt;
  if (a.zero()) return Poly<T>();
  if (a.deg() < b.deg()) return std::nullopt;
  std::vector<T> q(a.deg() - b.deg() + 1, T());
  Poly<T> r = a;
  while (!r.zero() && r.deg() >= b.deg()) {
    auto qk = try_div(r.lc(), b.lc());
    if (!qk) return std::nullopt;
    int shift = r.deg() - b.deg();
    q[shift] = *qk;
    r = r - Poly<T>::monomial(*qk, shift) * b;
    if (!r.zero() && r.deg() >= b.deg() + shift) return std::nullopt;
  }
  if (!r.zero()) return std::nullopt;
  return Poly<T>::from_coeffs(std::move(q));
}

// Field division with remainder (T must be a field; used for UPoly).
inline std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  require(!b.zero(), Err::DivisionByZero, "polynomial division by zero");
  UPoly q, r = a;
  while (!r.zero() && r.deg() >= b.deg()) {
    Rat c = r.lc() / b.lc();
    int shift = r.deg() - b.deg();
    UPoly t = UPoly::monomial(c, shift);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

inline Rat eval(const UPoly& p, const Rat& x) {
  Rat r(0);
  for (int k = p.size() - 1; k >= 0; --k) r = Rat(r * x + p.coeff(k));
  return r;
}

inline UPoly monic(const UPoly& p) {
  if (p.zero()) return p;
  return p * Rat(1 / p.lc());
}

inline UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.zero()) {
    auto [q, r] = divrem(x, y);
    x = y;
    y = r;
  }
  return monic(x);
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.size() <= 1) return monic(p);
  UPoly g = gcd(p, derivative(p));
  return divexact(p, g);
}

// Composition p(q) by Horner; also accepts q in a bigger ring.
template <class T>
Poly<T> compose(const UPoly& p, const Poly<T>& q) {
  Poly<T> r;
  for (int k = p.size() - 1; k >= 0; --k) {
    r = r * q + Poly<T>(T(Rat(p.coeff(k))));
  }
  return r;
}
inline UPoly compose_u(const UPoly& p, const UPoly& q) {
  UPoly r;
  for (int k = p.size() - 1; k >= 0; --k) r = r * q + UPoly(p.coeff(k));
  return r;
}

// Taylor shift p(x + alpha).
inline UPoly shift(const UPoly& p, const Rat& alpha) {
  UPoly x_plus = UPoly::from_coeffs({alpha, Rat(1)});
  return compose_u(p, x_plus);
}

// Largest k with (x - alpha)^k | p.
inline int ord_at(const UPoly& p, const Rat& alpha) {
  require(!p.zero(), Err::ZeroPolynomial, "vanishing order of the zero polynomial");
  UPoly cur = p;
  UPoly lin = UPoly::from_coeffs({Rat(-alpha), Rat(1)});
  int k = 0;
  while (true) {
    auto [q, r] = divrem(cur, lin);
    if (!r.zero()) return k;
    ++k;
    cur = q;
    if (cur.zero()) return k;  // unreachable: p nonzero
  }
}

}  // namespace bidisc

#endif
