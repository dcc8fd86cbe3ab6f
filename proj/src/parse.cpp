#include "bidisc/parse.hpp"

#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace bidisc {

namespace {

enum class Tok { Num, X, Y, Y0, Y1, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (std::isspace((unsigned char)ch)) {
      ++i;
      continue;
    }
    size_t start = i;
    if (std::isdigit((unsigned char)ch)) {
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      out.push_back({Tok::Num, std::string(s.substr(start, i - start)), start});
      continue;
    }
    switch (ch) {
      case '+': out.push_back({Tok::Plus, "+", start}); ++i; continue;
      case '-': out.push_back({Tok::Minus, "-", start}); ++i; continue;
      case '*': out.push_back({Tok::Star, "*", start}); ++i; continue;
      case '^': out.push_back({Tok::Caret, "^", start}); ++i; continue;
      case '/': out.push_back({Tok::Slash, "/", start}); ++i; continue;
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case 'x': out.push_back({Tok::X, "x", start}); ++i; continue;
      case 'y': out.push_back({Tok::Y, "y", start}); ++i; continue;
      case 'Y':
        if (i + 1 < s.size() && s[i + 1] == '0') {
          out.push_back({Tok::Y0, "Y0", start});
          i += 2;
          continue;
        }
        if (i + 1 < s.size() && s[i + 1] == '1') {
          out.push_back({Tok::Y1, "Y1", start});
          i += 2;
          continue;
        }
        throw Error(Err::Syntax, "expected Y0 or Y1", start);
      default: throw Error(Err::Syntax, std::string("unexpected character '") + ch + "'", start);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Sparse trivariate value: exponents (x, y|Y0, Y1) -> coefficient.
using TriPoly = std::map<std::array<int, 3>, Rat>;

TriPoly tp_const(const Rat& c) {
  TriPoly t;
  if (!is_zero(c)) t[{0, 0, 0}] = c;
  return t;
}

TriPoly tp_var(int which) {
  TriPoly t;
  std::array<int, 3> e{0, 0, 0};
  e[which] = 1;
  t[e] = Rat(1);
  return t;
}

void tp_add_term(TriPoly& t, const std::array<int, 3>& e, const Rat& c) {
  auto it = t.find(e);
  if (it == t.end()) {
    if (!is_zero(c)) t.emplace(e, c);
    return;
  }
  it->second += c;
  if (is_zero(it->second)) t.erase(it);
}

TriPoly tp_add(const TriPoly& a, const TriPoly& b) {
  TriPoly r = a;
  for (const auto& [e, c] : b) tp_add_term(r, e, c);
  return r;
}

TriPoly tp_neg(const TriPoly& a) {
  TriPoly r;
  for (const auto& [e, c] : a) r.emplace(e, Rat(-c));
  return r;
}

TriPoly tp_mul(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      tp_add_term(r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, Rat(ca * cb));
  return r;
}

TriPoly tp_pow(TriPoly base, long e) {
  TriPoly r = tp_const(Rat(1));
  while (e > 0) {
    if (e & 1) r = tp_mul(r, base);
    base = tp_mul(base, base);
    e >>= 1;
  }
  return r;
}

// allowed-variable mask: bit 0 = x, 1 = y, 2 = Y0/Y1
struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;
  bool allow_y;
  bool allow_form_vars;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  [[noreturn]] void err(const std::string& msg) const {
    throw Error(Err::Syntax, msg, peek().pos);
  }

  Rat rational(bool negative) {
    Token num = next();  // Tok::Num guaranteed by caller
    Int n(num.text);
    if (negative) n = -n;
    if (peek().kind == Tok::Slash) {
      next();
      if (peek().kind != Tok::Num) err("expected integer after '/'");
      Token den = next();
      Int d(den.text);
      if (sgn(d) == 0) throw Error(Err::DivisionByZero, "zero denominator in literal", den.pos);
      return rat(n, d);
    }
    return rat(n, Int(1));
  }

  TriPoly base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus: {
        next();
        if (peek().kind != Tok::Num) err("expected number after unary '-'");
        return tp_const(rational(true));
      }
      case Tok::Num: return tp_const(rational(false));
      case Tok::X: next(); return tp_var(0);
      case Tok::Y:
        if (!allow_y) err("variable y not allowed here");
        next();
        return tp_var(1);
      case Tok::Y0:
        if (!allow_form_vars) err("variable Y0 not allowed here");
        next();
        return tp_var(1);
      case Tok::Y1:
        if (!allow_form_vars) err("variable Y1 not allowed here");
        next();
        return tp_var(2);
      case Tok::LParen: {
        next();
        TriPoly e = expr();
        if (peek().kind != Tok::RParen) err("expected ')'");
        next();
        return e;
      }
      default: err("expected rational, variable, or '('");
    }
  }

  TriPoly factor() {
    TriPoly b = base();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Num) err("expected natural exponent after '^'");
      Token e = next();
      if (e.text.size() > 4) throw Error(Err::Syntax, "exponent too large", e.pos);
      long n = std::stol(e.text);
      return tp_pow(std::move(b), n);
    }
    return b;
  }

  TriPoly term() {
    TriPoly r = factor();
    while (peek().kind == Tok::Star) {
      next();
      r = tp_mul(r, factor());
    }
    // adjacent operands without '*' (implicit multiplication) are rejected
    switch (peek().kind) {
      case Tok::Num:
      case Tok::X:
      case Tok::Y:
      case Tok::Y0:
      case Tok::Y1:
      case Tok::LParen: err("implicit multiplication is not allowed (insert '*')");
      default: break;
    }
    return r;
  }

  TriPoly expr() {
    TriPoly r = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      TriPoly t = term();
      r = tp_add(r, minus ? tp_neg(t) : t);
    }
    return r;
  }

  TriPoly run() {
    TriPoly r = expr();
    if (peek().kind != Tok::End) err("trailing input");
    return r;
  }
};

TriPoly parse_tri(std::string_view text, bool allow_y, bool allow_form_vars) {
  auto toks = lex(text);
  Parser p{toks, 0, allow_y, allow_form_vars};
  return p.run();
}

}  // namespace

BPoly parse_poly(std::string_view text) {
  TriPoly t = parse_tri(text, /*allow_y=*/true, /*allow_form_vars=*/false);
  int dy = 0;
  for (const auto& [e, c] : t) dy = std::max(dy, e[1]);
  std::vector<std::vector<Rat>> grid(dy + 1);
  for (const auto& [e, c] : t) {
    auto& row = grid[e[1]];
    if ((int)row.size() <= e[0]) row.resize(e[0] + 1, Rat(0));
    row[e[0]] = c;
  }
  std::vector<UPoly> coeffs;
  coeffs.reserve(grid.size());
  for (auto& row : grid) coeffs.push_back(UPoly::from_coeffs(std::move(row)));
  return BPoly::from_coeffs(std::move(coeffs));
}

BForm parse_form(std::string_view text) {
  TriPoly t = parse_tri(text, /*allow_y=*/false, /*allow_form_vars=*/true);
  if (t.empty()) return BForm();  // zero form, degree 0
  int d = -1;
  std::string offending;
  for (const auto& [e, c] : t) {
    int total = e[1] + e[2];
    if (d < 0) d = total;
    if (total != d && offending.empty()) {
      std::ostringstream os;
      os << "monomials of Y-degree " << d << " and " << total << " both present";
      offending = os.str();
    }
    d = std::max(d, total);
  }
  for (const auto& [e, c] : t) {
    if (e[1] + e[2] != d)
      throw Error(Err::NotHomogeneous,
                  offending.empty() ? "mixed Y-degrees" : offending);
  }
  BForm F(d);
  for (const auto& [e, c] : t) {
    auto& u = F.c[e[1]];
    std::vector<Rat> uc(u.coeffs());
    if ((int)uc.size() <= e[0]) uc.resize(e[0] + 1, Rat(0));
    uc[e[0]] = c;
    u = UPoly::from_coeffs(std::move(uc));
  }
  return F;
}

std::vector<BForm> parse_form_factors(std::string_view text) {
  // split on top-level '*' between parenthesised groups
  std::vector<BForm> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(Err::Syntax, "expected '(' starting a factor", i);
    int depth = 0;
    size_t start = i;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) break;
    }
    if (depth != 0) throw Error(Err::Syntax, "unbalanced parentheses", start);
    out.push_back(parse_form(text.substr(start + 1, i - start - 1)));
    ++i;
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '*') throw Error(Err::Syntax, "expected '*' between factors", i);
      ++i;
      skip_ws();
    }
  }
  require(!out.empty(), Err::Syntax, "empty factor list");
  return out;
}

namespace {

struct Mono {
  Rat c;
  int ex, e1, e2;  // x, y|Y0, Y1
};

std::string format_monomials(const std::vector<Mono>& ms, const char* v0, const char* v1,
                             const char* v2) {
  if (ms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : ms) {
    Rat c = m.c;
    if (first) {
      if (sgn(c) < 0) {
        // leading negatives print through the rational literal
      }
      first = false;
    } else {
      if (sgn(c) < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    std::vector<std::string> parts;
    bool has_vars = m.ex > 0 || m.e1 > 0 || m.e2 > 0;
    if (!has_vars || c != 1) parts.push_back(c.get_str());
    auto push_var = [&](const char* v, int e) {
      if (e == 0) return;
      std::string s = v;
      if (e > 1) s += "^" + std::to_string(e);
      parts.push_back(s);
    };
    push_var(v0, m.ex);
    push_var(v1, m.e1);
    push_var(v2, m.e2);
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) os << "*";
      os << parts[k];
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const UPoly& u, const char* var) {
  std::vector<Mono> ms;
  for (int i = u.size() - 1; i >= 0; --i)
    if (!is_zero(u.coeff(i))) ms.push_back({u.coeff(i), i, 0, 0});
  return format_monomials(ms, var, "", "");
}

std::string to_string(const BPoly& f) {
  std::vector<Mono> ms;
  for (int j = f.size() - 1; j >= 0; --j)
    for (int i = f.coeff(j).size() - 1; i >= 0; --i)
      if (!is_zero(f.coeff(j).coeff(i))) ms.push_back({f.coeff(j).coeff(i), i, j, 0});
  return format_monomials(ms, "x", "y", "");
}

std::string to_string(const BForm& F) {
  std::vector<Mono> ms;
  for (int k = F.d; k >= 0; --k)
    for (int i = F.c[k].size() - 1; i >= 0; --i)
      if (!is_zero(F.c[k].coeff(i))) ms.push_back({F.c[k].coeff(i), i, k, F.d - k});
  return format_monomials(ms, "x", "Y0", "Y1");
}

}  // namespace bidisc
