#include "borelcover/text.hpp"

#include "borelcover/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace borelcover {

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = m.n(); i >= 0; --i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const CVar& v) {
  return "C[" + std::to_string(v.head) + "," + std::to_string(v.tail) + "]";
}

std::string to_string(const CMonomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Appends "c*m" with the sign handled by the caller-visible separator.
void append_term(std::string& out, const Rational& c, const std::string& mono, bool first) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  Rational mag = abs(c);
  if (mono == "1") {
    out += to_string(mag);
  } else if (mag == 1) {
    out += mono;
  } else {
    out += to_string(mag) + "*" + mono;
  }
}

std::vector<std::pair<CMonomial, Rational>> ordered_terms(const ParamPoly& p) {
  std::vector<std::pair<CMonomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  return terms;
}

}  // namespace

std::string to_string(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered_terms(p)) {
    append_term(out, c, to_string(m), first);
    first = false;
  }
  return out;
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    append_term(out, c, to_string(m), first);
    first = false;
  }
  return out;
}

std::string to_string(const ParamXPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = to_string(m);
    if (c.size() == 1) {
      const auto& [cm, cc] = *c.terms().begin();
      std::string joined = cm.is_one() ? mono : (mono == "1" ? to_string(cm) : to_string(cm) + "*" + mono);
      append_term(out, cc, joined, first);
    } else {
      out += first ? "" : " + ";
      out += "(" + to_string(c) + ")";
      if (mono != "1") out += "*" + mono;
    }
    first = false;
  }
  return out;
}

namespace {

// Generic term key: x-exponents (sparse), C-monomial, t-exponent.
struct Key {
  std::map<int, int> x;
  CMonomial c;
  int t = 0;
  auto operator<=>(const Key&) const = default;
};

Key operator*(const Key& a, const Key& b) {
  Key r = a;
  for (const auto& [i, e] : b.x) r.x[i] += e;
  r.c = a.c * b.c;
  r.t += b.t;
  return r;
}

using Expr = std::map<Key, Rational>;

void add_to(Expr& e, const Key& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = e.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) e.erase(it);
  }
}

Expr mul(const Expr& a, const Expr& b) {
  Expr r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) add_to(r, ka * kb, ca * cb);
  }
  return r;
}

Expr constant(const Rational& c) {
  Expr e;
  add_to(e, Key{}, c);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(normalize(text)) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  static std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      // U+2212 MINUS SIGN
      if (i + 2 < text.size() + 0 && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
        out += '-';
        i += 2;
        continue;
      }
      out += text[i];
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  int small_int() {
    Integer v = integer();
    if (!v.fits_sint_p() || v > 100000) fail("integer too large");
    return static_cast<int>(v.get_si());
  }

  Expr expr() {
    Expr total;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      Expr t = term();
      for (const auto& [k, c] : t) add_to(total, k, negative ? Rational(-c) : c);
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return total;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'x' || c == 'C' || c == 't' || c == '(';
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (accept('*')) {
        e = mul(e, factor());
      } else if (accept('/')) {
        Expr d = factor();
        if (d.size() != 1 || !(d.begin()->first == Key{}) ) fail("division only by nonzero constants");
        e = mul(e, constant(1 / d.begin()->second));
      } else if (starts_primary()) {
        e = mul(e, factor());
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    Expr base = primary();
    if (accept('^')) {
      int exp = small_int();
      Expr r = constant(1);
      for (int i = 0; i < exp; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rational(integer()));
    if (c == 'x') {
      ++pos_;
      Key k;
      k.x[small_int()] = 1;
      Expr e;
      add_to(e, k, 1);
      return e;
    }
    if (c == 'C') {
      ++pos_;
      expect('[');
      int head = small_int();
      expect(',');
      int tail = small_int();
      expect(']');
      if (head < 1 || tail < 1) fail("C indices are 1-based");
      Key k;
      k.c = CMonomial(CVar{head, tail});
      Expr e;
      add_to(e, k, 1);
      return e;
    }
    if (c == 't') {
      ++pos_;
      Key k;
      k.t = 1;
      Expr e;
      add_to(e, k, 1);
      return e;
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

Monomial x_monomial(const Key& k, int n, std::string_view text) {
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  for (const auto& [i, exp] : k.x) {
    if (i < 0 || i > n) throw ParseError("variable x" + std::to_string(i) + " out of range in '" + std::string(text) + "'");
    e[static_cast<std::size_t>(i)] = exp;
  }
  return Monomial(std::move(e));
}

}  // namespace

XPoly parse_xpoly(std::string_view text, int n) {
  Expr e = Parser(text).parse();
  XPoly out(n);
  for (const auto& [k, c] : e) {
    if (!k.c.is_one() || k.t != 0) throw ParseError("unexpected parameter in '" + std::string(text) + "'");
    out.add_term(x_monomial(k, n, text), c);
  }
  return out;
}

ParamPoly parse_param_poly(std::string_view text) {
  Expr e = Parser(text).parse();
  ParamPoly out;
  for (const auto& [k, c] : e) {
    if (!k.x.empty() || k.t != 0) throw ParseError("unexpected x or t in '" + std::string(text) + "'");
    out.add_term(k.c, c);
  }
  return out;
}

ParamXPoly parse_param_xpoly(std::string_view text, int n) {
  Expr e = Parser(text).parse();
  ParamXPoly out(n);
  for (const auto& [k, c] : e) {
    if (k.t != 0) throw ParseError("unexpected t in '" + std::string(text) + "'");
    out.add_term(x_monomial(k, n, text), ParamPoly::term(k.c, c));
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int n) {
  XPoly p = parse_xpoly(text, n);
  if (p.size() != 1 || p.terms().begin()->second != 1) {
    throw ParseError("expected a monomial, got '" + std::string(text) + "'");
  }
  return p.terms().begin()->first;
}

int max_variable_index(std::string_view text) {
  int best = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    int v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      any = true;
      ++j;
    }
    if (any) best = std::max(best, v);
  }
  return best;
}

// Used by the Hilbert-polynomial parser.
std::vector<Rational> parse_univariate_t(std::string_view text) {
  Expr e = Parser(text).parse();
  std::vector<Rational> coeffs;
  for (const auto& [k, c] : e) {
    if (!k.x.empty() || !k.c.is_one()) throw ParseError("expected a polynomial in t, got '" + std::string(text) + "'");
    if (static_cast<int>(coeffs.size()) <= k.t) coeffs.resize(static_cast<std::size_t>(k.t + 1));
    coeffs[static_cast<std::size_t>(k.t)] += c;
  }
  return coeffs;
}

}  // namespace borelcover
