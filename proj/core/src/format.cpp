#include "airycoef/format.hpp"

#include <cctype>
#include <stdexcept>

#include "airycoef/errors.hpp"

namespace airycoef {

namespace {

struct Style {
  bool latex;
};

std::string var_name(Var v, const Style& st) {
  std::string n = v.name();
  if (!st.latex) return n;
  static const char* greek[] = {"alpha", "beta", "gamma", "delta", "eta", "xi", "theta", "mu", "zeta", "sigma", "tau"};
  for (const char* g : greek) {
    if (n == g) return std::string("\\") + n;
  }
  return n;
}

std::string power_suffix(unsigned e, const Style& st) {
  if (e == 1) return "";
  if (st.latex) return "^{" + std::to_string(e) + "}";
  return "^" + std::to_string(e);
}

std::string monomial_string(const Monomial& m, const Style& st) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty() && !st.latex) out += "*";
    std::string name = var_name(Var(static_cast<std::uint8_t>(i)), st);
    if (st.latex && !out.empty() && name[0] != '\\') out += " ";
    out += name + power_suffix(m.exp[i], st);
  }
  return out;
}

std::string abs_rational_string(const Rational& q, const Style& st) {
  const Rational a = abs(q);
  if (st.latex && !is_integer(a)) {
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  }
  return to_string(a);
}

std::string poly_string(const MultiPoly& p, const Style& st) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    const std::string mono = monomial_string(t.mono, st);
    const bool unit = abs(t.coef) == 1;
    if (mono.empty()) {
      out += abs_rational_string(t.coef, st);
    } else if (unit) {
      out += mono;
    } else {
      out += abs_rational_string(t.coef, st);
      out += st.latex ? (mono[0] == '\\' ? "" : " ") : "*";
      out += mono;
    }
  }
  return out;
}

std::string open_paren(const Style& st) { return st.latex ? "\\left(" : "("; }
std::string close_paren(const Style& st) { return st.latex ? "\\right)" : ")"; }

// Factor with its multiplicity; parenthesised unless it is a bare symbol.
std::string factor_string(const MultiPoly& f, unsigned mult, const Style& st) {
  const bool bare = f.is_monomial() && f.leading_term().coef == 1 && f.leading_term().mono.degree() == 1;
  std::string body = poly_string(f, st);
  if (!bare) body = open_paren(st) + body + close_paren(st);
  return body + power_suffix(mult, st);
}

struct FactoredSide {
  Integer constant;  // positive
  std::vector<std::string> factors;
  bool single_sum = false;  // exactly one factor that is a bare multi-term sum
  std::string sum_body;
};

FactoredSide factored(const MultiPoly& p, const Integer& constant, const Style& st) {
  FactoredSide side;
  side.constant = constant;
  if (p.is_constant()) return side;
  Rational unit;
  const auto parts = square_free(p, &unit);
  // The caller has already removed content and sign.
  if (unit != 1) throw std::logic_error("format: unexpected unit in primitive polynomial");
  for (const auto& sf : parts) side.factors.push_back(factor_string(sf.factor, sf.multiplicity, st));
  if (parts.size() == 1 && parts[0].multiplicity == 1 && parts[0].factor.size() > 1) {
    side.single_sum = true;
    side.sum_body = poly_string(parts[0].factor, st);
  }
  return side;
}

std::string join(const FactoredSide& side, const Style& st, bool allow_bare_sum) {
  std::vector<std::string> pieces;
  if (side.constant != 1 || side.factors.empty()) pieces.push_back(side.constant.get_str());
  if (allow_bare_sum && side.single_sum && pieces.empty()) return side.sum_body;
  for (const auto& f : side.factors) pieces.push_back(f);
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += st.latex ? (pieces[i].rfind("\\left", 0) == 0 || pieces[i][0] == '\\' ? "" : " ") : "*";
    out += pieces[i];
  }
  return out;
}

std::string ratfunc_string(const RatFunc& f, const Style& st) {
  if (f.is_zero()) return "0";
  const MultiPoly& num = f.num();
  const MultiPoly& den = f.den();
  // Integer contents and the overall sign.
  Rational cn = num.content();
  if (num.leading_term().coef < 0) cn = -cn;
  const Rational cd = den.content();
  const MultiPoly pn = num * Rational(1 / cn);
  const MultiPoly pd = den * Rational(1 / cd);
  const Rational c = cn / cd;
  const bool negative = c < 0;
  const Rational a = abs(c);

  const bool has_den = !pd.is_constant() || a.get_den() != 1;
  const FactoredSide top = factored(pn, a.get_num(), st);
  std::string sign = negative ? "-" : "";
  if (!has_den) {
    std::string body = join(top, st, true);
    if (negative && top.single_sum && top.constant == 1) {
      // -(x+1) reads better as -x-1
      return poly_string(-pn, st);
    }
    return sign + body;
  }
  const FactoredSide bottom = factored(pd, a.get_den(), st);
  if (st.latex) {
    return sign + "\\frac{" + join(top, st, true) + "}{" + join(bottom, st, true) + "}";
  }
  std::string numerator = join(top, st, true);
  if (top.single_sum && top.constant == 1) numerator = "(" + numerator + ")";
  std::string denominator = join(bottom, st, false);
  const bool bottom_single = (bottom.constant == 1 ? 0 : 1) + bottom.factors.size() == 1;
  if (!bottom_single) denominator = "(" + denominator + ")";
  return sign + numerator + "/" + denominator;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expression() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        acc /= unary();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    return base.pow(exponent());
  }

  int exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("integer exponent expected");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("')' expected");
    return negative ? -e : e;
  }

  RatFunc primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expression();
      if (!accept(')')) fail("')' expected");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RatFunc number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    Integer scale = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      digits += std::string(text_.substr(frac, pos_ - frac));
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos_ - frac);
    }
    if (digits.empty()) fail("number expected");
    return RatFunc(make_rational(Integer(digits), scale));
  }

  RatFunc identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    try {
      return RatFunc::variable(Var::intern(name));
    } catch (const std::length_error&) {
      fail("too many distinct symbols");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const MultiPoly& p) { return poly_string(p, Style{false}); }
std::string to_string(const RatFunc& f) { return ratfunc_string(f, Style{false}); }
std::string to_latex(const MultiPoly& p) { return poly_string(p, Style{true}); }
std::string to_latex(const RatFunc& f) { return ratfunc_string(f, Style{true}); }

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

}  // namespace airycoef
