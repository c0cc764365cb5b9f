#include "airycoef/ratfunc.hpp"

#include <stdexcept>

#include "airycoef/errors.hpp"
#include "dense_poly.hpp"

namespace airycoef {

namespace {

Integer integer_content(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
  return g;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(a.exp[i], b.exp[i]);
  return m;
}

MultiPoly with_positive_lead(MultiPoly p) {
  if (!p.is_zero() && p.leading_term().coef < 0) return -p;
  return p;
}

bool is_one(const MultiPoly& p) { return p.is_constant() && !p.is_zero() && p.constant_value() == 1; }

}  // namespace

MultiPoly polynomial_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  const Integer c = gcd(integer_content(a), integer_content(b));
  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const Monomial m = monomial_gcd(ma, mb);
  if (a.is_monomial() || b.is_monomial()) return MultiPoly::monomial(Rational(c), m);
  MultiPoly ra = a.div_monomial(ma);
  MultiPoly rb = b.div_monomial(mb);
  if (ra.is_constant() || rb.is_constant()) return MultiPoly::monomial(Rational(c), m);
  // Common symbols only; a factor cannot involve a symbol missing from either side.
  if ((ra.variable_mask() & rb.variable_mask()) == 0) return MultiPoly::monomial(Rational(c), m);
  const auto layout = detail::DenseLayout::for_polys({&ra, &rb});
  const int l = layout.levels();
  const detail::DPoly g = detail::gcd(layout.to_dense(ra), layout.to_dense(rb), l);
  MultiPoly result = layout.to_sparse(g);
  // detail::gcd already includes the integer content of ra, rb.
  return with_positive_lead(result.mul_monomial(1, m));
}

bool polynomial_divides(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = MultiPoly();
    return true;
  }
  if (b.is_monomial()) {
    const auto& bt = b.leading_term();
    std::vector<MultiPoly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!bt.mono.divides(t.mono)) return false;
      Rational q = t.coef / bt.coef;
      if (a.is_integral() && b.is_integral() && q.get_den() != 1) return false;
      out.push_back({t.mono / bt.mono, std::move(q)});
    }
    if (quotient) *quotient = MultiPoly::from_sorted_terms(std::move(out));
    return true;
  }
  if (!b.leading_term().mono.divides(a.leading_term().mono)) return false;
  const auto layout = detail::DenseLayout::for_polys({&a, &b});
  detail::DPoly q;
  if (!detail::divide(layout.to_dense(a), layout.to_dense(b), layout.levels(), quotient ? &q : nullptr)) return false;
  if (quotient) *quotient = layout.to_sparse(q);
  return true;
}

namespace {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  if (is_one(b)) return a;
  MultiPoly q;
  if (!polynomial_divides(a, b, &q)) throw std::logic_error("exact_quotient: inexact polynomial division");
  return q;
}

// Clears denominators of num/den jointly.
void make_integral(MultiPoly& num, MultiPoly& den) {
  Integer l = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  if (l != 1) {
    num *= Rational(l);
    den *= Rational(l);
  }
}

}  // namespace

RatFunc::RatFunc(const Rational& c) : num_(c), den_(1) {
  if (c != 0 && c.get_den() != 1) {
    num_ = MultiPoly(Rational(c.get_num()));
    den_ = MultiPoly(Rational(c.get_den()));
  }
}

RatFunc::RatFunc(const MultiPoly& p) : RatFunc(p, MultiPoly(1)) {}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  num_ = num;
  den_ = den;
  make_integral(num_, den_);
  const MultiPoly g = polynomial_gcd(num_, den_);
  if (!is_one(g)) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  if (den_.leading_term().coef < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of non-constant rational function");
  return Rational(num_.constant_coefficient() / den_.constant_coefficient());
}

std::vector<Var> RatFunc::variables() const {
  const unsigned mask = num_.variable_mask() | den_.variable_mask();
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (mask & (1u << i)) out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
    return *this;
  }
  // Henrici's addition: only factors of gcd(den, o.den) can cancel.
  const MultiPoly d1 = polynomial_gcd(den_, o.den_);
  if (is_one(d1)) {
    MultiPoly t = num_ * o.den_ + o.num_ * den_;
    if (t.is_zero()) return *this = RatFunc();
    MultiPoly d = den_ * o.den_;
    *this = RatFunc(std::move(t), std::move(d), Canonical{});
    return *this;
  }
  const MultiPoly b1 = exact_quotient(den_, d1);
  const MultiPoly d1o = exact_quotient(o.den_, d1);
  MultiPoly t = num_ * d1o + o.num_ * b1;
  if (t.is_zero()) return *this = RatFunc();
  const MultiPoly d2 = polynomial_gcd(t, d1);
  MultiPoly num = exact_quotient(t, d2);
  MultiPoly den = b1 * exact_quotient(o.den_, d2);
  if (den.leading_term().coef < 0) {
    num = -num;
    den = -den;
  }
  *this = RatFunc(std::move(num), std::move(den), Canonical{});
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  const MultiPoly g1 = polynomial_gcd(num_, o.den_);
  const MultiPoly g2 = polynomial_gcd(o.num_, den_);
  MultiPoly num = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  MultiPoly den = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  if (den.leading_term().coef < 0) {
    num = -num;
    den = -den;
  }
  *this = RatFunc(std::move(num), std::move(den), Canonical{});
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError("division by zero rational function");
  if (num_.leading_term().coef < 0) return RatFunc(-den_, -num_, Canonical{});
  return RatFunc(den_, num_, Canonical{});
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  // Powers of coprime polynomials stay coprime.
  return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Canonical{});
}

RatFunc RatFunc::derivative(Var v) const {
  const MultiPoly dn = num_.derivative(v);
  if (!den_.depends_on(v)) return RatFunc(dn, den_);
  // f' = (n' h - n e) / (g h^2) with g = gcd(d, d'), d = g h, d' = g e;
  // gcd(n' h - n e, h) = 1, so only factors of g can cancel.
  const MultiPoly dd = den_.derivative(v);
  const MultiPoly g = polynomial_gcd(den_, dd);
  const MultiPoly h = exact_quotient(den_, g);
  const MultiPoly e = exact_quotient(dd, g);
  MultiPoly t = dn * h - num_ * e;
  if (t.is_zero()) return RatFunc();
  const MultiPoly g2 = polynomial_gcd(t, g);
  MultiPoly num = exact_quotient(t, g2);
  MultiPoly den = exact_quotient(g, g2) * h * h;
  if (den.leading_term().coef < 0) {
    num = -num;
    den = -den;
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

namespace {

// Homogenised composition: returns sum_k c_k p^k q^(deg-k) where P = sum c_k v^k.
MultiPoly compose_numerator(const MultiPoly& P, Var v, const MultiPoly& p, const MultiPoly& q, unsigned deg) {
  const auto coeffs = P.coefficients_in(v);
  MultiPoly acc = coeffs[deg];
  MultiPoly qpow = q;
  for (std::size_t k = deg; k-- > 0;) {
    acc = acc * p + coeffs[k] * qpow;
    if (k) qpow = qpow * q;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::substitute(Var v, const RatFunc& g) const {
  if (!depends_on(v)) return *this;
  const unsigned dn = num_.degree(v);
  const unsigned dd = den_.degree(v);
  const MultiPoly& p = g.num();
  const MultiPoly& q = g.den();
  MultiPoly n = compose_numerator(num_, v, p, q, dn);
  MultiPoly d = compose_numerator(den_, v, p, q, dd);
  if (d.is_zero()) throw PoleError("substitution makes the denominator vanish identically");
  if (dd > dn) {
    n = n * q.pow(dd - dn);
  } else if (dn > dd) {
    d = d * q.pow(dn - dd);
  }
  return RatFunc(n, d);
}

RatFunc RatFunc::reflect(unsigned mask) const {
  MultiPoly n = num_.reflect(mask);
  MultiPoly d = den_.reflect(mask);
  if (d.leading_term().coef < 0) {
    n = -n;
    d = -d;
  }
  return RatFunc(std::move(n), std::move(d), Canonical{});
}

RatFunc RatFunc::rename(Var from, Var to) const {
  MultiPoly n = num_.rename(from, to);
  MultiPoly d = den_.rename(from, to);
  if (d.leading_term().coef < 0) {
    n = -n;
    d = -d;
  }
  return RatFunc(std::move(n), std::move(d), Canonical{});
}

Rational RatFunc::evaluate(const Assignment& at) const {
  const Rational d = den_.evaluate(at);
  if (d == 0) throw PoleError("rational function evaluated at a pole");
  return Rational(num_.evaluate(at) / d);
}

std::vector<SquareFreeFactor> square_free(const MultiPoly& p, Rational* unit) {
  if (p.is_zero()) throw std::invalid_argument("square_free of zero");
  std::vector<SquareFreeFactor> out;
  MultiPoly rest = p;
  Rational c = rest.content();
  if (rest.leading_term().coef < 0) c = -c;
  rest *= Rational(1 / c);
  *unit = c;
  // Monomial part first, one factor per symbol.
  const Monomial m = rest.monomial_content();
  rest = rest.div_monomial(m);
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i]) out.push_back({MultiPoly::variable(Var(static_cast<std::uint8_t>(i))), m.exp[i]});
  }
  // Yun's algorithm, one symbol at a time; factors free of the current symbol
  // stay in `rest` for the later passes.
  for (Var v : rest.variables()) {
    if (!rest.depends_on(v)) continue;
    const MultiPoly dv = rest.derivative(v);
    const MultiPoly a = polynomial_gcd(rest, dv);
    MultiPoly bq = exact_quotient(rest, a);
    MultiPoly d = exact_quotient(dv, a) - bq.derivative(v);
    MultiPoly removed(1);
    for (unsigned k = 1; !bq.is_constant(); ++k) {
      const MultiPoly f = polynomial_gcd(bq, d);
      if (!f.is_constant()) {
        out.push_back({with_positive_lead(f), k});
        removed = removed * f.pow(k);
      }
      bq = exact_quotient(bq, f);
      d = exact_quotient(d, f) - bq.derivative(v);
    }
    MultiPoly q;
    if (!polynomial_divides(rest, removed, &q)) throw std::logic_error("square_free: inconsistent factors");
    rest = q;
  }
  if (!rest.is_constant()) throw std::logic_error("square_free: leftover factor");
  *unit *= rest.constant_value();
  return out;
}

}  // namespace airycoef
