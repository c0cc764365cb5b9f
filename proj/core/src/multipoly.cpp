#include "airycoef/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace airycoef {

Monomial Monomial::of(Var v, unsigned power) {
  Monomial m;
  m.exp[v.index()] = static_cast<std::uint16_t>(power);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  // Lexicographic with Var(0) most significant.
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) { return grlex_less(b.mono, a.mono); }

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(1, Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

MultiPoly MultiPoly::from_sorted_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational MultiPoly::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

unsigned MultiPoly::variable_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i]) mask |= 1u << i;
    }
  }
  return mask;
}

std::vector<Var> MultiPoly::variables() const {
  const unsigned mask = variable_mask();
  std::vector<Var> out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (mask & (1u << i)) out.emplace_back(static_cast<std::uint8_t>(i));
  }
  return out;
}

bool MultiPoly::depends_on(Var v) const { return (variable_mask() >> v.index()) & 1u; }

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[v]);
  return d;
}

unsigned MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = 0xFFFFu;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.mono[v]);
  return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  }
  return m;
}

bool MultiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.get_den() == 1; });
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  return make_rational(g, l);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                   bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(b[j].mono, a[i].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(a[i].mono, b[j].mono)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].coef, a.terms_[0].mono);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].coef, b.terms_[0].mono);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto& slot = acc[x.mono * y.mono];
      slot += x.coef * y.coef;
    }
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  return MultiPoly::from_sorted_terms(std::move(terms));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

MultiPoly MultiPoly::mul_monomial(const Rational& c, const Monomial& m) const {
  if (c == 0) return {};
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  MultiPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw std::invalid_argument("div_monomial: monomial does not divide");
    r.terms_.push_back({t.mono / m, t.coef});
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exp[v.index()] = static_cast<std::uint16_t>(e - 1);
    out.push_back({m, t.coef * e});
  }
  // Lowering one exponent can reorder terms of equal total degree.
  return from_terms(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m.exp[v.index()];
    m.exp[v.index()] = 0;
    buckets[e].push_back({m, t.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(from_terms(std::move(bucket)));
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& g) const {
  if (!depends_on(v)) return *this;
  const auto coeffs = coefficients_in(v);
  // Horner in v.
  MultiPoly acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = acc * g;
    acc += coeffs[k];
  }
  return acc;
}

MultiPoly MultiPoly::reflect(unsigned var_mask) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    unsigned parity = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (var_mask & (1u << i)) parity += t.mono.exp[i];
    }
    if (parity & 1u) t.coef = -t.coef;
  }
  return r;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
  if (from == to) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[to] != 0) throw std::invalid_argument("rename: target symbol already occurs");
    Monomial m = t.mono;
    m.exp[to.index()] = m.exp[from.index()];
    m.exp[from.index()] = 0;
    out.push_back({m, t.coef});
  }
  return from_terms(std::move(out));
}

Rational MultiPoly::evaluate(const Assignment& at) const {
  // Cache powers per symbol; high-degree polynomials reuse them many times.
  std::array<std::vector<Rational>, kMaxVars> powers;
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational prod = t.coef;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = t.mono.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      const Rational& x = at.at(Var(static_cast<std::uint8_t>(i)));
      while (pw.size() <= e) pw.push_back(pw.back() * x);
      prod *= pw[e];
    }
    sum += prod;
  }
  return sum;
}

}  // namespace airycoef
