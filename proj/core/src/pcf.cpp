#include "airycoef/pcf.hpp"

#include <cmath>

#include "airycoef/errors.hpp"

namespace airycoef::pcf {

namespace {

const unsigned kFlipBU = var_mask({vars::b, vars::u});

RatFunc b_() { return RatFunc::variable(vars::b); }
RatFunc u_() { return RatFunc::variable(vars::u); }

RatFunc flip(const RatFunc& f) { return f.reflect(kFlipBU); }

}  // namespace

RatFunc t_of_bu() {
  const RatFunc b2 = b_().pow(2) * RatFunc(4);
  const RatFunc u4 = u_().pow(4);
  return (b2 + u4) / (b2 - u4);
}

RatFunc xi_of_bu() {
  const RatFunc u2 = u_().pow(2);
  return (u2 * u2 + b_().pow(2) * RatFunc(4)) / (u2 * RatFunc(4));
}

unsigned SeriesCache::depth() const {
  std::lock_guard lock(mutex_);
  return static_cast<unsigned>(s_.size());
}

void SeriesCache::extend_s(unsigned k) {
  // s(x) = sum a_i x^i solves (s^2 - 2ts + 1) s' = x (x + 2b) s, x = w - b.
  if (s_.empty()) {
    const RatFunc b = b_();
    const RatFunc u2 = u_().pow(2);
    const RatFunc t = t_of_bu();
    const RatFunc a0 = (b * RatFunc(2) + u2) / (b * RatFunc(2) - u2);
    const RatFunc a1 = (b * RatFunc(2) + u2) / (u_() * RatFunc(2));
    s_ = {a0, a1};
    const RatFunc c0 = a0 * a0 - t * a0 * RatFunc(2) + RatFunc(1);
    if (!c0.is_zero()) throw std::logic_error("saddle point does not solve s^2 - 2ts + 1 = 0");
    poly_ = {c0, (a0 - t) * a1 * RatFunc(2)};
  }
  const RatFunc t = t_of_bu();
  const RatFunc b = b_();
  while (s_.size() <= k) {
    const unsigned n = static_cast<unsigned>(s_.size());
    // x^n coefficient with a_n = 0; P_0 = 0 removes every other a_n term.
    RatFunc pn;
    for (unsigned j = 1; j < n; ++j) pn += s_[j] * s_[n - j];
    RatFunc rest;
    for (unsigned i = 2; i < n; ++i) rest += poly_[i] * s_[n - i + 1] * RatFunc(long(n - i + 1));
    rest += pn * s_[1];
    rest -= s_[n - 2] + b * s_[n - 1] * RatFunc(2);
    const RatFunc slope = (s_[0] - t) * s_[1] * RatFunc(long(2 * (n + 1)));
    if (slope.is_zero()) throw std::logic_error("degenerate linear solve for s_k");
    const RatFunc an = -rest / slope;
    s_.push_back(an);
    poly_.push_back(pn + (s_[0] - t) * an * RatFunc(2));
  }
}

void SeriesCache::extend_sqrt(unsigned k) {
  extend_s(k);
  if (sq_.empty()) sq_.push_back(RatFunc(u_() * RatFunc(4)) / (b_() * RatFunc(2) - u_().pow(2)));
  const RatFunc inv_s0 = s_[0].inverse();
  while (sq_.size() <= k) {
    const unsigned n = static_cast<unsigned>(sq_.size());
    // 2 s S' = S s' at order n-1.
    RatFunc acc;
    for (unsigned j = 1; j <= n; ++j) {
      acc += s_[j] * sq_[n - j] * RatFunc(make_rational(3 * long(j) - 2 * long(n), 2));
    }
    sq_.push_back(acc * inv_s0 * RatFunc(make_rational(1, n)));
  }
}

RatFunc SeriesCache::s_plus(unsigned k) {
  std::lock_guard lock(mutex_);
  extend_s(k);
  return s_[k];
}

RatFunc SeriesCache::s_minus(unsigned k) { return flip(s_plus(k)); }

RatFunc SeriesCache::sqrt_s(unsigned k) {
  std::lock_guard lock(mutex_);
  extend_sqrt(k);
  return sq_[k];
}

std::vector<RatFunc> s_plus_series(unsigned K) {
  SeriesCache cache;
  std::vector<RatFunc> out;
  for (unsigned k = 0; k <= K; ++k) out.push_back(cache.s_plus(k));
  return out;
}

std::vector<RatFunc> s_minus_series(unsigned K) {
  auto out = s_plus_series(K);
  for (auto& f : out) f = flip(f);
  return out;
}

std::vector<RatFunc> sqrt_s_series(unsigned K) {
  SeriesCache cache;
  std::vector<RatFunc> out;
  for (unsigned k = 0; k <= K; ++k) out.push_back(cache.sqrt_s(k));
  return out;
}

PTildeProvider::PTildeProvider(std::shared_ptr<SeriesCache> cache) : cache_(std::move(cache)) {}

RatFunc PTildeProvider::pw(unsigned k) const { return cache_->sqrt_s(k + 1) * RatFunc(long(k + 1)); }

RatFunc PTildeProvider::pm(unsigned k) const {
  const RatFunc v = flip(pw(k));
  return (k % 2) ? -v : v;
}

std::string PTildeProvider::describe() const { return "parabolic cylinder U(a,x): derivative of sqrt(s_+(w))"; }

RatFunc pullback(const RatFunc& f) {
  return f.substitute(vars::eta, b_().pow(2)).substitute(vars::xi, xi_of_bu());
}

namespace {

Integer pow4(unsigned j) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 4, j);
  return r;
}

MultiPoly eta_from_even_b(const MultiPoly& p) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[vars::b];
    if (e % 2 || t.mono.degree() != e) throw MathError("to_xi_eta: coefficient is not a polynomial in b^2");
    terms.push_back({Monomial::of(vars::eta, e / 2), t.coef});
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

RatFunc to_xi_eta(const RatFunc& v) {
  if (v.depends_on(vars::eta) || v.depends_on(vars::xi)) throw MathError("to_xi_eta: input must be in (b, u)");
  for (Var x : v.variables()) {
    if (x != vars::b && x != vars::u) throw MathError("to_xi_eta: unexpected symbol " + x.name());
  }
  if (flip(v) != v) throw MathError("to_xi_eta: value is not invariant under (b, u) -> (-b, -u)");
  // Denominator seeded with eta^k; the remaining denominator must be a
  // constant times a power of u so that w = v b^{2k} is a Laurent polynomial
  // in u with polynomial coefficients in b.
  const MultiPoly& den = v.den();
  const Monomial content = den.monomial_content();
  const MultiPoly rest = den.div_monomial(content);
  if (!rest.is_constant()) throw MathError("to_xi_eta: denominator is not of the form eta^k u^m");
  const unsigned k = (content[vars::b] + 1) / 2;
  const unsigned m = content[vars::u];

  // Numerator of w over u^m, as polynomials in b indexed by u-degree.
  MultiPoly top = v.num() * Rational(1 / rest.constant_value());
  top = top.mul_monomial(1, Monomial::of(vars::b, 2 * k - content[vars::b]));
  // w = top / u^m. Peel off the highest u-power with c(b) 4^J xi^J.
  MultiPoly result;
  const MultiPoly xi_num = MultiPoly::variable(vars::u).pow(4) + MultiPoly::monomial(4, Monomial::of(vars::b, 2));
  while (!top.is_zero()) {
    const unsigned du = top.degree(vars::u);
    if (du < m || (du - m) % 2) throw MathError("to_xi_eta: no polynomial form in xi");
    const unsigned J = (du - m) / 2;
    const MultiPoly c = top.coefficients_in(vars::u)[du];
    const MultiPoly c_eta = eta_from_even_b(c);
    result += c_eta * MultiPoly::monomial(pow4(J), Monomial::of(vars::xi, J));
    // 4^J c xi^J = c (u^4 + 4b^2)^J / u^{2J}, i.e. c (u^4 + 4b^2)^J u^{m-2J} over u^m.
    if (du < 4 * J) throw MathError("to_xi_eta: no polynomial form in xi");
    top -= (c * xi_num.pow(J)).mul_monomial(1, Monomial::of(vars::u, du - 4 * J));
  }
  RatFunc candidate(result, MultiPoly::monomial(1, Monomial::of(vars::eta, k)));
  if (pullback(candidate) != v) throw MathError("to_xi_eta: pullback verification failed");
  return candidate;
}

bleistein::CoeffTable pcf_coeff_table(unsigned N) { return pcf_coeff_table(N, std::make_shared<SeriesCache>()); }

bleistein::CoeffTable pcf_coeff_table(unsigned N, const std::shared_ptr<SeriesCache>& cache) {
  PTildeProvider provider(cache);
  const bleistein::CoeffTable raw = bleistein::alpha_beta(provider, N);
  bleistein::CoeffTable out;
  out.source = raw.source;
  for (const auto& a : raw.alphas) out.alphas.push_back(to_xi_eta(a));
  for (const auto& c : raw.betas) out.betas.push_back(to_xi_eta(c));
  unsigned mask = 0;
  for (const auto* list : {&out.alphas, &out.betas}) {
    for (const auto& f : *list) mask |= f.num().variable_mask() | f.den().variable_mask();
  }
  for (Var x : {vars::eta, vars::xi}) {
    if (mask & (1u << x.index())) out.variables.push_back(x);
  }
  return out;
}

TruncSeries<Rational> e_series(unsigned M) {
  std::vector<Rational> c;
  c.reserve(M + 1);
  for (unsigned m = 1; m <= M + 1; ++m) {
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * m - 1);
    c.push_back(make_rational(3 * num, factorial(2 * m + 1)));
  }
  return TruncSeries<Rational>(std::move(c), "w");
}

TruncSeries<Rational> eta_w_series(unsigned M) {
  const auto e23 = series_pow_rational(e_series(M), 2, 3);
  return e23.truncated(M - 1).shifted_up(1);
}

TruncSeries<Rational> w_eta_series(unsigned M) { return series_revert(eta_w_series(M), "eta"); }

TruncSeries<Rational> xi_eta_series(unsigned M) {
  // theta coth theta = cosh theta / (sinh theta / theta), in w = theta^2.
  std::vector<Rational> ch, sh;
  for (unsigned m = 0; m <= M; ++m) {
    ch.push_back(make_rational(1, factorial(2 * m)));
    sh.push_back(make_rational(1, factorial(2 * m + 1)));
  }
  const auto h = series_div(TruncSeries<Rational>(ch, "w"), TruncSeries<Rational>(sh, "w"));
  const auto g = series_mul(series_pow_rational(e_series(M), 1, 3), h);
  return series_compose(g, w_eta_series(M));
}

namespace {

// Polynomial in eta as a series of the given order.
TruncSeries<Rational> eta_poly_series(const MultiPoly& p, unsigned order) {
  auto s = TruncSeries<Rational>::zero(order, "eta");
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[vars::eta];
    if (t.mono.degree() != e) throw MathError("maclaurin_of_coeff: expected a function of eta and xi");
    if (e <= order) s[e] += t.coef;
  }
  return s;
}

TruncSeries<Rational> substitute_xi(const MultiPoly& p, const TruncSeries<Rational>& xi) {
  const unsigned order = xi.order();
  const auto by_xi = p.coefficients_in(vars::xi);
  auto acc = TruncSeries<Rational>::zero(order, "eta");
  for (std::size_t j = by_xi.size(); j-- > 0;) {
    acc = series_mul(acc, xi) + eta_poly_series(by_xi[j], order);
  }
  return acc;
}

}  // namespace

TruncSeries<Rational> maclaurin_of_coeff(const RatFunc& c, unsigned M) {
  unsigned extra = c.den().total_degree();
  for (;;) {
    const auto xi = xi_eta_series(M + extra);
    const auto den = substitute_xi(c.den(), xi);
    const unsigned v = den.valuation();
    if (v > den.order()) {
      extra *= 2;
      continue;
    }
    if (v > extra) {
      extra = v;
      continue;
    }
    const auto num = substitute_xi(c.num(), xi);
    if (num.valuation() < v) throw SeriesError("maclaurin_of_coeff: coefficient is singular at eta = 0");
    return series_div(num, den).truncated(M);
  }
}

RadiusEstimate radius_estimate(const TruncSeries<Rational>& series, unsigned tail) {
  const unsigned M = series.order();
  if (M + 1 < 12) throw SeriesError("radius_estimate needs at least 12 terms");
  if (series[M] == 0 || series[M - 1] == 0 || series[M - 2] == 0) {
    throw SeriesError("radius_estimate: vanishing trailing coefficient");
  }
  RadiusEstimate r;
  r.ratio = std::fabs(Rational(series[M - 1] / series[M]).get_d());
  const double previous = std::fabs(Rational(series[M - 2] / series[M - 1]).get_d());
  r.extrapolated = M * r.ratio - (M - 1) * previous;
  tail = std::min(tail, M);
  r.tail_start = M - tail + 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<double, double>> pts;
  for (unsigned k = r.tail_start; k <= M; ++k) {
    if (series[k] == 0) continue;
    // log|c_k| from the mantissa/exponent pair to stay finite for tiny values.
    const Rational a = abs(series[k]);
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, a.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, a.get_den_mpz_t());
    const double y = std::log(mn / md) + double(en - ed) * std::log(2.0);
    pts.emplace_back(double(k), y);
  }
  if (pts.size() < 2) throw SeriesError("radius_estimate: not enough nonzero tail coefficients");
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = double(pts.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icept = (sy - slope * sx) / n;
  double ss = 0;
  for (auto [x, y] : pts) ss += (y - icept - slope * x) * (y - icept - slope * x);
  r.fit = std::exp(-slope);
  r.fit_rms = std::sqrt(ss / n);
  return r;
}

}  // namespace airycoef::pcf
