#include "airycoef/bleistein.hpp"

#include <algorithm>

#include "airycoef/errors.hpp"

namespace airycoef::bleistein {

ListProvider::ListProvider(std::vector<RatFunc> pw, std::vector<RatFunc> pm, std::string description)
    : pw_(std::move(pw)), pm_(std::move(pm)), description_(std::move(description)) {}

RatFunc ListProvider::pw(unsigned k) const { return k < pw_.size() ? pw_[k] : RatFunc(); }
RatFunc ListProvider::pm(unsigned k) const { return k < pm_.size() ? pm_[k] : RatFunc(); }

RationalTaylorProvider::RationalTaylorProvider(RatFunc f, Var t, Var b) : f_(std::move(f)), t_(t), b_(b) {
  if (f_.depends_on(b_)) throw MathError("f(t) must not depend on the expansion point symbol");
}

const RatFunc& RationalTaylorProvider::scaled_derivative(unsigned k) const {
  std::lock_guard lock(mutex_);
  if (derivs_.empty()) derivs_.push_back(std::make_unique<RatFunc>(f_));
  while (derivs_.size() <= k) {
    const auto j = static_cast<long>(derivs_.size());
    // d^j f / j! = (d/dt (d^{j-1} f / (j-1)!)) / j
    derivs_.push_back(std::make_unique<RatFunc>(derivs_.back()->derivative(t_) * RatFunc(make_rational(1, j))));
  }
  return *derivs_[k];
}

RatFunc RationalTaylorProvider::pw(unsigned k) const {
  return scaled_derivative(k).substitute(t_, RatFunc::variable(b_));
}

RatFunc RationalTaylorProvider::pm(unsigned k) const {
  // Taylor coefficient of f(-t) at b is (-1)^k f^{(k)}(-b)/k!.
  RatFunc v = scaled_derivative(k).substitute(t_, -RatFunc::variable(b_));
  return (k % 2) ? -v : v;
}

std::string RationalTaylorProvider::describe() const { return "rational f(t), Taylor coefficients at t = +-b"; }

EvenOddSplit split_even_odd(const CoeffProvider& provider, unsigned K) {
  EvenOddSplit out;
  out.even.reserve(K + 1);
  out.odd.reserve(K + 1);
  const RatFunc half(make_rational(1, 2));
  for (unsigned k = 0; k <= K; ++k) {
    const RatFunc p1 = provider.pw(k);
    const RatFunc p2 = provider.pm(k);
    out.even.push_back((p1 + p2) * half);
    out.odd.push_back((p1 - p2) * half);
  }
  return out;
}

std::vector<RatFunc> oe_transform(const std::vector<RatFunc>& odd, Var b) {
  std::vector<RatFunc> out;
  out.reserve(odd.size());
  const RatFunc inv_b = RatFunc::variable(b).inverse();
  RatFunc prev;
  for (const auto& fo : odd) {
    prev = (fo - prev) * inv_b;
    out.push_back(prev);
  }
  return out;
}

namespace {

// sum_{j=1}^{k} (-1)^{k-j} j (2k-j-1)! / ((2b)^{2k-j} k! (k-j)!) c_j, over the
// common denominator b^{2k-1}.
RatFunc weighted_sum(const std::vector<RatFunc>& c, unsigned k, const Integer& k_factorial, Var b) {
  const RatFunc bb = RatFunc::variable(b);
  RatFunc acc;
  // ratio = (2k-j-1)! / (k-j)!, updated incrementally from j = k downwards.
  Integer ratio = factorial(k - 1);
  for (unsigned j = k; j >= 1; --j) {
    if (j < k) {
      // (2k-j-1)!/(k-j)! = (2k-(j+1)-1)!/(k-(j+1))! * (2k-j-1)/(k-j)
      ratio *= 2 * k - j - 1;
      mpz_divexact_ui(ratio.get_mpz_t(), ratio.get_mpz_t(), k - j);
    }
    if (!c[j].is_zero()) {
      Integer num = ratio * j;
      if ((k - j) % 2) num = -num;
      Integer den = k_factorial;
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * k - j);
      // weight * b^{j-1}; the b^{-(2k-1)} is applied once at the end.
      acc += c[j] * RatFunc(MultiPoly::monomial(make_rational(num, den), Monomial::of(b, j - 1)));
    }
  }
  return acc * bb.pow(-static_cast<int>(2 * k - 1));
}

}  // namespace

GammaDeltaState init_gamma_delta(const std::vector<RatFunc>& even, const std::vector<RatFunc>& odd_over_t, Var b,
                                 unsigned K) {
  if (even.size() < K + 1 || odd_over_t.size() < K + 1) {
    throw TruncationError("init_gamma_delta: coefficient lists shorter than K + 1");
  }
  GammaDeltaState s;
  s.gamma.reserve(K + 1);
  s.delta.reserve(K + 1);
  s.gamma.push_back(even[0]);
  s.delta.push_back(odd_over_t[0]);
  Integer k_factorial = 1;
  for (unsigned k = 1; k <= K; ++k) {
    k_factorial *= k;
    s.gamma.push_back(weighted_sum(even, k, k_factorial, b));
    s.delta.push_back(weighted_sum(odd_over_t, k, k_factorial, b));
  }
  return s;
}

GammaDeltaState advance(const GammaDeltaState& state, Var b) {
  const unsigned K = state.depth();
  if (K < 2) throw TruncationError("advance: truncation depth " + std::to_string(K) + " < 2");
  const RatFunc two_b2(MultiPoly::monomial(2, Monomial::of(b, 2)));
  GammaDeltaState next;
  next.n = state.n + 1;
  next.gamma.reserve(K - 1);
  next.delta.reserve(K - 1);
  for (unsigned k = 0; k + 2 <= K; ++k) {
    next.gamma.push_back(state.delta[k + 1] * RatFunc(long(2 * k + 1)) +
                         two_b2 * RatFunc(long(k + 1)) * state.delta[k + 2]);
    next.delta.push_back(state.gamma[k + 2] * RatFunc(long(2 * (k + 1))));
  }
  return next;
}

CoeffTable alpha_beta(const CoeffProvider& provider, unsigned N) {
  const unsigned K = 2 * N;
  const Var b = provider.b_symbol();
  const EvenOddSplit split = split_even_odd(provider, K);
  const auto odd_over_t = oe_transform(split.odd, b);
  GammaDeltaState state = init_gamma_delta(split.even, odd_over_t, b, K);
  CoeffTable table;
  table.source = provider.describe();
  table.alphas.push_back(state.gamma[0]);
  table.betas.push_back(state.delta[0]);
  for (unsigned n = 1; n <= N; ++n) {
    state = advance(state, b);
    table.alphas.push_back(state.gamma[0]);
    table.betas.push_back(state.delta[0]);
  }
  unsigned mask = 0;
  for (const auto* list : {&table.alphas, &table.betas}) {
    for (const auto& f : *list) mask |= f.num().variable_mask() | f.den().variable_mask();
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (mask & (1u << i)) table.variables.emplace_back(static_cast<std::uint8_t>(i));
  }
  return table;
}

namespace {

MultiPoly halve_exponent(const MultiPoly& p, Var b, Var eta) {
  if (p.depends_on(eta)) throw MathError("even_in_b_to_eta: target symbol already occurs");
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[b];
    if (e % 2) throw MathError("function is not even in " + b.name());
    Monomial m = t.mono;
    m.exp[b.index()] = 0;
    m.exp[eta.index()] = static_cast<std::uint16_t>(e / 2);
    terms.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

RatFunc even_in_b_to_eta(const RatFunc& f, Var b, Var eta) {
  // A canonical even function has even numerator and denominator: otherwise
  // both would be odd and share the factor b.
  return RatFunc(halve_exponent(f.num(), b, eta), halve_exponent(f.den(), b, eta));
}

CoeffTable table_in_eta(const CoeffTable& table, Var b, Var eta) {
  CoeffTable out;
  out.source = table.source;
  for (const auto& a : table.alphas) out.alphas.push_back(even_in_b_to_eta(a, b, eta));
  for (const auto& c : table.betas) out.betas.push_back(even_in_b_to_eta(c, b, eta));
  for (Var v : table.variables) out.variables.push_back(v == b ? eta : v);
  std::sort(out.variables.begin(), out.variables.end());
  return out;
}

}  // namespace airycoef::bleistein
