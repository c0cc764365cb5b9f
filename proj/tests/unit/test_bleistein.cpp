#include <doctest.h>

#include <atomic>

#include "airycoef/bleistein.hpp"
#include "airycoef/errors.hpp"
#include "airycoef/series.hpp"
#include "random_ratfunc.hpp"
#include "reference_scheme.hpp"
#include "test_util.hpp"

using namespace airycoef;
using namespace airycoef::bleistein;
using testsupport::R;

namespace {

const RatFunc b = RatFunc::variable(vars::b);

std::vector<RatFunc> list(std::initializer_list<const char*> items) {
  std::vector<RatFunc> out;
  for (const char* s : items) out.push_back(R(s));
  return out;
}

std::vector<RatFunc> zeros(std::size_t n) { return std::vector<RatFunc>(n, RatFunc(0)); }

class CountingProvider final : public CoeffProvider {
 public:
  explicit CountingProvider(RatFunc f) : inner_(std::move(f)) {}
  RatFunc pw(unsigned k) const override {
    max_seen_ = std::max(max_seen_.load(), static_cast<int>(k));
    return inner_.pw(k);
  }
  RatFunc pm(unsigned k) const override {
    max_seen_ = std::max(max_seen_.load(), static_cast<int>(k));
    return inner_.pm(k);
  }
  std::string describe() const override { return inner_.describe(); }
  int max_seen() const { return max_seen_; }

 private:
  RationalTaylorProvider inner_;
  mutable std::atomic<int> max_seen_{-1};
};

/// Taylor coefficients about t = b of sum gamma_k (t^2-b^2)^k + sign * t sum delta_k (t^2-b^2)^k.
std::vector<RatFunc> reconstruct(const GammaDeltaState& st, int sign) {
  using SR = TruncSeries<RatFunc>;
  const unsigned K = st.depth();
  const SR x = SR::identity(K, "x");
  const SR tt = SR::constant(b, K, "x") + x;
  const SR q = series_mul(tt, tt) - SR::constant(b * b, K, "x");  // 2bx + x^2
  SR even = SR::zero(K, "x");
  SR odd = SR::zero(K, "x");
  SR power = SR::constant(RatFunc(1), K, "x");
  for (unsigned k = 0; k <= K; ++k) {
    even = even + power * st.gamma[k];
    odd = odd + power * st.delta[k];
    power = series_mul(power, q);
  }
  const SR total = even + series_mul(tt, odd) * RatFunc(sign);
  return total.coeffs();
}

}  // namespace

TEST_CASE("split_even_odd examples") {
  const auto t4 = list({"b^4", "4*b^3", "6*b^2", "4*b", "1"});
  const auto even4 = split_even_odd(ListProvider(t4, t4), 4);
  CHECK(even4.even == t4);
  CHECK(even4.odd == zeros(5));

  const auto t3 = list({"b^3", "3*b^2", "3*b", "1"});
  std::vector<RatFunc> m3;
  for (const auto& c : t3) m3.push_back(-c);
  const auto odd3 = split_even_odd(ListProvider(t3, m3), 3);
  CHECK(odd3.odd == t3);
  CHECK(odd3.even == zeros(4));

  const auto inv = split_even_odd(RationalTaylorProvider(R("1/(t+1)")), 2);
  CHECK(inv.even[0] == R("1/(1-b^2)"));
  CHECK(inv.odd[0] == R("-b/(1-b^2)"));
}

TEST_CASE("oe_transform examples") {
  CHECK(oe_transform(list({"b^3", "3*b^2", "3*b", "1"}), vars::b) == list({"b^2", "2*b", "1", "0"}));
  CHECK(oe_transform(list({"b", "1"}), vars::b) == list({"1", "0"}));
  const auto odd = split_even_odd(RationalTaylorProvider(R("1/(t+1)")), 5).odd;
  const auto foe = oe_transform(odd, vars::b);
  const RationalTaylorProvider ratio(R("-1/(1-t^2)"));
  CHECK(foe[0] == R("-1/(1-b^2)"));
  for (unsigned k = 0; k <= 5; ++k) CHECK(foe[k] == ratio.pw(k));
}

TEST_CASE("init_gamma_delta examples") {
  const auto generic = list({"s", "t", "w"});
  const auto st1 = init_gamma_delta(generic, zeros(3), vars::b, 1);
  CHECK(st1.gamma[1] == R("t/(2*b)"));

  const auto t4 = list({"b^4", "4*b^3", "6*b^2", "4*b", "1", "0", "0"});
  const auto st = init_gamma_delta(t4, zeros(7), vars::b, 6);
  CHECK(st.gamma == list({"b^4", "2*b^2", "1", "0", "0", "0", "0"}));
  CHECK(st.delta == zeros(7));

  const RationalTaylorProvider inv(R("1/(t+1)"));
  const auto split = split_even_odd(inv, 6);
  const auto st2 = init_gamma_delta(split.even, oe_transform(split.odd, vars::b), vars::b, 6);
  for (unsigned k = 0; k <= 6; ++k) {
    CHECK(st2.gamma[k] == R("1/(1-b^2)").pow(static_cast<int>(k) + 1));
    CHECK(st2.delta[k] == -R("1/(1-b^2)").pow(static_cast<int>(k) + 1));
  }
}

TEST_CASE("gamma_2 uses the 8 b^3 denominator") {
  const auto st = init_gamma_delta(list({"s", "t", "w"}), zeros(3), vars::b, 2);
  CHECK(st.gamma[2] == R("(2*b*w-t)/(8*b^3)"));
  const auto t4 = init_gamma_delta(list({"b^4", "4*b^3", "6*b^2"}), zeros(3), vars::b, 2);
  CHECK(t4.gamma[2] == RatFunc(1));
}

TEST_CASE("advance examples") {
  const auto t4 = list({"b^4", "4*b^3", "6*b^2", "4*b", "1"});
  const auto st0 = init_gamma_delta(t4, zeros(5), vars::b, 4);
  const auto st1 = advance(st0, vars::b);
  CHECK(st1.n == 1);
  CHECK(st1.depth() == 2);
  CHECK(st1.gamma[0].is_zero());
  CHECK(st1.delta[0] == RatFunc(2));

  GammaDeltaState zero{0, zeros(5), zeros(5)};
  const auto z1 = advance(zero, vars::b);
  CHECK(z1.gamma == zeros(3));
  CHECK(z1.delta == zeros(3));

  const RationalTaylorProvider inv(R("1/(t+1)"));
  const auto split = split_even_odd(inv, 4);
  auto st = init_gamma_delta(split.even, oe_transform(split.odd, vars::b), vars::b, 4);
  st = advance(advance(st, vars::b), vars::b);
  CHECK(st.depth() == 0);
  CHECK(st.gamma[0] == R("-4*(2*b^2+1)/(b^2-1)^5"));
  CHECK_THROWS_AS(advance(st, vars::b), TruncationError);
}

TEST_CASE("alpha_beta examples") {
  const auto t1 = table_in_eta(alpha_beta(RationalTaylorProvider(R("1/(t+1)")), 1));
  CHECK(t1.alphas[1] == R("(eta+1)/(eta-1)^3"));
  CHECK(t1.betas[1] == R("-2/(eta-1)^3"));

  const auto one = table_in_eta(alpha_beta(RationalTaylorProvider(RatFunc(1)), 4));
  CHECK(one.alphas[0] == RatFunc(1));
  for (unsigned n = 0; n <= 4; ++n) {
    if (n > 0) CHECK(one.alphas[n].is_zero());
    CHECK(one.betas[n].is_zero());
  }

  const auto t5 = table_in_eta(alpha_beta(RationalTaylorProvider(R("1/(t+1)")), 5));
  CHECK(t5.order() == 5);
  CHECK(t5.betas[5] == R("-1120*(2*eta^2+14*eta+11)/(eta-1)^11"));
}

TEST_CASE("driver requests exactly 2N+1 provider entries") {
  for (unsigned N : {0u, 1u, 3u}) {
    const CountingProvider p(R("1/(t+3)"));
    alpha_beta(p, N);
    CHECK(p.max_seen() == static_cast<int>(2 * N));
  }
}

TEST_CASE("even_in_b_to_eta") {
  CHECK(even_in_b_to_eta(R("(b^4+1)/(b^2-3)")) == R("(eta^2+1)/(eta-3)"));
  CHECK_THROWS_AS(even_in_b_to_eta(R("b/(b^2+1)")), MathError);
}

TEST_CASE("property: stage-0 reconstruction identity") {
  for (const char* f : {"1/(t+1)", "1/(t+2)", "t/(t^2+t+1)", "(3*t-1)/(t^3-2)", "t^5-2*t^2+7", "1/(2*t^2+5)"}) {
    const RationalTaylorProvider p(R(f));
    const unsigned K = 6;
    const auto split = split_even_odd(p, K);
    const auto st = init_gamma_delta(split.even, oe_transform(split.odd, vars::b), vars::b, K);
    const auto plus = reconstruct(st, 1);
    const auto minus = reconstruct(st, -1);
    for (unsigned k = 0; k <= K; ++k) {
      CHECK(plus[k] == p.pw(k));
      CHECK(minus[k] == p.pm(k));
    }
  }
}

TEST_CASE("property: polynomial inputs agree with the slow scheme") {
  testsupport::RandomRing rng(6);
  for (int i = 0; i < 25; ++i) {
    const MultiPoly f = rng.poly({vars::t}, 6, 5);
    const unsigned N = 4;
    const auto fast = table_in_eta(alpha_beta(RationalTaylorProvider(RatFunc(f)), N));
    const auto slow = testsupport::reference_scheme(f, N);
    for (unsigned n = 0; n <= N; ++n) {
      CHECK(fast.alphas[n] == slow.alphas[n]);
      CHECK(fast.betas[n] == slow.betas[n]);
    }
  }
}

TEST_CASE("property: coefficients analytic at b = 0") {
  testsupport::RandomRing rng(12);
  std::vector<RatFunc> inputs;
  for (int i = 0; i < 5; ++i) inputs.emplace_back(rng.poly({vars::t}, 6, 5));
  for (const char* c : {"1", "2", "-3", "1/2", "-5/7"}) inputs.push_back(R(std::string("1/(t+") + c + ")"));
  for (const auto& f : inputs) {
    const auto raw = alpha_beta(RationalTaylorProvider(f), 4);
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK_NOTHROW(raw.alphas[n].substitute(vars::b, RatFunc(0)));
      CHECK_NOTHROW(raw.betas[n].substitute(vars::b, RatFunc(0)));
    }
  }
}
