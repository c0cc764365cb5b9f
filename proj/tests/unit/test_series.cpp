#include <doctest.h>

#include <vector>

#include "airycoef/series.hpp"
#include "random_ratfunc.hpp"
#include "test_util.hpp"

using namespace airycoef;
using testsupport::Q;
using testsupport::R;

namespace {

using S = TruncSeries<Rational>;

S ser(std::vector<Rational> c, const char* var = "x") { return S(std::move(c), var); }

std::vector<Rational> bernoulli(unsigned n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * B[k];
    B[m] = -acc / Rational(m + 1);
  }
  return B;
}

S random_unit_linear(testsupport::RandomRing& rng, unsigned order) {
  std::vector<Rational> c(order + 1, 0);
  c[1] = 1;
  for (unsigned k = 2; k <= order; ++k) c[k] = rng.rational(6);
  return ser(c);
}

S random_unit_constant(testsupport::RandomRing& rng, unsigned order) {
  std::vector<Rational> c(order + 1, 0);
  c[0] = 1;
  for (unsigned k = 1; k <= order; ++k) c[k] = rng.rational(6);
  return ser(c);
}

}  // namespace

TEST_CASE("series container") {
  const S a = ser({0, 0, 3, 4});
  CHECK(a.order() == 3);
  CHECK(a.valuation() == 2);
  CHECK(S::zero(4, "x").valuation() == 5);
  CHECK(a.shifted_down(2) == ser({3, 4}));
  CHECK(a.derivative() == ser({0, 6, 12}));
  CHECK_THROWS_AS(a.shifted_down(3), SeriesError);
  CHECK_THROWS_AS(a.truncated(4), SeriesError);
  CHECK_THROWS_AS(S({}, "x"), SeriesError);
}

TEST_CASE("series_mul examples") {
  CHECK(series_mul(ser({1, 1, 0}), ser({1, -1, 0})) == ser({1, 0, -1}));
  std::vector<Rational> e(5), em(5);
  for (unsigned k = 0; k <= 4; ++k) {
    e[k] = Rational(1) / Rational(factorial(k));
    em[k] = (k % 2 ? -1 : 1) * e[k];
  }
  CHECK(series_mul(ser(e), ser(em)) == ser({1, 0, 0, 0, 0}));
  CHECK(series_mul(ser({1, 2, 1}), ser({1, -1, 0})) == ser({1, 1, -1}));
  CHECK(series_mul(ser({1, 2, 1, 7}), ser({1, 1})).order() == 1);
  CHECK_THROWS_AS(series_mul(ser({1, 1}, "x"), ser({1, 1}, "y")), SeriesError);
}

TEST_CASE("series_div examples") {
  CHECK(series_div(ser({0, 0, 1}), ser({0, 1, 0})) == ser({0, 1}));
  std::vector<Rational> ch(3), sh(3);
  for (unsigned m = 0; m <= 2; ++m) {
    ch[m] = Rational(1) / Rational(factorial(2 * m));
    sh[m] = Rational(1) / Rational(factorial(2 * m + 1));
  }
  CHECK(series_div(ser(ch, "w"), ser(sh, "w")) == ser({1, Q(1, 3), Q(-1, 45)}, "w"));
  CHECK(series_div(ser({0, 1, -1}), ser({1, -1, 0})) == ser({0, 1, 0}));
  CHECK_THROWS_AS(series_div(ser({1, 0}), ser({0, 1})), SeriesError);
  CHECK_THROWS_AS(series_div(ser({1, 0}), ser({0, 0})), SeriesError);
}

TEST_CASE("theta coth theta against Bernoulli numbers") {
  const unsigned M = 10;
  std::vector<Rational> ch(M + 1), sh(M + 1);
  for (unsigned m = 0; m <= M; ++m) {
    ch[m] = Rational(1) / Rational(factorial(2 * m));
    sh[m] = Rational(1) / Rational(factorial(2 * m + 1));
  }
  const S h = series_div(ser(ch, "w"), ser(sh, "w"));
  const auto B = bernoulli(2 * M);
  for (unsigned m = 0; m <= M; ++m) {
    const Rational expected = Rational(Integer(1) << (2 * m)) * B[2 * m] / Rational(factorial(2 * m));
    CHECK(h[m] == expected);
  }
}

TEST_CASE("series_compose examples") {
  CHECK(series_compose(ser({1, 1, 0}, "y"), ser({0, 1, 1})) == ser({1, 1, 1}));
  CHECK(series_compose(ser({1, 1, 1, 1}, "y"), ser({0, 1, 0, 0})) == ser({1, 1, 1, 1}));
  CHECK(series_compose(ser({0, 1, 1, 0}, "y"), ser({0, 1, -1, 0})) == ser({0, 1, 0, -2}));
  CHECK_THROWS_AS(series_compose(ser({1, 1}), ser({1, 1})), SeriesError);
}

TEST_CASE("series_revert examples") {
  CHECK(series_revert(ser({0, 1}), "eta") == ser({0, 1}, "eta"));
  CHECK(series_revert(ser({0, 1, 1, 0, 0}), "eta") == ser({0, 1, -1, 2, -5}, "eta"));
  CHECK_THROWS_AS(series_revert(ser({0, 0, 1})), SeriesError);
  CHECK_THROWS_AS(series_revert(ser({1, 1})), SeriesError);
}

TEST_CASE("reversion of x + x^2 gives signed Catalan numbers") {
  const unsigned K = 14;
  std::vector<Rational> c(K + 1, 0);
  c[1] = 1;
  c[2] = 1;
  const S g = series_revert(ser(c));
  for (unsigned k = 1; k <= K; ++k) {
    const Integer catalan = binomial(2 * (k - 1), k - 1) / Integer(k);
    CHECK(g[k] == Rational((k % 2 ? 1 : -1) * catalan));
  }
}

TEST_CASE("series_pow_rational examples") {
  CHECK(series_pow_rational(ser({1, 1, 0}), 1, 2) == ser({1, Q(1, 2), Q(-1, 8)}));
  const S f = ser({1, 1, 0, 0, 0, 0});
  const S g = series_pow_rational(f, 2, 3);
  CHECK(series_mul(series_mul(g, g), g) == ser({1, 2, 1, 0, 0, 0}));
  CHECK(series_pow_rational(ser({1, Q(1, 5)}, "w"), 2, 3) == ser({1, Q(2, 15)}, "w"));
  CHECK(series_pow_rational(f, -1, 1) == ser({1, -1, 1, -1, 1, -1}));
  CHECK_THROWS_AS(series_pow_rational(ser({2, 1}), 1, 2), SeriesError);
  CHECK_THROWS_AS(series_pow_rational(f, 1, 0), SeriesError);
}

TEST_CASE("series over rational functions") {
  using SR = TruncSeries<RatFunc>;
  const SR a(std::vector<RatFunc>{RatFunc(1), R("eta"), R("1/(eta-1)")}, "x");
  const SR b(std::vector<RatFunc>{RatFunc(1), R("-eta"), RatFunc(0)}, "x");
  const SR q = series_div(series_mul(a, b), b);
  CHECK(q == a);
  const SR r = series_pow_rational(series_pow_rational(a, 1, 3), 3, 1);
  CHECK(r == a);
}

TEST_CASE("property: pow inverse round trip") {
  testsupport::RandomRing rng(8);
  for (int i = 0; i < 20; ++i) {
    const long p = rng.small(1, 4);
    const long q = rng.small(1, 4);
    const S f = random_unit_constant(rng, 8);
    CHECK(series_pow_rational(series_pow_rational(f, p, q), q, p) == f);
  }
}

TEST_CASE("property: division undoes multiplication") {
  testsupport::RandomRing rng(9);
  for (int i = 0; i < 20; ++i) {
    S a = random_unit_constant(rng, 8);
    S b = random_unit_linear(rng, 8);  // valuation 1
    a = a.shifted_up(1).truncated(8);
    const S q = series_div(series_mul(a, b), b);
    CHECK(q == a.truncated(q.order()));
  }
}

TEST_CASE("property: reversion round trip") {
  testsupport::RandomRing rng(10);
  for (int i = 0; i < 20; ++i) {
    const S f = random_unit_linear(rng, 10);
    const S g = series_revert(f);
    CHECK(series_compose(f, g) == S::identity(10, "x"));
    CHECK(series_compose(g, f) == S::identity(10, "x"));
  }
}
