#include <doctest.h>

#include <random>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "airy_quadrature.hpp"
#include "airycoef/errors.hpp"
#include "airycoef/format.hpp"
#include "airycoef/numeric.hpp"
#include "airycoef/pcf.hpp"

using namespace airycoef;
using namespace airycoef::numeric;

namespace {

const bleistein::CoeffTable& table4() {
  static const bleistein::CoeffTable t = pcf::pcf_coeff_table(4);
  return t;
}

const CoefficientEvaluator& evaluator() {
  static const CoefficientEvaluator e(table4());
  return e;
}

BigFloat rel(const BigFloat& a, const BigFloat& b) { return abs(a - b) / abs(b); }

bool close(const BigFloat& a, const BigFloat& b, const char* tol) { return rel(a, b) < BigFloat(tol); }

/// U(-n-1/2, x) = e^{-x^2/4} He_n(x).
BigFloat hermite_U(unsigned n, const BigFloat& x) {
  BigFloat h0 = 1;
  BigFloat h1 = x;
  if (n == 0) return exp(-x * x / 4);
  for (unsigned k = 1; k < n; ++k) {
    BigFloat h2 = x * h1 - k * h0;
    h0 = h1;
    h1 = h2;
  }
  return exp(-x * x / 4) * h1;
}

}  // namespace

TEST_CASE("precision helpers") {
  CHECK(bits_to_digits(200) >= 60);
  {
    PrecisionScope scope(300);
    const BigFloat x = 1;
    CHECK(x.precision() >= bits_to_digits(300));
    PrecisionScope inner(64);
    CHECK(at_current_precision(x).precision() < x.precision());
  }
  PrecisionScope scope(200);
  CHECK(from_rational(make_rational(1, 3)) * 3 == 1);
  CHECK(close(from_string("1.25"), BigFloat(5) / 4, "1e-55"));
  CHECK_THROWS_AS(evaluate(parse_ratfunc("1/(eta-1)"), {{vars::eta, BigFloat(1)}}), PoleError);
}

TEST_CASE("map_point examples") {
  PrecisionScope scope(200);
  const auto p1 = map_point(BigFloat(1));
  CHECK(p1.theta == 0);
  CHECK(p1.eta == 0);
  CHECK(p1.A == BigFloat(-3) / 2);
  const auto pc = map_point(cosh(BigFloat(1)));
  const BigFloat expected = pow(BigFloat(3) / 4 * (sinh(BigFloat(2)) - 2), BigFloat(2) / 3);
  CHECK(close(pc.eta, expected, "1e-50"));
  const auto p15 = map_point(BigFloat("1.5"));
  CHECK(abs(p15.eta - BigFloat("1.048")) < BigFloat("0.001"));
  CHECK(close(eta_series(p15.theta), eta_direct(p15.theta), "1e-12"));
  CHECK_THROWS_AS(map_point(BigFloat("0.99")), MathError);
}

TEST_CASE("property: mapping invariants on a grid") {
  PrecisionScope scope(200);
  for (const char* ts : {"1", "1.01", "1.1", "1.5", "2", "3"}) {
    CAPTURE(ts);
    const BigFloat t = from_string(ts);
    const auto p = map_point(t);
    CHECK(abs(cosh(p.theta) - t) < BigFloat("1e-55"));
    const BigFloat lhs = BigFloat(4) / 3 * pow(p.eta, BigFloat(3) / 2);
    const BigFloat rhs = sinh(2 * p.theta) - 2 * p.theta;
    CHECK(abs(lhs - rhs) <= BigFloat("1e-50") * (abs(rhs) + BigFloat("1e-10")));
    CHECK(p.A == -BigFloat(1) / 2 - t * t);
    CHECK(abs(p.s_plus - exp(p.theta)) < BigFloat("1e-55"));
  }
}

TEST_CASE("airy at the origin") {
  PrecisionScope scope(200);
  const auto ai = airy_pair(BigFloat(0));
  const BigFloat three = 3;
  const BigFloat a0 = pow(three, BigFloat(-2) / 3) / boost::math::tgamma(BigFloat(2) / 3);
  const BigFloat d0 = -pow(three, BigFloat(-1) / 3) / boost::math::tgamma(BigFloat(1) / 3);
  CHECK(close(ai.value, a0, "1e-50"));
  CHECK(close(ai.derivative, d0, "1e-50"));
}

TEST_CASE("airy wronskian") {
  PrecisionScope scope(200);
  const BigFloat inv_pi = 1 / boost::math::constants::pi<BigFloat>();
  for (const char* ys : {"-100", "-7.5", "-1", "0", "0.5", "3", "12", "30", "100"}) {
    CAPTURE(ys);
    const BigFloat y = from_string(ys);
    const auto a = airy_pair(y);
    const auto b = bi_pair(y);
    CHECK(close(a.value * b.derivative - a.derivative * b.value, inv_pi, "1e-40"));
  }
}

TEST_CASE("airy against contour quadrature") {
  PrecisionScope scope(160);
  for (const auto& [ys, c] : {std::pair{"1", 1.0}, std::pair{"-3", 1.0}, std::pair{"6", 2.5}, std::pair{"0.25", 1.0}}) {
    CAPTURE(ys);
    const BigFloat y = from_string(ys);
    CHECK(close(airy_pair(y, 160).value, testsupport::airy_by_quadrature(y, c), "1e-10"));
  }
  CHECK_THROWS_AS(airy_pair(BigFloat(129)), MathError);
  CHECK_THROWS_AS(airy_pair(BigFloat(-129)), MathError);
}

TEST_CASE("airy derivative satisfies Ai'' = y Ai") {
  PrecisionScope scope(200);
  const BigFloat h("1e-20");
  for (const char* ys : {"-4", "2", "9"}) {
    const BigFloat y = from_string(ys);
    const BigFloat second = (airy_pair(y + h).derivative - airy_pair(y - h).derivative) / (2 * h);
    CHECK(close(second, y * airy_pair(y).value, "1e-30"));
  }
}

TEST_CASE("coefficient branches agree at the crossover") {
  PrecisionScope scope(200);
  const auto p = map_point(BigFloat("1.05"));
  const BigFloat xi = sqrt(p.eta) * cosh(p.theta) / sinh(p.theta);
  CHECK(abs(p.eta - BigFloat("0.1")) < BigFloat("0.01"));
  const auto& ev = evaluator();
  for (unsigned n = 0; n <= 4; ++n) {
    for (bool alpha : {true, false}) {
      CAPTURE(n);
      CAPTURE(alpha);
      const BigFloat r = ev.rational_branch(alpha, n, p.eta, xi);
      const BigFloat s = ev.series_branch(alpha, n, p.eta);
      if (r == 0) {
        CHECK(abs(s) < BigFloat("1e-30"));
      } else {
        CHECK(close(s, r, "1e-10"));
      }
    }
  }
}

TEST_CASE("leading partial sum uses alpha_0 only") {
  PrecisionScope scope(200);
  const BigFloat mu = 10;
  const BigFloat t("1.2");
  const auto sums = eval_expansion(mu, t, 2, evaluator());
  REQUIRE(sums.size() == 3);
  const auto p = map_point(t);
  const BigFloat z = mu * mu / 2;
  const BigFloat fb = sqrt(sqrt(p.eta) / sinh(p.theta));
  const BigFloat ai = airy_pair(p.eta * pow(z, BigFloat(2) / 3)).value;
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat u0 =
      sqrt(2 * pi) * pow(mu / sqrt(BigFloat(2)), z + BigFloat(1) / 2) * exp(-z / 2) * fb * pow(z, BigFloat(-1) / 3) * ai;
  CHECK(close(sums[0], u0, "1e-50"));
}

TEST_CASE("exponent identity") {
  PrecisionScope scope(200);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> mu_d(1, 40), t_d(1, 4);
  for (int i = 0; i < 10; ++i) {
    const BigFloat mu = mu_d(rng);
    const BigFloat t = t_d(rng);
    const BigFloat z = mu * mu / 2;
    const auto p = map_point(t);
    CHECK(abs(z * p.A + z * t * t + z / 2) <= BigFloat("1e-50") * z);
  }
}

TEST_CASE("reference_U against Hermite functions") {
  PrecisionScope scope(200);
  for (unsigned n = 0; n <= 3; ++n) {
    const BigFloat mu = sqrt(BigFloat(2 * n + 1));
    for (const char* ts : {"1", "1.3", "2.5"}) {
      CAPTURE(n);
      CAPTURE(ts);
      const BigFloat t = from_string(ts);
      const BigFloat x = mu * t * sqrt(BigFloat(2));
      CHECK(close(reference_U(mu, t), hermite_U(n, x), "1e-40"));
    }
  }
}

TEST_CASE("reference_U self-consistency and positivity") {
  const BigFloat mu = 6;
  const BigFloat t("1.3");
  BigFloat lo, hi;
  {
    PrecisionScope scope(100);
    lo = reference_U(mu, t, 100);
  }
  {
    PrecisionScope scope(133);
    hi = reference_U(mu, t, 133);
  }
  PrecisionScope scope(133);
  CHECK(lo > 0);
  CHECK(rel(at_current_precision(lo), hi) < BigFloat("1e-28"));
}

TEST_CASE("reference_U satisfies the Weber equation") {
  PrecisionScope scope(200);
  const BigFloat mu = 6;
  const BigFloat a = -mu * mu / 2;
  const BigFloat scale = mu * sqrt(BigFloat(2));
  const BigFloat x = scale * BigFloat("1.4");
  const BigFloat h("1e-12");
  auto U = [&](const BigFloat& xx) -> BigFloat { return reference_U(mu, xx / scale); };
  const BigFloat u0 = U(x);
  const BigFloat second = (U(x + h) - 2 * u0 + U(x - h)) / (h * h);
  CHECK(abs(second - (x * x / 4 + a) * u0) < BigFloat("1e-15") * abs(u0) * (x * x));
}

TEST_CASE("expansion error decreases with order and with mu") {
  PrecisionScope scope(200);
  for (const char* ts : {"1.1", "1.2", "2"}) {
    const BigFloat t = from_string(ts);
    const auto e10 = compare(BigFloat(10), t, 3, evaluator());
    const auto e20 = compare(BigFloat(20), t, 3, evaluator());
    for (unsigned n = 0; n <= 3; ++n) {
      CAPTURE(ts);
      CAPTURE(n);
      CHECK(e10.rel_errors[n] == rel(e10.partial_sums[n], e10.reference));
      if (n > 0) CHECK(e10.rel_errors[n] < e10.rel_errors[n - 1]);
      if (n > 0) CHECK(e20.rel_errors[n] < e20.rel_errors[n - 1]);
      CHECK(e20.rel_errors[n] < e10.rel_errors[n]);
    }
  }
}
