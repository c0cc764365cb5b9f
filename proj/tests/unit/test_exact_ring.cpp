#include <doctest.h>

#include "airycoef/errors.hpp"
#include "airycoef/ratfunc.hpp"
#include "random_ratfunc.hpp"
#include "test_util.hpp"

using namespace airycoef;
using testsupport::Q;
using testsupport::R;

namespace {

const RatFunc s = RatFunc::variable(vars::s);
const RatFunc t = RatFunc::variable(vars::t);
const RatFunc b = RatFunc::variable(vars::b);
const RatFunc u = RatFunc::variable(vars::u);
const RatFunc eta = RatFunc::variable(vars::eta);

bool canonical(const RatFunc& f) {
  if (f.den().is_zero()) return false;
  if (f.num().is_zero()) return f.den() == MultiPoly(1);
  if (!f.num().is_integral() || !f.den().is_integral()) return false;
  MultiPoly g = polynomial_gcd(f.num(), f.den());
  if (!g.is_constant() || g.constant_value() != 1) return false;
  return f.den().terms().front().coef > 0;
}

}  // namespace

TEST_CASE("rational invariants") {
  const Rational q = make_rational(-6, 4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  const Rational z = make_rational(0, -7);
  CHECK(z.get_num() == 0);
  CHECK(z.get_den() == 1);
  CHECK(parse_rational("-10/4") == Q(-5, 2));
  CHECK(to_string(Q(3, -9)) == "-1/3");
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZeroError);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("multipoly representation is canonical") {
  const MultiPoly x = MultiPoly::variable(vars::t);
  const MultiPoly y = MultiPoly::variable(vars::eta);
  const MultiPoly p = (x + y) * (x - y);
  const MultiPoly q = x * x - y * y;
  CHECK(p == q);
  CHECK(p.size() == 2);
  for (const auto& term : p.terms()) CHECK(term.coef != 0);
  CHECK((p - q).is_zero());
  CHECK(p.degree(vars::t) == 2);
  CHECK(p.total_degree() == 2);
  CHECK_FALSE(p.depends_on(vars::s));
}

TEST_CASE("arith examples") {
  CHECK(R("1/(t+1)") + R("1/(t-1)") == R("2*t/(t^2-1)"));
  const RatFunc f = R("(t^3-eta)/(s*t+2)");
  CHECK((f - f).is_zero());
  CHECK((f - f) == RatFunc(0));
  const RatFunc quotient = R("(t^2-eta)/(t-1)") / R("t+1");
  CHECK(quotient == R("(t^2-eta)/(t^2-1)"));
  testsupport::RandomRing rng(11);
  for (int i = 0; i < 3; ++i) {
    Assignment at = rng.point({vars::t, vars::eta});
    if (at[vars::t] == 1 || at[vars::t] == -1) continue;
    CHECK(quotient.evaluate(at) == (at[vars::t] * at[vars::t] - at[vars::eta]) / (at[vars::t] * at[vars::t] - 1));
  }
  CHECK_THROWS_AS(t / RatFunc(0), DivisionByZeroError);
  CHECK_THROWS_AS(RatFunc(MultiPoly(1), MultiPoly()), DivisionByZeroError);
}

TEST_CASE("canonical sign and content") {
  const RatFunc f(MultiPoly(-2) * MultiPoly::variable(vars::t), MultiPoly(-4) * MultiPoly::variable(vars::eta) + 6);
  CHECK(canonical(f));
  CHECK(f == R("t/(2*eta-3)"));
  const RatFunc g(MultiPoly::variable(vars::t) * Q(1, 3), MultiPoly::variable(vars::eta) * Q(1, 6));
  CHECK(canonical(g));
  CHECK(g == R("2*t/eta"));
}

TEST_CASE("differentiate examples") {
  CHECK(R("1/(s-t)").derivative(vars::s) == R("-1/(s-t)^2"));
  CHECK(R("s/(s^2-eta)").derivative(vars::s) == R("-(s^2+eta)/(s^2-eta)^2"));
  CHECK(R("1/(s^2-eta)").derivative(vars::eta) == R("1/(s^2-eta)^2"));
  CHECK(R("t^3+eta").derivative(vars::s).is_zero());
}

TEST_CASE("substitute examples") {
  CHECK(eta.substitute(vars::eta, b * b) == b * b);
  const RatFunc tb = R("(4*b^2+u^4)/(4*b^2-u^4)");
  const RatFunc f = R("1/(t+1)").substitute(vars::t, tb);
  CHECK(f == R("(4*b^2-u^4)/(8*b^2)"));
  CHECK(f.evaluate({{vars::b, 1}, {vars::u, 1}}) == Q(3, 8));
  const RatFunc g = R("(s*t-1)/(t^2+eta)");
  CHECK(g.substitute(vars::t, t) == g);
  CHECK_THROWS_AS(R("1/(t-eta)").substitute(vars::t, eta), PoleError);
}

TEST_CASE("evaluate examples") {
  CHECK(R("(eta+1)/(eta-1)^3").evaluate({{vars::eta, 0}}) == -1);
  CHECK(R("1/(s^2-eta)").evaluate({{vars::s, -1}, {vars::eta, 0}}) == 1);
  CHECK(R("s/(s^2-eta)").evaluate({{vars::s, 2}, {vars::eta, 1}}) == Q(2, 3));
  CHECK_THROWS_AS(R("1/(eta-1)").evaluate({{vars::eta, 1}}), PoleError);
}

TEST_CASE("reflect and rename") {
  const RatFunc f = R("(2*b+u^2)/(2*b-u^2)");
  const RatFunc flipped = f.reflect(var_mask({vars::b, vars::u}));
  CHECK(flipped == R("(2*b-u^2)/(2*b+u^2)"));
  CHECK(flipped.reflect(var_mask({vars::b, vars::u})) == f);
  CHECK(R("t^2+1/t").rename(vars::t, vars::s) == R("s^2+1/s"));
}

TEST_CASE("gcd and square-free decomposition") {
  const MultiPoly x = MultiPoly::variable(vars::t);
  const MultiPoly y = MultiPoly::variable(vars::eta);
  const MultiPoly common = x * y - 3;
  const MultiPoly a = common * (x + 1) * MultiPoly(6);
  const MultiPoly c = common * (y * y - x) * MultiPoly(4);
  CHECK(polynomial_gcd(a, c) == common * MultiPoly(2));
  MultiPoly q;
  CHECK(polynomial_divides(a, common, &q));
  CHECK(q == (x + 1) * MultiPoly(6));
  CHECK_FALSE(polynomial_divides(a, y, &q));

  Rational unit;
  const MultiPoly p = MultiPoly(-3) * (x - 1).pow(3) * (x + y) * (x + y);
  const auto factors = square_free(p, &unit);
  CHECK(unit == -3);
  MultiPoly back(unit);
  for (const auto& f : factors) back = back * f.factor.pow(f.multiplicity);
  CHECK(back == p);
  for (const auto& f : factors) CHECK((f.multiplicity == 2 || f.multiplicity == 3));
}

TEST_CASE("property: canonical form idempotent") {
  testsupport::RandomRing rng(101);
  for (int i = 0; i < 100; ++i) {
    const RatFunc f = rng.ratfunc({vars::t, vars::eta}, 4);
    CHECK(canonical(f));
    const RatFunc again(f.num(), f.den());
    CHECK(again == f);
    CHECK(RatFunc(f.num() * MultiPoly(-3), f.den() * MultiPoly(-3)) == f);
  }
}

TEST_CASE("property: ring laws and Leibniz rule") {
  testsupport::RandomRing rng(2024);
  for (int i = 0; i < 100; ++i) {
    const std::vector<Var> vs{vars::s, vars::eta};
    const RatFunc f = rng.ratfunc(vs, 4);
    const RatFunc g = rng.ratfunc(vs, 4);
    const RatFunc h = rng.ratfunc(vs, 4);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g).derivative(vars::s) == f.derivative(vars::s) * g + f * g.derivative(vars::s));
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("property: evaluate after substitute") {
  testsupport::RandomRing rng(77);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const RatFunc f = rng.ratfunc({vars::t, vars::eta}, 3);
    const RatFunc g = rng.ratfunc({vars::s, vars::eta}, 2);
    Assignment at = rng.point({vars::s, vars::eta});
    RatFunc composed;
    Rational lhs;
    Rational gv;
    try {
      composed = f.substitute(vars::t, g);
      lhs = composed.evaluate(at);
      gv = g.evaluate(at);
    } catch (const MathError&) {
      continue;
    }
    Assignment outer = at;
    outer[vars::t] = gv;
    Rational rhs;
    try {
      rhs = f.evaluate(outer);
    } catch (const PoleError&) {
      continue;
    }
    CHECK(lhs == rhs);
    ++checked;
  }
  CHECK(checked > 50);
}
