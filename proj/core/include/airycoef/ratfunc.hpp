#pragma once

#include <string>
#include <vector>

#include "airycoef/multipoly.hpp"

namespace airycoef {

/// Canonical multivariate rational function over Q.
///
/// Invariants: num and den have integer coefficients, gcd(num, den) is 1 in
/// Z[vars] (integer content included), den != 0 and den's grlex leading
/// coefficient is positive. Structural equality is mathematical equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const MultiPoly& p);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZeroError if den is zero.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Requires is_constant().
  Rational constant_value() const;
  std::vector<Var> variables() const;
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  /// Throws DivisionByZeroError for o == 0.
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(int n) const;

  RatFunc derivative(Var v) const;
  /// Replaces v by g. Throws PoleError if the denominator vanishes identically.
  RatFunc substitute(Var v, const RatFunc& g) const;
  /// x -> -x for every symbol in var_mask (bit i = Var(i)).
  RatFunc reflect(unsigned var_mask) const;
  RatFunc rename(Var from, Var to) const;

  /// Throws PoleError when the denominator vanishes at `at`.
  Rational evaluate(const Assignment& at) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  struct Canonical {};
  RatFunc(MultiPoly num, MultiPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

/// Bitmask helper for RatFunc::reflect.
constexpr unsigned var_mask(std::initializer_list<Var> vs) {
  unsigned m = 0;
  for (Var v : vs) m |= 1u << v.index();
  return m;
}

/// gcd in Z[vars] normalised to positive grlex leading coefficient; both inputs
/// must have integer coefficients. gcd(0, 0) = 0.
MultiPoly polynomial_gcd(const MultiPoly& a, const MultiPoly& b);
/// Exact quotient a / b in Z[vars]; returns false if b does not divide a.
bool polynomial_divides(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient);

/// Square-free decomposition of a nonzero integer polynomial:
/// p = unit * prod f_i^{m_i} with primitive f_i of positive leading
/// coefficient. The integer content and sign go into `unit`.
struct SquareFreeFactor {
  MultiPoly factor;
  unsigned multiplicity;
};
std::vector<SquareFreeFactor> square_free(const MultiPoly& p, Rational* unit);

}  // namespace airycoef
