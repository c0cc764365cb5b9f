#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "airycoef/rational.hpp"
#include "airycoef/symbol.hpp"

namespace airycoef {

/// Exponent vector over the global symbol universe.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  static Monomial of(Var v, unsigned power = 1);

  unsigned degree() const;
  unsigned operator[](Var v) const { return exp[v.index()]; }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: total degree first, then lexicographic in the
/// global variable order (s > t > w > b > u > eta > xi > ...).
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Symbol -> value map used by evaluate().
using Assignment = std::map<Var, Rational>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in decreasing grlex order with no zero coefficients,
/// so equal polynomials have identical representations.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Rational& c, const Monomial& m);
  /// Accepts terms in any order; merges duplicates and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms);
  /// Trusts the caller: terms sorted decreasing, unique, nonzero.
  static MultiPoly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term's coefficient (0 when absent).
  Rational constant_coefficient() const;
  /// Requires is_constant().
  Rational constant_value() const { return constant_coefficient(); }

  /// Symbols that occur, in global order.
  std::vector<Var> variables() const;
  /// Bitmask of symbols that occur.
  unsigned variable_mask() const;
  bool depends_on(Var v) const;

  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  unsigned total_degree() const;

  /// Leading term under grlex. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  /// Monomial dividing every term (gcd of all terms' monomials).
  Monomial monomial_content() const;

  /// True if every coefficient has denominator 1.
  bool is_integral() const;
  /// Positive rational c with (*this)/c integral and primitive. Zero for zero.
  Rational content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly mul_monomial(const Rational& c, const Monomial& m) const;
  /// Requires m to divide every term.
  MultiPoly div_monomial(const Monomial& m) const;
  MultiPoly pow(unsigned n) const;

  MultiPoly derivative(Var v) const;
  /// Replaces v by g.
  MultiPoly substitute(Var v, const MultiPoly& g) const;
  /// Replaces each listed symbol by (sign) * itself, i.e. x -> -x.
  MultiPoly reflect(unsigned var_mask) const;
  /// Renames symbol `from` to `to` (which must not occur).
  MultiPoly rename(Var from, Var to) const;

  /// Exact value; every occurring symbol must be assigned
  /// (std::out_of_range otherwise).
  Rational evaluate(const Assignment& at) const;
  /// Evaluates with a user-supplied numeric type T (needs T(Rational)).
  template <class T, class FromRational>
  T evaluate_as(const std::map<Var, T>& at, FromRational&& conv) const;

  /// Coefficients as polynomials in v: result[k] multiplies v^k.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void normalize();
  std::vector<Term> terms_;
};

template <class T, class FromRational>
T MultiPoly::evaluate_as(const std::map<Var, T>& at, FromRational&& conv) const {
  T sum = conv(Rational(0));
  for (const auto& term : terms_) {
    T prod = conv(term.coef);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned e = term.mono.exp[i];
      if (e == 0) continue;
      const T& x = at.at(Var(static_cast<std::uint8_t>(i)));
      for (unsigned k = 0; k < e; ++k) prod *= x;
    }
    sum += prod;
  }
  return sum;
}

}  // namespace airycoef
