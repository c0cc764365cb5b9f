#pragma once

// Floating-point evaluation of the Airy-type expansion of U(a, x),
// a = -mu^2/2, x = mu t sqrt(2), and a quadrature reference for U.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "airycoef/bleistein.hpp"
#include "airycoef/series.hpp"

namespace airycoef::numeric {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 200;

/// Decimal digits carrying at least `bits` binary digits.
unsigned bits_to_digits(unsigned bits);

/// Sets the default BigFloat precision for the current thread and restores
/// the previous one on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits_;
};

/// Copy of x carrying the thread's current default precision (copies keep
/// their source precision otherwise).
BigFloat at_current_precision(const BigFloat& x);

BigFloat from_rational(const Rational& q);
BigFloat from_string(const std::string& decimal);
/// Evaluates f at the given symbol values; throws PoleError if the
/// denominator evaluates to zero.
BigFloat evaluate(const RatFunc& f, const std::map<Var, BigFloat>& at);
BigFloat evaluate(const TruncSeries<Rational>& s, const BigFloat& x);

/// t = cosh theta, (4/3) eta^{3/2} = sinh 2theta - 2theta, A = -1/2 - t^2,
/// s_plus = e^theta.
struct MappingPoint {
  BigFloat t;
  BigFloat theta;
  BigFloat eta;
  BigFloat A;
  BigFloat s_plus;
};

/// Requires t >= 1 (MathError otherwise). Small theta uses the series
/// eta = w E(w)^{2/3}, w = theta^2.
MappingPoint map_point(const BigFloat& t);

/// The two branches of the eta(theta) map, exposed for cross-checks.
BigFloat eta_direct(const BigFloat& theta);
BigFloat eta_series(const BigFloat& theta);

struct AiryPair {
  BigFloat value;
  BigFloat derivative;
};

/// Largest |y| accepted by airy_pair / bi_pair.
inline constexpr double kAiryMaxArgument = 128.0;

/// Ai(y), Ai'(y) to `bits` relative precision from the Maclaurin series of
/// the two standard solutions, carried with extra guard bits.
AiryPair airy_pair(const BigFloat& y, unsigned bits = kDefaultPrecisionBits);
/// Bi(y), Bi'(y), same method.
AiryPair bi_pair(const BigFloat& y, unsigned bits = kDefaultPrecisionBits);

/// Values of alpha_n(eta, xi), beta_n(eta, xi) from a table in (eta, xi):
/// the rational forms for eta >= switch_eta, Maclaurin series below.
class CoefficientEvaluator {
 public:
  explicit CoefficientEvaluator(bleistein::CoeffTable table, unsigned maclaurin_terms = 24,
                                double switch_eta = 0.1);
  const bleistein::CoeffTable& table() const { return table_; }
  unsigned order() const { return table_.order(); }
  BigFloat alpha(unsigned n, const BigFloat& eta, const BigFloat& xi) const;
  BigFloat beta(unsigned n, const BigFloat& eta, const BigFloat& xi) const;
  /// Both branches, regardless of the switch.
  BigFloat rational_branch(bool alpha, unsigned n, const BigFloat& eta, const BigFloat& xi) const;
  BigFloat series_branch(bool alpha, unsigned n, const BigFloat& eta) const;

 private:
  const TruncSeries<Rational>& series(bool alpha, unsigned n) const;

  bleistein::CoeffTable table_;
  unsigned terms_;
  BigFloat switch_eta_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<bool, unsigned>, std::unique_ptr<TruncSeries<Rational>>> cache_;
};

/// Partial sums U_0..U_N of the expansion at (mu, t); requires t > 1.
std::vector<BigFloat> eval_expansion(const BigFloat& mu, const BigFloat& t, unsigned N,
                                     const CoefficientEvaluator& coeffs, unsigned bits = kDefaultPrecisionBits);

struct QuadratureOptions {
  unsigned max_halvings = 14;
};

/// U(-mu^2/2, mu t sqrt 2) by trapezoidal quadrature of the integral
/// representation along the vertical line through the saddle point.
/// Throws ConvergenceError if step halving does not settle.
BigFloat reference_U(const BigFloat& mu, const BigFloat& t, unsigned bits = kDefaultPrecisionBits,
                     const QuadratureOptions& options = {});

struct ExpansionEvaluation {
  BigFloat mu;
  BigFloat t;
  unsigned N = 0;
  unsigned precision_bits = 0;
  std::vector<BigFloat> partial_sums;
  BigFloat reference;
  std::vector<BigFloat> rel_errors;
};

ExpansionEvaluation compare(const BigFloat& mu, const BigFloat& t, unsigned N, const CoefficientEvaluator& coeffs,
                            unsigned bits = kDefaultPrecisionBits);

}  // namespace airycoef::numeric
