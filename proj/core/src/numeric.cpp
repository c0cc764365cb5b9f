#include "airycoef/numeric.hpp"

#include <cmath>

#include "airycoef/errors.hpp"
#include "airycoef/pcf.hpp"

namespace airycoef::numeric {

namespace mp = boost::multiprecision;

BigFloat at_current_precision(const BigFloat& x) { return BigFloat(x, BigFloat::default_precision()); }

unsigned bits_to_digits(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(BigFloat::default_precision()) {
  BigFloat::default_precision(bits_to_digits(bits));
}

PrecisionScope::~PrecisionScope() { BigFloat::default_precision(saved_digits_); }

BigFloat from_rational(const Rational& q) {
  BigFloat r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat from_string(const std::string& decimal) { return BigFloat(decimal); }

BigFloat evaluate(const RatFunc& f, const std::map<Var, BigFloat>& at) {
  const BigFloat den = f.den().evaluate_as<BigFloat>(at, from_rational);
  if (den == 0) throw PoleError("evaluate: denominator vanishes");
  return f.num().evaluate_as<BigFloat>(at, from_rational) / den;
}

BigFloat evaluate(const TruncSeries<Rational>& s, const BigFloat& x) {
  BigFloat acc = 0;
  for (std::size_t k = s.coeffs().size(); k-- > 0;) acc = acc * x + from_rational(s[k]);
  return acc;
}

namespace {

// Series of eta in w = theta^2 with enough terms for the current precision at
// |w| <= kSeriesMaxW; cached by length.
constexpr double kSeriesMaxW = 0.25;
constexpr double kSeriesMaxTheta = 0.5;

const TruncSeries<Rational>& eta_w_cached(unsigned terms) {
  static std::mutex mutex;
  static std::map<unsigned, TruncSeries<Rational>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(terms);
  if (it == cache.end()) it = cache.emplace(terms, pcf::eta_w_series(terms)).first;
  return it->second;
}

unsigned current_bits() { return static_cast<unsigned>(std::ceil(BigFloat::default_precision() / 0.30103)); }

}  // namespace

BigFloat eta_direct(const BigFloat& theta) {
  const BigFloat v = BigFloat(3) / 4 * (sinh(2 * theta) - 2 * theta);
  if (v <= 0) return BigFloat(0);
  return pow(v, BigFloat(2) / 3);
}

BigFloat eta_series(const BigFloat& theta) {
  const BigFloat w = theta * theta;
  // Terms decay at least like (w / 16)^k for |w| well inside the radius.
  const double wd = std::max(std::fabs(w.convert_to<double>()), 1e-30);
  const double per_term = std::log(16.0 / std::min(wd, 8.0));
  const unsigned terms = static_cast<unsigned>(std::ceil((current_bits() + 16) * std::log(2.0) / per_term)) + 4;
  return evaluate(eta_w_cached(terms), w);
}

MappingPoint map_point(const BigFloat& t) {
  if (t < 1) throw MathError("map_point: t must be >= 1");
  MappingPoint p;
  p.t = t;
  p.theta = log(t + sqrt(t * t - 1));
  p.eta = p.theta < kSeriesMaxTheta ? eta_series(p.theta) : eta_direct(p.theta);
  p.A = -BigFloat(1) / 2 - t * t;
  p.s_plus = exp(p.theta);
  return p;
}

namespace {

enum class AiryKind { Ai, Bi };

AiryPair airy_impl(const BigFloat& y_in, unsigned bits, AiryKind kind) {
  const unsigned digits = BigFloat::default_precision();
  const double yd = y_in.convert_to<double>();
  if (!(std::fabs(yd) <= kAiryMaxArgument)) throw MathError("airy: argument outside the supported range");
  // The series terms reach about exp((2/3)|y|^{3/2}) while Ai may be as small
  // as exp(-(2/3)|y|^{3/2}).
  const unsigned extra = static_cast<unsigned>(std::ceil(4.0 / 3.0 * std::pow(std::fabs(yd), 1.5) / std::log(2.0)));
  PrecisionScope scope(bits + extra + 32);
  const BigFloat y = at_current_precision(y_in);
  const BigFloat y3 = y * y * y;
  const BigFloat eps = pow(BigFloat(2), -static_cast<int>(bits + extra + 40));
  // f = sum 3^k (1/3)_k y^{3k}/(3k)!, g = sum 3^k (2/3)_k y^{3k+1}/(3k+1)!.
  BigFloat tf = 1, tg = at_current_precision(y), tfp = y * y / 2, tgp = 1;
  BigFloat f = tf, g = tg, fp = tfp, gp = tgp;
  for (unsigned k = 1;; ++k) {
    tf *= y3 / ((3 * k - 1) * (3 * k));
    tg *= y3 / ((3 * k) * (3 * k + 1));
    tgp *= y3 / ((3 * k - 2) * (3 * k));
    f += tf;
    g += tg;
    gp += tgp;
    if (k >= 2) {
      tfp *= y3 / ((3 * k - 3) * (3 * k - 1));
      fp += tfp;
    }
    if (k > 2 && abs(tf) <= eps * abs(f) && abs(tg) <= eps * abs(g) && abs(tfp) <= eps * abs(fp) &&
        abs(tgp) <= eps * abs(gp)) {
      break;
    }
    if (k > 100000) throw ConvergenceError("airy: series did not converge");
  }
  const BigFloat c1 = 1 / (pow(BigFloat(3), BigFloat(2) / 3) * tgamma(BigFloat(2) / 3));
  const BigFloat c2 = 1 / (pow(BigFloat(3), BigFloat(1) / 3) * tgamma(BigFloat(1) / 3));
  BigFloat value, derivative;
  if (kind == AiryKind::Ai) {
    value = c1 * f - c2 * g;
    derivative = c1 * fp - c2 * gp;
  } else {
    const BigFloat r3 = sqrt(BigFloat(3));
    value = r3 * (c1 * f + c2 * g);
    derivative = r3 * (c1 * fp + c2 * gp);
  }
  AiryPair out{BigFloat(value, digits), BigFloat(derivative, digits)};
  return out;
}

}  // namespace

AiryPair airy_pair(const BigFloat& y, unsigned bits) { return airy_impl(y, bits, AiryKind::Ai); }

AiryPair bi_pair(const BigFloat& y, unsigned bits) { return airy_impl(y, bits, AiryKind::Bi); }

CoefficientEvaluator::CoefficientEvaluator(bleistein::CoeffTable table, unsigned maclaurin_terms, double switch_eta)
    : table_(std::move(table)), terms_(maclaurin_terms), switch_eta_(switch_eta) {}

const TruncSeries<Rational>& CoefficientEvaluator::series(bool alpha, unsigned n) const {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[{alpha, n}];
  if (!slot) {
    const RatFunc& c = alpha ? table_.alphas.at(n) : table_.betas.at(n);
    slot = std::make_unique<TruncSeries<Rational>>(pcf::maclaurin_of_coeff(c, terms_));
  }
  return *slot;
}

BigFloat CoefficientEvaluator::rational_branch(bool alpha, unsigned n, const BigFloat& eta, const BigFloat& xi) const {
  const RatFunc& c = alpha ? table_.alphas.at(n) : table_.betas.at(n);
  return evaluate(c, {{vars::eta, eta}, {vars::xi, xi}});
}

BigFloat CoefficientEvaluator::series_branch(bool alpha, unsigned n, const BigFloat& eta) const {
  return evaluate(series(alpha, n), eta);
}

BigFloat CoefficientEvaluator::alpha(unsigned n, const BigFloat& eta, const BigFloat& xi) const {
  return eta < switch_eta_ ? series_branch(true, n, eta) : rational_branch(true, n, eta, xi);
}

BigFloat CoefficientEvaluator::beta(unsigned n, const BigFloat& eta, const BigFloat& xi) const {
  return eta < switch_eta_ ? series_branch(false, n, eta) : rational_branch(false, n, eta, xi);
}

std::vector<BigFloat> eval_expansion(const BigFloat& mu_in, const BigFloat& t_in, unsigned N,
                                     const CoefficientEvaluator& coeffs, unsigned bits) {
  if (N > coeffs.order()) throw TruncationError("eval_expansion: table depth below requested order");
  const unsigned digits = BigFloat::default_precision();
  PrecisionScope scope(bits + 32);
  const BigFloat mu = at_current_precision(mu_in);
  const BigFloat t = at_current_precision(t_in);
  if (!(t > 1)) throw MathError("eval_expansion: t must exceed 1");
  if (!(mu > 0)) throw MathError("eval_expansion: mu must be positive");
  const MappingPoint m = map_point(t);
  const BigFloat z = mu * mu / 2;
  const BigFloat z13 = cbrt(z);
  const BigFloat b = sqrt(m.eta);
  const BigFloat sh = sinh(m.theta);
  const BigFloat xi = b * m.t / sh;
  const BigFloat fb = sqrt(b / sh);
  const AiryPair ai = airy_pair(m.eta * z13 * z13, bits + 32);
  // sqrt(2 pi) (mu/sqrt 2)^{z+1/2} e^{z(A + t^2)} f(b), with z(A + t^2) = -z/2.
  const BigFloat pre = sqrt(2 * boost::math::constants::pi<BigFloat>()) *
                       exp((z + BigFloat(1) / 2) * log(mu / sqrt(BigFloat(2))) - z / 2) * fb;
  std::vector<BigFloat> out;
  BigFloat sa = 0, sb = 0, zpow = 1;
  for (unsigned n = 0; n <= N; ++n) {
    const BigFloat sign = (n % 2) ? -1 : 1;
    sa += sign * coeffs.alpha(n, m.eta, xi) / zpow;
    sb += sign * coeffs.beta(n, m.eta, xi) / zpow;
    zpow *= z;
    BigFloat u = pre * (ai.value * sa / z13 - ai.derivative * sb / (z13 * z13));
    u.precision(digits);
    out.push_back(u);
  }
  return out;
}

BigFloat reference_U(const BigFloat& mu_in, const BigFloat& t_in, unsigned bits, const QuadratureOptions& options) {
  const unsigned digits = BigFloat::default_precision();
  const unsigned work_bits = bits + 48;
  PrecisionScope scope(work_bits);
  const BigFloat mu = at_current_precision(mu_in);
  const BigFloat t = at_current_precision(t_in);
  if (!(mu > 0) || t < 1) throw MathError("reference_U: needs mu > 0 and t >= 1");
  const BigFloat z = mu * mu / 2;
  const BigFloat c = t + sqrt(t * t - 1);
  // phi(sigma) = sigma^2/2 - 2 t sigma + log sigma on sigma = c + i y.
  const BigFloat r0 = z * (c * c / 2 - 2 * t * c + log(c));
  auto integrand = [&](const BigFloat& y) -> BigFloat {
    const BigFloat mod2 = c * c + y * y;
    const BigFloat re = z * ((c * c - y * y) / 2 - 2 * t * c + log(mod2) / 2) - r0 - log(mod2) / 4;
    const BigFloat arg = atan2(y, c);
    const BigFloat im = z * (c * y - 2 * t * y + arg);
    return exp(re) * cos(im - arg / 2);
  };
  // Truncation: z (y^2/2 - log(1 + y^2/c^2)/2) exceeds the target exponent.
  const double target = (work_bits + 16) * std::log(2.0);
  const double zd = z.convert_to<double>();
  const double cd = c.convert_to<double>();
  double Y = std::sqrt(2 * target / zd) + 1;
  while (zd * (Y * Y / 2 - 0.5 * std::log(1 + Y * Y / (cd * cd))) < target) Y *= 1.25;
  const BigFloat tol = pow(BigFloat(2), -static_cast<int>(bits + 8));
  // Trapezoid on [0, Y] for an even integrand; refine by halving.
  unsigned n = std::max(16u, static_cast<unsigned>(std::ceil(Y * std::sqrt(zd) * 4)));
  BigFloat h = BigFloat(Y) / n;
  BigFloat sum = integrand(BigFloat(0)) / 2;
  for (unsigned k = 1; k <= n; ++k) sum += integrand(h * k);
  BigFloat value = sum * h;
  bool converged = false;
  for (unsigned level = 0; level < options.max_halvings; ++level) {
    for (unsigned k = 0; k < n; ++k) sum += integrand(h * (2 * k + 1) / 2);
    n *= 2;
    h /= 2;
    const BigFloat next = sum * h;
    const bool close = abs(next - value) <= tol * abs(next);
    value = next;
    if (close && level >= 1) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceError("reference_U: quadrature did not converge");
  // U = e^{z t^2} (mu/sqrt2)^{z+1/2} / sqrt(2 pi) * 2 e^{r0} * integral over y >= 0.
  const BigFloat logpre = z * t * t + (z + BigFloat(1) / 2) * log(mu / sqrt(BigFloat(2))) + r0;
  BigFloat u = 2 * exp(logpre) * value / sqrt(2 * boost::math::constants::pi<BigFloat>());
  u.precision(digits);
  return u;
}

ExpansionEvaluation compare(const BigFloat& mu, const BigFloat& t, unsigned N, const CoefficientEvaluator& coeffs,
                            unsigned bits) {
  PrecisionScope scope(bits);
  ExpansionEvaluation ev;
  ev.mu = mu;
  ev.t = t;
  ev.N = N;
  ev.precision_bits = bits;
  ev.partial_sums = eval_expansion(mu, t, N, coeffs, bits);
  ev.reference = reference_U(mu, t, bits);
  for (const auto& p : ev.partial_sums) ev.rel_errors.push_back(abs(p - ev.reference) / abs(ev.reference));
  return ev;
}

}  // namespace airycoef::numeric
