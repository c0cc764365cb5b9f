#pragma once

// Coefficients of the Airy-type expansion of the parabolic cylinder function
// U(a, x), a = -mu^2/2, x = mu t sqrt(2), in the root-free parametrisation
//
//   t = (4b^2 + u^4) / (4b^2 - u^4),   eta = b^2,   xi = (u^4 + 4b^2) / (4u^2).

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "airycoef/bleistein.hpp"
#include "airycoef/series.hpp"

namespace airycoef::pcf {

/// t as a function of (b, u).
RatFunc t_of_bu();
/// xi as a function of (b, u).
RatFunc xi_of_bu();

/// Taylor coefficients about w = b of the saddle point s_+(w) and of
/// S(w) = sqrt(s_+(w)) (scaled so that S_1 = 1). Entries are rational in
/// (b, u). Append-only; concurrent readers are safe.
class SeriesCache {
 public:
  /// s_k^+. Computed on demand up to k.
  RatFunc s_plus(unsigned k);
  /// s_k^-: s_k^+ with (b, u) -> (-b, -u).
  RatFunc s_minus(unsigned k);
  /// S_k.
  RatFunc sqrt_s(unsigned k);
  unsigned depth() const;

 private:
  void extend_s(unsigned k);
  void extend_sqrt(unsigned k);

  mutable std::mutex mutex_;
  std::vector<RatFunc> s_;
  std::vector<RatFunc> poly_;  // coefficients of s^2 - 2ts + 1
  std::vector<RatFunc> sq_;
};

std::vector<RatFunc> s_plus_series(unsigned K);
std::vector<RatFunc> s_minus_series(unsigned K);
std::vector<RatFunc> sqrt_s_series(unsigned K);

/// p~_k: pw(k) = (k+1) S_{k+1}, pm(k) = (-1)^k pw(k) with (b, u) -> (-b, -u).
class PTildeProvider final : public bleistein::CoeffProvider {
 public:
  explicit PTildeProvider(std::shared_ptr<SeriesCache> cache = std::make_shared<SeriesCache>());
  RatFunc pw(unsigned k) const override;
  RatFunc pm(unsigned k) const override;
  std::string describe() const override;

 private:
  std::shared_ptr<SeriesCache> cache_;
};

/// Rewrites v(b, u), invariant under (b, u) -> (-b, -u), as a rational
/// function of (eta, xi) with a power of eta as denominator. The result is
/// verified exactly by pullback; throws MathError when no such form exists.
RatFunc to_xi_eta(const RatFunc& v);

/// eta -> b^2, xi -> (u^4 + 4b^2)/(4u^2).
RatFunc pullback(const RatFunc& f);

/// alpha_n, beta_n for n = 0..N as rational functions of (eta, xi).
bleistein::CoeffTable pcf_coeff_table(unsigned N);

/// Variant that reuses (and extends) a caller-owned series cache.
bleistein::CoeffTable pcf_coeff_table(unsigned N, const std::shared_ptr<SeriesCache>& cache);

/// E(w) with (3/4)(sinh 2theta - 2theta) = theta^3 E(theta^2), to order M in w.
TruncSeries<Rational> e_series(unsigned M);
/// eta as a series in w = theta^2: eta = w E(w)^{2/3}.
TruncSeries<Rational> eta_w_series(unsigned M);
/// w as a series in eta (reversion of eta_w_series).
TruncSeries<Rational> w_eta_series(unsigned M);
/// xi(eta) = (E^{1/3} theta coth theta) evaluated at w = w(eta).
TruncSeries<Rational> xi_eta_series(unsigned M);

/// Maclaurin series of c(eta, xi(eta)) to order M in eta. Throws SeriesError
/// if the result would have a pole at eta = 0.
TruncSeries<Rational> maclaurin_of_coeff(const RatFunc& c, unsigned M);

struct RadiusEstimate {
  double ratio = 0;      // |c_{M-1} / c_M|
  double fit = 0;        // exp(-slope) of a least-squares line through log|c_k|
  double fit_rms = 0;    // rms residual of that fit
  double extrapolated = 0;  // M r_M - (M-1) r_{M-1}, r_k = |c_{k-1} / c_k|
  unsigned tail_start = 0;
};

/// Radius of convergence from the tail of a Maclaurin series (at least 12
/// coefficients).
/// Throws SeriesError on too few terms or a vanishing last coefficient.
RadiusEstimate radius_estimate(const TruncSeries<Rational>& series, unsigned tail = 8);

}  // namespace airycoef::pcf
