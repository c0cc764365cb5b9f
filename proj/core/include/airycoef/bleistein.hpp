#pragma once

// Coefficients alpha_n, beta_n of the Airy-type compound expansion
//
//   F(z) ~ z^{-1/3} Ai(eta z^{2/3}) sum (-1)^n alpha_n z^{-n}
//        - z^{-2/3} Ai'(eta z^{2/3}) sum (-1)^n beta_n z^{-n},   eta = b^2,
//
// computed from the Taylor coefficients of f(t) and f(-t) about t = b by the
// even/odd split, the closed-form gamma/delta weights and the stage recursion.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "airycoef/ratfunc.hpp"

namespace airycoef::bleistein {

/// Source of Taylor coefficients: f(t) = sum pw(k) (t-b)^k and
/// f(-t) = sum pm(k) (t-b)^k. Implementations must be deterministic.
class CoeffProvider {
 public:
  virtual ~CoeffProvider() = default;
  virtual RatFunc pw(unsigned k) const = 0;
  virtual RatFunc pm(unsigned k) const = 0;
  virtual Var b_symbol() const { return vars::b; }
  virtual std::string describe() const = 0;
};

/// Fixed lists; entries past the end are zero.
class ListProvider final : public CoeffProvider {
 public:
  ListProvider(std::vector<RatFunc> pw, std::vector<RatFunc> pm, std::string description = "explicit coefficients");
  RatFunc pw(unsigned k) const override;
  RatFunc pm(unsigned k) const override;
  std::string describe() const override { return description_; }

 private:
  std::vector<RatFunc> pw_;
  std::vector<RatFunc> pm_;
  std::string description_;
};

/// Taylor coefficients of a rational f(t) at t = +-b via memoised exact
/// derivatives f^{(k)}/k!. Safe for concurrent readers.
class RationalTaylorProvider final : public CoeffProvider {
 public:
  explicit RationalTaylorProvider(RatFunc f, Var t = vars::t, Var b = vars::b);
  RatFunc pw(unsigned k) const override;
  RatFunc pm(unsigned k) const override;
  Var b_symbol() const override { return b_; }
  std::string describe() const override;

 private:
  const RatFunc& scaled_derivative(unsigned k) const;

  RatFunc f_;
  Var t_;
  Var b_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<RatFunc>> derivs_;  // f^{(k)}/k!
};

struct EvenOddSplit {
  std::vector<RatFunc> even;  // (pw + pm) / 2
  std::vector<RatFunc> odd;   // (pw - pm) / 2
};

/// Stage n of the recursion: f_n(t) = sum gamma_k (t^2-b^2)^k + t sum delta_k (t^2-b^2)^k.
struct GammaDeltaState {
  unsigned n = 0;
  std::vector<RatFunc> gamma;
  std::vector<RatFunc> delta;

  /// Highest available index K_n.
  unsigned depth() const { return static_cast<unsigned>(gamma.size()) - 1; }
};

struct CoeffTable {
  std::vector<RatFunc> alphas;
  std::vector<RatFunc> betas;
  std::vector<Var> variables;
  std::string source;

  unsigned order() const { return static_cast<unsigned>(alphas.size()) - 1; }
};

/// Entries k = 0..K of the even and odd parts of f about b.
EvenOddSplit split_even_odd(const CoeffProvider& provider, unsigned K);

/// Taylor coefficients of f_o(t)/t about b from those of f_o:
/// b * foe_k = fo_k - foe_{k-1}, foe_{-1} = 0.
std::vector<RatFunc> oe_transform(const std::vector<RatFunc>& odd, Var b);

/// gamma_k, delta_k (k = 0..K) of the stage-0 expansion from the even
/// coefficients and those of f_o(t)/t.
GammaDeltaState init_gamma_delta(const std::vector<RatFunc>& even, const std::vector<RatFunc>& odd_over_t, Var b,
                                 unsigned K);

/// Stage n -> n+1. Output depth is K_n - 2; throws TruncationError if K_n < 2.
GammaDeltaState advance(const GammaDeltaState& state, Var b);

/// alpha_n = gamma_0^{(n)}, beta_n = delta_0^{(n)} for n = 0..N, in the
/// provider's variables (functions of b). Requests exactly pw/pm(0..2N).
CoeffTable alpha_beta(const CoeffProvider& provider, unsigned N);

/// Rewrites a function that is even in b as a function of eta = b^2.
/// Throws MathError if it is not even in b.
RatFunc even_in_b_to_eta(const RatFunc& f, Var b = vars::b, Var eta = vars::eta);

/// Applies even_in_b_to_eta to every entry.
CoeffTable table_in_eta(const CoeffTable& table, Var b = vars::b, Var eta = vars::eta);

}  // namespace airycoef::bleistein
