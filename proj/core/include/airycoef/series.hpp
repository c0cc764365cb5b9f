#pragma once

// Truncated power series over an exact field (Rational or RatFunc).
//
// A series of order K stores exactly K + 1 coefficients c_0..c_K and stands
// for c_0 + ... + c_K x^K + O(x^{K+1}). Trailing zeros are significant: the
// length is the truncation contract, not the degree. Operations never extend
// precision; result orders follow the rules documented per function.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "airycoef/errors.hpp"
#include "airycoef/ratfunc.hpp"
#include "airycoef/rational.hpp"

namespace airycoef {

inline bool ring_is_zero(const Rational& q) { return q == 0; }
inline bool ring_is_zero(const RatFunc& f) { return f.is_zero(); }

template <class C>
class TruncSeries {
 public:
  TruncSeries(std::vector<C> coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    if (coeffs_.empty()) throw SeriesError("truncated series needs at least one coefficient");
  }

  static TruncSeries zero(unsigned order, std::string var) {
    return TruncSeries(std::vector<C>(order + 1, C(0)), std::move(var));
  }
  static TruncSeries constant(const C& c, unsigned order, std::string var) {
    auto s = zero(order, std::move(var));
    s.coeffs_[0] = c;
    return s;
  }
  /// The series variable itself (order >= 1).
  static TruncSeries identity(unsigned order, std::string var) {
    auto s = zero(std::max(order, 1u), std::move(var));
    s.coeffs_[1] = C(1);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::string& var() const { return var_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](std::size_t k) const { return coeffs_[k]; }
  C& operator[](std::size_t k) { return coeffs_[k]; }

  /// Index of the first nonzero coefficient; order() + 1 if all vanish.
  unsigned valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!ring_is_zero(coeffs_[k])) return static_cast<unsigned>(k);
    }
    return order() + 1;
  }

  TruncSeries truncated(unsigned order) const {
    if (order > this->order()) throw SeriesError("cannot extend a truncated series");
    return TruncSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1), var_);
  }

  /// Term-wise derivative; order drops by one (order 0 stays a zero series).
  TruncSeries derivative() const {
    if (order() == 0) return zero(0, var_);
    std::vector<C> out;
    out.reserve(order());
    for (unsigned k = 1; k <= order(); ++k) out.push_back(coeffs_[k] * C(static_cast<long>(k)));
    return TruncSeries(std::move(out), var_);
  }

  /// Multiplies by var^k; the order grows by k since the new low terms are exact.
  TruncSeries shifted_up(unsigned k) const {
    std::vector<C> out(k, C(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return TruncSeries(std::move(out), var_);
  }

  /// Divides by var^k; requires the first k coefficients to vanish.
  TruncSeries shifted_down(unsigned k) const {
    if (k > order()) throw SeriesError("shift exceeds truncation order");
    for (unsigned i = 0; i < k; ++i) {
      if (!ring_is_zero(coeffs_[i])) throw SeriesError("shift would drop a nonzero coefficient");
    }
    return TruncSeries(std::vector<C>(coeffs_.begin() + k, coeffs_.end()), var_);
  }

  TruncSeries operator-() const {
    auto r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, false); }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, true); }
  friend TruncSeries operator*(const TruncSeries& a, const C& c) {
    auto r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool subtract) {
    check_same_var(a, b);
    const unsigned order = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
      if (subtract) {
        out.push_back(C(a.coeffs_[k] - b.coeffs_[k]));
      } else {
        out.push_back(C(a.coeffs_[k] + b.coeffs_[k]));
      }
    }
    return TruncSeries(std::move(out), a.var_);
  }

 public:
  static void check_same_var(const TruncSeries& a, const TruncSeries& b) {
    if (a.var_ != b.var_) throw SeriesError("series variable mismatch: " + a.var_ + " vs " + b.var_);
  }

 private:
  std::vector<C> coeffs_;
  std::string var_;
};

/// Cauchy product truncated at min(a.order, b.order).
template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  TruncSeries<C>::check_same_var(a, b);
  const unsigned order = std::min(a.order(), b.order());
  std::vector<C> out(order + 1, C(0));
  for (unsigned i = 0; i <= order; ++i) {
    if (ring_is_zero(a[i])) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (ring_is_zero(b[j])) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return TruncSeries<C>(std::move(out), a.var());
}

/// q = a / b with the common valuation v = valuation(b) cancelled exactly.
/// Result order: min(a.order, b.order) - v. Throws SeriesError if b vanishes
/// to its truncation order, if valuation(a) < v (a pole, not a removable
/// singularity), or if no coefficients would remain.
template <class C>
TruncSeries<C> series_div(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  TruncSeries<C>::check_same_var(a, b);
  const unsigned vb = b.valuation();
  if (vb > b.order()) throw SeriesError("series division by a series that vanishes to its truncation order");
  const unsigned va = a.valuation();
  if (va < vb) {
    throw SeriesError("series division: valuation of dividend (" + std::to_string(va) + ") below divisor's (" +
                      std::to_string(vb) + ")");
  }
  const unsigned common = std::min(a.order(), b.order());
  if (common < vb) throw SeriesError("series division: truncation order too small for the divisor's valuation");
  const unsigned order = common - vb;
  std::vector<C> q(order + 1, C(0));
  const C& lead = b[vb];
  for (unsigned k = 0; k <= order; ++k) {
    C acc = a[k + vb];
    for (unsigned j = 1; j <= k; ++j) {
      if (!ring_is_zero(b[j + vb]) && !ring_is_zero(q[k - j])) acc -= b[j + vb] * q[k - j];
    }
    q[k] = acc / lead;
  }
  return TruncSeries<C>(std::move(q), a.var());
}

/// outer(inner(x)), truncated at min(outer.order, inner.order).
/// inner must have zero constant term. The result is in inner's variable.
template <class C>
TruncSeries<C> series_compose(const TruncSeries<C>& outer, const TruncSeries<C>& inner) {
  if (!ring_is_zero(inner[0])) throw SeriesError("series composition: inner series has a nonzero constant term");
  const unsigned order = std::min(outer.order(), inner.order());
  const TruncSeries<C> in = inner.truncated(order);
  auto acc = TruncSeries<C>::constant(outer[order], order, inner.var());
  for (unsigned k = order; k-- > 0;) {
    acc = series_mul(acc, in);
    acc[0] += outer[k];
  }
  return acc;
}

/// g with f(g(y)) = y up to f.order. f needs zero constant term and an
/// invertible linear coefficient. `var` names the result's variable.
template <class C>
TruncSeries<C> series_revert(const TruncSeries<C>& f, std::string var = {}) {
  if (var.empty()) var = f.var();
  if (!ring_is_zero(f[0])) throw SeriesError("series reversion: nonzero constant term");
  if (f.order() < 1 || ring_is_zero(f[1])) throw SeriesError("series reversion: zero linear coefficient");
  const unsigned order = f.order();
  const C inv_lin = C(1) / f[1];
  auto g = TruncSeries<C>::zero(order, var);
  g[1] = inv_lin;
  TruncSeries<C> fv(f.coeffs(), var);
  for (unsigned k = 2; k <= order; ++k) {
    // With g_k = 0, coefficient k of f(g) is c; adding g_k shifts it by f_1 g_k.
    const auto partial = series_compose(fv.truncated(k), g.truncated(k));
    g[k] = -partial[k] * inv_lin;
  }
  return g;
}

/// g = f^{p/q} with g(0) = 1, i.e. the unique series with g^q = f^p.
/// Requires f(0) = 1. Uses the recurrence k g_k = sum_j ((a+1) j - k) f_j g_{k-j}.
template <class C>
TruncSeries<C> series_pow_rational(const TruncSeries<C>& f, long p, unsigned long q) {
  if (q == 0) throw SeriesError("series power: zero denominator in exponent");
  if (!(f[0] == C(1))) throw SeriesError("series power: constant term must equal 1");
  const Rational alpha = make_rational(p, static_cast<long>(q));
  const Rational alpha1 = alpha + 1;
  auto g = TruncSeries<C>::zero(f.order(), f.var());
  g[0] = C(1);
  for (unsigned k = 1; k <= f.order(); ++k) {
    C acc(0);
    for (unsigned j = 1; j <= k; ++j) {
      if (ring_is_zero(f[j])) continue;
      const Rational w = alpha1 * j - k;
      if (w == 0) continue;
      acc += f[j] * g[k - j] * C(w);
    }
    g[k] = acc * C(Rational(make_rational(1, k)));
  }
  return g;
}

}  // namespace airycoef
