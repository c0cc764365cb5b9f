#include "airycoef/residue.hpp"

#include "airycoef/errors.hpp"

namespace airycoef::residue {

namespace {

const RatFunc& s_() {
  static const RatFunc v = RatFunc::variable(vars::s);
  return v;
}

RatFunc kernel_base() { return s_() * s_() - RatFunc::variable(vars::eta); }

// Univariate polynomials in s over Q(eta), low degree first.
using UPoly = std::vector<RatFunc>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly to_upoly(const MultiPoly& p) {
  UPoly out;
  for (const auto& c : p.coefficients_in(vars::s)) out.emplace_back(c);
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
void divmod(UPoly a, const UPoly& b, UPoly* q, UPoly* r) {
  trim(a);
  const RatFunc inv_lead = b.back().inverse();
  UPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const RatFunc c = a.back() * inv_lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  if (q) *q = std::move(quot);
  *r = std::move(a);
}

UPoly rem(const UPoly& a, const UPoly& m) {
  UPoly r;
  divmod(a, m, nullptr, &r);
  return r;
}

// Inverse of a modulo m by the extended Euclidean algorithm.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = rem(a, m);
  UPoly t0, t1 = {RatFunc(1)};
  while (!r1.empty()) {
    UPoly q, r;
    divmod(r0, r1, &q, &r);
    UPoly t = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) throw ResidueError("residue oracle: kernel pole coincides with a pole of f0");
  const RatFunc inv = r0[0].inverse();
  for (auto& c : t0) c *= inv;
  return rem(t0, m);
}

}  // namespace

KernelPair initial_kernels() {
  const RatFunc inv = kernel_base().inverse();
  return {0, s_() * inv, inv};
}

KernelPair next_kernel(const KernelPair& k) {
  const RatFunc factor = -kernel_base().inverse();
  return {k.n + 1, factor * k.A.derivative(vars::s), factor * k.B.derivative(vars::s)};
}

RatFunc residue_at_simple_pole(const RatFunc& f, Var s, const RatFunc& p) {
  const RatFunc den_at = RatFunc(f.den()).substitute(s, p);
  if (!den_at.is_zero()) throw ResidueError("residue: point is not a pole");
  const RatFunc slope = RatFunc(f.den().derivative(s)).substitute(s, p);
  if (slope.is_zero()) throw ResidueError("residue: pole is not simple");
  const RatFunc top = RatFunc(f.num()).substitute(s, p);
  if (top.is_zero()) throw ResidueError("residue: point is a removable singularity");
  return top / slope;
}

bleistein::CoeffTable oracle_alpha_beta(const RatFunc& f0, unsigned N, Var t) {
  for (Var v : f0.variables()) {
    if (v != t) throw ResidueError("residue oracle: f0 may depend on " + t.name() + " only");
  }
  const RatFunc f = t == vars::s ? f0 : f0.rename(t, vars::s);
  const MultiPoly& P = f.num();
  const MultiPoly& Q = f.den();
  if (Q.is_constant()) throw ResidueError("residue oracle: f0 has no poles");
  if (P.degree(vars::s) + 1 > Q.degree(vars::s)) {
    throw ResidueError("residue oracle: f0 must decay at infinity (deg num < deg den)");
  }
  const MultiPoly dQ = Q.derivative(vars::s);
  if (!polynomial_gcd(Q, dQ).is_constant()) throw ResidueError("residue oracle: f0 has a multiple pole");

  // Sum over the roots p of Q of h(p) equals the trace of h in Q(eta)[s]/(Q):
  // sum_i h_i Tr(s^i), with power sums Tr(s^i) from Newton's identities.
  const UPoly q = to_upoly(Q);
  const std::size_t d = q.size() - 1;
  std::vector<RatFunc> e(d + 1);  // monic q: s^d + e_1 s^{d-1} + ... + e_d
  for (std::size_t i = 0; i <= d; ++i) e[i] = q[d - i] / q[d];
  std::vector<RatFunc> power_sum(d);
  power_sum[0] = RatFunc(static_cast<long>(d));
  for (std::size_t k = 1; k < d; ++k) {
    RatFunc acc = e[k] * RatFunc(static_cast<long>(k));
    for (std::size_t i = 1; i < k; ++i) acc += e[i] * power_sum[k - i];
    power_sum[k] = -acc;
  }
  auto trace = [&](const UPoly& r) {
    RatFunc acc;
    for (std::size_t i = 0; i < r.size(); ++i) acc += r[i] * power_sum[i];
    return acc;
  };

  // Res_{s=p} K f0 = K(p) P(p) / Q'(p) for a kernel K regular at p.
  const UPoly weight = rem(mul(to_upoly(P), inverse_mod(to_upoly(dQ), q)), q);
  const UPoly inv_base = inverse_mod(to_upoly(kernel_base().num()), q);

  bleistein::CoeffTable table;
  table.source = "residues of rational f0";
  KernelPair k = initial_kernels();
  UPoly inv_den_power = inv_base;  // (s^2 - eta)^{-(2n+1)} mod q
  const UPoly inv_base_sq = rem(mul(inv_base, inv_base), q);
  for (unsigned n = 0; n <= N; ++n) {
    if (n > 0) {
      k = next_kernel(k);
      inv_den_power = rem(mul(inv_den_power, inv_base_sq), q);
    }
    // A_n = a_n / (s^2 - eta)^{2n+1} up to a constant in the denominator.
    auto contribution = [&](const RatFunc& kernel) {
      const MultiPoly expected = kernel_base().num().pow(2 * n + 1);
      MultiPoly cofactor;
      if (!polynomial_divides(kernel.den(), expected, &cofactor) || !cofactor.is_constant()) {
        throw std::logic_error("kernel denominator is not a power of s^2 - eta");
      }
      UPoly h = rem(mul(to_upoly(kernel.num()), inv_den_power), q);
      h = rem(mul(h, weight), q);
      return -trace(h) / RatFunc(cofactor);
    };
    table.alphas.push_back(contribution(k.A));
    table.betas.push_back(contribution(k.B));
  }
  unsigned mask = 0;
  for (const auto* list : {&table.alphas, &table.betas}) {
    for (const auto& c : *list) mask |= c.num().variable_mask() | c.den().variable_mask();
  }
  if (mask & (1u << vars::eta.index())) table.variables.push_back(vars::eta);
  return table;
}

}  // namespace airycoef::residue
