#pragma once

// Independent route to alpha_n, beta_n for rational f0 with simple poles:
//
//   alpha_n = (1/2 pi i) \oint A_n(s, eta) f0(s) ds,   beta_n likewise with B_n,
//
// around +-sqrt(eta), evaluated as minus the residues at the poles of f0.

#include "airycoef/bleistein.hpp"
#include "airycoef/errors.hpp"

namespace airycoef::residue {

/// Failure of a residue precondition (not a pole, multiple pole, no decay).
class ResidueError : public MathError {
 public:
  using MathError::MathError;
};

/// Kernels A_n, B_n in (s, eta).
struct KernelPair {
  unsigned n = 0;
  RatFunc A;
  RatFunc B;
};

/// A_0 = s/(s^2 - eta), B_0 = 1/(s^2 - eta).
KernelPair initial_kernels();

/// R_{n+1} = -1/(s^2 - eta) dR_n/ds applied to both kernels.
KernelPair next_kernel(const KernelPair& k);

/// Residue of f at a simple pole s = p: num(p) / den'(p). Throws
/// ResidueError if p is not a root of the denominator or is a multiple root.
RatFunc residue_at_simple_pole(const RatFunc& f, Var s, const RatFunc& p);

/// alpha_n = -sum Res A_n f0, beta_n = -sum Res B_n f0 over the poles of
/// f0(t), n = 0..N. f0 must depend on t only, have squarefree denominator and
/// numerator degree below denominator degree. Irrational poles are handled
/// through the trace of Q(eta)[s]/(den f0).
bleistein::CoeffTable oracle_alpha_beta(const RatFunc& f0, unsigned N, Var t = vars::t);

}  // namespace airycoef::residue
