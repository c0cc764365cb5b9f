#pragma once

// Dense recursive polynomials over Z, used behind MultiPoly/RatFunc for gcd
// and exact division. A polynomial of level l is a dense coefficient vector
// in its main variable whose entries are polynomials of level l - 1; level 0
// is a plain integer. Default construction yields zero at every level.

#include <vector>

#include "airycoef/multipoly.hpp"
#include "airycoef/rational.hpp"

namespace airycoef::detail {

struct DPoly {
  std::vector<DPoly> c;  // level >= 1; c.back() nonzero
  Integer n;             // level == 0
};

bool is_zero(const DPoly& p, int l);
int degree(const DPoly& p, int l);  // -1 for zero
DPoly constant(const Integer& k, int l);
void trim(DPoly& p, int l);

DPoly add(const DPoly& a, const DPoly& b, int l);
DPoly sub(const DPoly& a, const DPoly& b, int l);
DPoly mul(const DPoly& a, const DPoly& b, int l);
DPoly neg(DPoly p, int l);
DPoly mul_scalar(DPoly p, const Integer& k, int l);
DPoly divexact_scalar(DPoly p, const Integer& k, int l);

Integer max_norm(const DPoly& p, int l);
Integer int_content(const DPoly& p, int l);
const Integer& leading_int(const DPoly& p, int l);

/// Exact division; returns false when b does not divide a in Z[vars].
bool divide(const DPoly& a, const DPoly& b, int l, DPoly* q);

/// gcd with positive leading integer coefficient.
DPoly gcd(const DPoly& a, const DPoly& b, int l);

/// Maps MultiPoly terms onto a fixed ordered list of symbols (main variable
/// first). Coefficients must be integral.
class DenseLayout {
 public:
  explicit DenseLayout(std::vector<Var> vars) : vars_(std::move(vars)) {}
  static DenseLayout for_polys(std::initializer_list<const MultiPoly*> ps);

  int levels() const { return static_cast<int>(vars_.size()); }
  DPoly to_dense(const MultiPoly& p) const;
  MultiPoly to_sparse(const DPoly& p) const;

 private:
  std::vector<Var> vars_;
};

}  // namespace airycoef::detail
