#pragma once

#include "airycoef/numeric.hpp"

namespace testsupport {

/// Ai(y) by trapezoidal quadrature of (1/2 pi i) \int e^{s^3/3 - y s} ds on the
/// vertical line Re s = c > 0, at the current default precision.
airycoef::numeric::BigFloat airy_by_quadrature(const airycoef::numeric::BigFloat& y, double c);

}  // namespace testsupport
