#include "airy_quadrature.hpp"

#include <boost/math/constants/constants.hpp>

namespace testsupport {

using airycoef::numeric::BigFloat;

BigFloat airy_by_quadrature(const BigFloat& y, double c_in) {
  const BigFloat c = c_in;
  // Ai(y) = (1/pi) \int_0^inf e^{c^3/3 - c tau^2 - y c} cos(c^2 tau - tau^3/3 - y tau) dtau
  auto f = [&](const BigFloat& tau) -> BigFloat {
    return exp(c * c * c / 3 - c * tau * tau - y * c) * cos(c * c * tau - tau * tau * tau / 3 - y * tau);
  };
  const BigFloat top = 14;  // e^{-c 14^2} is far below any tolerance used
  BigFloat h = BigFloat(1) / 8;
  BigFloat previous = 0;
  for (int level = 0; level < 12; ++level) {
    BigFloat sum = f(BigFloat(0)) / 2;
    for (BigFloat x = h; x <= top; x += h) sum += f(x);
    const BigFloat value = sum * h / boost::math::constants::pi<BigFloat>();
    if (level > 0 && abs(value - previous) < BigFloat("1e-40")) return value;
    previous = value;
    h /= 2;
  }
  return previous;
}

}  // namespace testsupport
