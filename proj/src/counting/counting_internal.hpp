#pragma once

#include "latcurve/counting.hpp"

namespace latcurve::detail {

/// gcd of the coefficients of y^k of an integral polynomial, as a polynomial in x.
IntPoly content_in_y(const BivariatePolynomial& Fi);

} // namespace latcurve::detail
