#pragma once

#include "latcurve/branch.hpp"

namespace latcurve::detail {

constexpr int kRefineDepth = 256;

/// P(s, y) as an integer polynomial in y, scaled by a positive factor so
/// signs are preserved.
IntPoly at_abscissa(const BivariatePolynomial& P, const Rational& s);

/// Orders the roots isolated by a and b, refining both in place.
/// Returns -1, 0 (same root) or 1.
int compare_roots(RootInterval& a, RootInterval& b);

/// x - v scaled to integers.
std::shared_ptr<const IntPoly> linear_poly(const Rational& v);

/// Nonzero coefficients of y^k as polynomials in x (after scaling).
IntPoly leading_y_coefficient(const BivariatePolynomial& G);

} // namespace latcurve::detail
