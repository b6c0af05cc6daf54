#pragma once

#include "latcurve/poly2.hpp"

#include <vector>

namespace latcurve {

/// A finite set of exponent pairs in canonical order with its weights
/// D = |M|, p = sum of x-exponents, q = sum of y-exponents.
struct MonomialSet {
    std::vector<ExponentPair> members;
    std::size_t D = 0;
    Integer p = 0;
    Integer q = 0;

    bool contains(const ExponentPair& e) const;
    /// True when the polynomial only uses monomials from this set.
    bool spans(const BivariatePolynomial& g) const;
    /// Short descriptor such as "full(d=2)" or "punctured(d=2,ell=3,iF=2)".
    std::string descriptor;
};

/// Builds a set from arbitrary members (sorted and deduplicated).
MonomialSet make_monomial_set(std::vector<ExponentPair> members, std::string descriptor = "custom");

/// All monomials of total degree at most d.
MonomialSet full_set(unsigned d);

/// Monomials of degree d..ell not divisible by x^(d-iF) y^iF.
MonomialSet punctured_set(unsigned d, unsigned ell, unsigned iF);

/// Checks that F does not divide the cover curve g. Throws
/// VerificationError("puncture violated") otherwise.
bool non_divisibility_guard(const BivariatePolynomial& F, const BivariatePolynomial& g);

} // namespace latcurve
