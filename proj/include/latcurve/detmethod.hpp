#pragma once

// Determinant-method core: monomial matrices, cover curves and the exact
// bound evaluators that drive the covering.

#include "latcurve/monomial_sets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcurve {

struct LatticePoint {
    Integer x;
    Integer y;

    bool operator==(const LatticePoint&) const = default;
    bool operator<(const LatticePoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

std::string to_string(const LatticePoint& p);

/// Hypothesis |f^(i)(x)/i!| <= X delta^i on an interval of a box of size N.
struct DerivativeBoundSpec {
    Rational X;
    Rational delta;
    Rational N;

    /// Throws InputError unless X > 0, N > 0 and delta * N >= 1.
    void validate() const;
};

struct CoverParameters {
    std::optional<Rational> N;
    std::optional<Rational> X;
    std::optional<Rational> delta;
    std::string monomials;
    Rational interval_lo = 0;
    Rational interval_hi = 0;
};

struct CoverCertificate {
    std::vector<BivariatePolynomial> curves;
    /// Point and the index of the curve it lies on, in input order.
    std::vector<std::pair<LatticePoint, std::size_t>> assignment;
    CoverParameters parameters;

    /// Every assigned point lies on its curve and every curve is integral.
    bool sound() const;
};

/// Row per point, column per member of M: x^j1 y^j2.
IntegerMatrix monomial_matrix(const std::vector<LatticePoint>& points, const MonomialSet& M);

/// A nonzero integral curve in <M> through all points, obtained by bordering
/// the lexicographically first maximal minor with one further monomial.
/// Normalized to coprime coefficients and positive leading coefficient.
/// Returns nullopt when the monomial matrix has full column rank.
std::optional<BivariatePolynomial> extract_cover_curve(const std::vector<LatticePoint>& points, const MonomialSet& M);

/// (4 delta |I|)^B (2N)^p (D X)^q < 1 with B = C(D,2), evaluated exactly.
bool segment_coverable(const Rational& interval_length, const DerivativeBoundSpec& spec, const MonomialSet& M);

/// Ceiling of 4 delta |I| ((2N)^p (D X)^q)^(1/B), plus one.
Integer curve_budget(const Rational& interval_length, const DerivativeBoundSpec& spec, const MonomialSet& M);

/// Splits x-sorted points into maximal consecutive runs that each admit a
/// cover curve. When F is given every emitted curve is checked against it.
CoverCertificate greedy_cover(const std::vector<LatticePoint>& points, const MonomialSet& M,
                              const std::optional<BivariatePolynomial>& F = std::nullopt);

/// (2N)^j1 (i X)^j2 delta^(i-1).
Rational fj_derivative_bound(const ExponentPair& j, unsigned i, const DerivativeBoundSpec& spec);

/// prod_{i>j} |x_i - x_j| times the permanent of A. Throws InputError("bound
/// matrix too large") above the permanent limit (default 10, overridable by
/// LATCURVE_PERMANENT_LIMIT).
Rational interpolation_determinant_bound(const std::vector<Rational>& xs, const RationalMatrix& A);

/// Ryser's formula.
Rational permanent(const RationalMatrix& A);

std::size_t permanent_limit();

} // namespace latcurve
