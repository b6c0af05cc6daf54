#pragma once

// Sparse exact bivariate polynomials in x, y.

#include "latcurve/exact.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace latcurve {

struct ExponentPair {
    unsigned j1 = 0; // power of x
    unsigned j2 = 0; // power of y

    unsigned degree() const { return j1 + j2; }
    bool divides(const ExponentPair& other) const { return j1 <= other.j1 && j2 <= other.j2; }
    bool operator==(const ExponentPair&) const = default;
};

/// Canonical term order: graded, and within one total degree the larger
/// x-power comes first. Ascending: 1, x, y, x^2, xy, y^2, ...
struct CanonicalOrder {
    bool operator()(const ExponentPair& a, const ExponentPair& b) const
    {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.j1 > b.j1;
    }
};

enum class Variable { x, y };

class BivariatePolynomial {
public:
    using TermMap = std::map<ExponentPair, Rational, CanonicalOrder>;

    BivariatePolynomial() = default;
    BivariatePolynomial(const Rational& c); // NOLINT(google-explicit-constructor)
    BivariatePolynomial(int c) : BivariatePolynomial(Rational(c)) {} // NOLINT(google-explicit-constructor)

    static BivariatePolynomial monomial(ExponentPair e, const Rational& c = 1);
    static BivariatePolynomial x() { return monomial({1, 0}); }
    static BivariatePolynomial y() { return monomial({0, 1}); }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(ExponentPair e) const;
    /// Highest term in the canonical order.
    std::pair<ExponentPair, Rational> leading_term() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(Variable v) const;

    Rational evaluate(const Rational& x, const Rational& y) const;
    bool vanishes_at(const Integer& x, const Integer& y) const;

    BivariatePolynomial partial(Variable v) const;
    /// F(y, x).
    BivariatePolynomial transposed() const;
    BivariatePolynomial pow(unsigned e) const;
    BivariatePolynomial scaled(const Rational& k) const;

    /// Every coefficient is an integer.
    bool is_integral() const;
    /// Rational multiple with coprime integer coefficients and positive
    /// leading coefficient in the canonical order.
    BivariatePolynomial primitive_integral() const;

    /// F(x0, y) as a polynomial in y.
    UnivariatePolynomial substitute_x(const Rational& x0) const;
    /// F(x, y0) as a polynomial in x.
    UnivariatePolynomial substitute_y(const Rational& y0) const;
    /// F(x0, y) for integral F, as a primitive-free integer polynomial in y.
    IntPoly integral_at_x(const Integer& x0) const;

    /// Coefficients of y^k as integer polynomials in x (requires is_integral()).
    std::vector<IntPoly> integral_coefficients_in_y() const;
    static BivariatePolynomial from_coefficients_in_y(const std::vector<IntPoly>& cs);

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    /// Canonical printed form, highest term first, e.g. "-x^3 + y^2 - 2*x - 3".
    std::string to_string() const;

private:
    void add_term(ExponentPair e, const Rational& c);
    TermMap terms_;
};

/// Parses the polynomial text grammar: integer literals, rational literals
/// a/b (usually written "(a/b)"), variables x and y, + - *, ^ with natural
/// exponents, and parentheses. Throws InputError with the offending position.
BivariatePolynomial parse_polynomial(const std::string& text);

/// Sylvester resultant with respect to y. Both inputs need positive y-degree.
UnivariatePolynomial resultant_eliminating_y(const BivariatePolynomial& p, const BivariatePolynomial& q);

/// A nonzero multiple of resultant_eliminating_y(f, g) by a power of the
/// leading y-coefficient of f, computed after pseudo-reducing g modulo f.
/// Its real roots contain those of the Sylvester resultant. Throws if f has
/// y-degree 0; returns the zero polynomial when f and g share a factor of
/// positive y-degree.
IntPoly reduced_resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// Determinant of a square matrix of integer polynomials (fraction-free).
IntPoly polynomial_determinant(std::vector<std::vector<IntPoly>> m);

/// True iff g = f * h for a polynomial h (exact multivariate division).
bool divides(const BivariatePolynomial& f, const BivariatePolynomial& g);

/// Largest i such that x^(d-i) y^i has a nonzero coefficient, d = deg f.
unsigned corner_index(const BivariatePolynomial& f);

} // namespace latcurve
