#pragma once

// Exact integer/rational kernels: fraction-free linear algebra and
// univariate real-root isolation with Sturm sequences.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcurve {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised for invalid input (bad syntax, violated preconditions).
/// The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal certificate fails to verify (a soundness bug, or
/// a precondition the caller could not check cheaply).
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den = 1);
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
Rational abs_of(const Rational& r);
Rational pow_of(const Rational& r, unsigned long e);
int sign_of(const Rational& r);
int sign_of(const Integer& r);
std::string to_string(const Rational& r);
/// Parses "a" or "a/b" (optionally parenthesised).
Rational parse_rational(const std::string& text);

// ---------------------------------------------------------------------------
// Dense matrices

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InputError("ragged matrix literal");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Exact rank over Q by fraction-free elimination.
std::size_t matrix_rank(const RationalMatrix& m);
std::size_t matrix_rank(const IntegerMatrix& m);

/// Determinant of a square integer matrix (Bareiss). Empty matrix has det 1.
Integer integer_determinant(const IntegerMatrix& m);
/// Determinant over Q, by clearing row denominators.
Rational rational_determinant(const RationalMatrix& m);

/// Indices of the lexicographically first maximal independent rows, and of
/// the lexicographically first independent columns inside those rows.
struct MaximalMinor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};
MaximalMinor lexicographic_maximal_minor(const IntegerMatrix& m);

// ---------------------------------------------------------------------------
// Univariate polynomials

/// Integer-coefficient polynomial used by the performance-sensitive paths
/// (Sturm sequences, resultants). Index = degree; no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const Integer& leading() const { return c_.back(); }

    int sign_at(const Rational& x) const;
    int sign_at(const Integer& x) const;
    Integer eval(const Integer& x) const;
    IntPoly derivative() const;
    Integer content() const;
    /// Divides by the content and makes the leading coefficient positive.
    IntPoly primitive() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    IntPoly scaled(const Integer& k) const;
    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Exact quotient a / b; throws if b does not divide a over Z.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly square_free_part(const IntPoly& p);

class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs);
    static UnivariatePolynomial from_int(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const;
    UnivariatePolynomial derivative() const;
    /// Primitive integer polynomial with the same roots.
    IntPoly to_primitive_int() const;

    friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    bool operator==(const UnivariatePolynomial&) const = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Real roots

/// Sturm sequence of a square-free integer polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const IntPoly& square_free);
    /// Sign variations at x.
    int variations(const Rational& x) const;
    int variations_at_minus_infinity() const;
    int variations_at_plus_infinity() const;
    /// Number of distinct roots in the half-open interval (a, b].
    int count_half_open(const Rational& a, const Rational& b) const;
    const IntPoly& polynomial() const { return seq_.front(); }

private:
    std::vector<IntPoly> seq_;
};

/// A rational interval isolating exactly one real root of `poly` (which is
/// stored square-free and primitive). lo == hi means the root is exactly lo.
struct RootInterval {
    Rational lo;
    Rational hi;
    std::shared_ptr<const IntPoly> poly;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/// Closed interval with rational endpoints.
struct RationalRange {
    Rational lo;
    Rational hi;
};

/// Positive power of two bounding the absolute value of every real root.
Rational root_bound(const IntPoly& p);

/// Isolates all distinct real roots of p in [range.lo, range.hi], sorted.
std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& p, const RationalRange& range);
std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const RationalRange& range);
/// All real roots.
std::vector<RootInterval> isolate_real_roots(const IntPoly& p);

/// Bisects until hi - lo <= width.
RootInterval refine_root(const RootInterval& r, const Rational& width);
/// Bisects once; keeps the half containing the root.
RootInterval bisect_root(const RootInterval& r);

/// Refines r until it contains no integer other than the root itself.
/// If the root is an integer, returns the degenerate interval at it.
RootInterval separate_from_integers(const RootInterval& r);

/// The root as an exact rational if it is one.
std::optional<Rational> rational_root(const RootInterval& r);

/// Sign of q at the root isolated by r. Refines internally; exact.
int sign_at_root(const RootInterval& r, const IntPoly& q);

/// All integer roots of p, ascending.
std::vector<Integer> integer_roots(const UnivariatePolynomial& p);
std::vector<Integer> integer_roots(const IntPoly& p);
/// Integer roots in [lo, hi].
std::vector<Integer> integer_roots_in(const IntPoly& p, const Integer& lo, const Integer& hi);

/// Smallest natural m with m^k >= v (v > 0, k >= 1).
Integer integer_kth_root_ceiling(const Rational& v, unsigned long k);

} // namespace latcurve
