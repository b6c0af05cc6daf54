#include "latcurve/exact.hpp"

#include <numeric>

namespace latcurve {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow_of(const Rational& r, unsigned long e)
{
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

int sign_of(const Rational& r) { return sgn(r); }
int sign_of(const Integer& r) { return sgn(r); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& raw)
{
    std::string text;
    for (char ch : raw)
        if (ch != ' ' && ch != '(' && ch != ')') text.push_back(ch);
    if (text.empty()) throw InputError("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0) throw InputError("malformed rational literal '" + raw + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + raw + "'");
    r.canonicalize();
    return r;
}

namespace {

IntegerMatrix clear_row_denominators(const RationalMatrix& m)
{
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return out;
}

// Fraction-free row echelon form in place. Returns pivot columns; `sign`
// accumulates row swaps.
std::vector<std::size_t> bareiss_echelon(IntegerMatrix& a, int& sign)
{
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            a.swap_rows(p, r);
            sign = -sign;
        }
        const Integer piv = a(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Integer lead = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                Integer v = a(i, j) * piv - lead * a(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, c) = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(const IntegerMatrix& m)
{
    IntegerMatrix a = m;
    int sign = 1;
    return bareiss_echelon(a, sign).size();
}

std::size_t matrix_rank(const RationalMatrix& m) { return matrix_rank(clear_row_denominators(m)); }

Integer integer_determinant(const IntegerMatrix& m)
{
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational rational_determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    Rational scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
    }
    return Rational(integer_determinant(clear_row_denominators(m))) / scale;
}


MaximalMinor lexicographic_maximal_minor(const IntegerMatrix& m)
{
    MaximalMinor out;
    // Reduced basis: each stored vector has a leading (pivot) column that is
    // zero in all later-added vectors' reductions.
    std::vector<std::vector<Integer>> basis;
    std::vector<std::size_t> lead_col;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Integer> v(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) v[c] = m(r, c);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::size_t pc = lead_col[b];
            if (v[pc] == 0) continue;
            const Integer f = v[pc];
            const Integer piv = basis[b][pc];
            Integer g = 0;
            for (std::size_t c = 0; c < v.size(); ++c) {
                v[c] = v[c] * piv - f * basis[b][c];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[c].get_mpz_t());
            }
            if (g > 1)
                for (auto& e : v) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
        std::size_t lc = 0;
        while (lc < v.size() && v[lc] == 0) ++lc;
        if (lc == v.size()) continue;
        // Keep the basis fully reduced in the new pivot column.
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b][lc] == 0) continue;
            const Integer f = basis[b][lc];
            const Integer piv = v[lc];
            Integer g = 0;
            for (std::size_t c = 0; c < v.size(); ++c) {
                basis[b][c] = basis[b][c] * piv - f * v[c];
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), basis[b][c].get_mpz_t());
            }
            if (g > 1)
                for (auto& e : basis[b]) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
        basis.push_back(std::move(v));
        lead_col.push_back(lc);
        out.rows.push_back(r);
    }
    IntegerMatrix sub(out.rows.size(), m.cols());
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) sub(i, c) = m(out.rows[i], c);
    int sign = 1;
    out.cols = bareiss_echelon(sub, sign);
    return out;
}

} // namespace latcurve
