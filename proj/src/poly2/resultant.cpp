#include "latcurve/poly2.hpp"

namespace latcurve {

namespace {

using YPoly = std::vector<IntPoly>; // coefficients of y^k in Z[x]

Integer denominator_lcm(const BivariatePolynomial& p)
{
    Integer l = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

YPoly integral_y_coefficients(const BivariatePolynomial& p, const Integer& scale)
{
    return p.scaled(Rational(scale)).integral_coefficients_in_y();
}

void trim(YPoly& p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void remove_integer_content(YPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.content().get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& c : p) {
        std::vector<Integer> cs(c.coeffs().size());
        for (std::size_t i = 0; i < cs.size(); ++i) mpz_divexact(cs[i].get_mpz_t(), c[i].get_mpz_t(), g.get_mpz_t());
        c = IntPoly(std::move(cs));
    }
}

YPoly pseudo_remainder_y(YPoly g, const YPoly& f)
{
    const std::size_t m = f.size() - 1;
    const IntPoly& lc = f.back();
    trim(g);
    while (g.size() > m) {
        const std::size_t top = g.size() - 1;
        const IntPoly t = g[top];
        for (std::size_t k = 0; k < top; ++k) g[k] = g[k] * lc;
        for (std::size_t j = 0; j < m; ++j) g[top - m + j] = g[top - m + j] - t * f[j];
        g.pop_back();
        trim(g);
        remove_integer_content(g);
    }
    return g;
}

std::vector<std::vector<IntPoly>> sylvester(const YPoly& p, const YPoly& q)
{
    const std::size_t m = p.size() - 1, n = q.size() - 1, s = m + n;
    std::vector<std::vector<IntPoly>> a(s, std::vector<IntPoly>(s));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) a[i][i + k] = p[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) a[n + i][i + k] = q[n - k];
    return a;
}

} // namespace

IntPoly polynomial_determinant(std::vector<std::vector<IntPoly>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return IntPoly({Integer(1)});
    int sign = 1;
    IntPoly prev({Integer(1)});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return {};
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = prev.degree() == 0 && prev[0] == 1 ? std::move(v) : exact_quotient(v, prev);
            }
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

UnivariatePolynomial resultant_eliminating_y(const BivariatePolynomial& p, const BivariatePolynomial& q)
{
    const int m = p.degree_in(Variable::y);
    const int n = q.degree_in(Variable::y);
    if (m <= 0 || n <= 0) throw InputError("resultant requires positive y-degree");
    const Integer sp = denominator_lcm(p), sq = denominator_lcm(q);
    const IntPoly det = polynomial_determinant(sylvester(integral_y_coefficients(p, sp), integral_y_coefficients(q, sq)));
    // Res(sp*p, sq*q) = sp^n sq^m Res(p, q).
    Integer scale, t;
    mpz_pow_ui(scale.get_mpz_t(), sp.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(t.get_mpz_t(), sq.get_mpz_t(), static_cast<unsigned long>(m));
    scale *= t;
    std::vector<Rational> c;
    for (const auto& v : det.coeffs()) c.push_back(make_rational(v, scale));
    return UnivariatePolynomial(std::move(c));
}

IntPoly reduced_resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g)
{
    if (f.degree_in(Variable::y) <= 0) throw InputError("resultant requires positive y-degree");
    YPoly fy = integral_y_coefficients(f, denominator_lcm(f));
    if (g.is_zero()) return {};
    YPoly r = pseudo_remainder_y(integral_y_coefficients(g, denominator_lcm(g)), fy);
    if (r.empty()) return {};
    if (r.size() == 1) return r[0].primitive();
    return polynomial_determinant(sylvester(fy, r)).primitive();
}

} // namespace latcurve
