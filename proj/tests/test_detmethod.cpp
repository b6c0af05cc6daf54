#include "latcurve/detmethod.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace latcurve;

namespace {

std::vector<LatticePoint> pts(std::initializer_list<std::pair<long, long>> v)
{
    std::vector<LatticePoint> out;
    for (auto [x, y] : v) out.push_back({x, y});
    return out;
}

Rational rpow(const Rational& b, unsigned e)
{
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

// Permanent by summing over all permutations.
Rational permanent_by_expansion(const RationalMatrix& A)
{
    std::vector<std::size_t> perm(A.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Rational total = 0;
    do {
        Rational prod = 1;
        for (std::size_t i = 0; i < perm.size(); ++i) prod *= A(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_CASE("monomial matrices")
{
    CHECK(monomial_matrix(pts({{1, 1}, {2, 2}}), full_set(1)) == IntegerMatrix{{1, 1, 1}, {1, 2, 2}});
    CHECK(monomial_matrix(pts({{0, 0}}), full_set(1)) == IntegerMatrix{{1, 0, 0}});
    const auto m = monomial_matrix(pts({{1, 1}, {2, 4}, {3, 9}}), full_set(2));
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 6);
    CHECK(matrix_rank(m) == 3);
}

TEST_CASE("cover curve extraction")
{
    const auto line = extract_cover_curve(pts({{1, 1}, {2, 2}, {3, 3}}), full_set(1));
    REQUIRE(line);
    CHECK(line->to_string() == "y - x");

    const auto parabola = extract_cover_curve(pts({{1, 1}, {2, 4}, {3, 9}, {4, 16}, {5, 25}}), full_set(2));
    REQUIRE(parabola);
    CHECK(parabola->to_string() == "x^2 - y");

    CHECK_FALSE(extract_cover_curve(pts({{0, 0}, {1, 0}, {0, 1}}), full_set(1)));
}

TEST_CASE("cover curves vanish on their points")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const unsigned d = 1 + rng() % 3;
        const auto M = full_set(d);
        std::vector<LatticePoint> p;
        for (std::size_t i = 0; i + 1 < M.D; ++i) p.push_back({static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20});
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        const auto g = extract_cover_curve(p, M);
        REQUIRE(g); // fewer points than monomials
        CHECK(g->is_integral());
        CHECK(M.spans(*g));
        for (const auto& q : p) CHECK(g->vanishes_at(q.x, q.y));
    }
}

TEST_CASE("segment coverability")
{
    const DerivativeBoundSpec spec{100, Rational(1, 100), 100};
    CHECK(segment_coverable(0, spec, full_set(2)));
    CHECK_FALSE(segment_coverable(100, spec, full_set(1)));
    CHECK_FALSE(segment_coverable(100, spec, full_set(3)));

    // (4 delta L)^15 (2N)^4 (D X)^4 < 1 with L = 1/1000.
    const Rational lhs = rpow(Rational(4, 100000), 15) * rpow(200, 4) * rpow(600, 4);
    CHECK(segment_coverable(Rational(1, 1000), spec, full_set(2)) == (lhs < 1));
    CHECK(lhs < 1);
}

TEST_CASE("curve budget")
{
    const DerivativeBoundSpec spec{100, Rational(1, 100), 100};
    CHECK(curve_budget(0, spec, full_set(2)) == 1);

    // Least m with m^15 >= 4^15 * 120000^4, plus one.
    Integer target = 1;
    for (int i = 0; i < 15; ++i) target *= 4;
    for (int i = 0; i < 4; ++i) target *= 120000;
    Integer m = 1;
    for (;; ++m) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), m.get_mpz_t(), 15);
        if (p >= target) break;
    }
    CHECK(curve_budget(100, spec, full_set(2)) == m + 1);

    Integer prev = 0;
    for (Rational L(1, 64); L <= 1024; L *= 2) {
        const Integer b = curve_budget(L, spec, full_set(2));
        CHECK(b >= prev);
        prev = b;
    }
}

TEST_CASE("greedy cover")
{
    const auto sq = greedy_cover(pts({{1, 1}, {2, 4}, {3, 9}, {4, 16}, {5, 25}}), full_set(2));
    CHECK(sq.curves.size() == 1);
    CHECK(sq.sound());

    std::mt19937_64 rng(2024);
    std::vector<LatticePoint> generic;
    std::vector<long> xs;
    while (generic.size() < 7) {
        const long x = 1 + static_cast<long>(rng() % 50);
        if (std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
        xs.push_back(x);
        generic.push_back({x, 1 + static_cast<long>(rng() % 50)});
    }
    std::sort(generic.begin(), generic.end());
    const auto cert = greedy_cover(generic, full_set(1));
    CHECK(cert.curves.size() >= 3);
    CHECK(cert.sound());
    CHECK(cert.assignment.size() == generic.size());

    CHECK(greedy_cover({}, full_set(1)).curves.empty());
    CHECK_THROWS_AS(greedy_cover(pts({{1, 1}, {1, 2}}), full_set(1)), InputError);
}

TEST_CASE("greedy runs are maximal")
{
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) {
        std::vector<LatticePoint> p;
        for (long x = 1; x <= 12; ++x)
            if (rng() % 3) p.push_back({x, static_cast<long>(rng() % 9)});
        const auto M = full_set(1 + rng() % 2);
        const auto cert = greedy_cover(p, M);
        CHECK(cert.sound());
        REQUIRE(cert.assignment.size() == p.size());
        std::size_t start = 0;
        while (start < p.size()) {
            const std::size_t k = cert.assignment[start].second;
            std::size_t end = start;
            while (end < p.size() && cert.assignment[end].second == k) ++end;
            if (end < p.size()) {
                std::vector<LatticePoint> extended(p.begin() + static_cast<long>(start), p.begin() + static_cast<long>(end) + 1);
                CHECK_FALSE(extract_cover_curve(extended, M));
            }
            start = end;
        }
    }
}

TEST_CASE("puncture guard in greedy cover")
{
    const auto F = parse_polynomial("y - x^2");
    CHECK_THROWS_AS(greedy_cover(pts({{1, 1}, {2, 4}, {3, 9}, {4, 16}, {5, 25}}), full_set(2), F), VerificationError);
}

TEST_CASE("derivative bound formula")
{
    const DerivativeBoundSpec spec{5, Rational(1, 10), 10};
    CHECK(fj_derivative_bound({2, 1}, 3, spec) == 60);
    CHECK(fj_derivative_bound({0, 0}, 4, spec) == Rational(1, 1000));
    CHECK(fj_derivative_bound({1, 0}, 1, spec) == 20);
}

TEST_CASE("derivative bound holds for products x^j1 f^j2")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const long n = 10 + static_cast<long>(rng() % 90);
        const Rational N(n), X(1 + static_cast<long>(rng() % 20));
        const Rational delta = Rational(1 + static_cast<long>(rng() % 3), n);
        // f = X sum a_k (x/N)^k with sum 2^k |a_k| <= 1 satisfies the hypothesis on [0, N].
        std::vector<Rational> a(5);
        Rational budget = 1;
        for (std::size_t k = 0; k < a.size(); ++k) {
            const Rational share = budget * Rational(static_cast<long>(rng() % 5), 8) / (1L << k);
            a[k] = (rng() % 2 ? share : Rational(-share));
            budget -= abs_of(a[k]) * (1L << k);
        }
        std::vector<Rational> c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = X * a[k] / rpow(N, static_cast<unsigned>(k));
        const UnivariatePolynomial f(c);
        const DerivativeBoundSpec spec{X, delta, N};
        for (unsigned j1 = 0; j1 <= 2; ++j1)
            for (unsigned j2 = 0; j2 <= 2; ++j2) {
                UnivariatePolynomial g({Rational(1)});
                for (unsigned i = 0; i < j1; ++i) g = g * UnivariatePolynomial({0, 1});
                for (unsigned i = 0; i < j2; ++i) g = g * f;
                Rational fact = 1;
                for (unsigned i = 1; i <= 4; ++i) {
                    if (i > 1) fact *= i - 1;
                    const Rational bound = fj_derivative_bound({j1, j2}, i, spec);
                    for (int s = 0; s <= 49; ++s) {
                        const Rational x = N * s / 49;
                        CHECK(abs_of(g.eval(x)) / fact <= bound);
                    }
                    g = g.derivative();
                }
            }
    }
}

TEST_CASE("interpolation determinant bound")
{
    CHECK(interpolation_determinant_bound({0, 1}, RationalMatrix{{1, 1}, {0, 1}}) == 1);
    CHECK(interpolation_determinant_bound({Rational(3, 2)}, RationalMatrix{{Rational(7, 3)}}) == Rational(7, 3));
    CHECK(interpolation_determinant_bound({2, 5, 2}, RationalMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 0);

    std::vector<Rational> xs(11);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<long>(i);
    CHECK_THROWS_WITH(interpolation_determinant_bound(xs, RationalMatrix(11, 11, Rational(1))), "bound matrix too large");
}

TEST_CASE("permanent limit is read from the environment")
{
    CHECK(permanent_limit() == 10);
    setenv("LATCURVE_PERMANENT_LIMIT", "12", 1);
    CHECK(permanent_limit() == 12);
    std::vector<Rational> xs(11);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<long>(i);
    CHECK(interpolation_determinant_bound(xs, RationalMatrix(11, 11, Rational(0))) == 0);
    setenv("LATCURVE_PERMANENT_LIMIT", "not a number", 1);
    CHECK(permanent_limit() == 10);
    unsetenv("LATCURVE_PERMANENT_LIMIT");
}

TEST_CASE("Ryser permanent matches expansion")
{
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 5;
        RationalMatrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                A(i, j) = Rational(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
                A(i, j).canonicalize();
            }
        CHECK(permanent(A) == permanent_by_expansion(A));
    }
}

TEST_CASE("derivative bound spec validation")
{
    CHECK_NOTHROW((DerivativeBoundSpec{1, Rational(1, 10), 10}.validate()));
    CHECK_THROWS_AS((DerivativeBoundSpec{1, Rational(1, 11), 10}.validate()), InputError);
    CHECK_THROWS_AS((DerivativeBoundSpec{0, 1, 10}.validate()), InputError);
}
