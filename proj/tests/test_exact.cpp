#include "latcurve/exact.hpp"

#include <doctest.h>

#include <random>

using namespace latcurve;

namespace {

IntPoly ip(std::initializer_list<long> c)
{
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

// Plain Gaussian elimination over Q, counting pivots.
std::size_t naive_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, rank);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, c) == 0) continue;
            const Rational f = m(r, c) / m(rank, c);
            for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

Integer cofactor_det(const IntegerMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntegerMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Integer term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

} // namespace

TEST_CASE("matrix rank on small examples")
{
    CHECK(matrix_rank(RationalMatrix{{1, 1, 1}, {1, 2, 2}, {1, 3, 3}}) == 2);
    CHECK(matrix_rank(RationalMatrix(3, 3)) == 0);
    CHECK(matrix_rank(RationalMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
}

TEST_CASE("matrix rank agrees with naive elimination")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                m(i, j) = Rational(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
                m(i, j).canonicalize();
            }
        if (r > 2 && rng() % 2) // force a dependent row
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(1, j);
        CHECK(matrix_rank(m) == naive_rank(m));
    }
}

TEST_CASE("integer determinant")
{
    CHECK(integer_determinant(IntegerMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(integer_determinant(IntegerMatrix{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}) == 2);
    CHECK(integer_determinant(IntegerMatrix{{1, 2}, {2, 4}}) == 0);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 4;
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 11) - 5;
        CHECK(integer_determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("real root isolation examples")
{
    const auto sqrt2 = isolate_real_roots(ip({-2, 0, 1}), {0, 2});
    REQUIRE(sqrt2.size() == 1);
    CHECK(sqrt2[0].lo * sqrt2[0].lo <= 2);
    CHECK(sqrt2[0].hi * sqrt2[0].hi >= 2);

    CHECK(isolate_real_roots(ip({1, 0, 1}), {-10, 10}).empty());

    const auto three = isolate_real_roots(ip({-6, 11, -6, 1}), {0, 4});
    REQUIRE(three.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(three[i].lo <= i + 1);
        CHECK(three[i].hi >= i + 1);
        if (i) CHECK(three[i - 1].hi <= three[i].lo);
    }

    CHECK_THROWS_WITH(isolate_real_roots(IntPoly(), {0, 1}), "zero polynomial has no isolation");
}

TEST_CASE("isolation with rational roots on endpoints and midpoints")
{
    // x (x - 1) (2x - 1): roots at both ends and the first bisection point.
    const auto r = isolate_real_roots(ip({0, 1, -3, 2}), {0, 1});
    REQUIRE(r.size() == 3);
    CHECK((r[0].exact() && r[0].lo == 0));
    CHECK((r[1].exact() && r[1].lo == Rational(1, 2)));
    CHECK((r[2].exact() && r[2].lo == 1));

    // Roots close to a known root at the split point.
    const IntPoly p = ip({-1, 2}) * ip({-1001, 2000}) * ip({-999, 2000}); // 1/2, 1001/2000, 999/2000
    const auto q = isolate_real_roots(p, {0, 1});
    REQUIRE(q.size() == 3);
    for (const auto& x : q)
        if (!x.exact()) CHECK(x.poly->sign_at(x.lo) * x.poly->sign_at(x.hi) < 0);
}

TEST_CASE("isolation agrees with Sturm counts on random products")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 400; ++t) {
        IntPoly p = ip({1});
        const int n = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < n; ++k) {
            const long a = static_cast<long>(rng() % 21) - 10, b = 1 + static_cast<long>(rng() % 4);
            p = p * (rng() % 3 == 0 ? ip({a, 0, b}) : ip({-a, b}));
        }
        Rational lo(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        lo.canonicalize();
        Rational hi = lo + Rational(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 2));
        hi.canonicalize();
        const IntPoly sf = square_free_part(p);
        const SturmSequence s(sf);
        const int expected = s.count_half_open(lo, hi) + (sf.sign_at(lo) == 0 ? 1 : 0);
        const auto roots = isolate_real_roots(p, {lo, hi});
        REQUIRE(static_cast<int>(roots.size()) == expected);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            if (r.exact()) {
                CHECK(r.poly->sign_at(r.lo) == 0);
            } else {
                CHECK(r.poly->sign_at(r.lo) * r.poly->sign_at(r.hi) < 0);
                CHECK(s.count_half_open(r.lo, r.hi) == 1);
            }
            if (i) CHECK(roots[i - 1].hi <= r.lo);
        }
    }
}

TEST_CASE("square-free part removes repeated factors")
{
    CHECK(square_free_part(ip({-1, 1}) * ip({-1, 1}) * ip({2, 1})) == ip({-2, 1, 1}));
    CHECK(square_free_part(ip({-2, 0, 1})) == ip({-2, 0, 1}));
    CHECK(square_free_part(ip({0, 0, 0, 3})) == ip({0, 1}));
}

TEST_CASE("root refinement")
{
    const auto r = isolate_real_roots(ip({-2, 0, 1}), {0, 2})[0];
    const auto f = refine_root(r, Rational(1, 100));
    CHECK(f.width() <= Rational(1, 100));
    CHECK(f.lo * f.lo <= 2);
    CHECK(f.hi * f.hi >= 2);

    const auto exact = isolate_real_roots(ip({-2, 1}), {0, 4});
    REQUIRE(exact.size() == 1);
    CHECK(refine_root(exact[0], Rational(1, 2)).lo == 2);

    const RootInterval wide{0, 4, std::make_shared<const IntPoly>(ip({-3, 1}))};
    const auto w = refine_root(wide, Rational(1, 2));
    CHECK(w.width() <= Rational(1, 2));
    CHECK(w.lo <= 3);
    CHECK(w.hi >= 3);
}

TEST_CASE("integer roots")
{
    CHECK(integer_roots(ip({-25, 0, 1})) == std::vector<Integer>{-5, 5});
    CHECK(integer_roots(ip({0, 0, 1})) == std::vector<Integer>{0});
    CHECK(integer_roots(ip({-2, 0, 1})).empty());
    CHECK_THROWS(integer_roots(IntPoly()));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        IntPoly p = ip({static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)});
        p = p * ip({static_cast<long>(rng() % 41) - 20, 1}) * ip({static_cast<long>(rng() % 5) + 1, 0, 1});
        for (const auto& z : integer_roots(p)) CHECK(p.eval(z) == 0);
    }
}

TEST_CASE("integer k-th root ceiling")
{
    CHECK(integer_kth_root_ceiling(8, 3) == 2);
    CHECK(integer_kth_root_ceiling(9, 2) == 3);
    CHECK(integer_kth_root_ceiling(120000, 15) == 3);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        Rational v(1 + static_cast<long>(rng() % 100000), 1 + static_cast<long>(rng() % 50));
        v.canonicalize();
        const unsigned long k = 1 + rng() % 6;
        const Integer m = integer_kth_root_ceiling(v, k);
        Integer mk, m1k;
        mpz_pow_ui(mk.get_mpz_t(), m.get_mpz_t(), k);
        const Integer m1 = m - 1;
        mpz_pow_ui(m1k.get_mpz_t(), m1.get_mpz_t(), k);
        CHECK(v <= Rational(mk));
        CHECK(Rational(m1k) < v);
    }
}
