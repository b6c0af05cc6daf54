#include "latcurve/monomial_sets.hpp"

#include <doctest.h>

using namespace latcurve;

TEST_CASE("full monomial sets")
{
    const auto m2 = full_set(2);
    CHECK(m2.D == 6);
    CHECK(m2.p == 4);
    CHECK(m2.q == 4);
    const auto m1 = full_set(1);
    CHECK(m1.D == 3);
    CHECK(m1.p == 1);
    CHECK(m1.q == 1);
    const auto m3 = full_set(3);
    CHECK(m3.D == 10);
    CHECK(m3.p == 10);
    CHECK(m3.q == 10);
    for (unsigned d = 1; d <= 10; ++d) {
        const auto m = full_set(d);
        CHECK(3 * m.p == d * m.D);
        CHECK(m.p == m.q);
    }
}

TEST_CASE("punctured monomial sets")
{
    const auto a = punctured_set(2, 3, 2);
    CHECK(a.members == std::vector<ExponentPair>{{2, 0}, {1, 1}, {3, 0}, {2, 1}});
    CHECK(a.D == 4);
    CHECK(a.p == 8);
    CHECK(a.q == 2);

    const auto b = punctured_set(3, 3, 0);
    CHECK(b.members == std::vector<ExponentPair>{{2, 1}, {1, 2}, {0, 3}});

    const auto c = punctured_set(2, 2, 1);
    CHECK(c.members == std::vector<ExponentPair>{{2, 0}, {0, 2}});

    CHECK_THROWS_AS(punctured_set(1, 3, 0), InputError);
    CHECK_THROWS_AS(punctured_set(3, 2, 0), InputError);
    CHECK_THROWS_AS(punctured_set(3, 4, 4), InputError);
}

TEST_CASE("punctured sets exclude exactly the multiples of the corner monomial")
{
    for (unsigned d = 2; d <= 6; ++d)
        for (unsigned ell = d; ell <= d + 6; ++ell)
            for (unsigned iF = 0; iF <= d; ++iF) {
                const auto M = punctured_set(d, ell, iF);
                const ExponentPair corner{d - iF, iF};
                for (unsigned h = d; h <= ell; ++h)
                    for (unsigned j2 = 0; j2 <= h; ++j2) {
                        const ExponentPair e{h - j2, j2};
                        CHECK(M.contains(e) == !corner.divides(e));
                    }
                CHECK(M.D == d * (ell - d + 1));
                CHECK(2 * (M.p + M.q) == d * (ell * (ell + 1) - d * (d - 1)));
            }
}

TEST_CASE("non-divisibility guard")
{
    CHECK(non_divisibility_guard(parse_polynomial("x*y - 12"), parse_polynomial("y - x")));
    CHECK_THROWS_WITH_AS(non_divisibility_guard(parse_polynomial("y - x^2"), parse_polynomial("y - x^2")),
                         doctest::Contains("puncture violated"), VerificationError);
    CHECK(non_divisibility_guard(parse_polynomial("x^2 + y^2 - 25"), parse_polynomial("x + y - 7")));
}
