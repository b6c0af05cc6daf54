#include "latcurve/counting.hpp"

#include <doctest.h>

#include <set>

using namespace latcurve;

namespace {

BivariatePolynomial P(const char* s) { return parse_polynomial(s); }

bool strictly_inside(const Rational& s, const OpenDomain& d)
{
    return s > d.left.where.hi && s < d.right.where.lo;
}

// Checks every flag of every piece at rational branch points (x, f(x)).
void check_flags(const AlgebraicBranch& b, const IntervalPartition& part, std::size_t D, const Rational& N,
                 const Rational& delta, const std::vector<std::pair<Rational, Rational>>& samples)
{
    std::size_t used = 0;
    for (const auto& [x, y] : samples) {
        for (const auto& piece : part.pieces) {
            if (!strictly_inside(x, piece.interval)) continue;
            ++used;
            const auto c = taylor_coefficients(b.curve, x, y, static_cast<unsigned>(D - 1));
            for (std::size_t i = 0; i < D; ++i) {
                const Rational bound = N * pow_of(delta, static_cast<unsigned>(i));
                if (piece.flags[i] == BoundFlag::small) CHECK(abs_of(c[i]) <= bound);
                else CHECK(abs_of(c[i]) >= bound);
            }
        }
    }
    CHECK(used > 0);
}

} // namespace

TEST_CASE("H_k sequence")
{
    const auto h = hk_sequence(P("y^2 - x^3"), 2);
    CHECK(h[0] == P("-3*x^2"));
    CHECK(h[1] == P("-24*x*y^2 + 18*x^4"));
    CHECK(h[1].to_string() == "18*x^4 - 24*x*y^2");

    const auto p = hk_sequence(P("y - x^2"), 2);
    CHECK(p[0] == P("-2*x"));
    CHECK(p[1] == P("-2"));

    CHECK_THROWS_AS(hk_sequence(P("3"), 2), InputError);
    CHECK_THROWS_AS(hk_sequence(P("y"), 0), InputError);
}

TEST_CASE("H_k degree bound")
{
    for (const char* f : {"x - y^2", "x - y^5", "x*y - 12", "x^2 + y^2 - 65", "y^2 - x^3 - x - 1", "x^2 - 2*y^2 - 1",
                          "y^3 + x^2*y - 7*x^3 + x"}) {
        const auto F = P(f);
        const long d = F.degree();
        const auto H = hk_sequence(F, 8);
        for (long k = 1; k <= 8; ++k) CHECK(H[static_cast<std::size_t>(k - 1)].degree() <= (k - 1) * (2 * d - 3) + d - 1);
    }
}

TEST_CASE("Taylor coefficients at rational curve points")
{
    CHECK(taylor_coefficients(P("y^2 - x^3 - x - 1"), 0, 1, 2) == std::vector<Rational>{1, Rational(1, 2), Rational(-1, 8)});
    CHECK(taylor_coefficients(P("y - x^2"), 3, 9, 3) == std::vector<Rational>{9, 6, 1, 0});
    CHECK(taylor_coefficients(P("x*y - 12"), 3, 4, 2) == std::vector<Rational>{4, Rational(-4, 3), Rational(4, 9)});

    const auto b = make_branch(P("x*y - 12"), Orientation::x_over_y, 1, 12, 3, 4);
    const auto c = taylor_coefficients(b, 6, 3);
    // 12/x at 6: 2, -1/3, 1/18, -1/108
    CHECK(c == std::vector<Rational>{2, Rational(-1, 3), Rational(1, 18), Rational(-1, 108)});

    CHECK_THROWS_WITH(taylor_coefficients(P("x^2 + y^2 - 25"), 5, 0, 2), "branch is singular/vertical here");
    CHECK_THROWS_AS(taylor_coefficients(P("x^2 + y^2 - 25"), 1, 1, 2), InputError);
}

TEST_CASE("level-set abscissas")
{
    const auto par = make_branch(P("y - x^2"), Orientation::x_over_y, -5, 5, 0, 0);
    const auto one = level_set_abscissas(par, 1, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].lo <= 1);
    CHECK(one[0].hi >= 1);
    CHECK(one[0].poly->sign_at(Rational(1)) == 0);

    const auto sub = make_branch(P("y - x^2"), Orientation::x_over_y, 1, 2, 1, 1);
    CHECK(level_set_abscissas(sub, 1, 0).empty());

    const auto hyp = make_branch(P("x*y - 12"), Orientation::x_over_y, 1, 12, 3, 4);
    const auto two = level_set_abscissas(hyp, 1, -3);
    REQUIRE(two.size() == 1);
    CHECK(two[0].lo <= 2);
    CHECK(two[0].hi >= 2);

    // A derivative that is constant along the whole curve has no level set.
    CHECK_THROWS_WITH_AS(level_set_abscissas(par, 2, 1), doctest::Contains("degenerate level set"), InputError);
}

TEST_CASE("level-set count is within the Bezout bound")
{
    const auto circle = make_branch(P("x^2 + y^2 - 25"), Orientation::x_over_y, Rational(-7, 2), Rational(7, 2), 0, 5);
    const auto G = circle.oriented();
    const auto H = hk_sequence(G, 4);
    for (unsigned i = 1; i <= 4; ++i)
        for (const Rational& c : {Rational(1, 3), Rational(-1, 2), Rational(2), Rational(-1, 20)}) {
            const auto R = level_polynomial(G, H, i, c);
            CHECK(static_cast<long>(level_set_abscissas(circle, i, c).size()) <= static_cast<long>(G.degree()) * R.degree());
        }
}

TEST_CASE("partition of y = x^2 on [0, 10]")
{
    const auto b = make_branch(P("y - x^2"), Orientation::x_over_y, 0, 10, 3, 9);
    const auto part = partition_by_bounds(b, 2, 100, Rational(1, 20));
    REQUIRE(part.pieces.size() == 2);
    const auto& cut = part.pieces[0].interval.right.where;
    CHECK((cut.exact() && cut.lo == Rational(5, 2)));
    CHECK(part.pieces[0].flags[1] == BoundFlag::small);
    CHECK(part.pieces[1].flags[1] == BoundFlag::large);
    CHECK(large_interval_check(part.pieces[1].interval, 1, 100, Rational(1, 20)));

    std::vector<std::pair<Rational, Rational>> samples;
    for (long k = 1; k < 40; ++k) samples.emplace_back(Rational(k, 4), Rational(k * k, 16));
    check_flags(b, part, 2, 100, Rational(1, 20), samples);
}

TEST_CASE("partition of low-degree and flat branches")
{
    // f = x: f'' = 0 and f' = 1 never cross the thresholds.
    const auto line = make_branch(P("y - x"), Orientation::x_over_y, 0, 10, 1, 1);
    const auto a = partition_by_bounds(line, 3, 100, 1);
    REQUIRE(a.pieces.size() == 1);
    CHECK(a.pieces[0].all_small());

    // N delta = 1 = f' on the whole line: still one small piece.
    const auto b = partition_by_bounds(line, 3, 100, Rational(1, 100));
    REQUIRE(b.pieces.size() == 1);
    CHECK(b.pieces[0].flags[1] == BoundFlag::small);

    const auto hyp = make_branch(P("x*y - 12"), Orientation::x_over_y, 1, 12, 3, 4);
    const auto c = partition_by_bounds(hyp, 3, 1000000, 1);
    REQUIRE(c.pieces.size() == 1);
    CHECK(c.pieces[0].all_small());
}

TEST_CASE("partition flags agree with exact derivatives at rational points")
{
    const auto hyp = make_branch(P("x*y - 12"), Orientation::x_over_y, 1, 12, 3, 4);
    const auto part = partition_by_bounds(hyp, 4, 12, Rational(1, 2));
    CHECK(part.pieces.size() > 1);
    std::vector<std::pair<Rational, Rational>> samples;
    for (long k = 9; k < 96; ++k) samples.emplace_back(Rational(k, 8), Rational(96, k));
    check_flags(hyp, part, 4, 12, Rational(1, 2), samples);

    // Upper unit circle scaled by 5, sampled at rational points
    // x = 5 (1 - t^2) / (1 + t^2), y = 10 t / (1 + t^2).
    const auto circle = make_branch(P("x^2 + y^2 - 25"), Orientation::x_over_y, Rational(-7, 2), Rational(7, 2), 0, 5);
    const auto cp = partition_by_bounds(circle, 4, 5, Rational(1, 3));
    CHECK(cp.pieces.size() > 1);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long k = 1; k < 200; ++k) {
        const Rational t(k, 100);
        pts.emplace_back(5 * (1 - t * t) / (1 + t * t), 10 * t / (1 + t * t));
    }
    check_flags(circle, cp, 4, 5, Rational(1, 3), pts);
}

TEST_CASE("large-interval check")
{
    CHECK(large_interval_check(0, 40, 1, 100, Rational(1, 20)));
    CHECK_FALSE(large_interval_check(0, 60, 1, 100, Rational(1, 20)));
    CHECK(large_interval_check(Rational(5, 2), 10, 1, 100, Rational(1, 20)));
}

TEST_CASE("graph decomposition examples")
{
    const auto circle = graph_decompose(P("x^2 + y^2 - 25"), 5);
    std::set<LatticePoint> covered;
    std::size_t x_over_y = 0, y_over_x = 0;
    for (std::size_t i = 0; i < circle.branches.size(); ++i) {
        (circle.branches[i].orientation == Orientation::x_over_y ? x_over_y : y_over_x)++;
        for (const auto& p : circle.branch_points[i]) covered.insert(p);
    }
    for (const auto& p : circle.exceptions) covered.insert(p);
    CHECK(x_over_y > 0);
    CHECK(y_over_x > 0);
    CHECK(covered == std::set<LatticePoint>{{3, 4}, {4, 3}});

    const auto par = graph_decompose(P("y - x^2"), 10);
    std::set<LatticePoint> pp;
    for (const auto& bp : par.branch_points) pp.insert(bp.begin(), bp.end());
    pp.insert(par.exceptions.begin(), par.exceptions.end());
    CHECK(pp == std::set<LatticePoint>{{1, 1}, {2, 4}, {3, 9}});

    const auto line = graph_decompose(P("x - y"), 10);
    REQUIRE(line.branches.size() == 1);
    CHECK(line.branches[0].orientation == Orientation::x_over_y);
    CHECK(line.branch_points[0].size() == 10);
}

TEST_CASE("branches have slope at most one in their orientation")
{
    const auto dec = graph_decompose(P("x^2 + y^2 - 25"), 5);
    for (long k = 1; k < 100; ++k) {
        const Rational t(k, 50);
        const Rational x = 5 * (1 - t * t) / (1 + t * t), y = 10 * t / (1 + t * t);
        for (const auto& b : dec.branches) {
            const Rational u = b.orientation == Orientation::x_over_y ? x : y;
            const Rational v = b.orientation == Orientation::x_over_y ? y : x;
            if (!strictly_inside(u, b.domain)) continue;
            const auto r = b.value_at(u);
            if (v < r.lo || v > r.hi) continue;
            const auto c = taylor_coefficients(b.oriented(), u, v, 1);
            CHECK(abs_of(c[1]) <= 1);
        }
    }
}

TEST_CASE("decomposition is complete and disjoint on the fixtures")
{
    const std::vector<std::pair<const char*, long>> cases{
        {"x - y^2", 100},        {"x - y^3", 100},           {"x*y - 12", 100},       {"x^2 + y^2 - 25", 30},
        {"x^2 + y^2 - 65", 30},  {"y^2 - x^3 - x - 1", 50},  {"x^2 - 2*y^2 - 1", 50}, {"x^2 + y^2 - 5*x*y + 5", 60},
    };
    for (const auto& [f, n] : cases) {
        CAPTURE(f);
        const auto F = P(f);
        const auto dec = graph_decompose(F, n);
        std::vector<LatticePoint> all;
        for (const auto& bp : dec.branch_points) all.insert(all.end(), bp.begin(), bp.end());
        all.insert(all.end(), dec.exceptions.begin(), dec.exceptions.end());
        std::sort(all.begin(), all.end());
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        std::vector<LatticePoint> brute;
        for (long x = 1; x <= n; ++x)
            for (long y = 1; y <= n; ++y)
                if (F.vanishes_at(x, y)) brute.push_back({x, y});
        CHECK(all == brute);
    }
}
