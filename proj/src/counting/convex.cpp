#include "latcurve/counting.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace latcurve {

namespace {

// Segment s runs from points[s] to points[s + 1] with direction vectors[s].
std::size_t segment_of(const JarnikConfiguration& c, const Rational& x)
{
    if (x < 0 || x > Rational(c.Qt())) throw InputError("abscissa outside the Jarnik domain");
    std::size_t s = 0;
    while (s + 1 < c.t() && Rational(c.points[s + 1].x) <= x) ++s;
    return s;
}

// f = A + (a/q)(x - Q) + gamma (x - Q)(x - Q'), gamma = 4 eps / q^2.
std::array<Rational, 3> segment_coefficients(const JarnikConfiguration& c, std::size_t s)
{
    const Rational Q(c.points[s].x), Qn(c.points[s + 1].x), A(c.points[s].y);
    const Rational q(c.vectors[s].first), a(c.vectors[s].second);
    const Rational gamma = 4 * c.epsilon / (q * q);
    const Rational slope = a / q;
    return {A - slope * Q + gamma * Q * Qn, slope - gamma * (Q + Qn), gamma};
}

} // namespace

Rational JarnikConfiguration::value(const Rational& x) const
{
    const auto k = segment_coefficients(*this, segment_of(*this, x));
    return k[0] + k[1] * x + k[2] * x * x;
}

std::vector<Rational> JarnikConfiguration::taylor(const Rational& x, unsigned count) const
{
    const auto k = segment_coefficients(*this, segment_of(*this, x));
    std::vector<Rational> out(count);
    if (count > 0) out[0] = k[0] + k[1] * x + k[2] * x * x;
    if (count > 1) out[1] = k[1] + 2 * k[2] * x;
    if (count > 2) out[2] = k[2];
    return out;
}

JarnikConfiguration jarnik_construct(unsigned H)
{
    if (H < 1) throw InputError("Jarnik construction needs H >= 1");
    JarnikConfiguration c;
    c.H = H;
    for (unsigned q = 1; q <= H; ++q)
        for (unsigned a = 1; a <= H; ++a)
            if (std::gcd(a, q) == 1) c.vectors.emplace_back(Integer(q), Integer(a));
    std::sort(c.vectors.begin(), c.vectors.end(),
              [](const auto& u, const auto& v) { return u.second * v.first < v.second * u.first; });
    c.points.push_back({0, 0});
    for (const auto& [q, a] : c.vectors) c.points.push_back({c.points.back().x + q, c.points.back().y + a});
    c.epsilon = make_rational(1, 4 * c.Qt() * c.Qt());

    // One-sided derivatives at every joint must increase strictly.
    for (std::size_t s = 0; s + 1 < c.t(); ++s) {
        const Rational left = make_rational(c.vectors[s].second, c.vectors[s].first) + 4 * c.epsilon / Rational(c.vectors[s].first);
        const Rational right =
            make_rational(c.vectors[s + 1].second, c.vectors[s + 1].first) - 4 * c.epsilon / Rational(c.vectors[s + 1].first);
        if (!(left < right)) throw VerificationError("Jarnik smoothing breaks convexity at a joint");
    }
    for (std::size_t i = 0; i < c.points.size(); ++i)
        if (c.value(Rational(c.points[i].x)) != Rational(c.points[i].y)) throw VerificationError("Jarnik vertex off the graph");
    return c;
}

bool convex_slope_check(const std::vector<LatticePoint>& points)
{
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1].x < points[i].x)) throw InputError("convex_slope_check needs strictly increasing x");
    for (std::size_t i = 2; i < points.size(); ++i) {
        const Rational s1 = make_rational(points[i - 1].y - points[i - 2].y, points[i - 1].x - points[i - 2].x);
        const Rational s2 = make_rational(points[i].y - points[i - 1].y, points[i].x - points[i - 1].x);
        if (!(s1 < s2)) return false;
    }
    return true;
}

PolynomialOracle::PolynomialOracle(UnivariatePolynomial f, Rational lo, Rational hi)
    : f_(std::move(f)), lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) throw InputError("empty oracle domain");
}

std::vector<Rational> PolynomialOracle::coefficients(const Rational& x, unsigned count) const
{
    if (x < lo_ || x > hi_) throw InputError("abscissa outside the oracle domain");
    std::vector<Rational> out;
    UnivariatePolynomial p = f_;
    Rational fact = 1;
    for (unsigned i = 0; i < count; ++i) {
        if (i > 0) fact *= i;
        out.push_back(p.eval(x) / fact);
        p = p.derivative();
    }
    return out;
}

CountReport convex_cover_count(const TaylorOracle& oracle, unsigned d, const Integer& N, const Rational& delta)
{
    if (N < 1) throw InputError("box size must be at least 1");
    const MonomialSet M = full_set(d);
    const DerivativeBoundSpec spec{Rational(N), delta, Rational(N)};
    spec.validate();

    const Rational lo = std::max(oracle.lo(), Rational(0)), hi = std::min(oracle.hi(), Rational(N));
    std::vector<LatticePoint> candidates;
    for (Integer x = ceil_of(lo); Rational(x) <= hi; ++x) {
        const auto c = oracle.coefficients(Rational(x), static_cast<unsigned>(M.D));
        if (c[0] < 0 || c[0] > Rational(N)) throw VerificationError("oracle value outside [0,N] at x = " + x.get_str());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (abs_of(c[i]) > Rational(N) * pow_of(delta, i))
                throw VerificationError("oracle bound violation at x = " + x.get_str() + " for derivative " + std::to_string(i));
        if (c[0].get_den() == 1) candidates.push_back({x, c[0].get_num()});
    }

    CountReport report;
    report.parameters = {N, static_cast<int>(d), d, delta, M.descriptor, "graph over [0,N]^2"};
    PieceReport piece;
    piece.interval = "[" + to_string(lo) + ", " + to_string(hi) + "]";
    piece.flags.assign(M.D, BoundFlag::small);
    piece.covered = true;
    piece.certificate = greedy_cover(candidates, M);
    piece.certificate.parameters.N = Rational(N);
    piece.certificate.parameters.X = Rational(N);
    piece.certificate.parameters.delta = delta;

    std::set<LatticePoint> all;
    std::map<LatticePoint, unsigned> seen;
    for (const auto& g : piece.certificate.curves) {
        CurveCount cc{g, {}};
        for (const auto& p : candidates)
            if (g.vanishes_at(p.x, p.y)) cc.points.push_back(p);
        if (g.degree() == 1 && cc.points.size() > 2)
            throw VerificationError("a line meets the convex graph in more than two points");
        for (const auto& p : cc.points) ++seen[p];
        piece.curves.push_back(std::move(cc));
    }
    if (seen.size() != candidates.size()) throw VerificationError("cover curves miss a graph point");
    piece.budget = curve_budget(hi - lo, spec, M);
    piece.budget_ok = Integer(static_cast<unsigned long>(piece.certificate.curves.size())) <= piece.budget;
    if (!piece.budget_ok) {
        report.warnings.push_back("curve budget exceeded");
        report.failed = true;
    }
    BranchReport br;
    br.descriptor = "convex graph on " + piece.interval;
    br.pieces.push_back(std::move(piece));
    report.branches.push_back(std::move(br));
    report.points.assign(seen.begin(), seen.end());
    report.total = static_cast<unsigned long>(seen.size());
    return report;
}

} // namespace latcurve
