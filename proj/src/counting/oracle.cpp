#include "counting_internal.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

namespace latcurve {

namespace detail {

IntPoly content_in_y(const BivariatePolynomial& Fi)
{
    IntPoly g;
    for (const auto& c : Fi.integral_coefficients_in_y()) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive() : gcd(g, c);
        if (g.degree() == 0) break;
    }
    return g;
}

} // namespace detail

namespace {

using detail::content_in_y;

void reject_line_factors(const BivariatePolynomial& Fi, const Integer& N)
{
    const IntPoly vx = content_in_y(Fi);
    if (vx.degree() >= 1) {
        const auto ks = integer_roots_in(vx, Integer(1), N);
        if (!ks.empty()) throw InputError("vertical line factor x = " + ks.front().get_str() + " meets the box");
    }
    const IntPoly hy = content_in_y(Fi.transposed());
    if (hy.degree() >= 1) {
        const auto ks = integer_roots_in(hy, Integer(1), N);
        if (!ks.empty()) throw InputError("horizontal line factor y = " + ks.front().get_str() + " meets the box");
    }
}

std::vector<LatticePoint> sweep(const BivariatePolynomial& Fi, const Integer& lo, const Integer& hi, const Integer& N)
{
    std::vector<LatticePoint> out;
    for (Integer x = lo; x <= hi; ++x) {
        const IntPoly q = Fi.integral_at_x(x);
        if (q.degree() < 1) continue;
        for (const auto& y : integer_roots_in(q, Integer(1), N)) out.push_back({x, y});
    }
    return out;
}

} // namespace

BruteForceResult brute_force_count(const BivariatePolynomial& F, const Integer& N, unsigned threads)
{
    if (F.is_zero()) throw InputError("polynomial is identically zero");
    if (N < 1) throw InputError("box size must be at least 1");
    const BivariatePolynomial Fi = F.primitive_integral();
    reject_line_factors(Fi, N);
    BruteForceResult r;
    if (Fi.degree_in(Variable::y) < 1) return r;

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const unsigned long n = N.get_ui();
    const unsigned long chunks = std::min<unsigned long>(threads, std::max(1UL, n / 64));
    std::vector<std::future<std::vector<LatticePoint>>> parts;
    for (unsigned long c = 0; c < chunks; ++c) {
        const Integer lo = Integer(1) + Integer(n * c / chunks);
        const Integer hi = Integer(n * (c + 1) / chunks);
        parts.push_back(std::async(std::launch::async, sweep, std::cref(Fi), lo, hi, std::cref(N)));
    }
    for (auto& p : parts) {
        auto v = p.get();
        r.points.insert(r.points.end(), v.begin(), v.end());
    }
    r.total = static_cast<unsigned long>(r.points.size());
    return r;
}

std::vector<LatticePoint> bezout_intersect(const BivariatePolynomial& F, const BivariatePolynomial& G, const Integer& N)
{
    static const std::string violated = "Bézout hypothesis violated: the curves share a component";
    if (F.is_zero() || G.is_zero()) throw InputError(violated);
    if (N < 1) throw InputError("box size must be at least 1");
    const auto Fi = F.primitive_integral(), Gi = G.primitive_integral();
    if (F.is_constant() || G.is_constant()) return {};
    if (divides(Fi, Gi) || divides(Gi, Fi)) throw InputError(violated);

    std::set<LatticePoint> found;
    const bool eliminate_y = Fi.degree_in(Variable::y) >= 1 && Gi.degree_in(Variable::y) >= 1;
    const bool eliminate_x = Fi.degree_in(Variable::x) >= 1 && Gi.degree_in(Variable::x) >= 1;
    if (eliminate_y || eliminate_x) {
        const bool swap = !eliminate_y;
        const auto A = swap ? Fi.transposed() : Fi, B = swap ? Gi.transposed() : Gi;
        const IntPoly r = reduced_resultant_y(A, B);
        if (r.is_zero()) throw InputError(violated);
        if (r.degree() >= 1) {
            for (const auto& u : integer_roots_in(r, Integer(1), N)) {
                IntPoly q = A.integral_at_x(u);
                if (q.is_zero()) q = B.integral_at_x(u);
                if (q.is_zero()) throw InputError(violated);
                if (q.degree() < 1) continue;
                for (const auto& v : integer_roots_in(q, Integer(1), N))
                    if (A.vanishes_at(u, v) && B.vanishes_at(u, v)) found.insert(swap ? LatticePoint{v, u} : LatticePoint{u, v});
            }
        }
    } else {
        // One curve depends only on x, the other only on y.
        const auto& X = Fi.degree_in(Variable::y) < 1 ? Fi : Gi;
        const auto& Y = Fi.degree_in(Variable::y) < 1 ? Gi : Fi;
        const IntPoly px = X.transposed().integral_at_x(Integer(0));
        const IntPoly py = Y.integral_at_x(Integer(0));
        if (px.degree() >= 1 && py.degree() >= 1)
            for (const auto& x : integer_roots_in(px, Integer(1), N))
                for (const auto& y : integer_roots_in(py, Integer(1), N)) found.insert({x, y});
    }
    std::vector<LatticePoint> out(found.begin(), found.end());
    const auto cap = static_cast<std::size_t>(Fi.degree()) * static_cast<std::size_t>(Gi.degree());
    if (out.size() > cap) throw VerificationError("Bezout cap exceeded");
    return out;
}

} // namespace latcurve
