#include "branch_internal.hpp"

#include <algorithm>
#include <set>

namespace latcurve {

using detail::at_abscissa;

namespace {

struct Cell {
    OpenDomain domain;
    std::vector<std::size_t> branch_ids; // by root index, npos when not kept
};

// Critical abscissas of the oriented curve G: vertical tangents, poles,
// zeros of G_x, and the slope +-1 loci.
std::vector<IntPoly> critical_polynomials(const BivariatePolynomial& G)
{
    const auto Gx = G.partial(Variable::x), Gy = G.partial(Variable::y);
    const IntPoly disc = reduced_resultant_y(G, Gy);
    if (disc.is_zero()) throw InputError("curve is not square-free in y");
    return {disc, detail::leading_y_coefficient(G), reduced_resultant_y(G, Gx), reduced_resultant_y(G, Gx - Gy),
            reduced_resultant_y(G, Gx + Gy)};
}

std::vector<Integer> integer_values(const std::vector<RootInterval>& roots)
{
    std::vector<Integer> out;
    for (const auto& r : roots)
        if (r.exact() && r.lo.get_den() == 1) out.push_back(r.lo.get_num());
    return out;
}

bool contains(const std::vector<Integer>& sorted, const Integer& v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

} // namespace

GraphDecomposition graph_decompose(const BivariatePolynomial& F, const Integer& N)
{
    if (N < 1) throw InputError("box size must be at least 1");
    if (F.is_constant()) throw InputError("curve must be nonconstant");
    const BivariatePolynomial Fi = F.primitive_integral();
    if (Fi.degree_in(Variable::y) < 1 || Fi.degree_in(Variable::x) < 1)
        throw InputError("curve is a union of axis-parallel lines");

    GraphDecomposition out;
    const Rational zero = 0, top = Rational(N);
    std::vector<RootInterval> crit[2];
    std::vector<Integer> crit_int[2];
    for (int o = 0; o < 2; ++o) {
        const BivariatePolynomial G = o == 0 ? Fi : Fi.transposed();
        crit[o] = merged_roots(critical_polynomials(G), zero, top);
        crit_int[o] = integer_values(crit[o]);
        std::sort(crit_int[o].begin(), crit_int[o].end());
    }
    out.critical_x = crit_int[0];
    out.critical_y = crit_int[1];

    for (int o = 0; o < 2; ++o) {
        const Orientation orient = o == 0 ? Orientation::x_over_y : Orientation::y_over_x;
        const BivariatePolynomial G = o == 0 ? Fi : Fi.transposed();
        const BivariatePolynomial Gx = G.partial(Variable::x), Gy = G.partial(Variable::y);
        const BivariatePolynomial slope = Gx * Gx - Gy * Gy;
        const std::vector<Integer>& other_crit = crit_int[1 - o];

        std::vector<Endpoint> ends{Endpoint::exact(zero, !contains(crit_int[o], Integer(0)))};
        for (const auto& c : crit[o])
            if (c.lo > zero && c.hi < top) ends.push_back({c, false});
        ends.push_back(Endpoint::exact(top, !contains(crit_int[o], N)));

        for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
            const OpenDomain dom{ends[k], ends[k + 1]};
            const Rational s = dom.sample();
            const IntPoly fiber = at_abscissa(G, s);
            if (fiber.degree() < 1) continue;
            const auto roots = isolate_real_roots(fiber);
            std::vector<std::size_t> ids(roots.size(), SIZE_MAX);
            for (std::size_t j = 0; j < roots.size(); ++j) {
                const int w = sign_at_root(roots[j], at_abscissa(slope, s));
                // |G_x| <= |G_y| keeps x-over-y; the transposed side takes the strict complement.
                const bool keep = o == 0 ? w <= 0 : w < 0;
                if (!keep) continue;
                ids[j] = out.branches.size();
                out.branches.push_back({Fi, orient, dom, j, s, roots[j]});
                out.branch_points.emplace_back();
            }
            if (std::all_of(ids.begin(), ids.end(), [](std::size_t v) { return v == SIZE_MAX; })) continue;

            const Integer lo = std::max(Integer(1), dom.left.first_integer_above());
            const Integer hi = std::min(N, dom.right.last_integer_below());
            for (Integer u = lo; u <= hi; ++u) {
                const IntPoly q = G.integral_at_x(u);
                if (q.is_zero()) throw InputError("curve contains the line " + std::string(o == 0 ? "x = " : "y = ") + u.get_str());
                if (q.degree() < 1) continue;
                const auto vs = integer_roots_in(q, Integer(1), N);
                if (vs.empty()) continue;
                const SturmSequence sturm(square_free_part(q));
                const int below_all = sturm.variations_at_minus_infinity();
                for (const auto& v : vs) {
                    const std::size_t index = static_cast<std::size_t>(below_all - sturm.variations(Rational(v)) - 1);
                    if (index >= ids.size() || ids[index] == SIZE_MAX) continue;
                    if (contains(other_crit, v)) continue; // exception point
                    const LatticePoint oriented{u, v};
                    const LatticePoint p = out.branches[ids[index]].to_original(oriented);
                    // Consistency of the sampled orientation at this lattice point.
                    const Rational gx = Gx.evaluate(Rational(u), Rational(v)), gy = Gy.evaluate(Rational(u), Rational(v));
                    const bool ok = o == 0 ? abs_of(gx) <= abs_of(gy) : abs_of(gx) < abs_of(gy);
                    if (!ok) throw VerificationError("branch orientation is inconsistent at " + to_string(p));
                    out.branch_points[ids[index]].push_back(p);
                }
            }
        }
    }

    std::set<LatticePoint> exc;
    for (const auto& x : out.critical_x) {
        if (x < 1 || x > N) continue;
        const IntPoly q = Fi.integral_at_x(x);
        if (q.is_zero()) throw InputError("curve contains the line x = " + x.get_str());
        if (q.degree() < 1) continue;
        for (const auto& y : integer_roots_in(q, Integer(1), N)) exc.insert({x, y});
    }
    const BivariatePolynomial T = Fi.transposed();
    for (const auto& y : out.critical_y) {
        if (y < 1 || y > N) continue;
        const IntPoly q = T.integral_at_x(y);
        if (q.is_zero()) throw InputError("curve contains the line y = " + y.get_str());
        if (q.degree() < 1) continue;
        for (const auto& x : integer_roots_in(q, Integer(1), N)) exc.insert({x, y});
    }
    out.exceptions.assign(exc.begin(), exc.end());
    return out;
}

} // namespace latcurve
