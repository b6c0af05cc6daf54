#include "branch_internal.hpp"

#include <algorithm>

namespace latcurve {

using detail::at_abscissa;
using detail::compare_roots;

std::vector<RootInterval> merged_roots(const std::vector<IntPoly>& polys, const Rational& lo, const Rational& hi)
{
    std::vector<RootInterval> out;
    for (const auto& p : polys) {
        if (p.is_zero() || p.degree() < 1) continue;
        for (auto r : isolate_real_roots(p, {lo, hi})) {
            bool duplicate = false;
            for (auto& existing : out) {
                if (r.hi < existing.lo || existing.hi < r.lo) continue;
                if (compare_roots(r, existing) == 0) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) out.push_back(std::move(r));
        }
    }
    for (auto& r : out) r = separate_from_integers(r);
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

std::optional<std::size_t> PartitionPiece::first_large() const
{
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i] == BoundFlag::large) return i;
    return std::nullopt;
}

PartitionContext::PartitionContext(const BivariatePolynomial& oriented, std::size_t D, const Rational& N,
                                   const Rational& delta, const Rational& range_lo, const Rational& range_hi)
    : G_(oriented.primitive_integral()), D_(D), N_(N), delta_(delta)
{
    if (D < 2) throw InputError("partition needs D >= 2");
    if (delta <= 0 || N <= 0) throw InputError("partition needs positive N and delta");
    hk_ = hk_sequence(G_, static_cast<unsigned>(std::max<std::size_t>(D - 1, 1)));
    std::vector<IntPoly> level;
    constant_level_.assign(D, false);
    for (std::size_t i = 0; i < D; ++i) {
        const Rational c = N * pow_of(delta, i);
        for (const Rational& v : {c, Rational(-c)}) {
            const BivariatePolynomial R = level_polynomial(G_, hk_, static_cast<unsigned>(i), v);
            const IntPoly r = reduced_resultant_y(G_, R);
            if (r.is_zero()) {
                // f^(i)/i! equals the threshold along the whole curve: no cut,
                // and the sample flags the piece small.
                if (divides(G_, R)) {
                    constant_level_[i] = true;
                    continue;
                }
                throw InputError("degenerate level set: the derivative is constant on the branch");
            }
            level.push_back(r);
        }
    }
    cuts_ = merged_roots(level, range_lo, range_hi);
}

IntervalPartition PartitionContext::partition(const AlgebraicBranch& branch) const
{
    Endpoint left = branch.domain.left, right = branch.domain.right;
    std::vector<RootInterval> inside;
    for (auto cut : cuts_) {
        if (compare_roots(cut, left.where) <= 0) continue;
        if (compare_roots(cut, right.where) >= 0) continue;
        inside.push_back(separate_from_integers(cut));
    }
    std::vector<Endpoint> ends{left};
    for (const auto& c : inside) ends.push_back({c, c.exact()});
    ends.push_back(right);

    const Rational N = N_, delta = delta_;
    const auto Gy = G_.partial(Variable::y);
    IntervalPartition out;
    for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
        PartitionPiece piece;
        piece.interval.left = ends[k];
        if (k > 0) piece.interval.left.closed = false;
        piece.interval.right = ends[k + 1];
        const Rational s = piece.interval.sample();
        const RootInterval y = branch.value_at(s);
        const int gy = sign_at_root(y, at_abscissa(Gy, s));
        if (gy == 0) throw InputError("branch is singular/vertical here");
        for (std::size_t i = 0; i < D_; ++i) {
            const Rational c = N * pow_of(delta, i);
            auto phi = [&](const Rational& v) {
                const int r = sign_at_root(y, at_abscissa(level_polynomial(G_, hk_, static_cast<unsigned>(i), v), s));
                return i == 0 ? r : -r * gy;
            };
            const int above = phi(c);  // sign of f^(i)/i! - c
            const int below = phi(-c); // sign of f^(i)/i! + c
            if ((above == 0 || below == 0) && !constant_level_[i])
                throw VerificationError("partition sample lies on a level set");
            piece.flags.push_back(above <= 0 && below >= 0 ? BoundFlag::small : BoundFlag::large);
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

IntervalPartition partition_by_bounds(const AlgebraicBranch& branch, std::size_t D, const Rational& N,
                                      const Rational& delta)
{
    const PartitionContext ctx(branch.oriented(), D, N, delta, branch.domain.left.where.lo,
                               branch.domain.right.where.hi);
    return ctx.partition(branch);
}

bool large_interval_check(const Rational& lo, const Rational& hi, unsigned, const Rational&, const Rational& delta)
{
    if (delta <= 0) throw InputError("delta must be positive");
    return hi - lo <= 2 / delta;
}

bool large_interval_check(const OpenDomain& piece, unsigned k, const Rational& X, const Rational& delta)
{
    RootInterval a = piece.left.where, b = piece.right.where;
    for (int step = 0; step < detail::kRefineDepth; ++step) {
        if (large_interval_check(a.lo, b.hi, k, X, delta)) return true;
        if (!large_interval_check(a.hi, b.lo, k, X, delta)) return false;
        a = bisect_root(a);
        b = bisect_root(b);
    }
    throw VerificationError("interval length comparison exceeded the refinement depth limit");
}

} // namespace latcurve
