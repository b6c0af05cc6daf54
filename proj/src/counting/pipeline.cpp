#include "counting_internal.hpp"

#include <algorithm>
#include <map>

namespace latcurve {

unsigned default_ell(int d, const Integer& N)
{
    unsigned k = 0;
    Integer p = 1;
    while (p < N) {
        p *= 2;
        ++k;
    }
    return std::max(static_cast<unsigned>(d), k);
}

Rational default_delta(int d, unsigned ell, const Integer& N)
{
    const Integer base = Integer(static_cast<unsigned long>(d) * ell);
    const Integer K = base * base;
    Integer K2d;
    mpz_pow_ui(K2d.get_mpz_t(), K.get_mpz_t(), 2UL * static_cast<unsigned long>(d));
    return make_rational(K2d, N);
}

BivariatePolynomial ingest_curve(const BivariatePolynomial& F)
{
    if (F.is_constant()) throw InputError("curve must be nonconstant");
    const BivariatePolynomial Fi = F.primitive_integral();
    if (Fi.degree() < 2) throw InputError("the determinant method needs degree >= 2");
    if (Fi.degree_in(Variable::x) < 1 || Fi.degree_in(Variable::y) < 1)
        throw InputError("curve is a union of axis-parallel lines");
    if (reduced_resultant_y(Fi, Fi.partial(Variable::y)).is_zero()) throw InputError("curve is not square-free in y");
    if (reduced_resultant_y(Fi.transposed(), Fi.partial(Variable::x).transposed()).is_zero())
        throw InputError("curve is not square-free in x");
    if (detail::content_in_y(Fi).degree() >= 1) throw InputError("curve has a vertical line component");
    if (detail::content_in_y(Fi.transposed()).degree() >= 1) throw InputError("curve has a horizontal line component");
    return Fi;
}

namespace {

struct OrientedSetup {
    BivariatePolynomial G;
    MonomialSet M;
    std::optional<PartitionContext> ctx;
};

LatticePoint orient(const LatticePoint& p, Orientation o)
{
    return o == Orientation::x_over_y ? p : LatticePoint{p.y, p.x};
}

// Whether the original point p lies on the branch above the integer range [lo, hi].
bool on_branch_piece(const AlgebraicBranch& b, const BivariatePolynomial& G, const std::vector<Integer>& other_critical,
                     const Integer& lo, const Integer& hi, const LatticePoint& p)
{
    const LatticePoint q = orient(p, b.orientation);
    if (q.x < lo || q.x > hi) return false;
    if (std::binary_search(other_critical.begin(), other_critical.end(), q.y)) return false;
    const IntPoly fiber = G.integral_at_x(q.x);
    if (fiber.degree() < 1 || fiber.eval(q.y) != 0) return false;
    const SturmSequence s(square_free_part(fiber));
    const int index = s.variations_at_minus_infinity() - s.variations(Rational(q.y)) - 1;
    return index == static_cast<int>(b.root_index);
}

} // namespace

CountReport determinant_method_count(const BivariatePolynomial& F, const Integer& N, const CountOptions& options)
{
    if (N < 1) throw InputError("box size must be at least 1");
    const BivariatePolynomial Fi = ingest_curve(F);
    const int d = Fi.degree();
    const unsigned ell = options.ell ? *options.ell : default_ell(d, N);
    if (ell < static_cast<unsigned>(d)) throw InputError("ell must be at least the degree");
    const Rational delta = options.delta ? *options.delta : default_delta(d, ell, N);
    const DerivativeBoundSpec spec{Rational(N), delta, Rational(N)};
    spec.validate();

    CountReport report;
    report.parameters = {N, d, ell, delta, "", "box {1..N}^2"};
    const GraphDecomposition dec = graph_decompose(Fi, N);
    std::map<LatticePoint, unsigned> seen;

    OrientedSetup setup[2];
    for (std::size_t bi = 0; bi < dec.branches.size(); ++bi) {
        const AlgebraicBranch& b = dec.branches[bi];
        const int o = b.orientation == Orientation::x_over_y ? 0 : 1;
        OrientedSetup& S = setup[o];
        if (!S.ctx) {
            S.G = b.oriented();
            S.M = punctured_set(static_cast<unsigned>(d), ell, corner_index(S.G));
            S.ctx.emplace(S.G, S.M.D, Rational(N), delta, Rational(0), Rational(N));
            report.parameters.monomials += (report.parameters.monomials.empty() ? "" : "; ") +
                                           std::string(to_string(b.orientation)) + " " + S.M.descriptor;
        }
        const std::vector<Integer>& other_critical = o == 0 ? dec.critical_y : dec.critical_x;

        std::vector<LatticePoint> oriented_points;
        for (const auto& p : dec.branch_points[bi]) oriented_points.push_back(orient(p, b.orientation));

        BranchReport br;
        br.descriptor = b.describe();
        br.orientation = b.orientation;
        for (const auto& piece : S.ctx->partition(b).pieces) {
            PieceReport pr;
            pr.interval = to_string(piece.interval);
            pr.flags = piece.flags;
            const Integer lo = std::max(Integer(1), piece.interval.left.first_integer_above());
            const Integer hi = std::min(N, piece.interval.right.last_integer_below());
            std::vector<LatticePoint> in_piece;
            for (const auto& q : oriented_points)
                if (q.x >= lo && q.x <= hi) in_piece.push_back(q);

            if (piece.all_small()) {
                pr.covered = true;
                pr.certificate = greedy_cover(in_piece, S.M, S.G);
                pr.certificate.parameters.N = Rational(N);
                pr.certificate.parameters.X = Rational(N);
                pr.certificate.parameters.delta = delta;
                std::map<LatticePoint, bool> found;
                for (const auto& g : pr.certificate.curves) {
                    CurveCount cc;
                    cc.curve = b.orientation == Orientation::x_over_y ? g : g.transposed();
                    for (const auto& p : bezout_intersect(Fi, cc.curve, N)) {
                        if (!on_branch_piece(b, S.G, other_critical, lo, hi, p)) continue;
                        cc.points.push_back(p);
                        found[p] = true;
                    }
                    pr.curves.push_back(std::move(cc));
                }
                for (const auto& q : in_piece)
                    if (!found.count(b.to_original(q))) throw VerificationError("cover curve missed the point " + to_string(b.to_original(q)));
                for (const auto& [p, unused] : found) ++seen[p];
                const Rational spread = in_piece.empty() ? Rational(0) : Rational(in_piece.back().x - in_piece.front().x);
                pr.budget = curve_budget(spread, spec, S.M);
                pr.budget_ok = Integer(static_cast<unsigned long>(pr.certificate.curves.size())) <= pr.budget;
                if (!pr.budget_ok) {
                    report.warnings.push_back("curve budget exceeded on " + br.descriptor + " piece " + pr.interval);
                    report.failed = true;
                }
            } else {
                const std::size_t k = *piece.first_large();
                if (k >= 1) {
                    pr.large_index = static_cast<unsigned>(k);
                    pr.length_ok = large_interval_check(piece.interval, static_cast<unsigned>(k), Rational(N), delta);
                    if (!pr.length_ok) {
                        report.warnings.push_back("large-derivative piece longer than 2/delta on " + br.descriptor);
                        report.failed = true;
                    }
                }
                for (const auto& q : in_piece) {
                    pr.direct_points.push_back(b.to_original(q));
                    ++seen[b.to_original(q)];
                }
            }
            br.pieces.push_back(std::move(pr));
        }
        report.branches.push_back(std::move(br));
    }

    report.exceptions = dec.exceptions;
    for (const auto& p : dec.exceptions) ++seen[p];
    report.points.assign(seen.begin(), seen.end());
    report.total = static_cast<unsigned long>(seen.size());

    if (options.with_oracle) {
        const BruteForceResult bf = brute_force_count(Fi, N);
        report.oracle_total = bf.total;
        std::vector<LatticePoint> mine;
        for (const auto& [p, m] : report.points) mine.push_back(p);
        std::vector<LatticePoint> theirs = bf.points;
        std::sort(theirs.begin(), theirs.end());
        if (mine != theirs) {
            report.warnings.push_back("determinant-method points differ from the brute-force oracle");
            report.failed = true;
        }
    }
    return report;
}

} // namespace latcurve
