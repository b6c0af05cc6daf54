#include "branch_internal.hpp"

#include <algorithm>

namespace latcurve {

namespace detail {

IntPoly at_abscissa(const BivariatePolynomial& P, const Rational& s)
{
    const UnivariatePolynomial u = P.substitute_x(s);
    Integer l = 1;
    for (const auto& v : u.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out(u.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.coeffs()[i].get_num() * (l / u.coeffs()[i].get_den());
    return IntPoly(std::move(out));
}

std::shared_ptr<const IntPoly> linear_poly(const Rational& v)
{
    return std::make_shared<const IntPoly>(IntPoly({-v.get_num(), v.get_den()}));
}

IntPoly leading_y_coefficient(const BivariatePolynomial& G)
{
    const auto cs = G.primitive_integral().integral_coefficients_in_y();
    if (cs.empty()) return {};
    return cs.back();
}

int compare_roots(RootInterval& a, RootInterval& b)
{
    bool gcd_checked = false;
    for (int step = 0; step < kRefineDepth; ++step) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        if (a.exact() && b.exact()) return 0; // overlapping exact points coincide
        if (a.exact() && b.poly->sign_at(a.lo) == 0) return 0;
        if (b.exact() && a.poly->sign_at(b.lo) == 0) return 0;
        if (!gcd_checked && step >= 4) {
            gcd_checked = true;
            const IntPoly g = gcd(*a.poly, *b.poly);
            if (g.degree() > 0) {
                const Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                const IntPoly gs = square_free_part(g);
                const int common = (gs.sign_at(lo) == 0 ? 1 : 0) + SturmSequence(gs).count_half_open(lo, hi);
                if (common > 0) return 0;
            }
        }
        a = bisect_root(a);
        b = bisect_root(b);
    }
    throw VerificationError("root comparison exceeded the refinement depth limit");
}

} // namespace detail

using detail::at_abscissa;

std::vector<BivariatePolynomial> hk_sequence(const BivariatePolynomial& F, unsigned kmax)
{
    if (F.is_constant()) throw InputError("H_k needs a nonconstant polynomial");
    if (kmax < 1) throw InputError("H_k needs kmax >= 1");
    const auto Fx = F.partial(Variable::x);
    const auto Fy = F.partial(Variable::y);
    const auto Fy2 = Fy * Fy;
    const auto FyFx = Fy * Fx;
    const auto W = Fy * Fx.partial(Variable::y) - Fx * Fy.partial(Variable::y);
    std::vector<BivariatePolynomial> out;
    out.reserve(kmax);
    out.push_back(Fx);
    for (unsigned k = 1; k < kmax; ++k) {
        const auto& H = out.back();
        out.push_back(Fy2 * H.partial(Variable::x) - FyFx * H.partial(Variable::y) -
                      H.scaled(Rational(2 * k - 1)) * W);
    }
    return out;
}

const char* to_string(Orientation o) { return o == Orientation::x_over_y ? "x-over-y" : "y-over-x"; }

Endpoint Endpoint::exact(const Rational& v, bool closed) { return {{v, v, detail::linear_poly(v)}, closed}; }

Integer Endpoint::first_integer_above() const
{
    if (where.exact()) return closed ? ceil_of(where.lo) : floor_of(where.lo) + 1;
    if (ceil_of(where.lo) <= where.hi) throw std::logic_error("endpoint bracket contains an integer");
    return floor_of(where.hi) + 1;
}

Integer Endpoint::last_integer_below() const
{
    if (where.exact()) return closed ? floor_of(where.lo) : ceil_of(where.lo) - 1;
    if (ceil_of(where.lo) <= where.hi) throw std::logic_error("endpoint bracket contains an integer");
    return ceil_of(where.lo) - 1;
}

Rational OpenDomain::sample() const
{
    if (right.where.lo < left.where.hi) throw std::logic_error("domain endpoints overlap");
    return (left.where.hi + right.where.lo) / 2;
}

BivariatePolynomial AlgebraicBranch::oriented() const
{
    return orientation == Orientation::x_over_y ? curve : curve.transposed();
}

RootInterval AlgebraicBranch::value_at(const Rational& x) const
{
    const IntPoly p = at_abscissa(oriented(), x);
    if (p.is_zero() || p.degree() < 1) throw VerificationError("branch does not exist above " + to_string(x));
    const auto roots = isolate_real_roots(p);
    if (root_index >= roots.size()) throw VerificationError("branch does not exist above " + to_string(x));
    return roots[root_index];
}

LatticePoint AlgebraicBranch::to_original(const LatticePoint& p) const
{
    return orientation == Orientation::x_over_y ? p : LatticePoint{p.y, p.x};
}

std::string to_string(const OpenDomain& d)
{
    auto end = [](const Endpoint& e) {
        if (e.where.exact()) return to_string(e.where.lo);
        return "[" + to_string(e.where.lo) + "," + to_string(e.where.hi) + "]";
    };
    return (d.left.closed ? "[" : "(") + end(d.left) + ", " + end(d.right) + (d.right.closed ? "]" : ")");
}

std::string AlgebraicBranch::describe() const
{
    return std::string(to_string(orientation)) + " root " + std::to_string(root_index) + " on " + to_string(domain);
}

AlgebraicBranch make_branch(const BivariatePolynomial& F, Orientation o, const Rational& lo, const Rational& hi,
                            const Rational& x0, const Rational& y0)
{
    if (hi < lo || x0 < lo || x0 > hi) throw InputError("branch domain must contain the seed abscissa");
    AlgebraicBranch b;
    b.curve = F.primitive_integral();
    b.orientation = o;
    const BivariatePolynomial G = b.oriented();
    if (G.evaluate(x0, y0) != 0) throw InputError("evaluation point must be a rational curve point");
    if (G.partial(Variable::y).evaluate(x0, y0) == 0) throw InputError("branch is singular/vertical here");

    // The domain must avoid vertical tangencies and poles of the branch.
    std::vector<IntPoly> critical{reduced_resultant_y(G, G.partial(Variable::y)), detail::leading_y_coefficient(G)};
    for (const auto& c : critical) {
        if (c.is_zero()) throw InputError("curve is not square-free in y");
        if (c.degree() > 0 && !isolate_real_roots(c, {lo, hi}).empty())
            throw InputError("branch domain contains a critical abscissa");
    }
    b.domain = {Endpoint::exact(lo, true), Endpoint::exact(hi, true)};
    const auto roots = isolate_real_roots(at_abscissa(G, x0));
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (roots[j].lo <= y0 && y0 <= roots[j].hi) {
            b.root_index = j;
            b.seed_x = x0;
            b.seed_y = {y0, y0, roots[j].poly};
            return b;
        }
    }
    throw std::logic_error("seed root not isolated");
}

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t len)
{
    Series out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// F(x0 + t, sum c_i t^i) truncated to len terms.
Series compose(const BivariatePolynomial& F, const Rational& x0, const Series& ys, std::size_t len)
{
    const int dx = std::max(0, F.degree_in(Variable::x));
    const int dy = std::max(0, F.degree_in(Variable::y));
    std::vector<Series> xp(static_cast<std::size_t>(dx) + 1), yp(static_cast<std::size_t>(dy) + 1);
    xp[0] = Series(len);
    xp[0][0] = 1;
    yp[0] = xp[0];
    Series xs(len);
    xs[0] = x0;
    if (len > 1) xs[1] = 1;
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = series_mul(xp[i - 1], xs, len);
    for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = series_mul(yp[i - 1], ys, len);
    Series out(len);
    for (const auto& [e, c] : F.terms()) {
        const Series t = series_mul(xp[e.j1], yp[e.j2], len);
        for (std::size_t i = 0; i < len; ++i) out[i] += c * t[i];
    }
    return out;
}

} // namespace

std::vector<Rational> taylor_coefficients(const BivariatePolynomial& F, const Rational& x0, const Rational& y0,
                                          unsigned kmax)
{
    if (F.evaluate(x0, y0) != 0) throw InputError("evaluation point must be a rational curve point");
    const Rational fy = F.partial(Variable::y).evaluate(x0, y0);
    if (fy == 0) throw InputError("branch is singular/vertical here");
    std::vector<Rational> c{y0};
    if (kmax >= 1) {
        const auto hk = hk_sequence(F, kmax);
        Rational fact = 1;
        for (unsigned k = 1; k <= kmax; ++k) {
            fact *= k;
            c.push_back(-hk[k - 1].evaluate(x0, y0) / (pow_of(fy, 2 * k - 1) * fact));
        }
    }
    // Independent check: the series must solve F = 0 to the computed order.
    const Series residue = compose(F, x0, c, c.size());
    for (const auto& r : residue)
        if (r != 0) throw VerificationError("Taylor coefficients fail the series identity");
    return c;
}

std::vector<Rational> taylor_coefficients(const AlgebraicBranch& branch, const Rational& at, unsigned kmax)
{
    if (at < branch.domain.left.where.lo || at > branch.domain.right.where.hi)
        throw InputError("evaluation point outside the branch domain");
    const RootInterval y = branch.value_at(at);
    const auto y0 = rational_root(y);
    if (!y0) throw InputError("evaluation point must be a rational curve point");
    return taylor_coefficients(branch.oriented(), at, *y0, kmax);
}

BivariatePolynomial level_polynomial(const BivariatePolynomial& G, const std::vector<BivariatePolynomial>& hk, unsigned i,
                                     const Rational& c)
{
    if (i == 0) return BivariatePolynomial::y() - BivariatePolynomial(c);
    if (hk.size() < i) throw std::logic_error("H_k sequence too short");
    Rational fact = 1;
    for (unsigned k = 2; k <= i; ++k) fact *= k;
    return hk[i - 1] + G.partial(Variable::y).pow(2 * i - 1).scaled(fact * c);
}

namespace {

// sign of f^(i)(s)/i! - c on the branch, from R_c.
int level_sign(const AlgebraicBranch& branch, const BivariatePolynomial& G, const BivariatePolynomial& R, unsigned i,
               const Rational& s)
{
    const RootInterval y = branch.value_at(s);
    const int r = sign_at_root(y, at_abscissa(R, s));
    if (i == 0) return r;
    const int gy = sign_at_root(y, at_abscissa(G.partial(Variable::y), s));
    if (gy == 0) throw InputError("branch is singular/vertical here");
    return -r * gy;
}

} // namespace

std::vector<RootInterval> level_set_abscissas(const AlgebraicBranch& branch, unsigned i, const Rational& c)
{
    const BivariatePolynomial G = branch.oriented();
    const auto hk = hk_sequence(G, std::max(i, 1U));
    const BivariatePolynomial R = level_polynomial(G, hk, i, c);
    const IntPoly res = reduced_resultant_y(G, R);
    if (res.is_zero()) throw InputError("degenerate level set: the derivative is constant on the branch");
    std::vector<RootInterval> out;
    if (res.degree() < 1) return out;
    Endpoint left = branch.domain.left, right = branch.domain.right;
    for (auto root : isolate_real_roots(res, {left.where.lo, right.where.hi})) {
        const int cl = detail::compare_roots(root, left.where);
        if (cl < 0 || (cl == 0 && !left.closed)) continue;
        const int cr = detail::compare_roots(root, right.where);
        if (cr > 0 || (cr == 0 && !right.closed)) continue;
        if (root.exact()) {
            if (sign_at_root(branch.value_at(root.lo), at_abscissa(R, root.lo)) == 0) out.push_back(root);
            continue;
        }
        // A sign change of f^(i)/i! - c across the bracket proves the root
        // lies on this branch; without one the root is kept conservatively.
        const int sa = level_sign(branch, G, R, i, root.lo);
        const int sb = level_sign(branch, G, R, i, root.hi);
        if (sa * sb > 0) {
            // Even crossing or a root of another branch: decide on a finer
            // bracket once, then keep if still undecided.
            const RootInterval fine = refine_root(root, root.width() / 1024);
            if (fine.exact()) {
                if (sign_at_root(branch.value_at(fine.lo), at_abscissa(R, fine.lo)) != 0) continue;
            }
        }
        out.push_back(root);
    }
    return out;
}

} // namespace latcurve
