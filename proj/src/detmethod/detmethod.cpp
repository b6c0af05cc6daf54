#include "latcurve/detmethod.hpp"

#include <algorithm>
#include <cstdlib>

namespace latcurve {

namespace {

Integer ipow(const Integer& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

unsigned long to_exponent(const Integer& v)
{
    if (v < 0 || !v.fits_ulong_p()) throw InputError("exponent out of range");
    return v.get_ui();
}

// (4 delta |I|)^B (2N)^p (D X)^q
Rational covering_quantity(const Rational& len, const DerivativeBoundSpec& spec, const MonomialSet& M, unsigned long B)
{
    return pow_of(4 * spec.delta * len, B) * pow_of(2 * spec.N, to_exponent(M.p)) *
           pow_of(Rational(static_cast<unsigned long>(M.D)) * spec.X, to_exponent(M.q));
}

unsigned long pair_count(const MonomialSet& M)
{
    return static_cast<unsigned long>(M.D) * (M.D - 1) / 2;
}

BivariatePolynomial normalize_curve(const BivariatePolynomial& g)
{
    return g.primitive_integral();
}

// Incremental rank tracker over Q for the greedy runs.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }

    void add(const std::vector<Integer>& row)
    {
        std::vector<Rational> v(row.begin(), row.end());
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Rational f = v[pivots_[b]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) v[c] -= f * basis_[b][c];
        }
        std::size_t piv = 0;
        while (piv < cols_ && v[piv] == 0) ++piv;
        if (piv == cols_) return;
        const Rational lead = v[piv];
        for (auto& e : v) e /= lead;
        basis_.push_back(std::move(v));
        pivots_.push_back(piv);
    }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> basis_;
    std::vector<std::size_t> pivots_;
};

std::vector<Integer> monomial_row(const LatticePoint& pt, const MonomialSet& M)
{
    std::vector<Integer> row;
    row.reserve(M.D);
    for (const auto& e : M.members) row.push_back(ipow(pt.x, e.j1) * ipow(pt.y, e.j2));
    return row;
}

} // namespace

std::string to_string(const LatticePoint& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; }

void DerivativeBoundSpec::validate() const
{
    if (X <= 0) throw InputError("derivative bound needs X > 0");
    if (N <= 0) throw InputError("derivative bound needs N > 0");
    if (delta * N < 1) throw InputError("derivative bound needs delta * N >= 1");
}

bool CoverCertificate::sound() const
{
    for (const auto& g : curves)
        if (!g.is_integral() || g.is_zero()) return false;
    for (const auto& [pt, idx] : assignment) {
        if (idx >= curves.size()) return false;
        if (!curves[idx].vanishes_at(pt.x, pt.y)) return false;
    }
    return true;
}

IntegerMatrix monomial_matrix(const std::vector<LatticePoint>& points, const MonomialSet& M)
{
    IntegerMatrix A(points.size(), M.D);
    for (std::size_t r = 0; r < points.size(); ++r) {
        const auto row = monomial_row(points[r], M);
        for (std::size_t c = 0; c < M.D; ++c) A(r, c) = row[c];
    }
    return A;
}

std::optional<BivariatePolynomial> extract_cover_curve(const std::vector<LatticePoint>& points, const MonomialSet& M)
{
    if (M.D == 0) return std::nullopt;
    const IntegerMatrix A = monomial_matrix(points, M);
    const MaximalMinor minor = points.empty() ? MaximalMinor{} : lexicographic_maximal_minor(A);
    const std::size_t r = minor.rows.size();
    if (r == M.D) return std::nullopt;

    std::size_t k = 0;
    while (std::find(minor.cols.begin(), minor.cols.end(), k) != minor.cols.end()) ++k;
    std::vector<std::size_t> cols = minor.cols;
    cols.push_back(k);
    std::sort(cols.begin(), cols.end());

    // Expand det [[monomials], [z_S restricted to cols]] along the first row.
    BivariatePolynomial g;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        IntegerMatrix sub(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (j == c) continue;
                sub(i, cc++) = A(minor.rows[i], cols[j]);
            }
        }
        Integer cof = integer_determinant(sub);
        if (cof == 0) continue;
        if (c % 2 == 1) cof = -cof;
        g += BivariatePolynomial::monomial(M.members[cols[c]], Rational(cof));
    }
    if (g.is_zero()) throw std::logic_error("bordered minor expansion vanished");
    return normalize_curve(g);
}

bool segment_coverable(const Rational& interval_length, const DerivativeBoundSpec& spec, const MonomialSet& M)
{
    spec.validate();
    if (interval_length < 0) throw InputError("interval length must be nonnegative");
    if (interval_length == 0) return true;
    return covering_quantity(interval_length, spec, M, pair_count(M)) < 1;
}

Integer curve_budget(const Rational& interval_length, const DerivativeBoundSpec& spec, const MonomialSet& M)
{
    spec.validate();
    if (interval_length < 0) throw InputError("interval length must be nonnegative");
    if (interval_length == 0) return 1;
    const unsigned long B = pair_count(M);
    if (B == 0) throw InputError("curve budget needs a monomial set with D >= 2");
    return integer_kth_root_ceiling(covering_quantity(interval_length, spec, M, B), B) + 1;
}

CoverCertificate greedy_cover(const std::vector<LatticePoint>& points, const MonomialSet& M,
                              const std::optional<BivariatePolynomial>& F)
{
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1].x < points[i].x)) throw InputError("greedy_cover needs points sorted strictly by x");

    CoverCertificate cert;
    cert.parameters.monomials = M.descriptor;
    if (!points.empty()) {
        cert.parameters.interval_lo = Rational(points.front().x);
        cert.parameters.interval_hi = Rational(points.back().x);
    }
    std::size_t start = 0;
    while (start < points.size()) {
        RowSpace space(M.D);
        std::size_t end = start;
        while (end < points.size()) {
            space.add(monomial_row(points[end], M));
            if (space.rank() == M.D) break;
            ++end;
        }
        const std::vector<LatticePoint> run(points.begin() + static_cast<std::ptrdiff_t>(start),
                                            points.begin() + static_cast<std::ptrdiff_t>(end));
        if (run.empty()) {
            // A single point already fills the rank (only when D = 1).
            throw InputError("monomial set too small to cover a single point");
        }
        auto curve = extract_cover_curve(run, M);
        if (!curve) throw std::logic_error("rank-deficient run without cover curve");
        if (F) non_divisibility_guard(*F, *curve);
        const std::size_t idx = cert.curves.size();
        cert.curves.push_back(std::move(*curve));
        for (const auto& pt : run) cert.assignment.emplace_back(pt, idx);
        start = end;
    }
    return cert;
}

Rational fj_derivative_bound(const ExponentPair& j, unsigned i, const DerivativeBoundSpec& spec)
{
    if (i < 1) throw InputError("derivative order must be at least 1");
    return pow_of(2 * spec.N, j.j1) * pow_of(Rational(i) * spec.X, j.j2) * pow_of(spec.delta, i - 1);
}

std::size_t permanent_limit()
{
    if (const char* env = std::getenv("LATCURVE_PERMANENT_LIMIT")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 24) return v;
    }
    return 10;
}

Rational permanent(const RationalMatrix& A)
{
    const std::size_t n = A.rows();
    if (A.cols() != n) throw InputError("permanent needs a square matrix");
    if (n == 0) return 1;
    Rational total = 0;
    const unsigned long subsets = 1UL << n;
    for (unsigned long s = 1; s < subsets; ++s) {
        Rational prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (s & (1UL << j)) row += A(i, j);
            prod *= row;
        }
        const int bits = __builtin_popcountl(s);
        if ((static_cast<int>(n) - bits) % 2 == 0) total += prod;
        else total -= prod;
    }
    return total;
}

Rational interpolation_determinant_bound(const std::vector<Rational>& xs, const RationalMatrix& A)
{
    const std::size_t n = xs.size();
    if (A.rows() != n || A.cols() != n) throw InputError("bound matrix must be square of size |xs|");
    if (n > permanent_limit()) throw InputError("bound matrix too large");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A(i, j) < 0) throw InputError("bound matrix entries must be nonnegative");
    Rational vandermonde = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) vandermonde *= abs_of(xs[i] - xs[j]);
    if (vandermonde == 0) return 0;
    return vandermonde * permanent(A);
}

} // namespace latcurve
