#include "latcurve/exact.hpp"

#include <algorithm>

namespace latcurve {

namespace {

constexpr int kMaxBisections = 4096;

int sign_at_minus_infinity(const IntPoly& p)
{
    const int s = sgn(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int>& signs)
{
    int v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

Rational midpoint(const Rational& a, const Rational& b)
{
    Rational m = (a + b) / 2;
    return m;
}

} // namespace

SturmSequence::SturmSequence(const IntPoly& square_free)
{
    if (square_free.is_zero()) throw InputError("zero polynomial has no isolation");
    seq_.push_back(square_free);
    if (square_free.degree() == 0) return;
    seq_.push_back(square_free.derivative().primitive());
    while (seq_.back().degree() > 0) {
        const IntPoly& a = seq_[seq_.size() - 2];
        const IntPoly& b = seq_.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^e * rem; the Sturm step needs -rem up to a positive factor.
        const int e = a.degree() - b.degree() + 1;
        int scale_sign = sgn(b.leading());
        if (e % 2 == 0) scale_sign = 1;
        Integer g = r.content();
        IntPoly next = r;
        if (g > 1) {
            std::vector<Integer> cs(r.coeffs().size());
            for (std::size_t i = 0; i < cs.size(); ++i) mpz_divexact(cs[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
            next = IntPoly(std::move(cs));
        }
        if (scale_sign > 0) next = -next;
        seq_.push_back(std::move(next));
    }
}

int SturmSequence::variations(const Rational& x) const
{
    std::vector<int> s;
    s.reserve(seq_.size());
    for (const auto& p : seq_) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmSequence::variations_at_minus_infinity() const
{
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sign_at_minus_infinity(p));
    return count_variations(s);
}

int SturmSequence::variations_at_plus_infinity() const
{
    std::vector<int> s;
    for (const auto& p : seq_) s.push_back(sgn(p.leading()));
    return count_variations(s);
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const
{
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
}

Rational root_bound(const IntPoly& p)
{
    if (p.degree() <= 0) return 1;
    Rational m = 0;
    const Integer lc = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational q(abs(p[static_cast<std::size_t>(i)]), lc);
        q.canonicalize();
        if (q > m) m = q;
    }
    Rational b = 1;
    while (b <= m + 1) b *= 2;
    return b;
}

namespace {

using Coeffs = std::vector<Integer>;

// c(x) -> c(x + a), in place.
void taylor_shift(Coeffs& c, const Integer& a)
{
    if (a == 0) return;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) mpz_addmul(c[j - 1].get_mpz_t(), a.get_mpz_t(), c[j].get_mpz_t());
}

void reduce_content(Coeffs& c)
{
    Integer g = 0;
    for (const auto& v : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Descartes bound on the number of roots of c in (0, 1): sign variations of
// (1 + x)^n c(1 / (1 + x)). Exact when it is 0 or 1.
int variations_01(const Coeffs& c)
{
    Coeffs r(c.rbegin(), c.rend());
    taylor_shift(r, 1);
    int v = 0, last = 0;
    for (const auto& x : r) {
        const int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

void divide_by_x(Coeffs& c) { c.erase(c.begin()); }

void divide_by_x_minus_one(Coeffs& c)
{
    // Synthetic division; the remainder is zero by construction.
    const std::size_t n = c.size() - 1;
    Coeffs q(n);
    Integer carry = 0;
    for (std::size_t k = n; k >= 1; --k) {
        carry += c[k];
        q[k - 1] = carry;
    }
    c = std::move(q);
}

Integer sum_of(const Coeffs& c)
{
    Integer s = 0;
    for (const auto& v : c) s += v;
    return s;
}

struct Box {
    Rational a, w;
    Coeffs c; // roots in (0, 1) of c are the open-box roots of p under x -> a + w x
    bool root_at_lo = false, root_at_hi = false;
};

} // namespace

std::vector<RootInterval> isolate_real_roots(const IntPoly& p, const RationalRange& range)
{
    if (p.is_zero()) throw InputError("zero polynomial has no isolation");
    if (range.hi < range.lo) throw InputError("empty isolation range");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    auto sf = std::make_shared<const IntPoly>(square_free_part(p));
    const IntPoly& q = *sf;

    if (q.sign_at(range.lo) == 0) out.push_back({range.lo, range.lo, sf});
    if (range.lo == range.hi) return out;

    // Map [lo, hi] onto [0, 1]: lo = u/v, w = s/t gives
    // (vt)^n q((ut + sv x) / (vt)) with integer coefficients.
    const std::size_t n = static_cast<std::size_t>(q.degree());
    const Rational w = range.hi - range.lo;
    const Integer vt = range.lo.get_den() * w.get_den();
    Coeffs c(n + 1);
    {
        Integer pw = 1;
        for (std::size_t i = n + 1; i-- > 0;) {
            c[i] = q[i] * pw;
            pw *= vt;
        }
    }
    taylor_shift(c, range.lo.get_num() * w.get_den());
    {
        const Integer sv = w.get_num() * range.lo.get_den();
        Integer pw = 1;
        for (auto& v : c) {
            v *= pw;
            pw *= sv;
        }
    }
    reduce_content(c);
    Box root{range.lo, w, std::move(c)};
    if (root.c[0] == 0) {
        divide_by_x(root.c);
        root.root_at_lo = true;
    }
    if (sum_of(root.c) == 0) {
        divide_by_x_minus_one(root.c);
        root.root_at_hi = true;
    }
    const bool hi_root = root.root_at_hi;

    std::vector<Box> stack{std::move(root)};
    long budget = 64L * kMaxBisections;
    while (!stack.empty()) {
        if (--budget < 0) throw VerificationError("root isolation exceeded the bisection limit");
        Box b = std::move(stack.back());
        stack.pop_back();
        const int v = variations_01(b.c);
        if (v == 0) continue;
        if (v == 1 && !b.root_at_lo && !b.root_at_hi) {
            out.push_back({b.a, b.a + b.w, sf});
            continue;
        }
        // Left half: 2^m c(x / 2); right half: the left one shifted by 1.
        const std::size_t m = b.c.size() - 1;
        Box left{b.a, b.w / 2, Coeffs(m + 1), b.root_at_lo, false};
        for (std::size_t i = 0; i <= m; ++i) mpz_mul_2exp(left.c[i].get_mpz_t(), b.c[i].get_mpz_t(), static_cast<mp_bitcnt_t>(m - i));
        Box right{b.a + left.w, left.w, left.c, false, b.root_at_hi};
        taylor_shift(right.c, 1);
        if (sum_of(left.c) == 0) {
            out.push_back({right.a, right.a, sf});
            divide_by_x_minus_one(left.c);
            divide_by_x(right.c);
            left.root_at_hi = right.root_at_lo = true;
        }
        reduce_content(left.c);
        reduce_content(right.c);
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
    }
    if (hi_root) out.push_back({range.hi, range.hi, sf});
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootInterval> isolate_real_roots(const UnivariatePolynomial& p, const RationalRange& range)
{
    if (p.is_zero()) throw InputError("zero polynomial has no isolation");
    return isolate_real_roots(p.to_primitive_int(), range);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& p)
{
    if (p.is_zero()) throw InputError("zero polynomial has no isolation");
    const Rational b = root_bound(p);
    return isolate_real_roots(p, {-b, b});
}

RootInterval bisect_root(const RootInterval& r)
{
    if (r.exact()) return r;
    const IntPoly& p = *r.poly;
    const int slo = p.sign_at(r.lo);
    if (slo == 0) return {r.lo, r.lo, r.poly};
    const Rational m = midpoint(r.lo, r.hi);
    const int sm = p.sign_at(m);
    if (sm == 0) return {m, m, r.poly};
    if (sm == slo) return {m, r.hi, r.poly};
    return {r.lo, m, r.poly};
}

RootInterval refine_root(const RootInterval& r, const Rational& width)
{
    if (width <= 0) throw InputError("refinement width must be positive");
    RootInterval cur = r;
    if (!cur.exact() && cur.poly->sign_at(cur.hi) == 0) return {cur.hi, cur.hi, cur.poly};
    while (!cur.exact() && cur.width() > width) cur = bisect_root(cur);
    return cur;
}

RootInterval separate_from_integers(const RootInterval& r)
{
    RootInterval cur = r;
    for (int step = 0; step < kMaxBisections; ++step) {
        if (cur.exact()) return cur;
        const Integer first = ceil_of(cur.lo);
        if (first > cur.hi) return cur;
        if (cur.width() < 1) {
            if (cur.poly->sign_at(first) == 0) return {Rational(first), Rational(first), cur.poly};
        }
        cur = bisect_root(cur);
    }
    throw VerificationError("root separation exceeded the bisection limit");
}

std::optional<Rational> rational_root(const RootInterval& r)
{
    if (r.exact()) return r.lo;
    const IntPoly& p = *r.poly;
    if (p.degree() == 1) return make_rational(-p[0], p[1]);
    // z = lc * x maps rational roots of p onto integer roots of
    // Q(z) = sum a_i lc^(n-1-i) z^i.
    const Integer lc = p.leading();
    const int n = p.degree();
    std::vector<Integer> qc(static_cast<std::size_t>(n) + 1);
    Integer pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        qc[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] * pw;
        pw *= lc;
    }
    qc[static_cast<std::size_t>(n)] = 1;
    auto q = std::make_shared<const IntPoly>(IntPoly(std::move(qc)));
    Rational lo = r.lo * lc, hi = r.hi * lc;
    if (hi < lo) std::swap(lo, hi);
    RootInterval mapped = separate_from_integers({lo, hi, q});
    if (mapped.exact() && mapped.lo.get_den() == 1) return make_rational(mapped.lo.get_num(), lc);
    return std::nullopt;
}

int sign_at_root(const RootInterval& r, const IntPoly& q)
{
    if (q.is_zero()) return 0;
    if (r.exact()) return q.sign_at(r.lo);
    if (q.degree() == 0) return sgn(q[0]);
    const IntPoly qs = square_free_part(q);
    const SturmSequence sturm(qs);
    RootInterval cur = r;
    bool gcd_checked = false;
    for (int step = 0; step < kMaxBisections; ++step) {
        if (cur.exact()) return q.sign_at(cur.lo);
        const int at_lo = qs.sign_at(cur.lo);
        const int inside = (at_lo == 0 ? 1 : 0) + sturm.count_half_open(cur.lo, cur.hi);
        if (inside == 0) return q.sign_at(cur.lo);
        if (!gcd_checked && step >= 6) {
            gcd_checked = true;
            const IntPoly g = gcd(*cur.poly, qs);
            if (g.degree() > 0) {
                const IntPoly gs = square_free_part(g);
                const SturmSequence gst(gs);
                const int common = (gs.sign_at(cur.lo) == 0 ? 1 : 0) + gst.count_half_open(cur.lo, cur.hi);
                if (common > 0) return 0;
            }
        }
        cur = bisect_root(cur);
    }
    throw VerificationError("sign determination exceeded the bisection limit");
}

std::vector<Integer> integer_roots_in(const IntPoly& p, const Integer& lo, const Integer& hi)
{
    if (p.is_zero()) throw InputError("zero polynomial has no integer-root enumeration");
    std::vector<Integer> out;
    if (hi < lo || p.degree() <= 0) return out;
    for (const auto& r : isolate_real_roots(p, {Rational(lo), Rational(hi)})) {
        RootInterval s = separate_from_integers(r);
        if (s.exact() && s.lo.get_den() == 1) out.push_back(s.lo.get_num());
    }
    return out;
}

std::vector<Integer> integer_roots(const IntPoly& p)
{
    if (p.is_zero()) throw InputError("zero polynomial has no integer-root enumeration");
    std::vector<Integer> out;
    if (p.degree() <= 0) return out;
    for (const auto& r : isolate_real_roots(p)) {
        RootInterval s = separate_from_integers(r);
        if (s.exact() && s.lo.get_den() == 1) out.push_back(s.lo.get_num());
    }
    return out;
}

std::vector<Integer> integer_roots(const UnivariatePolynomial& p)
{
    if (p.is_zero()) throw InputError("zero polynomial has no integer-root enumeration");
    return integer_roots(p.to_primitive_int());
}

Integer integer_kth_root_ceiling(const Rational& v, unsigned long k)
{
    if (k == 0) throw InputError("root index must be positive");
    if (v <= 0) throw InputError("k-th root ceiling needs a positive argument");
    // m^k is an integer, so m^k >= v iff m^k >= ceil(v).
    const Integer c = ceil_of(v);
    Integer r;
    mpz_root(r.get_mpz_t(), c.get_mpz_t(), k);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), k);
    if (pw < c) ++r;
    return r;
}

} // namespace latcurve
