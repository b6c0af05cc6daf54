#include "latcurve/exact.hpp"

#include <sstream>

namespace latcurve {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Integer& x) const { return sgn(eval(x)); }

int IntPoly::sign_at(const Rational& x) const
{
    if (c_.empty()) return 0;
    if (x.get_den() == 1) return sign_at(x.get_num());
    // sum c_i a^i b^(n-i) has the sign of p(a/b) since b > 0.
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = c_.back();
    Integer bp = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        bp *= b;
        acc = acc * a + c_[static_cast<std::size_t>(i)] * bp;
    }
    return sgn(acc);
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1) return IntPoly();
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const
{
    if (c_.empty()) return {};
    Integer g = content();
    if (c_.back() < 0) g = -g;
    if (g == 1) return *this;
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const
{
    IntPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Integer& k) const
{
    if (k == 0) return {};
    IntPoly out = *this;
    for (auto& v : out.c_) v *= k;
    return out;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw VerificationError("inexact polynomial division");
    std::vector<Integer> rem = a.coeffs();
    const int db = b.degree();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
        Integer& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) throw VerificationError("inexact polynomial division");
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        for (int j = 0; j <= db; ++j) mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), f.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
        q[static_cast<std::size_t>(k)] = std::move(f);
    }
    for (const auto& v : rem)
        if (v != 0) throw VerificationError("inexact polynomial division");
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> rem = a.coeffs();
    const int db = b.degree();
    const Integer& lb = b.leading();
    for (int top = a.degree(); top >= db; --top) {
        const Integer f = rem[static_cast<std::size_t>(top)];
        // rem = lb * rem - f * x^(top-db) * b
        for (int i = 0; i < top; ++i) rem[static_cast<std::size_t>(i)] *= lb;
        rem[static_cast<std::size_t>(top)] = 0;
        if (f != 0)
            for (int j = 0; j < db; ++j) mpz_submul(rem[static_cast<std::size_t>(top - db + j)].get_mpz_t(), f.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
        rem.pop_back();
    }
    return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    IntPoly x = a.primitive();
    IntPoly y = b.primitive();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive();
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::vector<u64> reduce_mod(const IntPoly& p, u64 m)
{
    std::vector<u64> out(p.coeffs().size());
    Integer r;
    const Integer mm(std::to_string(m));
    for (std::size_t i = 0; i < out.size(); ++i) {
        mpz_fdiv_r(r.get_mpz_t(), p[i].get_mpz_t(), mm.get_mpz_t());
        out[i] = std::stoull(r.get_str());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Degree of gcd(a, b) over F_m; -1 when both vanish.
int gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m)
{
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const u64 inv = powmod(b.back(), m - 2, m);
        while (a.size() >= b.size()) {
            const u64 f = mulmod(a.back(), inv, m);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + m - mulmod(f, b[i], m)) % m;
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Sufficient test: a prime not dividing lc(p) for which gcd(p, p') is
// constant mod the prime proves p square-free over Q.
bool square_free_by_modular_gcd(const IntPoly& p)
{
    static constexpr u64 primes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1152921504606846883ULL};
    for (u64 m : primes) {
        const auto a = reduce_mod(p, m);
        if (static_cast<int>(a.size()) - 1 != p.degree()) continue;
        if (gcd_degree_mod(a, reduce_mod(p.derivative(), m), m) == 0) return true;
    }
    return false;
}

} // namespace

IntPoly square_free_part(const IntPoly& p)
{
    if (p.degree() <= 1) return p.primitive();
    if (square_free_by_modular_gcd(p)) return p.primitive();
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return exact_quotient(p.primitive(), g).primitive();
}

// ---------------------------------------------------------------------------

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& v : c_) v.canonicalize();
    trim();
}

UnivariatePolynomial UnivariatePolynomial::from_int(const IntPoly& p)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return UnivariatePolynomial(std::move(c));
}

void UnivariatePolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePolynomial::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UnivariatePolynomial(std::move(d));
}

IntPoly UnivariatePolynomial::to_primitive_int() const
{
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].get_num() * (l / c_[i].get_den());
    return IntPoly(std::move(out)).primitive();
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(out));
}

std::string UnivariatePolynomial::to_string(char var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        Rational mag = abs_of(v);
        if (first) {
            if (v < 0) os << '-';
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1 && i > 0;
        if (!unit) {
            if (mag.get_den() != 1) os << '(' << mag.get_str() << ')';
            else os << mag.get_str();
            if (i > 0) os << '*';
        }
        if (i > 0) os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

} // namespace latcurve
