#include "latcurve/poly2.hpp"

#include <sstream>

namespace latcurve {

namespace {

Rational ipow(const Rational& base, unsigned e) { return pow_of(base, e); }

} // namespace

BivariatePolynomial::BivariatePolynomial(const Rational& c)
{
    if (c != 0) terms_.emplace(ExponentPair{0, 0}, c);
}

BivariatePolynomial BivariatePolynomial::monomial(ExponentPair e, const Rational& c)
{
    BivariatePolynomial p;
    p.add_term(e, c);
    return p;
}

void BivariatePolynomial::add_term(ExponentPair e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool BivariatePolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational BivariatePolynomial::coefficient(ExponentPair e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<ExponentPair, Rational> BivariatePolynomial::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.rbegin();
}

int BivariatePolynomial::degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int BivariatePolynomial::degree_in(Variable v) const
{
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(v == Variable::x ? e.j1 : e.j2));
    return d;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const
{
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * ipow(x, e.j1) * ipow(y, e.j2);
    return acc;
}

bool BivariatePolynomial::vanishes_at(const Integer& x, const Integer& y) const
{
    return evaluate(Rational(x), Rational(y)) == 0;
}

BivariatePolynomial BivariatePolynomial::partial(Variable v) const
{
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        if (v == Variable::x && e.j1 > 0) out.add_term({e.j1 - 1, e.j2}, c * e.j1);
        if (v == Variable::y && e.j2 > 0) out.add_term({e.j1, e.j2 - 1}, c * e.j2);
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::transposed() const
{
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.add_term({e.j2, e.j1}, c);
    return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned e) const
{
    BivariatePolynomial result(1);
    BivariatePolynomial base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

BivariatePolynomial BivariatePolynomial::scaled(const Rational& k) const
{
    if (k == 0) return {};
    BivariatePolynomial out = *this;
    for (auto& [e, c] : out.terms_) c *= k;
    return out;
}

bool BivariatePolynomial::is_integral() const
{
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

BivariatePolynomial BivariatePolynomial::primitive_integral() const
{
    if (terms_.empty()) return {};
    Integer l = 1, g = 0;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : terms_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational k(l, g);
    k.canonicalize();
    if (terms_.rbegin()->second < 0) k = -k;
    return scaled(k);
}

UnivariatePolynomial BivariatePolynomial::substitute_x(const Rational& x0) const
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(Variable::y) + 1)));
    for (const auto& [e, v] : terms_) c[e.j2] += v * ipow(x0, e.j1);
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial BivariatePolynomial::substitute_y(const Rational& y0) const
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(Variable::x) + 1)));
    for (const auto& [e, v] : terms_) c[e.j1] += v * ipow(y0, e.j2);
    return UnivariatePolynomial(std::move(c));
}

IntPoly BivariatePolynomial::integral_at_x(const Integer& x0) const
{
    std::vector<Integer> c(static_cast<std::size_t>(std::max(0, degree_in(Variable::y) + 1)));
    const int dx = degree_in(Variable::x);
    std::vector<Integer> powers(static_cast<std::size_t>(std::max(dx, 0)) + 1);
    powers[0] = 1;
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * x0;
    for (const auto& [e, v] : terms_) mpz_addmul(c[e.j2].get_mpz_t(), v.get_num_mpz_t(), powers[e.j1].get_mpz_t());
    return IntPoly(std::move(c));
}

std::vector<IntPoly> BivariatePolynomial::integral_coefficients_in_y() const
{
    if (!is_integral()) throw std::domain_error("polynomial is not integral");
    const int dy = degree_in(Variable::y);
    const int dx = degree_in(Variable::x);
    std::vector<std::vector<Integer>> raw(static_cast<std::size_t>(std::max(dy, 0)) + 1,
                                          std::vector<Integer>(static_cast<std::size_t>(std::max(dx, 0)) + 1));
    for (const auto& [e, v] : terms_) raw[e.j2][e.j1] = v.get_num();
    std::vector<IntPoly> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    if (terms_.empty()) out.clear();
    return out;
}

BivariatePolynomial BivariatePolynomial::from_coefficients_in_y(const std::vector<IntPoly>& cs)
{
    BivariatePolynomial out;
    for (std::size_t k = 0; k < cs.size(); ++k)
        for (std::size_t i = 0; i < cs[k].coeffs().size(); ++i)
            out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(k)}, Rational(cs[k][i]));
    return out;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial out = a;
    out += b;
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const { return scaled(-1); }

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.j1 + eb.j1, ea.j2 + eb.j2}, ca * cb);
    return out;
}

std::string BivariatePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational mag = abs_of(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool has_var = e.degree() > 0;
        bool wrote = false;
        if (!(mag == 1 && has_var)) {
            if (mag.get_den() != 1) os << '(' << mag.get_str() << ')';
            else os << mag.get_str();
            wrote = true;
        }
        auto var = [&](char name, unsigned p) {
            if (p == 0) return;
            if (wrote) os << '*';
            os << name;
            if (p > 1) os << '^' << p;
            wrote = true;
        };
        var('x', e.j1);
        var('y', e.j2);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

bool divides(const BivariatePolynomial& f, const BivariatePolynomial& g)
{
    if (f.is_zero()) throw InputError("divisibility test by the zero polynomial");
    if (g.is_zero()) return true;
    // Single-divisor division in a monomial order has zero remainder exactly
    // when f divides g.
    const auto [lf_e, lf_c] = f.leading_term();
    BivariatePolynomial r = g;
    while (!r.is_zero()) {
        const auto [le, lc] = r.leading_term();
        if (!lf_e.divides(le)) return false;
        const ExponentPair shift{le.j1 - lf_e.j1, le.j2 - lf_e.j2};
        r = r - BivariatePolynomial::monomial(shift, lc / lf_c) * f;
    }
    return true;
}

unsigned corner_index(const BivariatePolynomial& f)
{
    const int d = f.degree();
    if (d <= 0) throw InputError("corner index needs a nonconstant polynomial");
    for (int i = d; i >= 0; --i)
        if (f.coefficient({static_cast<unsigned>(d - i), static_cast<unsigned>(i)}) != 0) return static_cast<unsigned>(i);
    throw std::logic_error("no top-degree term");
}

} // namespace latcurve
