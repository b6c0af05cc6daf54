#include "latcurve/poly2.hpp"

#include <cctype>

namespace latcurve {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BivariatePolynomial run()
    {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        BivariatePolynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BivariatePolynomial expr()
    {
        BivariatePolynomial acc;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        BivariatePolynomial t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    BivariatePolynomial term()
    {
        BivariatePolynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    BivariatePolynomial factor()
    {
        BivariatePolynomial b = base();
        if (accept('^')) {
            skip();
            const Integer e = natural();
            if (e > 4096) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Integer natural()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return Integer(s_.substr(start, pos_ - start));
    }

    BivariatePolynomial base()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = natural();
            if (accept('/')) {
                Integer den = natural();
                if (den == 0) fail("zero denominator");
                return BivariatePolynomial(make_rational(num, den));
            }
            return BivariatePolynomial(Rational(num));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? BivariatePolynomial::x() : BivariatePolynomial::y();
        }
        if (c == '(') {
            ++pos_;
            BivariatePolynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable '" + std::string(1, c) + "' (only x and y are allowed)");
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

BivariatePolynomial parse_polynomial(const std::string& text) { return Parser(text).run(); }

} // namespace latcurve
