#include <cctype>
#include <string>

#include "yangian/errors.hpp"
#include "yangian/scalar.hpp"

namespace yangian {

namespace {

bool bare_denominator(const Poly& d)
{
    if (d.is_constant())
        return true;
    if (!d.is_monomial() || d.leading().coeff != 1)
        return false;
    int vars = 0;
    for (auto e : d.leading().mono.exp)
        vars += e > 0 ? 1 : 0;
    return vars == 1;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Scalar parse()
    {
        Scalar s = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        Scalar acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term()
    {
        Scalar acc = unary();
        for (;;) {
            if (accept('*'))
                acc *= unary();
            else if (accept('/'))
                acc /= unary();
            else
                return acc;
        }
    }

    Scalar unary()
    {
        if (accept('-'))
            return -unary();
        return power();
    }

    Scalar power()
    {
        Scalar base = atom();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected an integer exponent");
            return base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Scalar atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = expr();
            if (!accept(')'))
                fail("expected ')'");
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Scalar(Poly(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            const auto id = find_param(name);
            if (!id)
                fail("unknown parameter '" + std::string(name) + "'");
            return Scalar::param(*id);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string Scalar::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1)
        n = "(" + n + ")";
    std::string d = den_.to_string();
    if (!bare_denominator(den_))
        d = "(" + d + ")";
    return n + "/" + d;
}

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

} // namespace yangian
