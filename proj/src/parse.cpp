#include "numfun/parse.hpp"

#include <cctype>

namespace numfun {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/')? unary)*        juxtaposition multiplies
// unary  := ('+' | '-') unary | power
// power  := atom ('^' ('-')? integer)?
// atom   := integer | 't' | '(' expr ')'
class Parser {
public:
    explicit Parser(const std::string& text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_ += c;
    }

    QRatFunc parse()
    {
        if (s_.empty())
            fail("empty expression");
        QRatFunc r = expr();
        if (pos_ != s_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool starts_atom() const
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
    }

    QRatFunc expr()
    {
        QRatFunc r = term();
        while (peek() == '+' || peek() == '-') {
            char op = s_[pos_++];
            QRatFunc rhs = term();
            r = op == '+' ? r + rhs : r - rhs;
        }
        return r;
    }

    QRatFunc term()
    {
        QRatFunc r = unary();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                r = r * unary();
            } else if (peek() == '/') {
                ++pos_;
                QRatFunc d = unary();
                if (d.is_zero())
                    fail("division by zero");
                r = r / d;
            } else if (starts_atom()) {
                r = r * unary();
            } else {
                return r;
            }
        }
    }

    QRatFunc unary()
    {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    QRatFunc power()
    {
        QRatFunc base = atom();
        if (peek() != '^')
            return base;
        ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        Integer e = integer();
        if (e > 64)
            fail("exponent too large");
        long k = e.get_si();
        if (negative && base.is_zero())
            fail("negative power of zero");
        return base.pow(negative ? -k : k);
    }

    Integer integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    QRatFunc atom()
    {
        char c = peek();
        if (c == 't') {
            ++pos_;
            return QRatFunc(QPoly::variable(Rational(1)));
        }
        if (c == '(') {
            ++pos_;
            QRatFunc r = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return QRatFunc::constant(Rational(integer()));
        fail("expected number, 't' or '('");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

QRatFunc parse_rational_function(const std::string& text) { return Parser(text).parse(); }

QPoly parse_polynomial(const std::string& text)
{
    QRatFunc f = parse_rational_function(text);
    if (!f.is_polynomial())
        throw ParseError("expected a polynomial, got " + to_string(f));
    return f.num();
}

}  // namespace numfun
