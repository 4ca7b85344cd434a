#include <cctype>

#include "mgnef/classes.hpp"
#include "mgnef/errors.hpp"

namespace mgnef {

namespace {

class DivisorParser
{
public:
    DivisorParser(std::string_view text, GenusContext ctx) : text_(text), ctx_(ctx) {}

    DivisorClass parse()
    {
        DivisorClass sum = DivisorClass::zero(ctx_);
        skip_ws();
        if (at_end())
            throw ParseError("empty divisor expression", pos_);
        Rational sign(1);
        if (peek() == '+' || peek() == '-')
        {
            sign = next() == '-' ? Rational(-1) : Rational(1);
            skip_ws();
        }
        sum = sum + sign * term();
        for (;;)
        {
            skip_ws();
            if (at_end())
                break;
            const std::size_t at = pos_;
            const char op = next();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'", at);
            skip_ws();
            sum = sum + (op == '-' ? Rational(-1) : Rational(1)) * term();
        }
        return sum;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char next() { return text_[pos_++]; }
    bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }
    bool is_alpha() const { return !at_end() && std::isalpha(static_cast<unsigned char>(peek())); }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    DivisorClass term()
    {
        const std::size_t start = pos_;
        if (at_end())
            throw ParseError("expected a term", pos_);
        if (is_digit())
        {
            const Rational coeff = number();
            skip_ws();
            if (!at_end() && peek() == '*')
            {
                ++pos_;
                skip_ws();
                return coeff * atom();
            }
            if (is_alpha())
                return coeff * atom();
            if (coeff != 0)
                throw ParseError("bare constant " + to_string(coeff) + " is not a divisor class", start);
            return DivisorClass::zero(ctx_);
        }
        return atom();
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (is_digit())
            ++pos_;
        // "p/q" only when a digit follows the slash.
        if (!at_end() && peek() == '/' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
        {
            ++pos_;
            while (is_digit())
                ++pos_;
        }
        try
        {
            return parse_rational(text_.substr(start, pos_ - start));
        }
        catch (const ParseError& e)
        {
            throw ParseError("bad rational literal", start + e.position());
        }
    }

    DivisorClass atom()
    {
        const std::size_t start = pos_;
        if (!is_alpha())
            throw ParseError("expected L, lambda, d<k>, K or Delta", pos_);
        while (is_alpha())
            ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word == "L" || word == "lambda")
            return lambda_class(ctx_);
        if (word == "K")
            return canonical_class(ctx_);
        if (word == "Delta")
            return boundary_sum(ctx_);
        if (word == "d" || word == "delta")
        {
            const std::size_t digits = pos_;
            while (is_digit())
                ++pos_;
            if (digits == pos_)
                throw ParseError("missing boundary index", digits);
            if (pos_ - digits > 6)
                throw ParseError("boundary index too large", digits);
            const int k = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
            if (k > ctx_.genus())
                throw ParseError("boundary index " + std::to_string(k) + " exceeds genus", digits);
            return delta_class(ctx_, reflect_index(k, ctx_.genus()));
        }
        throw ParseError("unknown symbol '" + std::string(word) + "'", start);
    }

    std::string_view text_;
    GenusContext ctx_;
    std::size_t pos_ = 0;
};

} // namespace

DivisorClass parse_divisor(std::string_view text, GenusContext ctx)
{
    ctx.require_basis();
    return DivisorParser(text, ctx).parse();
}

} // namespace mgnef
