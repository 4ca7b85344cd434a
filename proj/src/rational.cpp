#include "mgnef/rational.hpp"

#include <cctype>

#include "mgnef/errors.hpp"
#include "mgnef/linalg.hpp"

namespace mgnef {

std::string to_string(const Rational& q)
{
    return q.str();
}

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos)
{
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw ParseError("expected digits", start);
    return pos;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        negative = text[pos++] == '-';
    const std::size_t num_end = scan_digits(text, pos);
    Integer num(std::string(text.substr(pos, num_end - pos)));
    Integer den(1);
    pos = num_end;
    if (pos < text.size() && text[pos] == '/')
    {
        const std::size_t den_end = scan_digits(text, pos + 1);
        den = Integer(std::string(text.substr(pos + 1, den_end - pos - 1)));
        if (den == 0)
            throw ParseError("zero denominator", pos + 1);
        pos = den_end;
    }
    if (pos != text.size())
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

VectorQ primitive_ray(const VectorQ& v)
{
    Integer den_lcm(1);
    for (Index i = 0; i < v.size(); ++i)
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(v(i)));
    Integer num_gcd(0);
    for (Index i = 0; i < v.size(); ++i)
    {
        const Integer scaled = numerator_of(v(i)) * (den_lcm / denominator_of(v(i)));
        num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
    }
    if (num_gcd == 0)
        return v;
    const Rational factor(den_lcm, num_gcd);
    VectorQ out(v.size());
    for (Index i = 0; i < v.size(); ++i)
        out(i) = v(i) * factor;
    return out;
}

bool lex_less(const VectorQ& x, const VectorQ& y)
{
    for (Index i = 0; i < std::min(x.size(), y.size()); ++i)
    {
        if (x(i) < y(i))
            return true;
        if (y(i) < x(i))
            return false;
    }
    return x.size() < y.size();
}

MatrixQ stack_rows(const std::vector<VectorQ>& rows, Index cols)
{
    MatrixQ m(static_cast<Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        m.row(static_cast<Index>(i)) = rows[i].transpose();
    return m;
}

} // namespace mgnef
