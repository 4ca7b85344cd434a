#include "mgnef/classes.hpp"

#include <stdexcept>

#include "mgnef/errors.hpp"

namespace mgnef {

GenusContext::GenusContext(int g) : g_(g)
{
    if (g < 2)
        throw UnsupportedGenusError("genus must be at least 2, got " + std::to_string(g));
}

void GenusContext::require_basis() const
{
    if (!has_basis())
        throw UnsupportedGenusError("lambda, delta_0, ..., delta_floor(g/2) are not a basis for g = " +
                                    std::to_string(g_) + "; need g >= 3");
}

int reflect_index(int k, int g)
{
    if (k < 0 || k > g)
        throw IndexOutOfRangeError("boundary index " + std::to_string(k) + " outside 0.." + std::to_string(g));
    return std::min(k, g - k);
}

DivisorClass::DivisorClass(GenusContext ctx, Rational a, VectorQ b) : ctx_(ctx), a_(std::move(a)), b_(std::move(b))
{
    ctx_.require_basis();
    if (b_.size() != ctx_.top_index() + 1)
        throw std::invalid_argument("expected " + std::to_string(ctx_.top_index() + 1) +
                                    " boundary coefficients, got " + std::to_string(b_.size()));
}

DivisorClass DivisorClass::zero(GenusContext ctx)
{
    return {ctx, Rational(0), VectorQ::Zero(ctx.top_index() + 1)};
}

DivisorClass DivisorClass::from_coordinates(GenusContext ctx, const VectorQ& coords)
{
    if (coords.size() != ctx.dimension())
        throw std::invalid_argument("coordinate vector has wrong length");
    return {ctx, coords(0), coords.tail(coords.size() - 1)};
}

const Rational& DivisorClass::b(int i) const
{
    if (i < 0 || i > ctx_.top_index())
        throw IndexOutOfRangeError("stored boundary index " + std::to_string(i) + " outside 0.." +
                                   std::to_string(ctx_.top_index()));
    return b_(i);
}

VectorQ DivisorClass::coordinates() const
{
    VectorQ v(ctx_.dimension());
    v << a_, b_;
    return v;
}

bool DivisorClass::is_zero() const
{
    return a_ == 0 && b_.isZero();
}

void DivisorClass::require_same_genus(const DivisorClass& other) const
{
    if (!(ctx_ == other.ctx_))
        throw GenusMismatchError("cannot combine classes of genus " + std::to_string(genus()) + " and " +
                                 std::to_string(other.genus()));
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const
{
    require_same_genus(other);
    return {ctx_, a_ + other.a_, b_ + other.b_};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const
{
    require_same_genus(other);
    return {ctx_, a_ - other.a_, b_ - other.b_};
}

DivisorClass DivisorClass::operator-() const
{
    return {ctx_, -a_, -b_};
}

DivisorClass operator*(const Rational& s, const DivisorClass& d)
{
    return {d.ctx_, s * d.a_, s * d.b_};
}

bool operator==(const DivisorClass& x, const DivisorClass& y)
{
    return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_;
}

DivisorClass named_divisor(NamedDivisor which, GenusContext ctx, int index)
{
    ctx.require_basis();
    const int top = ctx.top_index();
    VectorQ b = VectorQ::Zero(top + 1);
    switch (which)
    {
    case NamedDivisor::Lambda:
        return {ctx, Rational(1), b};
    case NamedDivisor::TwelveLambdaMinusDelta0:
        b(0) = 1;
        return {ctx, Rational(12), b};
    case NamedDivisor::Delta:
        if (index < 0 || index > top)
            throw IndexOutOfRangeError("delta index " + std::to_string(index) + " outside 0.." + std::to_string(top));
        b(index) = -1;
        return {ctx, Rational(0), b};
    case NamedDivisor::Canonical:
        // 13 lambda - 2 sum delta_i, i.e. b_i = +2 in the a*lambda - sum b_i delta_i convention.
        b.setConstant(Rational(2));
        return {ctx, Rational(13), b};
    case NamedDivisor::BoundarySum:
        b.setConstant(Rational(-1));
        return {ctx, Rational(0), b};
    }
    throw std::logic_error("unknown named divisor");
}

DivisorClass linear_combination(std::span<const Term> terms)
{
    if (terms.empty())
        throw std::invalid_argument("linear_combination needs at least one term");
    DivisorClass sum = DivisorClass::zero(terms.front().second.context());
    for (const auto& [coeff, cls] : terms)
        sum = sum + coeff * cls;
    return sum;
}

DivisorClass linear_combination(std::initializer_list<Term> terms)
{
    return linear_combination(std::span<const Term>(terms.begin(), terms.size()));
}

DivisorClass face_member(const Rational& alpha, const Rational& beta, GenusContext ctx)
{
    if (alpha < 0 || beta < 0)
        throw NegativeCoefficientError("face members need alpha, beta >= 0 (got " + to_string(alpha) + ", " +
                                       to_string(beta) + ")");
    return linear_combination({{alpha, lambda_class(ctx)}, {beta, twelve_lambda_minus_delta0(ctx)}});
}

std::string to_expression(const DivisorClass& d)
{
    std::string out;
    auto append = [&out](const Rational& coeff, const std::string& atom) {
        if (coeff == 0)
            return;
        if (out.empty())
            out += (coeff < 0 ? "-" : "");
        else
            out += (coeff < 0 ? " - " : " + ");
        out += to_string(abs(coeff)) + "*" + atom;
    };
    append(d.a(), "L");
    for (int i = 0; i <= d.context().top_index(); ++i)
        append(d.delta_coefficient(i), "d" + std::to_string(i));
    return out.empty() ? "0" : out;
}

} // namespace mgnef
