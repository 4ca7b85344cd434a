#pragma once

// Divisor classes on the moduli space of stable genus-g curves, written in
// the basis {lambda, delta_0, ..., delta_{floor(g/2)}}. A class is stored as
// (a; b_0, ..., b_{floor(g/2)}) meaning  a*lambda - sum_i b_i*delta_i.

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "mgnef/rational.hpp"

namespace mgnef {

class GenusContext
{
public:
    /** Throws UnsupportedGenusError for g < 2. */
    explicit GenusContext(int g);

    int genus() const { return g_; }
    /** Largest boundary index floor(g/2). */
    int top_index() const { return g_ / 2; }
    /** Dimension d = floor(g/2) + 2 of the divisor coefficient space. */
    Index dimension() const { return g_ / 2 + 2; }

    /** lambda and the delta_i only form a basis for g >= 3. */
    bool has_basis() const { return g_ >= 3; }
    void require_basis() const;

    friend bool operator==(const GenusContext&, const GenusContext&) = default;

private:
    int g_;
};

/** min(k, g - k): the identification delta_k = delta_{g-k}. */
int reflect_index(int k, int g);

class DivisorClass
{
public:
    /** b must have floor(g/2) + 1 entries. */
    DivisorClass(GenusContext ctx, Rational a, VectorQ b);

    static DivisorClass zero(GenusContext ctx);
    /** Inverse of coordinates(). */
    static DivisorClass from_coordinates(GenusContext ctx, const VectorQ& coords);

    const GenusContext& context() const { return ctx_; }
    int genus() const { return ctx_.genus(); }

    const Rational& a() const { return a_; }
    const VectorQ& b() const { return b_; }
    const Rational& b(int i) const;

    /** Signed coefficient of delta_i in the expansion, i.e. -b_i. */
    Rational delta_coefficient(int i) const { return -b(i); }

    /** (a, b_0, ..., b_{floor(g/2)}), the ambient coordinates of the cone engine. */
    VectorQ coordinates() const;

    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& other) const;
    DivisorClass operator-(const DivisorClass& other) const;
    DivisorClass operator-() const;
    friend DivisorClass operator*(const Rational& s, const DivisorClass& d);

    friend bool operator==(const DivisorClass& x, const DivisorClass& y);

private:
    void require_same_genus(const DivisorClass& other) const;

    GenusContext ctx_;
    Rational a_;
    VectorQ b_;
};

enum class NamedDivisor
{
    Lambda,
    TwelveLambdaMinusDelta0,
    Delta,        // delta_i, index required
    Canonical,    // 13 lambda - 2 sum delta_i
    BoundarySum,  // sum delta_i
};

DivisorClass named_divisor(NamedDivisor which, GenusContext ctx, int index = 0);

inline DivisorClass lambda_class(GenusContext ctx) { return named_divisor(NamedDivisor::Lambda, ctx); }
inline DivisorClass twelve_lambda_minus_delta0(GenusContext ctx)
{
    return named_divisor(NamedDivisor::TwelveLambdaMinusDelta0, ctx);
}
inline DivisorClass delta_class(GenusContext ctx, int i) { return named_divisor(NamedDivisor::Delta, ctx, i); }
inline DivisorClass canonical_class(GenusContext ctx) { return named_divisor(NamedDivisor::Canonical, ctx); }
inline DivisorClass boundary_sum(GenusContext ctx) { return named_divisor(NamedDivisor::BoundarySum, ctx); }

using Term = std::pair<Rational, DivisorClass>;

/** Sum of coeff * class. Throws GenusMismatchError, or std::invalid_argument when empty. */
DivisorClass linear_combination(std::span<const Term> terms);
DivisorClass linear_combination(std::initializer_list<Term> terms);

/** alpha*lambda + beta*(12 lambda - delta_0) for alpha, beta >= 0. */
DivisorClass face_member(const Rational& alpha, const Rational& beta, GenusContext ctx);

/** Fully signed expansion, e.g. "13*L - 2*d0 - 2*d1"; "0" for the zero class. */
std::string to_expression(const DivisorClass& d);

/**
 * Parses sums of terms such as "13*L - 1*d0", "12L-d0", "1/2*lambda + K",
 * "Delta", "0". Atoms: L, lambda, d<k>, delta<k> (k <= g, reflected), K,
 * Delta. Throws ParseError carrying the offending character position.
 */
DivisorClass parse_divisor(std::string_view text, GenusContext ctx);

} // namespace mgnef
