#include "mgnef/fcurves.hpp"

#include <algorithm>
#include <map>

#include "mgnef/errors.hpp"

namespace mgnef {

std::string_view family_name(Family f)
{
    static constexpr std::string_view names[] = {"C1", "C2", "C3", "C4", "C5", "C6"};
    return names[static_cast<int>(f)];
}

std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : {Family::C1, Family::C2, Family::C3, Family::C4, Family::C5, Family::C6})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

std::size_t index_count(Family f)
{
    switch (f)
    {
    case Family::C1:
    case Family::C2:
        return 0;
    case Family::C3:
    case Family::C4:
        return 1;
    case Family::C5:
        return 2;
    case Family::C6:
        return 4;
    }
    return 0;
}

std::string FCurve::tag() const
{
    std::string out(family_name(family));
    if (indices.empty())
        return out;
    out += '(';
    for (std::size_t k = 0; k < indices.size(); ++k)
        out += (k ? "," : "") + std::to_string(indices[k]);
    return out + ')';
}

std::strong_ordering operator<=>(const FCurve& x, const FCurve& y)
{
    if (auto c = x.family <=> y.family; c != 0)
        return c;
    if (auto c = x.indices <=> y.indices; c != 0)
        return c;
    return x.genus <=> y.genus;
}

FCurve make_fcurve(Family family, std::vector<int> indices, int genus)
{
    if (genus < 2 || (family != Family::C1 && genus < 3))
        throw UnsupportedGenusError(std::string(family_name(family)) + " is not defined for g = " +
                                    std::to_string(genus));
    if (indices.size() != index_count(family))
        throw IndexOutOfRangeError(std::string(family_name(family)) + " takes " +
                                   std::to_string(index_count(family)) + " indices");
    auto fail = [&]() -> FCurve {
        throw IndexOutOfRangeError(FCurve{family, indices, genus}.tag() + " violates the index bounds for g = " +
                                   std::to_string(genus));
    };
    const auto& ix = indices;
    switch (family)
    {
    case Family::C1:
    case Family::C2:
        break;
    case Family::C3:
        if (ix[0] < 1 || ix[0] > genus - 2)
            return fail();
        break;
    case Family::C4:
        if (ix[0] < 0 || ix[0] > genus - 2)
            return fail();
        break;
    case Family::C5:
        if (ix[0] < 1 || ix[1] < 1 || ix[0] + ix[1] > genus - 1)
            return fail();
        break;
    case Family::C6:
        if (std::any_of(ix.begin(), ix.end(), [](int v) { return v < 1; }) ||
            ix[0] + ix[1] + ix[2] + ix[3] != genus)
            return fail();
        break;
    }
    return FCurve{family, std::move(indices), genus};
}

std::vector<FCurve> enumerate_raw_fcurves(int genus)
{
    if (genus < 3)
        throw UnsupportedGenusError("F-curve enumeration needs g >= 3, got " + std::to_string(genus));
    const int g = genus;
    std::vector<FCurve> out;
    out.push_back({Family::C1, {}, g});
    out.push_back({Family::C2, {}, g});
    for (int i = 1; i <= g - 2; ++i)
        out.push_back({Family::C3, {i}, g});
    for (int i = 0; i <= g - 2; ++i)
        out.push_back({Family::C4, {i}, g});
    for (int i = 1; i <= g - 1; ++i)
        for (int j = i; i + j <= g - 1; ++j)
            out.push_back({Family::C5, {i, j}, g});
    for (int i = 1; 4 * i <= g; ++i)
        for (int j = i; i + 3 * j <= g; ++j)
            for (int k = j; i + j + 2 * k <= g; ++k)
                out.push_back({Family::C6, {i, j, k, g - i - j - k}, g});
    return out;
}

std::vector<CurveClass> fcurve_classes(int genus)
{
    // Raw enumeration is already in tag order, so the first curve seen for a
    // vector is the smallest tag.
    std::vector<CurveClass> classes;
    for (FCurve& curve : enumerate_raw_fcurves(genus))
    {
        VectorQ v = intersection_vector(curve);
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&v](const CurveClass& c) { return c.intersection_vector == v; });
        if (it == classes.end())
            classes.push_back({std::move(curve), {}, std::move(v)});
        else
            it->aliases.push_back(std::move(curve));
    }
    return classes;
}

std::vector<FCurve> enumerate_fcurves(int genus)
{
    std::vector<FCurve> out;
    for (auto& c : fcurve_classes(genus))
        out.push_back(std::move(c.representative));
    return out;
}

VectorQ pairing_functional(const FCurve& curve)
{
    const GenusContext ctx(curve.genus);
    ctx.require_basis();
    const int g = curve.genus;
    VectorQ f = VectorQ::Zero(ctx.dimension());
    // Coordinate 0 is a; coordinate 1 + k is b_k.
    auto add_b = [&](int k, const Rational& c) { f(1 + reflect_index(k, g)) += c; };
    const auto& ix = curve.indices;
    switch (curve.family)
    {
    case Family::C1:
        f(0) += Rational(1, 12);
        add_b(0, Rational(-1));
        add_b(1, Rational(1, 12));
        break;
    case Family::C2:
        add_b(0, Rational(1));
        break;
    case Family::C3:
        add_b(ix[0], Rational(1));
        break;
    case Family::C4:
        add_b(0, Rational(2));
        add_b(ix[0] + 1, Rational(-1));
        break;
    case Family::C5:
        add_b(ix[0], Rational(1));
        add_b(ix[1], Rational(1));
        add_b(ix[0] + ix[1], Rational(-1));
        break;
    case Family::C6:
        for (int k : ix)
            add_b(k, Rational(1));
        add_b(ix[0] + ix[1], Rational(-1));
        add_b(ix[0] + ix[2], Rational(-1));
        add_b(ix[0] + ix[3], Rational(-1));
        break;
    }
    return f;
}

Rational intersect(const DivisorClass& d, const FCurve& curve)
{
    if (d.genus() != curve.genus)
        throw GenusMismatchError("divisor of genus " + std::to_string(d.genus()) + " against curve " + curve.tag() +
                                 " of genus " + std::to_string(curve.genus));
    return pairing_functional(curve).dot(d.coordinates());
}

VectorQ intersection_vector(const FCurve& curve)
{
    // lambda has coordinates e_0; delta_j has b_j = -1.
    VectorQ v = -pairing_functional(curve);
    v(0) = -v(0);
    return v;
}

FnefVerdict is_fnef(const DivisorClass& d)
{
    FnefVerdict verdict;
    for (const FCurve& curve : enumerate_fcurves(d.genus()))
    {
        Rational value = intersect(d, curve);
        if (value >= 0)
            continue;
        verdict.fnef = false;
        if (!verdict.witness || value < verdict.witness_value)
        {
            verdict.witness = curve;
            verdict.witness_value = value;
        }
        verdict.violations.emplace_back(curve, std::move(value));
    }
    return verdict;
}

} // namespace mgnef
