#include <doctest.h>

#include <algorithm>
#include <map>

#include "mgnef/errors.hpp"
#include "mgnef/fcurves.hpp"
#include "oracles.hpp"

using namespace mgnef;

namespace {

std::vector<std::string> tags(const std::vector<FCurve>& curves)
{
    std::vector<std::string> out;
    for (const auto& c : curves)
        out.push_back(c.tag());
    return out;
}

} // namespace

TEST_CASE("raw enumeration at g = 3")
{
    CHECK(tags(enumerate_raw_fcurves(3)) ==
          std::vector<std::string>{"C1", "C2", "C3(1)", "C4(0)", "C4(1)", "C5(1,1)"});
}

TEST_CASE("numerical dedup at g = 3")
{
    // C4(1) pairs as 2b0 - b_2 = 2b0 - b_1 = C4(0); C5(1,1) as 2b1 - b_2 = b1 = C3(1).
    const auto classes = fcurve_classes(3);
    REQUIRE(classes.size() == 4);
    CHECK(tags(enumerate_fcurves(3)) == std::vector<std::string>{"C1", "C2", "C3(1)", "C4(0)"});
    CHECK(classes[2].aliases.size() == 1);
    CHECK(classes[2].aliases[0].tag() == "C5(1,1)");
    CHECK(classes[3].aliases[0].tag() == "C4(1)");
}

TEST_CASE("C6 curves")
{
    auto c6 = [](int g) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_raw_fcurves(g))
            if (c.family == Family::C6)
                out.push_back(c.tag());
        return out;
    };
    CHECK(c6(3).empty());
    CHECK(c6(4) == std::vector<std::string>{"C6(1,1,1,1)"});
    CHECK(c6(5) == std::vector<std::string>{"C6(1,1,1,2)"});
}

TEST_CASE("enumeration agrees with the brute-force oracle")
{
    // Counts computed independently (index-bound enumeration, dedup by functional).
    const std::map<int, std::pair<std::size_t, std::size_t>> frozen = {
        {3, {6, 4}},    {4, {10, 8}},   {5, {14, 9}},   {6, {19, 14}},  {7, {25, 17}},
        {8, {32, 24}},  {10, {48, 37}}, {12, {68, 54}}, {15, {105, 85}}, {20, {193, 167}},
    };
    for (const auto& [g, counts] : frozen)
    {
        CAPTURE(g);
        CHECK(enumerate_raw_fcurves(g).size() == counts.first);
        CHECK(enumerate_fcurves(g).size() == counts.second);
        CHECK(oracle::enumerate_curves(g).size() == counts.first);
        CHECK(oracle::distinct_functionals(g).size() == counts.second);
    }
    for (int g = 3; g <= 12; ++g)
    {
        CAPTURE(g);
        const auto raw = enumerate_raw_fcurves(g);
        const auto ref = oracle::enumerate_curves(g);
        REQUIRE(raw.size() == ref.size());
        for (std::size_t i = 0; i < raw.size(); ++i)
        {
            CHECK(static_cast<int>(raw[i].family) + 1 == ref[i].family);
            CHECK(raw[i].indices == ref[i].indices);
            CHECK(pairing_functional(raw[i]) == oracle::functional(ref[i], g));
        }
    }
}

TEST_CASE("enumeration counts are monotone in g")
{
    std::size_t prev_raw = 0, prev = 0;
    for (int g = 3; g <= 20; ++g)
    {
        const std::size_t raw = enumerate_raw_fcurves(g).size();
        const std::size_t distinct = enumerate_fcurves(g).size();
        CHECK(raw >= prev_raw);
        CHECK(distinct >= prev);
        prev_raw = raw;
        prev = distinct;
    }
}

TEST_CASE("enumeration guards")
{
    CHECK_THROWS_AS(enumerate_fcurves(2), UnsupportedGenusError);
    CHECK_THROWS_AS(make_fcurve(Family::C3, {0}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C3, {4}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C4, {-1}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C5, {2, 3}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C6, {1, 1, 1, 1}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C5, {1}, 5), IndexOutOfRangeError);
    CHECK_THROWS_AS(make_fcurve(Family::C2, {}, 2), UnsupportedGenusError);
    CHECK_NOTHROW(make_fcurve(Family::C1, {}, 2));
    CHECK(make_fcurve(Family::C6, {2, 1, 1, 1}, 5).indices == std::vector<int>{2, 1, 1, 1});
}

TEST_CASE("table values")
{
    const GenusContext ctx(7);
    const auto lambda = lambda_class(ctx);
    const auto twelve = twelve_lambda_minus_delta0(ctx);
    CHECK(intersect(lambda, make_fcurve(Family::C1, {}, 7)) == Rational(1, 12));
    CHECK(intersect(twelve, make_fcurve(Family::C1, {}, 7)) == 0);
    CHECK(intersect(lambda, make_fcurve(Family::C2, {}, 7)) == 0);
    CHECK(intersect(twelve, make_fcurve(Family::C2, {}, 7)) == 1);
    for (int i = 0; i <= 5; ++i)
        CHECK(intersect(twelve, make_fcurve(Family::C4, {i}, 7)) == 2);
    for (const auto& c : enumerate_raw_fcurves(7))
        CHECK(intersect(DivisorClass::zero(ctx), c) == 0);
    CHECK_THROWS_AS(intersect(lambda, make_fcurve(Family::C1, {}, 8)), GenusMismatchError);
}

TEST_CASE("intersection vectors")
{
    const VectorQ c1 = intersection_vector(make_fcurve(Family::C1, {}, 5));
    CHECK(c1.size() == 4);
    CHECK(c1(0) == Rational(1, 12));
    CHECK(c1(1) == 1);
    CHECK(c1(2) == Rational(-1, 12));
    CHECK(intersection_vector(make_fcurve(Family::C2, {}, 5))(0) == 0);
    CHECK(intersection_vector(make_fcurve(Family::C3, {1}, 5))(2) == -1);
    // Entry j is delta_j . C, i.e. the pairing with a = 0, b_j = -1.
    for (const auto& c : enumerate_raw_fcurves(6))
    {
        const VectorQ v = intersection_vector(c);
        for (int j = 0; j <= 3; ++j)
            CHECK(v(1 + j) == intersect(delta_class(GenusContext(6), j), c));
        CHECK(v(0) == intersect(lambda_class(GenusContext(6)), c));
    }
}

TEST_CASE("bilinearity at g = 6")
{
    const GenusContext ctx(6);
    oracle::RationalGen gen(6);
    const auto curves = enumerate_raw_fcurves(6);
    for (int trial = 0; trial < 30; ++trial)
    {
        const DivisorClass d1(ctx, gen.any(), gen.vector(4)), d2(ctx, gen.any(), gen.vector(4));
        const Rational x = gen.any(), y = gen.any();
        const DivisorClass combo = x * d1 + y * d2;
        for (const auto& c : curves)
        {
            CHECK(intersect(combo, c) == x * intersect(d1, c) + y * intersect(d2, c));
            CHECK(intersect(d1, c) == oracle::pairing({static_cast<int>(c.family) + 1, c.indices}, d1.coordinates(), 6));
        }
    }
}

TEST_CASE("C5 and C6 permutation symmetry")
{
    for (int g = 3; g <= 10; ++g)
    {
        for (const auto& c : enumerate_raw_fcurves(g))
        {
            if (c.family == Family::C5)
            {
                const auto swapped = make_fcurve(Family::C5, {c.indices[1], c.indices[0]}, g);
                CHECK(intersection_vector(swapped) == intersection_vector(c));
            }
            if (c.family == Family::C6)
            {
                std::vector<int> perm = c.indices;
                std::sort(perm.begin(), perm.end());
                do
                {
                    CHECK(intersection_vector(make_fcurve(Family::C6, perm, g)) == intersection_vector(c));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
}

TEST_CASE("lambda and 12 lambda - delta_0 across families")
{
    for (int g = 3; g <= 15; ++g)
    {
        const GenusContext ctx(g);
        const auto lambda = lambda_class(ctx);
        const auto twelve = twelve_lambda_minus_delta0(ctx);
        for (const auto& c : enumerate_raw_fcurves(g))
        {
            CAPTURE(c.tag());
            CHECK(intersect(lambda, c) == (c.family == Family::C1 ? Rational(1, 12) : Rational(0)));
            const Rational expected = c.family == Family::C2 ? Rational(1) : c.family == Family::C4 ? Rational(2) : Rational(0);
            CHECK(intersect(twelve, c) == expected);
        }
    }
}

TEST_CASE("is_fnef")
{
    const GenusContext g8(8);
    CHECK(is_fnef(lambda_class(g8)).fnef);
    CHECK(is_fnef(twelve_lambda_minus_delta0(g8)).fnef);
    CHECK_FALSE(is_fnef(lambda_class(g8)).witness);

    const auto bad = is_fnef(parse_divisor("11*L - 1*d0", g8));
    CHECK_FALSE(bad.fnef);
    REQUIRE(bad.witness);
    CHECK(bad.witness->tag() == "C1");
    CHECK(bad.witness_value == Rational(-1, 12));

    // m = alpha = beta = 1 at g = 5: 0*lambda - 0*delta_0 + sum_{i>=1} delta_i.
    const GenusContext g5(5);
    const DivisorClass d = linear_combination(
        {{Rational(1), face_member(Rational(1), Rational(1), g5)}, {Rational(-1), canonical_class(g5)},
         {Rational(-1), boundary_sum(g5)}});
    const auto v = is_fnef(d);
    CHECK_FALSE(v.fnef);
    REQUIRE(v.witness);
    CHECK(v.witness->tag() == "C3(1)");
    CHECK(v.witness_value == -1);
    // C1 also fails here, at -1/12.
    CHECK(std::any_of(v.violations.begin(), v.violations.end(),
                      [](const auto& p) { return p.first.tag() == "C1" && p.second == Rational(-1, 12); }));

    // delta_0 pairs with C2 to -1.
    const auto d0 = is_fnef(delta_class(g5, 0));
    CHECK_FALSE(d0.fnef);
    CHECK(std::any_of(d0.violations.begin(), d0.violations.end(), [](const auto& p) { return p.first.tag() == "C2"; }));
    CHECK_THROWS_AS(is_fnef(DivisorClass::zero(GenusContext(2))), UnsupportedGenusError);
}
