#include <doctest.h>

#include "mgnef/linalg.hpp"
#include "mgnef/simplex.hpp"
#include "oracles.hpp"

using namespace mgnef;

TEST_CASE("rational parsing and formatting")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-12")) == "-12");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(parse_rational("1/12") == Rational(1, 12));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rank")
{
    CHECK(rank(MatrixQ::Identity(2, 2)) == 2);
    CHECK(rank(MatrixQ::Zero(3, 4)) == 0);
    MatrixQ m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(rank(m) == 1);
}

TEST_CASE("determinant")
{
    CHECK(determinant(MatrixQ::Identity(4, 4)) == 1);
    MatrixQ diag = MatrixQ::Zero(3, 3);
    diag(0, 0) = 1;
    diag(1, 1) = 1;
    diag(2, 2) = -1;
    CHECK(determinant(diag) == -1);
    MatrixQ swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(determinant(swap) == -1);
    CHECK_THROWS_AS(determinant(MatrixQ::Zero(2, 3)), NonSquareError);
}

TEST_CASE("kernel basis")
{
    CHECK(kernel_basis(MatrixQ::Identity(3, 3)).empty());
    MatrixQ row(1, 2);
    row << 1, -1;
    const auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0](0) == k[0](1));
    CHECK(k[0](0) != 0);
}

TEST_CASE("solve")
{
    MatrixQ a(2, 2);
    a << 1, 1, 1, -1;
    VectorQ b(2);
    b << 3, 1;
    const auto x = solve(a, b);
    REQUIRE(x);
    CHECK((*x)(0) == 2);
    CHECK((*x)(1) == 1);

    MatrixQ singular(2, 2);
    singular << 1, 1, 2, 2;
    VectorQ c(2);
    c << 1, 3;
    CHECK_FALSE(solve(singular, c));
}

TEST_CASE("primitive ray keeps direction")
{
    VectorQ v(3);
    v << Rational(-1, 2), Rational(3, 4), 0;
    const VectorQ p = primitive_ray(v);
    CHECK(p(0) == -2);
    CHECK(p(1) == 3);
    CHECK(p(2) == 0);
    CHECK(primitive_ray(VectorQ::Zero(2)).isZero());
}

TEST_CASE("properties on random rational matrices")
{
    oracle::RationalGen gen(20241018);
    for (int trial = 0; trial < 60; ++trial)
    {
        const Index r = gen.integer(1, 5), c = gen.integer(1, 5);
        MatrixQ m = gen.matrix(r, c);
        // Force some rank deficiency now and then.
        if (trial % 3 == 0 && r > 1)
            m.row(r - 1) = m.row(0) * Rational(2, 3);
        CHECK(rank(m) == rank(MatrixQ(m.transpose())));
        CHECK(rank(m) + static_cast<Index>(kernel_basis(m).size()) == c);
        CHECK(rank(m) == oracle::minor_rank(m));
        for (const auto& v : kernel_basis(m))
            CHECK((m * v).isZero());
    }
    for (int trial = 0; trial < 30; ++trial)
    {
        const MatrixQ a = gen.matrix(3, 3), b = gen.matrix(3, 3);
        const MatrixQ ab = a * b;
        CHECK(determinant(ab) == determinant(a) * determinant(b));
        CHECK(determinant(a) == oracle::cofactor_determinant(a));
    }
}

TEST_CASE("determinism")
{
    oracle::RationalGen gen(7);
    const MatrixQ m = gen.matrix(4, 5);
    const auto k1 = kernel_basis(m);
    const auto k2 = kernel_basis(m);
    REQUIRE(k1.size() == k2.size());
    for (std::size_t i = 0; i < k1.size(); ++i)
        CHECK(k1[i] == k2[i]);
}

TEST_CASE("conic combination by exact simplex")
{
    MatrixQ g(2, 2);
    g << 1, 12, 0, 1;  // columns (1,0) and (12,1)
    VectorQ inside(2), outside(2), boundary(2);
    inside << 30, 2;
    outside << 11, 1;
    boundary << 24, 2;
    const auto w = conic_combination(g, inside);
    REQUIRE(w);
    CHECK(all_nonnegative(*w));
    CHECK(g * *w == inside);
    CHECK_FALSE(conic_combination(g, outside));
    CHECK(conic_combination(g, boundary));
    CHECK(conic_combination(g, VectorQ::Zero(2)));

    VectorQ neg(2);
    neg << -1, 0;
    CHECK_FALSE(conic_combination(g, neg));
}
