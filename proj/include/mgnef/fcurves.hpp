#pragma once

// The six families of F-curves (one-dimensional boundary strata) and their
// intersection numbers with divisor classes a*lambda - sum b_i*delta_i:
//
//   C1            a/12 - b_0 + b_1/12
//   C2            b_0
//   C3(i)         b_i                                  1 <= i <= g-2
//   C4(i)         2 b_0 - b_{i+1}                      0 <= i <= g-2
//   C5(i,j)       b_i + b_j - b_{i+j}                  i,j >= 1, i+j <= g-1
//   C6(i,j,k,l)   b_i + b_j + b_k + b_l
//                   - b_{i+j} - b_{i+k} - b_{i+l}      i,j,k,l >= 1, sum = g
//
// Indices above floor(g/2) are read through delta_k = delta_{g-k}.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgnef/classes.hpp"

namespace mgnef {

enum class Family
{
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/** Number of indices a curve of the family carries (0, 0, 1, 1, 2, 4). */
std::size_t index_count(Family f);

struct FCurve
{
    Family family;
    std::vector<int> indices;
    int genus;

    /** "C1", "C3(2)", "C6(1,1,1,2)". */
    std::string tag() const;

    /** Ordered by family, then indices lexicographically, then genus. */
    friend std::strong_ordering operator<=>(const FCurve& x, const FCurve& y);
    friend bool operator==(const FCurve& x, const FCurve& y) = default;
};

/**
 * Validates the index bounds of the family and returns the curve with the
 * indices in the order given. Throws IndexOutOfRangeError or
 * UnsupportedGenusError.
 */
FCurve make_fcurve(Family family, std::vector<int> indices, int genus);

/** Every admissible index tuple; C5 with i <= j, C6 with i <= j <= k <= l. */
std::vector<FCurve> enumerate_raw_fcurves(int genus);

/** A numerical class of F-curves: the smallest tag plus every tuple merged into it. */
struct CurveClass
{
    FCurve representative;
    std::vector<FCurve> aliases;
    VectorQ intersection_vector;
};

std::vector<CurveClass> fcurve_classes(int genus);

/** Numerically distinct F-curves in tag order (representatives of fcurve_classes). */
std::vector<FCurve> enumerate_fcurves(int genus);

/** Linear form f on (a, b_0, ..., b_top) with D.C = f . coordinates(D). */
VectorQ pairing_functional(const FCurve& curve);

/** D.C from the family formula. Throws GenusMismatchError. */
Rational intersect(const DivisorClass& d, const FCurve& curve);

/** (lambda.C, delta_0.C, ..., delta_top.C). */
VectorQ intersection_vector(const FCurve& curve);

struct FnefVerdict
{
    bool fnef = true;
    /** Most negative pairing; ties go to the smallest tag. */
    std::optional<FCurve> witness;
    Rational witness_value;
    std::vector<std::pair<FCurve, Rational>> violations;
};

/** D.C >= 0 for every numerically distinct F-curve. Throws UnsupportedGenusError for g < 3. */
FnefVerdict is_fnef(const DivisorClass& d);

} // namespace mgnef
