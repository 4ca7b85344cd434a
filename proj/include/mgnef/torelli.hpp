#pragma once

// Picard-rank-one and rank-two models of compactifications of A_g and the
// pullbacks of their divisors along extensions of the Torelli map.
//
//   Satake   Pic = Q M,          Nef = {a M : a >= 0},               M -> lambda
//   Partial  Pic = Q M + Q D_g,  Nef = {a M - b D_g : a >= 12 b >= 0}
//   Perfect  Pic = Q M + Q D,    Nef = {a M - b D : a >= 12 b >= 0}, M -> lambda, D -> delta_0

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgnef/cone.hpp"

namespace mgnef {

enum class Compactification
{
    Satake,
    Partial,
    Perfect,
};

std::string_view compactification_name(Compactification c);
std::optional<Compactification> parse_compactification(std::string_view name);

/** a M - b D in the model's basis; b is always 0 for Satake. */
struct AbelianDivisor
{
    Compactification model;
    Rational a;
    Rational b;

    friend bool operator==(const AbelianDivisor&, const AbelianDivisor&) = default;
};

struct CompactificationModel
{
    Compactification name;
    int picard_rank;
    std::vector<std::string> basis_labels;
    /** In coordinates (a) or (a, b); carries both representations. */
    PolyCone nef_cone;

    /** Model coordinates of D: (a) or (a, b). Throws ModelMismatchError. */
    VectorQ coordinates(const AbelianDivisor& d) const;
    /** d x picard_rank matrix whose columns are the images of the basis. */
    MatrixQ pullback_matrix(GenusContext ctx) const;
};

const CompactificationModel& compactification_model(Compactification c);

/** Parses "a*M - b*D" (M may be written L). Throws ParseError or ModelMismatchError. */
AbelianDivisor parse_abelian_divisor(std::string_view text, Compactification model);
std::string to_expression(const AbelianDivisor& d);

/** Throws ModelMismatchError if d does not belong to model, UnsupportedGenusError for g < 3. */
DivisorClass pullback(const CompactificationModel& model, const AbelianDivisor& d, int genus);

/** Image of the model's nef cone, as a V-rep cone in divisor coordinates. */
PolyCone pullback_nef_cone(const CompactificationModel& model, int genus);

enum class FaceClass
{
    InteriorOfF,
    RayLambda,
    Ray12LambdaMinusDelta0,
    Origin,
    OutsideF,
};

std::string_view face_class_name(FaceClass c);

struct FaceClassification
{
    FaceClass kind = FaceClass::OutsideF;
    /** D = alpha*lambda + beta*(12 lambda - delta_0) whenever D is in the face. */
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
    /** a/b - 12 when D = a lambda - b delta_0 with b > 0. */
    std::optional<Rational> epsilon;
};

FaceClassification classify_in_face(const DivisorClass& d);

struct BpfPoint
{
    Rational m;
    Rational alpha;
    Rational beta;
};

/** m D_{alpha beta} - (K + Delta) = constant + (m alpha) * per_m_alpha + (m beta) * per_m_beta. */
struct BpfFamily
{
    DivisorClass constant;
    DivisorClass per_m_alpha;
    DivisorClass per_m_beta;
};

BpfFamily bpf_family(int genus);

struct BpfEntry
{
    BpfPoint point;
    DivisorClass divisor;
    std::vector<std::pair<FCurve, Rational>> c3_values;
    bool all_minus_one = true;
};

struct BpfReport
{
    int genus = 0;
    std::vector<BpfEntry> entries;
    /** Coefficientwise identities of the symbolic family. */
    std::vector<Check> symbolic_checks;

    std::size_t deviations() const;
    bool passed() const;
};

/** m in 1..m_max, alpha in 0..alpha_max, beta in 0..beta_max. */
std::vector<BpfPoint> bpf_grid(int m_max, int alpha_max, int beta_max);

/**
 * Forms m D_{alpha beta} - (K + Delta) at every grid point and pairs it with
 * every C3(i), expecting exactly -1. Deviations are reported, not thrown.
 */
BpfReport bpf_scan(int genus, std::span<const BpfPoint> grid);

enum class SemiampleStatus
{
    SemiAmple,
    ConditionallySemiAmple,
    NefOnly,
    Unknown,
};

std::string_view semiample_status_name(SemiampleStatus s);

struct SemiampleReport
{
    FaceClassification face;
    SemiampleStatus status = SemiampleStatus::Unknown;
    std::string statement;
    std::string source;
};

/** Catalog lookup keyed on the face classification; nothing is computed. */
SemiampleReport semiample_status(const DivisorClass& d, int genus);

} // namespace mgnef
