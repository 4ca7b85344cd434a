#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgnef/classes.hpp"
#include "mgnef/errors.hpp"
#include "mgnef/fcurves.hpp"

namespace mgnef {

/**
 * A polyhedral cone in coefficient space. The H-representation is a list of
 * normals n with n . x >= 0, each tagged with where it came from; the
 * optional V-representation is a list of primitive generating rays.
 */
struct PolyCone
{
    Index dimension = 0;
    bool has_inequalities = false;
    std::vector<VectorQ> inequalities;
    std::vector<std::string> provenance;
    std::optional<std::vector<VectorQ>> generators;
    std::string label;

    MatrixQ inequality_matrix() const;
    /** One generator per column. */
    MatrixQ generator_matrix() const;

    std::optional<std::size_t> first_violated(const VectorQ& x) const;
    bool satisfies_inequalities(const VectorQ& x) const { return !first_violated(x); }
    /** Nonnegative combination of the generators, decided by exact phase-one simplex. */
    bool generated_contains(const VectorQ& x) const;
    /** H-rep membership when inequalities are present, else V-rep. */
    bool contains(const VectorQ& x) const;

    /** Every generator satisfies every inequality and is primitive. */
    bool invariants_hold() const;
};

PolyCone make_hrep_cone(Index dimension, std::vector<VectorQ> inequalities, std::vector<std::string> provenance,
                        std::string label);
PolyCone make_vrep_cone(Index dimension, const std::vector<VectorQ>& generators, std::string label);

/**
 * The F-nef cone: one inequality per numerically distinct F-curve, in
 * coordinates (a, b_0, ..., b_top). It contains the nef cone.
 */
PolyCone fnef_cone(int genus);

struct DdOptions
{
    Index max_dimension = 8;
};

/**
 * Extreme rays of a pointed H-rep cone by the double description method,
 * primitive and sorted lexicographically. Throws NotPointedError or
 * DimensionLimitExceededError.
 */
std::vector<VectorQ> extreme_rays(const PolyCone& cone, DdOptions options = {});

/** Rank of the inequalities of cone that vanish at x. */
Index active_rank(const PolyCone& cone, const VectorQ& x);

struct Check
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FaceCertificate
{
    int genus = 0;
    Index ambient_dimension = 0;
    Index face_dimension = 0;
    /** Spanning rays of the face; empty if the face exceeds the enumeration limit. */
    std::vector<VectorQ> generators;
    std::vector<std::size_t> active;
    std::vector<std::string> active_curves;
    Index active_rank = 0;
    /** Active curves whose functionals form a basis of the active row space. */
    std::vector<std::string> independent_curves;
    std::optional<MatrixQ> lemma_matrix;
    std::optional<Rational> lemma_determinant;
    std::vector<Check> checks;

    bool passed() const;
};

class CertificateFailure : public Error
{
public:
    CertificateFailure(FaceCertificate certificate, std::string failed_check);

    const FaceCertificate& certificate() const { return certificate_; }
    const std::string& failed_check() const { return failed_check_; }

private:
    FaceCertificate certificate_;
    std::string failed_check_;
};

/** The smallest face of cone containing x. Throws NotMemberError. */
FaceCertificate face_of(const PolyCone& cone, const VectorQ& x, DdOptions options = {});
FaceCertificate face_of(const PolyCone& cone, const DivisorClass& d, DdOptions options = {});

/** Rows 12 lambda, 12 lambda - delta_0, delta_1, ..., delta_{d-2}. */
std::vector<DivisorClass> lemma_divisors(int genus);
/** Columns C1, C2, C3(1), ..., C3(d-2). */
std::vector<FCurve> lemma_curves(int genus);
MatrixQ lemma_matrix(int genus);

/**
 * Certifies that first and second span a 2-dimensional extremal face of the
 * F-nef cone, via pairings with the lemma curves, invertibility of the lemma
 * matrix and active-set ranks. Defaults to lambda and 12 lambda - delta_0.
 * Throws CertificateFailure naming the first failed check.
 */
FaceCertificate verify_extremal_face(int genus);
FaceCertificate verify_extremal_face(int genus, const DivisorClass& first, const DivisorClass& second);

} // namespace mgnef
