#include "mgnef/cone.hpp"

#include <algorithm>

#include "mgnef/linalg.hpp"
#include "mgnef/simplex.hpp"

namespace mgnef {

MatrixQ PolyCone::inequality_matrix() const
{
    return stack_rows(inequalities, dimension);
}

MatrixQ PolyCone::generator_matrix() const
{
    const auto& gens = generators.value();
    return stack_rows(gens, dimension).transpose();
}

std::optional<std::size_t> PolyCone::first_violated(const VectorQ& x) const
{
    for (std::size_t i = 0; i < inequalities.size(); ++i)
        if (inequalities[i].dot(x) < 0)
            return i;
    return std::nullopt;
}

bool PolyCone::generated_contains(const VectorQ& x) const
{
    if (!generators || generators->empty())
        return x.isZero();
    return conic_combination(generator_matrix(), x).has_value();
}

bool PolyCone::contains(const VectorQ& x) const
{
    return has_inequalities ? satisfies_inequalities(x) : generated_contains(x);
}

bool PolyCone::invariants_hold() const
{
    if (inequalities.size() != provenance.size())
        return false;
    if (!generators)
        return true;
    return std::all_of(generators->begin(), generators->end(), [this](const VectorQ& r) {
        return r.size() == dimension && satisfies_inequalities(r) && primitive_ray(r) == r;
    });
}

PolyCone make_hrep_cone(Index dimension, std::vector<VectorQ> inequalities, std::vector<std::string> provenance,
                        std::string label)
{
    if (inequalities.size() != provenance.size())
        throw std::invalid_argument("every inequality needs a provenance tag");
    PolyCone cone;
    cone.dimension = dimension;
    cone.has_inequalities = true;
    cone.inequalities = std::move(inequalities);
    cone.provenance = std::move(provenance);
    cone.label = std::move(label);
    return cone;
}

PolyCone make_vrep_cone(Index dimension, const std::vector<VectorQ>& generators, std::string label)
{
    PolyCone cone;
    cone.dimension = dimension;
    std::vector<VectorQ> rays;
    for (const auto& g : generators)
    {
        if (g.size() != dimension)
            throw std::invalid_argument("generator has wrong dimension");
        VectorQ r = primitive_ray(g);
        if (!r.isZero() && std::find(rays.begin(), rays.end(), r) == rays.end())
            rays.push_back(std::move(r));
    }
    cone.generators = std::move(rays);
    cone.label = std::move(label);
    return cone;
}

PolyCone fnef_cone(int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    std::vector<VectorQ> normals;
    std::vector<std::string> tags;
    for (const FCurve& curve : enumerate_fcurves(genus))
    {
        normals.push_back(pairing_functional(curve));
        tags.push_back(curve.tag());
    }
    return make_hrep_cone(ctx.dimension(), std::move(normals), std::move(tags), "F-nef cone");
}

namespace {

std::vector<std::size_t> active_set(const PolyCone& cone, const VectorQ& x)
{
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i)
        if (cone.inequalities[i].dot(x) == 0)
            active.push_back(i);
    return active;
}

MatrixQ rows_of(const PolyCone& cone, const std::vector<std::size_t>& which)
{
    std::vector<VectorQ> rows;
    for (std::size_t i : which)
        rows.push_back(cone.inequalities[i]);
    return stack_rows(rows, cone.dimension);
}

std::string join_values(const std::vector<std::pair<FCurve, Rational>>& values)
{
    std::string out;
    for (const auto& [curve, value] : values)
        out += (out.empty() ? "" : ", ") + curve.tag() + "=" + to_string(value);
    return out;
}

} // namespace

Index active_rank(const PolyCone& cone, const VectorQ& x)
{
    return rank(rows_of(cone, active_set(cone, x)));
}

bool FaceCertificate::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CertificateFailure::CertificateFailure(FaceCertificate certificate, std::string failed_check)
    : Error("certificate check '" + failed_check + "' failed"), certificate_(std::move(certificate)),
      failed_check_(std::move(failed_check))
{
}

FaceCertificate face_of(const PolyCone& cone, const VectorQ& x, DdOptions options)
{
    if (!cone.has_inequalities)
        throw std::invalid_argument("face_of needs an H-representation");
    if (auto bad = cone.first_violated(x))
        throw NotMemberError("point violates inequality " + cone.provenance[*bad]);

    FaceCertificate cert;
    cert.ambient_dimension = cone.dimension;
    cert.active = active_set(cone, x);
    const MatrixQ active = rows_of(cone, cert.active);
    cert.active_rank = rank(active);
    cert.face_dimension = cone.dimension - cert.active_rank;
    for (std::size_t i : cert.active)
        cert.active_curves.push_back(cone.provenance[i]);
    for (Index k : independent_rows(active))
        cert.independent_curves.push_back(cone.provenance[cert.active[static_cast<std::size_t>(k)]]);

    // Spanning rays: enumerate the face inside the null space of the active rows.
    if (cert.face_dimension == 0 || cert.face_dimension > options.max_dimension)
        return cert;
    const auto kernel = kernel_basis(active);
    MatrixQ k(cone.dimension, static_cast<Index>(kernel.size()));
    for (std::size_t j = 0; j < kernel.size(); ++j)
        k.col(static_cast<Index>(j)) = kernel[j];
    std::vector<VectorQ> restricted;
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i)
    {
        if (std::binary_search(cert.active.begin(), cert.active.end(), i))
            continue;
        restricted.push_back((k.transpose() * cone.inequalities[i]).eval());
        tags.push_back(cone.provenance[i]);
    }
    const PolyCone face = make_hrep_cone(k.cols(), std::move(restricted), std::move(tags), cone.label + " face");
    for (const VectorQ& y : extreme_rays(face, options))
        cert.generators.push_back(primitive_ray((k * y).eval()));
    std::sort(cert.generators.begin(), cert.generators.end(), lex_less);
    return cert;
}

FaceCertificate face_of(const PolyCone& cone, const DivisorClass& d, DdOptions options)
{
    FaceCertificate cert = face_of(cone, d.coordinates(), options);
    cert.genus = d.genus();
    return cert;
}

std::vector<DivisorClass> lemma_divisors(int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    std::vector<DivisorClass> rows{Rational(12) * lambda_class(ctx), twelve_lambda_minus_delta0(ctx)};
    for (int i = 1; i <= ctx.dimension() - 2; ++i)
        rows.push_back(delta_class(ctx, i));
    return rows;
}

std::vector<FCurve> lemma_curves(int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    std::vector<FCurve> cols{make_fcurve(Family::C1, {}, genus), make_fcurve(Family::C2, {}, genus)};
    for (int i = 1; i <= ctx.dimension() - 2; ++i)
        cols.push_back(make_fcurve(Family::C3, {i}, genus));
    return cols;
}

MatrixQ lemma_matrix(int genus)
{
    const auto rows = lemma_divisors(genus);
    const auto cols = lemma_curves(genus);
    MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m(static_cast<Index>(i), static_cast<Index>(j)) = intersect(rows[i], cols[j]);
    return m;
}

FaceCertificate verify_extremal_face(int genus)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    return verify_extremal_face(genus, lambda_class(ctx), twelve_lambda_minus_delta0(ctx));
}

namespace {

// Pairings of d with the lemma curves must be nonzero exactly on `nonzero`.
Check support_check(std::string name, const DivisorClass& d, const std::vector<FCurve>& curves,
                    const std::vector<Family>& nonzero)
{
    Check check{std::move(name), true, {}};
    std::vector<std::pair<FCurve, Rational>> values;
    for (const FCurve& c : curves)
    {
        Rational v = intersect(d, c);
        const bool should_vanish = std::find(nonzero.begin(), nonzero.end(), c.family) == nonzero.end();
        if ((v == 0) != should_vanish)
            check.pass = false;
        values.emplace_back(c, std::move(v));
    }
    check.detail = to_expression(d) + ": " + join_values(values);
    return check;
}

} // namespace

FaceCertificate verify_extremal_face(int genus, const DivisorClass& first, const DivisorClass& second)
{
    const GenusContext ctx(genus);
    ctx.require_basis();
    if (first.genus() != genus || second.genus() != genus)
        throw GenusMismatchError("generators must have genus " + std::to_string(genus));

    const PolyCone cone = fnef_cone(genus);
    const Index d = ctx.dimension();
    const DivisorClass interior = first + second;
    const auto curves = lemma_curves(genus);

    FaceCertificate cert;
    const bool interior_member = cone.satisfies_inequalities(interior.coordinates());
    if (interior_member)
        cert = face_of(cone, interior);
    cert.genus = genus;
    cert.ambient_dimension = d;

    std::vector<Check> checks;
    checks.push_back(support_check("first_generator_isolates_c1", first, curves, {Family::C1}));
    checks.push_back(support_check("second_generator_isolates_c2", second, curves, {Family::C2}));
    checks.push_back(support_check("interior_point_supported_on_c1_c2", interior, curves, {Family::C1, Family::C2}));

    const MatrixQ lemma = lemma_matrix(genus);
    const Rational det = determinant(lemma);
    cert.lemma_matrix = lemma;
    cert.lemma_determinant = det;
    checks.push_back({"lemma_matrix_invertible", det != 0, "det = " + to_string(det)});
    checks.push_back({"lemma_matrix_unimodular", abs(det) == 1, "det = " + to_string(det)});

    const std::pair<const char*, const DivisorClass*> generators[] = {{"first_generator_fnef", &first},
                                                                      {"second_generator_fnef", &second}};
    for (const auto& [name, gen] : generators)
    {
        const FnefVerdict verdict = is_fnef(*gen);
        checks.push_back({name, verdict.fnef,
                          verdict.fnef ? to_expression(*gen) + " pairs nonnegatively with every F-curve"
                                       : "violated by " + verdict.witness->tag() + " (value " +
                                             to_string(verdict.witness_value) + ")"});
    }

    auto rank_check = [&](std::string name, const DivisorClass& x, Index expected) {
        const bool member = cone.satisfies_inequalities(x.coordinates());
        const Index r = member ? active_rank(cone, x.coordinates()) : -1;
        checks.push_back({std::move(name), member && r == expected,
                          member ? "active rank " + std::to_string(r) + ", expected " + std::to_string(expected)
                                 : "not in the F-nef cone"});
    };
    rank_check("first_generator_ray_rank", first, d - 1);
    rank_check("second_generator_ray_rank", second, d - 1);
    rank_check("face_active_rank", interior, d - 2);

    cert.checks = std::move(checks);
    for (const Check& c : cert.checks)
        if (!c.pass)
            throw CertificateFailure(std::move(cert), c.name);
    return cert;
}

} // namespace mgnef
